//! Property suites pitting the decider and the code operations against the
//! oracles. Each suite runs with the measure audit switched on and also
//! checks the per-subformula size bounds of every formula it decides.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decider::{self, SubformulaTrace};
use crate::formula::Formula;
use crate::oracle::{self, SchemaKind, Word};
use crate::ordinal::{Interval, Ordinal};
use crate::qbf::{BoolExpr, Qbf, Quantifier};
use crate::sample;
use crate::setcode::{self, audit, WorldCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ordinal,
    Setcode,
    GlAgreement,
    Axioms,
    Fact1,
    Schemas,
    QbfRoundtrip,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Ordinal,
        Suite::Setcode,
        Suite::GlAgreement,
        Suite::Axioms,
        Suite::Fact1,
        Suite::Schemas,
        Suite::QbfRoundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ordinal => "ordinal",
            Suite::Setcode => "setcode",
            Suite::GlAgreement => "gl-agreement",
            Suite::Axioms => "axioms",
            Suite::Fact1 => "fact1",
            Suite::Schemas => "schemas",
            Suite::QbfRoundtrip => "qbf-roundtrip",
        }
    }

    fn verb(self) -> &'static str {
        match self {
            Suite::Ordinal | Suite::Setcode => "passed",
            Suite::GlAgreement => "agree",
            Suite::Axioms | Suite::Schemas => "provable",
            Suite::Fact1 => "rejected",
            Suite::QbfRoundtrip => "match",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Instance counts for each suite; the defaults are the full sizes.
#[derive(Clone, Debug)]
pub struct Sizes {
    pub ordinals: usize,
    pub intervals: usize,
    pub members_per_interval: usize,
    pub setcode_samples: usize,
    pub gl_max_size: usize,
    pub theorems: usize,
    pub theorem_max_index: usize,
    pub theorem_depth: usize,
    pub fact1_len: usize,
    pub fact1_letters: usize,
    pub schemas_per_kind: usize,
    pub schema_max_index: usize,
    pub qbf_random: usize,
    pub qbf_random_vars: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes {
            ordinals: 10_000,
            intervals: 200,
            members_per_interval: 200,
            setcode_samples: 500,
            gl_max_size: 9,
            theorems: 1000,
            theorem_max_index: 3,
            theorem_depth: 4,
            fact1_len: 5,
            fact1_letters: 3,
            schemas_per_kind: 200,
            schema_max_index: 3,
            qbf_random: 50,
            qbf_random_vars: 3,
        }
    }
}

impl Sizes {
    /// Small sizes for smoke runs.
    pub fn quick() -> Self {
        Sizes {
            ordinals: 500,
            intervals: 20,
            members_per_interval: 50,
            setcode_samples: 40,
            gl_max_size: 6,
            theorems: 60,
            fact1_len: 3,
            schemas_per_kind: 20,
            qbf_random: 3,
            ..Sizes::default()
        }
    }
}

/// Violations of one bound: how many, and the first offender.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundCheck {
    pub violations: u64,
    pub first: Option<String>,
}

impl BoundCheck {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn merge(&mut self, other: BoundCheck) {
        self.violations += other.violations;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

/// Per-subformula measure bounds over every formula a suite decided.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundTally {
    pub subformulas: u64,
    /// `w ≤ |ψ|`.
    pub width: BoundCheck,
    /// `oc ≤ n·|ψ|`.
    pub ord_cost_tight: BoundCheck,
    /// Violations of `oc ≤ n·|ψ|` other than `ψ = ⊥` or `n = 0`.
    pub ord_cost_tight_nontrivial: u64,
    /// `oc ≤ n·|ψ| + 1`.
    pub ord_cost: BoundCheck,
}

impl BoundTally {
    fn absorb(&mut self, level: usize, traces: &[SubformulaTrace]) {
        for t in traces {
            self.subformulas += 1;
            self.width
                .record(t.width_within_size(), || format!("n={level} {t}"));
            self.ord_cost
                .record(t.ord_cost_within(level), || format!("n={level} {t}"));
            let tight = t.measures.ord_cost <= level as u64 * t.size;
            self.ord_cost_tight
                .record(tight, || format!("n={level} {t}"));
            if !tight && level > 0 && t.size > 1 {
                self.ord_cost_tight_nontrivial += 1;
            }
        }
    }

    pub fn merge(&mut self, other: BoundTally) {
        self.subformulas += other.subformulas;
        self.width.merge(other.width);
        self.ord_cost_tight.merge(other.ord_cost_tight);
        self.ord_cost_tight_nontrivial += other.ord_cost_tight_nontrivial;
        self.ord_cost.merge(other.ord_cost);
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
    pub bounds: BoundTally,
    pub audit: audit::AuditLog,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    /// Passed, with clean audit and the provable size bounds respected.
    pub fn ok_with_bounds(&self) -> bool {
        self.ok()
            && self.audit.is_clean()
            && self.bounds.width.violations == 0
            && self.bounds.ord_cost.violations == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} {}",
            self.suite.name(),
            self.passed,
            self.total,
            self.suite.verb()
        )
    }
}

struct Run {
    passed: usize,
    total: usize,
    failures: Vec<String>,
    bounds: BoundTally,
}

impl Run {
    fn new() -> Self {
        Run {
            passed: 0,
            total: 0,
            failures: Vec::new(),
            bounds: BoundTally::default(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn decide(&mut self, f: &Formula) -> decider::Verdict {
        let (v, traces) = decider::decide_traced(f);
        self.bounds.absorb(v.stats.level, &traces);
        v
    }
}

pub fn run(suite: Suite, seed: u64, sizes: &Sizes) -> SuiteReport {
    let started = Instant::now();
    let session = audit::Session::start();
    let mut r = Run::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Ordinal => ordinal_suite(&mut r, &mut rng, sizes),
        Suite::Setcode => setcode_suite(&mut r, &mut rng, sizes.setcode_samples),
        Suite::GlAgreement => gl_suite(&mut r, sizes.gl_max_size),
        Suite::Axioms => axiom_suite(&mut r, seed, sizes),
        Suite::Fact1 => fact1_suite(&mut r, sizes.fact1_len, sizes.fact1_letters),
        Suite::Schemas => schema_suite(&mut r, &mut rng, sizes),
        Suite::QbfRoundtrip => qbf_suite(&mut r, qbf_cases(seed, sizes)),
    }
    SuiteReport {
        suite,
        passed: r.passed,
        total: r.total,
        failures: r.failures,
        bounds: r.bounds,
        audit: session.finish(),
        elapsed: started.elapsed(),
    }
}

fn ordinal_suite(r: &mut Run, rng: &mut ChaCha8Rng, sizes: &Sizes) {
    let w3 = Ordinal::omega_tower(3);
    for _ in 0..sizes.ordinals {
        let [a, b, c] = [(); 3].map(|_| sample::ordinal_below_tower(rng, 3, 40));
        let mut bad = Vec::new();
        if [&a, &b, &c].iter().any(|x| **x >= w3 || x.c_measure() > 40) {
            bad.push("sample out of range");
        }
        if a.cmp(&b) != b.cmp(&a).reverse() || (a.cmp(&b).is_eq() != (a == b)) {
            bad.push("antisymmetry");
        }
        if a <= b && b <= c && a > c {
            bad.push("transitivity");
        }
        if a.add(&b).add(&c) != a.add(&b.add(&c)) {
            bad.push("associativity");
        }
        if b < c && a.add(&b) >= a.add(&c) {
            bad.push("monotonicity");
        }
        if a.add(&b).c_measure() > a.c_measure() + b.c_measure() {
            bad.push("c subadditivity");
        }
        r.check(bad.is_empty(), || format!("{bad:?} at a={a}, b={b}, c={c}"));
    }
    // ω^ω·2
    let cap = Ordinal::from_exponents(vec![Ordinal::omega(), Ordinal::omega()]).expect("sorted");
    let mut made = 0;
    while made < sizes.intervals {
        let (x, y) = (sample::ordinal_lt(rng, &cap), sample::ordinal_lt(rng, &cap));
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        let lo = if lo.is_limit() { lo.succ() } else { lo };
        let Ok(a) = Interval::new(lo, hi) else {
            continue;
        };
        made += 1;
        let problem = ell_interval_problem(rng, &a, sizes.members_per_interval);
        r.check(problem.is_none(), || {
            format!("{a}: {}", problem.unwrap_or_default())
        });
    }
}

fn ell_interval_problem(rng: &mut ChaCha8Rng, a: &Interval, members: usize) -> Option<String> {
    let zeta = match a.ell() {
        Ok(z) => z,
        Err(e) => return Some(e.to_string()),
    };
    let mut seen = 0;
    let mut attempts = 0;
    while seen < members && attempts < 50 * members {
        attempts += 1;
        let g = if rng.gen_bool(0.5) {
            sample::ordinal_lt(rng, a.hi())
        } else {
            a.lo().add(&sample::ordinal_below_tower(rng, 3, 12))
        };
        if !a.contains(&g) {
            continue;
        }
        seen += 1;
        if g.ell() >= zeta {
            return Some(format!("member {g} has ell {} >= {zeta}", g.ell()));
        }
    }
    for _ in 0..20 {
        let delta = if rng.gen_bool(0.2) {
            Ordinal::zero()
        } else {
            sample::ordinal_lt(rng, &zeta)
        };
        let g = if delta.is_zero() {
            a.lo().clone()
        } else {
            a.lo().add(&Ordinal::omega_pow(delta.clone()))
        };
        if !a.contains(&g) || g.ell() != delta {
            return Some(format!("delta {delta} realized by {g} fails"));
        }
    }
    None
}

fn setcode_suite(r: &mut Run, rng: &mut ChaCha8Rng, samples: usize) {
    for n in 1..=3 {
        let bound = Ordinal::omega_tower(n);
        for _ in 0..samples {
            if let Err(e) = setcode_sample(r, rng, n, &bound) {
                r.check(false, || format!("n={n}: {e}"));
            }
        }
    }
}

fn setcode_sample(
    r: &mut Run,
    rng: &mut ChaCha8Rng,
    n: usize,
    bound: &Ordinal,
) -> Result<(), Box<dyn std::error::Error>> {
    let c1 = sample::code(rng, n, bound, 4);
    let c2 = sample::code(rng, n, bound, 4);
    let mut anchors = sample::anchors(bound, &c1);
    anchors.extend(sample::anchors(bound, &c2));
    let w = sample::world(rng, n, bound, &anchors);
    let m1 = setcode::member(&w, &c1, n, bound)?;
    let m2 = setcode::member(&w, &c2, n, bound)?;
    let ctx = |op: &str, c: &WorldCode| format!("{op} n={n} w={w}\n{c}");

    let comp = setcode::cmpl(n, bound, &c1)?;
    setcode::validate(n, bound, &comp)?;
    r.check(setcode::member(&w, &comp, n, bound)? != m1, || {
        ctx("cmpl", &c1)
    });

    let both = setcode::intr(n, bound, &c1, &c2)?;
    setcode::validate(n, bound, &both)?;
    r.check(setcode::member(&w, &both, n, bound)? == (m1 && m2), || {
        format!("{}\n{c2}", ctx("intr", &c1))
    });

    let new_bound = sample::ordinal_le(rng, bound);
    if !new_bound.is_zero() {
        let cut = setcode::rstr(n, bound, &new_bound, &c1)?;
        setcode::validate(n, &new_bound, &cut)?;
        let v = sample::world(rng, n, &new_bound, &sample::anchors(&new_bound, &cut));
        r.check(
            setcode::member(&v, &cut, n, &new_bound)? == setcode::member(&v, &c1, n, bound)?,
            || format!("{} to {new_bound} at {v}", ctx("rstr", &c1)),
        );
    }

    let k = rng.gen_range(0..n);
    let pre = setcode::r_inv(n, k, bound, &c1)?;
    setcode::validate(n, bound, &pre)?;
    r.check(
        setcode::member(&w, &pre, n, bound)? == oracle::exists_successor(&w, k, &c1, n, bound)?,
        || ctx(&format!("r_inv k={k}"), &c1),
    );

    let empty = setcode::is_emp(n, bound, &c1)?;
    let wit = setcode::witness(n, bound, &c1)?;
    let ok = match &wit {
        None => empty,
        Some(v) => {
            !empty
                && setcode::member(v, &c1, n, bound)?
                && setcode::inf_first(n, bound, &c1)? == v.coords()[0]
                && (w.coords()[0] >= v.coords()[0] || !m1)
        }
    };
    r.check(ok, || ctx("is_emp/witness/inf_first", &c1));
    Ok(())
}

fn gl_suite(r: &mut Run, max_size: usize) {
    for f in oracle::enumerate_gl_formulas(max_size) {
        let expected = oracle::gl_valid(&f).expect("only <0> is enumerated");
        let got = r.decide(&f).provable;
        r.check(got == expected, || {
            format!("{f}: decide {got}, gl {expected}")
        });
    }
}

fn axiom_suite(r: &mut Run, seed: u64, sizes: &Sizes) {
    for i in 0..sizes.theorems as u64 {
        let s = seed.wrapping_mul(1_000_003).wrapping_add(i);
        let t = oracle::theorem_gen(s, sizes.theorem_max_index, sizes.theorem_depth);
        let v = r.decide(&t);
        r.check(v.provable, || format!("seed {s}: {t}"));
    }
}

fn fact1_suite(r: &mut Run, max_len: usize, letters: usize) {
    for w in Word::enumerate(max_len, letters) {
        let f = oracle::fact1_instance(&w);
        let v = r.decide(&f);
        let refuted = v
            .witness
            .as_ref()
            .is_some_and(|x| decider::eval_at(&f, x) == Ok(false));
        r.check(!v.provable && refuted, || format!("{f}"));
    }
}

fn schema_suite(r: &mut Run, rng: &mut ChaCha8Rng, sizes: &Sizes) {
    for kind in SchemaKind::ALL {
        for _ in 0..sizes.schemas_per_kind {
            let schema = oracle::random_schema(rng, kind, sizes.schema_max_index);
            match oracle::lemma_schema_instance(&schema) {
                Ok(f) => {
                    let v = r.decide(&f);
                    r.check(v.provable, || format!("{}: {f}", kind.name()));
                }
                Err(e) => r.check(false, || format!("{}: {e}", kind.name())),
            }
        }
    }
}

/// All `2²` prefixes of two quantifiers with all 16 binary matrices.
pub fn two_variable_qbfs() -> Vec<Qbf> {
    let quants = [Quantifier::Exists, Quantifier::ForAll];
    let mut out = Vec::new();
    for q0 in quants {
        for q1 in quants {
            for table in 0..16 {
                let m = BoolExpr::from_truth_table(2, table);
                out.push(Qbf::new(vec![q0, q1], m).expect("two bound variables"));
            }
        }
    }
    out
}

/// The instances of the qbf-roundtrip suite: every two-variable QBF, then
/// the random ones drawn from `seed`.
pub fn qbf_cases(seed: u64, sizes: &Sizes) -> Vec<Qbf> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = two_variable_qbfs();
    cases.extend((0..sizes.qbf_random).map(|_| Qbf::random(&mut rng, sizes.qbf_random_vars, 4)));
    cases
}

fn qbf_suite(r: &mut Run, cases: Vec<Qbf>) {
    for q in cases {
        let truth = q.eval_brute();
        let v = r.decide(&q.reduce());
        r.check(truth == v.provable, || {
            format!("{q}: qbf {truth}, decide {}", v.provable)
        });
    }
}
