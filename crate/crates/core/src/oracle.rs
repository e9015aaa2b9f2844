//! Ground truth that does not go through the code operations: a direct
//! evaluator for the one-modality fragment, a generator of theorems from the
//! axiom system, known non-theorems and lemma schemas, and a naive successor
//! search for checking `r_inv`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formula::Formula;
use crate::ordinal::{Interval, Ordinal};
use crate::sample;
use crate::setcode::{self, CodeError, World, WorldCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("gl oracle only handles <0>, found <{0}>")]
    ModalityTooHigh(usize),
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// `◇_{n₀}…◇_{n_{k−1}}⊤`; the empty word is `⊤`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(indices: Vec<usize>) -> Self {
        Word(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn to_formula(&self) -> Formula {
        Formula::word(&self.0)
    }

    /// Every word of length `≤ max_len` over `0..letters`, shortest first.
    pub fn enumerate(max_len: usize, letters: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        let mut layer = vec![Word::default()];
        for _ in 0..max_len {
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| {
                    (0..letters).map(move |k| {
                        let mut v = w.0.clone();
                        v.push(k);
                        Word(v)
                    })
                })
                .collect();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

/// Validity of a closed formula in `◇₀` alone, by evaluation at the naturals
/// `0..=D` with `D` the modal depth.
pub fn gl_valid(f: &Formula) -> Result<bool, OracleError> {
    if let Some(k) = f.max_modality().filter(|&k| k > 0) {
        return Err(OracleError::ModalityTooHigh(k));
    }
    let worlds = f.modal_depth() + 1;
    Ok(truth_table(f, worlds).into_iter().all(|b| b))
}

fn truth_table(f: &Formula, worlds: usize) -> Vec<bool> {
    match f {
        Formula::Top => vec![true; worlds],
        Formula::Bot => vec![false; worlds],
        Formula::Not(a) => truth_table(a, worlds).into_iter().map(|b| !b).collect(),
        Formula::And(a, b) => zip(truth_table(a, worlds), truth_table(b, worlds), |x, y| {
            x && y
        }),
        Formula::Or(a, b) => zip(truth_table(a, worlds), truth_table(b, worlds), |x, y| {
            x || y
        }),
        Formula::Implies(a, b) => zip(truth_table(a, worlds), truth_table(b, worlds), |x, y| {
            !x || y
        }),
        Formula::Diamond(_, a) => {
            let inner = truth_table(a, worlds);
            let mut seen = false;
            inner
                .into_iter()
                .map(|t| {
                    let here = seen;
                    seen |= t;
                    here
                })
                .collect()
        }
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

/// Every formula over `{⊤, ⊥, ¬, ∧, ◇₀}` with at most `max_size` symbols.
pub fn enumerate_gl_formulas(max_size: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(), vec![Formula::Top, Formula::Bot]];
    for size in 2..=max_size {
        let mut here = Vec::new();
        for f in &by_size[size - 1] {
            here.push(Formula::not(f.clone()));
            here.push(Formula::diamond(0, f.clone()));
        }
        for left in 1..size - 1 {
            for a in &by_size[left] {
                for b in &by_size[size - 1 - left] {
                    here.push(Formula::and(a.clone(), b.clone()));
                }
            }
        }
        by_size.push(here);
    }
    by_size.into_iter().take(max_size + 1).flatten().collect()
}

/// The axiom families of the calculus; `Tautology` covers a fixed list of
/// propositional templates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Tautology(usize),
    Distribution,
    Consistency,
    Lob,
    Monotone,
    Reflection,
}

pub const TAUTOLOGY_TEMPLATES: usize = 10;

/// Instantiates an axiom with the given formulas and indices; `args` supplies
/// up to three schematic formulas, `n` and `k` the modal indices.
pub fn axiom_instance(ax: Axiom, args: [&Formula; 3], n: usize, k: usize) -> Formula {
    let [a, b, c] = args.map(Clone::clone);
    match ax {
        Axiom::Tautology(t) => tautology(t, a, b, c),
        Axiom::Distribution => Formula::implies(
            Formula::diamond(n, Formula::or(a.clone(), b.clone())),
            Formula::or(Formula::diamond(n, a), Formula::diamond(n, b)),
        ),
        Axiom::Consistency => Formula::not(Formula::diamond(n, Formula::not(Formula::Top))),
        Axiom::Lob => Formula::implies(
            Formula::diamond(n, a.clone()),
            Formula::diamond(
                n,
                Formula::and(a.clone(), Formula::not(Formula::diamond(n, a))),
            ),
        ),
        Axiom::Monotone => {
            debug_assert!(k <= n);
            Formula::implies(Formula::diamond(n, a.clone()), Formula::diamond(k, a))
        }
        Axiom::Reflection => {
            debug_assert!(k < n);
            let ka = Formula::diamond(k, a);
            Formula::implies(ka.clone(), Formula::boxed(n, ka))
        }
    }
}

fn tautology(t: usize, a: Formula, b: Formula, c: Formula) -> Formula {
    use Formula as F;
    match t % TAUTOLOGY_TEMPLATES {
        0 => F::implies(a.clone(), a),
        1 => F::or(a.clone(), F::not(a)),
        2 => F::implies(F::and(a.clone(), b), a),
        3 => F::implies(a.clone(), F::implies(b, a)),
        4 => F::implies(
            F::implies(a.clone(), F::implies(b.clone(), c.clone())),
            F::implies(F::implies(a.clone(), b), F::implies(a, c)),
        ),
        5 => F::implies(F::not(F::not(a.clone())), a),
        6 => F::implies(
            F::implies(a.clone(), b.clone()),
            F::implies(F::not(b), F::not(a)),
        ),
        7 => F::implies(a.clone(), F::or(a, b)),
        8 => F::implies(
            F::and(F::implies(a.clone(), b.clone()), F::implies(b, c.clone())),
            F::implies(a, c),
        ),
        _ => F::implies(F::and(a.clone(), b.clone()), F::and(b, a)),
    }
}

struct TheoremGen {
    rng: ChaCha8Rng,
    max_index: usize,
}

impl TheoremGen {
    fn small(&mut self) -> Formula {
        sample::formula(&mut self.rng, self.max_index, 2)
    }

    fn index(&mut self) -> usize {
        self.rng.gen_range(0..=self.max_index)
    }

    fn axiom(&mut self) -> Formula {
        let (a, b, c) = (self.small(), self.small(), self.small());
        let n = self.index();
        let pick = self.rng.gen_range(0..6);
        let ax = match pick {
            0 => Axiom::Tautology(self.rng.gen_range(0..TAUTOLOGY_TEMPLATES)),
            1 => Axiom::Distribution,
            2 => Axiom::Consistency,
            3 => Axiom::Lob,
            4 => Axiom::Monotone,
            _ if self.max_index > 0 => Axiom::Reflection,
            _ => Axiom::Lob,
        };
        let (n, k) = match ax {
            Axiom::Monotone => (n, self.rng.gen_range(0..=n)),
            Axiom::Reflection => {
                let n = self.rng.gen_range(1..=self.max_index);
                (n, self.rng.gen_range(0..n))
            }
            _ => (n, 0),
        };
        axiom_instance(ax, [&a, &b, &c], n, k)
    }

    /// A theorem `D → Z` whose antecedent is `consequent`, when one of the
    /// modal axioms has that shape.
    fn continuation(&mut self, consequent: &Formula) -> Option<Formula> {
        let Formula::Diamond(n, a) = consequent else {
            return None;
        };
        let (n, a) = (*n, a.as_ref());
        let mut options = vec![
            axiom_instance(Axiom::Lob, [a, a, a], n, 0),
            axiom_instance(Axiom::Monotone, [a, a, a], n, self.rng.gen_range(0..=n)),
        ];
        if n < self.max_index {
            let hi = self.rng.gen_range(n + 1..=self.max_index);
            options.push(axiom_instance(Axiom::Reflection, [a, a, a], hi, n));
        }
        options.choose(&mut self.rng).cloned()
    }

    fn step(&mut self, t: Formula) -> Formula {
        match self.rng.gen_range(0..5) {
            // A→B ⊢ ◇A→◇B; a non-implication T is first weakened to ⊤→T.
            0 => {
                let n = self.index();
                match t {
                    Formula::Implies(a, b) => {
                        Formula::implies(Formula::diamond(n, *a), Formula::diamond(n, *b))
                    }
                    other => Formula::implies(
                        Formula::diamond(n, Formula::Top),
                        Formula::diamond(n, other),
                    ),
                }
            }
            1 => Formula::and(t, self.axiom()),
            // X→Y and Y→Z give X→Z through the syllogism tautology.
            2 => match t {
                Formula::Implies(x, y) => match self.continuation(&y) {
                    Some(Formula::Implies(_, z)) => Formula::Implies(x, z),
                    _ => Formula::Implies(x, y),
                },
                other => self.weaken(other),
            },
            3 => match t {
                Formula::And(a, b) => {
                    if self.rng.gen_bool(0.5) {
                        *a
                    } else {
                        *b
                    }
                }
                other => self.weaken(other),
            },
            _ => self.weaken(t),
        }
    }

    fn weaken(&mut self, t: Formula) -> Formula {
        let x = self.small();
        if self.rng.gen_bool(0.5) {
            Formula::implies(x, t)
        } else {
            Formula::or(t, x)
        }
    }
}

/// A closed formula provable by construction: an axiom instance followed by
/// up to `depth` rule applications (modus ponens against a tautology or a
/// matching axiom, the `◇`-monotonicity rule, conjunction introduction).
pub fn theorem_gen(seed: u64, max_index: usize, depth: usize) -> Formula {
    let mut g = TheoremGen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        max_index,
    };
    let mut t = g.axiom();
    let steps = g.rng.gen_range(0..=depth);
    for _ in 0..steps {
        t = g.step(t);
    }
    t
}

/// `α → ◇₀α`, never provable.
pub fn fact1_instance(w: &Word) -> Formula {
    let a = w.to_formula();
    Formula::implies(a.clone(), Formula::diamond(0, a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Schema {
    /// `◇_{s₂}(ξ₁ ∧ ◇_{s₁}ξ₂) ↔ ◇_{s₂}ξ₁ ∧ ◇_{s₁}ξ₂`, `s₁ < s₂`.
    L1a {
        s1: usize,
        s2: usize,
        xi1: Formula,
        xi2: Formula,
    },
    /// `◇_{s₂}(ξ₁ ∧ ¬◇_{s₁}ξ₂) ↔ ◇_{s₂}ξ₁ ∧ ¬◇_{s₁}ξ₂`, `s₁ < s₂`.
    L1b {
        s1: usize,
        s2: usize,
        xi1: Formula,
        xi2: Formula,
    },
    /// `◇_s(α ∧ ¬β) ↔ ◇_sα` for words `α, β` without indices below `s` and
    /// `α → β` unprovable. Accepted when `β` leads with an index `t` above
    /// every index of `α`.
    L2 { s: usize, alpha: Word, beta: Word },
    /// `◇_sα ↔ ◇_s⊤` for a word `α` with all indices below `s`.
    L3 { s: usize, alpha: Word },
}

impl Schema {
    fn check(&self) -> Result<(), OracleError> {
        let fail = |m: String| Err(OracleError::SideCondition(m));
        match self {
            Schema::L1a { s1, s2, .. } | Schema::L1b { s1, s2, .. } if s1 >= s2 => {
                fail(format!("need s1 < s2, got {s1} and {s2}"))
            }
            Schema::L1a { .. } | Schema::L1b { .. } => Ok(()),
            Schema::L3 { s, alpha } => match alpha.0.iter().find(|&&i| i >= *s) {
                Some(i) => fail(format!("index {i} of alpha is not below {s}")),
                None => Ok(()),
            },
            Schema::L2 { s, alpha, beta } => {
                if let Some(i) = alpha.0.iter().chain(&beta.0).find(|&&i| i < *s) {
                    return fail(format!("index {i} is below {s}"));
                }
                let Some(&t) = beta.0.first() else {
                    return fail("beta must be nonempty".into());
                };
                match alpha.0.iter().find(|&&i| i >= t) {
                    Some(i) => fail(format!("alpha index {i} is not below beta's head {t}")),
                    None => Ok(()),
                }
            }
        }
    }
}

/// The formula asserted by a lemma schema.
pub fn lemma_schema_instance(schema: &Schema) -> Result<Formula, OracleError> {
    schema.check()?;
    use Formula as F;
    Ok(match schema {
        Schema::L1a { s1, s2, xi1, xi2 } => F::iff(
            F::diamond(*s2, F::and(xi1.clone(), F::diamond(*s1, xi2.clone()))),
            F::and(F::diamond(*s2, xi1.clone()), F::diamond(*s1, xi2.clone())),
        ),
        Schema::L1b { s1, s2, xi1, xi2 } => F::iff(
            F::diamond(
                *s2,
                F::and(xi1.clone(), F::not(F::diamond(*s1, xi2.clone()))),
            ),
            F::and(
                F::diamond(*s2, xi1.clone()),
                F::not(F::diamond(*s1, xi2.clone())),
            ),
        ),
        Schema::L2 { s, alpha, beta } => l2_formula(*s, alpha, beta),
        Schema::L3 { s, alpha } => {
            F::iff(F::diamond(*s, alpha.to_formula()), F::diamond(*s, F::Top))
        }
    })
}

fn l2_formula(s: usize, alpha: &Word, beta: &Word) -> Formula {
    let a = alpha.to_formula();
    Formula::iff(
        Formula::diamond(s, Formula::and(a.clone(), Formula::not(beta.to_formula()))),
        Formula::diamond(s, a),
    )
}

/// An `L2` instance for arbitrary words, with the unprovability of
/// `α → β` settled by the decider. Not independent of it.
pub fn lemma2_via_decider(s: usize, alpha: &Word, beta: &Word) -> Result<Formula, OracleError> {
    if let Some(i) = alpha.0.iter().chain(&beta.0).find(|&&i| i < s) {
        return Err(OracleError::SideCondition(format!(
            "index {i} is below {s}"
        )));
    }
    let imp = Formula::implies(alpha.to_formula(), beta.to_formula());
    if crate::decider::decide(&imp).provable {
        return Err(OracleError::SideCondition(format!("{imp} is provable")));
    }
    Ok(l2_formula(s, alpha, beta))
}

/// Which schema [`random_schema`] draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemaKind {
    L1a,
    L1b,
    L2,
    L3,
}

impl SchemaKind {
    pub const ALL: [SchemaKind; 4] = [
        SchemaKind::L1a,
        SchemaKind::L1b,
        SchemaKind::L2,
        SchemaKind::L3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchemaKind::L1a => "L1a",
            SchemaKind::L1b => "L1b",
            SchemaKind::L2 => "L2",
            SchemaKind::L3 => "L3",
        }
    }
}

/// Random parameters satisfying the side conditions of `kind`, with indices
/// at most `max_index` (which must be at least 1).
pub fn random_schema<R: Rng>(rng: &mut R, kind: SchemaKind, max_index: usize) -> Schema {
    let max_index = max_index.max(1);
    match kind {
        SchemaKind::L1a | SchemaKind::L1b => {
            let s2 = rng.gen_range(1..=max_index);
            let s1 = rng.gen_range(0..s2);
            let xi1 = sample::formula(rng, max_index, 2);
            let xi2 = sample::formula(rng, max_index, 2);
            if kind == SchemaKind::L1a {
                Schema::L1a { s1, s2, xi1, xi2 }
            } else {
                Schema::L1b { s1, s2, xi1, xi2 }
            }
        }
        SchemaKind::L2 => {
            let s = rng.gen_range(0..max_index);
            let t = rng.gen_range(s + 1..=max_index);
            let len = rng.gen_range(0..4);
            let alpha = Word(sample::word(rng, len, s, t - 1));
            let mut beta = vec![t];
            let tail_len = rng.gen_range(0..3);
            beta.extend(sample::word(rng, tail_len, s, max_index));
            Schema::L2 {
                s,
                alpha,
                beta: Word(beta),
            }
        }
        SchemaKind::L3 => {
            let s = rng.gen_range(1..=max_index);
            let len = rng.gen_range(0..5);
            Schema::L3 {
                s,
                alpha: Word(sample::word(rng, len, 0, s - 1)),
            }
        }
    }
}

/// Whether some member `v` of `c` satisfies `w R_k v`, found by scanning
/// intervals rather than building the preimage code.
pub fn exists_successor(
    w: &World,
    k: usize,
    c: &WorldCode,
    n: usize,
    bound: &Ordinal,
) -> Result<bool, OracleError> {
    if k >= n {
        return Err(CodeError::RelationIndex { k, n }.into());
    }
    if !w.in_model(n, bound) {
        return Err(CodeError::WorldOutsideModel {
            world: w.to_string(),
            level: n,
            bound: bound.to_string(),
        }
        .into());
    }
    successor_rec(w.coords(), k, c, n, bound)
}

fn successor_rec(
    w: &[Ordinal],
    k: usize,
    c: &WorldCode,
    n: usize,
    bound: &Ordinal,
) -> Result<bool, OracleError> {
    let WorldCode::Node(parts) = c else {
        return Err(CodeError::LevelMismatch(n).into());
    };
    let head = &w[0];
    if k > 0 {
        let part = parts
            .iter()
            .find(|p| p.interval().contains(head))
            .ok_or_else(|| CodeError::Malformed(format!("{head} not covered")))?;
        return successor_rec(&w[1..], k - 1, part.child(), n - 1, part.child_bound());
    }
    for p in parts {
        if p.lo() >= head {
            break;
        }
        let hi = if p.hi() <= head {
            p.hi().clone()
        } else {
            head.clone()
        };
        let truncated = setcode::rstr(n, bound, &hi, c)?;
        // Within [lo, hi) the truncated code keeps this part's tails.
        let piece = truncated
            .parts()
            .iter()
            .find(|q| q.lo() == p.lo())
            .ok_or_else(|| CodeError::Malformed("restriction lost a cut".into()))?;
        let sub = Interval::new(p.lo().clone(), hi)
            .map_err(CodeError::from)?
            .ell()
            .map_err(CodeError::from)?;
        debug_assert_eq!(&sub, piece.child_bound());
        if !setcode::is_emp(n - 1, &sub, piece.child())? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decider::decide;
    use crate::formula::parse;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn gl_oracle_examples() {
        assert_eq!(gl_valid(&p("T")), Ok(true));
        assert_eq!(gl_valid(&p("~<0>F")), Ok(true));
        assert_eq!(gl_valid(&p("<0>T -> <0><0>T")), Ok(false));
        assert_eq!(gl_valid(&p("<1>T")), Err(OracleError::ModalityTooHigh(1)));
        // Löb's axiom, closed instance.
        assert_eq!(gl_valid(&p("<0>T -> <0>(T & ~<0>T)")), Ok(true));
    }

    #[test]
    fn gl_enumeration_counts() {
        let all = enumerate_gl_formulas(3);
        // size 1: 2; size 2: 4; size 3: 8 unary + 4 conjunctions
        assert_eq!(all.len(), 2 + 4 + 12);
        assert!(all.iter().all(|f| f.size() <= 3));
    }

    #[test]
    fn axiom_examples() {
        let top = Formula::Top;
        let d0 = p("<0>T");
        assert_eq!(
            axiom_instance(Axiom::Consistency, [&top, &top, &top], 1, 0),
            p("~<1>~T")
        );
        assert_eq!(
            axiom_instance(Axiom::Monotone, [&d0, &top, &top], 2, 0),
            p("<2><0>T -> <0><0>T")
        );
        assert_eq!(
            axiom_instance(Axiom::Reflection, [&top, &top, &top], 1, 0),
            p("<0>T -> ~<1>~<0>T")
        );
    }

    #[test]
    fn generated_theorems_are_closed_and_bounded() {
        for seed in 0..50 {
            let t = theorem_gen(seed, 3, 4);
            assert!(t.max_modality().is_none_or(|k| k <= 3), "{t}");
            assert_eq!(t, theorem_gen(seed, 3, 4));
        }
    }

    #[test]
    fn generated_gl_theorems_pass_the_gl_oracle() {
        for seed in 0..300 {
            let t = theorem_gen(seed, 0, 4);
            assert_eq!(gl_valid(&t), Ok(true), "seed {seed}: {t}");
        }
    }

    #[test]
    fn word_non_theorem_examples() {
        assert_eq!(fact1_instance(&Word(vec![])), p("T -> <0>T"));
        assert_eq!(fact1_instance(&Word(vec![0])), p("<0>T -> <0><0>T"));
        assert_eq!(
            fact1_instance(&Word(vec![2, 0])),
            p("<2><0>T -> <0><2><0>T")
        );
        assert_eq!(Word::enumerate(5, 3).len(), 364);
    }

    #[test]
    fn schema_examples() {
        let top = Formula::Top;
        assert_eq!(
            lemma_schema_instance(&Schema::L1a {
                s1: 0,
                s2: 1,
                xi1: top.clone(),
                xi2: top.clone()
            }),
            Ok(p("<1>(T & <0>T) <-> (<1>T & <0>T)"))
        );
        assert_eq!(
            lemma_schema_instance(&Schema::L3 {
                s: 1,
                alpha: Word(vec![0])
            }),
            Ok(p("<1><0>T <-> <1>T"))
        );
        assert_eq!(
            lemma_schema_instance(&Schema::L1b {
                s1: 0,
                s2: 2,
                xi1: top.clone(),
                xi2: p("<0>T")
            }),
            Ok(p("<2>(T & ~<0><0>T) <-> (<2>T & ~<0><0>T)"))
        );
    }

    #[test]
    fn schema_side_conditions() {
        let bad = [
            Schema::L1a {
                s1: 1,
                s2: 1,
                xi1: Formula::Top,
                xi2: Formula::Top,
            },
            Schema::L3 {
                s: 1,
                alpha: Word(vec![0, 1]),
            },
            Schema::L2 {
                s: 1,
                alpha: Word(vec![2]),
                beta: Word(vec![2]),
            },
            Schema::L2 {
                s: 1,
                alpha: Word(vec![]),
                beta: Word(vec![]),
            },
            Schema::L2 {
                s: 1,
                alpha: Word(vec![0]),
                beta: Word(vec![2]),
            },
        ];
        for s in bad {
            assert!(
                matches!(
                    lemma_schema_instance(&s),
                    Err(OracleError::SideCondition(_))
                ),
                "{s:?}"
            );
        }
        assert!(lemma2_via_decider(0, &Word(vec![0]), &Word(vec![0])).is_err());
        let f = lemma2_via_decider(0, &Word(vec![0]), &Word(vec![1])).unwrap();
        assert!(decide(&f).provable);
    }

    #[test]
    fn successor_examples() {
        let bound = Ordinal::omega();
        let full = setcode::full_s(1, &bound).unwrap();
        let empty = setcode::emp_s(1, &bound).unwrap();
        let at = |x| World::new(vec![Ordinal::from_nat(x)]);
        assert_eq!(exists_successor(&at(0), 0, &full, 1, &bound), Ok(false));
        assert_eq!(exists_successor(&at(5), 0, &full, 1, &bound), Ok(true));
        assert_eq!(exists_successor(&at(5), 0, &empty, 1, &bound), Ok(false));
        assert!(exists_successor(&at(5), 1, &full, 1, &bound).is_err());
    }
}
