//! Interval codes for definable world sets of the truncated Ignatiev models
//! `Uⁿ_α`, and the operations the decision procedure runs on them.
//!
//! A world of `Uⁿ_α` is a tuple `(α₀, …, αₙ₋₁)` with `α₀ < α` and
//! `αᵢ₊₁ ≤ ℓ(αᵢ)`. A level-`n` code partitions `[0, α)` into intervals whose
//! lower ends are zero or successors; each interval `A` carries a level-`n−1`
//! code over `ℓ(A)` describing the admissible tails.
//!
//! All operations take the level `n` and ambient bound explicitly, mirroring
//! the indexed families `Cⁿ_α`. Operations whose contracts carry size bounds
//! report them to [`audit`] when auditing is switched on for the current thread.

use std::fmt;

use thiserror::Error;

use crate::ordinal::{Interval, Ordinal, OrdinalError};

pub mod audit;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("code level does not match model level {0}")]
    LevelMismatch(usize),
    #[error("malformed code: {0}")]
    Malformed(String),
    #[error("world {world} is not in U^{level}_{bound}")]
    WorldOutsideModel {
        world: String,
        level: usize,
        bound: String,
    },
    #[error("model bound must be positive")]
    ZeroBound,
    #[error("restriction bound {new} is not in (0, {old}]")]
    BadRestriction { new: String, old: String },
    #[error("relation index {k} out of range for level {n}")]
    RelationIndex { k: usize, n: usize },
    #[error("operation requires a nonempty set")]
    EmptySet,
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

pub type Result<T> = std::result::Result<T, CodeError>;

/// An element `(α₀, …, αₙ₋₁)` of some `Uⁿ_α`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct World(Vec<Ordinal>);

impl World {
    pub fn new(coords: Vec<Ordinal>) -> Self {
        World(coords)
    }

    pub fn empty() -> Self {
        World(Vec::new())
    }

    pub fn coords(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `αᵢ₊₁ ≤ ℓ(αᵢ)` for every adjacent pair.
    pub fn satisfies_chain(&self) -> bool {
        self.0.windows(2).all(|p| p[1] <= p[0].ell())
    }

    pub fn in_model(&self, n: usize, bound: &Ordinal) -> bool {
        self.0.len() == n && self.0.first().is_none_or(|a| a < bound) && self.satisfies_chain()
    }
}

impl From<Vec<Ordinal>> for World {
    fn from(v: Vec<Ordinal>) -> Self {
        World(v)
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// `w R_k v`: `v` agrees with `w` below coordinate `k` and is smaller at `k`.
pub fn world_rel(k: usize, w: &World, v: &World) -> bool {
    let (w, v) = (w.coords(), v.coords());
    if w.len() != v.len() || k >= w.len() {
        return false;
    }
    v[k] < w[k] && w[..k] == v[..k]
}

/// One interval of a partition together with the code for its tails.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Part {
    interval: Interval,
    child_bound: Ordinal,
    child: WorldCode,
}

impl Part {
    pub fn new(interval: Interval, child: WorldCode) -> Result<Self> {
        let child_bound = interval.ell()?;
        Ok(Part {
            interval,
            child_bound,
            child,
        })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn lo(&self) -> &Ordinal {
        self.interval.lo()
    }

    pub fn hi(&self) -> &Ordinal {
        self.interval.hi()
    }

    /// `ℓ(A)`, the ambient bound of the child code.
    pub fn child_bound(&self) -> &Ordinal {
        &self.child_bound
    }

    pub fn child(&self) -> &WorldCode {
        &self.child
    }
}

/// A code in `Cⁿ_α`: a bit at level 0, an interval partition above.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WorldCode {
    Leaf(bool),
    Node(Vec<Part>),
}

impl WorldCode {
    pub fn parts(&self) -> &[Part] {
        match self {
            WorldCode::Leaf(_) => &[],
            WorldCode::Node(parts) => parts,
        }
    }

    /// Builds a level-`n ≥ 1` code from `(lo, child)` pairs over `[0, bound)`.
    pub fn from_cuts(bound: &Ordinal, cuts: Vec<(Ordinal, WorldCode)>) -> Result<Self> {
        let his: Vec<Ordinal> = cuts
            .iter()
            .skip(1)
            .map(|(lo, _)| lo.clone())
            .chain(std::iter::once(bound.clone()))
            .collect();
        let parts = cuts
            .into_iter()
            .zip(his)
            .map(|((lo, child), hi)| Part::new(Interval::new(lo, hi)?, child))
            .collect::<Result<Vec<_>>>()?;
        Ok(WorldCode::Node(parts))
    }

    fn fmt_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        match self {
            WorldCode::Leaf(b) => writeln!(f, "{:indent$}{}", "", u8::from(*b), indent = depth * 2),
            WorldCode::Node(parts) => {
                for p in parts {
                    writeln!(f, "{:indent$}{}->", "", p.interval, indent = depth * 2)?;
                    p.child.fmt_indented(f, depth + 1)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for WorldCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_indented(f, 0)
    }
}

/// Complexity measures `w` (width) and `oc` (ordinal cost) of a code.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CodeMeasures {
    pub width: u64,
    pub ord_cost: u64,
}

/// `w⁰ = oc⁰ = 1`; above, `w = max(m, max wᵢ)` and
/// `oc = max c(βᵢ) + max ocᵢ`. Neither depends on the ambient bound.
pub fn measures(c: &WorldCode) -> CodeMeasures {
    match c {
        WorldCode::Leaf(_) => CodeMeasures {
            width: 1,
            ord_cost: 1,
        },
        WorldCode::Node(parts) => {
            let mut width = parts.len() as u64;
            let (mut max_c, mut max_oc) = (0, 0);
            for p in parts {
                let m = measures(&p.child);
                width = width.max(m.width);
                max_c = max_c.max(p.lo().c_measure());
                max_oc = max_oc.max(m.ord_cost);
            }
            CodeMeasures {
                width,
                ord_cost: max_c + max_oc,
            }
        }
    }
}

/// Checks every structural invariant of `c ∈ Cⁿ_bound`.
pub fn validate(n: usize, bound: &Ordinal, c: &WorldCode) -> Result<()> {
    if bound.is_zero() {
        return Err(CodeError::ZeroBound);
    }
    match (n, c) {
        (0, WorldCode::Leaf(_)) => Ok(()),
        (0, _) | (_, WorldCode::Leaf(_)) => Err(CodeError::LevelMismatch(n)),
        (_, WorldCode::Node(parts)) => {
            let Some(first) = parts.first() else {
                return Err(CodeError::Malformed("empty partition".into()));
            };
            if !first.lo().is_zero() {
                return Err(CodeError::Malformed(format!(
                    "partition starts at {}",
                    first.lo()
                )));
            }
            for w in parts.windows(2) {
                if w[0].hi() != w[1].lo() {
                    return Err(CodeError::Malformed(format!(
                        "gap between {} and {}",
                        w[0].interval, w[1].interval
                    )));
                }
            }
            let last = parts.last().expect("nonempty");
            if last.hi() != bound {
                return Err(CodeError::Malformed(format!(
                    "partition ends at {} instead of {bound}",
                    last.hi()
                )));
            }
            for p in parts {
                if !p.lo().ell().is_zero() {
                    return Err(CodeError::Malformed(format!(
                        "interval {} starts at a limit",
                        p.interval
                    )));
                }
                if p.child_bound != p.interval.ell()? {
                    return Err(CodeError::Malformed(format!(
                        "stale child bound on {}",
                        p.interval
                    )));
                }
                validate(n - 1, &p.child_bound, &p.child)?;
            }
            Ok(())
        }
    }
}

fn check_level(n: usize, c: &WorldCode) -> Result<()> {
    match (n, c) {
        (0, WorldCode::Leaf(_)) => Ok(()),
        (1.., WorldCode::Node(parts)) if !parts.is_empty() => Ok(()),
        _ => Err(CodeError::LevelMismatch(n)),
    }
}

/// Index of the part containing `x`, assuming `x` lies in the partition.
fn locate(parts: &[Part], x: &Ordinal) -> usize {
    parts.partition_point(|p| p.lo() <= x).saturating_sub(1)
}

/// `w ∈ evⁿ_bound(c)`.
pub fn member(w: &World, c: &WorldCode, n: usize, bound: &Ordinal) -> Result<bool> {
    if !w.in_model(n, bound) {
        return Err(CodeError::WorldOutsideModel {
            world: w.to_string(),
            level: n,
            bound: bound.to_string(),
        });
    }
    member_rec(w.coords(), c, n)
}

fn member_rec(w: &[Ordinal], c: &WorldCode, n: usize) -> Result<bool> {
    check_level(n, c)?;
    match c {
        WorldCode::Leaf(b) => Ok(*b),
        WorldCode::Node(parts) => {
            let part = &parts[locate(parts, &w[0])];
            if !part.interval.contains(&w[0]) {
                return Err(CodeError::Malformed(format!(
                    "{} not covered by the partition",
                    w[0]
                )));
            }
            member_rec(&w[1..], &part.child, n - 1)
        }
    }
}

/// The code of `∅` with a single interval per level.
pub fn emp_s(n: usize, bound: &Ordinal) -> Result<WorldCode> {
    if bound.is_zero() {
        return Err(CodeError::ZeroBound);
    }
    let out = emp_s_rec(n, bound)?;
    if audit::enabled() {
        let m = measures(&out);
        audit::check("emp_s", m.width == 1 && m.ord_cost == n as u64 + 1, || {
            format!("n={n} measures={m:?}")
        });
    }
    Ok(out)
}

fn emp_s_rec(n: usize, bound: &Ordinal) -> Result<WorldCode> {
    if n == 0 {
        return Ok(WorldCode::Leaf(false));
    }
    let interval = Interval::new(Ordinal::zero(), bound.clone())?;
    let child_bound = interval.ell()?;
    let child = emp_s_rec(n - 1, &child_bound)?;
    Ok(WorldCode::Node(vec![Part {
        interval,
        child_bound,
        child,
    }]))
}

/// The code of the whole model `Uⁿ_bound`.
pub fn full_s(n: usize, bound: &Ordinal) -> Result<WorldCode> {
    cmpl(n, bound, &emp_s(n, bound)?)
}

/// Emptiness test: a level-`n` code is empty iff every child is, since each
/// `δ < ℓ(A)` is `ℓ(γ)` for some `γ ∈ A`.
pub fn is_emp(n: usize, _bound: &Ordinal, c: &WorldCode) -> Result<bool> {
    is_emp_rec(n, c)
}

fn is_emp_rec(n: usize, c: &WorldCode) -> Result<bool> {
    check_level(n, c)?;
    match c {
        WorldCode::Leaf(b) => Ok(!b),
        WorldCode::Node(parts) => {
            for p in parts {
                if !is_emp_rec(n - 1, &p.child)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Complement relative to `Uⁿ_bound`: same partition, children complemented.
pub fn cmpl(n: usize, _bound: &Ordinal, c: &WorldCode) -> Result<WorldCode> {
    cmpl_rec(n, c)
}

fn cmpl_rec(n: usize, c: &WorldCode) -> Result<WorldCode> {
    check_level(n, c)?;
    let out = match c {
        WorldCode::Leaf(b) => WorldCode::Leaf(!b),
        WorldCode::Node(parts) => WorldCode::Node(
            parts
                .iter()
                .map(|p| {
                    Ok(Part {
                        interval: p.interval.clone(),
                        child_bound: p.child_bound.clone(),
                        child: cmpl_rec(n - 1, &p.child)?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
    };
    if audit::enabled() {
        let (mi, mo) = (measures(c), measures(&out));
        audit::check("cmpl", mi == mo, || format!("n={n} in={mi:?} out={mo:?}"));
    }
    Ok(out)
}

/// Least first coordinate of a member of `evⁿ_bound(c)`, for `n ≥ 1`.
pub fn inf_first(n: usize, bound: &Ordinal, c: &WorldCode) -> Result<Ordinal> {
    if n == 0 {
        return Err(CodeError::LevelMismatch(0));
    }
    let out = inf_rec(n, c)?.ok_or(CodeError::EmptySet)?;
    if audit::enabled() {
        let oc = measures(c).ord_cost;
        audit::check("inf_first", out.c_measure() <= oc && &out < bound, || {
            format!("n={n} inf={out} oc={oc}")
        });
    }
    Ok(out)
}

fn inf_rec(n: usize, c: &WorldCode) -> Result<Option<Ordinal>> {
    check_level(n, c)?;
    for p in c.parts() {
        if n == 1 {
            if !is_emp_rec(0, &p.child)? {
                return Ok(Some(p.lo().clone()));
            }
        } else if let Some(delta) = inf_rec(n - 1, &p.child)? {
            return Ok(Some(lift_head(p.lo(), &delta)));
        }
    }
    Ok(None)
}

/// Least `γ ≥ lo` with `ℓ(γ) ≥ δ`: `lo` itself or `lo + ω^δ`.
fn lift_head(lo: &Ordinal, delta: &Ordinal) -> Ordinal {
    if delta.is_zero() {
        lo.clone()
    } else {
        lo.add(&Ordinal::omega_pow(delta.clone()))
    }
}

/// Preimage of `evⁿ_bound(c)` under `R_k`.
pub fn r_inv(n: usize, k: usize, bound: &Ordinal, c: &WorldCode) -> Result<WorldCode> {
    if k >= n {
        return Err(CodeError::RelationIndex { k, n });
    }
    r_inv_rec(n, k, bound, c)
}

fn r_inv_rec(n: usize, k: usize, bound: &Ordinal, c: &WorldCode) -> Result<WorldCode> {
    check_level(n, c)?;
    let out = if k == 0 {
        if is_emp_rec(n, c)? {
            emp_s(n, bound)?
        } else {
            let cut = inf_first(n, bound, c)?.succ();
            if &cut == bound {
                emp_s(n, bound)?
            } else {
                let lower = Interval::new(Ordinal::zero(), cut.clone())?;
                let upper = Interval::new(cut, bound.clone())?;
                let (lb, ub) = (lower.ell()?, upper.ell()?);
                let empty = emp_s(n - 1, &lb)?;
                let full = full_s(n - 1, &ub)?;
                WorldCode::Node(vec![
                    Part {
                        interval: lower,
                        child_bound: lb,
                        child: empty,
                    },
                    Part {
                        interval: upper,
                        child_bound: ub,
                        child: full,
                    },
                ])
            }
        }
    } else {
        WorldCode::Node(
            c.parts()
                .iter()
                .map(|p| {
                    Ok(Part {
                        interval: p.interval.clone(),
                        child_bound: p.child_bound.clone(),
                        child: r_inv_rec(n - 1, k - 1, &p.child_bound, &p.child)?,
                    })
                })
                .collect::<Result<_>>()?,
        )
    };
    if audit::enabled() {
        let (mi, mo) = (measures(c), measures(&out));
        audit::check(
            "r_inv",
            mo.ord_cost <= mi.ord_cost + n as u64 && mo.width <= mi.width + 1,
            || format!("n={n} k={k} in={mi:?} out={mo:?}"),
        );
    }
    Ok(out)
}

/// Restriction of `c ∈ Cⁿ_bound` to `Uⁿ_new_bound`.
pub fn rstr(n: usize, bound: &Ordinal, new_bound: &Ordinal, c: &WorldCode) -> Result<WorldCode> {
    if new_bound.is_zero() || new_bound > bound {
        return Err(CodeError::BadRestriction {
            new: new_bound.to_string(),
            old: bound.to_string(),
        });
    }
    rstr_rec(n, new_bound, c)
}

fn rstr_rec(n: usize, new_bound: &Ordinal, c: &WorldCode) -> Result<WorldCode> {
    check_level(n, c)?;
    let WorldCode::Node(parts) = c else {
        return Ok(c.clone());
    };
    let keep = parts.partition_point(|p| p.lo() < new_bound);
    let last = &parts[keep - 1];
    let out = if last.hi() == new_bound {
        WorldCode::Node(parts[..keep].to_vec())
    } else {
        let interval = Interval::new(last.lo().clone(), new_bound.clone())?;
        let child_bound = interval.ell()?;
        let child = if child_bound == last.child_bound {
            last.child.clone()
        } else {
            rstr_rec(n - 1, &child_bound, &last.child)?
        };
        let mut kept = parts[..keep - 1].to_vec();
        kept.push(Part {
            interval,
            child_bound,
            child,
        });
        WorldCode::Node(kept)
    };
    if audit::enabled() {
        let (mi, mo) = (measures(c), measures(&out));
        audit::check(
            "rstr",
            mo.ord_cost <= mi.ord_cost && mo.width <= mi.width,
            || format!("n={n} in={mi:?} out={mo:?}"),
        );
    }
    Ok(out)
}

/// Intersection over the common refinement of both partitions.
pub fn intr(n: usize, _bound: &Ordinal, c1: &WorldCode, c2: &WorldCode) -> Result<WorldCode> {
    intr_rec(n, c1, c2)
}

fn intr_rec(n: usize, c1: &WorldCode, c2: &WorldCode) -> Result<WorldCode> {
    check_level(n, c1)?;
    check_level(n, c2)?;
    let out = match (c1, c2) {
        (WorldCode::Leaf(a), WorldCode::Leaf(b)) => WorldCode::Leaf(*a && *b),
        (WorldCode::Node(p1), WorldCode::Node(p2)) => {
            let mut parts = Vec::with_capacity(p1.len() + p2.len());
            let (mut i, mut j) = (0, 0);
            let mut lo = Ordinal::zero();
            while i < p1.len() && j < p2.len() {
                let (a, b) = (&p1[i], &p2[j]);
                let hi = a.hi().min(b.hi()).clone();
                let interval = Interval::new(lo, hi.clone())?;
                let child_bound = interval.ell()?;
                let e1 = restrict_child(n - 1, a, &child_bound)?;
                let e2 = restrict_child(n - 1, b, &child_bound)?;
                let child = intr_rec(n - 1, &e1, &e2)?;
                parts.push(Part {
                    interval,
                    child_bound,
                    child,
                });
                if a.hi() == &hi {
                    i += 1;
                }
                if b.hi() == &hi {
                    j += 1;
                }
                lo = hi;
            }
            if i != p1.len() || j != p2.len() {
                return Err(CodeError::Malformed(
                    "partitions cover different ranges".into(),
                ));
            }
            WorldCode::Node(parts)
        }
        _ => unreachable!("levels checked"),
    };
    if audit::enabled() {
        let (m1, m2, mo) = (measures(c1), measures(c2), measures(&out));
        audit::check(
            "intr",
            mo.ord_cost <= m1.ord_cost + m2.ord_cost && mo.width <= m1.width + m2.width,
            || format!("n={n} in={m1:?},{m2:?} out={mo:?}"),
        );
    }
    Ok(out)
}

fn restrict_child(n: usize, part: &Part, new_bound: &Ordinal) -> Result<WorldCode> {
    if new_bound == &part.child_bound {
        Ok(part.child.clone())
    } else {
        rstr_rec(n, new_bound, &part.child)
    }
}

/// A member of `evⁿ_bound(c)` with least first coordinate, or `None` when
/// the set is empty.
pub fn witness(n: usize, _bound: &Ordinal, c: &WorldCode) -> Result<Option<World>> {
    let mut coords = Vec::with_capacity(n);
    Ok(witness_rec(n, c, &mut coords)?.then_some(World(coords)))
}

fn witness_rec(n: usize, c: &WorldCode, out: &mut Vec<Ordinal>) -> Result<bool> {
    check_level(n, c)?;
    match c {
        WorldCode::Leaf(b) => Ok(*b),
        WorldCode::Node(parts) => {
            let at = out.len();
            for p in parts {
                out.push(Ordinal::zero());
                if witness_rec(n - 1, &p.child, out)? {
                    let tail_head = out.get(at + 1).cloned().unwrap_or_else(Ordinal::zero);
                    out[at] = lift_head(p.lo(), &tail_head);
                    return Ok(true);
                }
                out.truncate(at);
            }
            Ok(false)
        }
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::oracle::exists_successor;
    use crate::sample;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn operations_are_pointwise_sound(seed in any::<u64>(), n in 1usize..=3, k in 0usize..3) {
            let k = k % n;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bound = Ordinal::omega_tower(n);
            let session = audit::Session::start();
            let c1 = sample::code(&mut rng, n, &bound, 4);
            let c2 = sample::code(&mut rng, n, &bound, 4);
            let comp = cmpl(n, &bound, &c1).unwrap();
            let both = intr(n, &bound, &c1, &c2).unwrap();
            let pre = r_inv(n, k, &bound, &c1).unwrap();
            for c in [&comp, &both, &pre] {
                prop_assert!(validate(n, &bound, c).is_ok());
            }
            let mut anchors = sample::anchors(&bound, &c1);
            anchors.extend(sample::anchors(&bound, &c2));
            for _ in 0..8 {
                let w = sample::world(&mut rng, n, &bound, &anchors);
                let m1 = member(&w, &c1, n, &bound).unwrap();
                let m2 = member(&w, &c2, n, &bound).unwrap();
                prop_assert_eq!(member(&w, &comp, n, &bound).unwrap(), !m1);
                prop_assert_eq!(member(&w, &both, n, &bound).unwrap(), m1 && m2);
                prop_assert_eq!(
                    member(&w, &pre, n, &bound).unwrap(),
                    exists_successor(&w, k, &c1, n, &bound).unwrap()
                );
            }
            let log = session.finish();
            prop_assert!(log.is_clean(), "{:?}", log.violations);
            prop_assert!(log.checks > 0);
        }

        #[test]
        fn restriction_is_pointwise_sound(seed in any::<u64>(), n in 1usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bound = Ordinal::omega_tower(n);
            let c = sample::code(&mut rng, n, &bound, 4);
            let new_bound = sample::ordinal_lt(&mut rng, &bound).succ();
            prop_assume!(new_bound <= bound);
            let cut = rstr(n, &bound, &new_bound, &c).unwrap();
            prop_assert!(validate(n, &new_bound, &cut).is_ok());
            let (m, m0) = (measures(&cut), measures(&c));
            prop_assert!(m.width <= m0.width && m.ord_cost <= m0.ord_cost);
            for _ in 0..8 {
                let w = sample::world(&mut rng, n, &new_bound, &sample::anchors(&new_bound, &cut));
                prop_assert_eq!(
                    member(&w, &cut, n, &new_bound).unwrap(),
                    member(&w, &c, n, &bound).unwrap()
                );
            }
        }

        #[test]
        fn inf_first_is_minimal(seed in any::<u64>(), n in 1usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bound = Ordinal::omega_tower(n);
            let c = sample::code(&mut rng, n, &bound, 4);
            match witness(n, &bound, &c).unwrap() {
                None => {
                    prop_assert!(is_emp(n, &bound, &c).unwrap());
                    prop_assert!(inf_first(n, &bound, &c).is_err());
                }
                Some(v) => {
                    prop_assert!(!is_emp(n, &bound, &c).unwrap());
                    prop_assert!(member(&v, &c, n, &bound).unwrap());
                    let inf = inf_first(n, &bound, &c).unwrap();
                    prop_assert_eq!(&inf, &v.coords()[0]);
                    for _ in 0..16 {
                        let w = sample::world(&mut rng, n, &bound, &sample::anchors(&bound, &c));
                        if w.coords()[0] < inf {
                            prop_assert!(!member(&w, &c, n, &bound).unwrap());
                        }
                    }
                }
            }
        }
    }
}
