//! Random ordinals, worlds, codes and formulas for the property suites.
//!
//! World sampling favours partition endpoints and their neighbours, where
//! interval arithmetic is most likely to go wrong.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::Formula;
use crate::ordinal::{Interval, Ordinal};
use crate::setcode::{World, WorldCode};

/// `x − 1` for successors.
pub fn predecessor(x: &Ordinal) -> Option<Ordinal> {
    if !x.is_successor() {
        return None;
    }
    let mut exps: Vec<Ordinal> = x.exponents().cloned().collect();
    exps.pop();
    Some(Ordinal::from_exponents(exps).expect("prefix of a normal form"))
}

/// A random ordinal below `ω_level` whose `c` measure is at most `budget`.
pub fn ordinal_below_tower<R: Rng>(rng: &mut R, level: usize, budget: u64) -> Ordinal {
    if level == 0 || budget <= 1 {
        return Ordinal::zero();
    }
    let mut left = budget - 1;
    let mut exps = Vec::new();
    let terms = rng.gen_range(0..=4);
    for _ in 0..terms {
        if left == 0 {
            break;
        }
        let share = rng.gen_range(1..=left);
        let e = ordinal_below_tower(rng, level - 1, share);
        left -= e.c_measure();
        exps.push(e);
    }
    exps.sort_by(|a, b| b.cmp(a));
    Ordinal::from_exponents(exps).expect("sorted")
}

/// A random ordinal strictly below `x > 0`: a proper prefix of `x`'s normal
/// form, optionally followed by `ω^e` with `e` below the next exponent.
pub fn ordinal_lt<R: Rng>(rng: &mut R, x: &Ordinal) -> Ordinal {
    let exps: Vec<&Ordinal> = x.exponents().collect();
    debug_assert!(!exps.is_empty());
    let cut = rng.gen_range(0..exps.len());
    let prefix = Ordinal::from_exponents(exps[..cut].iter().map(|e| (*e).clone()).collect())
        .expect("prefix of a normal form");
    let next = exps[cut];
    if next.is_zero() || rng.gen_bool(0.3) {
        return prefix;
    }
    let e = ordinal_lt(rng, next);
    let mut out = prefix.add(&Ordinal::omega_pow(e.clone()));
    // Occasionally stack a few more copies while staying below x.
    for _ in 0..rng.gen_range(0..3) {
        let bigger = out.add(&Ordinal::omega_pow(e.clone()));
        if &bigger < x {
            out = bigger;
        }
    }
    out
}

/// A random ordinal `≤ x`.
pub fn ordinal_le<R: Rng>(rng: &mut R, x: &Ordinal) -> Ordinal {
    if x.is_zero() || rng.gen_bool(0.3) {
        x.clone()
    } else {
        ordinal_lt(rng, x)
    }
}

/// Completes a first coordinate into a world by drawing each next coordinate
/// `≤ ℓ` of the previous one.
pub fn extend_world<R: Rng>(rng: &mut R, head: Ordinal, n: usize) -> World {
    let mut coords = Vec::with_capacity(n);
    if n > 0 {
        coords.push(head);
        while coords.len() < n {
            let next = ordinal_le(rng, &coords.last().expect("nonempty").ell());
            coords.push(next);
        }
    }
    World::new(coords)
}

/// A random world of `Uⁿ_bound`, drawing the first coordinate near one of
/// `anchors` (typically partition endpoints) about half of the time.
pub fn world<R: Rng>(rng: &mut R, n: usize, bound: &Ordinal, anchors: &[Ordinal]) -> World {
    if n == 0 {
        return World::empty();
    }
    let head = anchors
        .choose(rng)
        .filter(|_| rng.gen_bool(0.6))
        .and_then(|a| near(rng, a))
        .filter(|h| h < bound)
        .unwrap_or_else(|| ordinal_lt(rng, bound));
    let w = extend_world(rng, head, n);
    debug_assert!(w.in_model(n, bound));
    w
}

fn near<R: Rng>(rng: &mut R, a: &Ordinal) -> Option<Ordinal> {
    match rng.gen_range(0..4) {
        0 => Some(a.clone()),
        1 => predecessor(a),
        2 => Some(a.add(&Ordinal::from_nat(rng.gen_range(1..3)))),
        _ => {
            let delta = ordinal_below_tower(rng, 2, 4);
            Some(a.add(&Ordinal::omega_pow(delta)))
        }
    }
}

/// Every interval endpoint occurring anywhere in `c`, with the bound.
pub fn anchors(bound: &Ordinal, c: &WorldCode) -> Vec<Ordinal> {
    let mut out = vec![Ordinal::zero(), bound.clone()];
    for p in c.parts() {
        out.push(p.lo().clone());
        out.push(p.hi().clone());
    }
    out.sort();
    out.dedup();
    out
}

/// A random well-formed code in `Cⁿ_bound` with at most `max_parts` intervals
/// per node.
pub fn code<R: Rng>(rng: &mut R, n: usize, bound: &Ordinal, max_parts: usize) -> WorldCode {
    if n == 0 {
        return WorldCode::Leaf(rng.gen_bool(0.5));
    }
    let mut cuts = vec![Ordinal::zero()];
    for _ in 1..rng.gen_range(1..=max_parts.max(1)) {
        let cut = ordinal_lt(rng, bound).succ();
        if &cut < bound {
            cuts.push(cut);
        }
    }
    cuts.sort();
    cuts.dedup();
    let pieces = cuts
        .iter()
        .enumerate()
        .map(|(i, lo)| {
            let hi = cuts.get(i + 1).unwrap_or(bound);
            let child_bound = Interval::new(lo.clone(), hi.clone())
                .and_then(|a| a.ell())
                .expect("successor cuts");
            (lo.clone(), code(rng, n - 1, &child_bound, max_parts))
        })
        .collect();
    WorldCode::from_cuts(bound, pieces).expect("valid cuts")
}

/// A random closed formula over all connectives with diamond indices
/// `≤ max_index` and nesting depth at most `depth`.
pub fn formula<R: Rng>(rng: &mut R, max_index: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return if rng.gen_bool(0.6) {
            Formula::Top
        } else {
            Formula::Bot
        };
    }
    let sub = |rng: &mut R| formula(rng, max_index, depth - 1);
    match rng.gen_range(0..10) {
        0 | 1 => Formula::not(sub(rng)),
        2 => Formula::and(sub(rng), sub(rng)),
        3 => Formula::or(sub(rng), sub(rng)),
        4 => Formula::implies(sub(rng), sub(rng)),
        _ => Formula::diamond(rng.gen_range(0..=max_index), sub(rng)),
    }
}

/// A random formula in the `{⊥, ¬, ∧, ◇ₖ}` basis with exactly `size`
/// symbols and indices `< level`.
pub fn normalized_formula<R: Rng>(rng: &mut R, level: usize, size: usize) -> Formula {
    if size <= 1 {
        return Formula::Bot;
    }
    if size == 2 || rng.gen_bool(0.55) {
        return if level > 0 && rng.gen_bool(0.6) {
            Formula::diamond(
                rng.gen_range(0..level),
                normalized_formula(rng, level, size - 1),
            )
        } else {
            Formula::not(normalized_formula(rng, level, size - 1))
        };
    }
    let left = rng.gen_range(1..size - 1);
    Formula::and(
        normalized_formula(rng, level, left),
        normalized_formula(rng, level, size - 1 - left),
    )
}

/// A random word with `len` letters from `lo..=hi`.
pub fn word<R: Rng>(rng: &mut R, len: usize, lo: usize, hi: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}


/// Proptest strategies shared by the module test suites.
#[cfg(test)]
pub(crate) mod strategies {
    use proptest::prelude::*;

    use crate::formula::Formula;
    use crate::ordinal::Ordinal;

    /// Ordinals below `ω₃` with small normal forms.
    pub fn ordinal() -> impl Strategy<Value = Ordinal> {
        Just(Ordinal::zero()).prop_recursive(3, 24, 4, |inner| {
            prop::collection::vec(inner, 0..4).prop_map(|mut exps| {
                exps.sort_by(|a, b| b.cmp(a));
                Ordinal::from_exponents(exps).unwrap()
            })
        })
    }

    pub fn formula(max_index: usize) -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![Just(Formula::Top), Just(Formula::Bot)];
        leaf.prop_recursive(6, 40, 2, move |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
                (0..=max_index, inner).prop_map(|(k, a)| Formula::diamond(k, a)),
            ]
        })
    }
}
