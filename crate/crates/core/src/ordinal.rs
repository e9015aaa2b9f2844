//! Ordinals below ε₀ in Cantor normal form.
//!
//! An ordinal `ω^β₀ + … + ω^βₙ₋₁` (β₀ ≥ … ≥ βₙ₋₁) is stored with runs of equal
//! exponents collapsed into a single term carrying a multiplicity, so the
//! natural number `k` is one term `ω^0 · k`. The expanded exponent sequence is
//! still available through [`Ordinal::exponents`], and [`Ordinal::c_measure`]
//! counts every repetition, so `c(k) = 1 + k`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("exponents are not non-increasing at position {0}")]
    NotCanonical(usize),
    #[error("empty interval [{lo}, {hi})")]
    EmptyInterval { lo: String, hi: String },
    #[error("interval lower end {0} is a limit ordinal")]
    LimitLowerEnd(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Term {
    exp: Ordinal,
    coeff: u64,
}

/// A canonical Cantor-normal-form ordinal below ε₀.
///
/// Structural equality coincides with ordinal equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal(Arc<[Term]>);

impl Ordinal {
    fn from_terms(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].exp > w[1].exp));
        debug_assert!(terms.iter().all(|t| t.coeff > 0));
        Ordinal(terms.into())
    }

    pub fn zero() -> Self {
        Ordinal(Arc::new([]))
    }

    pub fn one() -> Self {
        Self::from_nat(1)
    }

    pub fn from_nat(k: u64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self::from_terms(vec![Term {
            exp: Self::zero(),
            coeff: k,
        }])
    }

    /// `ω^exp`.
    pub fn omega_pow(exp: Ordinal) -> Self {
        Self::from_terms(vec![Term { exp, coeff: 1 }])
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// The tower `ω₀ = 1`, `ωₙ₊₁ = ω^ωₙ`.
    pub fn omega_tower(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| Self::omega_pow(acc))
    }

    /// Builds `ω^e₀ + … + ω^eₖ₋₁` from an expanded exponent list, rejecting
    /// sequences that are not non-increasing.
    pub fn from_exponents(exps: Vec<Ordinal>) -> Result<Self, OrdinalError> {
        let mut terms: Vec<Term> = Vec::new();
        for (i, e) in exps.into_iter().enumerate() {
            match terms.last_mut() {
                Some(last) if last.exp == e => last.coeff += 1,
                Some(last) if last.exp < e => return Err(OrdinalError::NotCanonical(i)),
                _ => terms.push(Term { exp: e, coeff: 1 }),
            }
        }
        Ok(Self::from_terms(terms))
    }

    /// The expanded exponent sequence β₀ ≥ β₁ ≥ ….
    pub fn exponents(&self) -> impl Iterator<Item = &Ordinal> + '_ {
        self.0
            .iter()
            .flat_map(|t| std::iter::repeat_n(&t.exp, t.coeff as usize))
    }

    /// Number of terms in the expanded normal form.
    pub fn term_count(&self) -> u64 {
        self.0.iter().map(|t| t.coeff).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_successor(&self) -> bool {
        self.0.last().is_some_and(|t| t.exp.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn as_nat(&self) -> Option<u64> {
        match &*self.0 {
            [] => Some(0),
            [t] if t.exp.is_zero() => Some(t.coeff),
            _ => None,
        }
    }

    /// Leading exponent β₀, or `None` for zero.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.0.first().map(|t| &t.exp)
    }

    /// Ordinal comparison: a lexicographic walk over the normal forms.
    pub fn compare(&self, other: &Ordinal) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match a.exp.compare(&b.exp).then(a.coeff.cmp(&b.coeff)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }

    /// Ordinal sum `self + rhs`: the terms of `self` below the leading
    /// exponent of `rhs` are absorbed.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.0.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.0.len() + rhs.0.len());
        for t in self.0.iter() {
            match t.exp.compare(&lead.exp) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(Term {
                        exp: t.exp.clone(),
                        coeff: t.coeff + lead.coeff,
                    });
                    terms.extend(rhs.0[1..].iter().cloned());
                    return Self::from_terms(terms);
                }
                Ordering::Less => break,
            }
        }
        terms.extend(rhs.0.iter().cloned());
        Self::from_terms(terms)
    }

    /// `self + 1`.
    pub fn succ(&self) -> Ordinal {
        self.add(&Self::one())
    }

    /// End-logarithm: the last exponent of the normal form, `ℓ(0) = 0`.
    pub fn ell(&self) -> Ordinal {
        self.0
            .last()
            .map(|t| t.exp.clone())
            .unwrap_or_else(Self::zero)
    }

    /// `c(α) = 1 + c(β₀) + … + c(βₙ₋₁)`.
    pub fn c_measure(&self) -> u64 {
        1 + self
            .0
            .iter()
            .map(|t| t.coeff * t.exp.c_measure())
            .sum::<u64>()
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl From<u64> for Ordinal {
    fn from(k: u64) -> Self {
        Ordinal::from_nat(k)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for t in self.0.iter() {
            if t.exp.is_zero() {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "{}", t.coeff)?;
                break;
            }
            let head = if t.exp.as_nat() == Some(1) {
                "w".to_string()
            } else {
                let e = t.exp.to_string();
                if e.contains(' ') || e.contains('^') {
                    format!("w^({e})")
                } else {
                    format!("w^{e}")
                }
            };
            for _ in 0..t.coeff {
                if !first {
                    f.write_str(" + ")?;
                }
                f.write_str(&head)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Half-open interval `[lo, hi)` with `lo < hi`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    lo: Ordinal,
    hi: Ordinal,
}

impl Interval {
    pub fn new(lo: Ordinal, hi: Ordinal) -> Result<Self, OrdinalError> {
        if lo >= hi {
            return Err(OrdinalError::EmptyInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> &Ordinal {
        &self.lo
    }

    pub fn hi(&self) -> &Ordinal {
        &self.hi
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        &self.lo <= x && x < &self.hi
    }

    /// `ℓ(A) = sup{ℓ(γ) + 1 | γ ∈ A}`, defined when `ℓ(lo) = 0`.
    ///
    /// With `k` the first position where the normal forms of `lo` and `hi`
    /// differ, the answer is `max(βₖ, 1)` when `βₖ` is the last exponent of
    /// `hi`, and `βₖ + 1` otherwise.
    pub fn ell(&self) -> Result<Ordinal, OrdinalError> {
        if !self.lo.ell().is_zero() {
            return Err(OrdinalError::LimitLowerEnd(self.lo.to_string()));
        }
        let (a, b) = (&self.lo.0, &self.hi.0);
        let mut i = 0;
        while i < a.len() && i < b.len() && a[i] == b[i] {
            i += 1;
        }
        // lo < hi, so hi still has a term at i.
        let t = &b[i];
        let last_in_hi = i + 1 == b.len()
            && if i < a.len() && a[i].exp == t.exp {
                a[i].coeff + 1 == t.coeff
            } else {
                t.coeff == 1
            };
        Ok(if !last_in_hi {
            t.exp.succ()
        } else if t.exp.is_zero() {
            Ordinal::one()
        } else {
            t.exp.clone()
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> Ordinal {
        Ordinal::from_nat(k)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wp(e: Ordinal) -> Ordinal {
        Ordinal::omega_pow(e)
    }

    fn sum(xs: &[Ordinal]) -> Ordinal {
        xs.iter().fold(Ordinal::zero(), |acc, x| acc.add(x))
    }

    #[test]
    fn compare_examples() {
        assert_eq!(n(0).compare(&n(1)), Ordering::Less);
        assert_eq!(w().compare(&w()), Ordering::Equal);
        let w_plus_1 = w().succ();
        let w_times_2 = w().add(&w());
        assert_eq!(w_plus_1.compare(&w_times_2), Ordering::Less);
        assert!(n(1000) < w());
        assert!(wp(n(2)) > sum(&[w(), w(), w(), n(7)]));
    }

    #[test]
    fn add_examples() {
        assert_eq!(n(1).add(&w()), w());
        assert_eq!(w().add(&n(1)).to_string(), "w + 1");
        let w2 = wp(n(2));
        let lhs = w2.add(&w());
        assert_eq!(lhs.add(&w2), w2.add(&w2));
        assert_eq!(lhs.add(&w2).to_string(), "w^2 + w^2");
        assert_eq!(n(3).add(&n(4)), n(7));
    }

    #[test]
    fn ell_examples() {
        assert_eq!(n(0).ell(), n(0));
        assert_eq!(n(5).ell(), n(0));
        assert_eq!(wp(w()).add(&wp(n(2))).ell(), n(2));
    }

    #[test]
    fn c_measure_examples() {
        assert_eq!(n(0).c_measure(), 1);
        assert_eq!(n(1).c_measure(), 2);
        assert_eq!(w().c_measure(), 3);
        assert_eq!(n(3).c_measure(), 4);
    }

    #[test]
    fn towers() {
        assert_eq!(Ordinal::omega_tower(0), n(1));
        assert_eq!(Ordinal::omega_tower(1), w());
        assert_eq!(Ordinal::omega_tower(2), wp(w()));
        assert_eq!(Ordinal::omega_tower(3).to_string(), "w^(w^w)");
    }

    #[test]
    fn rendering() {
        let x = sum(&[wp(w()), wp(n(2)), n(1)]);
        assert_eq!(x.to_string(), "w^w + w^2 + 1");
        assert_eq!(n(0).to_string(), "0");
        assert_eq!(wp(w().succ()).to_string(), "w^(w + 1)");
    }

    #[test]
    fn from_exponents_rejects_increasing() {
        assert!(Ordinal::from_exponents(vec![n(0), n(1)]).is_err());
        let x = Ordinal::from_exponents(vec![n(1), n(1), n(0)]).unwrap();
        assert_eq!(x, sum(&[w(), w(), n(1)]));
        assert_eq!(x.exponents().count(), 3);
    }

    #[test]
    fn ell_interval_examples() {
        let iv = |lo: Ordinal, hi: Ordinal| Interval::new(lo, hi).unwrap().ell().unwrap();
        assert_eq!(iv(n(0), w()), n(1));
        assert_eq!(iv(n(0), w().succ()), n(2));
        assert_eq!(iv(n(0), wp(w())), w());
        assert_eq!(iv(w().succ(), w().add(&w())), n(1));
        assert_eq!(iv(n(0), n(3)), n(1));
    }

    #[test]
    fn ell_interval_rejects_limit_lower_end() {
        let a = Interval::new(w(), wp(n(2))).unwrap();
        assert!(matches!(a.ell(), Err(OrdinalError::LimitLowerEnd(_))));
        assert!(Interval::new(n(3), n(3)).is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::sample::strategies::ordinal;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn order_is_total(a in ordinal(), b in ordinal(), c in ordinal()) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b).is_eq(), a == b);
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
        }

        #[test]
        fn addition_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            if b < c {
                prop_assert!(a.add(&b) < a.add(&c));
            }
            prop_assert!(a <= a.add(&b));
            prop_assert!(a.add(&b).c_measure() <= a.c_measure() + b.c_measure());
        }

        #[test]
        fn interval_ell_covers_members(x in ordinal(), y in ordinal(), g in ordinal(), d in ordinal()) {
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            let lo = if lo.is_limit() { lo.succ() } else { lo };
            prop_assume!(lo < hi);
            let a = Interval::new(lo.clone(), hi.clone()).unwrap();
            let zeta = a.ell().unwrap();
            prop_assert!(zeta.c_measure() <= hi.c_measure());
            let member = lo.add(&g);
            if a.contains(&member) {
                prop_assert!(member.ell() < zeta);
            }
            if d < zeta {
                let realized = if d.is_zero() { lo.clone() } else { lo.add(&Ordinal::omega_pow(d.clone())) };
                prop_assert!(a.contains(&realized));
                prop_assert_eq!(realized.ell(), d);
            }
        }
    }
}
