//! Timing families for checking how decision time scales with formula size.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decider;
use crate::formula::Formula;
use crate::qbf::Qbf;
use crate::sample;

pub const CSV_HEADER: &str = "family,size,n_modal,millis,max_w,max_oc";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `◇₀ᵐ⊤ → ◇₀ᵐ⊤`.
    Words,
    /// Random formulas over `{⊥, ¬, ∧, ◇₀, ◇₁}` of exactly the given size.
    Random,
    /// Reductions of random QBFs with the given number of variables.
    Qbf,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Words => "words",
            Family::Random => "random",
            Family::Qbf => "qbf",
        }
    }

    pub fn instance(self, size: usize, seed: u64) -> Formula {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (size as u64).wrapping_mul(0x9E37_79B9));
        match self {
            Family::Words => {
                let w = Formula::word(&vec![0; size]);
                Formula::implies(w.clone(), w)
            }
            Family::Random => sample::normalized_formula(&mut rng, 2, size.max(1)),
            Family::Qbf => Qbf::random(&mut rng, size, 4).reduce(),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Family::Words, Family::Random, Family::Qbf]
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family '{s}' (words, random, qbf)"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub family: Family,
    pub size: usize,
    pub n_modal: usize,
    pub millis: f64,
    pub max_w: u64,
    pub max_oc: u64,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{:.3},{},{}",
            self.family.name(),
            self.size,
            self.n_modal,
            self.millis,
            self.max_w,
            self.max_oc
        )
    }
}

pub fn measure(family: Family, size: usize, seed: u64) -> Row {
    let f = family.instance(size, seed);
    let v = decider::decide(&f);
    Row {
        family,
        size,
        n_modal: v.stats.level,
        millis: v.stats.elapsed.as_secs_f64() * 1e3,
        max_w: v.stats.max_width,
        max_oc: v.stats.max_ord_cost,
    }
}

pub fn run(family: Family, sizes: &[usize], seed: u64) -> Vec<Row> {
    sizes.iter().map(|&s| measure(family, s, seed)).collect()
}

pub fn write_csv<W: Write>(mut out: W, rows: &[Row]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// distinct positive points.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let k = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
