//! Quantified Boolean formulas and their reduction to closed GLP formulas.
//!
//! For a prefix `Q₀x₀ … Qₙ₋₁xₙ₋₁` the reduction uses
//!
//! * `ηₙ = ⊤`, `ηᵢ = ◇₂ᵢ◇₄ₙ₋₂ᵢ₋₁⊤`,
//! * `θᵢ = ◇₂ᵢ₊₁◇₄ₙ₋₂ᵢ₋₂⊤` standing in for `xᵢ`,
//! * `ψₙ = matrix[θ/x]`, and going outwards
//!   `ψᵢ = ◇₂ᵢ◇₄ₙ₋₂ᵢ₋₁◇₂ᵢ ψᵢ₊₁` for `∃`,
//!   `ψᵢ = ηᵢ ∧ ¬◇₂ᵢ◇₄ₙ₋₂ᵢ₋₁◇₂ᵢ(ηᵢ₊₁ ∧ ¬ψᵢ₊₁)` for `∀`,
//!
//! and the QBF is true iff `η₀ ↔ ψ₀` is provable.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::decider;
use crate::formula::{tokenize, Cursor, Formula, Grammar, ParseError, PrefixOp, Tok};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    ForAll,
}

/// Propositional matrix over `x₀ … xₙ₋₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoolExpr {
    Const(bool),
    Var(usize),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
    Implies(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    #[allow(clippy::should_implement_trait)]
    pub fn not(e: BoolExpr) -> Self {
        BoolExpr::Not(Box::new(e))
    }

    pub fn and(a: BoolExpr, b: BoolExpr) -> Self {
        BoolExpr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: BoolExpr, b: BoolExpr) -> Self {
        BoolExpr::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: BoolExpr, b: BoolExpr) -> Self {
        BoolExpr::Implies(Box::new(a), Box::new(b))
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        match self {
            BoolExpr::Const(b) => *b,
            BoolExpr::Var(i) => assignment[*i],
            BoolExpr::Not(a) => !a.eval(assignment),
            BoolExpr::And(a, b) => a.eval(assignment) && b.eval(assignment),
            BoolExpr::Or(a, b) => a.eval(assignment) || b.eval(assignment),
            BoolExpr::Implies(a, b) => !a.eval(assignment) || b.eval(assignment),
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            BoolExpr::Const(_) => None,
            BoolExpr::Var(i) => Some(*i),
            BoolExpr::Not(a) => a.max_var(),
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) | BoolExpr::Implies(a, b) => {
                a.max_var().max(b.max_var())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            BoolExpr::Const(_) | BoolExpr::Var(_) => 1,
            BoolExpr::Not(a) => a.size() + 1,
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) | BoolExpr::Implies(a, b) => {
                a.size() + b.size() + 1
            }
        }
    }

    /// Replaces each variable `xᵢ` by `subst[i]`.
    pub fn substitute(&self, subst: &[Formula]) -> Formula {
        match self {
            BoolExpr::Const(true) => Formula::Top,
            BoolExpr::Const(false) => Formula::Bot,
            BoolExpr::Var(i) => subst[*i].clone(),
            BoolExpr::Not(a) => Formula::not(a.substitute(subst)),
            BoolExpr::And(a, b) => Formula::and(a.substitute(subst), b.substitute(subst)),
            BoolExpr::Or(a, b) => Formula::or(a.substitute(subst), b.substitute(subst)),
            BoolExpr::Implies(a, b) => Formula::implies(a.substitute(subst), b.substitute(subst)),
        }
    }

    /// DNF realizing a truth table: bit `r` of `table` is the value on the
    /// assignment whose bit `i` is `xᵢ`.
    pub fn from_truth_table(vars: usize, table: u64) -> BoolExpr {
        let rows = (0..1u64 << vars).filter(|r| table >> r & 1 == 1);
        rows.map(|r| {
            (0..vars)
                .map(|i| {
                    if r >> i & 1 == 1 {
                        BoolExpr::Var(i)
                    } else {
                        BoolExpr::not(BoolExpr::Var(i))
                    }
                })
                .reduce(BoolExpr::and)
                .unwrap_or(BoolExpr::Const(true))
        })
        .reduce(BoolExpr::or)
        .unwrap_or(BoolExpr::Const(false))
    }

    /// A random matrix with at most `depth` connective levels.
    pub fn random<R: Rng>(rng: &mut R, vars: usize, depth: usize) -> BoolExpr {
        if depth == 0 || rng.gen_bool(0.25) {
            return if vars == 0 || rng.gen_bool(0.1) {
                BoolExpr::Const(rng.gen())
            } else {
                BoolExpr::Var(rng.gen_range(0..vars))
            };
        }
        match rng.gen_range(0..4) {
            0 => BoolExpr::not(Self::random(rng, vars, depth - 1)),
            1 => BoolExpr::and(
                Self::random(rng, vars, depth - 1),
                Self::random(rng, vars, depth - 1),
            ),
            2 => BoolExpr::or(
                Self::random(rng, vars, depth - 1),
                Self::random(rng, vars, depth - 1),
            ),
            _ => BoolExpr::implies(
                Self::random(rng, vars, depth - 1),
                Self::random(rng, vars, depth - 1),
            ),
        }
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoolExpr::Const(true) => f.write_str("T"),
            BoolExpr::Const(false) => f.write_str("F"),
            BoolExpr::Var(i) => write!(f, "x{i}"),
            BoolExpr::Not(a) => write!(f, "~{a}"),
            BoolExpr::And(a, b) => write!(f, "({a} & {b})"),
            BoolExpr::Or(a, b) => write!(f, "({a} | {b})"),
            BoolExpr::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QbfError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("quantifier token `{token}` at position {pos}: expected E{expected} or A{expected}")]
    Prefix {
        pos: usize,
        token: String,
        expected: usize,
    },
    #[error("variable x{var} is not bound by the prefix")]
    UnboundVariable { var: usize },
}

/// `Q₀x₀ … Qₙ₋₁xₙ₋₁. matrix`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Qbf {
    prefix: Vec<Quantifier>,
    matrix: BoolExpr,
}

impl Qbf {
    pub fn new(prefix: Vec<Quantifier>, matrix: BoolExpr) -> Result<Self, QbfError> {
        if let Some(var) = matrix.max_var().filter(|&v| v >= prefix.len()) {
            return Err(QbfError::UnboundVariable { var });
        }
        Ok(Qbf { prefix, matrix })
    }

    pub fn prefix(&self) -> &[Quantifier] {
        &self.prefix
    }

    pub fn matrix(&self) -> &BoolExpr {
        &self.matrix
    }

    pub fn vars(&self) -> usize {
        self.prefix.len()
    }

    pub fn random<R: Rng>(rng: &mut R, vars: usize, depth: usize) -> Qbf {
        let prefix = (0..vars)
            .map(|_| {
                if rng.gen() {
                    Quantifier::Exists
                } else {
                    Quantifier::ForAll
                }
            })
            .collect();
        Qbf {
            prefix,
            matrix: BoolExpr::random(rng, vars, depth),
        }
    }

    /// Truth value by exhaustive quantifier expansion.
    pub fn eval_brute(&self) -> bool {
        fn go(q: &Qbf, assignment: &mut Vec<bool>) -> bool {
            let i = assignment.len();
            let Some(quant) = q.prefix.get(i) else {
                return q.matrix.eval(assignment);
            };
            let mut branch = |v: bool| {
                assignment.push(v);
                let r = go(q, assignment);
                assignment.pop();
                r
            };
            match quant {
                Quantifier::Exists => branch(false) || branch(true),
                Quantifier::ForAll => branch(false) && branch(true),
            }
        }
        go(self, &mut Vec::with_capacity(self.prefix.len()))
    }

    /// `η₀`, the left side of the reduced biconditional.
    pub fn eta(&self, i: usize) -> Formula {
        let n = self.vars();
        if i == n {
            Formula::Top
        } else {
            Formula::word(&[2 * i, 4 * n - 2 * i - 1])
        }
    }

    pub fn theta(&self, i: usize) -> Formula {
        let n = self.vars();
        Formula::word(&[2 * i + 1, 4 * n - 2 * i - 2])
    }

    /// `ψ₀`.
    pub fn psi(&self) -> Formula {
        let n = self.vars();
        let thetas: Vec<Formula> = (0..n).map(|i| self.theta(i)).collect();
        let mut psi = self.matrix.substitute(&thetas);
        for (i, q) in self.prefix.iter().enumerate().rev() {
            let wrap = |f: Formula| {
                Formula::diamond(
                    2 * i,
                    Formula::diamond(4 * n - 2 * i - 1, Formula::diamond(2 * i, f)),
                )
            };
            psi = match q {
                Quantifier::Exists => wrap(psi),
                Quantifier::ForAll => Formula::and(
                    self.eta(i),
                    Formula::not(wrap(Formula::and(self.eta(i + 1), Formula::not(psi)))),
                ),
            };
        }
        psi
    }

    /// The closed formula `(η₀ → ψ₀) ∧ (ψ₀ → η₀)`.
    pub fn reduce(&self) -> Formula {
        Formula::iff(self.eta(0), self.psi())
    }

    /// Whether brute-force evaluation and the decider agree on this instance.
    pub fn check_roundtrip(&self) -> bool {
        self.eval_brute() == decider::decide(&self.reduce()).provable
    }
}

impl fmt::Display for Qbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.prefix.iter().enumerate() {
            let letter = match q {
                Quantifier::Exists => 'E',
                Quantifier::ForAll => 'A',
            };
            write!(f, "{letter}{i} ")?;
        }
        write!(f, ": {}", self.matrix)
    }
}

struct MatrixGrammar;

impl Grammar for MatrixGrammar {
    type Out = BoolExpr;

    fn atom(&mut self, cur: &mut Cursor) -> Result<BoolExpr, ParseError> {
        let pos = cur.offset();
        match cur.bump().cloned() {
            Some(Tok::Top) => Ok(BoolExpr::Const(true)),
            Some(Tok::Bot) => Ok(BoolExpr::Const(false)),
            Some(Tok::LParen) => {
                let e = self.formula(cur)?;
                if !cur.eat(&Tok::RParen) {
                    return Err(cur.error("expected `)`"));
                }
                Ok(e)
            }
            Some(Tok::Ident(name)) => name
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .map(BoolExpr::Var)
                .ok_or(ParseError::Syntax {
                    pos,
                    msg: format!("unknown identifier `{name}`"),
                }),
            _ => Err(ParseError::Syntax {
                pos,
                msg: "expected a matrix term".into(),
            }),
        }
    }

    fn prefix(&mut self, cur: &mut Cursor) -> Result<Option<PrefixOp>, ParseError> {
        Ok(cur.eat(&Tok::Not).then_some(PrefixOp::Not))
    }

    fn apply_prefix(&mut self, _op: PrefixOp, e: BoolExpr) -> BoolExpr {
        BoolExpr::not(e)
    }

    fn and(&mut self, a: BoolExpr, b: BoolExpr) -> BoolExpr {
        BoolExpr::and(a, b)
    }

    fn or(&mut self, a: BoolExpr, b: BoolExpr) -> BoolExpr {
        BoolExpr::or(a, b)
    }

    fn implies(&mut self, a: BoolExpr, b: BoolExpr) -> BoolExpr {
        BoolExpr::implies(a, b)
    }

    fn iff(&mut self, a: BoolExpr, b: BoolExpr) -> BoolExpr {
        BoolExpr::and(
            BoolExpr::implies(a.clone(), b.clone()),
            BoolExpr::implies(b, a),
        )
    }
}

/// Parses `PREFIX : MATRIX`, e.g. `E0 A1 : (x0 | ~x1)`.
pub fn parse(text: &str) -> Result<Qbf, QbfError> {
    let toks = tokenize(text)?;
    let Some(colon) = toks.iter().position(|(_, t)| *t == Tok::Colon) else {
        return Err(ParseError::Syntax {
            pos: text.len(),
            msg: "expected `:` after the quantifier prefix".into(),
        }
        .into());
    };
    let mut prefix = Vec::new();
    for (expected, (pos, tok)) in toks[..colon].iter().enumerate() {
        let bad = || QbfError::Prefix {
            pos: *pos,
            token: format!("{tok:?}"),
            expected,
        };
        let Tok::Ident(name) = tok else {
            return Err(bad());
        };
        let quant = match name.as_bytes().first() {
            Some(b'E') => Quantifier::Exists,
            Some(b'A') => Quantifier::ForAll,
            _ => return Err(bad()),
        };
        if name[1..].parse::<usize>().ok() != Some(expected) {
            return Err(bad());
        }
        prefix.push(quant);
    }
    let mut cur = Cursor::new(&toks[colon + 1..], text.len());
    let matrix = MatrixGrammar.formula(&mut cur)?;
    cur.expect_end()?;
    Qbf::new(prefix, matrix)
}

impl std::str::FromStr for Qbf {
    type Err = QbfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    proptest! {
        #[test]
        fn small_round_trip(seed in any::<u64>(), vars in 0usize..=2) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = Qbf::random(&mut rng, vars, 3);
            prop_assert!(q.check_roundtrip(), "{}", q);
        }

        #[test]
        fn printed_qbf_parses_back(seed in any::<u64>(), vars in 0usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = Qbf::random(&mut rng, vars, 3);
            prop_assert_eq!(parse(&q.to_string()).unwrap(), q);
        }
    }
}
