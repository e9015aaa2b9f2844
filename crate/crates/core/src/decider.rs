//! Provability for closed formulas via codes over `Uⁿ_{ωₙ}`.
//!
//! A formula with largest modality `k` is decided at level `n = k + 1`. Its
//! normal form over `{⊥, ¬, ∧, ◇ₖ}` is folded bottom-up into codes, sharing
//! codes between identical subformulas; the formula is provable iff the
//! complement of its code is empty.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::formula::Formula;
use crate::ordinal::Ordinal;
use crate::setcode::{self, CodeError, CodeMeasures, World, WorldCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error("formula needs level {needed}, requested level {requested}")]
    LevelTooSmall { needed: usize, requested: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Stats {
    /// Number of modalities `n` of the model `Uⁿ_{ωₙ}`.
    pub level: usize,
    pub max_width: u64,
    pub max_ord_cost: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub provable: bool,
    /// A world of `Uⁿ_{ωₙ}` refuting the formula; present iff not provable.
    pub witness: Option<World>,
    pub stats: Stats,
}

/// Size and code measures of one distinct subformula of the normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubformulaTrace {
    pub formula: Formula,
    pub size: u64,
    pub measures: CodeMeasures,
}

impl SubformulaTrace {
    pub fn width_within_size(&self) -> bool {
        self.measures.width <= self.size
    }

    /// The ordinal-cost bound `oc ≤ n·|ψ| + 1` that the operations guarantee.
    pub fn ord_cost_within(&self, level: usize) -> bool {
        self.measures.ord_cost <= level as u64 * self.size + 1
    }
}

impl fmt::Display for SubformulaTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "|psi|={} w={} oc={} {}",
            self.size, self.measures.width, self.measures.ord_cost, self.formula
        )
    }
}

/// `1 + max modality`, or 0 for modality-free formulas.
pub fn required_level(f: &Formula) -> usize {
    f.max_modality().map_or(0, |k| k + 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Bot,
    Not(usize),
    And(usize, usize),
    Diamond(usize, usize),
}

/// Hash-consed DAG of a normalized formula, children before parents.
struct Dag {
    nodes: Vec<Node>,
    sizes: Vec<u64>,
    root: usize,
}

impl Dag {
    fn build(f: &Formula) -> Dag {
        let mut dag = Dag {
            nodes: Vec::new(),
            sizes: Vec::new(),
            root: 0,
        };
        let mut ids = HashMap::new();
        dag.root = dag.intern(&f.normalize(), &mut ids);
        dag
    }

    fn intern(&mut self, f: &Formula, ids: &mut HashMap<Node, usize>) -> usize {
        // Chains of unary connectives are unrolled to keep recursion shallow
        // on long words.
        let mut spine = Vec::new();
        let mut cur = f;
        loop {
            match cur {
                Formula::Not(a) => {
                    spine.push(None);
                    cur = a;
                }
                Formula::Diamond(k, a) => {
                    spine.push(Some(*k));
                    cur = a;
                }
                _ => break,
            }
        }
        let (mut id, mut size) = match cur {
            Formula::Bot => (self.insert(Node::Bot, 1, ids), 1),
            Formula::And(a, b) => {
                let (ia, ib) = (self.intern(a, ids), self.intern(b, ids));
                let size = self.sizes[ia] + self.sizes[ib] + 1;
                (self.insert(Node::And(ia, ib), size, ids), size)
            }
            other => unreachable!("not in normal form: {other}"),
        };
        for op in spine.into_iter().rev() {
            size += 1;
            let node = match op {
                None => Node::Not(id),
                Some(k) => Node::Diamond(k, id),
            };
            id = self.insert(node, size, ids);
        }
        id
    }

    fn insert(&mut self, node: Node, size: u64, ids: &mut HashMap<Node, usize>) -> usize {
        *ids.entry(node).or_insert_with(|| {
            self.nodes.push(node);
            self.sizes.push(size);
            self.nodes.len() - 1
        })
    }

    fn formula(&self, id: usize) -> Formula {
        match self.nodes[id] {
            Node::Bot => Formula::Bot,
            Node::Not(a) => Formula::not(self.formula(a)),
            Node::And(a, b) => Formula::and(self.formula(a), self.formula(b)),
            Node::Diamond(k, a) => Formula::diamond(k, self.formula(a)),
        }
    }
}

/// Codes for every distinct subformula of a normalized formula.
struct CodeTable {
    level: usize,
    bound: Ordinal,
    dag: Dag,
    codes: Vec<WorldCode>,
}

impl CodeTable {
    fn build(f: &Formula, level: usize) -> Result<CodeTable, DecideError> {
        let needed = required_level(f);
        if level < needed {
            return Err(DecideError::LevelTooSmall {
                needed,
                requested: level,
            });
        }
        let bound = Ordinal::omega_tower(level);
        let dag = Dag::build(f);
        let mut codes: Vec<WorldCode> = Vec::with_capacity(dag.nodes.len());
        for node in &dag.nodes {
            let code = match *node {
                Node::Bot => setcode::emp_s(level, &bound)?,
                Node::Not(a) => setcode::cmpl(level, &bound, &codes[a])?,
                Node::And(a, b) => setcode::intr(level, &bound, &codes[a], &codes[b])?,
                Node::Diamond(k, a) => setcode::r_inv(level, k, &bound, &codes[a])?,
            };
            codes.push(code);
        }
        Ok(CodeTable {
            level,
            bound,
            dag,
            codes,
        })
    }

    fn root(&self) -> &WorldCode {
        &self.codes[self.dag.root]
    }

    fn traces(&self) -> Vec<SubformulaTrace> {
        (0..self.codes.len())
            .map(|id| SubformulaTrace {
                formula: self.dag.formula(id),
                size: self.dag.sizes[id],
                measures: setcode::measures(&self.codes[id]),
            })
            .collect()
    }

    fn verdict(&self, started: Instant) -> Result<Verdict, DecideError> {
        let refuting = setcode::cmpl(self.level, &self.bound, self.root())?;
        let provable = setcode::is_emp(self.level, &self.bound, &refuting)?;
        let witness = if provable {
            None
        } else {
            setcode::witness(self.level, &self.bound, &refuting)?
        };
        let (mut max_width, mut max_ord_cost) = (0, 0);
        for (id, code) in self.codes.iter().enumerate() {
            let m = setcode::measures(code);
            let size = self.dag.sizes[id];
            debug_assert!(m.width <= size, "width {} exceeds |psi| = {size}", m.width);
            debug_assert!(
                m.ord_cost <= self.level as u64 * size + 1,
                "ord cost {} exceeds n*|psi|+1 for |psi| = {size}",
                m.ord_cost
            );
            max_width = max_width.max(m.width);
            max_ord_cost = max_ord_cost.max(m.ord_cost);
        }
        Ok(Verdict {
            provable,
            witness,
            stats: Stats {
                level: self.level,
                max_width,
                max_ord_cost,
                elapsed: started.elapsed(),
            },
        })
    }
}

/// Decides `GLP ⊢ f`.
pub fn decide(f: &Formula) -> Verdict {
    decide_at_level(f, required_level(f)).expect("level derived from the formula")
}

/// Decides `f` in `U^level_{ω_level}`; any level at least
/// [`required_level`] gives the same answer.
pub fn decide_at_level(f: &Formula, level: usize) -> Result<Verdict, DecideError> {
    let started = Instant::now();
    CodeTable::build(f, level)?.verdict(started)
}

/// Like [`decide`], also returning the measures of every distinct subformula.
pub fn decide_traced(f: &Formula) -> (Verdict, Vec<SubformulaTrace>) {
    let started = Instant::now();
    let table = CodeTable::build(f, required_level(f)).expect("level derived from the formula");
    let verdict = table
        .verdict(started)
        .expect("codes built by the table are well formed");
    (verdict, table.traces())
}

/// Truth of `f` at `w ∈ Uⁿ_{ωₙ}`, `n = required_level(f)`.
pub fn eval_at(f: &Formula, w: &World) -> Result<bool, DecideError> {
    eval_at_level(f, w, required_level(f))
}

pub fn eval_at_level(f: &Formula, w: &World, level: usize) -> Result<bool, DecideError> {
    let table = CodeTable::build(f, level)?;
    Ok(setcode::member(w, table.root(), level, &table.bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn provable(s: &str) -> bool {
        decide(&parse(s).unwrap()).provable
    }

    fn nat_world(xs: &[u64]) -> World {
        World::new(xs.iter().map(|&x| Ordinal::from_nat(x)).collect())
    }

    #[test]
    fn axiom_instances_are_provable() {
        assert!(provable("~<0>~T"));
        assert!(provable("<1>T -> <0>T"));
        assert!(provable("<1><0>T <-> <1>T"));
        assert!(provable("<0>T -> <0>(T & ~<0>T)"));
        assert!(provable("<0>T -> [1]<0>T"));
    }

    #[test]
    fn word_reflection_is_refuted_at_one() {
        let v = decide(&parse("<0>T -> <0><0>T").unwrap());
        assert!(!v.provable);
        assert_eq!(v.witness, Some(nat_world(&[1])));
        assert_eq!(v.stats.level, 1);
    }

    #[test]
    fn propositional_case() {
        let v = decide(&parse("F").unwrap());
        assert!(!v.provable);
        assert_eq!(v.witness, Some(World::empty()));
        assert_eq!(v.stats.level, 0);
        assert!(provable("T | F"));
        assert!(provable("(T -> F) -> F"));
    }

    #[test]
    fn eval_at_examples() {
        let top = parse("T").unwrap();
        assert!(eval_at(&top, &World::empty()).unwrap());
        let d = parse("<0>T").unwrap();
        assert!(!eval_at(&d, &nat_world(&[0])).unwrap());
        assert!(eval_at(&d, &nat_world(&[3])).unwrap());
        assert!(eval_at(&d, &nat_world(&[3, 0])).is_err());
        assert!(eval_at(&d, &World::new(vec![Ordinal::omega()])).is_err());
    }

    #[test]
    fn witness_refutes_formula() {
        for s in [
            "<1>T -> <1><1>T",
            "<0><1>T -> <1>T",
            "<2><0>T -> <0><2><0>T",
        ] {
            let f = parse(s).unwrap();
            let v = decide(&f);
            assert!(!v.provable, "{s}");
            let w = v.witness.unwrap();
            assert!(!eval_at(&f, &w).unwrap(), "{s} at {w}");
        }
    }

    #[test]
    fn padding_levels_agrees() {
        let f = parse("<0>T -> <0><0>T").unwrap();
        for level in 1..5 {
            assert!(!decide_at_level(&f, level).unwrap().provable);
        }
        assert!(matches!(
            decide_at_level(&f, 0),
            Err(DecideError::LevelTooSmall {
                needed: 1,
                requested: 0
            })
        ));
    }

    #[test]
    fn traces_cover_distinct_subformulas() {
        let (v, traces) = decide_traced(&parse("<0>T -> <0>T").unwrap());
        assert!(v.provable);
        // F, ~F, <0>~F, ~<0>~F, (<0>~F & ~<0>~F), ~(...)
        assert_eq!(traces.len(), 6);
        assert!(traces.iter().all(|t| t.width_within_size()));
        assert!(traces.iter().all(|t| t.ord_cost_within(1)));
    }
}
