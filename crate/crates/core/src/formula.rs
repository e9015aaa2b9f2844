//! Closed polymodal formulas: AST, parser, printer and structural measures.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// A variable-free formula over `⊤, ⊥, ¬, ∧, ∨, →, ◇ₖ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Diamond(usize, Box<Formula>),
}

use Formula::*;

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Implies(Box::new(a), Box::new(b))
    }

    /// `(a → b) ∧ (b → a)`; there is no biconditional node.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    pub fn diamond(k: usize, f: Formula) -> Formula {
        Diamond(k, Box::new(f))
    }

    /// `[k]f`, i.e. `¬◇ₖ¬f`.
    pub fn boxed(k: usize, f: Formula) -> Formula {
        Formula::not(Formula::diamond(k, Formula::not(f)))
    }

    /// `◇ₙ₀ … ◇ₙₖ₋₁ ⊤`.
    pub fn word(indices: &[usize]) -> Formula {
        indices
            .iter()
            .rev()
            .fold(Top, |acc, &k| Formula::diamond(k, acc))
    }

    /// `|φ|`: constants count 1, each connective adds 1.
    pub fn size(&self) -> usize {
        match self {
            Top | Bot => 1,
            Not(a) | Diamond(_, a) => a.size() + 1,
            And(a, b) | Or(a, b) | Implies(a, b) => a.size() + b.size() + 1,
        }
    }

    /// Largest diamond index, `None` when modality-free.
    pub fn max_modality(&self) -> Option<usize> {
        match self {
            Top | Bot => None,
            Not(a) => a.max_modality(),
            Diamond(k, a) => Some(a.max_modality().map_or(*k, |m| m.max(*k))),
            And(a, b) | Or(a, b) | Implies(a, b) => a.max_modality().max(b.max_modality()),
        }
    }

    /// Nesting depth of diamonds.
    pub fn modal_depth(&self) -> usize {
        match self {
            Top | Bot => 0,
            Not(a) => a.modal_depth(),
            Diamond(_, a) => a.modal_depth() + 1,
            And(a, b) | Or(a, b) | Implies(a, b) => a.modal_depth().max(b.modal_depth()),
        }
    }

    /// Translation into the `{⊥, ¬, ∧, ◇ₖ}` basis, without simplification.
    pub fn normalize(&self) -> Formula {
        match self {
            Top => Formula::not(Bot),
            Bot => Bot,
            Not(a) => Formula::not(a.normalize()),
            And(a, b) => Formula::and(a.normalize(), b.normalize()),
            Or(a, b) => Formula::not(Formula::and(
                Formula::not(a.normalize()),
                Formula::not(b.normalize()),
            )),
            Implies(a, b) => Formula::not(Formula::and(a.normalize(), Formula::not(b.normalize()))),
            Diamond(k, a) => Formula::diamond(*k, a.normalize()),
        }
    }

    pub fn is_normalized(&self) -> bool {
        match self {
            Bot => true,
            Top | Or(..) | Implies(..) => false,
            Not(a) | Diamond(_, a) => a.is_normalized(),
            And(a, b) => a.is_normalized() && b.is_normalized(),
        }
    }

    /// Distinct subformulas, each listed after all of its strict subformulas.
    pub fn subformulas_bottom_up(&self) -> Vec<Formula> {
        fn walk<'a>(f: &'a Formula, seen: &mut HashSet<&'a Formula>, out: &mut Vec<&'a Formula>) {
            if seen.contains(f) {
                return;
            }
            match f {
                Top | Bot => {}
                Not(a) | Diamond(_, a) => walk(a, seen, out),
                And(a, b) | Or(a, b) | Implies(a, b) => {
                    walk(a, seen, out);
                    walk(b, seen, out);
                }
            }
            seen.insert(f);
            out.push(f);
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        walk(self, &mut seen, &mut out);
        out.into_iter().cloned().collect()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Top => f.write_str("T"),
            Bot => f.write_str("F"),
            Not(a) => write!(f, "~{a}"),
            Diamond(k, a) => write!(f, "<{k}>{a}"),
            And(a, b) => write!(f, "({a} & {b})"),
            Or(a, b) => write!(f, "({a} | {b})"),
            Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable `{name}` at position {pos}: closed fragment only")]
    Variable { pos: usize, name: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Variable { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Top,
    Bot,
    Ident(String),
    Nat(usize),
    Not,
    And,
    Or,
    Arrow,
    Iff,
    LParen,
    RParen,
    LAngle,
    RAngle,
    LBracket,
    RBracket,
    Colon,
}

/// Tokenizer shared with the QBF reader.
pub(crate) fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax = |pos: usize, msg: &str| ParseError::Syntax {
        pos,
        msg: msg.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'>' => Tok::RAngle,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b':' => Tok::Colon,
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    i += 1;
                    Tok::Arrow
                } else {
                    return Err(syntax(start, "expected `->`"));
                }
            }
            b'<' => {
                if bytes[i + 1..].starts_with(b"->") {
                    i += 2;
                    Tok::Iff
                } else {
                    Tok::LAngle
                }
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..=i];
                let k = digits
                    .parse()
                    .map_err(|_| syntax(start, "index out of range"))?;
                Tok::Nat(k)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &text[start..=i] {
                    "T" => Tok::Top,
                    "F" => Tok::Bot,
                    name => Tok::Ident(name.to_string()),
                }
            }
            _ => return Err(syntax(start, "unexpected character")),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

/// Precedence-climbing reader over a token slice; atoms are delegated so the
/// QBF matrix reader can reuse the connective layers.
pub(crate) struct Cursor<'t> {
    toks: &'t [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl<'t> Cursor<'t> {
    pub(crate) fn new(toks: &'t [(usize, Tok)], end: usize) -> Self {
        Cursor { toks, pos: 0, end }
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    pub(crate) fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    pub(crate) fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.offset(),
            msg: msg.to_string(),
        }
    }

    pub(crate) fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }
}

/// The connective structure shared by formulas and QBF matrices.
pub(crate) trait Grammar {
    type Out;
    fn atom(&mut self, cur: &mut Cursor) -> Result<Self::Out, ParseError>;
    fn prefix(&mut self, cur: &mut Cursor) -> Result<Option<PrefixOp>, ParseError>;
    fn apply_prefix(&mut self, op: PrefixOp, f: Self::Out) -> Self::Out;
    fn and(&mut self, a: Self::Out, b: Self::Out) -> Self::Out;
    fn or(&mut self, a: Self::Out, b: Self::Out) -> Self::Out;
    fn implies(&mut self, a: Self::Out, b: Self::Out) -> Self::Out;
    fn iff(&mut self, a: Self::Out, b: Self::Out) -> Self::Out;

    fn formula(&mut self, cur: &mut Cursor) -> Result<Self::Out, ParseError> {
        let mut lhs = self.implication(cur)?;
        while cur.eat(&Tok::Iff) {
            let rhs = self.implication(cur)?;
            lhs = self.iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self, cur: &mut Cursor) -> Result<Self::Out, ParseError> {
        let lhs = self.disjunction(cur)?;
        if cur.eat(&Tok::Arrow) {
            let rhs = self.implication(cur)?;
            return Ok(self.implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self, cur: &mut Cursor) -> Result<Self::Out, ParseError> {
        let mut lhs = self.conjunction(cur)?;
        while cur.eat(&Tok::Or) {
            let rhs = self.conjunction(cur)?;
            lhs = self.or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self, cur: &mut Cursor) -> Result<Self::Out, ParseError> {
        let mut lhs = self.unary(cur)?;
        while cur.eat(&Tok::And) {
            let rhs = self.unary(cur)?;
            lhs = self.and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self, cur: &mut Cursor) -> Result<Self::Out, ParseError> {
        // Prefix chains are collected iteratively so long words do not recurse.
        let mut ops = Vec::new();
        while let Some(op) = self.prefix(cur)? {
            ops.push(op);
        }
        let mut f = self.atom(cur)?;
        for op in ops.into_iter().rev() {
            f = self.apply_prefix(op, f);
        }
        Ok(f)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum PrefixOp {
    Not,
    Diamond(usize),
    Box(usize),
}

struct FormulaGrammar;

impl Grammar for FormulaGrammar {
    type Out = Formula;

    fn atom(&mut self, cur: &mut Cursor) -> Result<Formula, ParseError> {
        let pos = cur.offset();
        match cur.bump().cloned() {
            Some(Tok::Top) => Ok(Top),
            Some(Tok::Bot) => Ok(Bot),
            Some(Tok::LParen) => {
                let f = self.formula(cur)?;
                if !cur.eat(&Tok::RParen) {
                    return Err(cur.error("expected `)`"));
                }
                Ok(f)
            }
            Some(Tok::Ident(name)) => Err(ParseError::Variable { pos, name }),
            Some(_) => Err(ParseError::Syntax {
                pos,
                msg: "expected a formula".into(),
            }),
            None => Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn prefix(&mut self, cur: &mut Cursor) -> Result<Option<PrefixOp>, ParseError> {
        let (open, close) = match cur.peek() {
            Some(Tok::Not) => {
                cur.bump();
                return Ok(Some(PrefixOp::Not));
            }
            Some(Tok::LAngle) => (Tok::LAngle, Tok::RAngle),
            Some(Tok::LBracket) => (Tok::LBracket, Tok::RBracket),
            _ => return Ok(None),
        };
        cur.bump();
        let Some(Tok::Nat(k)) = cur.peek().cloned() else {
            return Err(cur.error("expected a modality index"));
        };
        cur.bump();
        if !cur.eat(&close) {
            return Err(cur.error("unterminated modality"));
        }
        Ok(Some(if open == Tok::LAngle {
            PrefixOp::Diamond(k)
        } else {
            PrefixOp::Box(k)
        }))
    }

    fn apply_prefix(&mut self, op: PrefixOp, f: Formula) -> Formula {
        match op {
            PrefixOp::Not => Formula::not(f),
            PrefixOp::Diamond(k) => Formula::diamond(k, f),
            PrefixOp::Box(k) => Formula::boxed(k, f),
        }
    }

    fn and(&mut self, a: Formula, b: Formula) -> Formula {
        Formula::and(a, b)
    }

    fn or(&mut self, a: Formula, b: Formula) -> Formula {
        Formula::or(a, b)
    }

    fn implies(&mut self, a: Formula, b: Formula) -> Formula {
        Formula::implies(a, b)
    }

    fn iff(&mut self, a: Formula, b: Formula) -> Formula {
        Formula::iff(a, b)
    }
}

/// Parses the ASCII formula syntax (`T F ~ & | -> <-> <k> [k]`).
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = tokenize(text)?;
    let mut cur = Cursor::new(&toks, text.len());
    let f = FormulaGrammar.formula(&mut cur)?;
    cur.expect_end()?;
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("<0>T"), Formula::diamond(0, Top));
        assert_eq!(
            p("[1]F"),
            Formula::not(Formula::diamond(1, Formula::not(Bot)))
        );
        assert!(matches!(
            parse("x0 & T"),
            Err(ParseError::Variable { pos: 0, .. })
        ));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            p("T -> F -> T"),
            Formula::implies(Top, Formula::implies(Bot, Top))
        );
        assert_eq!(p("T | F & T"), Formula::or(Top, Formula::and(Bot, Top)));
        assert_eq!(
            p("~<2>T & F"),
            Formula::and(Formula::not(Formula::diamond(2, Top)), Bot)
        );
        assert_eq!(p("T <-> F"), Formula::iff(Top, Bot));
        assert_eq!(
            p("T <-> F <-> T"),
            Formula::iff(Formula::iff(Top, Bot), Top)
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = parse("<0>T &").unwrap_err();
        assert_eq!(e.position(), 6);
        assert!(parse("(T").is_err());
        assert!(parse("<x>T").is_err());
        assert!(parse("T T").is_err());
        assert!(parse("T - F").is_err());
        assert!(parse("").is_err());
        assert!(parse("T $").is_err());
    }

    #[test]
    fn size_examples() {
        assert_eq!(Top.size(), 1);
        assert_eq!(p("<0>T").size(), 2);
        assert_eq!(p("T & F").size(), 3);
        assert_eq!(p("~T").size(), 2);
    }

    #[test]
    fn max_modality_examples() {
        assert_eq!(Top.max_modality(), None);
        assert_eq!(p("<3><0>T").max_modality(), Some(3));
        assert_eq!(p("~<1>F").max_modality(), Some(1));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Top.normalize(), Formula::not(Bot));
        assert_eq!(
            p("F | F").normalize(),
            Formula::not(Formula::and(Formula::not(Bot), Formula::not(Bot)))
        );
        assert_eq!(
            p("<0>T").normalize(),
            Formula::diamond(0, Formula::not(Bot))
        );
        assert!(p("(T -> <1>F) | ~T").normalize().is_normalized());
    }

    #[test]
    fn bottom_up_examples() {
        let nb = Formula::not(Bot);
        assert_eq!(nb.subformulas_bottom_up(), vec![Bot, nb.clone()]);
        let ab = Formula::and(Bot, Bot);
        assert_eq!(ab.subformulas_bottom_up(), vec![Bot, ab.clone()]);
        let d = Formula::diamond(0, nb.clone());
        assert_eq!(d.subformulas_bottom_up(), vec![Bot, nb, d.clone()]);
    }

    #[test]
    fn long_words_parse_without_deep_recursion() {
        let text = "<0>".repeat(2000) + "T";
        assert_eq!(p(&text).modal_depth(), 2000);
    }

    #[test]
    fn words() {
        assert_eq!(Formula::word(&[]), Top);
        assert_eq!(Formula::word(&[2, 0]).to_string(), "<2><0>T");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::sample::strategies::formula;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn print_then_parse_is_identity(f in formula(3)) {
            prop_assert_eq!(parse(&f.to_string()).unwrap(), f);
        }

        #[test]
        fn normalize_is_linear_and_in_basis(f in formula(3)) {
            let g = f.normalize();
            prop_assert!(g.is_normalized());
            prop_assert!(g.size() <= 3 * f.size() + 2);
            prop_assert_eq!(g.max_modality(), f.max_modality());
        }
    }
}
