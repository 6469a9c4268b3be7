use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::fmt;

use thiserror::Error;

use super::{ArgumentFormula, EpistemicFormula};
use crate::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaKind {
    Epistemic,
    Argument,
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaKind::Epistemic => "epistemic",
            FormulaKind::Argument => "argument",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Epistemic(EpistemicFormula),
    Argument(ArgumentFormula),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    /// A symbol or modality that belongs to the other language.
    #[error("`{found}` belongs to {belongs} formulas, not {expected} formulas")]
    WrongKind {
        found: String,
        belongs: FormulaKind,
        expected: FormulaKind,
    },
}

impl ParseError {
    fn syntax(position: usize, msg: impl Into<String>) -> Self {
        ParseError {
            position,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }

    /// Whether the text looks like a formula of the other kind.
    pub fn is_kind_mismatch(&self) -> bool {
        matches!(self.kind, ParseErrorKind::WrongKind { .. })
    }
}

pub fn parse_formula(text: &str, kind: FormulaKind, signature: &Signature) -> Result<Parsed, ParseError> {
    match kind {
        FormulaKind::Epistemic => parse_epistemic(text, signature).map(Parsed::Epistemic),
        FormulaKind::Argument => parse_argument(text, signature).map(Parsed::Argument),
    }
}

pub fn parse_epistemic(text: &str, signature: &Signature) -> Result<EpistemicFormula, ParseError> {
    let raw = Parser::new(text).parse_all()?;
    to_epistemic(raw, signature)
}

pub fn parse_argument(text: &str, signature: &Signature) -> Result<ArgumentFormula, ParseError> {
    let raw = Parser::new(text).parse_all()?;
    to_argument(raw, signature)
}

/// Kind-agnostic tree; names are resolved when converting to a typed AST.
enum Raw {
    Atom(String, usize),
    Not(Box<Raw>),
    And(Box<Raw>, Box<Raw>),
    Modal(char, String, usize, Box<Raw>),
}

impl Raw {
    fn not(self) -> Raw {
        Raw::Not(Box::new(self))
    }

    fn and(self, other: Raw) -> Raw {
        Raw::And(Box::new(self), Box::new(other))
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(ParseError::syntax(self.pos, alloc::format!("expected `{token}`")))
        }
    }

    fn name(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len: usize = self
            .rest()
            .chars()
            .take_while(|c| c.is_alphanumeric() || *c == '_')
            .map(char::len_utf8)
            .sum();
        if len == 0 {
            return Err(ParseError::syntax(start, "expected a name"));
        }
        self.pos += len;
        Ok((self.text[start..self.pos].to_string(), start))
    }

    fn parse_all(mut self) -> Result<Raw, ParseError> {
        let f = self.formula()?;
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(ParseError::syntax(self.pos, "unexpected trailing input"));
        }
        Ok(f)
    }

    fn formula(&mut self) -> Result<Raw, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat("->") {
            let rhs = self.formula()?;
            return Ok(lhs.and(rhs.not()).not());
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Raw, ParseError> {
        let mut acc = self.conjunction()?;
        while self.eat("|") {
            let rhs = self.conjunction()?;
            acc = acc.not().and(rhs.not()).not();
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Raw, ParseError> {
        let mut acc = self.unary()?;
        while self.eat("&") {
            let rhs = self.unary()?;
            acc = acc.and(rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Raw, ParseError> {
        if self.eat("~") {
            return Ok(self.unary()?.not());
        }
        if self.eat("(") {
            let inner = self.formula()?;
            self.expect(")")?;
            return Ok(inner);
        }
        let (name, at) = self.name()?;
        if (name == "K" || name == "A") && self.rest().starts_with('[') {
            self.pos += 1;
            let (index, index_at) = self.name()?;
            self.expect("]")?;
            let body = self.unary()?;
            let op = if name == "K" { 'K' } else { 'A' };
            return Ok(Raw::Modal(op, index, index_at, Box::new(body)));
        }
        Ok(Raw::Atom(name, at))
    }
}

fn wrong_kind(found: String, position: usize, belongs: FormulaKind, expected: FormulaKind) -> ParseError {
    ParseError {
        position,
        kind: ParseErrorKind::WrongKind {
            found,
            belongs,
            expected,
        },
    }
}

fn to_epistemic(raw: Raw, sig: &Signature) -> Result<EpistemicFormula, ParseError> {
    use FormulaKind::*;
    Ok(match raw {
        Raw::Atom(name, at) => {
            if sig.proposition_index(&name).is_some() {
                EpistemicFormula::Prop(name)
            } else if sig.agent_index(&name).is_some() {
                return Err(wrong_kind(name, at, Argument, Epistemic));
            } else {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownProposition(name),
                });
            }
        }
        Raw::Not(f) => EpistemicFormula::Not(Box::new(to_epistemic(*f, sig)?)),
        Raw::And(a, b) => EpistemicFormula::And(Box::new(to_epistemic(*a, sig)?), Box::new(to_epistemic(*b, sig)?)),
        Raw::Modal('K', agent, at, body) => {
            if sig.agent_index(&agent).is_none() {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownAgent(agent),
                });
            }
            EpistemicFormula::Knows(agent, Box::new(to_epistemic(*body, sig)?))
        }
        Raw::Modal(_, prop, at, _) => {
            return Err(wrong_kind(alloc::format!("A[{prop}]"), at, Argument, Epistemic));
        }
    })
}

fn to_argument(raw: Raw, sig: &Signature) -> Result<ArgumentFormula, ParseError> {
    use FormulaKind::*;
    Ok(match raw {
        Raw::Atom(name, at) => {
            if sig.agent_index(&name).is_some() {
                ArgumentFormula::Agent(name)
            } else if sig.proposition_index(&name).is_some() {
                return Err(wrong_kind(name, at, Epistemic, Argument));
            } else {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownAgent(name),
                });
            }
        }
        Raw::Not(f) => ArgumentFormula::Not(Box::new(to_argument(*f, sig)?)),
        Raw::And(a, b) => ArgumentFormula::And(Box::new(to_argument(*a, sig)?), Box::new(to_argument(*b, sig)?)),
        Raw::Modal('A', prop, at, body) => {
            if sig.proposition_index(&prop).is_none() {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownProposition(prop),
                });
            }
            ArgumentFormula::Attacked(prop, Box::new(to_argument(*body, sig)?))
        }
        Raw::Modal(_, agent, at, _) => {
            return Err(wrong_kind(alloc::format!("K[{agent}]"), at, Epistemic, Argument));
        }
    })
}
