//! Abstract syntax, concrete syntax and printing for both modal languages.
//!
//! Concrete grammar (both kinds share it; only atoms and modalities differ):
//!
//! ```text
//! formula := disj ( "->" formula )?
//! disj    := conj ( "|" conj )*
//! conj    := unary ( "&" unary )*
//! unary   := "~" unary | "K[" agent "]" unary | "A[" prop "]" unary
//!          | "(" formula ")" | name
//! ```
//!
//! `K[..]` only exists in epistemic formulas and `A[..]` only in argument
//! formulas. `|` and `->` are rewritten to `~` and `&` while parsing. The
//! printer emits the canonical form: every binary connective parenthesised,
//! modalities and negation prefixed without parentheses.

mod parse;
mod restricted;

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

pub use parse::{parse_argument, parse_epistemic, parse_formula, FormulaKind, ParseError, ParseErrorKind, Parsed};
pub use restricted::{enumerate_restricted, is_restricted, RestrictedEpistemicFormula};

/// φ ::= p | ¬φ | (φ ∧ φ) | K_i φ
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EpistemicFormula {
    Prop(String),
    Not(Box<EpistemicFormula>),
    And(Box<EpistemicFormula>, Box<EpistemicFormula>),
    Knows(String, Box<EpistemicFormula>),
}

/// ξ ::= i | ¬ξ | (ξ ∧ ξ) | A_p ξ
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArgumentFormula {
    Agent(String),
    Not(Box<ArgumentFormula>),
    And(Box<ArgumentFormula>, Box<ArgumentFormula>),
    /// Every attacker of the current argument with respect to the
    /// proposition satisfies the body.
    Attacked(String, Box<ArgumentFormula>),
}

impl EpistemicFormula {
    pub fn prop(name: impl Into<String>) -> Self {
        EpistemicFormula::Prop(name.into())
    }

    pub fn knows(agent: impl Into<String>, body: Self) -> Self {
        EpistemicFormula::Knows(agent.into(), Box::new(body))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        EpistemicFormula::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        EpistemicFormula::And(Box::new(self), Box::new(other))
    }

    /// `¬(¬a ∧ ¬b)`
    pub fn or(self, other: Self) -> Self {
        self.not().and(other.not()).not()
    }

    /// `¬(a ∧ ¬b)`
    pub fn implies(self, other: Self) -> Self {
        self.and(other.not()).not()
    }

    /// Number of `¬` and `∧` nodes.
    pub fn connectives(&self) -> usize {
        match self {
            EpistemicFormula::Prop(_) => 0,
            EpistemicFormula::Not(f) | EpistemicFormula::Knows(_, f) => {
                usize::from(matches!(self, EpistemicFormula::Not(_))) + f.connectives()
            }
            EpistemicFormula::And(a, b) => 1 + a.connectives() + b.connectives(),
        }
    }
}

impl ArgumentFormula {
    pub fn agent(name: impl Into<String>) -> Self {
        ArgumentFormula::Agent(name.into())
    }

    pub fn attacked(prop: impl Into<String>, body: Self) -> Self {
        ArgumentFormula::Attacked(prop.into(), Box::new(body))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        ArgumentFormula::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        ArgumentFormula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        self.not().and(other.not()).not()
    }

    pub fn implies(self, other: Self) -> Self {
        self.and(other.not()).not()
    }
}

impl fmt::Display for EpistemicFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EpistemicFormula::Prop(p) => f.write_str(p),
            EpistemicFormula::Not(x) => write!(f, "~{x}"),
            EpistemicFormula::And(a, b) => write!(f, "({a} & {b})"),
            EpistemicFormula::Knows(i, x) => write!(f, "K[{i}] {x}"),
        }
    }
}

impl fmt::Display for ArgumentFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgumentFormula::Agent(i) => f.write_str(i),
            ArgumentFormula::Not(x) => write!(f, "~{x}"),
            ArgumentFormula::And(a, b) => write!(f, "({a} & {b})"),
            ArgumentFormula::Attacked(p, x) => write!(f, "A[{p}] {x}"),
        }
    }
}

/// Canonical text of a formula of either kind.
pub fn print_formula(f: &impl fmt::Display) -> String {
    alloc::format!("{f}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn prints_canonical_text() {
        let e = EpistemicFormula::knows("a", EpistemicFormula::prop("p"));
        assert_eq!(e.to_string(), "K[a] p");
        let e = EpistemicFormula::prop("p").and(EpistemicFormula::prop("q")).not();
        assert_eq!(print_formula(&e), "~(p & q)");
        let a = ArgumentFormula::attacked("q", ArgumentFormula::agent("a").not());
        assert_eq!(a.to_string(), "A[q] ~a");
    }

    #[test]
    fn counts_connectives() {
        let e = EpistemicFormula::knows("a", EpistemicFormula::prop("p").not())
            .and(EpistemicFormula::prop("q"))
            .not();
        assert_eq!(e.connectives(), 3);
    }
}
