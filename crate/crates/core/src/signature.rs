use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

/// The proposition and agent names shared by every model built over it.
///
/// Both lists are nonempty, duplicate free and mutually disjoint, so a bare
/// name in formula text always resolves to at most one symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    propositions: Vec<String>,
    agents: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("signature needs at least one proposition")]
    NoPropositions,
    #[error("signature needs at least one agent")]
    NoAgents,
    #[error("proposition `{0}` declared twice")]
    DuplicateProposition(String),
    #[error("agent `{0}` declared twice")]
    DuplicateAgent(String),
    #[error("`{0}` is declared both as a proposition and as an agent")]
    Overlap(String),
    #[error("`{0}` is not a valid symbol name (use letters, digits and `_`)")]
    BadName(String),
}

pub(crate) fn is_symbol_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_')
}

impl Signature {
    pub fn new<P, A>(propositions: P, agents: A) -> Result<Self, SignatureError>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let propositions: Vec<String> = propositions.into_iter().map(Into::into).collect();
        let agents: Vec<String> = agents.into_iter().map(Into::into).collect();
        if propositions.is_empty() {
            return Err(SignatureError::NoPropositions);
        }
        if agents.is_empty() {
            return Err(SignatureError::NoAgents);
        }
        for (k, p) in propositions.iter().enumerate() {
            if !is_symbol_name(p) {
                return Err(SignatureError::BadName(p.clone()));
            }
            if propositions[..k].contains(p) {
                return Err(SignatureError::DuplicateProposition(p.clone()));
            }
        }
        for (k, a) in agents.iter().enumerate() {
            if !is_symbol_name(a) {
                return Err(SignatureError::BadName(a.clone()));
            }
            if agents[..k].contains(a) {
                return Err(SignatureError::DuplicateAgent(a.clone()));
            }
            if propositions.contains(a) {
                return Err(SignatureError::Overlap(a.clone()));
            }
        }
        Ok(Signature { propositions, agents })
    }

    pub fn propositions(&self) -> &[String] {
        &self.propositions
    }

    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    pub fn proposition_index(&self, name: &str) -> Option<usize> {
        self.propositions.iter().position(|p| p == name)
    }

    pub fn agent_index(&self, name: &str) -> Option<usize> {
        self.agents.iter().position(|a| a == name)
    }

    pub fn proposition(&self, index: usize) -> &str {
        &self.propositions[index]
    }

    pub fn agent(&self, index: usize) -> &str {
        &self.agents[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_overlapping_sets() {
        assert_eq!(
            Signature::new(Vec::<String>::new(), ["a"]),
            Err(SignatureError::NoPropositions)
        );
        assert_eq!(
            Signature::new(["p"], Vec::<String>::new()),
            Err(SignatureError::NoAgents)
        );
        assert_eq!(
            Signature::new(["p", "p"], ["a"]),
            Err(SignatureError::DuplicateProposition("p".into()))
        );
        assert_eq!(
            Signature::new(["p", "a"], ["a"]),
            Err(SignatureError::Overlap("a".into()))
        );
        assert_eq!(
            Signature::new(["p q"], ["a"]),
            Err(SignatureError::BadName("p q".into()))
        );
    }

    #[test]
    fn lookups_follow_declaration_order() {
        let sig = Signature::new(["p", "q"], ["a", "b"]).unwrap();
        assert_eq!(sig.proposition_index("q"), Some(1));
        assert_eq!(sig.agent_index("a"), Some(0));
        assert_eq!(sig.agent_index("p"), None);
        assert_eq!(sig.agent(1), "b");
    }
}
