use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Relation, Violation};
use crate::{Error, IdSet, Signature};

/// Worlds, one accessibility relation per agent, and a valuation.
///
/// A proposition is true exactly at the worlds listed for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpistemicModel {
    signature: Signature,
    worlds: Vec<String>,
    relations: Vec<Relation>,
    valuation: Vec<IdSet>,
    issues: Vec<Violation>,
}

impl EpistemicModel {
    /// Index-level constructor: one relation per agent and one world set per
    /// proposition, both in signature order.
    pub fn from_parts(
        signature: Signature,
        worlds: Vec<String>,
        relations: Vec<Relation>,
        valuation: Vec<IdSet>,
    ) -> Self {
        assert_eq!(relations.len(), signature.agents().len());
        assert_eq!(valuation.len(), signature.propositions().len());
        assert!(relations.iter().all(|r| r.len() == worlds.len()));
        assert!(valuation.iter().all(|v| v.universe() == worlds.len()));
        EpistemicModel {
            signature,
            worlds,
            relations,
            valuation,
            issues: Vec::new(),
        }
    }

    pub fn builder<W>(signature: Signature, worlds: W) -> EpistemicBuilder
    where
        W: IntoIterator,
        W::Item: Into<String>,
    {
        EpistemicBuilder::new(signature, worlds.into_iter().map(Into::into).collect())
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn world_count(&self) -> usize {
        self.worlds.len()
    }

    pub fn world(&self, index: usize) -> &str {
        &self.worlds[index]
    }

    pub fn world_index(&self, name: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w == name)
    }

    /// The relation E(i) of the agent at `agent` in signature order.
    pub fn relation(&self, agent: usize) -> &Relation {
        &self.relations[agent]
    }

    /// The worlds where the proposition at `prop` holds.
    pub fn valuation(&self, prop: usize) -> &IdSet {
        &self.valuation[prop]
    }

    pub fn holds(&self, prop: usize, world: usize) -> bool {
        self.valuation[prop].contains(world)
    }

    /// Worlds the agent cannot tell apart from `world`.
    pub fn class_of(&self, agent: usize, world: usize) -> IdSet {
        IdSet::from_indices(
            self.worlds.len(),
            self.relations[agent].successors(world).iter().copied(),
        )
    }

    pub(crate) fn construction_issues(&self) -> &[Violation] {
        &self.issues
    }

    pub fn at(self, world: &str) -> Result<PointedEpistemicModel, Error> {
        let current = self
            .world_index(world)
            .ok_or_else(|| Error::UnknownPoint(world.to_string()))?;
        Ok(PointedEpistemicModel { model: self, current })
    }

    pub fn at_index(self, current: usize) -> PointedEpistemicModel {
        assert!(current < self.worlds.len());
        PointedEpistemicModel { model: self, current }
    }
}

/// An epistemic model together with its actual world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedEpistemicModel {
    model: EpistemicModel,
    current: usize,
}

impl PointedEpistemicModel {
    pub fn model(&self) -> &EpistemicModel {
        &self.model
    }

    pub fn into_model(self) -> EpistemicModel {
        self.model
    }

    pub fn current(&self) -> usize {
        self.current
    }

    pub fn current_name(&self) -> &str {
        self.model.world(self.current)
    }

    pub fn signature(&self) -> &Signature {
        &self.model.signature
    }
}

/// Name-level construction of an [`EpistemicModel`].
///
/// Unknown agents, propositions or worlds do not abort the build; they are
/// recorded and reported by [`validate_epistemic`](super::validate_epistemic).
#[derive(Debug, Clone)]
pub struct EpistemicBuilder {
    signature: Signature,
    worlds: Vec<String>,
    pairs: Vec<Vec<(usize, usize)>>,
    truth: Vec<Vec<usize>>,
    issues: Vec<Violation>,
}

impl EpistemicBuilder {
    fn new(signature: Signature, worlds: Vec<String>) -> Self {
        let mut issues = Vec::new();
        for (k, w) in worlds.iter().enumerate() {
            if worlds[..k].contains(w) {
                issues.push(Violation::DuplicatePoint(w.clone()));
            }
        }
        EpistemicBuilder {
            pairs: alloc::vec![Vec::new(); signature.agents().len()],
            truth: alloc::vec![Vec::new(); signature.propositions().len()],
            signature,
            worlds,
            issues,
        }
    }

    fn world(&mut self, context: &str, name: &str) -> Option<usize> {
        let found = self.worlds.iter().position(|w| w == name);
        if found.is_none() {
            self.issues.push(Violation::UnknownReference {
                context: context.to_string(),
                name: name.to_string(),
            });
        }
        found
    }

    /// Adds the pair `(from, to)` to the agent's relation.
    pub fn relate(&mut self, agent: &str, from: &str, to: &str) -> &mut Self {
        let Some(i) = self.signature.agent_index(agent) else {
            self.issues.push(Violation::UnknownSymbol {
                context: "relations".to_string(),
                name: agent.to_string(),
            });
            return self;
        };
        let context = format!("E({agent})");
        let a = self.world(&context, from);
        let b = self.world(&context, to);
        if let (Some(a), Some(b)) = (a, b) {
            self.pairs[i].push((a, b));
        }
        self
    }

    /// Adds every pair inside each class, making the agent's relation the
    /// equivalence with exactly these classes (for the listed worlds).
    pub fn partition(&mut self, agent: &str, classes: &[&[&str]]) -> &mut Self {
        for class in classes {
            for a in *class {
                for b in *class {
                    self.relate(agent, a, b);
                }
            }
        }
        self
    }

    pub fn set_true(&mut self, prop: &str, world: &str) -> &mut Self {
        let Some(p) = self.signature.proposition_index(prop) else {
            self.issues.push(Violation::UnknownSymbol {
                context: "valuation".to_string(),
                name: prop.to_string(),
            });
            return self;
        };
        if let Some(w) = self.world(&format!("F({prop})"), world) {
            self.truth[p].push(w);
        }
        self
    }

    pub fn build(&self) -> EpistemicModel {
        let n = self.worlds.len();
        EpistemicModel {
            relations: self
                .pairs
                .iter()
                .map(|ps| Relation::from_pairs(n, ps.iter().copied()))
                .collect(),
            valuation: self
                .truth
                .iter()
                .map(|ws| IdSet::from_indices(n, ws.iter().copied()))
                .collect(),
            signature: self.signature.clone(),
            worlds: self.worlds.clone(),
            issues: self.issues.clone(),
        }
    }
}
