use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Relation, Violation};
use crate::{Error, IdSet, Signature};

/// Arguments, one attack relation per proposition, and per-agent availability.
///
/// A pair `(u, v)` in the relation of proposition `p` records that `v`
/// attacks `u` with respect to `p`. The relation is indexed by the attacked
/// argument, so `attackers(p, u)` lists every `v` with `(u, v)` in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentModel {
    signature: Signature,
    arguments: Vec<String>,
    attacks: Vec<Relation>,
    availability: Vec<IdSet>,
    issues: Vec<Violation>,
}

impl ArgumentModel {
    /// Index-level constructor: one relation per proposition and one
    /// argument set per agent, both in signature order.
    pub fn from_parts(
        signature: Signature,
        arguments: Vec<String>,
        attacks: Vec<Relation>,
        availability: Vec<IdSet>,
    ) -> Self {
        assert_eq!(attacks.len(), signature.propositions().len());
        assert_eq!(availability.len(), signature.agents().len());
        assert!(attacks.iter().all(|r| r.len() == arguments.len()));
        assert!(availability.iter().all(|g| g.universe() == arguments.len()));
        ArgumentModel {
            signature,
            arguments,
            attacks,
            availability,
            issues: Vec::new(),
        }
    }

    pub fn builder<A>(signature: Signature, arguments: A) -> ArgumentBuilder
    where
        A: IntoIterator,
        A::Item: Into<String>,
    {
        ArgumentBuilder::new(signature, arguments.into_iter().map(Into::into).collect())
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn argument_count(&self) -> usize {
        self.arguments.len()
    }

    pub fn argument(&self, index: usize) -> &str {
        &self.arguments[index]
    }

    pub fn argument_index(&self, name: &str) -> Option<usize> {
        self.arguments.iter().position(|a| a == name)
    }

    /// The relation A(p) for the proposition at `prop`.
    pub fn attacks(&self, prop: usize) -> &Relation {
        &self.attacks[prop]
    }

    /// Arguments attacking `attacked` with respect to `prop`.
    pub fn attackers(&self, prop: usize, attacked: usize) -> &[usize] {
        self.attacks[prop].successors(attacked)
    }

    /// Whether `attacker` attacks `attacked` with respect to `prop`.
    pub fn is_attacked_by(&self, prop: usize, attacked: usize, attacker: usize) -> bool {
        self.attacks[prop].contains(attacked, attacker)
    }

    /// The arguments available to the agent at `agent`.
    pub fn availability(&self, agent: usize) -> &IdSet {
        &self.availability[agent]
    }

    pub(crate) fn construction_issues(&self) -> &[Violation] {
        &self.issues
    }

    pub fn at(self, argument: &str) -> Result<PointedArgumentModel, Error> {
        let current = self
            .argument_index(argument)
            .ok_or_else(|| Error::UnknownPoint(argument.to_string()))?;
        Ok(PointedArgumentModel { model: self, current })
    }

    pub fn at_index(self, current: usize) -> PointedArgumentModel {
        assert!(current < self.arguments.len());
        PointedArgumentModel { model: self, current }
    }
}

/// An argument model together with its current (last uttered) argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedArgumentModel {
    model: ArgumentModel,
    current: usize,
}

impl PointedArgumentModel {
    pub fn model(&self) -> &ArgumentModel {
        &self.model
    }

    pub fn into_model(self) -> ArgumentModel {
        self.model
    }

    pub fn current(&self) -> usize {
        self.current
    }

    pub fn current_name(&self) -> &str {
        self.model.argument(self.current)
    }

    pub fn signature(&self) -> &Signature {
        &self.model.signature
    }
}

/// Name-level construction of an [`ArgumentModel`]; unresolved names are
/// recorded for validation instead of failing the build.
#[derive(Debug, Clone)]
pub struct ArgumentBuilder {
    signature: Signature,
    arguments: Vec<String>,
    pairs: Vec<Vec<(usize, usize)>>,
    available: Vec<Vec<usize>>,
    issues: Vec<Violation>,
}

impl ArgumentBuilder {
    fn new(signature: Signature, arguments: Vec<String>) -> Self {
        let mut issues = Vec::new();
        for (k, a) in arguments.iter().enumerate() {
            if arguments[..k].contains(a) {
                issues.push(Violation::DuplicatePoint(a.clone()));
            }
        }
        ArgumentBuilder {
            pairs: alloc::vec![Vec::new(); signature.propositions().len()],
            available: alloc::vec![Vec::new(); signature.agents().len()],
            signature,
            arguments,
            issues,
        }
    }

    fn argument(&mut self, context: &str, name: &str) -> Option<usize> {
        let found = self.arguments.iter().position(|a| a == name);
        if found.is_none() {
            self.issues.push(Violation::UnknownReference {
                context: context.to_string(),
                name: name.to_string(),
            });
        }
        found
    }

    /// Records that `attacker` attacks `attacked` with respect to `prop`,
    /// i.e. adds the pair `(attacked, attacker)` to A(prop).
    pub fn attack(&mut self, prop: &str, attacked: &str, attacker: &str) -> &mut Self {
        let Some(p) = self.signature.proposition_index(prop) else {
            self.issues.push(Violation::UnknownSymbol {
                context: "attacks".to_string(),
                name: prop.to_string(),
            });
            return self;
        };
        let context = format!("A({prop})");
        let u = self.argument(&context, attacked);
        let v = self.argument(&context, attacker);
        if let (Some(u), Some(v)) = (u, v) {
            self.pairs[p].push((u, v));
        }
        self
    }

    pub fn available(&mut self, agent: &str, argument: &str) -> &mut Self {
        let Some(i) = self.signature.agent_index(agent) else {
            self.issues.push(Violation::UnknownSymbol {
                context: "availability".to_string(),
                name: agent.to_string(),
            });
            return self;
        };
        if let Some(u) = self.argument(&format!("G({agent})"), argument) {
            self.available[i].push(u);
        }
        self
    }

    pub fn build(&self) -> ArgumentModel {
        let n = self.arguments.len();
        ArgumentModel {
            attacks: self
                .pairs
                .iter()
                .map(|ps| Relation::from_pairs(n, ps.iter().copied()))
                .collect(),
            availability: self
                .available
                .iter()
                .map(|us| IdSet::from_indices(n, us.iter().copied()))
                .collect(),
            signature: self.signature.clone(),
            arguments: self.arguments.clone(),
            issues: self.issues.clone(),
        }
    }
}
