use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{ArgumentModel, EpistemicModel};

/// One broken model invariant, named by the points involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoPoints,
    DuplicatePoint(String),
    /// A relation or set member that is not a declared point.
    UnknownReference {
        context: String,
        name: String,
    },
    /// A relation or set keyed by a name outside the signature.
    UnknownSymbol {
        context: String,
        name: String,
    },
    NotReflexive {
        agent: String,
        world: String,
    },
    /// `(from, to)` is present but `(to, from)` is not.
    NotSymmetric {
        agent: String,
        from: String,
        to: String,
    },
    /// `(first, via)` and `(via, last)` are present but `(first, last)` is not.
    NotTransitive {
        agent: String,
        first: String,
        via: String,
        last: String,
    },
    SelfAttack {
        proposition: String,
        argument: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoPoints => write!(f, "membership: the model declares no points"),
            Violation::DuplicatePoint(p) => write!(f, "membership: `{p}` is declared twice"),
            Violation::UnknownReference { context, name } => {
                write!(f, "membership: {context} mentions undeclared `{name}`")
            }
            Violation::UnknownSymbol { context, name } => {
                write!(
                    f,
                    "membership: {context} keyed by `{name}`, which is not in the signature"
                )
            }
            Violation::NotReflexive { agent, world } => {
                write!(f, "reflexivity: E({agent}) lacks ({world},{world})")
            }
            Violation::NotSymmetric { agent, from, to } => {
                write!(f, "symmetry: E({agent}) has ({from},{to}) but lacks ({to},{from})")
            }
            Violation::NotTransitive {
                agent,
                first,
                via,
                last,
            } => write!(
                f,
                "transitivity: E({agent}) has ({first},{via}) and ({via},{last}) but lacks ({first},{last})"
            ),
            Violation::SelfAttack { proposition, argument } => {
                write!(f, "irreflexivity: A({proposition}) contains ({argument},{argument})")
            }
        }
    }
}

/// Outcome of validating a model: empty means every invariant holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that each E(i) is an equivalence relation and that every name
/// resolved. Never fails: problems are returned as data.
pub fn validate_epistemic(model: &EpistemicModel) -> ValidationReport {
    let mut violations: Vec<Violation> = model.construction_issues().to_vec();
    let n = model.world_count();
    if n == 0 {
        violations.push(Violation::NoPoints);
    }
    let sig = model.signature();
    for (i, agent) in sig.agents().iter().enumerate() {
        let rel = model.relation(i);
        for s in 0..n {
            if !rel.contains(s, s) {
                violations.push(Violation::NotReflexive {
                    agent: agent.clone(),
                    world: model.world(s).to_string(),
                });
            }
        }
        for (a, b) in rel.pairs() {
            if !rel.contains(b, a) {
                violations.push(Violation::NotSymmetric {
                    agent: agent.clone(),
                    from: model.world(a).to_string(),
                    to: model.world(b).to_string(),
                });
            }
        }
        for (a, b) in rel.pairs() {
            for &c in rel.successors(b) {
                if !rel.contains(a, c) {
                    violations.push(Violation::NotTransitive {
                        agent: agent.clone(),
                        first: model.world(a).to_string(),
                        via: model.world(b).to_string(),
                        last: model.world(c).to_string(),
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Checks that every A(p) is irreflexive and that every name resolved.
pub fn validate_argument(model: &ArgumentModel) -> ValidationReport {
    let mut violations: Vec<Violation> = model.construction_issues().to_vec();
    if model.argument_count() == 0 {
        violations.push(Violation::NoPoints);
    }
    for (p, prop) in model.signature().propositions().iter().enumerate() {
        for u in 0..model.argument_count() {
            if model.is_attacked_by(p, u, u) {
                violations.push(Violation::SelfAttack {
                    proposition: prop.clone(),
                    argument: model.argument(u).to_string(),
                });
            }
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::Signature;

    fn one_world() -> EpistemicModel {
        let sig = Signature::new(["p"], ["a"]).unwrap();
        let mut b = EpistemicModel::builder(sig, ["s"]);
        b.relate("a", "s", "s").set_true("p", "s");
        b.build()
    }

    #[test]
    fn paper_fixtures_validate() {
        assert!(validate_epistemic(samples::example1().model()).is_ok());
        assert!(validate_argument(samples::example2().model()).is_ok());
        assert!(validate_epistemic(&one_world()).is_ok());
    }

    #[test]
    fn removed_pair_breaks_symmetry_once() {
        let sig = Signature::new(["p", "q"], ["a", "b"]).unwrap();
        let mut b = EpistemicModel::builder(sig, ["s1", "s2", "s3"]);
        for w in ["s1", "s2", "s3"] {
            b.relate("a", w, w).relate("b", w, w);
        }
        b.relate("a", "s2", "s1");
        b.partition("b", &[&["s2", "s3"]]);
        let report = validate_epistemic(&b.build());
        assert_eq!(
            report.violations,
            vec![Violation::NotSymmetric {
                agent: "a".into(),
                from: "s2".into(),
                to: "s1".into()
            }]
        );
    }

    #[test]
    fn reports_missing_reflexive_and_transitive_pairs() {
        let sig = Signature::new(["p"], ["a"]).unwrap();
        let mut b = EpistemicModel::builder(sig, ["x", "y", "z"]);
        b.partition("a", &[&["x", "y"], &["y", "z"]]);
        let report = validate_epistemic(&b.build());
        assert!(report.violations.contains(&Violation::NotTransitive {
            agent: "a".into(),
            first: "x".into(),
            via: "y".into(),
            last: "z".into()
        }));
        let mut b = EpistemicModel::builder(Signature::new(["p"], ["a"]).unwrap(), ["x"]);
        b.set_true("p", "x");
        assert_eq!(
            validate_epistemic(&b.build()).violations,
            vec![Violation::NotReflexive {
                agent: "a".into(),
                world: "x".into()
            }]
        );
    }

    #[test]
    fn unknown_names_become_membership_violations() {
        let sig = Signature::new(["p"], ["a"]).unwrap();
        let mut b = EpistemicModel::builder(sig, ["x"]);
        b.relate("a", "x", "x")
            .relate("a", "x", "ghost")
            .relate("zed", "x", "x")
            .set_true("r", "x");
        let report = validate_epistemic(&b.build());
        assert_eq!(report.violations.len(), 3);
        assert!(report.violations[0].to_string().contains("ghost"));

        let empty = EpistemicModel::builder(Signature::new(["p"], ["a"]).unwrap(), Vec::<String>::new());
        assert_eq!(validate_epistemic(&empty.build()).violations, vec![Violation::NoPoints]);
    }

    #[test]
    fn self_attack_is_reported_with_its_pair() {
        let sig = Signature::new(["p"], ["a"]).unwrap();
        let mut b = ArgumentModel::builder(sig, ["U", "V"]);
        b.attack("p", "U", "U").attack("p", "U", "V");
        let report = validate_argument(&b.build());
        assert_eq!(
            report.violations,
            vec![Violation::SelfAttack {
                proposition: "p".into(),
                argument: "U".into()
            }]
        );
        assert_eq!(report.violations[0].to_string(), "irreflexivity: A(p) contains (U,U)");
    }

    #[test]
    fn equivalence_classes_partition_the_worlds() {
        let m = samples::example1();
        let m = m.model();
        for i in 0..m.signature().agents().len() {
            let mut covered = crate::IdSet::empty(m.world_count());
            for s in 0..m.world_count() {
                let class = m.class_of(i, s);
                assert!(class.contains(s));
                for t in class.iter() {
                    assert_eq!(m.class_of(i, t), class);
                }
                covered.union_with(&class);
            }
            assert!(covered.is_full());
        }
    }
}
