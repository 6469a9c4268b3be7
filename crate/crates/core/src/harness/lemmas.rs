use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Pipeline, PipelineOutcome};
use crate::duality::{classify_set, is_normalized, Caps, ValuationClause};
use crate::kripke::{validate_epistemic, PointedEpistemicModel};
use crate::Error;

/// A structural fact about the round trip that must hold on every
/// nontrivial pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    /// No argument is strictly stronger than a singleton `{t}`.
    SingletonMinimality,
    /// The up-set of every singleton is an ultrafilter, hence a world.
    PrincipalUltrafilter,
    /// `U ⊆ V` implies `U ≤ V`.
    SubsetStrength,
    /// `τ(t) ⊨ p` iff `t ⊨ p`, for every world `t` and proposition `p`.
    AtomPreservation,
    /// `(s,t) ∈ E(i)` implies `(τ(s),τ(t)) ∈ E'(i)`.
    Forth,
    /// Every `E'(i)`-successor of `τ(s)` agrees on each atom with some
    /// `E(i)`-successor of `s`, for both truth values.
    Back,
    /// Every `E'(i)` is an equivalence relation.
    RegeneratedEquivalence,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::SingletonMinimality,
        Statement::PrincipalUltrafilter,
        Statement::SubsetStrength,
        Statement::AtomPreservation,
        Statement::Forth,
        Statement::Back,
        Statement::RegeneratedEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::SingletonMinimality => "singleton minimality",
            Statement::PrincipalUltrafilter => "principal ultrafilter",
            Statement::SubsetStrength => "subset strength",
            Statement::AtomPreservation => "atom preservation",
            Statement::Forth => "forth",
            Statement::Back => "back",
            Statement::RegeneratedEquivalence => "regenerated equivalence",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementCheck {
    pub statement: Statement,
    /// Number of instances quantified over.
    pub instances: usize,
    pub failures: Vec<String>,
}

impl StatementCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub checks: Vec<StatementCheck>,
    /// Set when the generated argument model is trivial.
    pub skipped: Option<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(StatementCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (Statement, &str)> {
        self.checks
            .iter()
            .flat_map(|c| c.failures.iter().map(move |f| (c.statement, f.as_str())))
    }
}

struct Tally {
    check: StatementCheck,
}

impl Tally {
    fn new(statement: Statement) -> Self {
        Tally {
            check: StatementCheck {
                statement,
                instances: 0,
                failures: Vec::new(),
            },
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.check.instances += 1;
        if !ok {
            self.check.failures.push(describe());
        }
    }
}

/// Checks every [`Statement`] by exhaustive quantification on the round
/// trip of `source`, which must already be normalized.
pub fn lemma_suite(source: &PointedEpistemicModel, caps: &Caps) -> Result<LemmaReport, Error> {
    if !is_normalized(source) {
        let sig = source.signature();
        let m = source.model();
        let p = (0..sig.propositions().len())
            .find(|&p| !m.holds(p, source.current()))
            .map(|p| sig.proposition(p).into())
            .unwrap_or_default();
        return Err(Error::NotNormalized(p));
    }
    let pl = match Pipeline::build(source, caps, ValuationClause::Standard)? {
        PipelineOutcome::Ready(p) => p,
        PipelineOutcome::Trivial { .. } => {
            return Ok(LemmaReport {
                checks: Vec::new(),
                skipped: Some(String::from("generated argument model is trivial (no ultrafilters)")),
            })
        }
    };
    let checks = Statement::ALL.iter().map(|&st| check(&pl, st)).collect();
    Ok(LemmaReport { checks, skipped: None })
}

fn check(pl: &Pipeline, statement: Statement) -> StatementCheck {
    let mut t = Tally::new(statement);
    let src = pl.source.model();
    let sig = src.signature();
    let args = pl.generated.model();
    let order = &pl.order;
    let regen = pl.regenerated.model();
    let worlds = src.world_count();
    let s = pl.source.current();
    let arg = |u: usize| args.argument(u);
    let world = |w: usize| src.world(w);

    match statement {
        Statement::SingletonMinimality => {
            for w in 0..worlds {
                let single = pl.generated.singleton(w);
                for u in 0..args.argument_count() {
                    let strict = order.leq(u, single) && !order.leq(single, u);
                    t.expect(!strict, || {
                        format!("{} is strictly stronger than {}", arg(u), arg(single))
                    });
                }
            }
        }
        Statement::PrincipalUltrafilter => {
            for w in 0..worlds {
                let up = order.up_set(pl.generated.singleton(w));
                let class = classify_set(up, order).classification;
                t.expect(class.is_ultrafilter() && pl.principal[w].is_some(), || {
                    format!("up-set of {{{}}} is classified {:?}", world(w), class)
                });
            }
        }
        Statement::SubsetStrength => {
            for u in 0..args.argument_count() {
                for v in 0..args.argument_count() {
                    if pl.generated.subset(u).is_subset(pl.generated.subset(v)) {
                        t.expect(order.leq(u, v), || format!("{} ⊆ {} but not {0} ≤ {1}", arg(u), arg(v)));
                    }
                }
            }
        }
        Statement::AtomPreservation => {
            for w in 0..worlds {
                let Some(tw) = pl.principal[w] else { continue };
                for p in 0..sig.propositions().len() {
                    let (a, b) = (src.holds(p, w), regen.holds(p, tw));
                    t.expect(a == b, || {
                        format!(
                            "{} at {} is {a} but {b} at its principal ultrafilter",
                            sig.proposition(p),
                            world(w)
                        )
                    });
                }
            }
        }
        Statement::Forth => {
            let Some(ts) = pl.principal[s] else { return t.check };
            for i in 0..sig.agents().len() {
                for &w in src.relation(i).successors(s) {
                    let Some(tw) = pl.principal[w] else { continue };
                    t.expect(regen.relation(i).contains(ts, tw), || {
                        format!("({},{}) ∈ E({}) is not preserved", world(s), world(w), sig.agent(i))
                    });
                }
            }
        }
        Statement::Back => {
            let Some(ts) = pl.principal[s] else { return t.check };
            for i in 0..sig.agents().len() {
                let class = src.relation(i).successors(s);
                for &u in regen.relation(i).successors(ts) {
                    for p in 0..sig.propositions().len() {
                        let value = regen.holds(p, u);
                        t.expect(class.iter().any(|&w| src.holds(p, w) == value), || {
                            format!(
                                "{} has {} = {value} with no witness among the {}-alternatives of {}",
                                regen.world(u),
                                sig.proposition(p),
                                sig.agent(i),
                                world(s)
                            )
                        });
                    }
                }
            }
        }
        Statement::RegeneratedEquivalence => {
            for v in validate_epistemic(regen).violations {
                t.expect(false, || format!("{v}"));
            }
            t.check.instances = sig.agents().len();
        }
    }
    t.check
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::normalize;
    use crate::harness::RandomModelSpec;
    use crate::samples::example1;

    #[test]
    fn example1_passes_everything() {
        let r = lemma_suite(&example1(), &Caps::default()).unwrap();
        assert_eq!(r.skipped, None);
        assert_eq!(r.checks.len(), Statement::ALL.len());
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.checks.iter().all(|c| c.instances > 0));
    }

    #[test]
    fn q_at_s3_survives_the_round_trip() {
        let src = example1();
        let pl = match Pipeline::build(&src, &Caps::default(), ValuationClause::Standard).unwrap() {
            PipelineOutcome::Ready(p) => p,
            PipelineOutcome::Trivial { .. } => panic!("trivial"),
        };
        let s3 = src.model().world_index("s3").unwrap();
        let q = src.signature().proposition_index("q").unwrap();
        assert!(src.model().holds(q, s3));
        assert!(pl.regenerated.model().holds(q, pl.principal[s3].unwrap()));
    }

    #[test]
    fn subset_instance_on_example1() {
        let src = example1();
        let pl = match Pipeline::build(&src, &Caps::default(), ValuationClause::Standard).unwrap() {
            PipelineOutcome::Ready(p) => p,
            PipelineOutcome::Trivial { .. } => panic!("trivial"),
        };
        let m = pl.generated.model();
        let u = m.argument_index("{s1}").unwrap();
        let v = m.argument_index("{s1,s3}").unwrap();
        assert!(pl.order.leq(u, v));
    }

    #[test]
    fn unnormalized_source_is_refused() {
        let src = example1().into_model().at("s1").unwrap();
        assert!(matches!(lemma_suite(&src, &Caps::default()), Err(Error::NotNormalized(p)) if p == "q"));
    }

    #[test]
    fn random_corpus_passes() {
        for m in RandomModelSpec::default().corpus(60) {
            let (m, _) = normalize(&m);
            let r = lemma_suite(&m, &Caps::default()).unwrap();
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
