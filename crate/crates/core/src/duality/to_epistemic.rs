use alloc::string::String;
use alloc::vec::Vec;

use super::order::{classify_set, compute_preorder, sort_canonically, ultrafilters_of, ArgumentSet, Preorder};
use super::{set_id, GeneratedArgumentModel};
use crate::kripke::{validate_argument, EpistemicModel, PointedArgumentModel, PointedEpistemicModel, Relation};
use crate::{Error, IdSet};

/// Which reading of the valuation clause to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValuationClause {
    /// `𝕌 ∈ F(p)` iff some `U ∈ 𝕌` has no member `V ≤ U` of `𝕌` attacked
    /// by the current argument with respect to `p`.
    #[default]
    Standard,
    /// Deliberately wrong variant without the `V ≤ U` guard: every member of
    /// `𝕌` must escape the current argument's attack. Exists so the harness
    /// can show that it detects a broken construction.
    WithoutStrengthGuard,
}

/// How the generated model's actual world was resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurrentWorld {
    /// Exactly one ultrafilter contains the current argument.
    Unique(usize),
    /// Several ultrafilters contain it; no world is designated.
    Ambiguous(Vec<usize>),
    /// No ultrafilter contains it; no world is designated.
    Missing,
}

/// The epistemic model generated from a pointed argument model, with the
/// ultrafilter behind every world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedEpistemicModel {
    model: EpistemicModel,
    ultrafilters: Vec<IdSet>,
    current: CurrentWorld,
}

impl GeneratedEpistemicModel {
    pub fn model(&self) -> &EpistemicModel {
        &self.model
    }

    /// Arguments (indices into the source model) forming world `world`.
    pub fn ultrafilter(&self, world: usize) -> &IdSet {
        &self.ultrafilters[world]
    }

    pub fn ultrafilters(&self) -> &[IdSet] {
        &self.ultrafilters
    }

    pub fn current(&self) -> &CurrentWorld {
        &self.current
    }

    pub fn world_of(&self, ultrafilter: &IdSet) -> Option<usize> {
        self.ultrafilters.iter().position(|u| u == ultrafilter)
    }

    /// The model pointed at its designated world, when one was resolved.
    pub fn pointed(&self) -> Option<PointedEpistemicModel> {
        match self.current {
            CurrentWorld::Unique(w) => Some(self.model.clone().at_index(w)),
            _ => None,
        }
    }
}

pub fn generate_epistemic_model(source: &PointedArgumentModel, cap: usize) -> Result<GeneratedEpistemicModel, Error> {
    generate_epistemic_model_with(source, cap, ValuationClause::Standard)
}

/// Builds the epistemic model of a pointed, nontrivial argument model.
///
/// * worlds: the ultrafilters of the strength preorder, named by their
///   canonical text and sorted by it;
/// * `(𝕌, 𝕍) ∈ E(i)` iff `𝕌` and `𝕍` contain the same arguments of G(i);
/// * F(p) per `clause`, relative to the current argument.
///
/// If the current argument attacks nothing with respect to `p`, every world
/// satisfies `p`. This follows the clause literally.
///
/// When the current argument sits in several ultrafilters (or none), the
/// model is still produced and [`CurrentWorld`] says why no world was
/// designated.
pub fn generate_epistemic_model_with(
    source: &PointedArgumentModel,
    cap: usize,
    clause: ValuationClause,
) -> Result<GeneratedEpistemicModel, Error> {
    let report = validate_argument(source.model());
    if !report.is_ok() {
        return Err(Error::InvalidModel(report.violations.len()));
    }
    let m = source.model();
    if m.argument_count() > cap {
        return Err(Error::SizeCap {
            what: "argument model",
            size: m.argument_count(),
            cap,
        });
    }
    let order = compute_preorder(m);
    build(source, &order, clause)
}

pub(crate) fn build(
    source: &PointedArgumentModel,
    order: &Preorder,
    clause: ValuationClause,
) -> Result<GeneratedEpistemicModel, Error> {
    let m = source.model();
    let mut ultrafilters = ultrafilters_of(order);
    if ultrafilters.is_empty() {
        return Err(Error::Trivial);
    }
    sort_canonically(&mut ultrafilters, m.arguments());
    let sig = m.signature().clone();
    let k = ultrafilters.len();

    let worlds: Vec<String> = ultrafilters
        .iter()
        .map(|u| set_id(u.iter().map(|a| m.argument(a))))
        .collect();

    let relations = (0..sig.agents().len())
        .map(|i| {
            let traces: Vec<IdSet> = ultrafilters.iter().map(|u| u.intersection(m.availability(i))).collect();
            Relation::from_pairs(
                k,
                (0..k)
                    .flat_map(|a| (0..k).map(move |b| (a, b)))
                    .filter(|&(a, b)| traces[a] == traces[b]),
            )
        })
        .collect();

    let w = source.current();
    let valuation = (0..sig.propositions().len())
        .map(|p| {
            // members of which the current argument is an attacker
            let hit = IdSet::from_indices(
                m.argument_count(),
                (0..m.argument_count()).filter(|&v| m.is_attacked_by(p, v, w)),
            );
            IdSet::from_indices(
                k,
                (0..k).filter(|&x| {
                    let uf = &ultrafilters[x];
                    uf.iter().any(|u| {
                        uf.iter().all(|v| {
                            let guarded = match clause {
                                ValuationClause::Standard => order.leq(v, u),
                                ValuationClause::WithoutStrengthGuard => true,
                            };
                            !guarded || !hit.contains(v)
                        })
                    })
                }),
            )
        })
        .collect();

    let containing: Vec<usize> = (0..k).filter(|&x| ultrafilters[x].contains(w)).collect();
    let current = match containing.as_slice() {
        [] => CurrentWorld::Missing,
        [only] => CurrentWorld::Unique(*only),
        _ => CurrentWorld::Ambiguous(containing),
    };

    Ok(GeneratedEpistemicModel {
        model: EpistemicModel::from_parts(sig, worlds, relations, valuation),
        ultrafilters,
        current,
    })
}

/// The up-set of `{t}` in a generated argument model, classified against
/// `order` (which must be that model's strength preorder).
pub fn principal_ultrafilter(
    generated: &GeneratedArgumentModel,
    order: &Preorder,
    world: &str,
) -> Result<ArgumentSet, Error> {
    let t = generated
        .source_worlds()
        .iter()
        .position(|w| w == world)
        .ok_or_else(|| Error::UnknownPoint(world.into()))?;
    if ultrafilters_of(order).is_empty() {
        return Err(Error::Trivial);
    }
    Ok(classify_set(order.up_set(generated.singleton(t)), order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::eval_epistemic;
    use crate::duality::{generate_argument_model, normalize, Classification};
    use crate::formula::parse_epistemic;
    use crate::kripke::{validate_epistemic, ArgumentModel};
    use crate::samples::{example1, example2};
    use crate::Signature;
    use alloc::vec;

    #[test]
    fn example2_generates_two_worlds() {
        let g = generate_epistemic_model(&example2(), 24).unwrap();
        let m = g.model();
        assert_eq!(m.worlds(), &["{A1,A2}", "{A1,B}"]);
        assert_eq!(g.current(), &CurrentWorld::Unique(0));
        assert!(m.holds(0, 0) && m.holds(0, 1));
        assert!(m.holds(1, 0) && !m.holds(1, 1));
        assert!(!m.relation(0).contains(0, 1));
        assert!(m.relation(1).contains(0, 1) && m.relation(1).contains(1, 0));
        assert!(validate_epistemic(m).is_ok());
        let pointed = g.pointed().unwrap();
        let sig = pointed.signature().clone();
        assert!(eval_epistemic(&pointed, &parse_epistemic("K[a] q", &sig).unwrap()).unwrap());
        assert!(!eval_epistemic(&pointed, &parse_epistemic("K[b] q", &sig).unwrap()).unwrap());
    }

    #[test]
    fn ambiguous_current_argument_designates_nothing() {
        let src = example2().into_model().at("A1").unwrap();
        let g = generate_epistemic_model(&src, 24).unwrap();
        assert_eq!(g.model().world_count(), 2);
        assert_eq!(g.current(), &CurrentWorld::Ambiguous(vec![0, 1]));
        assert!(g.pointed().is_none());
    }

    #[test]
    fn trivial_sources_are_rejected() {
        let sig = Signature::new(["p"], ["a"]).unwrap();
        let m = ArgumentModel::builder(sig, ["U"]).build().at("U").unwrap();
        assert_eq!(generate_epistemic_model(&m, 24).unwrap_err(), Error::Trivial);
    }

    #[test]
    fn unattacked_current_argument_makes_everything_true() {
        // nothing attacks B, so no member of any ultrafilter is hit
        let src = example2().into_model().at("B").unwrap();
        let g = generate_epistemic_model(&src, 24).unwrap();
        let m = g.model();
        assert!((0..m.world_count()).all(|w| m.holds(0, w) && m.holds(1, w)));
    }

    #[test]
    fn round_trip_keeps_every_proposition_at_the_principal_ultrafilter() {
        let (normal, renaming) = normalize(&example1());
        assert!(renaming.is_identity());
        let ng = generate_argument_model(&normal, 16).unwrap();
        let order = compute_preorder(ng.model());
        let tau = principal_ultrafilter(&ng, &order, "s2").unwrap();
        assert_eq!(tau.classification, Classification::Ultrafilter);
        assert!(tau.members.contains(ng.singleton(1)));
        let gg = generate_epistemic_model(ng.pointed(), 24).unwrap();
        let world = gg.world_of(&tau.members).expect("principal ultrafilter is a world");
        for p in 0..2 {
            assert!(gg.model().holds(p, world));
        }
    }

    #[test]
    fn principal_ultrafilter_errors() {
        let ng = generate_argument_model(&example1(), 16).unwrap();
        let order = compute_preorder(ng.model());
        assert_eq!(
            principal_ultrafilter(&ng, &order, "s9").unwrap_err(),
            Error::UnknownPoint("s9".into())
        );
        let sig = Signature::new(["p"], ["a"]).unwrap();
        let mut b = crate::kripke::EpistemicModel::builder(sig, ["s"]);
        b.relate("a", "s", "s");
        let one = generate_argument_model(&b.build().at("s").unwrap(), 16).unwrap();
        let order = compute_preorder(one.model());
        assert_eq!(principal_ultrafilter(&one, &order, "s").unwrap_err(), Error::Trivial);
    }
}
