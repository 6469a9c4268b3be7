use alloc::string::String;
use alloc::vec::Vec;

use crate::formula::EpistemicFormula;
use crate::kripke::{EpistemicModel, PointedEpistemicModel, Relation};
use crate::{IdSet, Signature};

/// Which propositions had their valuation complemented by [`normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Renaming {
    signature: Signature,
    flipped: Vec<bool>,
}

impl Renaming {
    pub fn is_identity(&self) -> bool {
        !self.flipped.iter().any(|&f| f)
    }

    pub fn is_flipped(&self, prop: usize) -> bool {
        self.flipped[prop]
    }

    pub fn flipped_names(&self) -> Vec<String> {
        self.signature
            .propositions()
            .iter()
            .zip(&self.flipped)
            .filter(|(_, &f)| f)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Rewrites a formula about the original model into one with the same
    /// truth value on the normalized model: flipped atoms `p` become `~p`.
    pub fn rewrite(&self, f: &EpistemicFormula) -> EpistemicFormula {
        match f {
            EpistemicFormula::Prop(p) => {
                let flipped = self.signature.proposition_index(p).is_some_and(|i| self.flipped[i]);
                if flipped {
                    f.clone().not()
                } else {
                    f.clone()
                }
            }
            EpistemicFormula::Not(g) => self.rewrite(g).not(),
            EpistemicFormula::And(a, b) => self.rewrite(a).and(self.rewrite(b)),
            EpistemicFormula::Knows(i, g) => EpistemicFormula::knows(i.clone(), self.rewrite(g)),
        }
    }
}

pub fn is_normalized(source: &PointedEpistemicModel) -> bool {
    let m = source.model();
    (0..m.signature().propositions().len()).all(|p| m.holds(p, source.current()))
}

/// Complements the valuation of every proposition that is false at the
/// current world, so that all propositions hold there. Idempotent; never
/// applied implicitly by the generators.
pub fn normalize(source: &PointedEpistemicModel) -> (PointedEpistemicModel, Renaming) {
    let m = source.model();
    let sig = m.signature().clone();
    let n = m.world_count();
    let flipped: Vec<bool> = (0..sig.propositions().len())
        .map(|p| !m.holds(p, source.current()))
        .collect();
    let valuation = flipped
        .iter()
        .enumerate()
        .map(|(p, &flip)| {
            if flip {
                IdSet::from_indices(n, (0..n).filter(|&w| !m.holds(p, w)))
            } else {
                m.valuation(p).clone()
            }
        })
        .collect();
    let relations: Vec<Relation> = (0..sig.agents().len()).map(|i| m.relation(i).clone()).collect();
    let model = EpistemicModel::from_parts(sig.clone(), m.worlds().to_vec(), relations, valuation);
    (
        model.at_index(source.current()),
        Renaming {
            signature: sig,
            flipped,
        },
    )
}
