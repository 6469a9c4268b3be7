use alloc::string::String;
use alloc::vec::Vec;

use super::{set_id, MAX_GENERATION_WORLDS};
use crate::kripke::{validate_epistemic, ArgumentModel, PointedArgumentModel, PointedEpistemicModel, Relation};
use crate::{Error, IdSet};

/// The argument model generated from a pointed epistemic model, together with
/// the world set behind every argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedArgumentModel {
    pointed: PointedArgumentModel,
    subsets: Vec<IdSet>,
    source_worlds: Vec<String>,
    singletons: Vec<usize>,
}

impl GeneratedArgumentModel {
    /// The generated model, pointed at the singleton of the source's world.
    pub fn pointed(&self) -> &PointedArgumentModel {
        &self.pointed
    }

    pub fn model(&self) -> &ArgumentModel {
        self.pointed.model()
    }

    /// Worlds (as indices into the source model) making up `argument`.
    pub fn subset(&self, argument: usize) -> &IdSet {
        &self.subsets[argument]
    }

    pub fn source_worlds(&self) -> &[String] {
        &self.source_worlds
    }

    /// The argument `{t}` for the source world at index `world`.
    pub fn singleton(&self, world: usize) -> usize {
        self.singletons[world]
    }

    pub fn argument_of(&self, worlds: &IdSet) -> Option<usize> {
        self.subsets.iter().position(|s| s == worlds)
    }
}

fn mask_members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask & (1 << b) != 0)
}

/// Builds the argument model of a pointed epistemic model.
///
/// * arguments: every nonempty set of worlds, ordered by size and then
///   lexicographically by world declaration order;
/// * `(U, V)` is in A(p) iff some world of `U` disagrees on `p` with every
///   world of `V`, i.e. `V` agrees on `p` throughout and `U` holds a world
///   with the opposite value;
/// * G(i) holds the arguments containing the agent's class of the current
///   world.
///
/// The result is pointed at `{s}` for the current world `s`.
pub fn generate_argument_model(source: &PointedEpistemicModel, cap: usize) -> Result<GeneratedArgumentModel, Error> {
    let report = validate_epistemic(source.model());
    if !report.is_ok() {
        return Err(Error::InvalidModel(report.violations.len()));
    }
    let m = source.model();
    let n = m.world_count();
    let cap = cap.min(MAX_GENERATION_WORLDS);
    if n > cap {
        return Err(Error::SizeCap {
            what: "epistemic model",
            size: n,
            cap,
        });
    }

    let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
    masks.sort_by_cached_key(|&mask| (mask.count_ones(), mask_members(mask).collect::<Vec<_>>()));
    let count = masks.len();

    let sig = m.signature().clone();
    let arguments: Vec<String> = masks
        .iter()
        .map(|&mask| set_id(mask_members(mask).map(|w| m.world(w))))
        .collect();

    let mut attacks = Vec::with_capacity(sig.propositions().len());
    for p in 0..sig.propositions().len() {
        let truth: u64 = m.valuation(p).iter().fold(0, |acc, w| acc | (1 << w));
        let all_true: Vec<usize> = (0..count).filter(|&v| masks[v] & !truth == 0).collect();
        let all_false: Vec<usize> = (0..count).filter(|&v| masks[v] & truth == 0).collect();
        let successors = masks
            .iter()
            .map(|&u| {
                let mut attackers = Vec::new();
                if u & !truth != 0 {
                    attackers.extend_from_slice(&all_true);
                }
                if u & truth != 0 {
                    attackers.extend_from_slice(&all_false);
                }
                // the two lists are disjoint, so sorting suffices
                attackers.sort_unstable();
                attackers
            })
            .collect();
        attacks.push(Relation::from_sorted_successors(successors));
    }

    let availability = (0..sig.agents().len())
        .map(|i| {
            let class: u64 = m
                .relation(i)
                .successors(source.current())
                .iter()
                .fold(0, |acc, &w| acc | (1 << w));
            IdSet::from_indices(count, (0..count).filter(|&u| masks[u] & class == class))
        })
        .collect();

    let index_of = |mask: u64| {
        masks
            .iter()
            .position(|&x| x == mask)
            .expect("every nonempty mask is an argument")
    };
    let singletons: Vec<usize> = (0..n).map(|w| index_of(1 << w)).collect();
    let current = singletons[source.current()];
    let subsets = masks
        .iter()
        .map(|&mask| IdSet::from_indices(n, mask_members(mask)))
        .collect();

    let model = ArgumentModel::from_parts(sig, arguments, attacks, availability);
    Ok(GeneratedArgumentModel {
        pointed: model.at_index(current),
        subsets,
        source_worlds: m.worlds().to_vec(),
        singletons,
    })
}
