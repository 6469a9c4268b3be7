use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kripke::{ArgumentModel, EpistemicModel, PointedEpistemicModel, Relation};
use crate::{IdSet, Signature};

/// Shape of the random epistemic models used by the harness.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomModelSpec {
    pub worlds: RangeInclusive<usize>,
    pub propositions: RangeInclusive<usize>,
    pub agents: RangeInclusive<usize>,
    pub seed: u64,
    /// Chance that a world joins an existing class of an agent rather than
    /// opening a new one. Higher values mean coarser knowledge.
    pub join_probability: f64,
    /// Chance that a proposition holds at a world.
    pub truth_probability: f64,
}

impl Default for RandomModelSpec {
    fn default() -> Self {
        RandomModelSpec {
            worlds: 1..=4,
            propositions: 1..=2,
            agents: 1..=2,
            seed: 0,
            join_probability: 0.5,
            truth_probability: 0.5,
        }
    }
}

impl RandomModelSpec {
    pub fn with_seed(&self, seed: u64) -> Self {
        RandomModelSpec { seed, ..self.clone() }
    }

    /// `count` models, the k-th drawn with seed `seed + k`.
    pub fn corpus(&self, count: usize) -> impl Iterator<Item = PointedEpistemicModel> + '_ {
        (0..count as u64).map(move |k| random_epistemic_model(&self.with_seed(self.seed.wrapping_add(k))))
    }
}

fn symbol_names(first: &[&str], prefix: &str, count: usize) -> Vec<String> {
    (0..count)
        .map(|k| match first.get(k) {
            Some(name) => String::from(*name),
            None => format!("{prefix}{}", k + 1),
        })
        .collect()
}

fn draw(rng: &mut ChaCha8Rng, range: &RangeInclusive<usize>) -> usize {
    assert!(!range.is_empty(), "empty range in random model spec");
    rng.gen_range(range.clone())
}

/// Deterministic for a fixed spec. Each agent's relation is the equivalence
/// of a random partition, so the result always validates.
pub fn random_epistemic_model(spec: &RandomModelSpec) -> PointedEpistemicModel {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = draw(&mut rng, &spec.worlds).max(1);
    let props = draw(&mut rng, &spec.propositions).max(1);
    let agents = draw(&mut rng, &spec.agents).max(1);
    let sig = Signature::new(
        symbol_names(&["p", "q", "r"], "p", props),
        symbol_names(&["a", "b", "c"], "a", agents),
    )
    .expect("generated names are distinct");
    let worlds: Vec<String> = (1..=n).map(|k| format!("w{k}")).collect();

    let relations = (0..agents)
        .map(|_| {
            let mut block_of: Vec<usize> = Vec::with_capacity(n);
            let mut blocks = 0;
            for _ in 0..n {
                if blocks > 0 && rng.gen_bool(spec.join_probability) {
                    block_of.push(rng.gen_range(0..blocks));
                } else {
                    block_of.push(blocks);
                    blocks += 1;
                }
            }
            Relation::from_pairs(
                n,
                (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| block_of[a] == block_of[b]),
            )
        })
        .collect();
    let valuation = (0..props)
        .map(|_| IdSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(spec.truth_probability))))
        .collect();
    let current = rng.gen_range(0..n);
    EpistemicModel::from_parts(sig, worlds, relations, valuation).at_index(current)
}

/// Shape of the random argument models used to cross-check ultrafilter
/// enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomArgumentSpec {
    pub arguments: RangeInclusive<usize>,
    pub propositions: RangeInclusive<usize>,
    pub agents: RangeInclusive<usize>,
    pub seed: u64,
    pub attack_probability: f64,
    pub availability_probability: f64,
}

impl Default for RandomArgumentSpec {
    fn default() -> Self {
        RandomArgumentSpec {
            arguments: 1..=8,
            propositions: 1..=2,
            agents: 1..=2,
            seed: 0,
            attack_probability: 0.3,
            availability_probability: 0.5,
        }
    }
}

/// Deterministic for a fixed spec; attack relations are irreflexive.
pub fn random_argument_model(spec: &RandomArgumentSpec) -> ArgumentModel {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = draw(&mut rng, &spec.arguments).max(1);
    let props = draw(&mut rng, &spec.propositions).max(1);
    let agents = draw(&mut rng, &spec.agents).max(1);
    let sig = Signature::new(
        symbol_names(&["p", "q", "r"], "p", props),
        symbol_names(&["a", "b", "c"], "a", agents),
    )
    .expect("generated names are distinct");
    let arguments: Vec<String> = (1..=n).map(|k| format!("X{k}")).collect();
    let attacks = (0..props)
        .map(|_| {
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(spec.attack_probability) {
                        pairs.push((u, v));
                    }
                }
            }
            Relation::from_pairs(n, pairs)
        })
        .collect();
    let availability = (0..agents)
        .map(|_| IdSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(spec.availability_probability))))
        .collect();
    ArgumentModel::from_parts(sig, arguments, attacks, availability)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::{validate_argument, validate_epistemic};

    #[test]
    fn same_seed_same_model() {
        let spec = RandomModelSpec::default();
        assert_eq!(random_epistemic_model(&spec), random_epistemic_model(&spec));
        let arg = RandomArgumentSpec::default();
        assert_eq!(random_argument_model(&arg), random_argument_model(&arg));
    }

    #[test]
    fn outputs_always_validate() {
        for m in (RandomModelSpec {
            worlds: 1..=6,
            ..Default::default()
        })
        .corpus(100)
        {
            assert!(validate_epistemic(m.model()).is_ok());
        }
        for seed in 0..100 {
            let m = random_argument_model(&RandomArgumentSpec {
                seed,
                ..Default::default()
            });
            assert!(validate_argument(&m).is_ok());
        }
    }

    #[test]
    fn single_world_range() {
        let m = random_epistemic_model(&RandomModelSpec {
            worlds: 1..=1,
            ..Default::default()
        });
        let m = m.model();
        assert_eq!(m.world_count(), 1);
        for i in 0..m.signature().agents().len() {
            assert_eq!(m.relation(i).pairs().collect::<Vec<_>>(), alloc::vec![(0, 0)]);
        }
    }
}
