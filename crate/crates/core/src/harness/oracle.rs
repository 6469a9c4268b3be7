use alloc::vec::Vec;

use crate::duality::{sort_canonically, ArgumentSet, Classification, MAX_GENERATION_WORLDS};
use crate::kripke::ArgumentModel;
use crate::{Error, IdSet};

/// Reference enumeration of ultrafilters: scans every subset of arguments
/// and applies the filter axioms literally.
///
/// The strength preorder is recomputed here straight from the attack pairs,
/// and maximality is decided against every filter found in the scan, so
/// nothing is shared with the fast path except the output order.
pub fn oracle_ultrafilters(model: &ArgumentModel, cap: usize) -> Result<Vec<ArgumentSet>, Error> {
    let n = model.argument_count();
    let cap = cap.min(MAX_GENERATION_WORLDS);
    if n > cap {
        return Err(Error::SizeCap {
            what: "argument model (oracle)",
            size: n,
            cap,
        });
    }
    let props = model.signature().propositions().len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    (0..props).all(|p| (0..n).all(|w| !model.is_attacked_by(p, w, v) || model.is_attacked_by(p, w, u)))
                })
                .collect()
        })
        .collect();
    let has = |mask: u64, u: usize| mask & (1 << u) != 0;

    let mut filters: Vec<u64> = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|&u| has(mask, u)).collect();
        let upward = members.iter().all(|&u| (0..n).all(|w| !leq[u][w] || has(mask, w)));
        if !upward {
            continue;
        }
        let directed = members
            .iter()
            .all(|&u| members.iter().all(|&v| members.iter().any(|&w| leq[w][u] && leq[w][v])));
        if directed {
            filters.push(mask);
        }
    }

    let full = (1u64 << n) - 1;
    let mut ultra: Vec<IdSet> = filters
        .iter()
        .filter(|&&f| f != full && !filters.iter().any(|&g| g != f && g & f == f))
        .map(|&f| IdSet::from_indices(n, (0..n).filter(|&u| has(f, u))))
        .collect();
    sort_canonically(&mut ultra, model.arguments());
    Ok(ultra
        .into_iter()
        .map(|members| ArgumentSet {
            members,
            classification: Classification::Ultrafilter,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{enumerate_ultrafilters, set_id};
    use crate::harness::{random_argument_model, RandomArgumentSpec};
    use crate::samples::example2;
    use crate::Signature;
    use alloc::vec;

    #[test]
    fn example2_has_two_ultrafilters() {
        let m = example2().into_model();
        let names: Vec<_> = oracle_ultrafilters(&m, 20)
            .unwrap()
            .iter()
            .map(|s| set_id(s.members.iter().map(|u| m.argument(u))))
            .collect();
        assert_eq!(names, vec!["{A1,A2}", "{A1,B}"]);
    }

    #[test]
    fn single_argument_has_none() {
        let m = ArgumentModel::builder(Signature::new(["p"], ["a"]).unwrap(), ["U"]).build();
        assert!(oracle_ultrafilters(&m, 20).unwrap().is_empty());
    }

    #[test]
    fn agrees_with_fast_enumeration_on_random_six_argument_models() {
        for seed in 0..150 {
            let m = random_argument_model(&RandomArgumentSpec {
                seed,
                arguments: 6..=6,
                ..Default::default()
            });
            assert_eq!(
                oracle_ultrafilters(&m, 20).unwrap(),
                enumerate_ultrafilters(&m, 24).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn refuses_oversized_models() {
        let m = random_argument_model(&RandomArgumentSpec {
            arguments: 9..=9,
            ..Default::default()
        });
        assert!(matches!(
            oracle_ultrafilters(&m, 8),
            Err(Error::SizeCap { size: 9, cap: 8, .. })
        ));
    }
}
