use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::Deref;

use super::EpistemicFormula;
use crate::{Error, Signature};

/// An epistemic formula whose modalities apply only to `p` or `~p`.
///
/// These are exactly the formulas whose truth survives the round trip
/// through the generated argument model and back.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RestrictedEpistemicFormula(EpistemicFormula);

impl RestrictedEpistemicFormula {
    pub fn new(f: EpistemicFormula) -> Option<Self> {
        is_restricted(&f).then_some(RestrictedEpistemicFormula(f))
    }

    pub fn into_inner(self) -> EpistemicFormula {
        self.0
    }
}

impl Deref for RestrictedEpistemicFormula {
    type Target = EpistemicFormula;

    fn deref(&self) -> &EpistemicFormula {
        &self.0
    }
}

fn is_literal(f: &EpistemicFormula) -> bool {
    match f {
        EpistemicFormula::Prop(_) => true,
        EpistemicFormula::Not(inner) => matches!(**inner, EpistemicFormula::Prop(_)),
        _ => false,
    }
}

pub fn is_restricted(f: &EpistemicFormula) -> bool {
    match f {
        EpistemicFormula::Prop(_) => true,
        EpistemicFormula::Not(g) => is_restricted(g),
        EpistemicFormula::And(a, b) => is_restricted(a) && is_restricted(b),
        EpistemicFormula::Knows(_, body) => is_literal(body),
    }
}

/// All restricted formulas built from at most `max_connectives` applications
/// of `~` and `&` over the atoms `p`, `~p`, `K[i] p`, `K[i] ~p`.
///
/// The atoms come first (per proposition `p`, `~p`; then per agent and
/// proposition `K[i] p`, `K[i] ~p`), followed by each connective level in
/// turn: negations of the previous level, then conjunctions split by the
/// connective count of their left operand. A formula reachable at several
/// levels (`~p` is both an atom and a negation) is kept at its first
/// occurrence only. `(f & g)` and `(g & f)` are distinct.
pub fn enumerate_restricted(
    signature: &Signature,
    max_connectives: usize,
    cap: usize,
) -> Result<Vec<RestrictedEpistemicFormula>, Error> {
    let mut seen: BTreeSet<EpistemicFormula> = BTreeSet::new();
    let mut levels: Vec<Vec<EpistemicFormula>> = Vec::new();
    let mut total = 0usize;
    let mut admit = |f: EpistemicFormula, level: &mut Vec<EpistemicFormula>, seen: &mut BTreeSet<EpistemicFormula>| {
        if seen.insert(f.clone()) {
            total += 1;
            if total > cap {
                return Err(Error::SizeCap {
                    what: "restricted formula enumeration",
                    size: total,
                    cap,
                });
            }
            level.push(f);
        }
        Ok(())
    };

    let mut atoms = Vec::new();
    for p in signature.propositions() {
        admit(EpistemicFormula::prop(p.as_str()), &mut atoms, &mut seen)?;
        admit(EpistemicFormula::prop(p.as_str()).not(), &mut atoms, &mut seen)?;
    }
    for i in signature.agents() {
        for p in signature.propositions() {
            admit(
                EpistemicFormula::knows(i.as_str(), EpistemicFormula::prop(p.as_str())),
                &mut atoms,
                &mut seen,
            )?;
            admit(
                EpistemicFormula::knows(i.as_str(), EpistemicFormula::prop(p.as_str()).not()),
                &mut atoms,
                &mut seen,
            )?;
        }
    }
    levels.push(atoms);

    for k in 1..=max_connectives {
        let mut level = Vec::new();
        for f in &levels[k - 1] {
            admit(f.clone().not(), &mut level, &mut seen)?;
        }
        for left in 0..k {
            let right = k - 1 - left;
            for f in &levels[left] {
                for g in &levels[right] {
                    admit(f.clone().and(g.clone()), &mut level, &mut seen)?;
                }
            }
        }
        levels.push(level);
    }

    Ok(levels.into_iter().flatten().map(RestrictedEpistemicFormula).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    type E = EpistemicFormula;

    fn sig(props: &[&str], agents: &[&str]) -> Signature {
        Signature::new(props.iter().copied(), agents.iter().copied()).unwrap()
    }

    #[test]
    fn recognises_literal_modalities_only() {
        let s = sig(&["p", "q"], &["a", "b"]);
        let parse = |t: &str| crate::formula::parse_epistemic(t, &s).unwrap();
        assert!(is_restricted(&parse("K[a] p")));
        assert!(is_restricted(&parse("~(K[a] ~p & q)")));
        assert!(!is_restricted(&parse("K[a] (p & q)")));
        assert!(!is_restricted(&parse("K[a] K[b] p")));
        assert!(!is_restricted(&parse("K[a] ~~p")));
        assert!(RestrictedEpistemicFormula::new(parse("K[a] K[b] p")).is_none());
    }

    #[test]
    fn atom_census() {
        let one = enumerate_restricted(&sig(&["p"], &["a"]), 0, 1000).unwrap();
        let text: Vec<_> = one.iter().map(|f| f.to_string()).collect();
        assert_eq!(text, vec!["p", "~p", "K[a] p", "K[a] ~p"]);
        let two = enumerate_restricted(&sig(&["p", "q"], &["a", "b"]), 0, 1000).unwrap();
        assert_eq!(two.len(), 12);
    }

    #[test]
    fn one_connective_over_a_single_symbol_each() {
        // 4 atoms, 4 negations of which `~p` already is an atom, 16 ordered
        // conjunctions.
        let f = enumerate_restricted(&sig(&["p"], &["a"]), 1, 1000).unwrap();
        assert_eq!(f.len(), 4 + 3 + 16);
        assert_eq!(f.len(), oracle(&sig(&["p"], &["a"]), 1).len());
    }

    #[test]
    fn cap_is_a_hard_error() {
        let err = enumerate_restricted(&sig(&["p", "q"], &["a", "b"]), 2, 100).unwrap_err();
        assert!(matches!(err, Error::SizeCap { cap: 100, .. }));
    }

    /// Every epistemic AST with at most `budget` nodes above the atoms,
    /// kept when restricted and within `max` connectives once literals under
    /// or outside a modality are counted as atoms.
    fn oracle(s: &Signature, max: usize) -> BTreeSet<E> {
        fn cost(f: &E) -> usize {
            match f {
                E::Prop(_) => 0,
                E::Not(g) if matches!(**g, E::Prop(_)) => 0,
                E::Not(g) => 1 + cost(g),
                E::And(a, b) => 1 + cost(a) + cost(b),
                E::Knows(..) => 0,
            }
        }
        fn all(s: &Signature, depth: usize) -> Vec<E> {
            let mut out: Vec<E> = Vec::new();
            for p in s.propositions() {
                out.push(E::prop(p.as_str()));
            }
            if depth == 0 {
                return out;
            }
            let smaller = all(s, depth - 1);
            for f in &smaller {
                out.push(f.clone().not());
                for i in s.agents() {
                    out.push(E::knows(i.as_str(), f.clone()));
                }
                for g in &smaller {
                    out.push(f.clone().and(g.clone()));
                }
            }
            out
        }
        // Each connective adds at most one level of nesting, and `K[i] ~p`
        // adds two, so depth `max + 2` reaches every candidate.
        all(s, max + 2)
            .into_iter()
            .filter(|f| is_restricted(f) && cost(f) <= max)
            .collect()
    }

    #[test]
    fn matches_brute_force_generation() {
        for (props, agents, max) in [
            (&["p"][..], &["a"][..], 1),
            (&["p"][..], &["a"][..], 2),
            (&["p", "q"][..], &["a"][..], 1),
        ] {
            let s = sig(props, agents);
            let got: BTreeSet<E> = enumerate_restricted(&s, max, 1_000_000)
                .unwrap()
                .into_iter()
                .map(RestrictedEpistemicFormula::into_inner)
                .collect();
            assert_eq!(got, oracle(&s, max), "props {props:?} agents {agents:?} max {max}");
        }
    }

    #[test]
    fn output_is_restricted_and_duplicate_free() {
        let s = sig(&["p", "q"], &["a", "b"]);
        let all = enumerate_restricted(&s, 2, 1_000_000).unwrap();
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|f| is_restricted(f)));
        assert_eq!(all, enumerate_restricted(&s, 2, 1_000_000).unwrap());
    }

    fn restricted_ast() -> impl Strategy<Value = E> {
        let literal = (prop::sample::select(vec!["p", "q"]), any::<bool>()).prop_map(|(p, neg)| {
            let f = E::prop(p);
            if neg {
                f.not()
            } else {
                f
            }
        });
        let atom = prop_oneof![
            literal.clone(),
            (prop::sample::select(vec!["a", "b"]), literal).prop_map(|(i, l)| E::knows(i, l)),
        ];
        atom.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(E::not),
                (inner.clone(), inner).prop_map(|(a, b)| a.and(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn closed_under_negation_and_conjunction(f in restricted_ast(), g in restricted_ast()) {
            prop_assert!(is_restricted(&f) && is_restricted(&g));
            prop_assert!(is_restricted(&f.clone().not()));
            prop_assert!(is_restricted(&f.and(g)));
        }
    }
}
