use alloc::string::String;
use alloc::vec::Vec;

use crate::kripke::ArgumentModel;
use crate::{Error, IdSet};

/// Canonical text for a set of names: `{x,y,z}` in the given order.
pub fn set_id<'a>(members: impl IntoIterator<Item = &'a str>) -> String {
    let mut out = String::from("{");
    for (k, m) in members.into_iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(m);
    }
    out.push('}');
    out
}

/// Sorts argument sets by their canonical text, members listed in
/// declaration order.
pub fn sort_canonically(sets: &mut [IdSet], names: &[String]) {
    sets.sort_by_cached_key(|s| set_id(s.iter().map(|u| names[u].as_str())));
}

/// The strength preorder on arguments: `u ≤ v` iff every argument that `v`
/// attacks (with respect to any proposition) is also attacked by `u`.
/// Smaller means at least as strong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    up: Vec<IdSet>,
}

impl Preorder {
    /// Builds from explicit up-sets; `up[u]` must be `{v : u ≤ v}`.
    pub fn from_up_sets(up: Vec<IdSet>) -> Self {
        Preorder { up }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.up[u].contains(v)
    }

    pub fn equivalent(&self, u: usize, v: usize) -> bool {
        self.leq(u, v) && self.leq(v, u)
    }

    /// `{v : u ≤ v}`
    pub fn up_set(&self, u: usize) -> &IdSet {
        &self.up[u]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(u, up)| up.iter().map(move |v| (u, v)))
    }

    /// Classes of mutually ≤-related arguments, ordered by first member.
    pub fn classes(&self) -> Vec<IdSet> {
        let n = self.len();
        let mut seen = IdSet::empty(n);
        let mut out = Vec::new();
        for u in 0..n {
            if seen.contains(u) {
                continue;
            }
            let class = IdSet::from_indices(n, (u..n).filter(|&v| self.equivalent(u, v)));
            seen.union_with(&class);
            out.push(class);
        }
        out
    }

    /// Classes with nothing strictly below them.
    pub fn minimal_classes(&self) -> Vec<IdSet> {
        self.classes()
            .into_iter()
            .filter(|c| {
                let m = c.first().expect("classes are nonempty");
                (0..self.len()).all(|u| !self.leq(u, m) || self.leq(m, u))
            })
            .collect()
    }

    /// Covering pairs `(lower, upper)` between classes (indices into
    /// [`classes`](Self::classes)): lower strictly below upper with no class
    /// strictly in between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let classes = self.classes();
        let reps: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
        let below = |a: usize, b: usize| self.leq(reps[a], reps[b]) && !self.leq(reps[b], reps[a]);
        let k = reps.len();
        let mut edges = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if below(a, b) && !(0..k).any(|c| below(a, c) && below(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }
}

pub fn compute_preorder(model: &ArgumentModel) -> Preorder {
    let n = model.argument_count();
    let props = model.signature().propositions().len();
    // targets[p][v]: arguments that v attacks with respect to p
    let mut targets = alloc::vec![alloc::vec![IdSet::empty(n); n]; props];
    for (p, per_prop) in targets.iter_mut().enumerate() {
        for (w, v) in model.attacks(p).pairs() {
            per_prop[v].insert(w);
        }
    }
    let up = (0..n)
        .map(|u| IdSet::from_indices(n, (0..n).filter(|&v| targets.iter().all(|t| t[v].is_subset(&t[u])))))
        .collect();
    Preorder { up }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    None,
    /// A filter equal to the whole carrier.
    Filter,
    /// A proper filter contained in a strictly larger filter.
    ProperFilter,
    Ultrafilter,
}

impl Classification {
    pub fn is_filter(self) -> bool {
        self != Classification::None
    }

    pub fn is_ultrafilter(self) -> bool {
        self == Classification::Ultrafilter
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArgumentSet {
    pub members: IdSet,
    pub classification: Classification,
}

fn is_filter(candidate: &IdSet, order: &Preorder) -> bool {
    if candidate.is_empty() {
        return false;
    }
    let upward_closed = candidate.iter().all(|u| order.up_set(u).is_subset(candidate));
    upward_closed
        && candidate.iter().all(|u| {
            candidate
                .iter()
                .all(|v| candidate.iter().any(|w| order.leq(w, u) && order.leq(w, v)))
        })
}

/// All filters of the preorder: the up-sets of single arguments, without
/// repeats, ordered by their least member index.
///
/// A finite filter contains a lower bound of all its members (directedness
/// applied repeatedly), so by upward closure it is the up-set of that bound.
pub fn enumerate_filters(order: &Preorder) -> Vec<IdSet> {
    order
        .classes()
        .iter()
        .map(|c| order.up_set(c.first().unwrap()).clone())
        .collect()
}

/// Tests the filter axioms in order (nonempty, upward closed, directed),
/// then properness, then maximality against every filter of the preorder.
pub fn classify_set(candidate: &IdSet, order: &Preorder) -> ArgumentSet {
    let classification = if !is_filter(candidate, order) {
        Classification::None
    } else if candidate.is_full() {
        Classification::Filter
    } else if enumerate_filters(order)
        .iter()
        .any(|f| f != candidate && candidate.is_subset(f))
    {
        Classification::ProperFilter
    } else {
        Classification::Ultrafilter
    };
    ArgumentSet {
        members: candidate.clone(),
        classification,
    }
}

/// Ultrafilters of a preorder, unordered.
///
/// Filters are the up-sets `↑m`, and `↑m ⊂ ↑m'` exactly when `m'` lies
/// strictly below `m`, so the maximal filters are the up-sets of minimal
/// classes. With a single minimal class its up-set is the whole carrier,
/// which is a filter, so no proper filter is maximal.
pub(crate) fn ultrafilters_of(order: &Preorder) -> Vec<IdSet> {
    let minimal = order.minimal_classes();
    if minimal.len() < 2 {
        return Vec::new();
    }
    minimal
        .iter()
        .map(|c| order.up_set(c.first().unwrap()).clone())
        .collect()
}

fn check_cap(model: &ArgumentModel, cap: usize) -> Result<(), Error> {
    let n = model.argument_count();
    if n > cap {
        return Err(Error::SizeCap {
            what: "argument model",
            size: n,
            cap,
        });
    }
    Ok(())
}

/// Every ultrafilter over the model's strength preorder, once each, sorted
/// by canonical text.
pub fn enumerate_ultrafilters(model: &ArgumentModel, cap: usize) -> Result<Vec<ArgumentSet>, Error> {
    check_cap(model, cap)?;
    let order = compute_preorder(model);
    let mut sets = ultrafilters_of(&order);
    sort_canonically(&mut sets, model.arguments());
    Ok(sets
        .into_iter()
        .map(|members| ArgumentSet {
            members,
            classification: Classification::Ultrafilter,
        })
        .collect())
}

/// A model is trivial when its strength preorder has no ultrafilter.
pub fn is_trivial(model: &ArgumentModel, cap: usize) -> Result<bool, Error> {
    Ok(enumerate_ultrafilters(model, cap)?.is_empty())
}
