use alloc::vec;
use alloc::vec::Vec;

/// A binary relation over `0..len`, stored as sorted successor lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    successors: Vec<Vec<usize>>,
}

impl Relation {
    pub fn empty(len: usize) -> Self {
        Relation {
            successors: vec![Vec::new(); len],
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(len: usize, pairs: I) -> Self {
        let mut rel = Self::empty(len);
        for (a, b) in pairs {
            rel.successors[a].push(b);
        }
        for s in &mut rel.successors {
            s.sort_unstable();
            s.dedup();
        }
        rel
    }

    /// Builds from successor lists that are already sorted and duplicate free.
    pub(crate) fn from_sorted_successors(successors: Vec<Vec<usize>>) -> Self {
        debug_assert!(successors.iter().all(|s| s.windows(2).all(|w| w[0] < w[1])));
        Relation { successors }
    }

    pub fn len(&self) -> usize {
        self.successors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.successors.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.successors.get(a).is_some_and(|s| s.binary_search(&b).is_ok())
    }

    pub fn successors(&self, a: usize) -> &[usize] {
        &self.successors[a]
    }

    pub fn pair_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.iter().map(move |&b| (a, b)))
    }
}
