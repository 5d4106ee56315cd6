//! Exactly-once generation of unlabelled free trees.
//!
//! Every free tree is rooted at its centroid. A unicentroidal tree is a root
//! carrying a multiset of rooted subtrees, each smaller than `n / 2`; a
//! bicentroidal tree is an unordered pair of rooted trees on `n / 2`
//! vertices joined by an edge. Rooted trees come from a catalogue sorted by
//! (size, code), and multisets are walked as non-increasing index sequences,
//! so every class is produced once and the order is fixed for each `n`.

use std::collections::BTreeSet;

use crate::canon::{free_code, rooted_code, CanonCode};
use crate::error::EnumerateError;
use crate::tree::Tree;

pub const DEFAULT_CAP: usize = 20;

/// Largest order accepted by [`prufer_oracle_count`].
pub const PRUFER_ORACLE_MAX: usize = 10;

/// Rooted trees by non-decreasing size; each stored as a preorder parent array.
struct Catalogue {
    sizes: Vec<usize>,
    parents: Vec<Vec<usize>>,
}

impl Catalogue {
    fn up_to(max_size: usize) -> Self {
        let mut cat = Catalogue { sizes: Vec::new(), parents: Vec::new() };
        for size in 1..=max_size {
            let mut batch: Vec<(CanonCode, Vec<usize>)> = Picks::new(&cat.sizes, cat.sizes.len(), size - 1)
                .map(|picks| {
                    let parent = cat.assemble(&picks);
                    let code = rooted_code(&Tree::from_parents(&parent), 0).expect("root exists");
                    (code, parent)
                })
                .collect();
            batch.sort();
            for (_, parent) in batch {
                cat.sizes.push(size);
                cat.parents.push(parent);
            }
        }
        cat
    }

    /// Number of entries with size at most `s`.
    fn count_up_to(&self, s: usize) -> usize {
        self.sizes.partition_point(|&x| x <= s)
    }

    /// Parent array of a root carrying the picked subtrees.
    fn assemble(&self, picks: &[usize]) -> Vec<usize> {
        let mut parent = vec![0];
        for &i in picks {
            let offset = parent.len();
            parent.push(0);
            parent.extend(self.parents[i].iter().skip(1).map(|&p| p + offset));
        }
        parent
    }
}

/// Non-increasing index sequences over a size-sorted catalogue, below
/// `limit`, whose sizes sum to `total`. Emitted in decreasing lexicographic
/// order.
struct Picks {
    sizes: Vec<usize>,
    limit: usize,
    stack: Vec<usize>,
    state: PickState,
}

#[derive(PartialEq)]
enum PickState {
    Fresh(usize),
    Running,
    Done,
}

impl Picks {
    fn new(sizes: &[usize], limit: usize, total: usize) -> Self {
        Picks { sizes: sizes.to_vec(), limit, stack: Vec::new(), state: PickState::Fresh(total) }
    }

    /// Greedy completion with the largest admissible indices. Index 0 is the
    /// single vertex, so a completion exists whenever the catalogue is non-empty.
    fn fill(&mut self, mut rem: usize, mut last: usize) {
        while rem > 0 {
            let j = last.min(self.sizes.partition_point(|&s| s <= rem) - 1);
            self.stack.push(j);
            rem -= self.sizes[j];
            last = j;
        }
    }
}

impl Iterator for Picks {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        match self.state {
            PickState::Done => return None,
            PickState::Fresh(total) => {
                if total > 0 && self.limit == 0 {
                    self.state = PickState::Done;
                    return None;
                }
                self.state = PickState::Running;
                if total > 0 {
                    self.fill(total, self.limit - 1);
                }
                return Some(self.stack.clone());
            }
            PickState::Running => {}
        }
        let mut rem = 0;
        while let Some(p) = self.stack.pop() {
            rem += self.sizes[p];
            if p > 0 {
                let q = p - 1;
                self.stack.push(q);
                self.fill(rem - self.sizes[q], q);
                return Some(self.stack.clone());
            }
        }
        self.state = PickState::Done;
        None
    }
}

/// Stream of all free trees on `n` vertices, one per isomorphism class.
pub struct TreeStream {
    n: usize,
    catalogue: Catalogue,
    unicentroidal: Picks,
    /// Catalogue offset and count of the rooted trees on `n / 2` vertices,
    /// and the next pair `(i, j)`, `i <= j`.
    bicentroidal: Option<(usize, usize, usize, usize)>,
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }

    fn next_bicentroidal(&mut self) -> Option<Tree> {
        let (lo, width, i, j) = self.bicentroidal?;
        if i >= width {
            self.bicentroidal = None;
            return None;
        }
        let (ni, nj) = if j + 1 < width { (i, j + 1) } else { (i + 1, i + 1) };
        self.bicentroidal = Some((lo, width, ni, nj));
        let left = &self.catalogue.parents[lo + i];
        let right = &self.catalogue.parents[lo + j];
        let offset = left.len();
        let mut parent = left.clone();
        parent.push(0);
        parent.extend(right.iter().skip(1).map(|&p| p + offset));
        Some(Tree::from_parents(&parent))
    }
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        match self.unicentroidal.next() {
            Some(picks) => Some(Tree::from_parents(&self.catalogue.assemble(&picks))),
            None => self.next_bicentroidal(),
        }
    }
}

pub fn enumerate_free_trees(n: usize) -> Result<TreeStream, EnumerateError> {
    enumerate_free_trees_with_cap(n, DEFAULT_CAP)
}

pub fn enumerate_free_trees_with_cap(n: usize, cap: usize) -> Result<TreeStream, EnumerateError> {
    if n < 1 || n > cap {
        return Err(EnumerateError::OrderOutOfRange { n, min: 1, max: cap });
    }
    let catalogue = Catalogue::up_to(n / 2);
    let limit = catalogue.count_up_to((n - 1) / 2);
    let bicentroidal = n.is_multiple_of(2).then(|| {
        let lo = catalogue.count_up_to(n / 2 - 1);
        (lo, catalogue.count_up_to(n / 2) - lo, 0, 0)
    });
    let unicentroidal = Picks::new(&catalogue.sizes, limit, n - 1);
    Ok(TreeStream { n, catalogue, unicentroidal, bicentroidal })
}

/// Number of free trees on `n` vertices.
pub fn count_free_trees(n: usize, cap: usize) -> Result<usize, EnumerateError> {
    Ok(enumerate_free_trees_with_cap(n, cap)?.count())
}

/// Decodes a Prüfer sequence over `0..n` into a labelled tree on `n` vertices.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some leaf");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    Tree::new(n, &edges).expect("Prüfer sequences decode to trees")
}

/// Free codes of all classes reached by Prüfer sequences on `n` labels.
///
/// Every sequence is visited. Only those whose labelling lists degrees in
/// non-increasing order are decoded: each class has such a labelling, so the
/// resulting set of classes is unchanged.
pub fn prufer_oracle_codes(n: usize) -> Result<BTreeSet<CanonCode>, EnumerateError> {
    if !(2..=PRUFER_ORACLE_MAX).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange { n, min: 2, max: PRUFER_ORACLE_MAX });
    }
    let len = n - 2;
    let mut codes = BTreeSet::new();
    let mut seq = vec![0usize; len];
    let mut counts = vec![0usize; n];
    counts[0] = len;
    loop {
        if counts.windows(2).all(|w| w[0] >= w[1]) {
            codes.insert(free_code(&prufer_decode(&seq)));
        }
        // Odometer step, least significant digit last.
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(codes);
            }
            pos -= 1;
            counts[seq[pos]] -= 1;
            if seq[pos] + 1 < n {
                seq[pos] += 1;
                counts[seq[pos]] += 1;
                break;
            }
            seq[pos] = 0;
            counts[0] += 1;
        }
    }
}

pub fn prufer_oracle_count(n: usize) -> Result<usize, EnumerateError> {
    Ok(prufer_oracle_codes(n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(n: usize) -> usize {
        count_free_trees(n, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(counts(1), 1);
        assert_eq!(counts(2), 1);
        assert_eq!(counts(3), 1);
        assert_eq!(counts(4), 2);
        assert_eq!(counts(5), 3);
        assert_eq!(counts(6), 6);
    }

    #[test]
    fn seven_matches_prufer() {
        assert_eq!(counts(7), prufer_oracle_count(7).unwrap());
        assert_eq!(counts(7), 11);
    }

    #[test]
    fn prufer_small() {
        assert_eq!(prufer_oracle_count(2).unwrap(), 1);
        assert_eq!(prufer_oracle_count(3).unwrap(), 1);
        assert_eq!(prufer_oracle_count(4).unwrap(), 2);
        assert!(prufer_oracle_count(11).is_err());
        assert!(prufer_oracle_count(1).is_err());
    }

    #[test]
    fn prufer_decode_known() {
        // [3, 3, 3] on 5 labels: star centred at 3.
        let t = prufer_decode(&[3, 3, 3]);
        assert_eq!(t.degree(3).unwrap(), 4);
        assert_eq!(prufer_decode(&[]).edges(), vec![(0, 1)]);
        assert_eq!(prufer_decode(&[1, 2]).edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(21).is_err());
        assert!(enumerate_free_trees_with_cap(21, 21).is_ok());
        assert!(enumerate_free_trees_with_cap(5, 4).is_err());
    }

    #[test]
    fn picks_cover_partitions() {
        // Catalogue with only single vertices: one sequence per total.
        let sizes = [1];
        assert_eq!(Picks::new(&sizes, 1, 3).collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        let sizes = [1, 2, 3, 3];
        let all: Vec<_> = Picks::new(&sizes, 4, 3).collect();
        assert_eq!(all, vec![vec![3], vec![2], vec![1, 0], vec![0, 0, 0]]);
        assert_eq!(Picks::new(&sizes, 0, 2).count(), 0);
        assert_eq!(Picks::new(&sizes, 0, 0).count(), 1);
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate_free_trees(9).unwrap().collect();
        let b: Vec<_> = enumerate_free_trees(9).unwrap().collect();
        assert_eq!(a, b);
    }
}
