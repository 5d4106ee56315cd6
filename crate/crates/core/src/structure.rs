//! Brushes and related structural predicates.
//!
//! A brush is a star `K_{1,k}` (`k >= 1`) whose `k` outer vertices are leaves
//! of the tree and whose root has exactly one further neighbour, which is not
//! a leaf. The brush at a root is maximal: it takes every leaf neighbour.

use crate::error::TreeError;
use crate::tree::{Tree, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Brush {
    pub root: usize,
    pub leaves: VertexSet,
}

impl Brush {
    pub fn k(&self) -> usize {
        self.leaves.len()
    }
}

fn is_leaf(t: &Tree, v: usize) -> bool {
    t.neighbors(v).len() == 1
}

/// The brush rooted at `r`, if any.
pub fn brush_at(t: &Tree, r: usize) -> Option<Brush> {
    if t.n() < 3 || r >= t.n() {
        return None;
    }
    let (leaves, others): (Vec<usize>, Vec<usize>) = t.neighbors(r).iter().partition(|&&w| is_leaf(t, w));
    (!leaves.is_empty() && others.len() == 1).then(|| Brush { root: r, leaves: VertexSet::from_unsorted(leaves) })
}

/// All brushes, sorted by root.
pub fn find_brushes(t: &Tree) -> Result<Vec<Brush>, TreeError> {
    if t.n() < 3 {
        return Err(TreeError::TooSmall { needed: 3, n: t.n() });
    }
    Ok((0..t.n()).filter_map(|r| brush_at(t, r)).collect())
}

/// Every `(brush leaf, brush root)` pair, sorted.
pub fn brush_pairs(t: &Tree) -> Result<Vec<(usize, usize)>, TreeError> {
    let mut pairs: Vec<(usize, usize)> =
        find_brushes(t)?.into_iter().flat_map(|b| b.leaves.into_vec().into_iter().map(move |u| (u, b.root))).collect();
    pairs.sort_unstable();
    Ok(pairs)
}

/// Root of the brush containing leaf `u`, if `u` is a brush leaf.
pub fn brush_root_of(t: &Tree, u: usize) -> Option<usize> {
    if u >= t.n() || !is_leaf(t, u) {
        return None;
    }
    let r = t.neighbors(u)[0];
    brush_at(t, r).map(|b| b.root)
}

/// True iff deleting some vertex leaves only `K1` and `K2` components.
pub fn is_starlike(t: &Tree) -> Result<bool, TreeError> {
    if t.n() < 2 {
        return Err(TreeError::TooSmall { needed: 2, n: t.n() });
    }
    Ok((0..t.n()).any(|u| starlike_center(t, u)))
}

/// Every component of `t - u` has at most two vertices.
pub fn starlike_center(t: &Tree, u: usize) -> bool {
    t.neighbors(u).iter().all(|&w| t.neighbors(w).iter().all(|&x| x == u || is_leaf(t, x)) && t.neighbors(w).len() <= 2)
}

/// Distances from `s`, BFS parent pointers, and the BFS order.
fn bfs(t: &Tree, s: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = t.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![s];
    dist[s] = 0;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in t.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                order.push(y);
            }
        }
    }
    (dist, parent, order)
}

/// The lexicographically smallest longest path, as a vertex sequence.
pub fn smallest_longest_path(t: &Tree) -> Vec<usize> {
    let diameter = (0..t.n()).map(|s| *bfs(t, s).0.iter().max().expect("non-empty")).max().expect("non-empty");
    let start = (0..t.n()).find(|&s| bfs(t, s).0.contains(&diameter)).expect("diameter realised");
    let (dist, parent, order) = bfs(t, start);
    // Height of each vertex's subtree when rooted at `start`.
    let mut height = vec![0usize; t.n()];
    for &x in order.iter().rev() {
        if x != start {
            let p = parent[x];
            height[p] = height[p].max(height[x] + 1);
        }
    }
    let mut path = vec![start];
    let mut x = start;
    while dist[x] < diameter {
        x = t
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| parent[y] == x && dist[y] + height[y] == diameter)
            .min()
            .expect("longest path continues");
        path.push(x);
    }
    path
}

/// End vertex of a longest path and its neighbour, which roots a brush
/// containing it. `None` for stars and trees on fewer than 4 vertices.
pub fn radial_brush_leaf(t: &Tree) -> Option<(usize, usize)> {
    if t.n() < 4 {
        return None;
    }
    let path = smallest_longest_path(t);
    let (u, v) = (*path.first()?, *path.get(1)?);
    (brush_root_of(t, u) == Some(v)).then_some((u, v))
}
