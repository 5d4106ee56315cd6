//! Canonical codes, isomorphism and vertex similarity.
//!
//! A rooted tree encodes as `(` + its children's codes in sorted order + `)`
//! (AHU). Codes are ordered shortest first, then byte-wise; that order is
//! used for children, for forest components and for every sorted list of
//! codes in the crate. A free tree is encoded from its center (the smaller
//! code wins for bicentral trees) and a forest joins its component codes
//! with `;`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{CanonError, TreeError};
use crate::tree::{Forest, Tree, VertexSet};

/// Separator between component codes in a forest code.
pub const FOREST_SEPARATOR: char = ';';

/// ASCII balanced-parenthesis code identifying a tree or forest up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CanonCode(String);

impl CanonCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Wraps a raw string without validation; decode with
    /// [`tree_from_code`] / [`forest_from_code`] to check it.
    pub fn from_raw(s: impl Into<String>) -> Self {
        CanonCode(s.into())
    }

    /// Number of vertices described by the code.
    pub fn vertex_count(&self) -> usize {
        self.0.bytes().filter(|&b| b == b'(').count()
    }
}

fn shortlex(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.as_bytes().cmp(b.as_bytes()))
}

impl Ord for CanonCode {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.0, &other.0)
    }
}

impl PartialOrd for CanonCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Anything with a canonical code: trees use [`free_code`], forests [`forest_code`].
pub trait Canonical {
    fn canon(&self) -> CanonCode;
}

impl Canonical for Tree {
    fn canon(&self) -> CanonCode {
        free_code(self)
    }
}

impl Canonical for Forest {
    fn canon(&self) -> CanonCode {
        forest_code(self)
    }
}

/// BFS parent pointers and visiting order from `root`.
fn bfs_from(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                order.push(y);
            }
        }
    }
    (parent, order)
}

/// Code of every subtree when `t` is rooted at `root`, plus parent pointers.
fn subtree_codes(t: &Tree, root: usize) -> (Vec<String>, Vec<usize>) {
    let adj = t.adjacency();
    let (parent, order) = bfs_from(adj, root);
    let mut codes = vec![String::new(); adj.len()];
    for &x in order.iter().rev() {
        let mut kids: Vec<&str> = adj[x].iter().filter(|&&y| y != parent[x]).map(|&y| codes[y].as_str()).collect();
        kids.sort_unstable_by(|a, b| shortlex(a, b));
        let mut code = String::with_capacity(2 + kids.iter().map(|k| k.len()).sum::<usize>());
        code.push('(');
        for k in kids {
            code.push_str(k);
        }
        code.push(')');
        codes[x] = code;
    }
    (codes, parent)
}

pub fn rooted_code(t: &Tree, root: usize) -> Result<CanonCode, TreeError> {
    t.degree(root)?;
    let (mut codes, _) = subtree_codes(t, root);
    Ok(CanonCode(std::mem::take(&mut codes[root])))
}

/// Center used for the free code and the rooted code it yields.
fn canonical_root(t: &Tree) -> (usize, CanonCode) {
    t.centers()
        .iter()
        .map(|c| (c, rooted_code(t, c).expect("center in range")))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("tree has a center")
}

pub fn free_code(t: &Tree) -> CanonCode {
    canonical_root(t).1
}

pub fn forest_code(f: &Forest) -> CanonCode {
    let mut parts: Vec<CanonCode> = f.component_trees().iter().map(free_code).collect();
    parts.sort_unstable();
    let joined: Vec<&str> = parts.iter().map(CanonCode::as_str).collect();
    CanonCode(joined.join(&FOREST_SEPARATOR.to_string()))
}

pub fn isomorphic<A: Canonical + ?Sized, B: Canonical + ?Sized>(a: &A, b: &B) -> bool {
    a.canon() == b.canon()
}

/// Rebuilds a tree from a rooted or free code; vertices are numbered in preorder.
pub fn tree_from_code(code: &str) -> Result<Tree, CanonError> {
    let bad = || CanonError::MalformedCode(code.to_string());
    let bytes = code.as_bytes();
    if bytes.first() != Some(&b'(') {
        return Err(bad());
    }
    let mut parent = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => {
                if i > 0 && stack.is_empty() {
                    return Err(bad());
                }
                parent.push(stack.last().copied().unwrap_or(0));
                stack.push(parent.len() - 1);
            }
            b')' => {
                stack.pop().ok_or_else(bad)?;
            }
            _ => return Err(bad()),
        }
    }
    if !stack.is_empty() {
        return Err(bad());
    }
    Ok(Tree::from_parents(&parent))
}

/// Rebuilds a forest from a forest code; components are laid out in code order.
pub fn forest_from_code(code: &str) -> Result<Forest, CanonError> {
    if code.is_empty() {
        return Ok(Forest::new(0, &[]).expect("empty forest"));
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for part in code.split(FOREST_SEPARATOR) {
        let t = tree_from_code(part).map_err(|_| CanonError::MalformedCode(code.to_string()))?;
        edges.extend(t.edges().into_iter().map(|(a, b)| (a + offset, b + offset)));
        offset += t.n();
    }
    Ok(Forest::new(offset, &edges).expect("components are trees"))
}

/// Partition of the vertices into automorphism orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl OrbitPartition {
    /// Classes ordered by their smallest vertex.
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn similar(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Smallest vertex of each class, classes sorted by `key`.
    pub fn representatives_by<K: Ord>(&self, mut key: impl FnMut(usize) -> K) -> Vec<usize> {
        let mut reps: Vec<(K, usize)> = self.classes.iter().map(|c| c.as_slice()[0]).map(|v| (key(v), v)).collect();
        reps.sort();
        reps.into_iter().map(|(_, v)| v).collect()
    }
}

/// Orbits of `t`: two vertices are similar iff the tree rooted at each has the same code.
pub fn orbits(t: &Tree) -> OrbitPartition {
    let codes: Vec<CanonCode> = (0..t.n()).map(|v| rooted_code(t, v).expect("in range")).collect();
    orbits_from_rooted_codes(&codes)
}

fn orbits_from_rooted_codes(codes: &[CanonCode]) -> OrbitPartition {
    let mut first_seen: BTreeMap<&CanonCode, usize> = BTreeMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; codes.len()];
    for (v, code) in codes.iter().enumerate() {
        let c = *first_seen.entry(code).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[c].push(v);
        class_of[v] = c;
    }
    OrbitPartition { classes: members.into_iter().map(VertexSet::from_unsorted).collect(), class_of }
}

/// Bijection `source vertex -> target vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMapping(Vec<usize>);

impl VertexMapping {
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// True iff the map is a bijection carrying the edge set of `a` exactly onto that of `b`.
    pub fn is_isomorphism(&self, a: &Tree, b: &Tree) -> bool {
        if a.n() != b.n() || self.0.len() != a.n() {
            return false;
        }
        let mut seen = vec![false; b.n()];
        for &y in &self.0 {
            if y >= b.n() || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        let mut mapped: Vec<(usize, usize)> =
            a.edges().into_iter().map(|(x, y)| (self.0[x].min(self.0[y]), self.0[x].max(self.0[y]))).collect();
        mapped.sort_unstable();
        mapped == b.edges()
    }
}

/// Explicit isomorphism from `a` to `b`, built by pairing children with equal codes.
pub fn find_isomorphism(a: &Tree, b: &Tree) -> Result<VertexMapping, CanonError> {
    let (ra, ca) = canonical_root(a);
    let (rb, cb) = canonical_root(b);
    if ca != cb {
        return Err(CanonError::NotIsomorphic);
    }
    let (codes_a, parent_a) = subtree_codes(a, ra);
    let (codes_b, parent_b) = subtree_codes(b, rb);
    let sorted_children = |t: &Tree, codes: &[String], parent: &[usize], x: usize| {
        let mut kids: Vec<usize> = t.neighbors(x).iter().copied().filter(|&y| y != parent[x]).collect();
        kids.sort_by(|&p, &q| shortlex(&codes[p], &codes[q]));
        kids
    };
    let mut map = vec![usize::MAX; a.n()];
    let mut stack = vec![(ra, rb)];
    while let Some((x, y)) = stack.pop() {
        map[x] = y;
        let kx = sorted_children(a, &codes_a, &parent_a, x);
        let ky = sorted_children(b, &codes_b, &parent_b, y);
        debug_assert_eq!(kx.len(), ky.len());
        stack.extend(kx.into_iter().zip(ky));
    }
    Ok(VertexMapping(map))
}

/// Which vertices [`similar_after_deletion_check`] compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Leaf,
    NearLeaf,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Leaf => "leaf",
            VertexKind::NearLeaf => "near-leaf",
        }
    }

    pub fn vertices(self, t: &Tree) -> VertexSet {
        match self {
            VertexKind::Leaf => t.leaves(),
            VertexKind::NearLeaf => t.near_leaves(),
        }
    }
}

/// Pairs `(a, b)`, `a < b`, of the given kind whose cards are isomorphic
/// although `a` and `b` lie in different orbits. Expected to be empty for
/// every tree.
pub fn similar_after_deletion_check(t: &Tree, kind: VertexKind) -> Result<Vec<(usize, usize)>, TreeError> {
    if t.n() < 3 {
        return Err(TreeError::TooSmall { needed: 3, n: t.n() });
    }
    let orbit = orbits(t);
    let candidates = kind.vertices(t);
    let cards: Vec<(usize, CanonCode)> =
        candidates.iter().map(|v| Ok((v, forest_code(&t.delete_vertex(v)?)))).collect::<Result<_, TreeError>>()?;
    let mut violations = Vec::new();
    for (i, (a, ca)) in cards.iter().enumerate() {
        for (b, cb) in &cards[i + 1..] {
            if ca == cb && !orbit.similar(*a, *b) {
                violations.push((*a, *b));
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> CanonCode {
        CanonCode::from_raw(s)
    }

    #[test]
    fn rooted_codes() {
        let p3 = Tree::path(3).unwrap();
        assert_eq!(rooted_code(&Tree::singleton(), 0).unwrap(), code("()"));
        assert_eq!(rooted_code(&p3, 1).unwrap(), code("(()())"));
        assert_eq!(rooted_code(&p3, 0).unwrap(), code("((()))"));
        assert!(rooted_code(&p3, 3).is_err());
    }

    #[test]
    fn free_codes() {
        assert_eq!(free_code(&Tree::path(2).unwrap()), code("(())"));
        assert_eq!(free_code(&Tree::path(4).unwrap()), code("(()(()))"));
        assert_eq!(free_code(&Tree::star(3)), code("(()()())"));
    }

    #[test]
    fn forest_codes() {
        let p3 = Tree::path(3).unwrap();
        assert_eq!(forest_code(&p3.delete_vertex(1).unwrap()), code("();()"));
        assert_eq!(forest_code(&Tree::path(4).unwrap().delete_vertex(1).unwrap()), code("();(())"));
        assert_eq!(forest_code(&p3.as_forest()), code("(()())"));
    }

    #[test]
    fn code_order_is_shortest_first() {
        let mut v = vec![code("(())"), code("()"), code("(()())"), code("((()))")];
        v.sort();
        assert_eq!(v, vec![code("()"), code("(())"), code("((()))"), code("(()())")]);
    }

    #[test]
    fn isomorphism_basics() {
        let p4 = Tree::path(4).unwrap();
        let relabelled = p4.relabel(&[2, 0, 3, 1]);
        assert!(isomorphic(&p4, &relabelled));
        assert!(!isomorphic(&p4, &Tree::star(3)));
        assert!(isomorphic(&p4, &p4.as_forest()));
    }

    #[test]
    fn decode_round_trip() {
        for s in ["()", "(())", "(()(()))", "((()())(()()))"] {
            let t = tree_from_code(s).unwrap();
            assert_eq!(t.n(), s.len() / 2);
            assert_eq!(rooted_code(&t, 0).unwrap(), code(s));
        }
        let f = forest_from_code("();();(())").unwrap();
        assert_eq!((f.n(), f.edge_count()), (4, 1));
        assert_eq!(forest_code(&f), code("();();(())"));
        for bad in ["", "(", "())", "()()", "(x)", ")("] {
            assert!(tree_from_code(bad).is_err(), "{bad}");
        }
        assert!(forest_from_code("();").is_err());
    }

    #[test]
    fn orbit_examples() {
        let p4 = orbits(&Tree::path(4).unwrap());
        let classes: Vec<_> = p4.classes().iter().map(|c| c.as_slice().to_vec()).collect();
        assert_eq!(classes, vec![vec![0, 3], vec![1, 2]]);
        let star = orbits(&Tree::star(3));
        let classes: Vec<_> = star.classes().iter().map(|c| c.as_slice().to_vec()).collect();
        assert_eq!(classes, vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn explicit_isomorphisms() {
        let p2 = Tree::path(2).unwrap();
        assert!(find_isomorphism(&p2, &p2).unwrap().is_isomorphism(&p2, &p2));
        let p4 = Tree::path(4).unwrap();
        let rev = p4.relabel(&[3, 2, 1, 0]);
        assert!(find_isomorphism(&p4, &rev).unwrap().is_isomorphism(&p4, &rev));
        assert_eq!(find_isomorphism(&p4, &Tree::star(3)), Err(CanonError::NotIsomorphic));
    }

    #[test]
    fn mapping_check_rejects_bad_maps() {
        let p4 = Tree::path(4).unwrap();
        assert!(!VertexMapping(vec![0, 2, 1, 3]).is_isomorphism(&p4, &p4));
        assert!(!VertexMapping(vec![0, 0, 1, 2]).is_isomorphism(&p4, &p4));
    }

    #[test]
    fn hp0_on_p5() {
        let p5 = Tree::path(5).unwrap();
        assert!(similar_after_deletion_check(&p5, VertexKind::Leaf).unwrap().is_empty());
        assert!(similar_after_deletion_check(&p5, VertexKind::NearLeaf).unwrap().is_empty());
        assert!(similar_after_deletion_check(&Tree::path(2).unwrap(), VertexKind::Leaf).is_err());
    }
}
