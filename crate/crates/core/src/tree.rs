//! Tree and forest value types.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted so that every derived
//! quantity (edge lists, text output, traversal order) is deterministic.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{ParseError, TreeError};

/// Sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn from_unsorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Sorted adjacency lists plus validation shared by [`Tree`] and [`Forest`].
fn build_adjacency(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, TreeError> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        for v in [a, b] {
            if v >= n {
                return Err(TreeError::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(TreeError::SelfLoop(a));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for (v, list) in adj.iter_mut().enumerate() {
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
        }
    }
    Ok(adj)
}

/// Component label per vertex, labels assigned in order of smallest vertex.
fn component_labels(adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if label[y] == usize::MAX {
                    label[y] = count;
                    queue.push_back(y);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn sorted_edges(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (a, list) in adj.iter().enumerate() {
        for &b in list {
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// A connected acyclic graph on vertices `0..n`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount { n, expected: n - 1, got: edges.len() });
        }
        let adj = build_adjacency(n, edges)?;
        let (_, components) = component_labels(&adj);
        if components != 1 {
            return Err(TreeError::Disconnected);
        }
        Ok(Tree { adj })
    }

    pub fn singleton() -> Self {
        Tree { adj: vec![Vec::new()] }
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self, TreeError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::new(n, &edges)
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Tree::new(k + 1, &edges).expect("star is a tree")
    }

    /// Builds a tree from a parent array; `parent[0]` is ignored (root).
    pub(crate) fn from_parents(parent: &[usize]) -> Self {
        let mut adj = vec![Vec::new(); parent.len()];
        for (v, &p) in parent.iter().enumerate().skip(1) {
            adj[v].push(p);
            adj[p].push(v);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Tree { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        sorted_edges(&self.adj)
    }

    fn check_vertex(&self, v: usize) -> Result<(), TreeError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(TreeError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize, TreeError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Vertices of degree at most one. On `K1` the single vertex is a leaf.
    pub fn leaves(&self) -> VertexSet {
        VertexSet((0..self.n()).filter(|&v| self.adj[v].len() <= 1).collect())
    }

    /// Leaves of the forest left after deleting every leaf; isolated
    /// survivors count as leaves of their component.
    pub fn near_leaves(&self) -> VertexSet {
        let leaves = self.leaves();
        let near = (0..self.n())
            .filter(|&v| !leaves.contains(v))
            .filter(|&v| self.adj[v].iter().filter(|&&w| !leaves.contains(w)).count() <= 1)
            .collect();
        VertexSet(near)
    }

    /// One or two central vertices, found by stripping leaves layer by layer.
    pub fn centers(&self) -> VertexSet {
        let n = self.n();
        if n <= 2 {
            return VertexSet((0..n).collect());
        }
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in &self.adj[v] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        VertexSet::from_unsorted(layer)
    }

    /// Deletes `v` and its edges; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Forest, TreeError> {
        self.check_vertex(v)?;
        if self.n() == 1 {
            return Err(TreeError::DeleteFromSingleton);
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != v)
            .map(|(_, list)| list.iter().filter(|&&y| y != v).map(|&y| shift(y)).collect())
            .collect();
        Ok(Forest { adj })
    }

    /// Adds vertex `n` adjacent only to `w`.
    pub fn attach_leaf(&self, w: usize) -> Result<Tree, TreeError> {
        self.check_vertex(w)?;
        let n = self.n();
        let mut adj = self.adj.clone();
        adj[w].push(n);
        adj.push(vec![w]);
        Ok(Tree { adj })
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
            adj[perm[v]].sort_unstable();
        }
        Tree { adj }
    }

    pub fn as_forest(&self) -> Forest {
        Forest { adj: self.adj.clone() }
    }

    /// Core text format: `n`, then one `a b` line per edge (`a < b`).
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Tree, ParseError> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or_else(|| ParseError::Truncated("missing vertex count".into()))?;
        let nums = parse_numbers(line, header)?;
        let [n] = nums[..] else {
            return Err(syntax(line, "tree header must be a single vertex count"));
        };
        let edges = parse_edges(&mut lines, n, n.saturating_sub(1))?;
        if let Some((line, _)) = lines.next() {
            return Err(syntax(line, "trailing content after edge list"));
        }
        Ok(Tree::new(n, &edges)?)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// An acyclic graph on `0..n`; isolated vertices are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    adj: Vec<Vec<usize>>,
}

impl Forest {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let adj = build_adjacency(n, edges)?;
        let (_, components) = component_labels(&adj);
        // A forest has exactly n - c edges.
        if edges.len() + components != n {
            return Err(TreeError::Cycle);
        }
        Ok(Forest { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        sorted_edges(&self.adj)
    }

    /// Vertex sets of the components, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (label, count) = component_labels(&self.adj);
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            comps[c].push(v);
        }
        comps
    }

    /// Each component as a standalone tree, relabelled order-preservingly.
    pub fn component_trees(&self) -> Vec<Tree> {
        let (label, count) = component_labels(&self.adj);
        let mut local = vec![0usize; self.n()];
        let mut sizes = vec![0usize; count];
        for (v, &c) in label.iter().enumerate() {
            local[v] = sizes[c];
            sizes[c] += 1;
        }
        let mut adjs: Vec<Vec<Vec<usize>>> = sizes.iter().map(|&s| vec![Vec::new(); s]).collect();
        for (v, list) in self.adj.iter().enumerate() {
            adjs[label[v]][local[v]] = list.iter().map(|&w| local[w]).collect();
        }
        adjs.into_iter().map(|adj| Tree { adj }).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && component_labels(&self.adj).1 == 1
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|l| l.is_empty()).count()
    }

    /// The forest as a tree, if it is non-empty and connected.
    pub fn to_tree(&self) -> Option<Tree> {
        self.is_connected().then(|| Tree { adj: self.adj.clone() })
    }

    /// Forest text format: `n m`, then `m` edge lines.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (a, b) in edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Parses the forest format; the single-number tree header is accepted too.
    pub fn parse(text: &str) -> Result<Forest, ParseError> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or_else(|| ParseError::Truncated("missing header".into()))?;
        let nums = parse_numbers(line, header)?;
        let (n, m) = match nums[..] {
            [n, m] => (n, m),
            [n] => (n, n.saturating_sub(1)),
            _ => return Err(syntax(line, "forest header must be `n m`")),
        };
        let edges = parse_edges(&mut lines, n, m)?;
        if let Some((line, _)) = lines.next() {
            return Err(syntax(line, "trailing content after edge list"));
        }
        Ok(Forest::new(n, &edges)?)
    }
}

impl From<&Tree> for Forest {
    fn from(t: &Tree) -> Self {
        t.as_forest()
    }
}

/// Splits a multi-tree document (blocks separated by blank lines) into trees.
pub fn parse_tree_blocks(text: &str) -> Result<Vec<Tree>, ParseError> {
    let mut trees = Vec::new();
    let mut block = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !block.trim().is_empty() {
                trees.push(Tree::parse(&block)?);
            }
            block.clear();
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    Ok(trees)
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn syntax(line: usize, msg: &str) -> ParseError {
    ParseError::Syntax { line, msg: msg.to_string() }
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split(' ')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                Err(syntax(line, &format!("expected decimal integer, got {tok:?}")))
            } else {
                tok.parse().map_err(|_| syntax(line, "integer overflow"))
            }
        })
        .collect()
}

fn parse_edges<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    m: usize,
) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let (line, text) =
            lines.next().ok_or_else(|| ParseError::Truncated(format!("expected {m} edges, found {i}")))?;
        let nums = parse_numbers(line, text)?;
        let [a, b] = nums[..] else {
            return Err(syntax(line, "edge line must be `a b`"));
        };
        if a >= b || b >= n {
            return Err(syntax(line, &format!("edge must satisfy 0 <= a < b < {n}")));
        }
        edges.push((a, b));
    }
    Ok(edges)
}
