//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the canonical-code machinery.

#![allow(dead_code)]

use std::collections::BTreeSet;

use treerecon::Tree;

/// Adjacency matrix of `t`.
pub fn matrix(t: &Tree) -> Vec<Vec<bool>> {
    let n = t.n();
    let mut m = vec![vec![false; n]; n];
    for (a, b) in t.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Calls `found` with every bijection `a -> b` preserving adjacency and
/// non-adjacency. Stops early when `found` returns true.
fn search_isos(a: &[Vec<bool>], b: &[Vec<bool>], found: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        a: &[Vec<bool>],
        b: &[Vec<bool>],
        map: &mut Vec<usize>,
        used: &mut [bool],
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let i = map.len();
        if i == a.len() {
            return found(map);
        }
        for y in 0..b.len() {
            if used[y] {
                continue;
            }
            if (0..i).all(|j| a[i][j] == b[y][map[j]]) {
                used[y] = true;
                map.push(y);
                let stop = go(a, b, map, used, found);
                map.pop();
                used[y] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    if a.len() != b.len() {
        return;
    }
    go(a, b, &mut Vec::with_capacity(a.len()), &mut vec![false; b.len()], found);
}

pub fn brute_isomorphic(a: &Tree, b: &Tree) -> bool {
    let mut any = false;
    search_isos(&matrix(a), &matrix(b), &mut |_| {
        any = true;
        true
    });
    any
}

/// Orbit partition from the full automorphism group, classes sorted.
pub fn brute_orbits(t: &Tree) -> Vec<Vec<usize>> {
    let m = matrix(t);
    let n = t.n();
    let mut reach = vec![BTreeSet::new(); n];
    search_isos(&m, &m, &mut |perm| {
        for (u, &img) in perm.iter().enumerate() {
            reach[u].insert(img);
        }
        false
    });
    let classes: BTreeSet<Vec<usize>> = reach.into_iter().map(|s| s.into_iter().collect()).collect();
    classes.into_iter().collect()
}

/// Quadratic Prüfer decoding, written independently of the library's.
pub fn prufer_tree(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, &edges).unwrap()
}

/// Every labelled tree on `n >= 2` vertices.
pub fn labelled_trees(n: usize) -> Vec<Tree> {
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut k| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            prufer_tree(&seq)
        })
        .collect()
}

/// Number of isomorphism classes among `trees` by pairwise brute force.
pub fn brute_class_count(trees: &[Tree]) -> usize {
    let mut reps: Vec<&Tree> = Vec::new();
    for t in trees {
        if !reps.iter().any(|r| brute_isomorphic(r, t)) {
            reps.push(t);
        }
    }
    reps.len()
}

/// Deterministic pseudo-random permutation of `0..n` (xorshift, seeded).
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        perm.swap(i, (state % (i as u64 + 1)) as usize);
    }
    perm
}
