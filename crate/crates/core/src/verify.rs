//! Exhaustive suites over every free tree of one order.
//!
//! Trees are relabelled to the preorder numbering of their free code before
//! any suite runs, so a descriptor `tree=<code> a=3` can be replayed with
//! [`crate::canon::tree_from_code`]. Every suite shards the universe across
//! `config.jobs` workers and merges into ordered maps, so reports are
//! byte-identical for any worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::canon::{free_code, similar_after_deletion_check, tree_from_code, CanonCode, VertexKind};
use crate::config::Config;
use crate::deck::{build_card_index, card, deck_of, subdeck_contained, CardIndex};
use crate::enumerate::enumerate_free_trees_with_cap;
use crate::error::EnumerateError;
use crate::par::{shard_fold, sharded_map};
use crate::reconstruct::{crn, CrnResult, CrnValue};
use crate::structure::{brush_pairs, brush_root_of, is_starlike};
use crate::tree::Tree;

/// Outcome of one suite at one order. An empty violation list means the
/// claim held for every tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub suite: String,
    pub n: usize,
    pub trees: usize,
    /// Extra `key=value` statistics, printed after the header fields.
    pub stats: Vec<(String, String)>,
    pub violations: Vec<String>,
}

impl ViolationReport {
    fn new(suite: &str, n: usize, trees: usize) -> Self {
        ViolationReport { suite: suite.to_string(), n, trees, stats: Vec::new(), violations: Vec::new() }
    }

    pub fn count(&self) -> usize {
        self.violations.len()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Header line followed by one indented line per violation.
    pub fn render(&self) -> String {
        let mut out = format!("suite={} n={} trees={}", self.suite, self.n, self.trees);
        for (k, v) in &self.stats {
            let _ = write!(out, " {k}={v}");
        }
        let _ = writeln!(out, " violations={}", self.count());
        for v in &self.violations {
            let _ = writeln!(out, "  {v}");
        }
        out
    }
}

fn check_order(n: usize, min: usize, config: &Config) -> Result<(), EnumerateError> {
    if n < min || n > config.cap {
        return Err(EnumerateError::OrderOutOfRange { n, min, max: config.cap });
    }
    Ok(())
}

/// Every free tree on `n` vertices, numbered in the preorder of its free code,
/// sorted by code.
pub fn canonical_universe(n: usize, config: &Config) -> Result<Vec<Tree>, EnumerateError> {
    let trees: Vec<Tree> = enumerate_free_trees_with_cap(n, config.cap)?.collect();
    let mut coded: Vec<(CanonCode, Tree)> = sharded_map(&trees, config.jobs, |t| {
        let code = free_code(t);
        let canon = tree_from_code(code.as_str()).expect("free codes decode");
        (code, canon)
    });
    coded.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(coded.into_iter().map(|(_, t)| t).collect())
}

fn merge_sets<K: Ord, V: Ord>(parts: Vec<BTreeMap<K, BTreeSet<V>>>) -> BTreeMap<K, BTreeSet<V>> {
    let mut all = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            all.entry(k).or_insert_with(BTreeSet::new).extend(v);
        }
    }
    all
}

/// Groups trees by the card pair `(T - u, T - v)` over all brush pairs `(u, v)`;
/// a key shared by two non-isomorphic trees contradicts unique reconstruction.
pub fn verify_theorem_main(n: usize, config: &Config) -> Result<ViolationReport, EnumerateError> {
    check_order(n, 4, config)?;
    let universe = canonical_universe(n, config)?;
    let parts = shard_fold(&universe, config.jobs, |shard| {
        let mut map: BTreeMap<(CanonCode, CanonCode), BTreeSet<CanonCode>> = BTreeMap::new();
        let mut pairs = 0usize;
        for t in shard {
            let code = free_code(t);
            for (u, v) in brush_pairs(t).expect("n >= 4") {
                pairs += 1;
                let key = (card(t, u).expect("in range"), card(t, v).expect("in range"));
                map.entry(key).or_default().insert(code.clone());
            }
        }
        (map, pairs)
    });
    let pairs: usize = parts.iter().map(|p| p.1).sum();
    let map = merge_sets(parts.into_iter().map(|p| p.0).collect());
    let mut report = ViolationReport::new("thm-main", n, universe.len());
    report.stats.push(("brush_pairs".into(), pairs.to_string()));
    report.stats.push(("keys".into(), map.len().to_string()));
    for ((cu, cv), trees) in &map {
        if trees.len() > 1 {
            let list: Vec<&str> = trees.iter().map(CanonCode::as_str).collect();
            report.violations.push(format!("card_u={cu} card_v={cv} trees={}", list.join(",")));
        }
    }
    Ok(report)
}

/// Leaves (or near-leaves) with isomorphic cards that are not similar.
pub fn verify_hp0(n: usize, kind: VertexKind, config: &Config) -> Result<ViolationReport, EnumerateError> {
    check_order(n, 3, config)?;
    let universe = canonical_universe(n, config)?;
    let per_tree = sharded_map(&universe, config.jobs, |t| {
        let pairs = similar_after_deletion_check(t, kind).expect("n >= 3");
        let checked = kind.vertices(t).len();
        (free_code(t), pairs, checked)
    });
    let mut report = ViolationReport::new(&format!("hp0-{}", kind.name()), n, universe.len());
    let vertices: usize = per_tree.iter().map(|p| p.2).sum();
    report.stats.push(("vertices".into(), vertices.to_string()));
    for (code, pairs, _) in per_tree {
        for (a, b) in pairs {
            report.violations.push(format!("tree={code} a={a} b={b}"));
        }
    }
    Ok(report)
}

/// crn of every tree in the universe, in universe order.
fn all_crn(universe: &[Tree], index: &CardIndex, config: &Config) -> Vec<CrnResult> {
    sharded_map(universe, config.jobs, |t| crn(t, index).expect("index covers the universe"))
}

fn join_codes(codes: &[CanonCode]) -> String {
    codes.iter().map(CanonCode::as_str).collect::<Vec<_>>().join(",")
}

/// Trees where `crn = 1` and "starlike" disagree.
pub fn verify_remark(n: usize, config: &Config) -> Result<ViolationReport, EnumerateError> {
    check_order(n, 3, config)?;
    let universe = canonical_universe(n, config)?;
    let index = build_card_index(n, config)?;
    let results = all_crn(&universe, &index, config);
    let mut report = ViolationReport::new("remark", n, universe.len());
    let starlike_count = universe.iter().filter(|t| is_starlike(t).expect("n >= 3")).count();
    report.stats.push(("starlike".into(), starlike_count.to_string()));
    for (t, r) in universe.iter().zip(&results) {
        let starlike = is_starlike(t).expect("n >= 3");
        if (r.value == CrnValue::Exactly(1)) != starlike {
            report.violations.push(format!("tree={} crn={} starlike={starlike}", free_code(t), r.value));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    /// Violations are trees with `crn >= 3`.
    pub report: ViolationReport,
    pub histogram: BTreeMap<CrnValue, usize>,
}

impl ConjectureReport {
    pub fn max_crn(&self) -> Option<CrnValue> {
        self.histogram.keys().next_back().copied()
    }

    /// Trees beyond the upper bound of three.
    pub fn above_three(&self) -> usize {
        self.histogram.get(&CrnValue::ExceedsThree).copied().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        let mut out = self.report.render();
        let hist: Vec<String> = self.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let max = self.max_crn().map_or_else(|| "none".to_string(), |m| m.to_string());
        let _ = writeln!(out, "histogram n={} {} max={max}", self.report.n, hist.join(" "));
        out
    }
}

pub fn check_conjecture(n: usize, config: &Config) -> Result<ConjectureReport, EnumerateError> {
    check_order(n, 3, config)?;
    let universe = canonical_universe(n, config)?;
    let index = build_card_index(n, config)?;
    let results = all_crn(&universe, &index, config);
    let mut histogram = BTreeMap::new();
    let mut report = ViolationReport::new("conjecture", n, universe.len());
    for (t, r) in universe.iter().zip(&results) {
        *histogram.entry(r.value).or_insert(0) += 1;
        if r.value != CrnValue::Exactly(1) && r.value != CrnValue::Exactly(2) {
            report.violations.push(format!("tree={} crn={} witness={}", free_code(t), r.value, join_codes(&r.witness)));
        }
    }
    Ok(ConjectureReport { report, histogram })
}

/// Per-tree crn lines for the `crn` command.
pub fn crn_table(n: usize, config: &Config) -> Result<Vec<(CanonCode, CrnResult)>, EnumerateError> {
    check_order(n, 3, config)?;
    let universe = canonical_universe(n, config)?;
    let index = build_card_index(n, config)?;
    let results = all_crn(&universe, &index, config);
    Ok(universe.iter().map(free_code).zip(results).collect())
}

/// Two cards shared by the decks of several non-isomorphic trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AmbiguousFamily {
    /// Sorted card multiset of size two.
    pub cards: Vec<CanonCode>,
    /// Sorted tree codes, at least two.
    pub trees: Vec<CanonCode>,
}

impl AmbiguousFamily {
    /// Recomputes every deck from the decoded trees and checks containment.
    pub fn reverify(&self) -> bool {
        self.trees.len() >= 2
            && self.trees.windows(2).all(|w| w[0] != w[1])
            && self.trees.iter().all(|code| {
                let Ok(t) = tree_from_code(code.as_str()) else { return false };
                free_code(&t) == *code && deck_of(&t).is_ok_and(|d| subdeck_contained(&self.cards, &d))
            })
    }

    pub fn render(&self) -> String {
        format!("cards={} trees={}", join_codes(&self.cards), join_codes(&self.trees))
    }
}

pub fn search_ambiguous_pairs(n: usize, config: &Config) -> Result<Vec<AmbiguousFamily>, EnumerateError> {
    check_order(n, 4, config)?;
    let index = build_card_index(n, config)?;
    Ok(index
        .pairs()
        .iter()
        .filter(|(_, trees)| trees.len() >= 2)
        .map(|((a, b), trees)| AmbiguousFamily { cards: vec![a.clone(), b.clone()], trees: trees.clone() })
        .collect())
}

/// Trees `P`, `Q` with brush pair `(u, v)` in `P`, brush leaf `u2` in `Q`
/// whose brush root is not `v2`, `P - u ≅ Q - u2`, `P - v ≅ Q - v2`, and
/// `P ≇ Q`. Vertex ids follow the preorder numbering of each code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NonrecognizableWitness {
    pub p: CanonCode,
    pub q: CanonCode,
    pub u: usize,
    pub v: usize,
    pub u2: usize,
    pub v2: usize,
}

impl NonrecognizableWitness {
    /// Replays every condition on freshly decoded trees.
    pub fn reverify(&self) -> bool {
        let (Ok(p), Ok(q)) = (tree_from_code(self.p.as_str()), tree_from_code(self.q.as_str())) else {
            return false;
        };
        let n = p.n();
        if q.n() != n || [self.u, self.v].iter().any(|&x| x >= n) || [self.u2, self.v2].iter().any(|&x| x >= n) {
            return false;
        }
        let brush_in_p = brush_root_of(&p, self.u) == Some(self.v);
        let Some(root_q) = brush_root_of(&q, self.u2) else { return false };
        let cards_match =
            card(&p, self.u).ok() == card(&q, self.u2).ok() && card(&p, self.v).ok() == card(&q, self.v2).ok();
        brush_in_p && root_q != self.v2 && self.v2 != self.u2 && cards_match && free_code(&p) != free_code(&q)
    }

    /// `v2` is adjacent to `u2` exactly when it is the root of `u2`'s brush.
    pub fn adjacent_in_q(&self) -> bool {
        tree_from_code(self.q.as_str()).is_ok_and(|q| q.neighbors(self.u2).contains(&self.v2))
    }

    pub fn render(&self) -> String {
        format!("P={} Q={} u={} v={} u'={} v'={}", self.p, self.q, self.u, self.v, self.u2, self.v2)
    }
}

pub fn search_nonrecognizable(n: usize, config: &Config) -> Result<Vec<NonrecognizableWitness>, EnumerateError> {
    check_order(n, 4, config)?;
    let universe = canonical_universe(n, config)?;
    type Key = (CanonCode, CanonCode);
    let parts = shard_fold(&universe, config.jobs, |shard| {
        let mut map: BTreeMap<Key, BTreeSet<(CanonCode, usize, usize)>> = BTreeMap::new();
        for t in shard {
            let code = free_code(t);
            for (u, v) in brush_pairs(t).expect("n >= 4") {
                let key = (card(t, u).expect("in range"), card(t, v).expect("in range"));
                map.entry(key).or_default().insert((code.clone(), u, v));
            }
        }
        map
    });
    let by_key = merge_sets(parts);
    let found = shard_fold(&universe, config.jobs, |shard| {
        let mut out = Vec::new();
        for q in shard {
            let q_code = free_code(q);
            for (u2, root) in brush_pairs(q).expect("n >= 4") {
                let card_u = card(q, u2).expect("in range");
                for v2 in (0..q.n()).filter(|&x| x != u2 && x != root) {
                    let key = (card_u.clone(), card(q, v2).expect("in range"));
                    let Some(hits) = by_key.get(&key) else { continue };
                    for (p_code, u, v) in hits.iter().filter(|h| h.0 != q_code) {
                        out.push(NonrecognizableWitness { p: p_code.clone(), q: q_code.clone(), u: *u, v: *v, u2, v2 });
                    }
                }
            }
        }
        out
    });
    let mut all: Vec<NonrecognizableWitness> = found.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// First order in `from..=to` where `search` returns something.
pub fn smallest_order<T>(
    from: usize,
    to: usize,
    mut search: impl FnMut(usize) -> Result<Vec<T>, EnumerateError>,
) -> Result<Option<(usize, Vec<T>)>, EnumerateError> {
    for n in from..=to {
        let hits = search(n)?;
        if !hits.is_empty() {
            return Ok(Some((n, hits)));
        }
    }
    Ok(None)
}
