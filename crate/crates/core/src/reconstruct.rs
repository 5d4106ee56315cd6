//! Reconstruction from the two cards of a brush leaf and its root, and the
//! class reconstruction number of a tree among trees of the same order.

use std::fmt;

use crate::canon::{forest_code, free_code, orbits, rooted_code, CanonCode};
use crate::deck::{deck_of, subdeck_contained, CardIndex};
use crate::error::ReconstructError;
use crate::structure::brush_at;
use crate::tree::{Forest, Tree};

/// Claimed cards `T - u` and `T - v`, with `u` a brush leaf and `v` its root.
///
/// Whether the cards really arise this way cannot be read off the cards
/// themselves; reconstruction simply fails when they do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrushCardPair {
    card_u: Tree,
    card_v: Forest,
}

impl BrushCardPair {
    pub fn new(card_u: &Forest, card_v: &Forest) -> Result<Self, ReconstructError> {
        if card_u.n() != card_v.n() {
            return Err(ReconstructError::CardOrderMismatch { u: card_u.n(), v: card_v.n() });
        }
        let tree =
            card_u.to_tree().ok_or_else(|| ReconstructError::CardUNotTree { components: card_u.components().len() })?;
        Ok(BrushCardPair { card_u: tree, card_v: card_v.clone() })
    }

    pub fn card_u(&self) -> &Tree {
        &self.card_u
    }

    pub fn card_v(&self) -> &Forest {
        &self.card_v
    }
}

/// Candidate trees obtained by attaching a leaf at one vertex per orbit of
/// `card_u` (orbits ordered by rooted code), kept when the new vertex is a
/// brush leaf whose root deletes to `card_v`.
pub fn accepted_candidates(pair: &BrushCardPair) -> Vec<Tree> {
    let base = &pair.card_u;
    let target = forest_code(&pair.card_v);
    let orbit = orbits(base);
    let reps = orbit.representatives_by(|w| rooted_code(base, w).expect("in range"));
    reps.into_iter()
        .filter_map(|w| {
            let cand = base.attach_leaf(w).expect("representative in range");
            // The new leaf hangs off w, so w is the only possible brush root.
            brush_at(&cand, w)?;
            let card = forest_code(&cand.delete_vertex(w).expect("order >= 2"));
            (card == target).then_some(cand)
        })
        .collect()
}

pub fn reconstruct_from_brush_cards(pair: &BrushCardPair, checked: bool) -> Result<Tree, ReconstructError> {
    let mut candidates = accepted_candidates(pair);
    if candidates.is_empty() {
        return Err(ReconstructError::NoCandidate);
    }
    if checked {
        let mut classes: Vec<CanonCode> = candidates.iter().map(free_code).collect();
        classes.sort();
        classes.dedup();
        if classes.len() > 1 {
            return Err(ReconstructError::MultipleCandidates { classes: classes.len() });
        }
    }
    Ok(candidates.swap_remove(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrnValue {
    Exactly(usize),
    ExceedsThree,
}

impl fmt::Display for CrnValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrnValue::Exactly(k) => write!(f, "{k}"),
            CrnValue::ExceedsThree => f.write_str(">3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrnResult {
    pub value: CrnValue,
    /// Smallest sub-multiset of the deck (in code order) that no other tree's
    /// deck contains; empty when the value exceeds three.
    pub witness: Vec<CanonCode>,
}

/// Sub-multisets of size `k` drawn from `(code, multiplicity)` pairs, each
/// emitted as a sorted list, in lexicographic order.
fn sub_multisets(counts: &[(&CanonCode, usize)], k: usize, mut visit: impl FnMut(&[CanonCode]) -> bool) -> bool {
    fn go(
        counts: &[(&CanonCode, usize)],
        start: usize,
        k: usize,
        used: &mut Vec<usize>,
        chosen: &mut Vec<CanonCode>,
        visit: &mut dyn FnMut(&[CanonCode]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return visit(chosen);
        }
        for i in start..counts.len() {
            if used[i] < counts[i].1 {
                used[i] += 1;
                chosen.push(counts[i].0.clone());
                let stop = go(counts, i, k, used, chosen, visit);
                chosen.pop();
                used[i] -= 1;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    go(counts, 0, k, &mut vec![0; counts.len()], &mut Vec::with_capacity(k), &mut visit)
}

/// Smallest number of cards of `t` that no other tree of the same order
/// shares, with the lexicographically first witness.
pub fn crn(t: &Tree, index: &CardIndex) -> Result<CrnResult, ReconstructError> {
    if t.n() <= 2 {
        return Err(ReconstructError::DegenerateOrder(t.n()));
    }
    if t.n() != index.n() {
        return Err(ReconstructError::OrderMismatch { index: index.n(), tree: t.n() });
    }
    let me = free_code(t);
    let deck = index.deck(&me).ok_or(ReconstructError::NotInUniverse)?;
    let counts = deck.counts();
    for k in 1..=3 {
        let mut witness = None;
        sub_multisets(&counts, k, |cards| {
            let holders = index.trees_containing(cards);
            if holders.len() == 1 && holders[0] == me {
                witness = Some(cards.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(witness) = witness {
            return Ok(CrnResult { value: CrnValue::Exactly(k), witness });
        }
    }
    Ok(CrnResult { value: CrnValue::ExceedsThree, witness: Vec::new() })
}

/// Checks a crn witness against raw trees, without consulting any index:
/// the witness lies in `t`'s deck and in no other deck among `universe`.
pub fn witness_is_unique(t: &Tree, witness: &[CanonCode], universe: &[Tree]) -> bool {
    let me = free_code(t);
    let Ok(own) = deck_of(t) else { return false };
    subdeck_contained(witness, &own)
        && universe
            .iter()
            .filter(|o| free_code(o) != me)
            .all(|o| deck_of(o).map_or(true, |d| !subdeck_contained(witness, &d)))
}
