//! Cards, decks and card indexes over the universe of trees of one order.

use std::collections::BTreeMap;

use crate::canon::{forest_code, free_code, CanonCode};
use crate::config::Config;
use crate::enumerate::enumerate_free_trees_with_cap;
use crate::error::{EnumerateError, TreeError};
use crate::par::{shard_fold, sharded_map};
use crate::tree::Tree;

/// The card `T - v` as a forest code.
pub fn card(t: &Tree, v: usize) -> Result<CanonCode, TreeError> {
    Ok(forest_code(&t.delete_vertex(v)?))
}

/// Multiset of cards, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Deck {
    cards: Vec<CanonCode>,
}

impl Deck {
    pub fn from_cards(mut cards: Vec<CanonCode>) -> Self {
        cards.sort();
        Deck { cards }
    }

    pub fn cards(&self) -> &[CanonCode] {
        &self.cards
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn multiplicity(&self, code: &CanonCode) -> usize {
        let lo = self.cards.partition_point(|c| c < code);
        let hi = self.cards.partition_point(|c| c <= code);
        hi - lo
    }

    /// Distinct cards with their multiplicities, in code order.
    pub fn counts(&self) -> Vec<(&CanonCode, usize)> {
        let mut out: Vec<(&CanonCode, usize)> = Vec::new();
        for c in &self.cards {
            match out.last_mut() {
                Some((last, k)) if *last == c => *k += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
}

pub fn deck_of(t: &Tree) -> Result<Deck, TreeError> {
    if t.n() < 2 {
        return Err(TreeError::TooSmall { needed: 2, n: t.n() });
    }
    let cards = (0..t.n()).map(|v| card(t, v)).collect::<Result<_, _>>()?;
    Ok(Deck::from_cards(cards))
}

/// Multiset containment of `sub` in `deck`.
pub fn subdeck_contained(sub: &[CanonCode], deck: &Deck) -> bool {
    let mut sub = sub.to_vec();
    sub.sort();
    let mut i = 0;
    for c in &sub {
        while i < deck.cards.len() && deck.cards[i] < *c {
            i += 1;
        }
        if i == deck.cards.len() || deck.cards[i] != *c {
            return false;
        }
        i += 1;
    }
    true
}

type SingleMap = BTreeMap<CanonCode, Vec<CanonCode>>;
type PairMap = BTreeMap<(CanonCode, CanonCode), Vec<CanonCode>>;

/// Which trees of a fixed order carry a given card, or a given pair of cards.
///
/// Pair keys are ordered `(a, b)` with `a <= b`; `(c, c)` is present only for
/// trees holding at least two copies of `c`. Values are sorted tree codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardIndex {
    n: usize,
    decks: BTreeMap<CanonCode, Deck>,
    single: SingleMap,
    pairs: PairMap,
}

fn index_shard(decks: &[(CanonCode, Deck)]) -> (SingleMap, PairMap) {
    let mut single = SingleMap::new();
    let mut pairs = PairMap::new();
    for (tree, deck) in decks {
        let counts = deck.counts();
        for (i, &(a, ka)) in counts.iter().enumerate() {
            single.entry(a.clone()).or_default().push(tree.clone());
            if ka >= 2 {
                pairs.entry((a.clone(), a.clone())).or_default().push(tree.clone());
            }
            for &(b, _) in &counts[i + 1..] {
                pairs.entry((a.clone(), b.clone())).or_default().push(tree.clone());
            }
        }
    }
    (single, pairs)
}

fn merge_into<K: Ord>(into: &mut BTreeMap<K, Vec<CanonCode>>, from: BTreeMap<K, Vec<CanonCode>>) {
    for (k, v) in from {
        into.entry(k).or_default().extend(v);
    }
}

impl CardIndex {
    /// Indexes the given trees, which must all have order `n` and be pairwise
    /// non-isomorphic.
    pub fn from_trees(n: usize, trees: &[Tree], jobs: usize) -> Result<CardIndex, TreeError> {
        if n < 2 {
            return Err(TreeError::TooSmall { needed: 2, n });
        }
        if let Some(t) = trees.iter().find(|t| t.n() != n) {
            return Err(TreeError::TooSmall { needed: n, n: t.n() });
        }
        let decks: Vec<(CanonCode, Deck)> =
            sharded_map(trees, jobs, |t| (free_code(t), deck_of(t).expect("order checked")));
        let mut single = SingleMap::new();
        let mut pairs = PairMap::new();
        for (s, p) in shard_fold(&decks, jobs, index_shard) {
            merge_into(&mut single, s);
            merge_into(&mut pairs, p);
        }
        for list in single.values_mut().chain(pairs.values_mut()) {
            list.sort();
            list.dedup();
        }
        Ok(CardIndex { n, decks: decks.into_iter().collect(), single, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tree_count(&self) -> usize {
        self.decks.len()
    }

    /// Tree codes and their decks, in code order.
    pub fn decks(&self) -> impl Iterator<Item = (&CanonCode, &Deck)> {
        self.decks.iter()
    }

    pub fn deck(&self, tree: &CanonCode) -> Option<&Deck> {
        self.decks.get(tree)
    }

    pub fn single(&self) -> &BTreeMap<CanonCode, Vec<CanonCode>> {
        &self.single
    }

    pub fn pairs(&self) -> &BTreeMap<(CanonCode, CanonCode), Vec<CanonCode>> {
        &self.pairs
    }

    pub fn trees_with_card(&self, c: &CanonCode) -> &[CanonCode] {
        self.single.get(c).map_or(&[], Vec::as_slice)
    }

    pub fn trees_with_pair(&self, a: &CanonCode, b: &CanonCode) -> &[CanonCode] {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        self.pairs.get(&key).map_or(&[], Vec::as_slice)
    }

    /// Trees whose deck contains the multiset `cards`, in code order.
    pub fn trees_containing(&self, cards: &[CanonCode]) -> Vec<CanonCode> {
        match cards {
            [] => self.decks.keys().cloned().collect(),
            [a] => self.trees_with_card(a).to_vec(),
            [a, b] => self.trees_with_pair(a, b).to_vec(),
            _ => {
                let shortest =
                    cards.iter().map(|c| self.trees_with_card(c)).min_by_key(|l| l.len()).expect("non-empty");
                shortest.iter().filter(|t| subdeck_contained(cards, &self.decks[*t])).cloned().collect()
            }
        }
    }
}

/// Card index over every free tree on `n` vertices.
pub fn build_card_index(n: usize, config: &Config) -> Result<CardIndex, EnumerateError> {
    let max = config.cap;
    if n < 2 || n > max {
        return Err(EnumerateError::OrderOutOfRange { n, min: 2, max });
    }
    let trees: Vec<Tree> = enumerate_free_trees_with_cap(n, max)?.collect();
    Ok(CardIndex::from_trees(n, &trees, config.jobs).expect("enumerated trees have order n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> CanonCode {
        CanonCode::from_raw(s)
    }

    #[test]
    fn cards() {
        let p3 = Tree::path(3).unwrap();
        assert_eq!(card(&p3, 1).unwrap(), code("();()"));
        assert_eq!(card(&Tree::star(3), 2).unwrap(), code("(()())"));
        assert_eq!(card(&Tree::path(4).unwrap(), 1).unwrap(), code("();(())"));
        assert!(card(&p3, 5).is_err());
    }

    #[test]
    fn decks() {
        let d = deck_of(&Tree::path(3).unwrap()).unwrap();
        assert_eq!(d.cards(), &[code("(())"), code("(())"), code("();()")]);
        let s = deck_of(&Tree::star(3)).unwrap();
        assert_eq!(s.multiplicity(&code("(()())")), 3);
        assert_eq!(s.multiplicity(&code("();();()")), 1);
        assert_eq!(s.len(), 4);
        assert!(deck_of(&Tree::singleton()).is_err());
    }

    #[test]
    fn containment() {
        let d = deck_of(&Tree::path(3).unwrap()).unwrap();
        let p2 = code("(())");
        assert!(subdeck_contained(&[p2.clone(), p2.clone()], &d));
        assert!(!subdeck_contained(&[p2.clone(), p2.clone(), p2.clone()], &d));
        assert!(subdeck_contained(&[], &d));
        assert!(!subdeck_contained(&[code("()")], &d));
    }

    #[test]
    fn index_order_three_and_four() {
        let cfg = Config::default();
        let idx = build_card_index(3, &cfg).unwrap();
        assert_eq!(idx.tree_count(), 1);
        assert!(idx.single().values().all(|v| v == &[code("(()())")]));

        let idx = build_card_index(4, &cfg).unwrap();
        let p3 = code("(()())");
        assert_eq!(idx.trees_with_card(&p3), &[code("(()(()))"), code("(()()())")]);
        // Only the star has three P3 cards; the path has exactly two.
        assert_eq!(idx.trees_containing(&[p3.clone(), p3.clone(), p3.clone()]), vec![code("(()()())")]);
        assert_eq!(idx.trees_with_pair(&p3, &p3).len(), 2);
        assert!(build_card_index(1, &cfg).is_err());
    }
}
