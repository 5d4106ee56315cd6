//! Library results checked against brute force.

mod common;

use common::*;
use treerecon::canon::{find_isomorphism, free_code, isomorphic, orbits};
use treerecon::enumerate::{enumerate_free_trees, prufer_oracle_codes};
use treerecon::reconstruct::{crn, CrnValue};
use treerecon::structure::{brush_pairs, is_starlike, radial_brush_leaf};
use treerecon::{build_card_index, card, deck_of, subdeck_contained, Config, Forest, Tree};

#[test]
fn four_vertex_labelled_trees_form_two_classes() {
    let all = labelled_trees(4);
    assert_eq!(all.len(), 16);
    assert_eq!(brute_class_count(&all), 2);
    let codes: std::collections::BTreeSet<_> = all.iter().map(free_code).collect();
    assert_eq!(codes.len(), 2);
}

#[test]
fn seven_vertex_trees_number_eleven() {
    // Brute-force classes over all 7^5 labelled trees would be slow; classes
    // with sorted degree labelling are enough to reach every class.
    let sorted: Vec<Tree> = labelled_trees(7)
        .into_iter()
        .filter(|t| (1..7).all(|v| t.degree(v - 1).unwrap() >= t.degree(v).unwrap()))
        .collect();
    assert_eq!(brute_class_count(&sorted), 11);
    assert_eq!(enumerate_free_trees(7).unwrap().count(), 11);
}

#[test]
fn prufer_oracle_matches_brute_force_classes() {
    for n in 2..=6 {
        let brute = brute_class_count(&labelled_trees(n));
        assert_eq!(prufer_oracle_codes(n).unwrap().len(), brute, "n={n}");
    }
}

#[test]
fn code_equality_is_isomorphism_on_labelled_trees() {
    for n in 2..=5 {
        let all = labelled_trees(n);
        let codes: Vec<_> = all.iter().map(free_code).collect();
        for i in 0..all.len() {
            for j in i..all.len() {
                assert_eq!(codes[i] == codes[j], brute_isomorphic(&all[i], &all[j]), "n={n} {i} {j}");
            }
        }
    }
}

#[test]
fn orbits_match_automorphism_group() {
    for n in 1..=8 {
        for t in enumerate_free_trees(n).unwrap() {
            let relabelled = t.relabel(&permutation(n, n as u64 + 17));
            for tree in [&t, &relabelled] {
                let ours: Vec<Vec<usize>> = orbits(tree).classes().iter().map(|c| c.as_slice().to_vec()).collect();
                let mut ours_sorted = ours.clone();
                ours_sorted.sort();
                assert_eq!(ours_sorted, brute_orbits(tree), "tree {}", free_code(tree));
            }
        }
    }
}

#[test]
fn explicit_isomorphisms_preserve_edges() {
    for n in 1..=10 {
        for (k, t) in enumerate_free_trees(n).unwrap().enumerate() {
            let other = t.relabel(&permutation(n, k as u64 * 31 + n as u64));
            let map = find_isomorphism(&t, &other).unwrap();
            assert!(map.is_isomorphism(&t, &other));
            let image: Vec<_> = {
                let mut e: Vec<_> = t
                    .edges()
                    .into_iter()
                    .map(|(a, b)| {
                        let (x, y) = (map.image(a), map.image(b));
                        (x.min(y), x.max(y))
                    })
                    .collect();
                e.sort();
                e
            };
            assert_eq!(image, other.edges());
        }
    }
}

#[test]
fn brute_force_agrees_on_random_eight_vertex_pairs() {
    let trees: Vec<Tree> = enumerate_free_trees(8).unwrap().collect();
    let mut pool = trees.clone();
    pool.extend(trees.iter().enumerate().map(|(i, t)| t.relabel(&permutation(8, i as u64 + 5))));
    for a in &pool {
        for b in &pool {
            assert_eq!(isomorphic(a, b), brute_isomorphic(a, b));
        }
    }
}

#[test]
fn p6_deletions_show_it_is_not_starlike() {
    let p6 = Tree::path(6).unwrap();
    for v in 0..6 {
        let f: Forest = p6.delete_vertex(v).unwrap();
        assert!(f.components().iter().any(|c| c.len() > 2), "vertex {v}");
    }
    assert!(!is_starlike(&p6).unwrap());
}

#[test]
fn p6_crn_is_two_by_exhaustive_search() {
    // Oracle: try every card and every pair of cards of P6 against the raw
    // decks of all six trees.
    let universe: Vec<Tree> = enumerate_free_trees(6).unwrap().collect();
    let p6 = Tree::path(6).unwrap();
    let me = free_code(&p6);
    let own = deck_of(&p6).unwrap();
    let others: Vec<_> = universe.iter().filter(|t| free_code(t) != me).map(|t| deck_of(t).unwrap()).collect();
    let unique = |cards: &[treerecon::CanonCode]| others.iter().all(|d| !subdeck_contained(cards, d));
    let cards = own.cards();
    assert!(!cards.iter().any(|c| unique(std::slice::from_ref(c))));
    let mut pair_found = false;
    for i in 0..cards.len() {
        for j in i + 1..cards.len() {
            pair_found |= unique(&[cards[i].clone(), cards[j].clone()]);
        }
    }
    assert!(pair_found);
    let idx = build_card_index(6, &Config::default()).unwrap();
    assert_eq!(crn(&p6, &idx).unwrap().value, CrnValue::Exactly(2));
}

#[test]
fn p3_card_index_at_order_four_by_hand() {
    // Both 4-vertex trees have a P3 card: path minus an end, star minus a leaf.
    let p3 = free_code(&Tree::path(3).unwrap());
    let path_has = (0..4).any(|v| card(&Tree::path(4).unwrap(), v).unwrap() == p3);
    let star_has = (0..4).any(|v| card(&Tree::star(3), v).unwrap() == p3);
    assert!(path_has && star_has);
    let idx = build_card_index(4, &Config::default()).unwrap();
    assert_eq!(idx.trees_with_card(&p3).len(), 2);
}

#[test]
fn radial_pair_exists_for_every_non_star() {
    for n in 4..=10 {
        for t in enumerate_free_trees(n).unwrap() {
            let star = (0..n).any(|v| t.degree(v).unwrap() == n - 1);
            let radial = radial_brush_leaf(&t);
            assert_eq!(radial.is_some(), !star, "tree {}", free_code(&t));
            if let Some(pair) = radial {
                assert!(brush_pairs(&t).unwrap().contains(&pair));
            }
        }
    }
}
