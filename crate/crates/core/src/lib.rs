//! Reconstruction of trees from vertex-deleted subgraphs.
//!
//! The crate covers cards and decks of trees, canonical codes and vertex
//! orbits, brushes, reconstruction of a tree from the two cards obtained by
//! deleting a brush leaf and its root, class reconstruction numbers, and
//! exhaustive verification suites over all free trees of a given order.

pub mod canon;
pub mod config;
pub mod deck;
pub mod enumerate;
pub mod error;
pub mod par;
pub mod reconstruct;
pub mod structure;
pub mod tree;
pub mod verify;

#[doc(hidden)]
pub mod cli;

pub use canon::{
    find_isomorphism, forest_code, free_code, isomorphic, orbits, rooted_code, similar_after_deletion_check, CanonCode,
    Canonical, OrbitPartition, VertexKind, VertexMapping,
};
pub use config::Config;
pub use deck::{build_card_index, card, deck_of, subdeck_contained, CardIndex, Deck};
pub use enumerate::{enumerate_free_trees, enumerate_free_trees_with_cap, prufer_oracle_count, TreeStream};
pub use error::{CanonError, EnumerateError, ParseError, ReconstructError, TreeError};
pub use reconstruct::{crn, reconstruct_from_brush_cards, BrushCardPair, CrnResult, CrnValue};
pub use structure::{brush_pairs, find_brushes, is_starlike, radial_brush_leaf, Brush};
pub use tree::{Forest, Tree, VertexSet};
