//! Prüfer-like coding of forests of labelled rooted `b`-uniform hypertrees.
//!
//! A forest with `s` hyperedges and `k + 1` roots on `n = s(b−1) + k + 1`
//! vertices is coded by a 4-tuple `(R, r, P, N)`; [`encode_forest`] and
//! [`decode_code`] are mutually inverse. On top of the bijection the crate
//! provides exact counting formulas ([`counting`]), brute-force enumerators
//! to check them against ([`oracle`]), a rank/unrank order on the code space
//! ([`rank`]) and uniform sampling ([`sample`]).

pub mod codec;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod hypergraph;
pub mod oracle;
pub mod rank;
pub mod report;
pub mod sample;
pub mod shape;

pub use codec::{decode_code, encode_forest, validate_code, ForestCode};
pub use counting::{ExactCount, ExactRational, HypercycleForm};
pub use error::{Error, Result};
pub use hypergraph::{
    component_decomposition, leaf_blocks, validate_forest, Hyperedge, Hypergraph, LeafBlock, RootedForest,
    VertexId,
};
pub use rank::{generate_ids, rank_code, unrank_code, CodeIndex};
pub use report::{ValidationReport, Violation};
pub use sample::{sample_forest, ForestSampler, Seed};
pub use shape::ForestShape;
