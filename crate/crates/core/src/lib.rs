//! Sigma index toolkit.
//!
//! Exact degree-based topological indices (σ, irr, F, M1, M2, H, σ_t),
//! degree-sequence machinery (tree realizability, caterpillar realization,
//! Prüfer codes), a registry of degree-sequence bound expressions for σ,
//! and an exhaustive tree enumerator that audits those bounds against the
//! true value of σ.
//!
//! ```
//! use sigma_index::graph::Graph;
//! use sigma_index::indices::{compute_index, IndexKind};
//!
//! let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
//! assert_eq!(compute_index(IndexKind::Sigma, &star).as_integer(), Some(12.into()));
//! ```

pub mod bounds;
pub mod degseq;
pub mod error;
pub mod graph;
pub mod indices;
pub mod oracle;
pub mod par;
pub mod report;

pub use error::{Error, Result};

/// Exact rational used for every non-integer index and bound value.
pub type Rational = num_rational::BigRational;
