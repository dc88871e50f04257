//! Kneser chromatic functions `X_{K_{N,k}}` (`k ∈ {1, 2}`) of small graphs,
//! minimum degree sequences of trees, and reconstruction of a tree from the
//! support of its `k = 2` invariant.
//!
//! Evaluation is generic over the coefficient ring ([`Scalar`]); the aliases
//! below fix the common choices.

pub mod canon;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod kneser;
pub mod reconstruction;
pub mod scalar;
pub mod tree_invariants;

pub use canon::{are_isomorphic, Canonize, CanonicalForm};
pub use enumerate::{enumerate_graphs, enumerate_trees};
pub use error::{Error, Graph6Error, Result};
pub use graph::{Lambda, Multigraph, SimpleGraph};
pub use graph6::{parse_graph6, write_graph6};
pub use kneser::{kneser_psum, PClass, PSeries};
pub use scalar::{Residue, Scalar, MERSENNE_61};
pub use tree_invariants::{DegreeProfile, RootedOrder};

/// Residues modulo the 61-bit Mersenne prime, used for fingerprints and
/// randomized identity checks.
pub type Residue61 = Residue<MERSENNE_61>;
/// Block values over [`Residue61`].
pub type ResidueValues = kneser::BlockValues<Residue61>;
/// Exact integer block values.
pub type IntegerValues = kneser::BlockValues<num_bigint::BigInt>;
