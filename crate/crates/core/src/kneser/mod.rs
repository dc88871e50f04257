//! The Kneser chromatic function `X_{K_{N,k}}` for `k ∈ {1, 2}` in the
//! power sum basis, its evaluation oracles, and the tree classes of its support.

mod admissible;
mod eval;
mod psum;
mod series;
mod trees;

pub use admissible::{count_admissible, is_admissible, AdmissibleWitness};
pub use eval::{alphabet_blocks, direct_eval, orbit_sum, pseries_eval, BlockValues};
pub use psum::{
    admissible_for_subgraph, enumerate_admissible_classes, kneser_psum, lambda_support,
    ComponentDistribution, Expansion, PsumEngine, SupportReport, PSUM_VERTEX_CAP,
};
pub use series::{PClass, PSeries};
pub use trees::{
    augment_tree_lambda, class_profile, lambda_t, lambda_t_tilde, minimal_profile_classes,
    tree_of_form, LAMBDA_T_CAP,
};
