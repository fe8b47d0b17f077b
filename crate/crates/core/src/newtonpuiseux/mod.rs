//! Newton-Puiseux expansions at curve points, `A_n` classification and the
//! local braid exponents predicted from it.

mod classify;
mod expand;
mod quad;

pub use classify::{
    classify_simple_singularity, local_braid_exponent, local_singularity, SingularityLabel, SingularityType,
};
pub use expand::{puiseux_expansions, PuiseuxBranch};
pub use quad::{rational_nth_root, rational_roots, AlgebraicNumber, QuadNumber};
