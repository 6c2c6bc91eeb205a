//! Exact rational linear algebra: kernels, minimal polynomials, primary
//! (Fitting) splitting, and finite-dimensional algebra structure. No floating
//! point anywhere.

mod algebra;
mod mat;
pub mod poly;

pub use algebra::{
    find_splitting_idempotent, find_splitting_idempotent_alg, min_poly, primary_decomposition,
    radical, rank_profile, Algebra, SplitOutcome,
};
pub use mat::{Mat, Subspace};
pub use poly::{factor, is_irreducible, squarefree_decomposition, Poly};
