//! Exact linear algebra over the supported fields: reduced row echelon form,
//! kernels, canonical subspaces, Smith normal form over the integers, sparse
//! rank computations, and kernels of Frobenius-semilinear maps.

mod dense;
mod semilinear;
mod smith;
mod sparse;

pub use dense::{rank_kernel, Matrix, Subspace};
pub use semilinear::semilinear_kernel;
pub use smith::{bareiss_determinant, smith_normal_form, IntMatrix, SmithError};
pub use sparse::{sparse_rank, SparseMatrix};

/// Above this many dense entries, rank computations switch to the sparse
/// elimination path (bit-packed over GF(2)).
pub const DENSE_ENTRY_LIMIT: usize = 1_000_000;
