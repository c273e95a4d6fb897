//! Exact integer linear algebra. Everything here is arbitrary precision; no
//! floating point is involved anywhere.

mod lattice;
mod matrix;
mod smith;

pub use lattice::{
    cokernel_invariants, hermite_basis, in_image, index_in_saturation, kernel_basis, saturation,
    solve_integer, CokernelInvariants,
};
pub(crate) use matrix::{int_from_json, int_to_json};
pub use matrix::{mat_mul, mat_pow, IntMatrix, IntVector};
pub use smith::{smith_normal_form, SmithDecomposition};
