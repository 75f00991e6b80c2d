//! Exact linear algebra over ℤ and ℚ.
//!
//! Everything downstream reduces to three questions about finite
//! matrices: solve over ℤ, solve over ℚ, and decide membership in a
//! subgroup `ℤ·L + ℚ·W`. Real-valued objects are modeled by ℚ, so every
//! answer is exact and comes with a witness or a certificate.

pub mod abelian;
pub mod matrix;
pub mod mixed;
pub mod snf;
pub mod solve;

pub use abelian::{quotient_group, FgAbelianGroup, QuotientError};
pub use matrix::{IntMatrix, Integer, Matrix, RatMatrix, Rational};
pub use mixed::{mixed_membership, Certificate, Membership, MixedSubgroup, PreparedSubgroup, Witness};
pub use snf::{snf, SmithForm};
pub use solve::{
    integer_kernel, integer_solve, lattice_basis, rational_rank, rational_solve,
    saturated_column_lattice, IntegerObstruction, IntegerSolver, RowReduction,
};
