//! Exact integer linear algebra.
//!
//! Everything downstream reduces to lattice computations over ℤ: Hermite
//! normal forms for canonical lattice bases, Smith normal forms for
//! invariant factors, kernels, and cokernel presentations. All arithmetic is
//! arbitrary precision; intermediate entry growth during elimination makes
//! fixed-width integers unsound even for small inputs.

mod group;
mod hnf;
mod induced;
mod matrix;
mod snf;

pub(crate) use hnf::{coordinate_sum, ones_row};

pub use group::{cokernel, quotient_by_sublattice, FGAbelianGroup, QuotientPresentation};
pub use hnf::{
    column_hnf, hermite_normal_form, image_restricted, kernel_basis, sum_zero_basis, LatticeBasis,
    LatticeError,
};
pub use induced::{induced_map_on_presentations, InducedMap, InducedMapError};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithDecomposition};
