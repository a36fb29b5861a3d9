//! Strong and weak extension groups of a truncated λ-graph system.
//!
//! For a λ-graph system 𝔏 with structure matrices `A_{l,l+1}` (the summed
//! symbol matrices) and `I_{l,l+1}` (the ι incidences), the extension
//! groups of the presented subshift are
//!
//! * `Ext_w^1(𝔏) = ℤ_I / (I - A_𝔏) ℤ_I` and
//!   `Ext_s^1(𝔏) = ℤ_I / (I - A_𝔏) ℤ_{I,0}`, inductive limits of the
//!   level quotients `ℤ^{m(L)} / (I - A)_{L,L+1} ℤ^{m(L+1)}` (all of
//!   `ℤ^{m(L+1)}` for the weak group, its sum-zero part for the strong
//!   one) under the maps induced by ι;
//! * `Ext_w^0(𝔏) = Ker(I - A_𝔏)` on the projective limit `ℤ_I` and
//!   `Ext_s^0(𝔏)` its sum-zero part.
//!
//! A truncation sees finitely many levels, so this module computes
//! [`GroupTower`]s of the level quotients together with a stabilization
//! verdict, and [`KernelTruncation`]s for the degree-zero groups. The four
//! groups sit in a cyclic six-term sequence
//!
//! ```text
//! 0 → Ext_s^0 → Ext_w^0 --s--> ℤ --ι̂--> Ext_s^1 → Ext_w^1 → 0
//! ```
//!
//! whose junctions [`six_term_check`] verifies one by one. For the
//! constant system of an essential 0/1 matrix the groups collapse to
//! closed matrix formulas, implemented separately in the `ck_*` functions
//! and cross-checked against the tower route.

mod ck;
mod kernel;
mod sixterm;
mod tower;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::builders::BuilderError;
use crate::intlinalg::{
    image_restricted, quotient_by_sublattice, sum_zero_basis, IntMatrix, LatticeBasis,
    QuotientPresentation,
};
use crate::lgs::{summed_matrix, validate, AxiomViolation, LgsError, TruncatedLambdaGraphSystem};

pub use ck::{a_hat, ck_six_term, ck_strong_ext, ck_weak_ext, is_primitive};
pub use kernel::{
    iota_hat, s_map, strong_ext0_truncated, weak_ext0_truncated, IotaHatClass, KernelTruncation,
};
pub use sixterm::{six_term_check, JunctionVerdict, SixTermReport};
pub use tower::{strong_ext1_tower, weak_ext1_tower, GroupTower, Stabilization};

/// Rejected input or failed internal identity in an invariant computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtError {
    /// The system fails axiom validation; invariants are only defined for
    /// valid λ-graph systems.
    NotValidated { violations: Vec<AxiomViolation> },
    /// Structural problem passed through from the system accessors, such
    /// as a level outside the represented window or insufficient depth.
    Lgs(LgsError),
    /// The stabilization window must be at least 1.
    WindowTooSmall { window: usize },
    /// The vector is not an element of the kernel lattice.
    NotInKernel,
    /// Vector length disagrees with the ambient dimension it must match.
    WrongLength { expected: usize, found: usize },
    /// A transition matrix was rejected before any computation.
    BadMatrix(BuilderError),
    /// Two routes to the same invariant disagreed, or an identity that
    /// holds for every valid system failed; indicates a bug, not bad
    /// input.
    InternalConsistency(&'static str),
}

impl fmt::Display for ExtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtError::NotValidated { violations } => {
                write!(f, "system fails validation with {} violation(s)", violations.len())?;
                if let Some(first) = violations.first() {
                    write!(f, "; first: {first}")?;
                }
                Ok(())
            }
            ExtError::Lgs(e) => write!(f, "{e}"),
            ExtError::WindowTooSmall { window } => {
                write!(f, "stabilization window must be at least 1, got {window}")
            }
            ExtError::NotInKernel => write!(f, "vector is not in the kernel lattice"),
            ExtError::WrongLength { expected, found } => {
                write!(f, "vector length {found} does not match ambient dimension {expected}")
            }
            ExtError::BadMatrix(e) => write!(f, "{e}"),
            ExtError::InternalConsistency(what) => {
                write!(f, "internal consistency failure: {what}")
            }
        }
    }
}

impl From<LgsError> for ExtError {
    fn from(e: LgsError) -> Self {
        ExtError::Lgs(e)
    }
}

/// Rejects systems that fail axiom validation.
pub(crate) fn ensure_validated(lgs: &TruncatedLambdaGraphSystem) -> Result<(), ExtError> {
    let report = validate(lgs);
    if report.passed() {
        Ok(())
    } else {
        Err(ExtError::NotValidated {
            violations: report.violations,
        })
    }
}

/// The difference matrix `(I - A^𝔏)_{l,l+1}`.
pub(crate) fn d_matrix(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<IntMatrix, LgsError> {
    let summed = summed_matrix(lgs, level)?;
    Ok(lgs.iota_matrix(level)? - &summed)
}

/// The ι projection `ℤ^{m(top)} → ℤ^{m(level)}`, the product
/// `I_{level,level+1} ⋯ I_{top-1,top}` (identity at the top level).
pub(crate) fn projection_to(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<IntMatrix, LgsError> {
    let top = lgs.top_level();
    if level > top {
        return Err(LgsError::LevelOutOfRange {
            level,
            base: lgs.base_level(),
            top,
        });
    }
    let mut p = IntMatrix::identity(lgs.vertex_count(top)?);
    for l in (level..top).rev() {
        p = lgs.iota_matrix(l)?.mul_mat(&p);
    }
    Ok(p)
}

/// The weak relation lattice `(I - A)_{l,l+1} ℤ^{m(l+1)} ⊆ ℤ^{m(l)}`.
pub(crate) fn weak_relations(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<LatticeBasis, LgsError> {
    let d = d_matrix(lgs, level)?;
    Ok(LatticeBasis::from_generators(d.rows(), &d))
}

/// The strong relation lattice `(I - A)_{l,l+1} ℤ_0^{m(l+1)} ⊆ ℤ^{m(l)}`.
pub(crate) fn strong_relations(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<LatticeBasis, LgsError> {
    let d = d_matrix(lgs, level)?;
    let s = sum_zero_basis(d.cols());
    Ok(image_restricted(&d, &s).expect("sum-zero basis matches the column count"))
}

/// Level-`l` presentation of the weak Ext^1 tower.
pub(crate) fn weak_level_presentation(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<QuotientPresentation, LgsError> {
    let rel = weak_relations(lgs, level)?;
    Ok(quotient_by_sublattice(rel.ambient_dim, &rel).expect("relations live in the ambient"))
}

/// Level-`l` presentation of the strong Ext^1 tower.
pub(crate) fn strong_level_presentation(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<QuotientPresentation, LgsError> {
    let rel = strong_relations(lgs, level)?;
    Ok(quotient_by_sublattice(rel.ambient_dim, &rel).expect("relations live in the ambient"))
}

/// The subgroup `s(Λ) = d·ℤ ⊆ ℤ` of coordinate sums over a lattice,
/// returned as the nonnegative generator `d` (zero for the zero subgroup).
pub(crate) fn sum_image_of(lattice: &LatticeBasis) -> BigInt {
    let mut d = BigInt::zero();
    for k in 0..lattice.rank() {
        let s = crate::intlinalg::coordinate_sum(&lattice.basis.column(k));
        d = d.gcd(&s);
    }
    d
}

/// The sum-zero part `{ x ∈ Λ : Σ x_i = 0 }` of a lattice, again as a
/// canonical lattice.
pub(crate) fn sum_zero_part(lattice: &LatticeBasis) -> LatticeBasis {
    let sums = crate::intlinalg::ones_row(lattice.ambient_dim).mul_mat(&lattice.basis);
    let inner = crate::intlinalg::kernel_basis(&sums);
    LatticeBasis::from_generators(lattice.ambient_dim, &lattice.basis.mul_mat(&inner.basis))
}
