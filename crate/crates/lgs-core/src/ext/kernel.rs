//! Degree-zero extension groups as kernel lattices of the truncated window.
//!
//! An element of the dimension group `ℤ_I` is a compatible sequence
//! `(x^l)` with `x^l = I_{l,l+1} x^{l+1}`; it lies in `Ker(I - A_𝔏)` when
//! additionally `(I - A)_{l,l+1} x^{l+1} = 0` for every l. Over a finite
//! window `base..=top` every compatible sequence is determined by its
//! deepest coordinate `x^{top}`, lower coordinates being the ι
//! projections, so the kernel visible in the truncation is the integer
//! kernel of the stacked matrix with row blocks
//! `(I - A)_{l,l+1} P_{l+1}`, `l = base..top-1`, acting on `ℤ^{m(top)}`,
//! where `P_{l+1}` is the ι projection from the top level. Coordinatizing
//! at a chosen level `L+1` applies `P_{L+1}` to that kernel; deeper levels
//! of the window keep constraining the result, which is what makes the
//! truncation converge onto the projective-limit kernel.
//!
//! The strong variant additionally forces coordinate sum zero; one sum
//! row at the top level suffices since every ι column sums to 1, making
//! the coordinate sum level independent on compatible sequences.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::intlinalg::{
    coordinate_sum, kernel_basis, ones_row, FGAbelianGroup, IntMatrix, LatticeBasis,
};
use crate::lgs::{LgsError, TruncatedLambdaGraphSystem};

use super::{
    d_matrix, ensure_validated, projection_to, strong_level_presentation, sum_image_of, ExtError,
};

/// The part of `Ker(I - A_𝔏)` (or its sum-zero part) visible in a
/// truncation, coordinatized at level `top_level + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTruncation {
    /// The truncation level L; the lattice lives in `ℤ^{m(L+1)}`.
    pub top_level: usize,
    /// Canonical basis of the kernel lattice.
    pub lattice: LatticeBasis,
    /// Number of basis vectors.
    pub rank: usize,
    /// Nonnegative generator of the coordinate-sum image `s(K) = dℤ`.
    pub sum_image: BigInt,
}

/// The truncation of `Ext_w^0 = Ker(I - A_𝔏: ℤ_I → ℤ_I)` at level L,
/// using every level of the represented window as a constraint.
pub fn weak_ext0_truncated(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<KernelTruncation, ExtError> {
    kernel_truncated(lgs, level, false)
}

/// The truncation of `Ext_s^0 = Ker(I - A_𝔏: ℤ_{I,0} → ℤ_{I,0})` at level
/// L: the sum-zero part of the weak kernel.
pub fn strong_ext0_truncated(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<KernelTruncation, ExtError> {
    kernel_truncated(lgs, level, true)
}

fn kernel_truncated(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
    strong: bool,
) -> Result<KernelTruncation, ExtError> {
    ensure_validated(lgs)?;
    let base = lgs.base_level();
    let top = lgs.top_level();
    if level < base {
        return Err(LgsError::LevelOutOfRange {
            level,
            base,
            top: top.saturating_sub(1),
        }
        .into());
    }
    if level >= top {
        return Err(LgsError::InsufficientDepth {
            needed: level + 1 - base,
            found: lgs.depth(),
        }
        .into());
    }
    let mtop = lgs.vertex_count(top)?;

    // Assemble the stacked constraint blocks from the deepest pair upward,
    // extending each difference matrix to the top coordinate by the ι
    // projection accumulated so far.
    let mut proj = IntMatrix::identity(mtop);
    let mut blocks: Vec<IntMatrix> = Vec::with_capacity(top - base + 1);
    for l in (base..top).rev() {
        blocks.push(d_matrix(lgs, l)?.mul_mat(&proj));
        proj = lgs.iota_matrix(l)?.mul_mat(&proj);
    }
    blocks.reverse();
    if strong {
        blocks.push(ones_row(mtop));
    }
    let stack = vstack_all(&blocks);

    let kernel_at_top = kernel_basis(&stack);
    let p = projection_to(lgs, level + 1)?;
    let lattice = LatticeBasis::from_generators(p.rows(), &p.mul_mat(&kernel_at_top.basis));
    #[cfg(debug_assertions)]
    debug_assert!(
        satisfies_window_constraints(lgs, level, &lattice),
        "projected kernel basis violates a window constraint"
    );

    let sum_image = sum_image_of(&lattice);
    if strong && !sum_image.is_zero() {
        return Err(ExtError::InternalConsistency(
            "strong kernel contains an element with nonzero coordinate sum",
        ));
    }
    Ok(KernelTruncation {
        top_level: level,
        lattice: lattice.clone(),
        rank: lattice.rank(),
        sum_image,
    })
}

fn vstack_all(blocks: &[IntMatrix]) -> IntMatrix {
    let cols = blocks[0].cols();
    let rows = blocks.iter().map(IntMatrix::rows).sum();
    let mut out = IntMatrix::zeros(rows, cols);
    let mut at = 0usize;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..cols {
                if !b[(i, j)].is_zero() {
                    out[(at + i, j)] = b[(i, j)].clone();
                }
            }
        }
        at += b.rows();
    }
    out
}

/// Checks that every basis vector, read at level `level + 1`, is killed by
/// the difference matrices of all shallower pairs after projecting down.
#[cfg(debug_assertions)]
fn satisfies_window_constraints(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
    lattice: &LatticeBasis,
) -> bool {
    let base = lgs.base_level();
    let mut p = IntMatrix::identity(lattice.ambient_dim);
    for l in (base..=level).rev() {
        let d = d_matrix(lgs, l).expect("window pair exists");
        if !d.mul_mat(&p).mul_mat(&lattice.basis).is_zero() {
            return false;
        }
        p = lgs.iota_matrix(l).expect("window pair exists").mul_mat(&p);
    }
    true
}

/// The coordinate-sum homomorphism `s_𝔏: Ker(I - A_𝔏) → ℤ` on a kernel
/// element given at level `kernel.top_level + 1`.
///
/// The value is level independent because every ι column sums to 1; this
/// is re-checked at runtime by walking the element down to the base level
/// and summing there.
pub fn s_map(
    lgs: &TruncatedLambdaGraphSystem,
    kernel: &KernelTruncation,
    element: &[BigInt],
) -> Result<BigInt, ExtError> {
    let n = kernel.lattice.ambient_dim;
    if element.len() != n {
        return Err(ExtError::WrongLength {
            expected: n,
            found: element.len(),
        });
    }
    if !kernel.lattice.contains(element) {
        return Err(ExtError::NotInKernel);
    }
    let sum = coordinate_sum(element);
    let mut v = element.to_vec();
    for l in (lgs.base_level()..=kernel.top_level).rev() {
        v = lgs.iota_matrix(l)?.mul_vec(&v);
    }
    if coordinate_sum(&v) != sum {
        return Err(ExtError::InternalConsistency(
            "coordinate sum of a kernel element varies across levels",
        ));
    }
    Ok(sum)
}

/// The class `ι̂_𝔏(m)` in the level-L strong quotient, with its canonical
/// ambient representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaHatClass {
    /// Level of the strong presentation the class lives in.
    pub level: usize,
    /// The representative `(I - A)_{L,L+1} (m, 0, …, 0)ᵗ ∈ ℤ^{m(L)}`.
    pub representative: Vec<BigInt>,
    /// Coordinates in the canonical level-L strong presentation, torsion
    /// coordinates reduced.
    pub coordinates: Vec<BigInt>,
    /// Order of the class; `None` means infinite order.
    pub order: Option<BigInt>,
    /// The group the coordinates refer to.
    pub group: FGAbelianGroup,
}

/// The connecting map `ι̂_𝔏: ℤ → Ext_s^1` of the six-term sequence,
/// evaluated on `m` at level L: the class of
/// `(I - A)_{L,L+1} (m, 0, …, 0)ᵗ` in
/// `ℤ^{m(L)} / (I - A)_{L,L+1} ℤ_0^{m(L+1)}`.
///
/// The class does not depend on which vector of column sums `m` is chosen
/// as input coordinate: two choices differ by `(I - A)` of a sum-zero
/// vector, which is a relation of the strong quotient.
pub fn iota_hat(
    lgs: &TruncatedLambdaGraphSystem,
    m: &BigInt,
    level: usize,
) -> Result<IotaHatClass, ExtError> {
    ensure_validated(lgs)?;
    let d = d_matrix(lgs, level)?;
    let mut rep = Vec::with_capacity(d.rows());
    for i in 0..d.rows() {
        rep.push(&d[(i, 0)] * m);
    }
    let pres = strong_level_presentation(lgs, level)?;
    let coordinates = pres.class_of(&rep);
    let order = pres.class_order(&rep);
    Ok(IotaHatClass {
        level,
        representative: rep,
        coordinates,
        order,
        group: pres.group,
    })
}
