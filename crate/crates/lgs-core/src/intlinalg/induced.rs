//! Maps induced on quotient presentations by ambient integer matrices.
//!
//! Given presentations ℤ^{m_s}/R_s and ℤ^{m_t}/R_t and a raw matrix
//! `F: ℤ^{m_s} → ℤ^{m_t}`, the induced homomorphism exists iff
//! `F·R_s ⊆ R_t`. Bijectivity is decided exactly: surjectivity as
//! triviality of the cokernel of `[F | B_t]`, injectivity as equality of
//! the full preimage lattice `F^{-1}(R_t)` with `R_s`.

use core::fmt;

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::group::QuotientPresentation;
use super::hnf::{kernel_basis, LatticeBasis};
use super::matrix::IntMatrix;

/// An induced homomorphism between two quotient presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    /// Matrix of the map on canonical generators, target coordinates by
    /// source coordinates, torsion rows reduced into `[0, d)`.
    pub map_matrix: IntMatrix,
    /// True iff the induced map is a group isomorphism.
    pub is_isomorphism: bool,
}

/// Rejected input to `induced_map_on_presentations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedMapError {
    /// The raw matrix shape does not match the ambient dimensions.
    DimensionMismatch {
        expected_rows: usize,
        expected_cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    /// The raw matrix does not carry the source relations into the target
    /// relations; no map is induced. Signals a non-λ-graph-system input
    /// upstream when it arises from a tower.
    NotWellDefined {
        /// Index of the offending source relation basis vector.
        relation_index: usize,
    },
}

impl fmt::Display for InducedMapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InducedMapError::DimensionMismatch {
                expected_rows,
                expected_cols,
                found_rows,
                found_cols,
            } => write!(
                f,
                "raw matrix shape {found_rows}x{found_cols} does not map \
                 ambient Z^{expected_cols} into Z^{expected_rows}"
            ),
            InducedMapError::NotWellDefined { relation_index } => write!(
                f,
                "raw matrix does not respect relations: image of source \
                 relation {relation_index} lies outside the target relations"
            ),
        }
    }
}

/// Computes the homomorphism induced by `raw` from `source` to `target`.
///
/// Well-definedness (`raw · R_source ⊆ R_target`) is checked exactly and
/// violated inputs are rejected. `is_isomorphism` is decided by exact
/// kernel and cokernel computations of the induced map, not by comparing
/// abstract groups.
pub fn induced_map_on_presentations(
    source: &QuotientPresentation,
    target: &QuotientPresentation,
    raw: &IntMatrix,
) -> Result<InducedMap, InducedMapError> {
    if raw.rows() != target.ambient_dim || raw.cols() != source.ambient_dim {
        return Err(InducedMapError::DimensionMismatch {
            expected_rows: target.ambient_dim,
            expected_cols: source.ambient_dim,
            found_rows: raw.rows(),
            found_cols: raw.cols(),
        });
    }
    for k in 0..source.relations.rank() {
        let image = raw.mul_vec(&source.relations.basis.column(k));
        if !target.relations.contains(&image) {
            return Err(InducedMapError::NotWellDefined { relation_index: k });
        }
    }

    let mut map_matrix = target
        .projection
        .mul_mat(raw)
        .mul_mat(&source.generator_lifts);
    for j in 0..map_matrix.cols() {
        let mut col: Vec<BigInt> = (0..map_matrix.rows()).map(|i| map_matrix[(i, j)].clone()).collect();
        target.reduce_in_place(&mut col);
        for (i, e) in col.into_iter().enumerate() {
            map_matrix[(i, j)] = e;
        }
    }

    let is_isomorphism = is_surjective(target, raw) && is_injective(source, target, raw);
    Ok(InducedMap {
        map_matrix,
        is_isomorphism,
    })
}

/// The induced map is onto iff the columns of `raw` together with the
/// target relations span the whole target ambient lattice.
fn is_surjective(target: &QuotientPresentation, raw: &IntMatrix) -> bool {
    let stacked = raw.hstack(&target.relations.basis);
    let lat = LatticeBasis::from_generators(target.ambient_dim, &stacked);
    lat.rank() == target.ambient_dim && lat.basis.is_identity()
}

/// The induced map is one-to-one iff the full preimage of the target
/// relations equals the source relations. The preimage lattice
/// `{x : raw·x ∈ R_t}` is read off the kernel of `[raw | -B_t]`.
fn is_injective(
    source: &QuotientPresentation,
    target: &QuotientPresentation,
    raw: &IntMatrix,
) -> bool {
    let m_s = source.ambient_dim;
    let paired = raw.hstack(&-(&target.relations.basis));
    let ker = kernel_basis(&paired);
    let x_block = IntMatrix::from_fn(m_s, ker.rank(), |i, k| ker.basis[(i, k)].clone());
    let preimage = LatticeBasis::from_generators(m_s, &x_block);
    preimage == source.relations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::group::{cokernel, FGAbelianGroup};
    use crate::intlinalg::hnf::sum_zero_basis;
    use crate::intlinalg::quotient_by_sublattice;

    #[test]
    fn identity_induces_identity() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let q = cokernel(&m);
        let ind =
            induced_map_on_presentations(&q, &q, &IntMatrix::identity(2)).expect("well defined");
        assert!(ind.is_isomorphism);
        assert!(ind.map_matrix.is_identity());
    }

    #[test]
    fn zero_map_to_nontrivial_target_is_not_iso() {
        let m = IntMatrix::from_i64_rows(&[&[2]]);
        let q = cokernel(&m);
        let ind =
            induced_map_on_presentations(&q, &q, &IntMatrix::zeros(1, 1)).expect("well defined");
        assert!(!ind.is_isomorphism);
        assert!(ind.map_matrix.is_zero());
    }

    #[test]
    fn rejects_relation_violating_matrix() {
        // Source Z/2, target Z/3; the identity does not carry 2Z into 3Z.
        let s = cokernel(&IntMatrix::from_i64_rows(&[&[2]]));
        let t = cokernel(&IntMatrix::from_i64_rows(&[&[3]]));
        let err = induced_map_on_presentations(&s, &t, &IntMatrix::identity(1)).unwrap_err();
        assert_eq!(err, InducedMapError::NotWellDefined { relation_index: 0 });
    }

    #[test]
    fn doubling_on_z4_is_well_defined_but_not_iso() {
        let q = cokernel(&IntMatrix::from_i64_rows(&[&[4]]));
        let two = IntMatrix::from_i64_rows(&[&[2]]);
        let ind = induced_map_on_presentations(&q, &q, &two).expect("2 * 4Z is inside 4Z");
        assert!(!ind.is_isomorphism);
        assert_eq!(ind.map_matrix[(0, 0)], BigInt::from(2));
    }

    #[test]
    fn same_group_two_presentations() {
        // Z/2 as Z/2Z and as Z^2 / <(2,0),(0,1)>; the map x -> (x, 0)
        // induces an isomorphism.
        let s = cokernel(&IntMatrix::from_i64_rows(&[&[2]]));
        let t = cokernel(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]));
        assert_eq!(s.group, t.group);
        assert_eq!(t.group, FGAbelianGroup::cyclic(2));
        let raw = IntMatrix::from_i64_rows(&[&[1], &[0]]);
        let ind = induced_map_on_presentations(&s, &t, &raw).expect("well defined");
        assert!(ind.is_isomorphism);
    }

    #[test]
    fn injectivity_failure_with_equal_free_ranks_is_detected() {
        // Multiplication by 2 on Z: injective as a lattice map but not onto;
        // as a map of groups Z -> Z it is injective, cokernel Z/2, so not an
        // isomorphism even though source and target groups agree.
        let free = quotient_by_sublattice(1, &LatticeBasis::empty(1)).unwrap();
        let two = IntMatrix::from_i64_rows(&[&[2]]);
        let ind = induced_map_on_presentations(&free, &free, &two).expect("well defined");
        assert!(!ind.is_isomorphism);
    }

    #[test]
    fn quotient_map_onto_smaller_group_is_not_injective() {
        // Z -> Z/2 induced by the identity on ambient Z: onto, kernel 2Z.
        let s = quotient_by_sublattice(1, &LatticeBasis::empty(1)).unwrap();
        let t = cokernel(&IntMatrix::from_i64_rows(&[&[2]]));
        let ind = induced_map_on_presentations(&s, &t, &IntMatrix::identity(1)).unwrap();
        assert!(!ind.is_isomorphism);
    }

    #[test]
    fn sum_zero_inclusion_into_ambient_induces_iso_of_quotients() {
        // Z^2 / sum-zero = Z on either side; the identity induces the
        // isomorphism between the two copies.
        let q = quotient_by_sublattice(2, &sum_zero_basis(2)).unwrap();
        let ind = induced_map_on_presentations(&q, &q, &IntMatrix::identity(2)).unwrap();
        assert!(ind.is_isomorphism);
    }
}
