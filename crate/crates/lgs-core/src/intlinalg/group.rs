//! Canonical presentations of finitely generated abelian groups.
//!
//! Every invariant computed downstream is a quotient ℤ^m / R for a
//! sublattice R, canonically decomposed as ℤ^{free} ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k with
//! d₁ | d₂ | …, d_i ≥ 2. Besides the abstract group we keep the projection
//! ℤ^m → generators and integer lifts of the generators, which is what makes
//! induced maps between quotients computable.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hnf::{LatticeBasis, LatticeError};
use super::matrix::IntMatrix;
use super::snf::smith_with_inverse;

/// A finitely generated abelian group in invariant-factor form.
///
/// Two values compare equal exactly when the groups are isomorphic: the
/// decomposition with a divisibility chain and torsion factors ≥ 2 is
/// unique.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FGAbelianGroup {
    /// Rank of the free part.
    pub free_rank: usize,
    /// Torsion invariant factors, each ≥ 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl FGAbelianGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        FGAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// Free abelian group of the given rank.
    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Cyclic group ℤ/n for n ≥ 2.
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 2, "cyclic torsion factor must be >= 2");
        FGAbelianGroup {
            free_rank: 0,
            torsion: alloc::vec![BigInt::from(n)],
        }
    }

    /// True for the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Total number of canonical generators (free plus torsion).
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut part = |f: &mut fmt::Formatter<'_>, s: String| -> fmt::Result {
            if !first {
                write!(f, " (+) ")?;
            }
            first = false;
            write!(f, "{s}")
        };
        match self.free_rank {
            0 => {}
            1 => part(f, String::from("Z"))?,
            r => part(f, alloc::format!("Z^{r}"))?,
        }
        for d in &self.torsion {
            part(f, alloc::format!("Z/{d}"))?;
        }
        Ok(())
    }
}

/// A quotient ℤ^m / R with canonical generators and the maps relating the
/// quotient to the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    /// Ambient dimension m.
    pub ambient_dim: usize,
    /// The abstract group.
    pub group: FGAbelianGroup,
    /// `generator_count x m` matrix sending an ambient vector to its
    /// coordinates in the canonical generators, free generators first, then
    /// torsion generators in divisor order.
    pub projection: IntMatrix,
    /// `m x generator_count` matrix whose columns are ambient lifts of the
    /// canonical generators.
    pub generator_lifts: IntMatrix,
    /// Canonical basis of the relation lattice R.
    pub relations: LatticeBasis,
}

impl QuotientPresentation {
    /// Coordinates of the class of `v`, with torsion coordinates reduced
    /// into `[0, d)`.
    pub fn class_of(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut c = self.projection.mul_vec(v);
        self.reduce_in_place(&mut c);
        c
    }

    /// Reduces torsion coordinates of a generator-coordinate vector into
    /// `[0, d)`; free coordinates are untouched.
    pub fn reduce_in_place(&self, coords: &mut [BigInt]) {
        let free = self.group.free_rank;
        for (k, d) in self.group.torsion.iter().enumerate() {
            coords[free + k] = coords[free + k].mod_floor(d);
        }
    }

    /// Order of the class of `v`: `None` for infinite order, otherwise the
    /// least n ≥ 1 with n·[v] = 0.
    pub fn class_order(&self, v: &[BigInt]) -> Option<BigInt> {
        let c = self.class_of(v);
        let free = self.group.free_rank;
        if c[..free].iter().any(|e| !e.is_zero()) {
            return None;
        }
        let mut order = BigInt::one();
        for (k, d) in self.group.torsion.iter().enumerate() {
            let t = &c[free + k];
            if t.is_zero() {
                continue;
            }
            let step = d / t.gcd(d);
            order = order.lcm(&step);
        }
        Some(order)
    }

    /// True if the class of `v` is the identity.
    pub fn class_is_zero(&self, v: &[BigInt]) -> bool {
        self.class_of(v).iter().all(|e| e.is_zero())
    }
}

/// Canonical presentation of ℤ^m / span(S).
pub fn quotient_by_sublattice(
    ambient_dim: usize,
    s: &LatticeBasis,
) -> Result<QuotientPresentation, LatticeError> {
    if s.ambient_dim != ambient_dim {
        return Err(LatticeError::DimensionMismatch {
            expected: ambient_dim,
            found: s.ambient_dim,
        });
    }
    Ok(present_quotient(ambient_dim, s.clone()))
}

/// Canonical presentation of the cokernel ℤ^m / M·ℤ^n of an `m x n` matrix.
pub fn cokernel(m: &IntMatrix) -> QuotientPresentation {
    present_quotient(m.rows(), LatticeBasis::from_generators(m.rows(), m))
}

fn present_quotient(ambient: usize, relations: LatticeBasis) -> QuotientPresentation {
    let r = relations.rank();
    if r == 0 {
        return QuotientPresentation {
            ambient_dim: ambient,
            group: FGAbelianGroup::free(ambient),
            projection: IntMatrix::identity(ambient),
            generator_lifts: IntMatrix::identity(ambient),
            relations,
        };
    }
    // U * B * V = D with the basis B of full column rank, so D has exactly
    // r nonzero diagonal entries d_1 | ... | d_r. In the coordinates
    // y = U x the quotient splits as (+)_i Z/d_i (+) Z^{ambient - r};
    // factors with d_i = 1 vanish.
    let (smith, u_inv) = smith_with_inverse(&relations.basis);
    let mut torsion_rows: Vec<usize> = Vec::new();
    let mut torsion: Vec<BigInt> = Vec::new();
    for i in 0..r {
        let d = &smith.d[(i, i)];
        debug_assert!(d.is_positive(), "basis of rank r must give r nonzero factors");
        if !d.is_one() {
            torsion_rows.push(i);
            torsion.push(d.clone());
        }
    }
    let free_rows: Vec<usize> = (r..ambient).collect();
    let mut generator_rows = free_rows;
    generator_rows.extend_from_slice(&torsion_rows);
    let projection = smith.u.select_rows(&generator_rows);
    let generator_lifts = u_inv.select_columns(&generator_rows);
    QuotientPresentation {
        ambient_dim: ambient,
        group: FGAbelianGroup {
            free_rank: ambient - r,
            torsion,
        },
        projection,
        generator_lifts,
        relations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::hnf::sum_zero_basis;
    use alloc::format;
    use alloc::vec;

    #[test]
    fn cokernel_of_displayed_pair_matrix() {
        // One relation (-2, -2) in Z^1 after the map: the matrix is 1x2,
        // image = 2Z inside Z, quotient Z/2.
        let m = IntMatrix::from_i64_rows(&[&[-2, -2]]);
        let q = cokernel(&m);
        assert_eq!(q.group, FGAbelianGroup::cyclic(2));
        assert_eq!(format!("{}", q.group), "Z/2");
    }

    #[test]
    fn cokernel_unimodular_is_trivial() {
        let m = IntMatrix::from_i64_rows(&[&[0, -1], &[-1, 1]]);
        let q = cokernel(&m);
        assert!(q.group.is_trivial());
        assert_eq!(format!("{}", q.group), "0");
    }

    #[test]
    fn cokernel_zero_map_is_free() {
        let q = cokernel(&IntMatrix::zeros(3, 2));
        assert_eq!(q.group, FGAbelianGroup::free(3));
        assert_eq!(format!("{}", q.group), "Z^3");
    }

    #[test]
    fn quotient_by_golden_mean_image_is_free_of_rank_one() {
        let s = LatticeBasis::from_generators(2, &IntMatrix::from_i64_rows(&[&[1], &[-2]]));
        let q = quotient_by_sublattice(2, &s).unwrap();
        assert_eq!(q.group, FGAbelianGroup::free(1));
        assert_eq!(format!("{}", q.group), "Z");
    }

    #[test]
    fn quotient_by_full_lattice_is_trivial() {
        let s = LatticeBasis::from_generators(2, &IntMatrix::identity(2));
        let q = quotient_by_sublattice(2, &s).unwrap();
        assert!(q.group.is_trivial());
    }

    #[test]
    fn quotient_by_rank_zero_is_everything() {
        let s = LatticeBasis::empty(3);
        let q = quotient_by_sublattice(3, &s).unwrap();
        assert_eq!(q.group, FGAbelianGroup::free(3));
        assert!(q.projection.is_identity());
    }

    #[test]
    fn quotient_by_sum_zero_is_z() {
        for n in 1..6 {
            let q = quotient_by_sublattice(n, &sum_zero_basis(n)).unwrap();
            assert_eq!(q.group, FGAbelianGroup::free(1), "n = {n}");
            // The coordinate-sum map realizes the isomorphism: every
            // standard basis vector must map to the same generator class.
            let e0 = q.class_of(&unit(n, 0));
            for i in 1..n {
                assert_eq!(q.class_of(&unit(n, i)), e0, "n = {n}, i = {i}");
            }
            assert!(e0[0].abs().is_one());
        }
    }

    #[test]
    fn projection_and_lifts_are_mutually_inverse_on_generators() {
        let rel = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3], &[0, 0]]);
        let s = LatticeBasis::from_generators(3, &rel);
        let q = quotient_by_sublattice(3, &s).unwrap();
        // Z^3 / (2Z x 3Z x 0) = Z (+) Z/6.
        assert_eq!(
            q.group,
            FGAbelianGroup {
                free_rank: 1,
                torsion: vec![BigInt::from(6)]
            }
        );
        assert!(q.projection.mul_mat(&q.generator_lifts).is_identity());
        // Relations map to the zero class.
        for k in 0..q.relations.rank() {
            assert!(q.class_is_zero(&q.relations.basis.column(k)));
        }
    }

    #[test]
    fn class_orders() {
        let rel = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 4]]);
        let q = cokernel(&rel);
        assert_eq!(
            q.group,
            FGAbelianGroup {
                free_rank: 0,
                torsion: vec![BigInt::from(2), BigInt::from(4)]
            }
        );
        let order = |v: &[i64]| {
            let w: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            q.class_order(&w)
        };
        assert_eq!(order(&[1, 0]), Some(BigInt::from(2)));
        assert_eq!(order(&[0, 1]), Some(BigInt::from(4)));
        assert_eq!(order(&[1, 1]), Some(BigInt::from(4)));
        assert_eq!(order(&[0, 2]), Some(BigInt::from(2)));
        assert_eq!(order(&[2, 4]), Some(BigInt::from(1)));

        let free = cokernel(&IntMatrix::zeros(1, 1));
        assert_eq!(free.class_order(&[BigInt::from(3)]), None);
        assert_eq!(free.class_order(&[BigInt::zero()]), Some(BigInt::one()));
    }

    fn unit(n: usize, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        v
    }

    #[test]
    fn display_forms() {
        assert_eq!(format!("{}", FGAbelianGroup::trivial()), "0");
        assert_eq!(format!("{}", FGAbelianGroup::free(1)), "Z");
        assert_eq!(format!("{}", FGAbelianGroup::free(4)), "Z^4");
        let g = FGAbelianGroup {
            free_rank: 2,
            torsion: vec![BigInt::from(2), BigInt::from(6)],
        };
        assert_eq!(format!("{g}"), "Z^2 (+) Z/2 (+) Z/6");
    }
}
