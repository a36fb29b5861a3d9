//! Hermite normal forms and canonical lattice bases.
//!
//! Two conventions are used side by side. The row-style HNF `H = U * M`
//! (echelon by rows, pivots positive, entries above each pivot reduced into
//! `[0, pivot)`) canonicalizes the row span of `M` and exposes a unimodular
//! witness `U`; zero rows of `H` identify rows of `U` spanning the left
//! kernel, which is how integer kernels are computed here. The column-style
//! HNF, defined as the transpose of the row-style HNF of the transpose,
//! canonicalizes the column span, so equality of sublattices of ℤ^n becomes
//! literal matrix equality of their canonical bases.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// A saturated-or-not sublattice of ℤ^n given by a canonical basis.
///
/// `basis` is an `ambient_dim x rank` matrix in column-style Hermite normal
/// form with no zero columns; its columns are linearly independent over ℚ.
/// Equal sublattices always produce identical `LatticeBasis` values, so
/// `==` decides lattice equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeBasis {
    /// Dimension of the ambient lattice ℤ^n.
    pub ambient_dim: usize,
    /// Canonical basis, one column per generator.
    pub basis: IntMatrix,
}

/// Rejected input to a lattice operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// Ambient dimensions of the operands disagree.
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DimensionMismatch { expected, found } => write!(
                f,
                "lattice dimension mismatch: expected ambient {expected}, found {found}"
            ),
        }
    }
}

impl LatticeBasis {
    /// Canonicalizes the column span of `generators` as a sublattice of
    /// ℤ^`ambient_dim`. The generators may be dependent or zero; the result
    /// keeps only a canonical independent basis.
    pub fn from_generators(ambient_dim: usize, generators: &IntMatrix) -> Self {
        assert_eq!(
            generators.rows(),
            ambient_dim,
            "generator column length disagrees with ambient dimension"
        );
        LatticeBasis {
            ambient_dim,
            basis: column_hnf(generators),
        }
    }

    /// The rank-0 sublattice of ℤ^n.
    pub fn empty(ambient_dim: usize) -> Self {
        LatticeBasis {
            ambient_dim,
            basis: IntMatrix::zeros(ambient_dim, 0),
        }
    }

    /// The number of basis vectors.
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Row index of the pivot (first nonzero entry) of basis column `k`.
    fn pivot_row(&self, k: usize) -> usize {
        (0..self.ambient_dim)
            .find(|&i| !self.basis[(i, k)].is_zero())
            .expect("canonical basis has no zero columns")
    }

    /// Solves `basis * y = v` exactly over ℤ. Returns the coordinate vector
    /// if `v` lies in the lattice, `None` otherwise.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut w: Vec<BigInt> = v.to_vec();
        let mut y = Vec::with_capacity(self.rank());
        for k in 0..self.rank() {
            let p = self.pivot_row(k);
            let (q, r) = w[p].div_rem(&self.basis[(p, k)]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, wi) in w.iter_mut().enumerate().skip(p) {
                    *wi -= &self.basis[(i, k)] * &q;
                }
            }
            y.push(q);
        }
        if w.iter().all(|e| e.is_zero()) {
            Some(y)
        } else {
            None
        }
    }

    /// Membership test for a single vector.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    /// True if every basis vector of `self` lies in `other`.
    pub fn is_sublattice_of(&self, other: &LatticeBasis) -> bool {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient dimension mismatch in sublattice test"
        );
        (0..self.rank()).all(|k| other.contains(&self.basis.column(k)))
    }
}

/// Extended gcd returning `(g, s, t)` with `g = s*a + t*b` and `g >= 0`.
fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular, `H = U * M`, `H` in row echelon
/// form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows of `H` sit at the bottom. `H` is the canonical
/// representative of the row span of `M`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = hnf_core(m, true);
    (h, u.expect("witness requested"))
}

/// Row-style HNF without the unimodular witness; skipping the `U` updates
/// roughly halves the work when only the canonical form is needed.
pub(crate) fn row_hnf_only(m: &IntMatrix) -> IntMatrix {
    hnf_core(m, false).0
}

fn hnf_core(m: &IntMatrix, track_u: bool) -> (IntMatrix, Option<IntMatrix>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = if track_u {
        Some(IntMatrix::identity(rows))
    } else {
        None
    };
    let mut r = 0usize;
    for j in 0..cols {
        if r == rows {
            break;
        }
        // Bring a nonzero entry into position (r, j), preferring one already
        // there; combine it with every other nonzero below via unimodular
        // row operations until the column is clear below the pivot.
        let Some(first) = (r..rows).find(|&i| !h[(i, j)].is_zero()) else {
            continue;
        };
        if first != r {
            h.swap_rows(r, first);
            if let Some(u) = u.as_mut() {
                u.swap_rows(r, first);
            }
        }
        for i in r + 1..rows {
            if h[(i, j)].is_zero() {
                continue;
            }
            let a = h[(r, j)].clone();
            let b = h[(i, j)].clone();
            let (q, rem) = b.div_rem(&a);
            if rem.is_zero() {
                // Fast path: the pivot divides the entry, a single shear
                // clears it. Dominant case for the 0/1 matrices here.
                let neg_q = -q;
                row_shear(&mut h, i, r, &neg_q, j);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, r, &neg_q);
                }
            } else {
                let (g, s, t) = xgcd(&a, &b);
                let p = -(&b / &g);
                let q = &a / &g;
                row_combine(&mut h, r, i, [&s, &t, &p, &q], j);
                if let Some(u) = u.as_mut() {
                    row_combine(u, r, i, [&s, &t, &p, &q], 0);
                }
            }
        }
        if h[(r, j)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_mut() {
                u.negate_row(r);
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        let pivot = h[(r, j)].clone();
        for i in 0..r {
            let q = h[(i, j)].div_floor(&pivot);
            if !q.is_zero() {
                let neg_q = -q;
                row_shear(&mut h, i, r, &neg_q, j);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, r, &neg_q);
                }
            }
        }
        r += 1;
    }
    (h, u)
}

/// `row[dst] += c * row[src]`, touching only columns `from..` (columns to
/// the left are zero in `row[src]` by the elimination invariant).
fn row_shear(m: &mut IntMatrix, dst: usize, src: usize, c: &BigInt, from: usize) {
    for j in from..m.cols() {
        let s = m[(src, j)].clone();
        if !s.is_zero() {
            let t = &s * c;
            m[(dst, j)] += t;
        }
    }
}

/// Applies the unimodular 2x2 transform with coefficients `[s, t, p, q]`,
/// `(row[a], row[b]) <- (s*row[a] + t*row[b], p*row[a] + q*row[b])`,
/// to columns `from..`.
fn row_combine(m: &mut IntMatrix, a: usize, b: usize, coeffs: [&BigInt; 4], from: usize) {
    let [s, t, p, q] = coeffs;
    for j in from..m.cols() {
        let va = m[(a, j)].clone();
        let vb = m[(b, j)].clone();
        m[(a, j)] = s * &va + t * &vb;
        m[(b, j)] = p * &va + q * &vb;
    }
}

/// Column-style Hermite normal form of the column span of `M`, with zero
/// columns removed: the canonical basis matrix of the lattice spanned by
/// the columns of `M`.
pub fn column_hnf(m: &IntMatrix) -> IntMatrix {
    let h = row_hnf_only(&m.transpose());
    // Keep the nonzero rows of h (they sit on top), transposed back.
    let nonzero = (0..h.rows())
        .filter(|&i| (0..h.cols()).any(|j| !h[(i, j)].is_zero()))
        .collect::<Vec<_>>();
    h.select_rows(&nonzero).transpose()
}

/// Canonical basis of the integer kernel `{x : M x = 0}` of an `m x n`
/// matrix, as a sublattice of ℤ^n. The kernel of an integer matrix is
/// automatically saturated (a direct summand of ℤ^n).
pub fn kernel_basis(m: &IntMatrix) -> LatticeBasis {
    let n = m.cols();
    let (h, u) = hermite_normal_form(&m.transpose());
    // Rows u_i of U with u_i * M^T = 0 are exactly the transposed kernel
    // vectors M u_i^T = 0; they correspond to zero rows of H.
    let zero_rows: Vec<usize> = (0..h.rows())
        .filter(|&i| (0..h.cols()).all(|j| h[(i, j)].is_zero()))
        .collect();
    let gens = u.select_rows(&zero_rows).transpose();
    LatticeBasis::from_generators(n, &gens)
}

/// Canonical basis of the sum-zero sublattice
/// `ℤ_0^n = { x ∈ ℤ^n : Σ x_i = 0 }`, spanned by `{ e_i - e_n }`.
pub fn sum_zero_basis(n: usize) -> LatticeBasis {
    assert!(n >= 1, "sum_zero_basis needs ambient dimension >= 1");
    let mut basis = IntMatrix::zeros(n, n - 1);
    for k in 0..n - 1 {
        basis[(k, k)] = BigInt::from(1);
        basis[(n - 1, k)] = BigInt::from(-1);
    }
    debug_assert_eq!(basis, column_hnf(&basis), "e_i - e_n basis must be canonical");
    LatticeBasis {
        ambient_dim: n,
        basis,
    }
}

/// Canonical basis of the image lattice `M * span(S)`, the image of the
/// restriction of `M` to the sublattice spanned by `S`.
pub fn image_restricted(m: &IntMatrix, s: &LatticeBasis) -> Result<LatticeBasis, LatticeError> {
    if s.ambient_dim != m.cols() {
        return Err(LatticeError::DimensionMismatch {
            expected: m.cols(),
            found: s.ambient_dim,
        });
    }
    Ok(LatticeBasis::from_generators(m.rows(), &m.mul_mat(&s.basis)))
}

/// All-ones row vector of length `n`, the coordinate-sum functional.
pub(crate) fn ones_row(n: usize) -> IntMatrix {
    IntMatrix::from_fn(1, n, |_, _| BigInt::from(1))
}

/// Coordinate sum of a vector.
pub(crate) fn coordinate_sum(v: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for e in v {
        s += e;
    }
    s
}
