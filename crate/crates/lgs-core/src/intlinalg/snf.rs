//! Smith normal form over ℤ.
//!
//! `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, each nonzero
//! diagonal entry dividing the next. The diagonal is the invariant-factor
//! sequence of `M`, which is what turns a relation matrix into the canonical
//! decomposition ℤ^m / Mℤ^n ≅ ℤ^{m-r} ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_r.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// The full decomposition `U * M * V = D` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Diagonal matrix of invariant factors, same shape as the input.
    pub d: IntMatrix,
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
}

/// Computes the Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    smith_with_inverse(m).0
}

/// Smith normal form together with `U^{-1}`, tracked by mirroring every row
/// operation on `U` with the inverse column operation on `U^{-1}`. The
/// inverse is what lifts canonical quotient generators back to the ambient
/// lattice.
pub(crate) fn smith_with_inverse(m: &IntMatrix) -> (SmithDecomposition, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0usize;
    while t < rows && t < cols {
        // Choose the nonzero entry of least absolute value in the trailing
        // submatrix as the pivot; least-absolute-value selection keeps
        // coefficient growth tame and guarantees termination of the
        // clearing loop below.
        let Some((pi, pj)) = least_abs_nonzero(&d, t) else {
            break;
        };
        if pi != t {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
        }
        if pj != t {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        // Clear column t with row operations; any inexact division leaves a
        // strictly smaller remainder, so re-selecting the pivot terminates.
        let mut clean = true;
        for i in t + 1..rows {
            if d[(i, t)].is_zero() {
                continue;
            }
            let (q, r) = d[(i, t)].div_rem(&d[(t, t)]);
            let neg_q = -q;
            d.add_row_multiple(i, t, &neg_q);
            u.add_row_multiple(i, t, &neg_q);
            u_inv.add_col_multiple(t, i, &-&neg_q);
            if !r.is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        for j in t + 1..cols {
            if d[(t, j)].is_zero() {
                continue;
            }
            let (q, r) = d[(t, j)].div_rem(&d[(t, t)]);
            let neg_q = -q;
            d.add_col_multiple(j, t, &neg_q);
            v.add_col_multiple(j, t, &neg_q);
            if !r.is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }

        // Divisibility chain: if some trailing entry is not a multiple of
        // the pivot, fold its row into row t and restart this position.
        if let Some(bad_row) = first_indivisible_row(&d, t) {
            let one = BigInt::one();
            d.add_row_multiple(t, bad_row, &one);
            u.add_row_multiple(t, bad_row, &one);
            u_inv.add_col_multiple(bad_row, t, &BigInt::from(-1));
            continue;
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }

    debug_assert!(u.mul_mat(&u_inv).is_identity(), "U inverse tracking broke");
    debug_assert_eq!(u.mul_mat(m).mul_mat(&v), d, "U*M*V != D");
    (SmithDecomposition { d, u, v }, u_inv)
}

fn least_abs_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs: Option<BigInt> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = &d[(i, j)];
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if a.is_one() {
                return Some((i, j));
            }
            if best_abs.as_ref().is_none_or(|b| &a < b) {
                best_abs = Some(a);
                best = Some((i, j));
            }
        }
    }
    best
}

/// Finds a row `i > t` containing an entry not divisible by `d[(t,t)]`,
/// after row `t` and column `t` have been cleared.
fn first_indivisible_row(d: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = &d[(t, t)];
    if pivot.abs().is_one() {
        return None;
    }
    for i in t + 1..d.rows() {
        for j in t + 1..d.cols() {
            if !d[(i, j)].mod_floor(pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}
