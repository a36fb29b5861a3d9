//! Canonical constructions of the example families.
//!
//! Four families of truncated λ-graph systems are built here:
//!
//! * [`cuntz`]: one vertex per level, N self-loop labels; presents the full
//!   N-shift.
//! * [`cuntz_krieger`]: the constant system of an essential 0/1 transition
//!   matrix A, with ι the identity; presents the topological Markov shift.
//! * [`markov_coded`]: the Markov-coded system `𝔏^{S_G}` of a finite
//!   directed graph G, given by block structure matrices valid from level 3
//!   upward, with `m(l) = 2(l+1)N`.
//! * [`dyck`]: the Cantor-horizon presentation of the Dyck shift `D_N`,
//!   vertices the words of length l over the bracket alphabet, with
//!   `m(l) = N^l`.
//!
//! Each construction documents its vertex ordering; matrix-level
//! comparisons against reference data depend on it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::intlinalg::IntMatrix;
use crate::lgs::{Alphabet, LgsError, TruncatedLambdaGraphSystem};

/// Default per-level vertex cap for the Dyck builder.
pub const DYCK_LEVEL_CAP_DEFAULT: usize = 4096;

/// Rejected builder parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuilderError {
    /// N must be at least 2 (alphabet cardinality).
    NTooSmall { n: usize },
    /// Truncations need depth at least 1.
    DepthTooSmall { depth: usize },
    /// The transition matrix must be square.
    NotSquare { rows: usize, cols: usize },
    /// A Cuntz-Krieger matrix entry is neither 0 nor 1.
    NotZeroOne { row: usize, col: usize },
    /// A transition-matrix entry is negative.
    NegativeEntry { row: usize, col: usize },
    /// A zero row makes the shift degenerate (vertex with no out-edge).
    ZeroRow { row: usize },
    /// A zero column makes the shift degenerate (vertex with no in-edge).
    ZeroColumn { col: usize },
    /// A level would exceed the configured vertex cap.
    SizeCapExceeded {
        level: usize,
        size: usize,
        cap: usize,
    },
    /// The assembled system failed structural checks; indicates a builder
    /// bug rather than bad input.
    Internal(LgsError),
}

impl fmt::Display for BuilderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuilderError::NTooSmall { n } => write!(f, "N must be at least 2, got {n}"),
            BuilderError::DepthTooSmall { depth } => {
                write!(f, "depth must be at least 1, got {depth}")
            }
            BuilderError::NotSquare { rows, cols } => {
                write!(f, "transition matrix must be square, got {rows}x{cols}")
            }
            BuilderError::NotZeroOne { row, col } => {
                write!(f, "matrix entry at ({row}, {col}) must be 0 or 1")
            }
            BuilderError::NegativeEntry { row, col } => {
                write!(f, "transition entry at ({row}, {col}) is negative")
            }
            BuilderError::ZeroRow { row } => {
                write!(f, "row {row} of the transition matrix is zero; graph is not essential")
            }
            BuilderError::ZeroColumn { col } => {
                write!(f, "column {col} of the transition matrix is zero; graph is not essential")
            }
            BuilderError::SizeCapExceeded { level, size, cap } => {
                write!(f, "level {level} needs {size} vertices, exceeding the cap {cap}")
            }
            BuilderError::Internal(e) => write!(f, "builder produced a malformed system: {e}"),
        }
    }
}

impl From<LgsError> for BuilderError {
    fn from(e: LgsError) -> Self {
        BuilderError::Internal(e)
    }
}

/// A finite directed graph given by its transition matrix
/// `A(i, j) = number of edges v_i → v_j`, required to be essential: every
/// vertex has at least one outgoing and one incoming edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraphSpec {
    transition: IntMatrix,
}

impl DirectedGraphSpec {
    /// Validates and wraps a transition matrix: square, entries ≥ 0, no
    /// zero row, no zero column.
    pub fn new(transition: IntMatrix) -> Result<Self, BuilderError> {
        let n = transition.rows();
        if transition.cols() != n {
            return Err(BuilderError::NotSquare {
                rows: n,
                cols: transition.cols(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if transition[(i, j)] < BigInt::zero() {
                    return Err(BuilderError::NegativeEntry { row: i, col: j });
                }
            }
        }
        for i in 0..n {
            if (0..n).all(|j| transition[(i, j)].is_zero()) {
                return Err(BuilderError::ZeroRow { row: i });
            }
        }
        for j in 0..n {
            if (0..n).all(|i| transition[(i, j)].is_zero()) {
                return Err(BuilderError::ZeroColumn { col: j });
            }
        }
        Ok(DirectedGraphSpec { transition })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.transition.rows()
    }

    /// The transition matrix.
    pub fn transition(&self) -> &IntMatrix {
        &self.transition
    }

    /// Total number of edges, counted with multiplicity.
    pub fn edge_count(&self) -> BigInt {
        let mut total = BigInt::zero();
        for i in 0..self.transition.rows() {
            for j in 0..self.transition.cols() {
                total += &self.transition[(i, j)];
            }
        }
        total
    }
}

fn numbered_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

/// The full N-shift system: one vertex per level, N distinct self-loop
/// labels, every matrix the 1x1 matrix `[1]`. Levels run `0..=depth`.
pub fn cuntz(n: usize, depth: usize) -> Result<TruncatedLambdaGraphSystem, BuilderError> {
    if n < 2 {
        return Err(BuilderError::NTooSmall { n });
    }
    if depth < 1 {
        return Err(BuilderError::DepthTooSmall { depth });
    }
    let alphabet = Alphabet::new(numbered_names("", n)).map_err(BuilderError::Internal)?;
    let one = IntMatrix::identity(1);
    let pairs = depth;
    let symbol_matrices = vec![vec![one.clone(); n]; pairs];
    let iota_matrices = vec![one; pairs];
    Ok(TruncatedLambdaGraphSystem::new(
        alphabet,
        0,
        vec![1; depth + 1],
        symbol_matrices,
        iota_matrices,
    )?)
}

/// The constant system of an essential 0/1 matrix A: `m(l) = N` at every
/// level, ι the identity, and the edge `i → j` (present iff `A(i,j) = 1`)
/// labeled by its source vertex `i`, so the symbol-i matrix is row i of A
/// placed in row i. Labeling by source keeps every symbol matrix
/// left-resolving for arbitrary A; the summed matrix is A at every level
/// regardless of the labeling. Levels run `0..=depth`.
pub fn cuntz_krieger(
    a: &IntMatrix,
    depth: usize,
) -> Result<TruncatedLambdaGraphSystem, BuilderError> {
    let n = check_zero_one_essential(a)?;
    if depth < 1 {
        return Err(BuilderError::DepthTooSmall { depth });
    }
    if n < 2 {
        // A 1x1 essential 0/1 matrix is [1], whose shift has a one-letter
        // language; the alphabet invariant needs at least two symbols.
        return Err(BuilderError::NTooSmall { n });
    }
    let alphabet = Alphabet::new(numbered_names("", n)).map_err(BuilderError::Internal)?;
    let mut per_symbol = Vec::with_capacity(n);
    for i in 0..n {
        per_symbol.push(IntMatrix::from_fn(n, n, |r, c| {
            if r == i {
                a[(i, c)].clone()
            } else {
                BigInt::zero()
            }
        }));
    }
    let pairs = depth;
    let symbol_matrices = vec![per_symbol; pairs];
    let iota_matrices = vec![IntMatrix::identity(n); pairs];
    Ok(TruncatedLambdaGraphSystem::new(
        alphabet,
        0,
        vec![n; depth + 1],
        symbol_matrices,
        iota_matrices,
    )?)
}

pub(crate) fn check_zero_one_essential(a: &IntMatrix) -> Result<usize, BuilderError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(BuilderError::NotSquare {
            rows: n,
            cols: a.cols(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            let e = &a[(i, j)];
            if !e.is_zero() && !e.is_one() {
                return Err(BuilderError::NotZeroOne { row: i, col: j });
            }
        }
    }
    for i in 0..n {
        if (0..n).all(|j| a[(i, j)].is_zero()) {
            return Err(BuilderError::ZeroRow { row: i });
        }
    }
    for j in 0..n {
        if (0..n).all(|i| a[(i, j)].is_zero()) {
            return Err(BuilderError::ZeroColumn { col: j });
        }
    }
    Ok(n)
}

/// The Markov-coded system `𝔏^{S_G}` of an essential graph G on N vertices,
/// represented from its natural base level 3 with `m(l) = 2(l+1)·N`.
///
/// Levels are blocks of N; for the pair `(l, l+1)` there are `2(l+1)` row
/// blocks and `2(l+2)` column blocks (1-based below). The summed matrix is
///
/// * `1_N` at `(r, r)` and `(r, 2l+5-r)` for `r = 1..=l+1`,
/// * `Aᵗ` at `(l+2, c)` for `c = 1..=l+2`,
/// * `1_N` at `(r, r)` for `r = l+3..=2l+1`,
/// * `1_N` at `(2l+2, c)` for `c = 2l+2, 2l+3, 2l+4`,
///
/// and ι has `1_N` at `(1, 1)`, `(1, 2)`, `(r, r+1)` for `r = 2..=2l+1`,
/// and `(2l+2, c)` for `c = 2l+3, 2l+4`.
///
/// The alphabet is `{b, c, e_1..e_E}` with E the number of edges of G. The
/// per-symbol split assigns both diagonal `1_N` bands and the three
/// trailing `1_N` blocks to `b`, the anti-diagonal band to `c`, and one
/// single-entry block column family to each edge: the edge `s → t` puts a 1
/// at row `t`, column `s` of every block `(l+2, c)`, `c = 1..=l+2`.
/// Parallel edges get equal matrices under distinct labels. Every part of
/// the split preserves left-resolvingness and the local property, which
/// `validate` confirms for each construction.
pub fn markov_coded(
    g: &DirectedGraphSpec,
    depth: usize,
) -> Result<TruncatedLambdaGraphSystem, BuilderError> {
    if depth < 1 {
        return Err(BuilderError::DepthTooSmall { depth });
    }
    let n = g.vertex_count();
    let a = g.transition();
    const BASE: usize = 3;

    let mut names = vec![String::from("b"), String::from("c")];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let mult = &a[(s, t)];
            let mut k = BigInt::zero();
            while &k < mult {
                edges.push((s, t));
                k += 1u32;
            }
        }
    }
    names.extend(numbered_names("e", edges.len()));
    let alphabet = Alphabet::new(names).map_err(BuilderError::Internal)?;

    let vertex_counts: Vec<usize> = (BASE..=BASE + depth).map(|l| 2 * (l + 1) * n).collect();

    let mut symbol_matrices = Vec::with_capacity(depth);
    let mut iota_matrices = Vec::with_capacity(depth);
    for l in BASE..BASE + depth {
        let row_blocks = 2 * (l + 1);
        let col_blocks = 2 * (l + 2);

        // Symbol b: the two diagonal identity bands plus the three
        // trailing identity blocks of the last row block.
        let mut b_blocks: Vec<(usize, usize)> = Vec::new();
        for r in 1..=l + 1 {
            b_blocks.push((r, r));
        }
        for r in l + 3..=2 * l + 1 {
            b_blocks.push((r, r));
        }
        b_blocks.push((2 * l + 2, 2 * l + 2));
        b_blocks.push((2 * l + 2, 2 * l + 3));
        b_blocks.push((2 * l + 2, 2 * l + 4));
        let b_mat = identity_blocks(n, row_blocks, col_blocks, &b_blocks);

        // Symbol c: the anti-diagonal identity band.
        let c_blocks: Vec<(usize, usize)> =
            (1..=l + 1).map(|r| (r, 2 * l + 5 - r)).collect();
        let c_mat = identity_blocks(n, row_blocks, col_blocks, &c_blocks);

        let mut mats = vec![b_mat, c_mat];
        // Edge symbols: edge s → t contributes the single entry
        // (row t, col s) of the Aᵗ block, repeated across column blocks
        // 1..=l+2 of row block l+2.
        for &(s, t) in &edges {
            let mut m = IntMatrix::zeros(row_blocks * n, col_blocks * n);
            let row = (l + 2 - 1) * n + t;
            for cb in 1..=l + 2 {
                m[(row, (cb - 1) * n + s)] = BigInt::one();
            }
            mats.push(m);
        }
        symbol_matrices.push(mats);

        let mut i_blocks: Vec<(usize, usize)> = vec![(1, 1), (1, 2)];
        for r in 2..=2 * l + 1 {
            i_blocks.push((r, r + 1));
        }
        i_blocks.push((2 * l + 2, 2 * l + 3));
        i_blocks.push((2 * l + 2, 2 * l + 4));
        iota_matrices.push(identity_blocks(n, row_blocks, col_blocks, &i_blocks));
    }

    Ok(TruncatedLambdaGraphSystem::new(
        alphabet,
        BASE,
        vertex_counts,
        symbol_matrices,
        iota_matrices,
    )?)
}

/// Places `1_N` blocks at the listed 1-based block positions.
fn identity_blocks(
    n: usize,
    row_blocks: usize,
    col_blocks: usize,
    blocks: &[(usize, usize)],
) -> IntMatrix {
    let mut m = IntMatrix::zeros(row_blocks * n, col_blocks * n);
    for &(rb, cb) in blocks {
        debug_assert!(rb >= 1 && rb <= row_blocks && cb >= 1 && cb <= col_blocks);
        for k in 0..n {
            m[((rb - 1) * n + k, (cb - 1) * n + k)] = BigInt::one();
        }
    }
    m
}

/// The Cantor-horizon presentation of the Dyck shift `D_N` with the default
/// per-level size cap.
pub fn dyck(n: usize, depth: usize) -> Result<TruncatedLambdaGraphSystem, BuilderError> {
    dyck_with_cap(n, depth, DYCK_LEVEL_CAP_DEFAULT)
}

/// [`dyck`] with an explicit cap on `m(l) = N^l` for every constructed
/// level `l <= depth`.
///
/// Vertices at level l are the `N^l` words of length l over the bracket
/// symbols `β_1..β_N`, ordered lexicographically with the first symbol most
/// significant. With 1-based indices:
///
/// * ι drops the last symbol, so `I_{l,l+1}(i, j) = 1` iff
///   `(i-1)·N < j <= i·N`;
/// * the `α_j`-labeled edges go from each `u` to `v = (β_j, u)`, column
///   `(j-1)·N^l + u`;
/// * the `β_j`-labeled edges go from each `u` starting with `β_j` to every
///   `v` whose first `l-1` symbols are `u` with its head removed: columns
///   `(p-1)·N² + 1 ..= p·N²` where `p - 1 = (i-1) mod N^{l-1}`. At `l = 0`
///   the head-removal condition is empty and every `β_j` connects the root
///   to every length-1 word.
///
/// The alphabet is `{a1..aN, b1..bN}` for `α_1..α_N, β_1..β_N`.
pub fn dyck_with_cap(
    n: usize,
    depth: usize,
    cap: usize,
) -> Result<TruncatedLambdaGraphSystem, BuilderError> {
    if n < 2 {
        return Err(BuilderError::NTooSmall { n });
    }
    if depth < 1 {
        return Err(BuilderError::DepthTooSmall { depth });
    }
    let mut vertex_counts = Vec::with_capacity(depth + 1);
    let mut m = 1usize;
    for l in 0..=depth {
        if m > cap {
            return Err(BuilderError::SizeCapExceeded {
                level: l,
                size: m,
                cap,
            });
        }
        vertex_counts.push(m);
        if l < depth {
            m = m.checked_mul(n).ok_or(BuilderError::SizeCapExceeded {
                level: l + 1,
                size: usize::MAX,
                cap,
            })?;
        }
    }

    let mut names = numbered_names("a", n);
    names.extend(numbered_names("b", n));
    let alphabet = Alphabet::new(names).map_err(BuilderError::Internal)?;

    let mut symbol_matrices = Vec::with_capacity(depth);
    let mut iota_matrices = Vec::with_capacity(depth);
    for l in 0..depth {
        let rows = vertex_counts[l];
        let cols = vertex_counts[l + 1];
        let mut mats = Vec::with_capacity(2 * n);
        for j in 1..=n {
            let mut alpha = IntMatrix::zeros(rows, cols);
            for u in 1..=rows {
                alpha[(u - 1, (j - 1) * rows + u - 1)] = BigInt::one();
            }
            mats.push(alpha);
        }
        for j in 1..=n {
            let mut beta = IntMatrix::zeros(rows, cols);
            if l == 0 {
                for v in 0..cols {
                    beta[(0, v)] = BigInt::one();
                }
            } else {
                let stride = rows / n; // N^{l-1}
                for i in 1..=rows {
                    if (i - 1) / stride + 1 != j {
                        continue;
                    }
                    let p = (i - 1) % stride + 1;
                    for c in (p - 1) * n * n..p * n * n {
                        beta[(i - 1, c)] = BigInt::one();
                    }
                }
            }
            mats.push(beta);
        }
        symbol_matrices.push(mats);

        let mut iota = IntMatrix::zeros(rows, cols);
        for i in 1..=rows {
            for j in (i - 1) * n..i * n {
                iota[(i - 1, j)] = BigInt::one();
            }
        }
        iota_matrices.push(iota);
    }

    Ok(TruncatedLambdaGraphSystem::new(
        alphabet,
        0,
        vertex_counts,
        symbol_matrices,
        iota_matrices,
    )?)
}

/// Reference `J`, `K`, `L` matrices for the pair `(l, l+1)` of the `N = 2`
/// Dyck system, generated straight from the index rules: `J(i, j) = 1` iff
/// `j = i` or `j = m(l) + i`; `L(i, j) = 1` iff `j = 2i - 1` or `j = 2i`;
/// `K` from the β-edge rule. Used as a cross-check oracle against
/// [`dyck`]`(2, ...)`.
pub fn dyck_jkl_reference(l: usize) -> (IntMatrix, IntMatrix, IntMatrix) {
    let m = 1usize << l;
    let m_next = m << 1;
    let j_mat = IntMatrix::from_fn(m, m_next, |i, j| {
        if j == i || j == m + i {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    let l_mat = IntMatrix::from_fn(m, m_next, |i, j| {
        // 1-based rule j = 2i-1 or 2i; 0-based: j = 2i or 2i+1.
        if j == 2 * i || j == 2 * i + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    let mut k_mat = IntMatrix::zeros(m, m_next);
    if l == 0 {
        for v in 0..m_next {
            k_mat[(0, v)] = BigInt::from(2);
        }
    } else {
        let stride = m / 2; // 2^{l-1}
        for i in 0..m {
            let p = i % stride;
            for c in p * 4..(p + 1) * 4 {
                k_mat[(i, c)] = BigInt::one();
            }
        }
    }
    (j_mat, k_mat, l_mat)
}
