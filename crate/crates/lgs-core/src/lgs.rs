//! Finite truncations of left-resolving λ-graph systems.
//!
//! A λ-graph system `(V, E, λ, ι)` over an alphabet Σ consists of vertex
//! sets `V_l`, edges from `V_l` to `V_{l+1}` labeled by Σ, and surjective
//! maps `ι: V_{l+1} → V_l`. A truncation stores the window
//! `[base_level, base_level + depth]` through its structure matrices: per
//! symbol α the 0/1 matrix `A_{l,l+1}(i, α, j)` and the 0/1 matrix
//! `I_{l,l+1}(i, j) = 1` iff `ι(v_j) = v_i`.
//!
//! The defining axioms checked here:
//! left-resolvingness (for fixed α and target vertex, at most one source),
//! ι being a surjective vertex map (each `I` column has exactly one 1, each
//! row at least one), and the local property in its matrix transcription
//! `A^{(α)}_{l,l+1} · I_{l+1,l+2} = I_{l,l+1} · A^{(α)}_{l+1,l+2}` for every
//! symbol and interior level pair. Summing the local property over α gives
//! the commutation identity `I A^𝔏 = A^𝔏 I` that tower maps rely on; it is
//! exposed separately by [`check_commutation`] because it is strictly weaker
//! than per-symbol validation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::intlinalg::IntMatrix;

/// An ordered alphabet of at least two distinct symbol names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet, rejecting fewer than two or duplicate symbols.
    pub fn new(symbols: Vec<String>) -> Result<Self, LgsError> {
        if symbols.len() < 2 {
            return Err(LgsError::AlphabetTooSmall {
                size: symbols.len(),
            });
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(LgsError::DuplicateSymbol { name: s.clone() });
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Number of symbols.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; alphabets have at least two symbols.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The symbol names in order.
    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Position of a symbol name, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }
}

/// Structural errors: the input does not even have the shape of a truncated
/// λ-graph system. Distinct from axiom violations, which concern the
/// mathematical content of well-shaped data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LgsError {
    /// Alphabets need at least two symbols.
    AlphabetTooSmall { size: usize },
    /// Symbol names must be distinct.
    DuplicateSymbol { name: String },
    /// At least two levels are needed to hold one level pair.
    TooFewLevels { levels: usize },
    /// Every level must have at least one vertex.
    EmptyLevel { level: usize },
    /// Wrong number of per-pair matrix families.
    WrongPairCount {
        expected: usize,
        found: usize,
        family: &'static str,
    },
    /// A pair is missing a symbol matrix or has extras.
    WrongSymbolCount {
        level: usize,
        expected: usize,
        found: usize,
    },
    /// A matrix has the wrong shape for its level pair.
    ShapeMismatch {
        level: usize,
        family: String,
        expected_rows: usize,
        expected_cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    /// Level outside the represented window.
    LevelOutOfRange {
        level: usize,
        base: usize,
        top: usize,
    },
    /// Symbol name not in the alphabet.
    UnknownSymbol { name: String },
    /// The operation needs a deeper truncation.
    InsufficientDepth { needed: usize, found: usize },
}

impl fmt::Display for LgsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LgsError::AlphabetTooSmall { size } => {
                write!(f, "alphabet must have at least 2 symbols, got {size}")
            }
            LgsError::DuplicateSymbol { name } => {
                write!(f, "duplicate symbol name {name:?}")
            }
            LgsError::TooFewLevels { levels } => {
                write!(f, "need at least 2 levels, got {levels}")
            }
            LgsError::EmptyLevel { level } => {
                write!(f, "level {level} has no vertices")
            }
            LgsError::WrongPairCount {
                expected,
                found,
                family,
            } => write!(
                f,
                "expected {expected} per-pair {family} entries, got {found}"
            ),
            LgsError::WrongSymbolCount {
                level,
                expected,
                found,
            } => write!(
                f,
                "level pair ({level}, {}) has {found} symbol matrices, alphabet has {expected}",
                level + 1
            ),
            LgsError::ShapeMismatch {
                level,
                family,
                expected_rows,
                expected_cols,
                found_rows,
                found_cols,
            } => write!(
                f,
                "{family} matrix at level pair ({level}, {}) is {found_rows}x{found_cols}, \
                 expected {expected_rows}x{expected_cols}",
                level + 1
            ),
            LgsError::LevelOutOfRange { level, base, top } => {
                write!(f, "level {level} outside represented window [{base}, {top}]")
            }
            LgsError::UnknownSymbol { name } => write!(f, "unknown symbol {name:?}"),
            LgsError::InsufficientDepth { needed, found } => {
                write!(f, "operation needs depth >= {needed}, truncation has depth {found}")
            }
        }
    }
}

/// A violated λ-graph-system axiom, with the indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// An entry of a symbol matrix is not 0 or 1.
    NonBinarySymbolEntry {
        level: usize,
        symbol: String,
        row: usize,
        col: usize,
    },
    /// An entry of an ι-matrix is not 0 or 1.
    NonBinaryIotaEntry { level: usize, row: usize, col: usize },
    /// A column of an ι-matrix does not have exactly one 1, so ι is not a
    /// map on vertices.
    IotaColumnNotSingle { level: usize, col: usize, ones: usize },
    /// A row of an ι-matrix has no 1, so ι is not surjective.
    IotaRowEmpty { level: usize, row: usize },
    /// Two sources reach the same target with the same label.
    LeftResolvingViolation {
        level: usize,
        symbol: String,
        col: usize,
    },
    /// The per-symbol local property
    /// `A^{(α)}_{l,l+1} I_{l+1,l+2} = I_{l,l+1} A^{(α)}_{l+1,l+2}` fails.
    LocalPropertyViolation {
        level: usize,
        symbol: String,
        row: usize,
        col: usize,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::NonBinarySymbolEntry {
                level,
                symbol,
                row,
                col,
            } => write!(
                f,
                "symbol {symbol:?} matrix at pair ({level}, {}) has non-binary entry at ({row}, {col})",
                level + 1
            ),
            AxiomViolation::NonBinaryIotaEntry { level, row, col } => write!(
                f,
                "iota matrix at pair ({level}, {}) has non-binary entry at ({row}, {col})",
                level + 1
            ),
            AxiomViolation::IotaColumnNotSingle { level, col, ones } => write!(
                f,
                "iota matrix at pair ({level}, {}) column {col} has {ones} ones, expected exactly 1",
                level + 1
            ),
            AxiomViolation::IotaRowEmpty { level, row } => write!(
                f,
                "iota matrix at pair ({level}, {}) row {row} is zero; iota is not surjective onto level {level}",
                level + 1
            ),
            AxiomViolation::LeftResolvingViolation { level, symbol, col } => write!(
                f,
                "left-resolving fails at pair ({level}, {}): symbol {symbol:?}, target column {col} has multiple sources",
                level + 1
            ),
            AxiomViolation::LocalPropertyViolation {
                level,
                symbol,
                row,
                col,
            } => write!(
                f,
                "local property fails for symbol {symbol:?} at levels ({level}, {}, {}): \
                 entry ({row}, {col}) of A*I differs from I*A",
                level + 1,
                level + 2
            ),
        }
    }
}

/// A nondegeneracy warning: a vertex with no edge on one side. The
/// builder families never produce these, but hand-authored inputs may;
/// warnings do not fail validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegeneracyWarning {
    /// No labeled edge leaves this vertex (checked only when the outgoing
    /// pair is inside the truncation).
    NoOutgoingEdge { level: usize, vertex: usize },
    /// No labeled edge enters this vertex (checked only when the incoming
    /// pair is inside the truncation).
    NoIncomingEdge { level: usize, vertex: usize },
}

impl fmt::Display for DegeneracyWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegeneracyWarning::NoOutgoingEdge { level, vertex } => {
                write!(f, "vertex {vertex} at level {level} has no outgoing labeled edge")
            }
            DegeneracyWarning::NoIncomingEdge { level, vertex } => {
                write!(f, "vertex {vertex} at level {level} has no incoming labeled edge")
            }
        }
    }
}

/// Everything `validate` found: hard axiom violations and soft warnings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
    pub warnings: Vec<DegeneracyWarning>,
}

impl ValidationReport {
    /// True when no axiom is violated (warnings allowed).
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-level-pair outcome of the summed commutation identity
/// `I_{l,l+1} A^𝔏_{l+1,l+2} = A^𝔏_{l,l+1} I_{l+1,l+2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    /// `(l, holds)` for every interior level l.
    pub levels: Vec<(usize, bool)>,
}

impl CommutationReport {
    /// True when the identity holds at every interior level.
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|(_, ok)| *ok)
    }
}

/// A finite window of a λ-graph system, held through its structure
/// matrices. Construction checks shapes only; mathematical axioms are the
/// business of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLambdaGraphSystem {
    alphabet: Alphabet,
    base_level: usize,
    vertex_counts: Vec<usize>,
    /// `symbol_matrices[t][s]` is the matrix of symbol `s` for the pair
    /// `(base_level + t, base_level + t + 1)`.
    symbol_matrices: Vec<Vec<IntMatrix>>,
    /// `iota_matrices[t]` for the same pair indexing.
    iota_matrices: Vec<IntMatrix>,
}

impl TruncatedLambdaGraphSystem {
    /// Assembles a truncation after checking all shapes against
    /// `vertex_counts`. Shape problems are structural errors; no axiom is
    /// inspected here.
    pub fn new(
        alphabet: Alphabet,
        base_level: usize,
        vertex_counts: Vec<usize>,
        symbol_matrices: Vec<Vec<IntMatrix>>,
        iota_matrices: Vec<IntMatrix>,
    ) -> Result<Self, LgsError> {
        if vertex_counts.len() < 2 {
            return Err(LgsError::TooFewLevels {
                levels: vertex_counts.len(),
            });
        }
        for (t, &m) in vertex_counts.iter().enumerate() {
            if m == 0 {
                return Err(LgsError::EmptyLevel {
                    level: base_level + t,
                });
            }
        }
        let pairs = vertex_counts.len() - 1;
        if symbol_matrices.len() != pairs {
            return Err(LgsError::WrongPairCount {
                expected: pairs,
                found: symbol_matrices.len(),
                family: "symbol-matrix",
            });
        }
        if iota_matrices.len() != pairs {
            return Err(LgsError::WrongPairCount {
                expected: pairs,
                found: iota_matrices.len(),
                family: "iota-matrix",
            });
        }
        for t in 0..pairs {
            let level = base_level + t;
            let (rows, cols) = (vertex_counts[t], vertex_counts[t + 1]);
            if symbol_matrices[t].len() != alphabet.len() {
                return Err(LgsError::WrongSymbolCount {
                    level,
                    expected: alphabet.len(),
                    found: symbol_matrices[t].len(),
                });
            }
            for (s, m) in symbol_matrices[t].iter().enumerate() {
                if m.rows() != rows || m.cols() != cols {
                    return Err(LgsError::ShapeMismatch {
                        level,
                        family: format!("symbol {:?}", alphabet.symbols()[s]),
                        expected_rows: rows,
                        expected_cols: cols,
                        found_rows: m.rows(),
                        found_cols: m.cols(),
                    });
                }
            }
            let io = &iota_matrices[t];
            if io.rows() != rows || io.cols() != cols {
                return Err(LgsError::ShapeMismatch {
                    level,
                    family: String::from("iota"),
                    expected_rows: rows,
                    expected_cols: cols,
                    found_rows: io.rows(),
                    found_cols: io.cols(),
                });
            }
        }
        Ok(TruncatedLambdaGraphSystem {
            alphabet,
            base_level,
            vertex_counts,
            symbol_matrices,
            iota_matrices,
        })
    }

    /// The alphabet.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// First represented level.
    pub fn base_level(&self) -> usize {
        self.base_level
    }

    /// Number of level pairs below the top (depth of the window).
    pub fn depth(&self) -> usize {
        self.vertex_counts.len() - 1
    }

    /// Last represented level, `base_level + depth`.
    pub fn top_level(&self) -> usize {
        self.base_level + self.depth()
    }

    /// `m(l)`, the number of vertices at level `l`.
    pub fn vertex_count(&self, level: usize) -> Result<usize, LgsError> {
        self.level_index(level).map(|t| self.vertex_counts[t])
    }

    /// All vertex counts, base level first.
    pub fn vertex_counts(&self) -> &[usize] {
        &self.vertex_counts
    }

    /// The ι-matrix `I_{l,l+1}`.
    pub fn iota_matrix(&self, level: usize) -> Result<&IntMatrix, LgsError> {
        self.pair_index(level).map(|t| &self.iota_matrices[t])
    }

    /// The symbol matrices of the pair `(l, l+1)`, in alphabet order.
    pub fn symbol_matrices_at(&self, level: usize) -> Result<&[IntMatrix], LgsError> {
        self.pair_index(level).map(|t| &self.symbol_matrices[t][..])
    }

    fn level_index(&self, level: usize) -> Result<usize, LgsError> {
        if level < self.base_level || level > self.top_level() {
            return Err(LgsError::LevelOutOfRange {
                level,
                base: self.base_level,
                top: self.top_level(),
            });
        }
        Ok(level - self.base_level)
    }

    /// Index of the pair `(l, l+1)`; the last valid l is `top_level - 1`.
    fn pair_index(&self, level: usize) -> Result<usize, LgsError> {
        if level < self.base_level || level + 1 > self.top_level() {
            return Err(LgsError::LevelOutOfRange {
                level,
                base: self.base_level,
                top: self.top_level().saturating_sub(1),
            });
        }
        Ok(level - self.base_level)
    }

    /// Decomposes the system into its raw parts, in constructor order.
    #[allow(clippy::type_complexity)]
    pub fn into_parts(
        self,
    ) -> (
        Alphabet,
        usize,
        Vec<usize>,
        Vec<Vec<IntMatrix>>,
        Vec<IntMatrix>,
    ) {
        (
            self.alphabet,
            self.base_level,
            self.vertex_counts,
            self.symbol_matrices,
            self.iota_matrices,
        )
    }
}

/// The stored 0/1 matrix of symbol `symbol` for the pair `(l, l+1)`.
pub fn symbol_matrix<'a>(
    lgs: &'a TruncatedLambdaGraphSystem,
    level: usize,
    symbol: &str,
) -> Result<&'a IntMatrix, LgsError> {
    let s = lgs
        .alphabet
        .index_of(symbol)
        .ok_or_else(|| LgsError::UnknownSymbol {
            name: String::from(symbol),
        })?;
    Ok(&lgs.symbol_matrices_at(level)?[s])
}

/// The summed matrix `A^𝔏_{l,l+1} = Σ_α A^{(α)}_{l,l+1}`; entries may
/// exceed 1.
pub fn summed_matrix(
    lgs: &TruncatedLambdaGraphSystem,
    level: usize,
) -> Result<IntMatrix, LgsError> {
    let mats = lgs.symbol_matrices_at(level)?;
    let mut sum = mats[0].clone();
    for m in &mats[1..] {
        sum = &sum + m;
    }
    Ok(sum)
}

/// Checks every λ-graph-system axiom and collects all violations plus
/// nondegeneracy warnings. Shape correctness is already guaranteed by
/// construction, so this function cannot fail; it only reports.
pub fn validate(lgs: &TruncatedLambdaGraphSystem) -> ValidationReport {
    let mut report = ValidationReport::default();
    let base = lgs.base_level();
    let pairs = lgs.depth();

    for t in 0..pairs {
        let level = base + t;
        let io = &lgs.iota_matrices[t];
        for i in 0..io.rows() {
            for j in 0..io.cols() {
                let e = &io[(i, j)];
                if !e.is_zero() && !e.is_one() {
                    report.violations.push(AxiomViolation::NonBinaryIotaEntry {
                        level,
                        row: i,
                        col: j,
                    });
                }
            }
        }
        for j in 0..io.cols() {
            let ones = (0..io.rows()).filter(|&i| io[(i, j)].is_one()).count();
            if ones != 1 {
                report
                    .violations
                    .push(AxiomViolation::IotaColumnNotSingle { level, col: j, ones });
            }
        }
        for i in 0..io.rows() {
            if (0..io.cols()).all(|j| io[(i, j)].is_zero()) {
                report
                    .violations
                    .push(AxiomViolation::IotaRowEmpty { level, row: i });
            }
        }

        for (s, m) in lgs.symbol_matrices[t].iter().enumerate() {
            let name = &lgs.alphabet.symbols()[s];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let e = &m[(i, j)];
                    if !e.is_zero() && !e.is_one() {
                        report
                            .violations
                            .push(AxiomViolation::NonBinarySymbolEntry {
                                level,
                                symbol: name.clone(),
                                row: i,
                                col: j,
                            });
                    }
                }
            }
            for j in 0..m.cols() {
                let ones = (0..m.rows()).filter(|&i| !m[(i, j)].is_zero()).count();
                if ones > 1 {
                    report.violations.push(AxiomViolation::LeftResolvingViolation {
                        level,
                        symbol: name.clone(),
                        col: j,
                    });
                }
            }
        }
    }

    // Local property on interior pairs, one identity per symbol.
    for t in 0..pairs.saturating_sub(1) {
        let level = base + t;
        for (s, name) in lgs.alphabet.symbols().iter().enumerate() {
            let left = lgs.symbol_matrices[t][s].mul_mat(&lgs.iota_matrices[t + 1]);
            let right = lgs.iota_matrices[t].mul_mat(&lgs.symbol_matrices[t + 1][s]);
            if left != right {
                let (row, col) = first_difference(&left, &right);
                report.violations.push(AxiomViolation::LocalPropertyViolation {
                    level,
                    symbol: name.clone(),
                    row,
                    col,
                });
            }
        }
    }

    // Nondegeneracy warnings, respecting the truncation boundary: only the
    // side of a vertex whose level pair is materialized can be checked.
    for t in 0..pairs {
        let level = base + t;
        let m_l = lgs.vertex_counts[t];
        let m_next = lgs.vertex_counts[t + 1];
        for v in 0..m_l {
            let has_out = lgs.symbol_matrices[t]
                .iter()
                .any(|m| (0..m_next).any(|j| !m[(v, j)].is_zero()));
            if !has_out {
                report
                    .warnings
                    .push(DegeneracyWarning::NoOutgoingEdge { level, vertex: v });
            }
        }
        for v in 0..m_next {
            let has_in = lgs.symbol_matrices[t]
                .iter()
                .any(|m| (0..m_l).any(|i| !m[(i, v)].is_zero()));
            if !has_in {
                report.warnings.push(DegeneracyWarning::NoIncomingEdge {
                    level: level + 1,
                    vertex: v,
                });
            }
        }
    }

    report
}

fn first_difference(a: &IntMatrix, b: &IntMatrix) -> (usize, usize) {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)] != b[(i, j)] {
                return (i, j);
            }
        }
    }
    unreachable!("matrices compared unequal must differ somewhere")
}

/// Verifies the summed commutation identity
/// `I_{l,l+1} A^𝔏_{l+1,l+2} = A^𝔏_{l,l+1} I_{l+1,l+2}` at every interior
/// level. Implied by a passing [`validate`] (sum the per-symbol local
/// property over α), but strictly weaker: per-symbol defects can cancel in
/// the sum.
pub fn check_commutation(
    lgs: &TruncatedLambdaGraphSystem,
) -> Result<CommutationReport, LgsError> {
    if lgs.depth() < 2 {
        return Err(LgsError::InsufficientDepth {
            needed: 2,
            found: lgs.depth(),
        });
    }
    let base = lgs.base_level();
    let mut levels = Vec::new();
    for t in 0..lgs.depth() - 1 {
        let a_l = summed_level(lgs, t);
        let a_next = summed_level(lgs, t + 1);
        let lhs = lgs.iota_matrices[t].mul_mat(&a_next);
        let rhs = a_l.mul_mat(&lgs.iota_matrices[t + 1]);
        levels.push((base + t, lhs == rhs));
    }
    Ok(CommutationReport { levels })
}

fn summed_level(lgs: &TruncatedLambdaGraphSystem, t: usize) -> IntMatrix {
    let mut sum = lgs.symbol_matrices[t][0].clone();
    for m in &lgs.symbol_matrices[t][1..] {
        sum = &sum + m;
    }
    sum
}
