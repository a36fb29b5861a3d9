//! Interchange format for truncated λ-graph systems.
//!
//! A document records the alphabet, the base level, the vertex count of
//! every level, and for each level pair the alphabet-ordered symbol
//! matrices together with the ι-matrix, all as plain integer arrays in
//! JSON. Parsing enforces shape consistency only; whether the data
//! satisfies the λ-graph-system axioms is a separate question answered by
//! `lgs_core::validate`.
//!
//! Emission is canonical (fixed field order, pretty-printed, trailing
//! newline), so `from_json(to_json(doc)) == doc` and re-emitting a parsed
//! document reproduces the input byte for byte.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use lgs_core::{Alphabet, IntMatrix, LgsError, TruncatedLambdaGraphSystem};

/// The format version this build writes and the only one it accepts.
pub const FORMAT_VERSION: u32 = 1;

/// A parsed or to-be-written system document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LgsDocument {
    /// Interchange format version, currently always [`FORMAT_VERSION`].
    pub format_version: u32,
    /// Symbol names in canonical order.
    pub alphabet: Vec<String>,
    /// Level index of the first stored level.
    pub base_level: usize,
    /// `vertex_counts[t]` is the number of vertices at `base_level + t`.
    pub vertex_counts: Vec<usize>,
    /// One record per level pair, shallowest first.
    pub level_pairs: Vec<LevelPairRecord>,
}

/// Matrices of one level pair `(level, level + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelPairRecord {
    /// The shallower level of the pair.
    pub level: usize,
    /// One matrix per alphabet symbol, in alphabet order, each
    /// `m(level) x m(level + 1)` as a row-major array of rows.
    pub symbol_matrices: Vec<Vec<Vec<i64>>>,
    /// The ι-matrix of the pair, same shape.
    pub iota_matrix: Vec<Vec<i64>>,
}

/// Rejected document input or output.
#[derive(Debug)]
pub enum DocumentError {
    /// The text is not valid JSON for the document schema.
    Json(serde_json::Error),
    /// The document declares a format version this build does not read.
    UnsupportedVersion { found: u32 },
    /// A matrix has rows of unequal length.
    RaggedMatrix { level: usize, what: String },
    /// A level-pair record's `level` disagrees with its position.
    LevelMismatch { expected: usize, found: usize },
    /// The document's shapes do not assemble into a system.
    Structure(LgsError),
    /// An entry does not fit the interchange integer range.
    EntryTooLarge { level: usize, what: String },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Json(e) => write!(f, "invalid document JSON: {e}"),
            DocumentError::UnsupportedVersion { found } => {
                write!(f, "unsupported format_version {found}, this build reads {FORMAT_VERSION}")
            }
            DocumentError::RaggedMatrix { level, what } => {
                write!(f, "{what} at level pair ({level}, {}) has ragged rows", level + 1)
            }
            DocumentError::LevelMismatch { expected, found } => {
                write!(f, "level pair record declares level {found}, position implies {expected}")
            }
            DocumentError::Structure(e) => write!(f, "document shapes are inconsistent: {e}"),
            DocumentError::EntryTooLarge { level, what } => {
                write!(f, "{what} at level pair ({level}, {}) has an entry outside the i64 interchange range", level + 1)
            }
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Json(e)
    }
}

impl From<LgsError> for DocumentError {
    fn from(e: LgsError) -> Self {
        DocumentError::Structure(e)
    }
}

impl LgsDocument {
    /// Captures a system as a document.
    pub fn from_system(lgs: &TruncatedLambdaGraphSystem) -> Result<LgsDocument, DocumentError> {
        let base = lgs.base_level();
        let mut level_pairs = Vec::with_capacity(lgs.depth());
        for level in base..lgs.top_level() {
            let symbols = lgs
                .symbol_matrices_at(level)
                .expect("level range is in bounds")
                .iter()
                .enumerate()
                .map(|(s, m)| matrix_to_rows(m, level, &format!("symbol matrix #{s}")))
                .collect::<Result<Vec<_>, _>>()?;
            let iota = lgs.iota_matrix(level).expect("level range is in bounds");
            level_pairs.push(LevelPairRecord {
                level,
                symbol_matrices: symbols,
                iota_matrix: matrix_to_rows(iota, level, "iota matrix")?,
            });
        }
        Ok(LgsDocument {
            format_version: FORMAT_VERSION,
            alphabet: lgs.alphabet().symbols().to_vec(),
            base_level: base,
            vertex_counts: lgs.vertex_counts().to_vec(),
            level_pairs,
        })
    }

    /// Assembles the documented system, enforcing shape consistency.
    pub fn to_system(&self) -> Result<TruncatedLambdaGraphSystem, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion {
                found: self.format_version,
            });
        }
        let alphabet = Alphabet::new(self.alphabet.clone())?;
        let mut symbol_matrices = Vec::with_capacity(self.level_pairs.len());
        let mut iota_matrices = Vec::with_capacity(self.level_pairs.len());
        for (t, pair) in self.level_pairs.iter().enumerate() {
            let expected = self.base_level + t;
            if pair.level != expected {
                return Err(DocumentError::LevelMismatch {
                    expected,
                    found: pair.level,
                });
            }
            let symbols = pair
                .symbol_matrices
                .iter()
                .enumerate()
                .map(|(s, rows)| matrix_from_rows(rows, pair.level, &format!("symbol matrix #{s}")))
                .collect::<Result<Vec<_>, _>>()?;
            symbol_matrices.push(symbols);
            iota_matrices.push(matrix_from_rows(&pair.iota_matrix, pair.level, "iota matrix")?);
        }
        Ok(TruncatedLambdaGraphSystem::new(
            alphabet,
            self.base_level,
            self.vertex_counts.clone(),
            symbol_matrices,
            iota_matrices,
        )?)
    }

    /// Canonical JSON text of the document.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    /// Parses document JSON. Shapes are checked by [`LgsDocument::to_system`].
    pub fn from_json(text: &str) -> Result<LgsDocument, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Parses document text and assembles the system in one step.
pub fn parse_system(text: &str) -> Result<(LgsDocument, TruncatedLambdaGraphSystem), DocumentError> {
    let doc = LgsDocument::from_json(text)?;
    let sys = doc.to_system()?;
    Ok((doc, sys))
}

fn matrix_to_rows(
    m: &IntMatrix,
    level: usize,
    what: &str,
) -> Result<Vec<Vec<i64>>, DocumentError> {
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            row.push(
                i64::try_from(&m[(i, j)]).map_err(|_| DocumentError::EntryTooLarge {
                    level,
                    what: what.to_string(),
                })?,
            );
        }
        rows.push(row);
    }
    Ok(rows)
}

fn matrix_from_rows(
    rows: &[Vec<i64>],
    level: usize,
    what: &str,
) -> Result<IntMatrix, DocumentError> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|row| row.len() != c) {
        return Err(DocumentError::RaggedMatrix {
            level,
            what: what.to_string(),
        });
    }
    Ok(IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j])))
}
