//! File formats and report rendering behind the `lgs` command-line tool.
//!
//! The binary target wires these pieces to a clap interface; they live in a
//! library so the interchange format and the report layouts can be exercised
//! directly by tests and reused by other front ends.

pub mod document;
pub mod report;
