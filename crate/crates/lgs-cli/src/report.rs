//! Report rendering for the command-line tool.
//!
//! Two formats share one data source. The text format is for reading; the
//! machine format emits one JSON record per line with every group and
//! integer rendered canonically, so byte-identical inputs always produce
//! byte-identical reports and the output can be diffed in regression tests.
//! Groups print as `Z^r (+) Z/d1 (+) Z/d2 ...` with divisor-ordered
//! torsion; the trivial group prints as `0`.

use num_bigint::BigInt;
use serde::Serialize;

use lgs_core::{
    FGAbelianGroup, GroupTower, IotaHatClass, KernelTruncation, SixTermReport, Stabilization,
    ValidationReport,
};

/// Output style selected with `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    /// Indented human-readable lines.
    Text,
    /// One JSON record per line.
    Machine,
}

/// Where a report's subject came from, echoed at the top of every report.
#[derive(Clone, Debug)]
pub enum Provenance {
    /// Built in-process by a named builder family.
    Builder { family: String, params: String },
    /// Read from a document file.
    File { path: String, hash: String },
    /// Parsed from a command-line matrix literal.
    Literal { text: String },
}

/// 64-bit FNV-1a content hash, rendered as fixed-width hex.
pub fn fnv1a64(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

/// Canonical group name, `Z^r (+) Z/d1 (+) ...`, `0` when trivial.
pub fn group_name(g: &FGAbelianGroup) -> String {
    g.to_string()
}

/// Accumulates lines in one of the two formats.
pub struct Reporter {
    format: ReportFormat,
    lines: Vec<String>,
}

#[derive(Serialize)]
struct ProvenanceRec<'a> {
    record: &'static str,
    kind: &'static str,
    source: &'a str,
    hash: Option<&'a str>,
}

#[derive(Serialize)]
struct ValidationRec {
    record: &'static str,
    passed: bool,
    violations: usize,
    warnings: usize,
}

#[derive(Serialize)]
struct MessageRec<'a> {
    record: &'static str,
    severity: &'static str,
    message: &'a str,
}

#[derive(Serialize)]
struct TowerRec<'a> {
    record: &'static str,
    invariant: &'a str,
    window: usize,
    stabilized: bool,
    stabilized_at: Option<usize>,
    limit: Option<String>,
}

#[derive(Serialize)]
struct TowerLevelRec<'a> {
    record: &'static str,
    invariant: &'a str,
    level: usize,
    group: String,
}

#[derive(Serialize)]
struct ConnectingRec<'a> {
    record: &'static str,
    invariant: &'a str,
    source_level: usize,
    target_level: usize,
    isomorphism: bool,
}

#[derive(Serialize)]
struct KernelRec<'a> {
    record: &'static str,
    invariant: &'a str,
    level: usize,
    rank: usize,
    sum_image: String,
}

#[derive(Serialize)]
struct SixTermRec {
    record: &'static str,
    level: Option<usize>,
    window: Option<usize>,
    conclusive: bool,
    strong_ext0: String,
    weak_ext0: String,
    strong_ext1: String,
    weak_ext1: String,
    sum_image: String,
    iota_hat_one_order: String,
    overall: bool,
}

#[derive(Serialize)]
struct JunctionRec<'a> {
    record: &'static str,
    label: String,
    passed: bool,
    description: &'a str,
}

#[derive(Serialize)]
struct IotaHatRec {
    record: &'static str,
    level: usize,
    representative_sum: String,
    coordinates: Vec<String>,
    order: String,
}

#[derive(Serialize)]
struct GroupRec<'a> {
    record: &'static str,
    invariant: &'a str,
    group: String,
}

#[derive(Serialize)]
struct CompareRec {
    record: &'static str,
    weak_agree: bool,
    strong_agree: bool,
    agree: bool,
}

fn order_name(order: &Option<BigInt>) -> String {
    match order {
        Some(d) => d.to_string(),
        None => String::from("infinite"),
    }
}

impl Reporter {
    /// A reporter that opens with the provenance of the subject.
    pub fn new(format: ReportFormat, provenance: &Provenance) -> Reporter {
        let mut r = Reporter {
            format,
            lines: Vec::new(),
        };
        match provenance {
            Provenance::Builder { family, params } => {
                r.push_text(format!("source: builder {family} {params}"));
                r.push_record(&ProvenanceRec {
                    record: "provenance",
                    kind: "builder",
                    source: &format!("{family} {params}"),
                    hash: None,
                });
            }
            Provenance::File { path, hash } => {
                r.push_text(format!("source: file {path} (fnv1a64 {hash})"));
                r.push_record(&ProvenanceRec {
                    record: "provenance",
                    kind: "file",
                    source: path,
                    hash: Some(hash),
                });
            }
            Provenance::Literal { text } => {
                r.push_text(format!("source: matrix literal {text}"));
                r.push_record(&ProvenanceRec {
                    record: "provenance",
                    kind: "literal",
                    source: text,
                    hash: None,
                });
            }
        }
        r
    }

    fn push_text(&mut self, line: String) {
        if self.format == ReportFormat::Text {
            self.lines.push(line);
        }
    }

    fn push_record<T: Serialize>(&mut self, rec: &T) {
        if self.format == ReportFormat::Machine {
            self.lines
                .push(serde_json::to_string(rec).expect("report record serializes"));
        }
    }

    /// The finished report, newline-terminated.
    pub fn finish(self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }

    /// Renders an axiom validation report.
    pub fn validation(&mut self, report: &ValidationReport) {
        self.push_text(format!(
            "validation: {} ({} violation(s), {} warning(s))",
            if report.passed() { "passed" } else { "FAILED" },
            report.violations.len(),
            report.warnings.len(),
        ));
        self.push_record(&ValidationRec {
            record: "validation",
            passed: report.passed(),
            violations: report.violations.len(),
            warnings: report.warnings.len(),
        });
        for v in &report.violations {
            let msg = v.to_string();
            self.push_text(format!("  violation: {msg}"));
            self.push_record(&MessageRec {
                record: "violation",
                severity: "violation",
                message: &msg,
            });
        }
        for w in &report.warnings {
            let msg = w.to_string();
            self.push_text(format!("  warning: {msg}"));
            self.push_record(&MessageRec {
                record: "warning",
                severity: "warning",
                message: &msg,
            });
        }
    }

    /// Renders an Ext^1 tower with its levels, maps, and stabilization.
    pub fn tower(&mut self, invariant: &str, tower: &GroupTower) {
        let (stabilized, stabilized_at) = match tower.stabilization {
            Stabilization::StabilizedAt { level } => (true, Some(level)),
            Stabilization::NotStabilized => (false, None),
        };
        let limit = tower.stabilized_group().map(group_name);
        self.push_text(format!("{invariant} tower (window {})", tower.window));
        self.push_record(&TowerRec {
            record: "tower",
            invariant,
            window: tower.window,
            stabilized,
            stabilized_at,
            limit: limit.clone(),
        });
        for (level, pres) in &tower.levels {
            let group = group_name(&pres.group);
            self.push_text(format!("  level {level}: {group}"));
            self.push_record(&TowerLevelRec {
                record: "tower_level",
                invariant,
                level: *level,
                group,
            });
        }
        for (k, map) in tower.connecting_maps.iter().enumerate() {
            let target_level = tower.levels[k].0;
            let source_level = tower.levels[k + 1].0;
            self.push_text(format!(
                "  map {source_level} -> {target_level}: {}",
                if map.is_isomorphism {
                    "isomorphism"
                } else {
                    "not an isomorphism"
                }
            ));
            self.push_record(&ConnectingRec {
                record: "connecting_map",
                invariant,
                source_level,
                target_level,
                isomorphism: map.is_isomorphism,
            });
        }
        self.push_text(match stabilized_at {
            Some(level) => format!("  stabilization: stabilized at level {level}"),
            None => String::from("  stabilization: not stabilized within this truncation"),
        });
        if let Some(g) = limit {
            self.push_text(format!("  limit: {g}"));
        }
    }

    /// Renders kernel truncations, one row per level.
    pub fn kernels(&mut self, invariant: &str, entries: &[KernelTruncation]) {
        self.push_text(format!("{invariant} truncations"));
        for k in entries {
            self.push_text(format!(
                "  level {}: rank {}, sum image {}Z",
                k.top_level, k.rank, k.sum_image
            ));
            self.push_record(&KernelRec {
                record: "kernel",
                invariant,
                level: k.top_level,
                rank: k.rank,
                sum_image: k.sum_image.to_string(),
            });
        }
    }

    /// Renders a six-term junction report, with the ι̂ class when the
    /// subject is a truncated system.
    pub fn sixterm(&mut self, report: &SixTermReport, window: Option<usize>, iota: Option<&IotaHatClass>) {
        match report.level {
            Some(level) => self.push_text(format!(
                "six-term junction report at level {level} (window {})",
                window.unwrap_or(0)
            )),
            None => self.push_text(String::from("six-term junction report (exact, constant system)")),
        }
        self.push_record(&SixTermRec {
            record: "sixterm",
            level: report.level,
            window,
            conclusive: report.conclusive,
            strong_ext0: group_name(&report.strong_ext0),
            weak_ext0: group_name(&report.weak_ext0),
            strong_ext1: group_name(&report.strong_ext1),
            weak_ext1: group_name(&report.weak_ext1),
            sum_image: report.sum_image.to_string(),
            iota_hat_one_order: order_name(&report.iota_hat_one_order),
            overall: report.overall,
        });
        self.push_text(format!("  strong_ext0: {}", group_name(&report.strong_ext0)));
        self.push_text(format!("  weak_ext0:   {}", group_name(&report.weak_ext0)));
        self.push_text(format!("  strong_ext1: {}", group_name(&report.strong_ext1)));
        self.push_text(format!("  weak_ext1:   {}", group_name(&report.weak_ext1)));
        self.push_text(format!(
            "  s map image: {}Z, iota_hat(1) order: {}",
            report.sum_image,
            order_name(&report.iota_hat_one_order)
        ));
        if let Some(class) = iota {
            let rep_sum: BigInt = class.representative.iter().sum();
            let coords: Vec<String> = class.coordinates.iter().map(BigInt::to_string).collect();
            self.push_text(format!(
                "  iota_hat(1): representative sum {rep_sum}, coordinates [{}], order {}",
                coords.join(", "),
                order_name(&class.order)
            ));
            self.push_record(&IotaHatRec {
                record: "iota_hat",
                level: class.level,
                representative_sum: rep_sum.to_string(),
                coordinates: coords,
                order: order_name(&class.order),
            });
        }
        for j in &report.junctions {
            self.push_text(format!(
                "  junction {} ({}): {}",
                j.label,
                j.description,
                if j.passed { "pass" } else { "FAIL" }
            ));
            self.push_record(&JunctionRec {
                record: "junction",
                label: j.label.to_string(),
                passed: j.passed,
                description: j.description,
            });
        }
        self.push_text(format!(
            "  conclusive: {}, overall: {}",
            report.conclusive,
            if report.overall { "pass" } else { "FAIL" }
        ));
    }

    /// Renders one named group.
    pub fn group(&mut self, invariant: &str, g: &FGAbelianGroup) {
        let group = group_name(g);
        self.push_text(format!("{invariant}: {group}"));
        self.push_record(&GroupRec {
            record: "group",
            invariant,
            group,
        });
    }

    /// Renders a two-matrix invariant comparison.
    pub fn compare(
        &mut self,
        first: (&FGAbelianGroup, &FGAbelianGroup),
        second: (&FGAbelianGroup, &FGAbelianGroup),
    ) {
        let weak_agree = first.0 == second.0;
        let strong_agree = first.1 == second.1;
        self.push_text(format!(
            "first:  weak {}, strong {}",
            group_name(first.0),
            group_name(first.1)
        ));
        self.push_text(format!(
            "second: weak {}, strong {}",
            group_name(second.0),
            group_name(second.1)
        ));
        self.push_text(format!(
            "agree: {}",
            if weak_agree && strong_agree { "yes" } else { "no" }
        ));
        self.push_record(&CompareRec {
            record: "compare",
            weak_agree,
            strong_agree,
            agree: weak_agree && strong_agree,
        });
    }
}
