//! The `lgs` command: builds truncated λ-graph systems, validates their
//! axioms, and computes extension-group invariants, six-term junction
//! reports, and closed matrix formulas.
//!
//! Exit codes: 0 success, 2 usage, 3 parse failure, 4 axiom violation,
//! 5 insufficient depth, 6 internal consistency failure, 7 builder
//! rejection.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;

use lgs_cli::document::{parse_system, DocumentError, LgsDocument};
use lgs_cli::report::{fnv1a64, Provenance, ReportFormat, Reporter};
use lgs_core::{
    ck_six_term, ck_strong_ext, ck_weak_ext, cuntz, cuntz_krieger, dyck_with_cap, iota_hat,
    markov_coded, six_term_check, strong_ext0_truncated, strong_ext1_tower, validate,
    weak_ext0_truncated, weak_ext1_tower, BuilderError, DirectedGraphSpec, ExtError, IntMatrix,
    KernelTruncation, LgsError, TruncatedLambdaGraphSystem, DYCK_LEVEL_CAP_DEFAULT,
};

const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_AXIOM: u8 = 4;
const EXIT_DEPTH: u8 = 5;
const EXIT_INTERNAL: u8 = 6;
const EXIT_BUILDER: u8 = 7;

/// Environment variable overriding the per-level vertex-count cap of the
/// dyck builder.
const LEVEL_CAP_VAR: &str = "LGS_LEVEL_SIZE_CAP";

#[derive(Parser)]
#[command(
    name = "lgs",
    version,
    about = "Exact extension-group invariants of truncated lambda-graph systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a system from a named family and write it as a document.
    Build {
        /// Builder family.
        #[arg(value_enum)]
        family: Family,
        /// Number of symbols (cuntz) or bracket pairs (dyck).
        #[arg(long)]
        n: Option<usize>,
        /// Matrix literal such as [[1,1],[1,0]] (cuntz-krieger, markov-coded).
        #[arg(long, conflicts_with = "matrix_file")]
        matrix: Option<String>,
        /// File holding a matrix literal.
        #[arg(long)]
        matrix_file: Option<PathBuf>,
        /// Truncation depth. Defaults: cuntz 4, cuntz-krieger 4,
        /// markov-coded 7, dyck 8.
        #[arg(long)]
        depth: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the axioms of a documented system.
    Validate {
        /// Input document.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute extension-group towers and kernel truncations.
    Ext {
        /// Input document.
        input: PathBuf,
        /// Which invariant to compute.
        #[arg(long, value_enum, default_value_t = WhichExt::All)]
        which: WhichExt,
        /// Stabilization window.
        #[arg(long, default_value_t = 3)]
        window: usize,
        /// Kernel truncation level; every valid level when omitted.
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the six-term junctions of a documented system.
    Sixterm {
        /// Input document.
        input: PathBuf,
        /// Junction level; the base level when omitted.
        #[arg(long)]
        level: Option<usize>,
        /// Stabilization window.
        #[arg(long, default_value_t = 3)]
        window: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed matrix formulas for constant (matrix shift) systems.
    Ck {
        #[command(subcommand)]
        which: CkCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cuntz,
    CuntzKrieger,
    MarkovCoded,
    Dyck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichExt {
    Weak1,
    Strong1,
    Weak0,
    Strong0,
    All,
}

#[derive(Subcommand)]
enum CkCmd {
    /// Weak extension group of a matrix.
    Weak {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strong extension group of a matrix.
    Strong {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact six-term sequence of a matrix.
    Sixterm {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the invariant pairs of two matrices.
    Compare {
        /// First matrix literal.
        first: Option<String>,
        /// Second matrix literal.
        second: Option<String>,
        /// File holding the first matrix literal.
        #[arg(long, conflicts_with = "first")]
        file1: Option<PathBuf>,
        /// File holding the second matrix literal.
        #[arg(long, conflicts_with = "second")]
        file2: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// One matrix, as a literal argument or a file of the same syntax.
#[derive(Args)]
struct MatrixInput {
    /// Matrix literal such as [[1,1],[1,0]].
    #[arg(value_name = "MATRIX")]
    matrix: Option<String>,
    /// File holding a matrix literal.
    #[arg(long, conflicts_with = "matrix")]
    file: Option<PathBuf>,
}

struct CliError {
    code: u8,
    message: String,
}

fn err(code: u8, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        let code = match &e {
            DocumentError::EntryTooLarge { .. } => EXIT_INTERNAL,
            _ => EXIT_PARSE,
        };
        err(code, e.to_string())
    }
}

impl From<BuilderError> for CliError {
    fn from(e: BuilderError) -> Self {
        err(EXIT_BUILDER, e.to_string())
    }
}

impl From<ExtError> for CliError {
    fn from(e: ExtError) -> Self {
        let code = match &e {
            ExtError::NotValidated { .. } => EXIT_AXIOM,
            ExtError::Lgs(LgsError::InsufficientDepth { .. }) => EXIT_DEPTH,
            ExtError::Lgs(LgsError::LevelOutOfRange { .. }) => EXIT_USAGE,
            ExtError::Lgs(_) => EXIT_INTERNAL,
            ExtError::WindowTooSmall { .. }
            | ExtError::NotInKernel
            | ExtError::WrongLength { .. } => EXIT_USAGE,
            ExtError::BadMatrix(_) => EXIT_BUILDER,
            ExtError::InternalConsistency(_) => EXIT_INTERNAL,
        };
        err(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Cmd::Build {
            family,
            n,
            matrix,
            matrix_file,
            depth,
            out,
        } => cmd_build(family, n, matrix, matrix_file, depth, out.as_deref()),
        Cmd::Validate { input, format, out } => cmd_validate(&input, format, out.as_deref()),
        Cmd::Ext {
            input,
            which,
            window,
            level,
            format,
            out,
        } => cmd_ext(&input, which, window, level, format, out.as_deref()),
        Cmd::Sixterm {
            input,
            level,
            window,
            format,
            out,
        } => cmd_sixterm(&input, level, window, format, out.as_deref()),
        Cmd::Ck { which } => cmd_ck(which),
    }
}

fn cmd_build(
    family: Family,
    n: Option<usize>,
    matrix: Option<String>,
    matrix_file: Option<PathBuf>,
    depth: Option<usize>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let sys = match family {
        Family::Cuntz => {
            let n = n.ok_or_else(|| err(EXIT_USAGE, "cuntz needs --n"))?;
            cuntz(n, depth.unwrap_or(4))?
        }
        Family::CuntzKrieger => {
            let (a, _) = matrix_argument(matrix, matrix_file)?;
            cuntz_krieger(&a, depth.unwrap_or(4))?
        }
        Family::MarkovCoded => {
            let (a, _) = matrix_argument(matrix, matrix_file)?;
            let graph = DirectedGraphSpec::new(a)?;
            markov_coded(&graph, depth.unwrap_or(7))?
        }
        Family::Dyck => {
            let n = n.ok_or_else(|| err(EXIT_USAGE, "dyck needs --n"))?;
            dyck_with_cap(n, depth.unwrap_or(8), level_cap_from_env()?)?
        }
    };
    let report = validate(&sys);
    if !report.passed() {
        return Err(err(
            EXIT_INTERNAL,
            format!(
                "builder produced an invalid system: {}",
                report.violations[0]
            ),
        ));
    }
    let doc = LgsDocument::from_system(&sys)?;
    write_output(out, &doc.to_json())
}

fn cmd_validate(input: &Path, format: FormatArg, out: Option<&Path>) -> Result<(), CliError> {
    let (sys, prov) = load_system(input)?;
    let report = validate(&sys);
    let mut r = Reporter::new(report_format(format), &prov);
    r.validation(&report);
    write_output(out, &r.finish())?;
    if report.passed() {
        Ok(())
    } else {
        Err(err(
            EXIT_AXIOM,
            format!("{} axiom violation(s)", report.violations.len()),
        ))
    }
}

fn cmd_ext(
    input: &Path,
    which: WhichExt,
    window: usize,
    level: Option<usize>,
    format: FormatArg,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let (sys, prov) = load_system(input)?;
    let mut r = Reporter::new(report_format(format), &prov);
    let wants = |w: WhichExt| which == w || which == WhichExt::All;
    if wants(WhichExt::Weak1) {
        r.tower("weak_ext1", &weak_ext1_tower(&sys, window)?);
    }
    if wants(WhichExt::Strong1) {
        r.tower("strong_ext1", &strong_ext1_tower(&sys, window)?);
    }
    let kernel_levels: Vec<usize> = match level {
        Some(l) => vec![l],
        None => (sys.base_level()..sys.top_level()).collect(),
    };
    if wants(WhichExt::Weak0) {
        let entries = kernel_levels
            .iter()
            .map(|&l| weak_ext0_truncated(&sys, l))
            .collect::<Result<Vec<KernelTruncation>, _>>()?;
        r.kernels("weak_ext0", &entries);
    }
    if wants(WhichExt::Strong0) {
        let entries = kernel_levels
            .iter()
            .map(|&l| strong_ext0_truncated(&sys, l))
            .collect::<Result<Vec<KernelTruncation>, _>>()?;
        r.kernels("strong_ext0", &entries);
    }
    write_output(out, &r.finish())
}

fn cmd_sixterm(
    input: &Path,
    level: Option<usize>,
    window: usize,
    format: FormatArg,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let (sys, prov) = load_system(input)?;
    let level = level.unwrap_or_else(|| sys.base_level());
    let report = six_term_check(&sys, level, window)?;
    let class = iota_hat(&sys, &BigInt::one(), level)?;
    let mut r = Reporter::new(report_format(format), &prov);
    r.sixterm(&report, Some(window), Some(&class));
    write_output(out, &r.finish())?;
    if report.overall {
        Ok(())
    } else {
        Err(err(
            EXIT_INTERNAL,
            "a six-term junction failed on a validated system",
        ))
    }
}

fn cmd_ck(which: CkCmd) -> Result<(), CliError> {
    match which {
        CkCmd::Weak { input, format, out } => {
            let (a, shown) = matrix_argument(input.matrix, input.file)?;
            let group = ck_weak_ext(&a)?;
            let mut r = Reporter::new(report_format(format), &Provenance::Literal { text: shown });
            r.group("weak_ext", &group);
            write_output(out.as_deref(), &r.finish())
        }
        CkCmd::Strong { input, format, out } => {
            let (a, shown) = matrix_argument(input.matrix, input.file)?;
            let group = ck_strong_ext(&a)?;
            let mut r = Reporter::new(report_format(format), &Provenance::Literal { text: shown });
            r.group("strong_ext", &group);
            write_output(out.as_deref(), &r.finish())
        }
        CkCmd::Sixterm { input, format, out } => {
            let (a, shown) = matrix_argument(input.matrix, input.file)?;
            let report = ck_six_term(&a)?;
            let mut r = Reporter::new(report_format(format), &Provenance::Literal { text: shown });
            r.sixterm(&report, None, None);
            write_output(out.as_deref(), &r.finish())?;
            if report.overall {
                Ok(())
            } else {
                Err(err(EXIT_INTERNAL, "a six-term junction failed"))
            }
        }
        CkCmd::Compare {
            first,
            second,
            file1,
            file2,
            format,
            out,
        } => {
            let (a, shown_a) = matrix_argument(first, file1)?;
            let (b, shown_b) = matrix_argument(second, file2)?;
            let pair_a = (ck_weak_ext(&a)?, ck_strong_ext(&a)?);
            let pair_b = (ck_weak_ext(&b)?, ck_strong_ext(&b)?);
            let prov = Provenance::Literal {
                text: format!("{shown_a} vs {shown_b}"),
            };
            let mut r = Reporter::new(report_format(format), &prov);
            r.compare((&pair_a.0, &pair_a.1), (&pair_b.0, &pair_b.1));
            write_output(out.as_deref(), &r.finish())
        }
    }
}

fn report_format(f: FormatArg) -> ReportFormat {
    match f {
        FormatArg::Text => ReportFormat::Text,
        FormatArg::Machine => ReportFormat::Machine,
    }
}

fn level_cap_from_env() -> Result<usize, CliError> {
    match std::env::var(LEVEL_CAP_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DYCK_LEVEL_CAP_DEFAULT),
        Err(e) => Err(err(EXIT_USAGE, format!("{LEVEL_CAP_VAR}: {e}"))),
        Ok(s) => s.trim().parse().map_err(|_| {
            err(
                EXIT_USAGE,
                format!("{LEVEL_CAP_VAR} must be a positive integer, got {s:?}"),
            )
        }),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| err(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| err(EXIT_INTERNAL, format!("cannot write {}: {e}", path.display()))),
    }
}

fn load_system(path: &Path) -> Result<(TruncatedLambdaGraphSystem, Provenance), CliError> {
    let text = read_input(path)?;
    let prov = Provenance::File {
        path: path.display().to_string(),
        hash: fnv1a64(text.as_bytes()),
    };
    let (_, sys) = parse_system(&text)?;
    Ok((sys, prov))
}

/// Resolves a matrix given as a literal or as a file of the same bracketed
/// row syntax; returns the matrix and its display text.
fn matrix_argument(
    literal: Option<String>,
    file: Option<PathBuf>,
) -> Result<(IntMatrix, String), CliError> {
    let text = match (literal, file) {
        (Some(l), None) => l,
        (None, Some(path)) => read_input(&path)?.trim().to_string(),
        (None, None) => {
            return Err(err(
                EXIT_USAGE,
                "provide a matrix literal like [[1,1],[1,0]] or --file",
            ))
        }
        (Some(_), Some(_)) => {
            return Err(err(EXIT_USAGE, "provide either a literal or a file, not both"))
        }
    };
    let trimmed = text.trim();
    let rows: Vec<Vec<i64>> = match serde_json::from_str(trimmed) {
        Ok(rows) => rows,
        // A flat bracketed list like [2] is accepted as a single row.
        Err(nested) => match serde_json::from_str::<Vec<i64>>(trimmed) {
            Ok(row) => vec![row],
            Err(_) => {
                return Err(err(
                    EXIT_PARSE,
                    format!("invalid matrix literal {trimmed:?}: {nested}"),
                ))
            }
        },
    };
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if r == 0 || c == 0 {
        return Err(err(EXIT_PARSE, "matrix literal must be nonempty"));
    }
    if rows.iter().any(|row| row.len() != c) {
        return Err(err(EXIT_PARSE, "matrix literal has ragged rows"));
    }
    let m = IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]));
    Ok((m, text.trim().to_string()))
}
