//! `qdet`: build q-integer matrices, compute their determinants exactly and
//! run verification sweeps over the closed-form identities.

mod ranges;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qdet_core::dftcheck::{run_numeric_sweep, NumericCheck};
use qdet_core::linalg::det_bareiss;
use qdet_core::matrix::Render;
use qdet_core::qmatrix::{build, BuiltMatrix, MatrixJson, MatrixKind, MatrixSpec};
use qdet_core::verify::{
    run_suite_with_jobs, verify_ceil_theorem, verify_floor_theorem, verify_prop_det_q,
    verify_x_theorem, write_csv, write_jsonl, IdentityId, ReportRecord, Side,
    VerificationReport,
};

use ranges::ValueList;

#[derive(Parser)]
#[command(name = "qdet", version, about = "Exact determinants of q-integer matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a matrix.
    Matrix(SpecArgs),
    /// Print the exact determinant of a matrix.
    Det {
        #[command(flatten)]
        spec: SpecArgs,
        /// Compare against the closed form and print PASS or FAIL.
        #[arg(long)]
        expected: bool,
    },
    /// Run identity checks over ranges of `a` and `n`.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Matrix kind, e.g. floor-qint, ceil-x, q-fractional.
    #[arg(long)]
    kind: MatrixKind,
    #[arg(short = 'a', allow_negative_numbers = true)]
    a: i64,
    #[arg(short = 'n', allow_negative_numbers = true)]
    n: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Values of `a`: `3`, `-6..6` or a comma list. Defaults to `0..n-1`
    /// for each `n`.
    #[arg(short = 'a', allow_hyphen_values = true)]
    a: Option<ValueList>,
    /// Odd orders: `1..25` walks the odd values in the range.
    #[arg(short = 'n', allow_hyphen_values = true, default_value = "1..15")]
    n: ValueList,
    /// Identity to check (repeatable), e.g. thm-floor, zolotarev,
    /// ucv-factorization.
    #[arg(long = "identity")]
    identities: Vec<String>,
    /// Check every exact identity and every numeric check.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write reports here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long, env = "QDET_JOBS")]
    jobs: Option<usize>,
    /// Absolute tolerance for the numeric checks.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// Bad flags or configuration: exit 2.
    Usage(String),
    /// Output could not be written: exit 2.
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<qdet_core::Error> for Failure {
    fn from(e: qdet_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Matrix(spec) => cmd_matrix(&spec),
        Command::Det { spec, expected } => cmd_det(&spec, expected),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn spec_of(args: &SpecArgs) -> Result<MatrixSpec, Failure> {
    Ok(MatrixSpec::new(args.kind, args.a, args.n)?)
}

fn cmd_matrix(args: &SpecArgs) -> Result<bool, Failure> {
    let spec = spec_of(args)?;
    let m = build(&spec)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Text => writeln!(out, "{}", m.render_grid())?,
        Format::Json => {
            let js = serde_json::to_string_pretty(&MatrixJson::from_built(&spec, &m))
                .map_err(io::Error::from)?;
            writeln!(out, "{js}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in m.render_rows() {
                w.write_record(row).map_err(io::Error::from)?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

fn closed_form_report(spec: &MatrixSpec) -> Result<VerificationReport, Failure> {
    let (a, n) = (spec.a, spec.n);
    let rep = match spec.kind {
        MatrixKind::FloorQint => verify_floor_theorem(a, n)?,
        MatrixKind::CeilQint => verify_ceil_theorem(a, n)?,
        MatrixKind::FloorX => verify_x_theorem(a, n, Side::Floor)?,
        MatrixKind::CeilX => verify_x_theorem(a, n, Side::Ceil)?,
        MatrixKind::QFractional => verify_prop_det_q(a, n)?,
        other => {
            return Err(Failure::Usage(format!(
                "no closed form is known for {}",
                other.cli_name()
            )))
        }
    };
    Ok(rep)
}

fn cmd_det(args: &SpecArgs, expected: bool) -> Result<bool, Failure> {
    let spec = spec_of(args)?;
    let (det, rhs, pass) = if expected {
        let rep = closed_form_report(&spec)?;
        let pass = rep.passed();
        (rep.lhs, Some(rep.rhs), pass)
    } else {
        let det = match build(&spec)? {
            BuiltMatrix::Laurent(m) => det_bareiss(&m)?.render(m.variable()),
            BuiltMatrix::Symbolic(m) => det_bareiss(&m)?.render(m.variable()),
        };
        (det, None, true)
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Json => {
            let mut obj = serde_json::json!({
                "kind": spec.kind,
                "a": spec.a,
                "n": spec.n,
                "det": det,
            });
            if let Some(rhs) = &rhs {
                obj["expected"] = rhs.clone().into();
                obj["pass"] = pass.into();
            }
            writeln!(out, "{obj}")?;
        }
        _ => match &rhs {
            None => writeln!(out, "{det}")?,
            Some(_) if pass => writeln!(out, "{det}  PASS")?,
            Some(rhs) => writeln!(out, "{det}  FAIL  expected {rhs}")?,
        },
    }
    Ok(pass)
}

/// Splits the identity filter into exact identities and numeric checks.
fn parse_filter(args: &VerifyArgs) -> Result<(Vec<IdentityId>, Vec<NumericCheck>), Failure> {
    if args.all {
        return Ok((IdentityId::ALL.to_vec(), NumericCheck::ALL.to_vec()));
    }
    if args.identities.is_empty() {
        return Err(Failure::Usage("give --identity NAME or --all".into()));
    }
    let mut exact = Vec::new();
    let mut numeric = Vec::new();
    for name in &args.identities {
        if let Ok(id) = IdentityId::from_str(name) {
            exact.push(id);
        } else if let Ok(c) = NumericCheck::from_str(name) {
            numeric.push(c);
        } else {
            return Err(Failure::Usage(format!("unknown identity {name:?}")));
        }
    }
    Ok((exact, numeric))
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let n_values = args
        .n
        .odd_values()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(t) = args.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Failure::Usage(format!("tolerance must be positive, got {t}")));
        }
    }
    let (exact, numeric) = parse_filter(args)?;
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }

    // Without -a, every residue 0..n-1 is swept for each n.
    let a_sets: Vec<(Vec<i64>, Vec<i64>)> = match &args.a {
        Some(a) => vec![(a.values(), n_values.clone())],
        None => n_values.iter().map(|&n| ((0..n).collect(), vec![n])).collect(),
    };

    let mut exact_reports = Vec::new();
    let mut numeric_reports = Vec::new();
    for (a_values, ns) in &a_sets {
        if !exact.is_empty() {
            exact_reports.extend(run_suite_with_jobs(a_values, ns, &exact, jobs)?);
        }
        if !numeric.is_empty() {
            numeric_reports.extend(run_numeric_sweep(a_values, ns, &numeric, args.tol)?);
        }
    }
    exact_reports.sort_by_key(|r| (r.identity, r.n, r.a));

    let mut records: Vec<ReportRecord> = exact_reports.iter().map(|r| r.to_record()).collect();
    records.extend(numeric_reports.iter().map(|r| r.to_record()));
    let failures = records.iter().filter(|r| !r.pass && !r.skipped).count();
    let skipped = records.iter().filter(|r| r.skipped).count();

    let summary = format!(
        "{} cases, {} skipped, {failures} failures",
        records.len(),
        skipped
    );
    match &args.out {
        Some(path) => {
            let file = BufWriter::new(File::create(path)?);
            write_records(file, args.format, &exact_reports, &records)?;
            println!("{summary}");
        }
        None => {
            let stdout = io::stdout();
            write_records(stdout.lock(), args.format, &exact_reports, &records)?;
            if args.format == Format::Text {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
        }
    }
    Ok(failures == 0)
}

fn write_records<W: Write>(
    mut out: W,
    format: Format,
    exact: &[VerificationReport],
    records: &[ReportRecord],
) -> io::Result<()> {
    match format {
        Format::Json => write_jsonl(&mut out, records)?,
        Format::Csv => write_csv(&mut out, records)?,
        Format::Text => {
            for r in exact {
                writeln!(out, "{r}")?;
            }
            for r in &records[exact.len()..] {
                let tag = if r.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{tag:<4} {:<15} a={:<4} n={:<4} {}  {}",
                    r.identity, r.a, r.n, r.lhs, r.rhs
                )?;
            }
        }
    }
    out.flush()
}
