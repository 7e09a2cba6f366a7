//! `roughset` — rough-set approximation, roughness measures, and
//! exhaustive axiom verification from the command line.
//!
//! Machine output is JSON on standard output (one object per invocation),
//! with every real number rendered to six significant digits and exact
//! rationals alongside where they exist; `--pretty` switches to a
//! human-readable layout. Partition listings and derived partition
//! literals print as plain lines.
//!
//! Exit codes: 0 on success (and on a verification that passes), 1 for
//! domain errors and failed verifications, 2 for usage errors (including
//! unknown measure names and a malformed `ROUGHSET_EPSILON`).

#![forbid(unsafe_code)]

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use roughset::{
    accuracy_ratio, approximate, check_propositions, count_partitions, enumerate_partitions,
    format_ratio, format_significant, measure_by_name, pawlak_roughness, roughness_by_name,
    roughness_ratio, strong_instance_by_name, verify_partition_measure, verify_roughness_axioms,
    verify_weak_roughness_axioms, AxiomReport, InformationTable, MeasureReport, Partition,
    RoughnessMeasure, StrongPawlak, Subset, Universe, DEFAULT_EPSILON,
};

/// Like `outln!`, but a reader that closes the pipe early (`head`,
/// `less q`) ends the program quietly instead of panicking: Rust leaves
/// SIGPIPE ignored, so the broken pipe surfaces as a write error here.
macro_rules! outln {
    ($($arg:tt)*) => {
        if let Err(err) = writeln!(std::io::stdout(), $($arg)*) {
            if err.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("error: cannot write to stdout: {err}");
            std::process::exit(1);
        }
    };
}

const ROUGHNESS_NAMES: &str =
    "beta_P, indicator, beta_X, beta_L, beta_E, beta_Eprime, beta_CG";
const PARTITION_MEASURE_NAMES: &str =
    "granulation, co-entropy, pseudo-co-entropy, combination-granulation, graph-connectivity";
const STRONG_NAMES: &str = "beta_X, beta_L, beta_E, beta_Eprime, beta_CG";

#[derive(Parser)]
#[command(
    name = "roughset",
    version,
    about = "Rough-set approximation over finite universes, with verified roughness measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower/upper approximation of a set under a partition.
    Approx(ApproxArgs),
    /// Roughness of a set under a partition, by any registered measure.
    Roughness(RoughnessArgs),
    /// Exhaustively verify an axiom system over all partitions of a
    /// universe.
    Verify(VerifyArgs),
    /// Enumerate the partitions of an n-element universe.
    Enumerate(EnumerateArgs),
    /// Operations on CSV information tables.
    Table(TableArgs),
}

#[derive(Args)]
struct ApproxArgs {
    /// Partition literal, e.g. "a1|a2,a3|a4,a5".
    #[arg(long)]
    partition: String,
    /// Subset literal, e.g. "a1,a2,a3,a4" (empty string for the empty
    /// set).
    #[arg(long)]
    set: String,
    /// Human-readable layout instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["partition", "table"])))]
struct RoughnessArgs {
    /// Measure name: beta_P, indicator, beta_X, beta_L, beta_E,
    /// beta_Eprime, or beta_CG.
    #[arg(long)]
    measure: String,
    /// Partition literal, e.g. "a1|a2,a3|a4,a5".
    #[arg(long)]
    partition: Option<String>,
    /// CSV information table; the partition is induced by --attrs.
    #[arg(long, requires = "attrs")]
    table: Option<PathBuf>,
    /// Comma-separated attribute names inducing the partition.
    #[arg(long, requires = "table", value_delimiter = ',')]
    attrs: Vec<String>,
    /// Subset literal over the universe (object ids when --table is
    /// used).
    #[arg(long)]
    set: String,
    /// Human-readable layout instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which axiom system to check.
    #[arg(long, value_enum)]
    kind: VerifyKind,
    /// Measure under test (a partition measure for kind
    /// partition-measure, a roughness measure otherwise).
    #[arg(long)]
    measure: String,
    /// Universe size; the check is exhaustive over all its partitions and
    /// subsets.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Human-readable layout instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(ValueEnum, Clone, Copy)]
enum VerifyKind {
    /// The two partition-measure conditions plus endpoint bounds.
    PartitionMeasure,
    /// The strong roughness axioms.
    Roughness,
    /// The weak roughness axioms.
    Weak,
    /// Eight derived properties of a strong Pawlak composition.
    Propositions,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Universe size (1..=12).
    #[arg(long)]
    n: usize,
    /// Print only the number of partitions.
    #[arg(long)]
    count_only: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(subcommand)]
    command: TableCommand,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Derive and print the indiscernibility partition of a table.
    Partitions(TablePartitionsArgs),
}

#[derive(Args)]
struct TablePartitionsArgs {
    /// CSV information table.
    #[arg(long)]
    table: PathBuf,
    /// Comma-separated attribute names.
    #[arg(long, required = true, value_delimiter = ',')]
    attrs: Vec<String>,
}

/// A failed run: usage errors exit 2, domain errors exit 1.
enum Failure {
    Usage(String),
    Domain(roughset::Error),
}

impl From<roughset::Error> for Failure {
    fn from(e: roughset::Error) -> Failure {
        Failure::Domain(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

/// Ok(false) means the command ran but the verification failed.
fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Approx(args) => run_approx(args).map(|()| true),
        Command::Roughness(args) => run_roughness(args).map(|()| true),
        Command::Verify(args) => run_verify(args),
        Command::Enumerate(args) => run_enumerate(args).map(|()| true),
        Command::Table(args) => match args.command {
            TableCommand::Partitions(args) => run_table_partitions(args).map(|()| true),
        },
    }
}

/// Comparison tolerance: `ROUGHSET_EPSILON` if set, 1e-9 otherwise.
fn epsilon() -> CliResult<f64> {
    match std::env::var("ROUGHSET_EPSILON") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_EPSILON),
        Err(e) => Err(Failure::Usage(format!("ROUGHSET_EPSILON: {e}"))),
        Ok(raw) => raw
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|eps| eps.is_finite() && *eps >= 0.0)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "ROUGHSET_EPSILON must be a finite nonnegative number, got `{raw}`"
                ))
            }),
    }
}

fn resolve_roughness(name: &str) -> CliResult<Box<dyn RoughnessMeasure>> {
    roughness_by_name(name).map_err(|_| {
        Failure::Usage(format!(
            "unknown roughness measure `{name}` (expected one of: {ROUGHNESS_NAMES})"
        ))
    })
}

fn resolve_strong(name: &str) -> CliResult<StrongPawlak> {
    strong_instance_by_name(name).map_err(|_| {
        Failure::Usage(format!(
            "`{name}` is not a strong composition (expected one of: {STRONG_NAMES})"
        ))
    })
}

#[derive(Serialize)]
struct ApproxOutput {
    lower: String,
    upper: String,
    boundary: String,
    exact: bool,
    accuracy: String,
    accuracy_exact: String,
    roughness: String,
    roughness_exact: String,
}

fn run_approx(args: ApproxArgs) -> CliResult<()> {
    let p = Partition::parse(&args.partition)?;
    let a = Subset::parse(p.universe(), &args.set)?;
    let r = approximate(&p, &a)?;
    let alpha = accuracy_ratio(&p, &a)?;
    let beta = roughness_ratio(&p, &a)?;
    let out = ApproxOutput {
        lower: r.lower.render(),
        upper: r.upper.render(),
        boundary: r.boundary.render(),
        exact: r.exact,
        accuracy: format_significant(alpha.0 as f64 / alpha.1 as f64, 6),
        accuracy_exact: format_ratio(alpha),
        roughness: format_significant(beta.0 as f64 / beta.1 as f64, 6),
        roughness_exact: format_ratio(beta),
    };
    if args.pretty {
        outln!("lower:     {}", out.lower);
        outln!("upper:     {}", out.upper);
        outln!("boundary:  {}", out.boundary);
        outln!("exact:     {}", if out.exact { "yes" } else { "no" });
        outln!("accuracy:  {} ({})", out.accuracy, out.accuracy_exact);
        outln!("roughness: {} ({})", out.roughness, out.roughness_exact);
    } else {
        outln!("{}", serde_json::to_string(&out).expect("serializable"));
    }
    Ok(())
}

#[derive(Serialize)]
struct RoughnessOutput {
    measure: String,
    value: String,
    #[serde(rename = "beta_P")]
    beta_p: String,
    #[serde(rename = "beta_P_exact")]
    beta_p_exact: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_trivial: Option<String>,
}

fn run_roughness(args: RoughnessArgs) -> CliResult<()> {
    let p = if let Some(literal) = &args.partition {
        Partition::parse(literal)?
    } else {
        let table = InformationTable::load_csv(args.table.as_ref().expect("required by group"))?;
        table.indiscernibility_partition(&args.attrs)?
    };
    let a = Subset::parse(p.universe(), &args.set)?;

    // Strong compositions expose their factors; for beta_P and the
    // indicator only the value itself applies.
    let (value, parts) = match args.measure.as_str() {
        "beta_P" | "indicator" => (resolve_roughness(&args.measure)?.eval(&p, &a)?, None),
        name @ ("beta_X" | "beta_L" | "beta_E" | "beta_Eprime" | "beta_CG") => {
            let m = resolve_strong(name)?;
            let parts = m.decompose(&p, &a)?;
            (parts.value, Some(parts))
        }
        name => {
            return Err(Failure::Usage(format!(
                "unknown roughness measure `{name}` (expected one of: {ROUGHNESS_NAMES})"
            )))
        }
    };
    let beta_p = pawlak_roughness(&p, &a)?;
    let beta = roughness_ratio(&p, &a)?;
    let out = RoughnessOutput {
        measure: args.measure.clone(),
        value: format_significant(value, 6),
        beta_p: format_significant(beta_p, 6),
        beta_p_exact: format_ratio(beta),
        h_partition: parts.map(|q| format_significant(q.h_partition, 6)),
        h_trivial: parts.map(|q| format_significant(q.h_trivial, 6)),
    };
    if args.pretty {
        outln!("{} = {}", out.measure, out.value);
        outln!("  beta_P     = {} ({})", out.beta_p, out.beta_p_exact);
        if let (Some(h), Some(hmax)) = (&out.h_partition, &out.h_trivial) {
            outln!("  h(pi)      = {h}");
            outln!("  h(trivial) = {hmax}");
        }
    } else {
        outln!("{}", serde_json::to_string(&out).expect("serializable"));
    }
    Ok(())
}

fn print_measure_report(report: &MeasureReport, pretty: bool) {
    if !pretty {
        outln!("{}", serde_json::to_string(report).expect("serializable"));
        return;
    }
    outln!(
        "measure {}, n = {}: {}",
        report.measure,
        report.n,
        if report.pass { "PASS" } else { "FAIL" }
    );
    for v in &report.violations {
        let partner = v
            .partition_b
            .as_ref()
            .map(|b| format!(" vs {b}"))
            .unwrap_or_default();
        let values: Vec<String> = v.values.iter().map(|(k, x)| format!("{k}={x}")).collect();
        outln!(
            "  {}: {}{partner} ({})",
            v.kind,
            v.partition_a,
            values.join(", ")
        );
    }
}

fn print_axiom_report(report: &AxiomReport, pretty: bool) {
    if !pretty {
        outln!("{}", serde_json::to_string(report).expect("serializable"));
        return;
    }
    outln!(
        "measure {}, n = {}: {} ({} ms)",
        report.measure,
        report.n,
        if report.pass() { "PASS" } else { "FAIL" },
        report.elapsed_ms
    );
    for axiom in &report.axioms {
        if axiom.pass {
            outln!("  {}: pass", axiom.id);
        } else {
            outln!(
                "  {}: FAIL ({} counterexample(s) recorded)",
                axiom.id,
                axiom.counterexamples.len()
            );
            if let Some(ce) = axiom.counterexamples.first() {
                let mut at = ce.partition.clone();
                if let Some(b) = &ce.partition_b {
                    at.push_str(&format!(" vs {b}"));
                }
                if let Some(s) = &ce.subset {
                    at.push_str(&format!(", set {{{s}}}"));
                }
                let values: Vec<String> =
                    ce.values.iter().map(|(k, x)| format!("{k}={x}")).collect();
                outln!("    e.g. {at} ({})", values.join(", "));
            }
        }
    }
}

fn run_verify(args: VerifyArgs) -> CliResult<bool> {
    let eps = epsilon()?;
    let u = Universe::numbered(args.n)?;
    match args.kind {
        VerifyKind::PartitionMeasure => {
            let h = measure_by_name(&args.measure).map_err(|_| {
                Failure::Usage(format!(
                    "unknown partition measure `{}` (expected one of: {PARTITION_MEASURE_NAMES})",
                    args.measure
                ))
            })?;
            let report = verify_partition_measure(h.as_ref(), &u, eps)?;
            print_measure_report(&report, args.pretty);
            Ok(report.pass)
        }
        VerifyKind::Roughness => {
            let m = resolve_roughness(&args.measure)?;
            let report = verify_roughness_axioms(m.as_ref(), &u, eps)?;
            print_axiom_report(&report, args.pretty);
            Ok(report.pass())
        }
        VerifyKind::Weak => {
            let m = resolve_roughness(&args.measure)?;
            let report = verify_weak_roughness_axioms(m.as_ref(), &u, eps)?;
            print_axiom_report(&report, args.pretty);
            Ok(report.pass())
        }
        VerifyKind::Propositions => {
            let m = resolve_strong(&args.measure)?;
            let report = check_propositions(&m, &u, eps)?;
            print_axiom_report(&report, args.pretty);
            Ok(report.pass())
        }
    }
}

fn run_enumerate(args: EnumerateArgs) -> CliResult<()> {
    let u = Universe::numbered(args.n)?;
    if args.count_only {
        outln!("{}", count_partitions(&u)?);
    } else {
        for p in enumerate_partitions(&u)? {
            outln!("{}", p.render());
        }
    }
    Ok(())
}

fn run_table_partitions(args: TablePartitionsArgs) -> CliResult<()> {
    let table = InformationTable::load_csv(&args.table)?;
    let p = table.indiscernibility_partition(&args.attrs)?;
    outln!("{}", p.render());
    Ok(())
}
