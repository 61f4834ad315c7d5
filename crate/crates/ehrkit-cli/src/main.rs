//! Command-line front end for the lattice-point counting library.
//!
//! Subcommands: `ehrhart` prints the counting polynomial of one region
//! (optionally cross-checked against a brute-force sweep), `lah` prints one
//! weighted ordered-block count, `verify` runs the invariant suite up to a
//! size ceiling, and `table` prints coefficient records for a whole
//! parameter sweep.
//!
//! Exit codes: 0 success, 2 domain error (or usage error), 3 verification
//! mismatch, 4 candidate budget exceeded.

mod record;
mod verify;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ehrkit::combinatorics::{weighted_lah, MemoTable};
use ehrkit::ehrhart::{
    half_open_ehrhart_with, hypersimplex_ehrhart_with, independence_ehrhart_with,
};
use ehrkit::error::DomainError;
use ehrkit::lattice::{
    build_half_open, build_hypersimplex, build_independence, oracle_ehrhart, CountError, HPolytope,
    DEFAULT_BUDGET,
};
use ehrkit::EhrhartPolynomial;

use record::{plain_line, Family, OutputRecord, CSV_HEADER};
use verify::VerifyConfig;

#[derive(Parser)]
#[command(
    name = "ehrkit",
    version,
    about = "Exact lattice-point counts for hypersimplex slices and rank-bounded 0/1 regions"
)]
struct Cli {
    /// Candidate budget for brute-force sweeps: the largest number of box
    /// points one dilate may require.
    #[arg(
        long,
        global = true,
        env = "EHRKIT_BUDGET",
        default_value_t = DEFAULT_BUDGET,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    budget: u64,

    /// Ground-set ceiling for the `verify` sweep.
    #[arg(
        long,
        global = true,
        env = "EHRKIT_MAX_N",
        default_value_t = 6,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    max_n: u64,

    /// Worker threads for parallel sweeps (default: one per core).
    #[arg(
        long,
        global = true,
        env = "EHRKIT_JOBS",
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    jobs: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the counting polynomial of one region.
    Ehrhart {
        /// Region family.
        family: Family,
        /// Slice level, or rank bound for the independence region.
        k: u64,
        /// Ground-set size.
        n: u64,
        /// Cross-check the closed form against a brute-force sweep first.
        #[arg(long)]
        verify: bool,
        /// Also report the exact count at this dilation factor (repeatable).
        #[arg(long = "eval", value_name = "T")]
        eval: Vec<u64>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Print the number of ordered set partitions of n elements into m
    /// blocks with insertion weight l.
    Lah {
        /// Total insertion weight (out-of-range values print 0).
        #[arg(allow_negative_numbers = true)]
        l: i64,
        /// Number of labeled elements.
        n: u64,
        /// Number of blocks.
        m: u64,
    },
    /// Run every module invariant up to the --max-n ceiling.
    Verify,
    /// Print coefficient records for all regions of a family with ground
    /// sets up to n_max.
    Table {
        /// Region family.
        family: Family,
        /// Largest ground-set size to include.
        n_max: u64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Debug)]
enum CliError {
    Domain(String),
    Mismatch(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Mismatch(msg) | CliError::Budget(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl From<DomainError> for CliError {
    fn from(e: DomainError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match &e {
            CountError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            CountError::Domain(_) => CliError::Domain(e.to_string()),
        }
    }
}

fn family_poly(
    family: Family,
    k: u64,
    n: u64,
    memo: &MemoTable,
) -> Result<EhrhartPolynomial, DomainError> {
    match family {
        Family::Hypersimplex => hypersimplex_ehrhart_with(k, n, memo),
        Family::HalfOpen => half_open_ehrhart_with(k, n, memo),
        Family::Independence => independence_ehrhart_with(k, n, memo),
    }
}

fn family_body(family: Family, k: u64, n: u64) -> Result<HPolytope, DomainError> {
    match family {
        Family::Hypersimplex => build_hypersimplex(k, n),
        Family::HalfOpen => build_half_open(k, n),
        Family::Independence => build_independence(k, n),
    }
}

fn emit_records(records: &[(OutputRecord, EhrhartPolynomial)], format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            for (rec, _) in records {
                println!("{}", rec.to_json());
            }
        }
        OutputFormat::Csv => {
            println!("{CSV_HEADER}");
            for (rec, _) in records {
                for row in rec.csv_rows() {
                    println!("{row}");
                }
            }
        }
        OutputFormat::Plain => {
            for (rec, poly) in records {
                println!("{}", plain_line(rec.family, rec.k, rec.n, poly));
                if let Some(evals) = &rec.evaluations {
                    for (t, count) in evals {
                        println!("  t = {t}: {count}");
                    }
                }
            }
        }
    }
}

fn cmd_ehrhart(
    family: Family,
    k: u64,
    n: u64,
    check: bool,
    eval: &[u64],
    format: OutputFormat,
    budget: u64,
) -> Result<(), CliError> {
    let memo = MemoTable::new();
    let poly = family_poly(family, k, n, &memo)?;
    if check {
        let body = family_body(family, k, n)?;
        let sweep = oracle_ehrhart(&body, poly.degree(), budget)?;
        if sweep != poly {
            return Err(CliError::Mismatch(format!(
                "{} ({k}, {n}): closed form {poly} disagrees with counted sweep {sweep}",
                family.token()
            )));
        }
        eprintln!(
            "{} ({k}, {n}): closed form matches a brute-force sweep",
            family.token()
        );
    }
    let rec = OutputRecord::new(family, k, n, &poly, eval);
    emit_records(&[(rec, poly)], format);
    Ok(())
}

fn cmd_lah(l: i64, n: u64, m: u64) -> Result<(), CliError> {
    let memo = MemoTable::new();
    println!("{}", weighted_lah(l, n, m, &memo));
    Ok(())
}

fn cmd_table(family: Family, n_max: u64, format: OutputFormat) -> Result<(), CliError> {
    let memo = MemoTable::new();
    // The hypersimplex table keeps only k <= n - k: the reflected slices
    // share the same polynomial, so the rest of the range adds no rows.
    let pairs: Vec<(u64, u64)> = match family {
        Family::Hypersimplex => (2..=n_max)
            .flat_map(|n| (1..=n / 2).map(move |k| (k, n)))
            .collect(),
        Family::HalfOpen => (2..=n_max)
            .flat_map(|n| (1..n).map(move |k| (k, n)))
            .collect(),
        Family::Independence => (1..=n_max)
            .flat_map(|n| (1..=n).map(move |k| (k, n)))
            .collect(),
    };
    let mut records = Vec::with_capacity(pairs.len());
    for (k, n) in pairs {
        let poly = family_poly(family, k, n, &memo)?;
        records.push((OutputRecord::new(family, k, n, &poly, &[]), poly));
    }
    emit_records(&records, format);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore the error from a second initialization: the pool can only
        // be configured once per process, and the first configuration wins.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Ehrhart {
            family,
            k,
            n,
            verify: check,
            eval,
            format,
        } => cmd_ehrhart(family, k, n, check, &eval, format, cli.budget).map(|()| 0u8),
        Command::Lah { l, n, m } => cmd_lah(l, n, m).map(|()| 0),
        Command::Verify => Ok(verify::run(&VerifyConfig {
            max_n: cli.max_n,
            budget: cli.budget,
        }) as u8),
        Command::Table {
            family,
            n_max,
            format,
        } => cmd_table(family, n_max, format).map(|()| 0),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
