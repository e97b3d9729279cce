use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use insdel_cli::commands::{self, ConstructArgs, Family};
use insdel_cli::error::CliError;
use insdel_cli::Report;
use insdel_core::search::{BoundKind, OnesFilter};
use insdel_core::{Budgets, DEFAULT_ENUM_BUDGET, DEFAULT_PAIR_BUDGET};

#[derive(Parser)]
#[command(name = "insdel", version, about = "Insertion-deletion distance, bounds and certificates for linear codes")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Maximum number of word pairs compared by a distance sweep.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    pairs_budget: u64,
    /// Maximum number of codewords, subsets or subspaces enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BUDGET)]
    enum_budget: u64,
    /// Write the JSON report to this path ("-" for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Print nothing to stdout.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Every upper bound on the insdel distance of a code.
    Bounds {
        code: PathBuf,
        /// Also compute the exact distance and check each bound.
        #[arg(long)]
        brute_force: bool,
    },
    /// Exact insdel distance with a witness pair.
    Distance { code: PathBuf },
    /// Determinant certificate for d_I = 2(n - 2k + 1).
    Certify {
        code: PathBuf,
        #[arg(long)]
        brute_force: bool,
    },
    /// Pairs inside the zero gaps of a minimum-weight codeword.
    StrictDirect {
        code: PathBuf,
        #[arg(long)]
        brute_force: bool,
    },
    /// Build a code from one of the explicit families.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Field modulus, ascending coefficients, comma separated.
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u32>>,
        #[arg(long)]
        k: Option<usize>,
        /// Length, for rs-example.
        #[arg(long)]
        n: Option<usize>,
        /// Coefficients of the odd family, comma separated element tokens.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<String>>,
        /// Write the code file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        brute_force: bool,
    },
    /// Exhaustive search over binary codes reaching a bound.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        bound: BoundArg,
        #[arg(long, value_enum, default_value = "none")]
        ones: OnesArg,
        /// Compare against a bundled reference table (table1, table2).
        #[arg(long)]
        expect: Option<String>,
    },
    /// Re-run the checks of a built-in worked example.
    VerifyExample { id: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Palindrome,
    Odd,
    RsExample,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Half,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnesArg {
    RequireIn,
    RequireOut,
    None,
}

fn run(cli: &Cli, budgets: &Budgets) -> Result<Report, CliError> {
    let load = |p: &Path| commands::load(p);
    match &cli.command {
        Command::Bounds { code, brute_force } => {
            let (c, bytes) = load(code)?;
            commands::bounds(&c, &bytes, budgets, *brute_force)
        }
        Command::Distance { code } => {
            let (c, bytes) = load(code)?;
            commands::distance(&c, &bytes, budgets)
        }
        Command::Certify { code, brute_force } => {
            let (c, bytes) = load(code)?;
            commands::certify(&c, &bytes, budgets, *brute_force)
        }
        Command::StrictDirect { code, brute_force } => {
            let (c, bytes) = load(code)?;
            commands::strict_direct(&c, &bytes, budgets, *brute_force)
        }
        Command::Construct { family, p, e, modulus, k, n, a, out, brute_force } => {
            let args = ConstructArgs {
                family: match family {
                    FamilyArg::Palindrome => Family::Palindrome,
                    FamilyArg::Odd => Family::Odd,
                    FamilyArg::RsExample => Family::RsExample,
                },
                p: *p,
                e: *e,
                modulus: modulus.clone(),
                k: *k,
                n: *n,
                a: a.clone(),
                brute_force: *brute_force,
            };
            let (mut report, file) = commands::construct(&args, budgets)?;
            if let (Some(path), Some(file)) = (out, &file) {
                write(path, &file.to_json())?;
                report.note(format!("code file written to {}", path.display()));
            }
            Ok(report)
        }
        Command::Search { n, k, bound, ones, expect } => {
            let bound = match bound {
                BoundArg::Half => BoundKind::Half,
                BoundArg::Strict => BoundKind::Strict,
            };
            let ones = match ones {
                OnesArg::RequireIn => OnesFilter::RequireIn,
                OnesArg::RequireOut => OnesFilter::RequireOut,
                OnesArg::None => OnesFilter::Any,
            };
            commands::search(*n, *k, bound, ones, expect.as_deref(), budgets)
        }
        Command::VerifyExample { id } => commands::verify_example(id, budgets),
    }
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budgets = Budgets {
        enumeration: cli.common.enum_budget,
        pairs: cli.common.pairs_budget,
    };
    let start = Instant::now();
    let mut report = match run(&cli, &budgets) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit();
        }
    };
    report.set_elapsed(start.elapsed());
    match &cli.common.json {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            if let Err(e) = write(p, &report.to_json()) {
                eprintln!("error: {e}");
                return e.exit();
            }
        }
        None => {}
    }
    if !cli.common.quiet && cli.common.json.as_deref() != Some(Path::new("-")) {
        println!("{}", report.summary());
    }
    ExitCode::from(report.exit_code())
}
