use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use pellrec_core::bounds::{aggregate_bound, weighted_zero_sums};
use pellrec_core::pell::{fundamental_solution, solve_classes, PellEquation};
use pellrec_core::recurrence::{classify, LinearRecurrence, DEFAULT_INDEPENDENCE_BOUND};
use pellrec_core::search::{detect_infinite_family, verify_remark, SearchConfig, SideFilter};
use pellrec_core::BigInt;

use crate::io::{self, Format, Report};
use crate::{parallel, CliError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "pellrec", version, about = "Sums of linear recurrence terms in solution sets of x² − dy² = t")]
struct Cli {
    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for `search` (default: $PELLREC_JOBS, else CPU count).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pell equations.
    Pell {
        #[command(subcommand)]
        cmd: PellCmd,
    },
    /// Linear recurrences.
    Seq {
        #[command(subcommand)]
        cmd: SeqCmd,
    },
    /// All (n₁, n₂) ≤ N with U_{n₁} + U_{n₂} in X ∪ Y.
    Search(SearchArgs),
    /// Explicit bound summed over all partitions of the 2k+2 terms.
    Bound(BoundArgs),
    /// Built-in counterexample scenarios.
    Remark {
        #[command(subcommand)]
        cmd: RemarkCmd,
    },
}

fn big(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))
}

#[derive(Subcommand, Debug)]
enum PellCmd {
    /// Solution classes of x² − dy² = t.
    Solve {
        #[arg(short = 'd', value_parser = big, allow_negative_numbers = true)]
        d: BigInt,
        #[arg(short = 't', value_parser = big, allow_negative_numbers = true)]
        t: BigInt,
        /// Solutions to list per class.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Smallest positive solution of x² − dy² = 1.
    Fundamental {
        #[arg(short = 'd', value_parser = big, allow_negative_numbers = true)]
        d: BigInt,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RecSource {
    /// File with `order k; coeffs a1,..,ak; init U0,..` or the JSON equivalent.
    #[arg(long, value_name = "FILE")]
    rec: Option<PathBuf>,
    /// Inline `k;a1,..,ak;U0,..,Uk-1`.
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    rec_spec: Option<String>,
}

impl RecSource {
    fn load(&self) -> Result<LinearRecurrence, CliError> {
        match (&self.rec, &self.rec_spec) {
            (Some(path), _) => io::read_recurrence(path),
            (None, Some(spec)) => io::parse_recurrence(spec),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum SeqCmd {
    /// Check the hypotheses of the finiteness theorem.
    Classify {
        #[command(flatten)]
        source: RecSource,
        #[arg(short = 'd', value_parser = big, allow_negative_numbers = true)]
        d: BigInt,
        /// Exponent bound for the multiplicative independence check.
        #[arg(short = 'R', default_value_t = DEFAULT_INDEPENDENCE_BOUND)]
        bound: u32,
    },
    /// Terms U_0..U_N.
    Terms {
        #[command(flatten)]
        source: RecSource,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Tuples with Σ w_h U_{n_h} = 0 and no vanishing proper subsum.
    ZeroSums {
        #[command(flatten)]
        source: RecSource,
        /// Comma-separated nonzero integer weights.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum SideArg {
    X,
    Y,
    Both,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    source: RecSource,
    #[arg(short = 'd', value_parser = big, allow_negative_numbers = true)]
    d: BigInt,
    #[arg(short = 't', value_parser = big, allow_negative_numbers = true)]
    t: BigInt,
    #[arg(short = 'N')]
    bound: usize,
    /// Only coordinates of solutions with x, y > 0.
    #[arg(long)]
    positive_only: bool,
    /// Enumerate the full square instead of n₂ ≤ n₁.
    #[arg(long)]
    ordered: bool,
    #[arg(long, value_enum, default_value = "both")]
    side: SideArg,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long)]
    k: usize,
    #[arg(long = "field-degree")]
    field_degree: u64,
    /// Number of solution classes; each contributes two equations.
    #[arg(long)]
    classes: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum RemarkCmd {
    /// Run scenario ID (1 to 4) and check its claims.
    Verify { id: u8 },
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    Ok(match &cli.command {
        Command::Pell { cmd: PellCmd::Fundamental { d } } => io::fundamental(d, &fundamental_solution(d)?),
        Command::Pell { cmd: PellCmd::Solve { d, t, count } } => {
            let eq = PellEquation::new(d.clone(), t.clone())?;
            io::solution_set(&solve_classes(&eq), *count)
        }
        Command::Seq { cmd: SeqCmd::Classify { source, d, bound } } => {
            let rec = source.load()?;
            io::classification(&rec, &classify(&rec, d, *bound)?)
        }
        Command::Seq { cmd: SeqCmd::Terms { source, n } } => {
            let rec = source.load()?;
            io::terms(&rec, &rec.terms(*n))
        }
        Command::Seq { cmd: SeqCmd::ZeroSums { source, weights, n } } => {
            let rec = source.load()?;
            let w: Vec<BigInt> = weights
                .split(',')
                .map(|s| big(s).map_err(CliError::Usage))
                .collect::<Result<_, _>>()?;
            io::zero_sums(&w, *n, &weighted_zero_sums(&rec, &w, *n)?)
        }
        Command::Search(a) => {
            let rec = a.source.load()?;
            let mut config = SearchConfig::new(rec.clone(), PellEquation::new(a.d.clone(), a.t.clone())?, a.bound);
            config.positive_only = a.positive_only;
            config.unordered = !a.ordered;
            config.sides = match a.side {
                SideArg::X => SideFilter::X,
                SideArg::Y => SideFilter::Y,
                SideArg::Both => SideFilter::Both,
            };
            let result = parallel::search(&config, parallel::resolve_jobs(cli.jobs)?)?;
            let flags = detect_infinite_family(&result, &rec)?;
            io::search(&result, &flags)
        }
        Command::Bound(b) => io::bound(&aggregate_bound(b.k, b.field_degree)?, b.classes),
        Command::Remark { cmd: RemarkCmd::Verify { id } } => io::remark(&verify_remark(*id)?),
    })
}

/// Runs the command line `args` (program name first); returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let out = execute(&cli).and_then(|r| r.render(cli.format)).and_then(|text| match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::File(path.display().to_string(), e)),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(CliError::Io),
    });
    match out {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("pellrec: {e}");
            e.exit_code()
        }
    }
}
