use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use walkcount::query::{self, CountRequest};
use walkcount::table::{self, TableFormat, TableKind, TableSpec};
use walkcount::verify::{self, Bounds, Mode};
use walkcount::UsageError;

/// Exact counts of (weak) homomorphisms from paths into paths and grids.
#[derive(Parser)]
#[command(name = "walkcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homomorphisms P_m -> P_n (anchored at f(0) = j when --j is given)
    HomPath(PathArgs),
    /// Weak homomorphisms P_m -> P_n (anchored at f(0) = j when --j is given)
    WhomPath(PathArgs),
    /// Weak homomorphisms P_m -> P_n x P_k (anchored at f(0) = (i, j) when given)
    WhomGrid(GridArgs),
    /// Shortest lattice paths to (i, j, k), in the r-ladder lattice when --r is given
    Lattice(LatticeArgs),
    /// Reproduce the anchored path tables or the grid total table
    Table(TableArgs),
    /// Compare every closed form against graph oracles over a parameter range
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFormat {
    Text,
    Json,
}

#[derive(Args)]
struct PathArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: CountFormat,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, requires = "j")]
    i: Option<usize>,
    #[arg(long, requires = "i")]
    j: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: CountFormat,
}

#[derive(Args)]
struct LatticeArgs {
    #[arg(long)]
    i: u32,
    #[arg(long)]
    j: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: CountFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    WhomPath,
    HomPath,
    WhomGrid,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormatArg {
    Csv,
    Json,
    Md,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    which: WhichArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormatArg,
    #[arg(long, default_value_t = 8)]
    m_max: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Print every anchor j < n instead of the default rows
    #[arg(long)]
    all_anchors: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Dp,
    BruteForce,
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    max_m: usize,
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    max_k: usize,
    #[arg(long, value_enum, default_value = "dp")]
    mode: ModeArg,
}

fn print_count(request: CountRequest, format: CountFormat) -> Result<ExitCode, UsageError> {
    let count = request.evaluate()?;
    match format {
        CountFormat::Text => println!("{count}"),
        CountFormat::Json => println!("{}", query::to_json(&request, &count)),
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::HomPath(a) => print_count(
            CountRequest::HomPath {
                m: a.m,
                n: a.n,
                j: a.j,
            },
            a.format,
        ),
        Command::WhomPath(a) => print_count(
            CountRequest::WhomPath {
                m: a.m,
                n: a.n,
                j: a.j,
            },
            a.format,
        ),
        Command::WhomGrid(a) => print_count(
            CountRequest::WhomGrid {
                m: a.m,
                n: a.n,
                k: a.k,
                i: a.i,
                j: a.j,
            },
            a.format,
        ),
        Command::Lattice(a) => print_count(
            CountRequest::Lattice {
                i: a.i,
                j: a.j,
                k: a.k,
                r: a.r,
            },
            a.format,
        ),
        Command::Table(a) => {
            let which = match a.which {
                WhichArg::WhomPath => TableKind::WhomPath,
                WhichArg::HomPath => TableKind::HomPath,
                WhichArg::WhomGrid => TableKind::WhomGrid,
            };
            let format = match a.format {
                TableFormatArg::Csv => TableFormat::Csv,
                TableFormatArg::Json => TableFormat::Json,
                TableFormatArg::Md => TableFormat::Md,
            };
            let spec = TableSpec {
                which,
                format,
                m_max: a.m_max,
                n_max: a.n_max,
                all_anchors: a.all_anchors,
            };
            print!("{}", table::render(&spec)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(a) => {
            let mode = match a.mode {
                ModeArg::Dp => Mode::Dp,
                ModeArg::BruteForce => Mode::BruteForce,
                ModeArg::Both => Mode::Both,
            };
            let bounds = Bounds {
                max_m: a.max_m,
                max_n: a.max_n,
                max_k: a.max_k,
                mode,
            };
            let report = verify::run(&bounds)?;
            print!("{}", verify::to_json(&bounds, &report));
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap spreads the diagnostic over several lines; keep its first
            // paragraph on one line and drop the usage hint.
            let rendered = e.to_string();
            let line: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            eprintln!("{}", line.join(" "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
