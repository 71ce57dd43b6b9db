//! `knotcolor`: quandle colorings of knot diagrams from the command line.
//!
//! Exit codes: 0 on success (for `certify` and `distinguish`: a
//! certificate or witness was found), 10 when a library search is
//! inconclusive, 3 when a budget ran out, 2 on any error.

mod commands;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spec::{GenerateSpec, KnotSpec, QuandleSpec};

pub const EXIT_ERROR: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 10;

/// Version of the JSON output schema.
pub const SCHEMA: &str = "knotcolor-output/1";

#[derive(Parser)]
#[command(
    name = "knotcolor",
    version,
    about = "Quandle colorings of knot diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a knot has a nontrivial coloring.
    Color(ColorArgs),
    /// Count nontrivial colorings.
    Count(ColorArgs),
    /// Write the CNF encoding in DIMACS format.
    Encode(EncodeArgs),
    /// Search a quandle library for a knottedness certificate.
    Certify(CertifyArgs),
    /// Try to show that two knots are different.
    Distinguish(DistinguishArgs),
    /// Print the Alexander polynomial and determinant.
    Alexander(AlexanderArgs),
    /// Run a knot family against a library and write CSV.
    Bench(BenchArgs),
    /// Solve a DIMACS file with the built-in solver (competition output).
    Solve { file: PathBuf },
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
pub struct KnotInput {
    /// Signed Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+" or UNKNOT.
    #[arg(long)]
    pub gauss: Option<String>,
    /// Braid word "strands: letters", e.g. "3: 1 -2 1 -2".
    #[arg(long)]
    pub braid: Option<String>,
    /// Torus knot "p,q".
    #[arg(long)]
    pub torus: Option<String>,
    /// Dowker-Thistlethwaite code, e.g. "4 6 8 2".
    #[arg(long)]
    pub dt: Option<String>,
    /// A built-in fixture name.
    #[arg(long)]
    pub fixture: Option<String>,
    /// A `name,dt_code` CSV; use `--knot-name` to pick a row.
    #[arg(long)]
    pub fixture_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct KnotSelect {
    #[command(flatten)]
    pub input: KnotInput,
    /// Row to take from `--fixture-file` (default: the first).
    #[arg(long, requires = "fixture_file")]
    pub knot_name: Option<String>,
}

impl KnotSelect {
    pub fn spec(&self) -> Result<KnotSpec, String> {
        let i = &self.input;
        Ok(if let Some(g) = &i.gauss {
            KnotSpec::Gauss(g.clone())
        } else if let Some(b) = &i.braid {
            KnotSpec::Braid(b.clone())
        } else if let Some(t) = &i.torus {
            let (p, q) = spec::parse_pair(t)?;
            KnotSpec::Torus(p, q)
        } else if let Some(d) = &i.dt {
            KnotSpec::Dt(d.clone())
        } else if let Some(f) = &i.fixture {
            KnotSpec::Fixture(f.clone())
        } else if let Some(p) = &i.fixture_file {
            KnotSpec::File(p.clone(), self.knot_name.clone())
        } else {
            return Err("no knot given".into());
        })
    }
}

#[derive(Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Wall-clock limit per search, in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Search-node limit per search.
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Largest brute-force assignment space.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_assignments: u128,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Brute,
    Backtrack,
    Braid,
    Sat,
    External,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Backtrack => "backtrack",
            Engine::Braid => "braid",
            Engine::Sat => "sat",
            Engine::External => "external",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
pub struct EngineArgs {
    /// Default: sat for `color`, backtrack for `count` and `bench`.
    #[arg(long, value_enum)]
    pub engine: Option<Engine>,
    /// Solver executable for `--engine external`; called as `SOLVER file.cnf`.
    #[arg(long, env = "KNOTCOLOR_SOLVER")]
    pub solver: Option<PathBuf>,
    /// Also run brute force (within budget) and fail on disagreement.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub knot: KnotSelect,
    /// dihedral:N, affine:N,T, trivial:N or file:PATH#NAME.
    #[arg(long)]
    pub quandle: QuandleSpec,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args)]
pub struct EncodeArgs {
    #[command(flatten)]
    pub knot: KnotSelect,
    #[arg(long)]
    pub quandle: QuandleSpec,
    /// Omit the unit clause pinning arc 1 to color 1.
    #[arg(long)]
    pub no_sb: bool,
    /// Omit the clauses that forbid monochrome colorings.
    #[arg(long)]
    pub no_nontrivial: bool,
    /// Output file (default: standard output).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct LibraryArgs {
    /// Library file in the text format; overrides `--generate`.
    #[arg(long, env = "KNOTCOLOR_LIBRARY")]
    pub library: Option<PathBuf>,
    /// standard, dihedral-primes:B or affine:B.
    #[arg(long, default_value = "standard")]
    pub generate: GenerateSpec,
}

#[derive(Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub knot: KnotSelect,
    #[command(flatten)]
    pub library: LibraryArgs,
    /// Drop affine quandles when the Alexander polynomial is trivial.
    #[arg(long)]
    pub prefilter: bool,
    /// Worker threads (1 = sequential).
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args)]
pub struct DistinguishArgs {
    /// First knot as kind:value (gauss:, braid:, torus:, dt:, fixture:, file:PATH#NAME).
    pub first: KnotSpec,
    /// Second knot, same syntax.
    pub second: KnotSpec,
    #[command(flatten)]
    pub library: LibraryArgs,
    /// Skip the Alexander polynomial comparison.
    #[arg(long)]
    pub no_alexander: bool,
    /// Compare colorability only, not counts.
    #[arg(long)]
    pub no_count: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args)]
pub struct AlexanderArgs {
    #[command(flatten)]
    pub knot: KnotSelect,
    /// Also report nontrivial Fox colorings modulo these numbers.
    #[arg(long, value_delimiter = ',')]
    pub fox: Vec<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args)]
pub struct BenchArgs {
    /// torus2:N1,N2,..., fixtures, or file:PATH (name,dt_code CSV).
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub library: LibraryArgs,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Worker threads; rows are still written in input order.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Output file (default: standard output).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color(a) => commands::color(a, false),
        Command::Count(a) => commands::color(a, true),
        Command::Encode(a) => commands::encode(a),
        Command::Certify(a) => commands::certify(a),
        Command::Distinguish(a) => commands::distinguish(a),
        Command::Alexander(a) => commands::alexander(a),
        Command::Bench(a) => commands::bench(a),
        Command::Solve { file } => commands::solve(&file),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
