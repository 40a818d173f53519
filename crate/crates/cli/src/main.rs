//! `sgdist`: signed distance analysis of signed graphs from edge-list files.
//!
//! Exit codes: 0 success, 1 bad input, 2 graph not distance-compatible where
//! `D^±` is required, 3 a theorem check failed, 4 a suite precondition is unmet.

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use signed_distance::distance::{incompatible_pairs, is_geodetic};
use signed_distance::families::{
    complement_line_graph_complete, complete_bipartite, cycle, example5, neg_rim_wheel, unbalanced_cycle,
    FamilyError,
};
use signed_distance::matrix::{
    adjacency_matrix, d_max_matrix, d_min_matrix, d_pm_matrix, unsigned_distance_matrix, MatrixError,
};
use signed_distance::spectra::{eig_sym, sachs_charpoly_matrix, DEFAULT_TOL};
use signed_distance::{classify, io, is_balanced, Sign, SignedGraph, SymMatrix};

#[derive(Parser)]
#[command(name = "sgdist", version, about = "Signed distance matrices, spectra and balance of signed graphs")]
struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a distance matrix.
    Dist {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Max)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Eigenvalues of a distance or adjacency matrix as JSON.
    Spectrum {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SpectrumOf::Max)]
        which: SpectrumOf,
        /// Print the exact characteristic polynomial instead (order at most 12).
        #[arg(long)]
        charpoly: bool,
    },
    /// Balance report with Harary bipartition or a negative cycle.
    Balance { input: PathBuf },
    /// Distance-compatibility and the incompatible pairs.
    Compat { input: PathBuf },
    /// Class I, II or III with the flags behind it.
    Classify { input: PathBuf },
    /// Write a member of a graph family as an edge list.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Check one theorem on the input graph.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Seed for the random switching functions of the switching suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Cycle on n vertices; with --unbalanced, edge {n, 1} is negative and n must be odd.
    Cycle(CycleArgs),
    /// Odd rim of n negative edges joined to a hub n+1 by positive spokes.
    Wheel {
        #[arg(long)]
        n: usize,
    },
    /// All-positive K_{n,m}; m defaults to n.
    Bipartite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Positive and negative copies of the complement of L(K_n), fully joined by positive edges.
    Example5 {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

#[derive(Args)]
struct CycleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    unbalanced: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Max,
    Min,
    Pm,
    Unsigned,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumOf {
    Max,
    Min,
    Pm,
    Unsigned,
    Adjacency,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    Gen,
    Dbal,
    Bipartite,
    Blocks,
    Switching,
}

pub enum Failure {
    Input(String),
    NotCompatible { u: usize, v: usize },
    /// The report is still printed.
    TheoremFailed(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::NotCompatible { .. } => 2,
            Failure::TheoremFailed(_) => 3,
            Failure::Precondition(_) => 4,
        }
    }
}

impl From<MatrixError> for Failure {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::NotCompatible { u, v } => Failure::NotCompatible { u, v },
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn distance_matrix(g: &SignedGraph, which: Which) -> Result<SymMatrix, Failure> {
    Ok(match which {
        Which::Max => d_max_matrix(g),
        Which::Min => d_min_matrix(g),
        Which::Pm => d_pm_matrix(g)?,
        Which::Unsigned => unsigned_distance_matrix(g),
    })
}

fn one_based(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

fn generate(family: &GenFamily) -> Result<SignedGraph, Failure> {
    Ok(match *family {
        GenFamily::Cycle(CycleArgs { n, unbalanced: true }) => unbalanced_cycle(n)?,
        GenFamily::Cycle(CycleArgs { n, unbalanced: false }) => cycle(n, Sign::Plus)?,
        GenFamily::Wheel { n } => neg_rim_wheel(n)?,
        GenFamily::Bipartite { n, m } => complete_bipartite(n, m.unwrap_or(n))?,
        GenFamily::Example5 { n } => {
            let part = complement_line_graph_complete(n)?;
            example5(&part, &part)?
        }
    })
}

/// Output text, or the failure with any report text to print first.
fn run(cli: &Cli) -> Result<String, (Failure, Option<String>)> {
    let plain = |f: Failure| (f, None);
    match &cli.command {
        Command::Dist { input, which, format } => {
            let g = read_graph(input).map_err(plain)?;
            let m = distance_matrix(&g, *which).map_err(plain)?;
            Ok(match format {
                Format::Csv => m.to_csv(),
                Format::Json => m.to_json(),
            })
        }
        Command::Spectrum { input, which, charpoly } => {
            let g = read_graph(input).map_err(plain)?;
            let m = match which {
                SpectrumOf::Max => distance_matrix(&g, Which::Max),
                SpectrumOf::Min => distance_matrix(&g, Which::Min),
                SpectrumOf::Pm => distance_matrix(&g, Which::Pm),
                SpectrumOf::Unsigned => distance_matrix(&g, Which::Unsigned),
                SpectrumOf::Adjacency => Ok(adjacency_matrix(&g)),
            }
            .map_err(plain)?;
            if *charpoly {
                let p = sachs_charpoly_matrix(&m).map_err(|e| plain(Failure::Precondition(e.to_string())))?;
                Ok(p.to_json())
            } else {
                let s = eig_sym(&m, DEFAULT_TOL).map_err(|e| plain(Failure::Input(e.to_string())))?;
                Ok(s.to_json())
            }
        }
        Command::Balance { input } => Ok(is_balanced(&read_graph(input).map_err(plain)?).to_json()),
        Command::Compat { input } => {
            let g = read_graph(input).map_err(plain)?;
            let pairs = incompatible_pairs(&g);
            Ok(json!({
                "compatible": pairs.is_empty(),
                "geodetic": is_geodetic(&g),
                "incompatible_pairs": one_based(&pairs),
            })
            .to_string())
        }
        Command::Classify { input } => {
            let label = classify(&read_graph(input).map_err(plain)?);
            Ok(serde_json::to_string(&label).expect("label serializes"))
        }
        Command::Gen { family } => Ok(io::emit(&generate(family).map_err(plain)?)),
        Command::Verify { input, suite, seed } => {
            let g = read_graph(input).map_err(plain)?;
            verify::run(&g, *suite, *seed)
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_failure(f: &Failure) {
    match f {
        Failure::Input(msg) => eprintln!("error: {msg}"),
        Failure::NotCompatible { u, v } => {
            eprintln!("error: signed graph is not distance-compatible, witness pair:");
            eprintln!("{} {}", u + 1, v + 1);
        }
        Failure::TheoremFailed(msg) => eprintln!("FAIL: {msg}"),
        Failure::Precondition(msg) => eprintln!("precondition not met: {msg}"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(&cli);
    let (text, failure) = match result {
        Ok(text) => (Some(text), None),
        Err((f, report)) => (report, Some(f)),
    };
    if let Some(text) = text {
        if let Err(f) = write_output(cli.out.as_deref(), &text) {
            report_failure(&f);
            return ExitCode::from(f.code());
        }
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            report_failure(&f);
            ExitCode::from(f.code())
        }
    }
}
