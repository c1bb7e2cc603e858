//! Command-line front end for the stable-norm library.
//!
//! Graphs come in as JSON files, results go to stdout as JSON (or plain
//! text for `circuits`), diagnostics go to stderr. Exit codes: 0 on
//! success, 1 when a verification fails, 2 on bad input.

pub mod corpus;
pub mod format;
pub mod plot;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use stableball::norm::vertex_bound;
use stableball::oracle::{ball_by_intersection_capped, norm_by_infimum_capped, DEFAULT_ORACLE_EDGE_CAP};
use stableball::rational::{format_rational, ParseRationalError, Rational};
use stableball::{
    decompose_class, enumerate_circuits, stable_ball, stable_norm, verify_vertices, Error,
    HomologyBasis, WeightedMultigraph,
};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub enum CliError {
    /// The ball has too many dimensions for the plot export.
    DimensionTooHigh { betti: usize },
    /// `gen` got a name it does not know.
    UnknownCorpusName(String),
    /// Any other malformed input, with an explanation.
    BadInput(String),
    Core(Error),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::DimensionTooHigh { betti } => write!(
                f,
                "ball dimension {betti} exceeds the plot limit of {}",
                plot::PLOT_DIMENSION_LIMIT
            ),
            CliError::UnknownCorpusName(name) => write!(
                f,
                "unknown graph name {name:?}; expected theta, K4, K33, bouquet-K, or random(S,V,E)"
            ),
            CliError::BadInput(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "invalid JSON: {e}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Core(e) => Some(e),
            CliError::Io(e) => Some(e),
            CliError::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<ParseRationalError> for CliError {
    fn from(e: ParseRationalError) -> Self {
        CliError::BadInput(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "stableball",
    version,
    about = "Exact stable-norm balls of weighted multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the unit ball of the stable norm as a vertex list.
    Ball {
        /// Graph JSON file.
        graph: PathBuf,
        /// Also write a CSV of vertices and boundary segments (dimension <= 3).
        #[arg(long, value_name = "CSV")]
        plot: Option<PathBuf>,
        /// Report the vertex-count bound 2(2^betti - 1) and whether it is attained.
        #[arg(long)]
        check_bound: bool,
    },
    /// Evaluate the stable norm of a homology class.
    Norm {
        /// Graph JSON file.
        graph: PathBuf,
        /// Comma-separated class coordinates in the homology basis, e.g. "3/2,-1".
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "")]
        class: Vec<String>,
    },
    /// Write an integral class as a sum of simple circuits of minimal total length.
    Decompose {
        /// Graph JSON file.
        graph: PathBuf,
        /// Comma-separated integer class coordinates, e.g. "3,2".
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "")]
        class: Vec<String>,
    },
    /// List every simple oriented circuit, one per line: id, length, steps.
    Circuits {
        /// Graph JSON file.
        graph: PathBuf,
    },
    /// Cross-check the ball against the brute-force oracle and certify each vertex.
    Verify {
        /// Graph JSON file.
        graph: PathBuf,
        /// Raise the oracle's edge-count cap (default 12; cost grows as 2^edges).
        #[arg(long, value_name = "EDGES")]
        oracle_cap: Option<usize>,
    },
    /// Print a built-in or seeded random graph as JSON.
    Gen {
        /// theta | K4 | K33 | bouquet-K | random(S,V,E)
        name: String,
        /// Override the seed of a random(S,V,E) graph.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Runs the CLI on the given argument list (including the program name),
/// writing results to `out` and diagnostics to `err`, and returns the
/// process exit code.
pub fn run<I>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Ball {
            graph,
            plot,
            check_bound,
        } => cmd_ball(&graph, plot.as_deref(), check_bound, out, err),
        Command::Norm { graph, class } => cmd_norm(&graph, &class, out),
        Command::Decompose { graph, class } => cmd_decompose(&graph, &class, out),
        Command::Circuits { graph } => cmd_circuits(&graph, out),
        Command::Verify { graph, oracle_cap } => cmd_verify(&graph, oracle_cap, out),
        Command::Gen { name, seed } => cmd_gen(&name, seed, out),
    }
}

fn load_graph(path: &Path) -> Result<WeightedMultigraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::BadInput(format!("cannot read {}: {e}", path.display())))?;
    format::parse_graph_json(&text)
}

fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn cmd_ball(
    path: &Path,
    plot_path: Option<&Path>,
    check_bound: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let basis = HomologyBasis::new(&g);
    let circuits = enumerate_circuits(&g)?;
    let ball = stable_ball(&g, &basis, &circuits);
    print_json(out, &format::BallFile::new(&ball, &circuits, check_bound))?;
    if let Some(csv_path) = plot_path {
        let csv = plot::export_plot(&g, &basis, &ball)?;
        fs::write(csv_path, csv)?;
        writeln!(err, "wrote {}", csv_path.display())?;
    }
    if check_bound && num_bigint::BigInt::from(ball.vertex_count()) > vertex_bound(ball.betti()) {
        writeln!(err, "vertex count exceeds the bound; the construction is broken")?;
        return Ok(1);
    }
    Ok(0)
}

fn cmd_norm(path: &Path, class: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let basis = HomologyBasis::new(&g);
    let coords = format::parse_class(class)?;
    let norm = stable_norm(&g, &basis, &coords)?;
    let chain = basis.chain_from_coords(&coords)?;
    print_json(
        out,
        &format::NormFile {
            betti: basis.betti(),
            class: format::rationals_to_strings(&coords),
            norm: format_rational(&norm),
            chain: format::rationals_to_strings(chain.coeffs()),
        },
    )?;
    Ok(0)
}

fn cmd_decompose(path: &Path, class: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let basis = HomologyBasis::new(&g);
    let coords = format::parse_class(class)?;
    let decomposition = decompose_class(&g, &basis, &coords)?;
    let circuits = decomposition
        .entries()
        .iter()
        .map(|(c, m)| format::DecompositionEntryFile {
            steps: c.to_string(),
            length: format_rational(c.length()),
            multiplicity: *m,
        })
        .collect();
    print_json(
        out,
        &format::DecompositionFile {
            class: format::rationals_to_strings(&coords),
            total_length: format_rational(&decomposition.total_length()),
            circuit_count: decomposition.circuit_count(),
            circuits,
        },
    )?;
    Ok(0)
}

fn cmd_circuits(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let circuits = enumerate_circuits(&g)?;
    for (id, c) in circuits.iter().enumerate() {
        writeln!(out, "{id}  {}  {c}", format_rational(c.length()))?;
    }
    Ok(0)
}

fn cmd_verify(path: &Path, oracle_cap: Option<usize>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let basis = HomologyBasis::new(&g);
    let betti = basis.betti();
    if betti == 0 {
        print_json(
            out,
            &format::VerifyFile {
                betti,
                vertex_count: 0,
                all_vertices_extreme: true,
                oracle_agrees: true,
                infimum_agrees: true,
                pass: true,
            },
        )?;
        return Ok(0);
    }
    let cap = oracle_cap.unwrap_or(DEFAULT_ORACLE_EDGE_CAP);
    let oracle = ball_by_intersection_capped(&g, &basis, cap).map_err(|e| match e {
        Error::CapExceeded { .. } => CliError::BadInput(format!("{e}; raise --oracle-cap")),
        other => CliError::Core(other),
    })?;
    let circuits = enumerate_circuits(&g)?;
    let ball = stable_ball(&g, &basis, &circuits);
    let report = verify_vertices(&ball);

    let mut sorted = ball.vertices_basis().to_vec();
    sorted.sort();
    let oracle_agrees = sorted == oracle.points();

    let mut infimum_agrees = true;
    let mut classes: Vec<Vec<Rational>> = (0..betti)
        .map(|i| {
            (0..betti)
                .map(|j| {
                    if i == j {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::from_integer(0.into())
                    }
                })
                .collect()
        })
        .collect();
    classes.push(vec![Rational::from_integer(1.into()); betti]);
    for coords in &classes {
        let direct = stable_norm(&g, &basis, coords)?;
        let solved = norm_by_infimum_capped(&g, &basis, coords, cap)?;
        infimum_agrees &= solved.value == direct;
    }

    let pass = report.pass && oracle_agrees && infimum_agrees;
    print_json(
        out,
        &format::VerifyFile {
            betti,
            vertex_count: ball.vertex_count(),
            all_vertices_extreme: report.pass,
            oracle_agrees,
            infimum_agrees,
            pass,
        },
    )?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_gen(name: &str, seed: Option<u64>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = corpus::corpus_graph(name, seed)?;
    writeln!(out, "{}", format::graph_json(&g))?;
    Ok(0)
}
