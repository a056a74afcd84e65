use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphinv::census::{run_census, tree_census, Mode};
use graphinv::generate::{generate_connected_graphs, generate_trees};
use graphinv::linalg::{charpoly, snf};
use graphinv::matrix::{build, MatrixKind};
use graphinv::sandpile::sandpile_group;
use graphinv::spectra::{default_tol, eigenvalues_symmetric};
use graphinv::verify::{run_suite, Suite};
use graphinv::{parse_graph6_lines, write_graph6, Graph};

#[derive(Parser)]
#[command(
    name = "graphinv",
    version,
    about = "Integer invariants and spectra of graph matrices"
)]
struct Cli {
    /// Worker threads; defaults to available parallelism for census and
    /// trees, one thread otherwise.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Selection {
    /// Comma-separated matrix kinds (A, L, Q, D, DL, DQ, Atr, AtrPlus, Ddeg, DdegPlus).
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "Atr,AtrPlus,Ddeg,DdegPlus"
    )]
    matrices: Vec<MatrixKind>,
    /// Comma-separated modes: spectral, invariant.
    #[arg(long, value_delimiter = ',', default_value = "spectral,invariant")]
    modes: Vec<Mode>,
}

#[derive(Subcommand)]
enum Command {
    /// Print connected graphs (or free trees) on n vertices as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trees: bool,
    },
    /// Cospectral/coinvariant census of connected graphs on n vertices.
    Census {
        #[arg(long)]
        n: usize,
        /// graph6 corpus of pairwise non-isomorphic connected graphs on n vertices.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        sel: Selection,
    },
    /// Census over all free trees on n vertices.
    Trees {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sel: Selection,
    },
    /// Smith normal form of one matrix per input graph.
    Snf {
        /// graph6 file; standard input when omitted or "-".
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        matrix: MatrixKind,
    },
    /// Eigenvalues, or characteristic polynomial with --exact.
    Spectrum {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        matrix: MatrixKind,
        #[arg(long)]
        exact: bool,
    },
    /// Sandpile group and spanning-tree count of each input graph's cone.
    Sandpile {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run property suites; nonzero exit on any failure.
    Verify {
        /// One suite; all suites when omitted.
        #[arg(long)]
        suite: Option<Suite>,
        #[arg(long)]
        n_max: usize,
    },
}

type CliResult = Result<bool, String>;

fn read_graphs(input: Option<&PathBuf>) -> Result<Vec<Graph>, String> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    parse_graph6_lines(&text).map_err(|e| e.to_string())
}

fn emit(lines: impl IntoIterator<Item = String>) -> Result<(), String> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for line in lines {
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Gen { n, trees } => {
            let graphs = if trees {
                generate_trees(n)
            } else {
                generate_connected_graphs(n)
            }
            .map_err(|e| e.to_string())?;
            emit(graphs.iter().map(write_graph6))?;
        }
        Command::Census { n, input, sel } => {
            let graphs = match input {
                Some(p) => read_graphs(Some(&p))?,
                None => generate_connected_graphs(n).map_err(|e| e.to_string())?,
            };
            if let Some(g) = graphs.iter().find(|g| g.n() != n) {
                return Err(format!(
                    "input graph {} has {} vertices, expected {n}",
                    write_graph6(g),
                    g.n()
                ));
            }
            let report =
                run_census(graphs, &sel.matrices, &sel.modes).map_err(|e| e.to_string())?;
            print!("{}", report.to_tsv());
        }
        Command::Trees { n, sel } => {
            let report = tree_census(n, &sel.matrices, &sel.modes).map_err(|e| e.to_string())?;
            print!("{}", report.to_tsv());
        }
        Command::Snf { input, matrix } => {
            let mut lines = Vec::new();
            for g in read_graphs(input.as_ref())? {
                let m = build(&g, matrix).map_err(|e| format!("{}: {e}", write_graph6(&g)))?;
                lines.push(format!("{}\t{}", write_graph6(&g), snf(&m)));
            }
            emit(lines)?;
        }
        Command::Spectrum {
            input,
            matrix,
            exact,
        } => {
            let mut lines = Vec::new();
            for g in read_graphs(input.as_ref())? {
                let m = build(&g, matrix).map_err(|e| format!("{}: {e}", write_graph6(&g)))?;
                let body = if exact {
                    charpoly(&m).to_string()
                } else {
                    let s =
                        eigenvalues_symmetric(&m, default_tol(&m)).map_err(|e| e.to_string())?;
                    s.eigenvalues
                        .iter()
                        .map(|&x| format!("{:.9}", if x.abs() < 5e-10 { 0.0 } else { x }))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                lines.push(format!("{}\t{body}", write_graph6(&g)));
            }
            emit(lines)?;
        }
        Command::Sandpile { input } => {
            let mut lines = Vec::new();
            for g in read_graphs(input.as_ref())? {
                let sp = sandpile_group(&g).map_err(|e| format!("{}: {e}", write_graph6(&g)))?;
                lines.push(format!("{}, tau={}", sp.group, sp.spanning_trees));
            }
            emit(lines)?;
        }
        Command::Verify { suite, n_max } => {
            let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
            let mut ok = true;
            let mut lines = Vec::new();
            for s in suites {
                let out = run_suite(s, n_max).map_err(|e| format!("{s}: {e}"))?;
                let status = if out.passed() { "PASS" } else { "FAIL" };
                lines.push(format!(
                    "{s}\t{status}\t{} checks\t{} failures",
                    out.checks,
                    out.failures.len()
                ));
                lines.extend(out.notes.iter().map(|n| format!("{s}\tnote\t{n}")));
                lines.extend(out.failures.iter().map(|f| format!("{s}\tfailure\t{f}")));
                ok &= out.passed();
            }
            emit(lines)?;
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let parallel = matches!(cli.command, Command::Census { .. } | Command::Trees { .. });
    let threads = cli.jobs.unwrap_or(if parallel { 0 } else { 1 });
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
    {
        eprintln!("graphinv: {e}");
        return ExitCode::from(1);
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("graphinv: {e}");
            ExitCode::from(1)
        }
    }
}
