use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nbpoly::{anchor_width, compute, parse_edge_list, Graph, NotChordal};
use serde::Serialize;

mod families;
mod verify;

use families::Family;

/// Neighborhood polynomials and anchor widths of chordal graphs.
#[derive(Parser, Debug)]
#[command(name = "nbpoly", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the neighborhood polynomial of a chordal graph.
    Compute {
        /// Edge-list file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Cross-check against brute force (graphs with at most 16 vertices).
        #[arg(long)]
        oracle_check: bool,
        /// Print per-step engine statistics to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Print the anchor width of a chordal graph.
    AnchorWidth {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit a graph family as an edge list.
    Generate {
        family: Family,
        /// Family parameters: `n` for path/cycle/complete/star, `m` for
        /// split/interval, `n attach_max` for random-chordal.
        params: Vec<usize>,
        #[arg(long = "param")]
        extra: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the engine against the brute-force oracles.
    Verify {
        #[arg(long, conflicts_with = "family")]
        input: Option<PathBuf>,
        #[arg(long)]
        family: Option<Family>,
        /// Family sizes (or attach_max for random-chordal).
        #[arg(long = "param")]
        params: Vec<usize>,
        /// Number of random graphs.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

const ORACLE_CHECK_LIMIT: usize = 16;

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    pub(crate) code: u8,
    pub(crate) message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<NotChordal> for Failure {
    fn from(e: NotChordal) -> Self {
        Self {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn read_graph(input: Option<&PathBuf>) -> Result<Graph, Failure> {
    let text = match input {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_edge_list(&text).map_err(|e| Failure::usage(e.to_string()))
}

#[derive(Serialize)]
struct Report {
    n: usize,
    m: usize,
    coefficients: Vec<String>,
    anchor_width: usize,
    peak_width: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'static str>,
}

fn cmd_compute(input: Option<&PathBuf>, format: Format, oracle_check: bool, trace: bool) -> Result<String, Failure> {
    let g = read_graph(input)?;
    let result = compute(&g)?;
    if trace {
        let mut err = io::stderr().lock();
        for step in &result.steps {
            let _ = writeln!(err, "{step}");
        }
    }

    let oracle = if !oracle_check {
        None
    } else if g.n() > ORACLE_CHECK_LIMIT {
        Some("SKIP")
    } else {
        let brute = nbpoly::oracle::brute_neighborhood_poly(&g).map_err(|e| Failure::usage(e.to_string()))?;
        Some(if brute == result.poly { "MATCH" } else { "MISMATCH" })
    };

    let out = match format {
        Format::Text => {
            let mut s = format!(
                "{}\nanchor_width: {}\npeak_width: {}\nn: {}\nm: {}\n",
                result.poly,
                result.anchor_width,
                result.peak_width,
                g.n(),
                g.m()
            );
            if let Some(o) = oracle {
                s.push_str(&format!("oracle: {o}\n"));
            }
            s
        }
        Format::Json => {
            let report = Report {
                n: g.n(),
                m: g.m(),
                coefficients: result.poly.coeffs().iter().map(|c| c.to_string()).collect(),
                anchor_width: result.anchor_width,
                peak_width: result.peak_width,
                oracle,
            };
            serde_json::to_string(&report).expect("report serializes") + "\n"
        }
    };
    if oracle == Some("MISMATCH") {
        print!("{out}");
        return Err(Failure::usage("engine disagrees with brute force"));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute {
            input,
            format,
            oracle_check,
            trace,
        } => cmd_compute(input.as_ref(), format, oracle_check, trace),
        Command::AnchorWidth { input } => {
            let g = read_graph(input.as_ref())?;
            Ok(format!("{}\n", anchor_width(&g)?))
        }
        Command::Generate {
            family,
            mut params,
            extra,
            seed,
        } => {
            params.extend(extra);
            let g = family.build(&params, seed)?;
            Ok(g.to_edge_list())
        }
        Command::Verify {
            input,
            family,
            params,
            count,
            max_n,
            seed,
        } => {
            let plan = match (input, family) {
                (Some(path), None) => verify::Plan::Input(read_graph(Some(&path))?),
                (None, Some(family)) => verify::Plan::Family {
                    family,
                    params,
                    count,
                    max_n,
                    seed,
                },
                (None, None) => verify::Plan::Input(read_graph(None)?),
                (Some(_), Some(_)) => unreachable!("clap rejects --input with --family"),
            };
            verify::run(plan)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
