//! The `mixproj` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failure (`check`), 2 usage or
//! input error. Results go to standard output, diagnostics to standard
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixproj_core::bracket::{projection_to_tree, to_bracket, to_bracket_pretty};
use mixproj_core::oracle::{CheckOptions, DEFAULT_PATH_BUDGET};
use mixproj_core::paths::{count_shortest_paths, distance_table, enumerate_shortest_paths};
use mixproj_core::projection::{build_refined, DEFAULT_NODE_CAP};
use mixproj_core::random::random_mixed_graph;
use mixproj_core::{GraphError, MixedGraph, VertexId};
use serde::Serialize;

use crate::bench::{bench_source, BenchRow, CSV_HEADER};
use crate::json::{to_json, DistanceMatrixDoc, DistanceTableDoc, OracleReportDoc, PathSetDoc, ProjectionDoc};
use crate::{parallel, read_graph_file, render, write_graph_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mixproj", version, about = "Shortest paths on unweighted mixed graphs via refined projections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the refined projection from one source.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        source: u32,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Node budget for the bracket expansion.
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
        /// With `-f bracket`: one vertex per line, indented by depth.
        #[arg(long)]
        pretty: bool,
    },
    /// List the shortest paths between two vertices.
    Path {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        source: u32,
        #[arg(short, long)]
        target: u32,
        /// Stop after this many paths.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distances from one source.
    Sssp {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        source: u32,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// All-pairs distance matrix.
    Apsp {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify projections against the brute-force oracles.
    Check {
        #[command(flatten)]
        input: Input,
        /// Sources to check; all vertices when omitted.
        #[arg(short, long)]
        source: Vec<u32>,
        /// With `--random`: check this many graphs, seeds `seed..seed+batch`.
        #[arg(long, default_value_t = 1)]
        batch: u64,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Skip the exhaustive path-set comparison.
        #[arg(long)]
        no_paths: bool,
        /// Node-expansion budget of the brute-force path search.
        #[arg(long, default_value_t = DEFAULT_PATH_BUDGET)]
        path_budget: u64,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Overwrite pred(V) with P1,P2,... before checking (`V:P1,P2`).
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Counter and timing rows per (graph, source).
    Bench {
        #[command(flatten)]
        input: Input,
        /// Sources to measure; all vertices when omitted.
        #[arg(short, long)]
        source: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Omit wall times, leaving only deterministic counters.
        #[arg(long)]
        no_timing: bool,
        /// `text` writes CSV.
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a seeded random graph in the graph file format.
    Gen {
        #[arg(short, long)]
        n: usize,
        #[arg(long)]
        pair_prob: f64,
        #[arg(long)]
        orient_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Bracket,
}

#[derive(Debug, Args)]
#[group(skip)]
pub struct Input {
    #[command(flatten)]
    source: GraphSource,
    /// Seed for `--random` [default: 0].
    #[arg(long, conflicts_with = "graph")]
    seed: Option<u64>,
}

/// Exactly one of a graph file or a random-graph spec.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(short, long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Seeded random graph `N:PAIR_PROB:ORIENT_PROB`.
    #[arg(long, value_name = "SPEC")]
    random: Option<RandomSpec>,
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub pair_prob: f64,
    pub orient_prob: f64,
}

impl FromStr for RandomSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [n, p, o] = parts[..] else {
            return Err("expected N:PAIR_PROB:ORIENT_PROB".into());
        };
        let bad = |what: &str, v: &str| format!("invalid {what} `{v}`");
        Ok(RandomSpec {
            n: n.parse().map_err(|_| bad("vertex count", n))?,
            pair_prob: p.parse().map_err(|_| bad("pair probability", p))?,
            orient_prob: o.parse().map_err(|_| bad("orientation probability", o))?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub vertex: u32,
    pub pred: Vec<u32>,
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (v, ps) = s.split_once(':').ok_or("expected V:P1,P2,...")?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid vertex `{t}`"));
        let pred = if ps.trim().is_empty() { Vec::new() } else { ps.split(',').map(num).collect::<Result<_, _>>()? };
        Ok(Fault { vertex: num(v)?, pred })
    }
}

/// A failure that maps onto an exit code.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Input(#[from] crate::GraphTextError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Projection(#[from] mixproj_core::projection::ProjectionError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

struct Loaded {
    label: String,
    graph: MixedGraph,
}

impl Input {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    fn load(&self) -> Result<Loaded, Failure> {
        self.load_seed(self.seed())
    }

    fn load_seed(&self, seed: u64) -> Result<Loaded, Failure> {
        if let Some(path) = &self.source.graph {
            return Ok(Loaded { label: path.display().to_string(), graph: read_graph_file(path)? });
        }
        let spec = self.source.random.expect("clap enforces one input");
        Ok(Loaded {
            label: format!("random:{}:{}:{}:{}", spec.n, spec.pair_prob, spec.orient_prob, seed),
            graph: random_mixed_graph(spec.n, spec.pair_prob, spec.orient_prob, seed)?,
        })
    }
}

fn no_bracket(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Bracket {
        return Err(Failure::Usage(format!("`{command}` has no bracket output; use text or json")));
    }
    Ok(())
}

fn vertex(g: &MixedGraph, id: u32) -> Result<VertexId, Failure> {
    Ok(g.vertex(id)?)
}

/// Parses `args` (program name first) and runs the command, writing to
/// `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "mixproj: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Build { input, source, format, node_cap, pretty } => {
            let g = input.load()?.graph;
            let p = build_refined(&g, vertex(&g, source)?)?;
            let text = match format {
                Format::Text => render::projection(&p),
                Format::Json => to_json(&ProjectionDoc::from(&p)),
                Format::Bracket => {
                    let tree = projection_to_tree(&p, node_cap)?;
                    if pretty {
                        to_bracket_pretty(&tree)
                    } else {
                        to_bracket(&tree) + "\n"
                    }
                }
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Path { input, source, target, limit, format } => {
            no_bracket(format, "path")?;
            let g = input.load()?.graph;
            let p = build_refined(&g, vertex(&g, source)?)?;
            let t = vertex(&g, target)?;
            let set = enumerate_shortest_paths(&p, t, limit)?;
            let count = count_shortest_paths(&p, t)?;
            let text = match format {
                Format::Json => to_json(&PathSetDoc::new(&set, p.level(t), count)),
                _ => render::path_set(&set, p.level(t), count),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Sssp { input, source, format } => {
            no_bracket(format, "sssp")?;
            let g = input.load()?.graph;
            let table = distance_table(&build_refined(&g, vertex(&g, source)?)?);
            let text = match format {
                Format::Json => to_json(&DistanceTableDoc::from(&table)),
                _ => render::distance_table(&table),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Apsp { input, parallel, format } => {
            no_bracket(format, "apsp")?;
            let g = input.load()?.graph;
            let m = parallel::apsp(&g, parallel);
            let text = match format {
                Format::Json => to_json(&DistanceMatrixDoc::from(&m)),
                _ => render::distance_matrix(&m),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Check { input, source, batch, parallel, no_paths, path_budget, format, inject_fault } => {
            no_bracket(format, "check")?;
            return check(&input, &source, batch, parallel, no_paths, path_budget, format, inject_fault, out);
        }
        Command::Bench { input, source, reps, no_timing, format } => {
            no_bracket(format, "bench")?;
            let Loaded { label, graph } = input.load()?;
            let sources = if source.is_empty() {
                graph.vertices().collect()
            } else {
                source.iter().map(|&s| vertex(&graph, s)).collect::<Result<Vec<_>, _>>()?
            };
            let rows: Vec<BenchRow> =
                sources.into_iter().map(|u| bench_source(&graph, &label, u, reps, !no_timing)).collect();
            match format {
                Format::Json => out.write_all(to_json(&rows).as_bytes())?,
                _ => {
                    writeln!(out, "{CSV_HEADER}")?;
                    for row in &rows {
                        writeln!(out, "{}", row.csv())?;
                    }
                }
            }
        }
        Command::Gen { n, pair_prob, orient_prob, seed } => {
            let g = random_mixed_graph(n, pair_prob, orient_prob, seed)?;
            out.write_all(write_graph_text(&g).as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckedGraph {
    graph: String,
    sources: Vec<u32>,
    report: OracleReportDoc,
}

#[derive(Serialize)]
struct CheckDoc {
    verified: bool,
    graphs: Vec<CheckedGraph>,
}

#[allow(clippy::too_many_arguments)]
fn check(
    input: &Input,
    sources: &[u32],
    batch: u64,
    threads: usize,
    no_paths: bool,
    path_budget: u64,
    format: Format,
    fault: Option<Fault>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if input.source.graph.is_some() && batch != 1 {
        return Err(Failure::Usage("`--batch` needs `--random`".into()));
    }
    let opts = CheckOptions { verify_paths: !no_paths, path_budget };
    let mut graphs = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for offset in 0..batch.max(1) {
        let Loaded { label, graph } = input.load_seed(input.seed().wrapping_add(offset))?;
        let wanted: Vec<VertexId> = sources.iter().map(|&s| vertex(&graph, s)).collect::<Result<_, _>>()?;
        let report = match &fault {
            None => parallel::check_sources(&graph, &wanted, opts, threads),
            Some(f) => {
                let [u] = wanted[..] else {
                    return Err(Failure::Usage("`--inject-fault` needs exactly one `--source`".into()));
                };
                let mut p = build_refined(&graph, u)?;
                let target = vertex(&graph, f.vertex)?;
                let pred = f.pred.iter().map(|&q| vertex(&graph, q)).collect::<Result<_, _>>()?;
                p.corrupt_pred(target, pred);
                mixproj_core::oracle::check_projection_with(&graph, &p, opts)
            }
        };
        let checked: Vec<u32> = if wanted.is_empty() {
            graph.vertices().map(VertexId::get).collect()
        } else {
            wanted.iter().map(|v| v.get()).collect()
        };
        all_ok &= report.is_empty();
        text.push_str(&render::oracle_report(&label, checked.len(), &report));
        graphs.push(CheckedGraph { graph: label, sources: checked, report: OracleReportDoc::from(&report) });
    }
    match format {
        Format::Json => out.write_all(to_json(&CheckDoc { verified: all_ok, graphs }).as_bytes())?,
        _ => {
            out.write_all(text.as_bytes())?;
            writeln!(out, "{}", if all_ok { "verified" } else { "FAILED" })?;
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}
