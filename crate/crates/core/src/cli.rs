//! The `hyp` command line: argument parsing, exit codes and output formatting.
//!
//! Every subcommand writes its report to a caller-supplied writer so the whole
//! front end can be driven from tests without spawning a process.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::eccentricity::compute_all_eccentricities;
use crate::error::{Error, Result};
use crate::generators::{gen_clique, GenSpec, RNG_ALGORITHM};
use crate::graph::{
    largest_biconnected_component, load_edge_list, read_edge_list_file, write_edge_list, EdgeListFormat, Graph,
    GraphSummary, LoadedGraph, VertexId,
};
use crate::hyperbolicity::{
    brute_force_hyperbolicity_with_limit, compute_hyperbolicity, QuadrupleResult, RunStats, SearchConfig, SearchMode,
    DEFAULT_BRUTE_FORCE_LIMIT, DEFAULT_MEMORY_BUDGET,
};
use crate::cache::{DEFAULT_CAPACITY, DEFAULT_SIDE_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PARAMETER: i32 = 3;
pub const EXIT_MEMORY: i32 = 4;

/// Version of the stats JSON layout.
pub const STATS_SCHEMA: u32 = 1;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::EmptyGraph | Error::Disconnected => EXIT_PARSE,
        Error::InvalidParameter(_) | Error::TooLarge { .. } | Error::GenerationFailed(_) => EXIT_PARAMETER,
        Error::MemoryBudget { .. } => EXIT_MEMORY,
        Error::Io(_) => EXIT_IO,
    }
}

#[derive(Parser, Debug)]
#[command(name = "hyp", version, about = "Exact Gromov hyperbolicity of sparse graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the hyperbolicity of a graph
    Compute(RunConfig),
    /// Exhaustive four-point evaluation, for small graphs
    Oracle(OracleArgs),
    /// Extract the largest biconnected component as an edge list
    Bcc(BccArgs),
    /// Write a synthetic graph as an edge list
    Gen(GenArgs),
    /// Print size, eccentricity and degree statistics
    Stats(InputArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Exact,
    /// First sweep only; prints a certified interval
    ApproxPass1,
    /// Brute force over all quadruples
    Oracle,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct RunConfig {
    /// Edge-list file, or `-` for standard input
    #[arg(long, short)]
    pub input: PathBuf,
    /// `edgelist` or `dimacs`
    #[arg(long, default_value = "edgelist")]
    pub format: EdgeListFormat,
    /// Domination distance of the top level (k)
    #[arg(long, default_value_t = 2)]
    pub max_dom_dist: u32,
    /// Ratio between consecutive domination distances (r > 1)
    #[arg(long, default_value_t = 2.0)]
    pub ratio: f64,
    /// Distance matrices kept in the cache (at least 7)
    #[arg(long, default_value_t = DEFAULT_CAPACITY)]
    pub cache_size: usize,
    /// Matrices with a longer side bypass the cache; 0 disables caching
    #[arg(long, default_value_t = DEFAULT_SIDE_LIMIT)]
    pub side_limit: usize,
    /// Largest top-level distance matrix, in entries
    #[arg(long, default_value_t = DEFAULT_MEMORY_BUDGET)]
    pub memory_budget: u64,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Restrict to the largest biconnected component first
    #[arg(long)]
    pub bcc: bool,
    /// Write run statistics as JSON to this path
    #[arg(long)]
    pub stats_json: Option<PathBuf>,
    /// Recorded in the statistics; the computation itself is deterministic
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            input: input.into(),
            format: EdgeListFormat::EdgeList,
            max_dom_dist: 2,
            ratio: 2.0,
            cache_size: DEFAULT_CAPACITY,
            side_limit: DEFAULT_SIDE_LIMIT,
            memory_budget: DEFAULT_MEMORY_BUDGET,
            mode: Mode::Exact,
            bcc: false,
            stats_json: None,
            seed: 0,
        }
    }

    pub fn search_config(&self) -> SearchConfig {
        SearchConfig {
            k: self.max_dom_dist,
            ratio: self.ratio,
            cache_capacity: self.cache_size,
            side_limit: self.side_limit,
            memory_budget: self.memory_budget,
            mode: match self.mode {
                Mode::ApproxPass1 => SearchMode::ApproxPass1,
                _ => SearchMode::Exact,
            },
            ..SearchConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.search_config().validate()
    }
}

#[derive(Args, Clone, Debug)]
pub struct InputArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, default_value = "edgelist")]
    pub format: EdgeListFormat,
    #[arg(long)]
    pub bcc: bool,
}

#[derive(Args, Clone, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Refuse graphs with more vertices than this
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_LIMIT)]
    pub limit: usize,
}

#[derive(Args, Clone, Debug)]
pub struct BccArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, default_value = "edgelist")]
    pub format: EdgeListFormat,
    /// Output file; standard output when absent
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Cycle,
    Path,
    Clique,
    Grid,
    GridPerturbed,
    Tree,
    Random,
}

#[derive(Args, Clone, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Vertex count (cycle, path, clique, tree, random)
    #[arg(long, short, default_value_t = 16)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub rows: usize,
    #[arg(long, default_value_t = 4)]
    pub cols: usize,
    /// Side of the perturbed grid, which has (side+1)^2 vertices before deletion
    #[arg(long, default_value_t = 20)]
    pub side: usize,
    /// Fraction of grid edges to delete
    #[arg(long, default_value_t = 0.1)]
    pub fraction: f64,
    /// Edge probability of the random graph
    #[arg(long, short, default_value_t = 0.2)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

impl GenArgs {
    pub fn generate(&self) -> Result<Graph> {
        let spec = match self.kind {
            GenKind::Clique => return gen_clique(self.n),
            GenKind::Cycle => GenSpec::Cycle { n: self.n },
            GenKind::Path => GenSpec::Path { n: self.n },
            GenKind::Grid => GenSpec::Grid { rows: self.rows, cols: self.cols },
            GenKind::GridPerturbed => GenSpec::GridPerturbed { side: self.side, fraction: self.fraction, seed: self.seed },
            GenKind::Tree => GenSpec::Tree { n: self.n, seed: self.seed },
            GenKind::Random => GenSpec::RandomConnected { n: self.n, edge_prob: self.p, seed: self.seed },
        };
        spec.generate()
    }
}

/// A loaded graph, possibly restricted to its largest biconnected component,
/// with the input label of every vertex.
pub struct Prepared {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub input: GraphSummary,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

fn load(path: &Path, format: EdgeListFormat) -> Result<LoadedGraph> {
    if path.as_os_str() == "-" {
        load_edge_list(io::stdin().lock(), format)
    } else {
        read_edge_list_file(path, format)
    }
}

pub fn prepare(path: &Path, format: EdgeListFormat, bcc: bool) -> Result<Prepared> {
    let loaded = load(path, format)?;
    if loaded.graph.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let input = loaded.graph.summary();
    let (graph, labels) = if bcc {
        let (g, map) = largest_biconnected_component(&loaded.graph)?;
        let labels = map.iter().map(|&v| loaded.original_ids[v as usize]).collect();
        (g, labels)
    } else {
        (loaded.graph, loaded.original_ids)
    };
    Ok(Prepared { graph, labels, input, self_loops: loaded.self_loops, duplicate_edges: loaded.duplicate_edges })
}

fn witness_labels(w: [VertexId; 4], labels: &[u64]) -> [u64; 4] {
    w.map(|v| labels[v as usize])
}

fn write_witness(out: &mut dyn Write, w: [u64; 4]) -> io::Result<()> {
    writeln!(out, "witness: {} {} {} {}", w[0], w[1], w[2], w[3])
}

pub fn cmd_compute(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    cfg.validate()?;
    let prepared = prepare(&cfg.input, cfg.format, cfg.bcc)?;
    let g = &prepared.graph;
    let (result, stats) = match cfg.mode {
        Mode::Oracle => (brute_force_hyperbolicity_with_limit(g, DEFAULT_BRUTE_FORCE_LIMIT)?, None),
        _ => {
            let (r, s) = compute_hyperbolicity(g, &cfg.search_config())?;
            (r, Some(s))
        }
    };
    let witness = witness_labels(result.witness, &prepared.labels);
    match (cfg.mode, stats.as_ref().and_then(|s| s.upper_bound)) {
        (Mode::ApproxPass1, Some(upper)) => {
            writeln!(out, "hyperbolicity lower bound: {}", result.delta)?;
            writeln!(out, "certified interval: [{}, {}]", result.delta, upper)?;
        }
        _ => writeln!(out, "hyperbolicity: {}", result.delta)?,
    }
    write_witness(out, witness)?;
    if let Some(path) = &cfg.stats_json {
        let value = stats_json(cfg, &prepared, &result, stats.as_ref());
        let mut f = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut f, &value).map_err(io::Error::other)?;
        writeln!(f)?;
        f.flush()?;
    }
    Ok(())
}

/// Statistics document for one run. Everything except `timings` is a
/// function of the configuration and the input.
pub fn stats_json(cfg: &RunConfig, p: &Prepared, result: &QuadrupleResult, stats: Option<&RunStats>) -> serde_json::Value {
    let empty = RunStats::default();
    let s = stats.unwrap_or(&empty);
    let levels: Vec<_> = s.levels.iter().rev().collect();
    json!({
        "schema": STATS_SCHEMA,
        "delta": result.delta,
        "witness": witness_labels(result.witness, &p.labels),
        "config": cfg,
        "graph": {
            "input": p.input,
            "self_loops": p.self_loops,
            "duplicate_edges": p.duplicate_edges,
            "used": p.graph.summary(),
            "bcc": cfg.bcc,
        },
        "brute_force": cfg.mode == Mode::Oracle || s.brute_force,
        "sequence": s.sequence,
        "eccentricity": s.eccentricity,
        "central_vertex": s.central_vertex.map(|c| p.labels[c as usize]),
        "hierarchy": s.hierarchy,
        "levels": levels,
        "agenda_pairs": s.agenda_pairs,
        "passes": s.passes,
        "upper_bound": s.upper_bound,
        "cache": {
            "hits": s.cache.hits,
            "misses": s.cache.misses,
            "bypasses": s.cache.bypasses,
            "evictions": s.cache.evictions,
            "label_queries": s.cache.label_queries + s.direct_label_queries,
            "matrix_label_queries": s.cache.label_queries,
            "direct_label_queries": s.direct_label_queries,
        },
        "labels": s.labels,
        "timings": s.timings,
        "rng": RNG_ALGORITHM,
    })
}

pub fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<()> {
    let p = prepare(&args.input.input, args.input.format, args.input.bcc)?;
    let r = brute_force_hyperbolicity_with_limit(&p.graph, args.limit)?;
    writeln!(out, "hyperbolicity: {}", r.delta)?;
    write_witness(out, witness_labels(r.witness, &p.labels))?;
    Ok(())
}

pub fn cmd_bcc(args: &BccArgs, out: &mut dyn Write) -> Result<()> {
    let p = prepare(&args.input, args.format, true)?;
    match &args.output {
        Some(path) => write_edge_list(&p.graph, Some(&p.labels), BufWriter::new(File::create(path)?)),
        None => write_edge_list(&p.graph, Some(&p.labels), out),
    }
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<()> {
    let g = args.generate()?;
    match &args.output {
        Some(path) => write_edge_list(&g, None, BufWriter::new(File::create(path)?)),
        None => write_edge_list(&g, None, out),
    }
}

pub fn cmd_stats(args: &InputArgs, out: &mut dyn Write) -> Result<()> {
    let p = prepare(&args.input, args.format, args.bcc)?;
    if !p.graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let s = p.graph.summary();
    let e = compute_all_eccentricities(&p.graph);
    writeln!(out, "nodes: {}", s.n)?;
    writeln!(out, "edges: {}", s.m)?;
    writeln!(out, "eccentricity: radius {} mean {:.2} diameter {}", e.radius, e.mean(), e.diameter)?;
    writeln!(out, "degree: min {} mean {:.2} max {}", s.min_degree, s.mean_degree, s.max_degree)?;
    Ok(())
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Compute(c) => cmd_compute(c, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Bcc(a) => cmd_bcc(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Stats(a) => cmd_stats(a, out),
    }
}

/// Parses `args`, runs the subcommand and returns the process exit code.
/// Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARAMETER } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let hint = match e {
                Error::Disconnected => " (try --bcc)",
                _ => "",
            };
            let _ = writeln!(err, "error: {e}{hint}");
            exit_code(&e)
        }
    }
}

/// Reads an edge list from any reader; convenience for embedding.
pub fn load_from_reader<R: io::Read>(r: R, format: EdgeListFormat) -> Result<LoadedGraph> {
    load_edge_list(BufReader::new(r), format)
}
