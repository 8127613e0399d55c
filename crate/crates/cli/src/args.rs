use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact k-general d-position sets in graphs.
#[derive(Debug, Parser)]
#[command(name = "gpkd", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the largest k-general d-position set of a graph
    Compute {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check whether a vertex set is in k-general d-position
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated 0-based vertices, or 1-based `row.col` pairs on grids
        #[arg(long)]
        set: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate the closed form for a path, cycle or prism
    Formula {
        #[arg(long, value_enum)]
        family: FormulaFamily,
        /// Number of path or cycle vertices, or prism columns
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate values for k = 2..=kmax and d = 1..=diameter
    Table {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        kmax: usize,
        /// Use the closed form of the graph's family instead of searching
        #[arg(long)]
        formula: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print one of the extremal constructions
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructionKind,
        /// Cycle order, path length or prism columns
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Size of a maximally even cycle subset
        #[arg(long)]
        m: Option<usize>,
        /// Rotation of a maximally even subset, or diamond radius
        #[arg(long)]
        r: Option<usize>,
        /// Diamond grid rows
        #[arg(long)]
        rows: Option<usize>,
        /// Diamond grid columns
        #[arg(long)]
        cols: Option<usize>,
        /// Diamond center as 0-based `row.col`
        #[arg(long)]
        center: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare closed forms (or the two solvers) over a parameter grid
    Verify {
        #[arg(long, value_enum, required_unless_present = "random")]
        family: Option<FormulaFamily>,
        /// Compare branch-and-bound with brute force on random graphs
        #[arg(long, conflicts_with = "family")]
        random: bool,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        d_max: u32,
        /// Number of random graphs
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write a graph with a marked vertex set as DOT or CSV
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        /// Marked vertices; defaults to none
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        /// Write here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Family descriptor such as path:14, cycle:16, prism:6, grid:5x5
    #[arg(long, required_unless_present = "graph_file", conflicts_with = "graph_file")]
    pub graph: Option<String>,
    /// Edge-list file: `n m` then one `u v` per line
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Forbidden count: no short geodesic may hold k set vertices
    #[arg(long)]
    pub k: usize,
    /// Maximum geodesic length; defaults to the diameter
    #[arg(long)]
    pub d: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Branch-and-bound threads
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Give up after this many search nodes (exit code 3)
    #[arg(long)]
    pub node_budget: Option<u64>,
    /// Give up after this many seconds (exit code 3)
    #[arg(long)]
    pub time_budget: Option<f64>,
    /// Skip seeding the search with a known construction
    #[arg(long)]
    pub no_warm_start: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Machine-readable JSON report
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// CSV output
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Brute force up to 16 vertices, branch-and-bound above
    Auto,
    Brute,
    #[value(alias = "bnb")]
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaFamily {
    Path,
    Cycle,
    Prism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    /// Maximally even subset of C_n (needs n, m, r)
    Jset,
    /// Periodic blocks on P_n (needs k, d, n)
    PathBlocks,
    /// Zig-zag blocks on P_n □ P_2 (needs k, d, n)
    ThinA,
    /// Full-height blocks on P_n □ P_2 (needs k, d, n)
    ThinB,
    /// Parity diamond in a grid (needs r, rows, cols; center optional)
    Diamond,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Csv,
}
