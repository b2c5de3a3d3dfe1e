use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use almost_chordal::cli::{self, OutputFormat, RunConfig, Verb};

#[derive(Parser)]
#[command(
    name = "almost-chordal",
    about = "Decompositions, solvers and kernels for graphs a few added edges away from chordal",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock timing in the report (makes output
    /// nondeterministic byte-wise)
    #[arg(long, global = true)]
    timing: bool,
    /// Random seed, echoed into the report for reproducibility
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file: edge-list ("n m" header) or DIMACS ("p edge n m")
    #[arg(long, short = 'i')]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a chordal modulator of size at most k
    Fillin {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, short)]
        k: usize,
        /// Use the inclusion-minimal triangulation heuristic instead of
        /// the exact search
        #[arg(long)]
        heuristic: bool,
    },
    /// Build a nice k-almost chordal tree decomposition
    Decompose {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, short)]
        k: usize,
    },
    /// Solve an optimization problem over a k-almost chordal decomposition
    Solve {
        /// wis | wvc | oct | bipartite-subgraph | wfvs | induced-forest |
        /// d-colorable | d-degenerate | h-colorable | coloring | cvc
        problem: String,
        #[command(flatten)]
        graph: GraphInput,
        /// Fill-in budget for the decomposition
        #[arg(long, short, default_value_t = 0)]
        k: usize,
        /// Number of colors / degeneracy bound for d-colorable and
        /// d-degenerate
        #[arg(long, short)]
        d: Option<usize>,
        /// Color count for the coloring decision problem
        #[arg(long)]
        ell: Option<usize>,
        /// Pattern graph file for h-colorable
        #[arg(long)]
        h_file: Option<PathBuf>,
        /// Separate weights file ('w <vertex> <weight>' lines), overriding
        /// any weight block in the graph file
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Answer with the exhaustive reference implementation instead
        #[arg(long)]
        oracle: bool,
    },
    /// Run a kernelization pipeline
    Kernel {
        /// split-is | interval-is | turing-wclique
        variant: String,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, short)]
        k: usize,
        /// Independent-set threshold for split-is and interval-is
        #[arg(long)]
        ell: Option<i64>,
        /// Clique weight threshold for turing-wclique
        #[arg(long)]
        threshold: Option<i64>,
        /// Separate weights file for turing-wclique
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Re-check a decomposition file against a graph
    Validate {
        /// Graph file
        #[arg(long)]
        graph: PathBuf,
        /// Decomposition in the line-oriented format emitted by decompose
        #[arg(long)]
        decomposition: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verb = match cli.command {
        Command::Fillin { graph, k, heuristic } => Verb::Fillin {
            input: graph.input,
            k,
            heuristic,
        },
        Command::Decompose { graph, k } => Verb::Decompose { input: graph.input, k },
        Command::Solve {
            problem,
            graph,
            k,
            d,
            ell,
            h_file,
            weights,
            oracle,
        } => Verb::Solve {
            problem,
            input: graph.input,
            weights,
            k,
            d,
            ell,
            h_file,
            use_oracle: oracle,
        },
        Command::Kernel {
            variant,
            graph,
            k,
            ell,
            threshold,
            weights,
        } => Verb::Kernel {
            variant,
            input: graph.input,
            weights,
            k,
            ell,
            threshold,
        },
        Command::Validate { graph, decomposition } => Verb::Validate { graph, decomposition },
    };
    let config = RunConfig {
        verb,
        format: match cli.format {
            Format::Json => OutputFormat::Json,
            Format::Text => OutputFormat::Text,
        },
        timing: cli.timing,
        seed: cli.seed,
    };
    match cli::run(&config) {
        Ok(report) => {
            println!("{}", cli::render_report(&report, config.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
