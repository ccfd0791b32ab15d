use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

/// Exact search, constructions and certificates for parity-constrained
/// anti-Ramsey numbers.
#[derive(Parser, Debug)]
#[command(name = "antiramsey", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SearchOpts {
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Wall-clock budget per search, in seconds.
    #[arg(long, default_value_t = 60.0)]
    budget_secs: f64,
    /// Node budget per search.
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact value of phi(n, G) with the full achievable set.
    Compute {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        phi: String,
        #[command(flatten)]
        search: SearchOpts,
        #[command(flatten)]
        out: Output,
        /// Write the extremal witness here.
        #[arg(long = "out")]
        out_file: Option<PathBuf>,
    },
    /// Is there an avoiding coloring with exactly m colors?
    Decide {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        phi: String,
        #[command(flatten)]
        search: SearchOpts,
        #[command(flatten)]
        out: Output,
        #[arg(long = "out")]
        out_file: Option<PathBuf>,
    },
    /// Check that a coloring avoids good copies (from a construction or a
    /// witness file).
    Verify {
        #[arg(long, required_unless_present = "witness")]
        pattern: Option<String>,
        #[arg(long, required_unless_present = "witness")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "witness")]
        graph: Option<String>,
        #[arg(long, required_unless_present = "witness")]
        phi: Option<String>,
        /// Witness JSON file to re-verify.
        #[arg(long, conflicts_with_all = ["pattern", "n", "graph", "phi"])]
        witness: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Build a named coloring of K_n.
    Construct {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
        /// Write the coloring as JSON.
        #[arg(long = "out")]
        out_file: Option<PathBuf>,
    },
    /// Find an odd-majority orientation or odd-even ordering.
    Orient {
        #[arg(long)]
        graph: String,
        /// omo or oeo.
        #[arg(long, default_value = "omo")]
        kind: String,
        #[command(flatten)]
        out: Output,
    },
    /// Count valid orderings.
    CountOrient {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "omo")]
        kind: String,
        #[command(flatten)]
        out: Output,
    },
    /// Compute all eight values for small patterns and compare with the
    /// registry.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        /// Registry file to compare against instead of the built-in one.
        #[arg(long)]
        registry: Option<PathBuf>,
        #[command(flatten)]
        search: SearchOpts,
        #[command(flatten)]
        out: Output,
    },
    /// Check the implication inequalities on computed or given values.
    CheckHierarchy {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, required_unless_present = "values")]
        n: Option<usize>,
        /// Values to check instead of computing them, e.g. `od=4,cf=3`.
        #[arg(long)]
        values: Option<String>,
        #[command(flatten)]
        search: SearchOpts,
        #[command(flatten)]
        out: Output,
    },
    /// Look up the registry entry for (kind, pattern, n).
    Known {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        registry: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Find a monochromatic, rainbow or lexical K_k in a construction.
    CanonicalClique {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Colors whose class lies entirely at a vertex.
    Critical {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Scan small bipartite graphs whose even-degree vertices are
    /// independent for odd-majority orientations.
    ExperimentOmoBipartite {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
