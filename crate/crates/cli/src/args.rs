use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "mpoly-topo", version, about = "Hyperbolic Sombor index via exact M-polynomial calculus")]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum, env = "MPOLY_TOPO_FORMAT")]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// HSO of one family member or one edge-list file, by every available route.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Exit with status 1 when a published table cell disagrees.
        #[arg(long)]
        fail_on_mismatch: bool,
    },
    /// HSO over a parameter range, with published values where they exist.
    Table {
        /// Family token.
        #[arg(long, required_unless_present = "published")]
        family: Option<String>,
        /// Inclusive range `A..B`.
        #[arg(long, default_value = "1..10")]
        range: String,
        /// Full product of the range for two-parameter families.
        #[arg(long)]
        cross: bool,
        /// Recompute every published cell (optionally of one family).
        #[arg(long, conflicts_with_all = ["range", "cross"])]
        published: bool,
        /// Exit with status 1 when a published table cell disagrees.
        #[arg(long)]
        fail_on_mismatch: bool,
    },
    /// Samples the M-polynomial surface on a lattice.
    Grid {
        #[command(flatten)]
        source: Source,
        /// x range `lo..hi`.
        #[arg(long, default_value = "0..1", allow_hyphen_values = true)]
        x: String,
        /// y range `lo..hi`.
        #[arg(long, default_value = "0..1", allow_hyphen_values = true)]
        y: String,
        /// Points per axis (at least 2).
        #[arg(long, default_value_t = 11)]
        steps: usize,
    },
    /// Lists the supported families.
    Families,
    /// Prints an M-polynomial, its edge partition or its pipeline stages.
    Mpoly {
        #[command(flatten)]
        source: Source,
        /// Print the edge partition as `{"i,j": count}`.
        #[arg(long, conflicts_with = "trace")]
        partition: bool,
        /// Print every intermediate stage of the operator pipeline.
        #[arg(long)]
        trace: bool,
    },
}

/// Exactly one of a family spec or an edge-list file.
#[derive(Args, Debug)]
pub struct Source {
    /// Family token, see `families`.
    #[arg(long, requires = "params", required_unless_present = "graph", conflicts_with = "graph")]
    pub family: Option<String>,
    /// Edge-list file: two vertex ids per line, `#` comments.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Family parameters, e.g. `m=2,n=3`.
    #[arg(long, requires = "family")]
    params: Option<String>,
}

impl Source {
    pub fn params(&self) -> &str {
        self.params.as_deref().unwrap_or("")
    }
}
