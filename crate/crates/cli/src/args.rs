use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "magiclab",
    version,
    about = "Edge-magic and super edge-magic labelings of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Wall-clock limit per search, in seconds.
    #[arg(long, global = true, value_name = "S")]
    pub time_limit: Option<f64>,

    /// Maximum number of search nodes.
    #[arg(long, global = true, value_name = "N")]
    pub node_limit: Option<u64>,

    /// Worker threads used by the enumerators.
    #[arg(long, global = true, env = "MAGICLAB_WORKERS", default_value_t = 1, value_name = "K")]
    pub workers: usize,

    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Family spec such as `cycle:5`, `star:n=3,l=2` or `union:cycle:3+1K1`.
    #[arg(long, value_name = "SPEC")]
    pub graph: Option<String>,

    /// Edge-list file: `p q` on the first line, then one `u v` per edge.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect a graph.
    Graph {
        #[arg(value_enum)]
        verb: GraphVerb,
        #[command(flatten)]
        source: GraphSource,
    },
    /// Super edge-magic queries.
    Sem {
        #[arg(value_enum)]
        verb: LabelVerb,
        #[command(flatten)]
        source: GraphSource,
    },
    /// Edge-magic queries.
    Em {
        #[arg(value_enum)]
        verb: LabelVerb,
        #[command(flatten)]
        source: GraphSource,
    },
    /// Deficiency parameters.
    Deficiency {
        #[arg(value_enum)]
        verb: DeficiencyVerb,
        #[command(flatten)]
        source: GraphSource,
        /// Largest number of added isolated vertices to try.
        #[arg(long, default_value_t = magiclab_core::deficiency::DEFAULT_PERFECT_CAP)]
        cap: usize,
        /// Window for the strong parameter.
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
    /// Labeling families of K_{1,n} ∪ lK_1.
    Star {
        #[arg(value_enum)]
        verb: StarVerb,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Index of the f_k labeling; all of them when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, default_value_t = VerifyVerb::Run)]
        verb: VerifyVerb,
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphVerb {
    Show,
    Interval,
    Feasibility,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelVerb {
    Interval,
    Spectrum,
    Count,
    Find,
    Perfect,
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeficiencyVerb {
    Mu,
    MuS,
    MuP,
    MuPS,
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StarVerb {
    Count,
    Generate,
    Histogram,
    Valences,
    Fk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyVerb {
    Run,
    List,
}

impl LabelVerb {
    pub fn name(self) -> &'static str {
        match self {
            LabelVerb::Interval => "interval",
            LabelVerb::Spectrum => "spectrum",
            LabelVerb::Count => "count",
            LabelVerb::Find => "find",
            LabelVerb::Perfect => "perfect",
            LabelVerb::List => "list",
        }
    }
}

impl DeficiencyVerb {
    pub fn name(self) -> &'static str {
        match self {
            DeficiencyVerb::Mu => "mu",
            DeficiencyVerb::MuS => "mu-s",
            DeficiencyVerb::MuP => "mu-p",
            DeficiencyVerb::MuPS => "mu-p-s",
            DeficiencyVerb::Strong => "strong",
        }
    }
}
