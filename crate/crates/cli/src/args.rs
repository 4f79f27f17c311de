use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use netdiag::DiagModel;

#[derive(Debug, Parser)]
#[command(name = "netdiag", version, about = "Fault diagnosability of balanced hypercubes and reference networks")]
pub struct Cli {
    /// Worker threads for the engine (default: one per core).
    #[arg(long, global = true, env = "NETDIAG_WORKERS")]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a topology in the graph JSON format.
    Gen {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural profile, vertex connectivity and common-neighbor statistics.
    Props {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge-tolerable diagnosability for one value of h.
    Diag {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        run: RunArgs,
        /// Number of faulty links tolerated.
        #[arg(long, default_value_t = 0)]
        h: usize,
    },
    /// Edge-tolerable diagnosability over a range of h.
    Sweep {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        run: RunArgs,
        /// Inclusive range `A..B`, or a single value.
        #[arg(long, value_parser = parse_h_range)]
        h: RangeInclusive<usize>,
    },
    /// Recompute the balanced hypercube table and compare with published values.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Both)]
        model: ModelArg,
        /// Random triples per bounded cell (n >= 3).
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Also write the table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inject faults, produce a syndrome and decode it.
    Simulate {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        model: SingleModel,
        /// Comma-separated faulty vertex ids.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        faults: Vec<usize>,
        #[arg(long, value_enum, default_value_t = PolicyArg::Random)]
        policy: PolicyArg,
        /// Seed for the random adversary.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Decode among fault sets of at most this size (default: number of faults).
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GraphSource {
    #[arg(long, value_enum, conflicts_with = "graph", required_unless_present = "graph")]
    pub topology: Option<TopologyArg>,
    /// Dimension for `bh` and `hypercube`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Parameter of the crown graph G_{k+1,k+1}.
    #[arg(long)]
    pub k: Option<usize>,
    /// Length of the cycle.
    #[arg(long)]
    pub m: Option<usize>,
    /// Graph JSON file instead of a named topology.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Both)]
    pub model: ModelArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
    pub strategy: StrategyArg,
    /// Random triples for the sampled strategy.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Required by the sampled strategy.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TopologyArg {
    Bh,
    G8,
    Crown,
    Hypercube,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Pmc,
    MmStar,
    Both,
}

impl ModelArg {
    pub fn models(self) -> Vec<DiagModel> {
        match self {
            ModelArg::Pmc => vec![DiagModel::Pmc],
            ModelArg::MmStar => vec![DiagModel::MmStar],
            ModelArg::Both => DiagModel::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SingleModel {
    Pmc,
    MmStar,
}

impl From<SingleModel> for DiagModel {
    fn from(m: SingleModel) -> Self {
        match m {
            SingleModel::Pmc => DiagModel::Pmc,
            SingleModel::MmStar => DiagModel::MmStar,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Witness,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Random,
    Zeros,
    Ones,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Table1,
}

pub fn parse_h_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let number = |part: &str| part.trim().parse::<usize>().map_err(|e| format!("`{part}`: {e}"));
    let range = match s.split_once("..") {
        Some((a, b)) => number(a)?..=number(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let h = number(s)?;
            h..=h
        }
    };
    if range.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(range)
}
