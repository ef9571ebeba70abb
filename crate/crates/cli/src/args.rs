use clap::{Args, Parser, Subcommand, ValueEnum};
use mstep::catalog::Family;
use mstep::Algorithm;

pub const MAX_RANGE_WIDTH: i64 = 100_000;
pub const MAX_INDEX: i64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(name = "mstep", version, about = "Exact m-step recurrences and Simson determinants")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "MSTEP_FORMAT", default_value_t = Format::Plain)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate terms at one index or over an inclusive range.
    Eval(EvalArgs),
    /// Check the Simson determinant against its closed form.
    Simson(SimsonArgs),
    /// Recompute the embedded reference tables.
    Table(TableArgs),
    /// Browse the sequence catalog.
    Catalog(CatalogArgs),
    /// Time the evaluators after checking that they agree.
    Bench(BenchArgs),
}

/// Exactly one way of naming a sequence.
#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct Source {
    /// Catalog id, e.g. `tribonacci/perrin`.
    #[arg(long, conflicts_with_all = ["coeffs", "family"])]
    pub id: Option<String>,

    /// Comma-separated coefficients r_1,...,r_m.
    #[arg(long, requires = "init", allow_hyphen_values = true, conflicts_with = "family")]
    pub coeffs: Option<String>,

    /// Comma-separated initial values V_0,...,V_{m-1}.
    #[arg(long, requires = "coeffs", allow_hyphen_values = true)]
    pub init: Option<String>,

    /// Generated family member; needs `--order`.
    #[arg(long, value_parser = parse_family, requires = "order")]
    pub family: Option<Family>,

    #[arg(long, requires = "family")]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub source: Source,

    /// Single index.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_index, conflicts_with = "range", required_unless_present = "range")]
    pub n: Option<i64>,

    /// Inclusive range `lo..hi`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub range: Option<IndexRange>,

    #[arg(long, value_enum, default_value_t = Algo::Naive)]
    pub algo: Algo,
}

#[derive(Debug, Args)]
pub struct SimsonArgs {
    #[command(flatten)]
    pub source: Source,

    #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-10..10")]
    pub range: IndexRange,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TableArgs {
    /// Table id such as `T4`.
    #[arg(long)]
    pub table: Option<String>,

    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CatalogArgs {
    #[arg(long)]
    pub list: bool,

    #[arg(long, value_name = "ID")]
    pub show: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub source: Source,

    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,

    /// Evaluators to time; all of them when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub algo: Vec<Algo>,

    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeat: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Naive,
    Matrix,
    Kitamasa,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Naive => Algorithm::Naive,
            Algo::Matrix => Algorithm::Matrix,
            Algo::Kitamasa => Algorithm::Kitamasa,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: i64,
    pub hi: i64,
}

pub fn parse_index(s: &str) -> Result<i64, String> {
    let n: i64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if n.abs() > MAX_INDEX {
        return Err(format!("|n| must not exceed {MAX_INDEX}"));
    }
    Ok(n)
}

pub fn parse_range(s: &str) -> Result<IndexRange, String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo = parse_index(lo)?;
    let hi = parse_index(hi)?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    if hi - lo + 1 > MAX_RANGE_WIDTH {
        return Err(format!("range covers more than {MAX_RANGE_WIDTH} indices"));
    }
    Ok(IndexRange { lo, hi })
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}
