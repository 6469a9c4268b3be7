use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Format, CONFIG_ENV};

/// Epistemic and argument Kripke models: checking, two-way generation and
/// duality testing.
#[derive(Debug, Parser)]
#[command(name = "dualkripke", version, propagate_version = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// TOML config file with defaults for the options below
    #[arg(long, global = true, env = CONFIG_ENV, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Color text output
    #[arg(long, global = true, overrides_with = "no_color")]
    pub color: bool,
    /// Plain text output, overriding the config file
    #[arg(long, global = true)]
    pub no_color: bool,
    /// Seed for random models
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest epistemic model that may be turned into an argument model
    #[arg(long, global = true, value_name = "WORLDS")]
    pub world_cap: Option<usize>,
    /// Largest argument model whose ultrafilters are enumerated
    #[arg(long, global = true, value_name = "ARGUMENTS")]
    pub argument_cap: Option<usize>,
    /// Largest argument model handed to the brute-force oracle
    #[arg(long, global = true, value_name = "ARGUMENTS")]
    pub oracle_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a model file against the model axioms
    Validate { path: PathBuf },
    /// Evaluate formulas at a point of a model
    Check(CheckArgs),
    /// Generate the argument model of an epistemic model
    GenArg(GenArgArgs),
    /// Generate the epistemic model of an argument model
    GenEpi(GenEpiArgs),
    /// Print the strength preorder and the ultrafilters of an argument model
    Ultrafilters(UltrafiltersArgs),
    /// Compare restricted formulas before and after the round trip
    Duality(DualityArgs),
    /// Render a model as a Graphviz digraph
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub path: PathBuf,
    /// Point of evaluation; defaults to the file's `current`
    #[arg(long)]
    pub at: Option<String>,
    /// Formula to evaluate (repeatable)
    #[arg(long = "formula", short = 'f', value_name = "TEXT")]
    pub formulas: Vec<String>,
    /// File with one formula per line; blank lines and `#` comments skipped
    #[arg(long = "formulas", value_name = "PATH")]
    pub formula_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgArgs {
    pub path: PathBuf,
    /// Designated point; defaults to the file's `current`
    #[arg(long)]
    pub at: Option<String>,
    /// Write the generated model here instead of standard output
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Complement every proposition false at the designated world first
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Args)]
pub struct GenEpiArgs {
    pub path: PathBuf,
    /// Designated point; defaults to the file's `current`
    #[arg(long)]
    pub at: Option<String>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct UltrafiltersArgs {
    pub path: PathBuf,
    /// Also run the brute-force subset scan and compare
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct DualityArgs {
    /// Epistemic model file; omit with --random
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    pub path: Option<PathBuf>,
    /// Actual world; defaults to the file's `current`
    #[arg(long)]
    pub at: Option<String>,
    /// Check seeded random models instead of a file
    #[arg(long)]
    pub random: bool,
    /// Number of random models; model k uses seed + k
    #[arg(long, default_value_t = 1, requires = "random")]
    pub count: usize,
    /// Random models have between 1 and this many worlds
    #[arg(long, default_value_t = 4, requires = "random")]
    pub max_worlds: usize,
    #[arg(long, default_value_t = 2, requires = "random")]
    pub max_propositions: usize,
    #[arg(long, default_value_t = 2, requires = "random")]
    pub max_agents: usize,
    /// Largest number of connectives in a checked formula
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
    /// Also run the structural lemma checks
    #[arg(long)]
    pub lemmas: bool,
    /// Also show formulas outside the restricted class (never judged)
    #[arg(long)]
    pub informational: bool,
    /// Negative control: drop the strength guard from the valuation clause
    #[arg(long)]
    pub mutate: bool,
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    pub path: PathBuf,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Omit reflexive pairs of epistemic relations
    #[arg(long)]
    pub no_loops: bool,
    /// Draw attacks from attacker to attacked
    #[arg(long)]
    pub reverse_arrows: bool,
}
