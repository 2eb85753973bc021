use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mweb_core::{Method, Objective};
use serde::Serialize;

/// Maximum weighted edge biclique toolkit.
#[derive(Debug, Parser)]
#[command(name = "mweb", version, about)]
pub struct Cli {
    /// Worker threads for the parallel solvers; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Record wall-clock seconds in the output manifest.
    #[arg(long, global = true)]
    pub timing: bool,

    /// Log progress at info level.
    #[arg(long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Maximize an objective over all bicliques of a graph.
    Solve(SolveArgs),
    /// Reduction constructions and their verifiers.
    Reduce(ReduceArgs),
    /// SAMBA bicluster weighting, scoring and search.
    Samba(SambaArgs),
    /// Two-level MDL summarization of binary matrices.
    Mdlh(MdlhArgs),
    /// Check a reduction against brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutArg {
    /// Output file; stdout when absent.
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    RandomWeighted,
    PlantedBiclique,
    RandomBinary,
    RandomCliqueGraph,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    /// Left side size (rows), or the vertex count for random-clique-graph.
    #[arg(long)]
    pub n1: usize,
    /// Right side size (columns); defaults to n1.
    #[arg(long)]
    pub n2: Option<usize>,
    /// Weight set to draw from, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,1")]
    pub weights: Vec<f64>,
    /// Probability of a 1-cell or an edge.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Rows of the planted block.
    #[arg(long)]
    pub block_rows: Option<usize>,
    /// Columns of the planted block.
    #[arg(long)]
    pub block_cols: Option<usize>,
    #[arg(long, env = "MWEB_DEFAULT_SEED")]
    pub seed: Option<u64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SolverArgs {
    #[arg(long, default_value = "exact-enumeration")]
    pub method: Method,
    /// Random restarts for local search.
    #[arg(long, default_value_t = 16)]
    pub restarts: usize,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Largest smaller side the exact enumerator accepts.
    #[arg(long, default_value_t = mweb_core::solve::DEFAULT_ENUMERATION_CAP)]
    pub enumeration_cap: usize,
    /// Seed for local search restarts.
    #[arg(long, env = "MWEB_DEFAULT_SEED")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SolveArgs {
    #[arg(long = "in")]
    #[serde(rename = "in")]
    pub input: PathBuf,
    #[arg(long, default_value = "edge-weight")]
    pub objective: Objective,
    #[command(flatten)]
    #[serde(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(subcommand)]
    pub command: ReduceCommand,
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Encode a simple graph as a {-1,0,1} biclique instance.
    CliqueToMweb(CliqueToMwebArgs),
    /// Randomized product: N copies per side, gamma cells redrawn from {alpha, beta}.
    Product(ProductArgs),
    /// Block duplication into a node-plus-edge instance.
    ProblemP(ProblemPArgs),
    /// Project a product-graph biclique back onto the original graph.
    Project(ProjectArgs),
    /// Product size and amplification formulas.
    Formulas(FormulasArgs),
    /// Check a reduction against brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CliqueToMwebArgs {
    #[arg(long = "in")]
    #[serde(rename = "in")]
    pub input: PathBuf,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProductArgs {
    #[arg(long = "in")]
    #[serde(rename = "in")]
    pub input: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: f64,
    /// Copies N per side.
    #[arg(long)]
    pub copies: usize,
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    #[arg(long, env = "MWEB_DEFAULT_SEED")]
    pub seed: Option<u64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProblemPArgs {
    #[arg(long = "in")]
    #[serde(rename = "in")]
    pub input: PathBuf,
    /// Copies N per side; defaults to (n1 + n2)^2.
    #[arg(long)]
    pub copies: Option<usize>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProjectArgs {
    /// Original graph.
    #[arg(long)]
    pub graph: PathBuf,
    /// Product graph.
    #[arg(long)]
    pub product: PathBuf,
    /// Biclique of the product graph.
    #[arg(long)]
    pub biclique: PathBuf,
    #[arg(long)]
    pub copies: usize,
    #[arg(long, default_value = "edge-weight")]
    pub objective: Objective,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FormulasArgs {
    /// Larger side size.
    #[arg(long)]
    pub eta: u64,
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    /// Approximation gap of the source instance.
    #[arg(long)]
    pub epsilon_prime: Option<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyKind {
    Clique,
    Product,
    ProblemP,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: VerifyKind,
    /// Instance file; random instances are drawn when absent.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    /// Largest random instance (vertices for clique, n1 + n2 for problem-p).
    #[arg(long, default_value_t = 6)]
    pub max_vertices: usize,
    /// Copies N per side (product, problem-p).
    #[arg(long)]
    pub copies: Option<usize>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub gamma: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = -1.0)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, env = "MWEB_DEFAULT_SEED")]
    pub seed: Option<u64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct SambaArgs {
    #[command(subcommand)]
    pub command: SambaCommand,
}

#[derive(Debug, Subcommand)]
pub enum SambaCommand {
    /// Write the weighted graph of a binary matrix.
    Weights(SambaWeightsArgs),
    /// Score one biclique.
    Score(SambaScoreArgs),
    /// Find the highest-scoring bicluster.
    Find(SambaFindArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Simple,
    Refined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum BaseArg {
    #[value(name = "2")]
    #[serde(rename = "2")]
    Two,
    #[value(name = "e")]
    #[serde(rename = "e")]
    E,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ModelArgs {
    /// Binary matrix TSV.
    #[arg(long = "in")]
    #[serde(rename = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "simple")]
    pub model: ModelKind,
    /// Refined-model probabilities JSON.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Logarithm base of the weights.
    #[arg(long, value_enum, default_value = "2")]
    pub base: BaseArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SambaWeightsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SambaScoreArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub model: ModelArgs,
    /// Biclique JSON.
    #[arg(long)]
    pub biclique: PathBuf,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SambaFindArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Args)]
pub struct MdlhArgs {
    #[command(subcommand)]
    pub command: MdlhCommand,
}

#[derive(Debug, Subcommand)]
pub enum MdlhCommand {
    /// Shortest two-level summary of a binary matrix.
    Solve(MdlhSolveArgs),
    /// Compare the solver against the brute-force oracle on random matrices.
    Verify(MdlhVerifyArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MdlhSolveArgs {
    /// Binary matrix TSV.
    #[arg(long = "in")]
    #[serde(rename = "in")]
    pub input: PathBuf,
    /// Use the brute-force oracle instead of the solver.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MdlhVerifyArgs {
    /// Largest row or column count of a random matrix.
    #[arg(long, default_value_t = 6)]
    pub max_dim: usize,
    #[arg(long, default_value_t = 300)]
    pub trials: usize,
    /// Probability of a 1-cell.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, env = "MWEB_DEFAULT_SEED")]
    pub seed: Option<u64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}
