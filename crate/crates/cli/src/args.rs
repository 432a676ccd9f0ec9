//! Command-line flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ybe-forge", version, about = "Exact checks for trigonometric Yang-Baxter solutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Three-point associative identity and skew-symmetry at seeded points.
    VerifyAybe(AybeArgs),
    /// Compare the order-model r-matrix with the closed form of the reversed data.
    GeometricCompare(GeometricArgs),
    /// CYBE, unitarity and the singular part for a BD triple.
    VerifyCybe(TripleArgs),
    /// Full Lagrangian-subalgebra audit for a BD triple.
    ManinAudit(TripleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the JSON report here; `-` for stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Record wall-clock time in `timing_ms` (otherwise 0).
    #[arg(long)]
    pub timing: bool,
    /// `key = value` file with defaults for any long flag.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BdArgs {
    #[arg(long)]
    pub n: usize,
    /// Cycle notation `(136245)` or one-line `346512`.
    #[arg(long)]
    pub sigma: String,
    /// Pair list such as `(6,1),(1,2)`.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub gamma1: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub gamma2: String,
}

#[derive(Debug, Clone, Args)]
pub struct AybeArgs {
    #[command(flatten)]
    pub data: BdArgs,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleChoice {
    Closed,
    Solve,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct GeometricArgs {
    #[command(flatten)]
    pub data: BdArgs,
    /// Test every valid cut point instead of the least one.
    #[arg(long)]
    pub all_m: bool,
    #[arg(long, value_enum, default_value_t = OracleChoice::Both)]
    pub oracle: OracleChoice,
    /// Glue the Levi quotients by the identity instead of `σ` (negative control).
    #[arg(long)]
    pub corrupt_levi: bool,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TripleArgs {
    #[arg(long)]
    pub n: usize,
    /// Simple weight indices such as `1,2`.
    #[arg(long, default_value = "")]
    pub gamma1: String,
    #[arg(long, default_value = "")]
    pub gamma2: String,
    /// Pair list `(a,b),…` meaning `τ(a) = b`.
    #[arg(long, default_value = "")]
    pub tau: String,
    /// `auto` or a file holding the `(n-1)×(n-1)` coefficient matrix of `r₀` in the Cartan basis.
    #[arg(long, default_value = "auto")]
    pub r0: String,
    /// Truncation order of the series checks.
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, default_value_t = 3)]
    pub pole_bound: usize,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::VerifyAybe(a) => &a.out,
            Command::GeometricCompare(a) => &a.out,
            Command::VerifyCybe(a) | Command::ManinAudit(a) => &a.out,
        }
    }
}
