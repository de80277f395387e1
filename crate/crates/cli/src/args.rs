use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use scp_core::verify::DEFAULT_SEED;
use scp_core::{params_from_restricted_set, ScpParams};

#[derive(Debug, Parser)]
#[command(
    name = "scp",
    version,
    about = "Construct and verify sparse complementary pairs with zero-correlation zones"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Seed for the random linear coefficients drawn by `sweep`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a pair and write it as JSON.
    Construct(ParamArgs),
    /// Build a pair and its mate and write both as JSON.
    Mate(ParamArgs),
    /// Verify a pair file or mate file; exits 1 if any condition fails.
    Verify(VerifyArgs),
    /// Export a correlation profile (u, re, im, magnitude, is_exact_zero).
    Correlate(CorrelateArgs),
    /// Rebuild the table of pairs of lengths 15 to 35.
    Table1,
    /// Construct and verify every parameter combination up to --m-max.
    Sweep(SweepArgs),
}

/// Parameter source: a JSON file or inline flags.
#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    /// JSON parameter file: {q, m, t, pi, d, g} or {q, m, restricted, d, g}.
    #[arg(long, conflicts_with_all = ["q", "m", "t", "perm", "restricted", "d", "g"])]
    pub params: Option<PathBuf>,

    /// Alphabet size (even).
    #[arg(long)]
    pub q: Option<u32>,

    /// Number of Boolean variables.
    #[arg(long)]
    pub m: Option<usize>,

    /// Number of restricted variables, the first t entries of --perm.
    #[arg(long, requires = "perm")]
    pub t: Option<usize>,

    /// Permutation of 1..=m, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "restricted")]
    pub perm: Option<Vec<usize>>,

    /// Restricted variable indices; uses the canonical permutation.
    #[arg(long, value_delimiter = ',')]
    pub restricted: Option<Vec<usize>>,

    /// Values of the restricted variables (default all zero).
    #[arg(long, value_delimiter = ',')]
    pub d: Option<Vec<u8>>,

    /// Linear coefficients g_0,...,g_m (default all zero).
    #[arg(long, value_delimiter = ',')]
    pub g: Option<Vec<u32>>,
}

impl ParamArgs {
    pub fn is_given(&self) -> bool {
        self.params.is_some() || self.m.is_some()
    }

    pub fn resolve(&self) -> Result<ScpParams> {
        if let Some(path) = &self.params {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading parameter file {}", path.display()))?;
            return scp_core::format::parse_params(&text)
                .with_context(|| format!("parsing parameter file {}", path.display()));
        }
        let Some(m) = self.m else {
            bail!("missing parameters: give --params <file> or at least --m");
        };
        let q = self.q.unwrap_or(4);
        let d = self.d.clone().unwrap_or_default();
        let g = self.g.clone().unwrap_or_default();
        let params = match (&self.perm, &self.restricted) {
            (Some(pi), _) => ScpParams::new(q, m, self.t.unwrap_or(0), pi.clone(), d, g),
            (None, Some(restricted)) => params_from_restricted_set(m, q, restricted, d, g),
            (None, None) => ScpParams::new(q, m, 0, (1..=m).collect(), d, g),
        };
        params.context("invalid construction parameters")
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Pair or mate JSON file as written by `construct` / `mate`.
    #[arg(long)]
    pub input: PathBuf,

    /// Claimed zone width; defaults to the value derived from the file's params.
    #[arg(long)]
    pub z: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileKind {
    /// rho(C0; u) + rho(C1; u)
    Aacs,
    /// rho(C0; u)
    Auto0,
    /// rho(C1; u)
    Auto1,
    /// rho(C0, C1; u)
    Cross,
    /// rho(C0, S0; u) + rho(C1, S1; u)
    MateSum,
    C0s0,
    C0s1,
    C1s0,
    C1s1,
}

impl ProfileKind {
    pub fn needs_mate(self) -> bool {
        !matches!(self, Self::Aacs | Self::Auto0 | Self::Auto1 | Self::Cross)
    }
}

#[derive(Debug, Args)]
pub struct CorrelateArgs {
    /// Pair or mate JSON file; alternatively give construction parameters.
    #[arg(long, conflicts_with = "params")]
    pub input: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "aacs")]
    pub kind: ProfileKind,

    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Alphabet sizes to sweep.
    #[arg(long = "q", value_delimiter = ',', default_value = "2,4")]
    pub q_set: Vec<u32>,

    #[arg(long, default_value_t = 1)]
    pub m_min: usize,

    #[arg(long, default_value_t = 5)]
    pub m_max: usize,

    /// Also build pairs from permutations that violate pi(m) > pi(alpha).
    #[arg(long)]
    pub no_order_constraint: bool,

    /// Record per-cell wall time (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}
