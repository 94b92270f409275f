use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use squarint::cubature::DEFAULT_SEED;
use squarint::registry::{Profile, Settings};

#[derive(Debug, Parser)]
#[command(name = "squarint", version, about = "Verify unit-cube and half-line integral identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row per identity: id, location, trust, tolerance.
    List(ListArgs),
    /// Verify identities and report PASS, FAIL or FLAGGED for each.
    Verify(VerifyArgs),
    /// Evaluate an ad-hoc integral given as a literal.
    Eval(EvalArgs),
    /// Export or check the registry text format.
    Registry {
        #[command(subcommand)]
        action: RegistryAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Thorough,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Thorough => Profile::Thorough,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

/// Identity selection shared by `list` and `verify`.
#[derive(Debug, Args)]
pub struct Selection {
    /// Identity id; repeatable.
    #[arg(long = "id", value_name = "ID")]
    pub ids: Vec<String>,
    /// Glob over identity ids, for example `T9-*`.
    #[arg(long, value_name = "GLOB")]
    pub filter: Option<String>,
}

#[derive(Debug, Args)]
pub struct RunConfig {
    #[arg(long, value_enum, env = "SQUARINT_PROFILE", default_value = "quick")]
    pub profile: ProfileArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Override the deterministic engines' evaluation budget.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_evals: Option<u64>,
    /// Override the low-discrepancy points per shift.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_points: Option<u64>,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn settings(&self) -> Settings {
        let mut s = Settings::new(self.profile.into()).with_seed(self.seed);
        if let Some(n) = self.budget_evals {
            s.budget.max_evals = n;
        }
        if let Some(n) = self.budget_points {
            s.budget.points = n;
        }
        s
    }
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[command(flatten)]
    pub selection: Selection,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub selection: Selection,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    Halfline,
    Cube,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub kind: EvalKind,
    /// Half-line `(a,b,c)(a,b,c)^m; num=…; m=…` or cube `k=…; mu=…; logw=…; j=…`.
    pub literal: String,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Subcommand)]
pub enum RegistryAction {
    /// Write the built-in registry in the text format.
    Export {
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Parse and validate a registry file.
    Check { path: PathBuf },
}
