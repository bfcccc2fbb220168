use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "lieorbit",
    version,
    about = "Cascades of orthogonal roots and coadjoint isotropy, computed exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the cascade of strongly orthogonal roots.
    Cascade {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run verification suites for one simple type.
    Verify(VerifyArgs),
    /// Tabulate which simple types admit an open coadjoint orbit.
    Classify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..=64))]
        max_rank: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Basic data of the Lie algebra and its root system.
    AlgebraInfo {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct TypeArgs {
    /// Family letter, A to G.
    #[arg(long = "type", value_name = "FAMILY")]
    pub family: char,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub rank: u64,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Suites to run, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub suite: Vec<Suite>,
    /// Random points per sampled suite.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, env = "LIEORBIT_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Largest rank for which the brute-force cascade oracle runs.
    #[arg(long, default_value_t = 4)]
    pub oracle_rank_limit: usize,
    /// Include every witness, with subspace bases, in JSON output.
    #[arg(long)]
    pub witnesses: bool,
    /// Include wall-clock timings. Output is then no longer reproducible.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Cascade,
    W0,
    Isotropy,
    Codim,
    Shift,
    Fixed,
    Transitivity,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Cascade,
        Suite::W0,
        Suite::Isotropy,
        Suite::Codim,
        Suite::Shift,
        Suite::Fixed,
        Suite::Transitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cascade => "cascade",
            Suite::W0 => "w0",
            Suite::Isotropy => "isotropy",
            Suite::Codim => "codim",
            Suite::Shift => "shift",
            Suite::Fixed => "fixed",
            Suite::Transitivity => "transitivity",
            Suite::All => "all",
        }
    }
}

/// Selected suites in canonical order with `all` expanded.
pub fn expand_suites(selected: &[Suite]) -> Vec<Suite> {
    if selected.contains(&Suite::All) {
        return Suite::ALL.to_vec();
    }
    let mut out = selected.to_vec();
    out.sort();
    out.dedup();
    out
}
