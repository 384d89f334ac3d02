use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Degree irregularity, spectra and regularization of simple graphs.
///
/// Exit status: 0 clean, 1 audited claims failed, 2 usage or input error,
/// 3 an internal invariant was violated.
#[derive(Parser, Debug)]
#[command(name = "irreg", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Tolerance for inequality checks
    #[arg(long, global = true, default_value_t = irregularity::inequalities::DEFAULT_TOL)]
    pub tol: f64,

    /// Seed for random corpora and random bipartitions
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Output format; reports default to json, other commands to text
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the primary output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degrees, mean degree, deviation s, variance and irregularity
    Measures(InputArgs),
    /// Adjacency eigenvalues, optionally of a blow-up
    Spectrum(SpectrumArgs),
    /// Rewire a graph towards regularity and report the edit count
    Regularize(RegularizeArgs),
    /// Run inequality checks on one graph
    Check(CheckArgs),
    /// Run inequality checks on a generated or exhaustive corpus
    Corpus(CorpusArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Edge-list file, or `-` for stdin
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Blow each vertex up into this many copies first
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub blow_up: Option<u64>,

    /// Make the copies of each vertex adjacent (requires --blow-up)
    #[arg(long, requires = "blow_up")]
    pub closed: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Maximum degree at most minimum degree plus one
    Rough,
    /// Class-wise rough regularization; needs a bipartite header
    Bipartite,
    /// Regular result from a graph of degree spread at most one
    Fine,
}

#[derive(Args, Debug)]
pub struct RegularizeArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, value_enum, default_value_t = Mode::Rough)]
    pub mode: Mode,

    /// Write the edit script ("+u v" / "-u v" per line) to this file
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Comma-separated check names, or `all`
    #[arg(long, default_value = "all")]
    pub checks: String,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    /// Generated family
    #[arg(
        long,
        conflicts_with = "exhaustive",
        required_unless_present = "exhaustive"
    )]
    pub family: Option<String>,

    /// Every labeled graph on this many vertices (at most 7)
    #[arg(long)]
    pub exhaustive: Option<usize>,

    /// Smallest family parameter
    #[arg(long, default_value_t = 1)]
    pub nmin: usize,

    /// Largest family parameter
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,

    /// Stride through deterministic families
    #[arg(long, default_value_t = 1)]
    pub step: usize,

    /// Number of graphs drawn from random families
    #[arg(long, default_value_t = 100)]
    pub count: usize,

    /// Comma-separated check names, or `all`
    #[arg(long, default_value = "all")]
    pub checks: String,

    /// Keep only failed checks in the report; the summary still counts all
    #[arg(long)]
    pub only_failures: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::parse_from([
            "irreg", "corpus", "--family", "gnp", "--count", "3", "--seed", "7", "--format", "csv",
        ]);
        assert_eq!(cli.global.seed, 7);
        assert_eq!(cli.global.format, Some(Format::Csv));
        match cli.command {
            Command::Corpus(args) => {
                assert_eq!(args.family.as_deref(), Some("gnp"));
                assert_eq!(args.count, 3);
            }
            other => panic!("unexpected command {other:?}"),
        }
    }

    #[test]
    fn corpus_needs_exactly_one_source() {
        assert!(Cli::try_parse_from(["irreg", "corpus"]).is_err());
        assert!(
            Cli::try_parse_from(["irreg", "corpus", "--family", "star", "--exhaustive", "3"])
                .is_err()
        );
    }

    #[test]
    fn closed_requires_blow_up() {
        assert!(Cli::try_parse_from(["irreg", "spectrum", "g.el", "--closed"]).is_err());
        assert!(Cli::try_parse_from(["irreg", "spectrum", "g.el", "--blow-up", "0"]).is_err());
    }
}
