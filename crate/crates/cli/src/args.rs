//! Command-line arguments. Every subcommand's arguments except the output
//! location serialize into the run manifest, so a manifest is enough to
//! repeat a run.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "seedwave",
    version,
    about = "Band-limited wavelets from finite seed sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a seed wavelet and its spectrum.
    Gen(GenArgs),
    /// Check admissibility, moments, energy and interpolation of a seed.
    Verify(VerifyArgs),
    /// Build a symmetric random seed with a prescribed number of vanishing moments.
    Construct(ConstructArgs),
    /// Split a centered seed into its even and odd parts.
    Decompose(DecomposeArgs),
    /// Continuous wavelet transform of a sampled signal.
    Cwt(CwtArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

/// A command that can be recorded in a manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "parameters", rename_all = "lowercase")]
pub enum Job {
    Gen(GenArgs),
    Verify(VerifyArgs),
    Construct(ConstructArgs),
    Decompose(DecomposeArgs),
    Cwt(CwtArgs),
}

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Gen(_) => "gen",
            Job::Verify(_) => "verify",
            Job::Construct(_) => "construct",
            Job::Decompose(_) => "decompose",
            Job::Cwt(_) => "cwt",
        }
    }
}

/// `--grid START END COUNT`: time samples for CSV output.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct GridArgs {
    /// Sample times START..=END at COUNT points [default: support +- 8 delta, 16 points per delta]
    #[arg(long, num_args = 3, value_names = ["START", "END", "COUNT"], allow_negative_numbers = true)]
    pub grid: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct GenArgs {
    /// Seed JSON file: {"values": [...], "delta": .., "t0": ..}
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    pub seed: Option<PathBuf>,

    /// Draw a zero-mean Gaussian seed of this odd length instead of reading one
    #[arg(long, value_name = "N", requires = "rng_seed")]
    pub random: Option<usize>,

    /// Variance of the random draw
    #[arg(long, default_value_t = 1.0)]
    pub variance: f64,

    /// Seed of the random number generator
    #[arg(long)]
    pub rng_seed: Option<u64>,

    /// Override the sampling period [random default: 2/(N-1)]
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,

    /// Override the time of the first sample [random default: centered]
    #[arg(long, allow_negative_numbers = true)]
    pub t0: Option<f64>,

    #[command(flatten)]
    #[serde(flatten)]
    pub grid: GridArgs,

    /// Accept seeds whose values do not sum to zero
    #[arg(long)]
    pub allow_nonadmissible: bool,

    /// Output directory
    #[arg(long)]
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    /// Seed JSON file
    pub seed: PathBuf,

    /// List moments up to at least this order
    #[arg(long)]
    pub max_order: Option<usize>,

    /// Fail unless at least this many moments vanish
    #[arg(long)]
    pub min_order: Option<usize>,

    /// Relative tolerance of the zero-moment test
    #[arg(long, default_value_t = seedwave::moments::DEFAULT_MOMENT_TOL)]
    pub tol: f64,

    /// Also write report.json and a manifest to this directory
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ConstructArgs {
    /// Seed length (odd)
    #[arg(short = 'n', long = "length")]
    pub n: usize,

    /// Number of vanishing moments (odd, < n)
    #[arg(short = 'p', long = "order")]
    pub p: usize,

    /// Variance of the random wing
    #[arg(long, default_value_t = 1.0)]
    pub variance: f64,

    /// Seed of the random number generator
    #[arg(long)]
    pub rng_seed: u64,

    /// Sampling period [default: 2/(n-1)]
    #[arg(long)]
    pub delta: Option<f64>,

    #[command(flatten)]
    #[serde(flatten)]
    pub grid: GridArgs,

    /// Output directory
    #[arg(long)]
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct DecomposeArgs {
    /// Seed JSON file (centered)
    pub seed: PathBuf,

    #[command(flatten)]
    #[serde(flatten)]
    pub grid: GridArgs,

    /// Output directory
    #[arg(long)]
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct CwtArgs {
    /// Signal CSV: one column (x, needs --dt) or two columns (t,x)
    pub signal: PathBuf,

    /// Seed JSON file of the analysing wavelet
    pub seed: PathBuf,

    /// Comma-separated scales
    #[arg(long, value_delimiter = ',', required = true)]
    pub scales: Vec<f64>,

    /// Comma-separated shifts [default: every sample time]
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub shifts: Option<Vec<f64>>,

    /// Sampling period of a one-column signal
    #[arg(long)]
    pub dt: Option<f64>,

    /// Output directory
    #[arg(long)]
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    /// Manifest written by an earlier run
    pub manifest: PathBuf,

    /// Write outputs here instead of next to the manifest
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Replay into a scratch directory and compare with the recorded outputs
    #[arg(long, conflicts_with = "out")]
    pub check: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn construct_flags() {
        let cli = Cli::try_parse_from([
            "seedwave",
            "construct",
            "-n",
            "15",
            "-p",
            "3",
            "--rng-seed",
            "7",
            "--out",
            "o",
        ])
        .unwrap();
        let Command::Construct(a) = cli.command else {
            panic!()
        };
        assert_eq!((a.n, a.p, a.variance, a.rng_seed), (15, 3, 1.0, 7));
        assert_eq!(a.out, PathBuf::from("o"));
    }

    #[test]
    fn gen_needs_exactly_one_source() {
        assert!(Cli::try_parse_from(["seedwave", "gen", "--out", "o"]).is_err());
        assert!(Cli::try_parse_from([
            "seedwave",
            "gen",
            "s.json",
            "--random",
            "5",
            "--rng-seed",
            "1",
            "--out",
            "o"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["seedwave", "gen", "--random", "5", "--out", "o"]).is_err());
        assert!(Cli::try_parse_from([
            "seedwave",
            "gen",
            "--random",
            "5",
            "--rng-seed",
            "1",
            "--out",
            "o"
        ])
        .is_ok());
    }

    #[test]
    fn grid_and_lists_accept_negatives() {
        let cli = Cli::try_parse_from([
            "seedwave", "gen", "s.json", "--grid", "-2", "2", "9", "--out", "o",
        ])
        .unwrap();
        let Command::Gen(a) = cli.command else {
            panic!()
        };
        assert_eq!(a.grid.grid, Some(vec![-2.0, 2.0, 9.0]));
        let cli = Cli::try_parse_from([
            "seedwave", "cwt", "x.csv", "s.json", "--scales", "1,2", "--shifts", "-1,0,1", "--out",
            "o",
        ])
        .unwrap();
        let Command::Cwt(a) = cli.command else {
            panic!()
        };
        assert_eq!(a.scales, vec![1.0, 2.0]);
        assert_eq!(a.shifts, Some(vec![-1.0, 0.0, 1.0]));
    }

    #[test]
    fn job_json_omits_the_output_location() {
        let job = Job::Decompose(DecomposeArgs {
            seed: "s.json".into(),
            grid: GridArgs { grid: None },
            out: "somewhere".into(),
        });
        let v = serde_json::to_value(&job).unwrap();
        assert_eq!(v["command"], "decompose");
        assert!(v["parameters"].get("out").is_none());
        let back: Job = serde_json::from_value(v).unwrap();
        let Job::Decompose(d) = back else { panic!() };
        assert_eq!(d.out, PathBuf::new());
    }
}
