//! Subcommand implementations. Each command computes all of its outputs in
//! memory first; nothing is written unless the whole run succeeds.

use std::fs;
use std::path::{Path, PathBuf};

use seedwave::construct::{
    build_symmetric_wavelet, build_symmetric_wavelet_with_delta, CONDITION_WARN,
};
use seedwave::export::{write_cwt_csv, write_spectrum_csv, write_wavelet_csv};
use seedwave::transform::cwt;
use seedwave::wavelet::linspace;
use seedwave::{SeedSequence, SeedWavelet};

use crate::args::{
    ConstructArgs, CwtArgs, DecomposeArgs, GenArgs, GridArgs, Job, ReplayArgs, VerifyArgs,
};
use crate::error::{CliError, Result};
use crate::files::{ensure_dir, read_seed, read_signal, to_json, write_atomic};
use crate::manifest::{RunManifest, MANIFEST_NAME};
use crate::report::verify;

/// Extra samples shown on either side of the seed in default grids.
const GRID_MARGIN: f64 = 8.0;
const GRID_POINTS_PER_DELTA: usize = 16;
/// Default spectrum grid reaches this multiple of the band edge.
const SPECTRUM_REACH: f64 = 1.25;

/// What a command produced, before anything touches the disk.
#[derive(Debug, Default)]
pub struct Outcome {
    /// `(file name, contents)`, in manifest order.
    pub files: Vec<(String, Vec<u8>)>,
    /// Text for standard output.
    pub stdout: Option<String>,
    pub warnings: Vec<String>,
    /// Set when the command ran but its verdict is negative.
    pub failure: Option<String>,
}

impl Outcome {
    fn add(&mut self, name: &str, bytes: Vec<u8>) {
        self.files.push((name.to_string(), bytes));
    }

    fn add_csv(&mut self, name: &str, write: impl FnOnce(&mut Vec<u8>) -> std::io::Result<()>) {
        let mut buf = Vec::new();
        write(&mut buf).expect("writing to memory cannot fail");
        self.add(name, buf);
    }

    /// The manifest bytes for this outcome.
    pub fn manifest(&self, job: &Job) -> Vec<u8> {
        let outputs = self.files.iter().map(|(n, _)| n.clone()).collect();
        to_json(&RunManifest::new(job.clone(), outputs))
    }
}

fn time_grid(seq: &SeedSequence, grid: &GridArgs) -> Result<Vec<f64>> {
    match &grid.grid {
        Some(g) => {
            let (start, end, count) = (g[0], g[1], g[2]);
            if !(count.fract() == 0.0 && (2.0..=1e8).contains(&count)) {
                return Err(CliError::Invalid(format!(
                    "grid COUNT must be an integer >= 2, got {count}"
                )));
            }
            Ok(linspace(start, end, count as usize)?)
        }
        None => {
            let d = seq.delta();
            let start = seq.t0() - GRID_MARGIN * d;
            let end = seq.sample_time(seq.len() - 1) + GRID_MARGIN * d;
            let count = GRID_POINTS_PER_DELTA * (seq.len() - 1 + 2 * GRID_MARGIN as usize) + 1;
            Ok(linspace(start, end, count)?)
        }
    }
}

fn sample(w: &SeedWavelet, times: &[f64]) -> Vec<(f64, f64)> {
    times.iter().map(|&t| (t, w.value(t))).collect()
}

pub fn gen(args: &GenArgs) -> Result<Outcome> {
    let seq = match (&args.seed, args.random) {
        (Some(path), _) => {
            let s = read_seed(path)?;
            SeedSequence::new(
                s.values().to_vec(),
                args.delta.unwrap_or(s.delta()),
                args.t0.unwrap_or(s.t0()),
            )?
        }
        (None, Some(n)) => {
            let rng_seed = args
                .rng_seed
                .ok_or_else(|| CliError::Invalid("--random needs --rng-seed".into()))?;
            let s = match args.delta {
                Some(d) => SeedSequence::random_with_delta(n, args.variance, rng_seed, d)?,
                None => SeedSequence::random(n, args.variance, rng_seed)?,
            };
            match args.t0 {
                Some(t0) => SeedSequence::new(s.values().to_vec(), s.delta(), t0)?,
                None => s,
            }
        }
        (None, None) => return Err(CliError::Invalid("give a seed file or --random N".into())),
    };
    if !args.allow_nonadmissible {
        seq.ensure_admissible()?;
    }
    let times = time_grid(&seq, &args.grid)?;
    let w = SeedWavelet::new(seq.clone());
    let reach = SPECTRUM_REACH * w.band_edge();
    let omegas = linspace(-reach, reach, times.len())?;
    let spectrum: Vec<_> = omegas.iter().map(|&o| (o, w.spectrum_value(o))).collect();

    let mut out = Outcome::default();
    out.add("seed.json", to_json(&seq));
    out.add_csv("wavelet.csv", |b| write_wavelet_csv(b, &sample(&w, &times)));
    out.add_csv("spectrum.csv", |b| write_spectrum_csv(b, &spectrum));
    Ok(out)
}

pub fn verify_cmd(args: &VerifyArgs) -> Result<Outcome> {
    let seq = read_seed(&args.seed)?;
    let report = verify(&seq, args.tol, args.max_order, args.min_order);
    let json = to_json(&report);
    let mut out = Outcome {
        stdout: Some(String::from_utf8(json.clone()).expect("JSON is UTF-8")),
        ..Outcome::default()
    };
    if !report.pass {
        out.failure = Some(report.failed_checks().join(", "));
    }
    out.add("report.json", json);
    Ok(out)
}

pub fn construct(args: &ConstructArgs) -> Result<Outcome> {
    let (seq, system) = match args.delta {
        Some(d) => {
            build_symmetric_wavelet_with_delta(args.n, args.p, args.variance, args.rng_seed, d)?
        }
        None => build_symmetric_wavelet(args.n, args.p, args.variance, args.rng_seed)?,
    };
    let times = time_grid(&seq, &args.grid)?;
    let w = SeedWavelet::new(seq.clone());

    let mut out = Outcome::default();
    if system.condition > CONDITION_WARN {
        out.warnings.push(format!(
            "moment system is ill-conditioned (condition number {:e}); moments may not vanish to tolerance",
            system.condition
        ));
    }
    out.add("seed.json", to_json(&seq));
    out.add("system.json", to_json(&system));
    out.add_csv("wavelet.csv", |b| write_wavelet_csv(b, &sample(&w, &times)));
    Ok(out)
}

pub fn decompose(args: &DecomposeArgs) -> Result<Outcome> {
    let seq = read_seed(&args.seed)?;
    let (even, odd) = seq.decompose_even_odd()?;
    let times = time_grid(&seq, &args.grid)?;
    let we = SeedWavelet::new(even.clone());
    let wo = SeedWavelet::new(odd.clone());

    let mut out = Outcome::default();
    out.add("even.json", to_json(&even));
    out.add("odd.json", to_json(&odd));
    out.add_csv("even.csv", |b| write_wavelet_csv(b, &sample(&we, &times)));
    out.add_csv("odd.csv", |b| write_wavelet_csv(b, &sample(&wo, &times)));
    Ok(out)
}

pub fn cwt_cmd(args: &CwtArgs) -> Result<Outcome> {
    let signal = read_signal(&args.signal, args.dt)?;
    let seq = read_seed(&args.seed)?;
    let w = SeedWavelet::new(seq);
    let shifts = match &args.shifts {
        Some(s) => s.clone(),
        None => (0..signal.values.len())
            .map(|i| signal.start + i as f64 * signal.delta)
            .collect(),
    };
    // the transform puts sample i at i * dt; move the shifts instead of the signal
    let relative: Vec<f64> = shifts.iter().map(|b| b - signal.start).collect();
    let mut grid = cwt(&signal.values, signal.delta, &w, &args.scales, &relative)?;
    grid.shifts = shifts;

    let mut out = Outcome::default();
    out.add_csv("cwt.csv", |b| write_cwt_csv(b, &grid));
    Ok(out)
}

pub fn execute(job: &Job) -> Result<Outcome> {
    match job {
        Job::Gen(a) => gen(a),
        Job::Verify(a) => verify_cmd(a),
        Job::Construct(a) => construct(a),
        Job::Decompose(a) => decompose(a),
        Job::Cwt(a) => cwt_cmd(a),
    }
}

/// Writes the outcome's files and the manifest into `dir`.
pub fn write_outcome(job: &Job, outcome: &Outcome, dir: &Path) -> Result<()> {
    ensure_dir(dir)?;
    for (name, bytes) in &outcome.files {
        write_atomic(dir, name, bytes)?;
    }
    write_atomic(dir, MANIFEST_NAME, &outcome.manifest(job))
}

fn output_dir(job: &Job) -> Option<PathBuf> {
    match job {
        Job::Gen(a) => Some(a.out.clone()),
        Job::Verify(a) => a.out.clone(),
        Job::Construct(a) => Some(a.out.clone()),
        Job::Decompose(a) => Some(a.out.clone()),
        Job::Cwt(a) => Some(a.out.clone()),
    }
}

fn report(outcome: Outcome, written: Option<&Path>) -> Result<()> {
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    match (&outcome.stdout, written) {
        (Some(text), _) => print!("{text}"),
        (None, Some(dir)) => {
            for (name, _) in &outcome.files {
                println!("{}", dir.join(name).display());
            }
            println!("{}", dir.join(MANIFEST_NAME).display());
        }
        (None, None) => {}
    }
    match outcome.failure {
        Some(f) => Err(CliError::Failed(f)),
        None => Ok(()),
    }
}

/// Runs a job and writes its outputs to the job's own output directory.
pub fn run_job(job: &Job) -> Result<()> {
    let outcome = execute(job)?;
    let dir = output_dir(job);
    if let Some(dir) = &dir {
        write_outcome(job, &outcome, dir)?;
    }
    report(outcome, dir.as_deref())
}

pub fn replay(args: &ReplayArgs) -> Result<()> {
    let manifest = RunManifest::read(&args.manifest)?;
    let home = args
        .manifest
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_default();
    let outcome = execute(&manifest.job)?;
    let listed: Vec<&str> = manifest.outputs.iter().map(String::as_str).collect();
    let produced: Vec<&str> = outcome.files.iter().map(|(n, _)| n.as_str()).collect();
    if listed != produced {
        return Err(CliError::Invalid(format!(
            "manifest lists outputs {listed:?} but the command produces {produced:?}"
        )));
    }
    if args.check {
        let mut differing = Vec::new();
        let expected = outcome
            .files
            .iter()
            .cloned()
            .chain([(MANIFEST_NAME.to_string(), outcome.manifest(&manifest.job))]);
        for (name, bytes) in expected {
            let path = home.join(&name);
            let recorded = fs::read(&path).map_err(|e| CliError::io(&path, e))?;
            if recorded != bytes {
                differing.push(name);
            }
        }
        if !differing.is_empty() {
            return Err(CliError::Failed(format!(
                "replay differs in {}",
                differing.join(", ")
            )));
        }
        println!(
            "replay matches {} recorded file(s)",
            manifest.outputs.len() + 1
        );
        // a negative verdict is part of the recorded result, not a replay failure
        return Ok(());
    }
    let dir = args.out.clone().unwrap_or(home);
    write_outcome(&manifest.job, &outcome, &dir)?;
    report(outcome, Some(&dir))
}
