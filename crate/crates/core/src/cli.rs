//! Command-line front end. Data goes to `--out` files; diagnostics and the
//! resolved configuration go to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::channels::ChannelKind;
use crate::entanglement::{enumerate_bipartitions, n_cuts};
use crate::error::{Error, Result};
use crate::experiments::{
    bound_scan, linear_grid, lu_survey, sweep, write_bound_csv, write_csv, write_survey_csv, DEFAULT_THRESHOLD,
};
use crate::optimizer::{search, SearchConfig, SearchSpace};
use crate::states::{save_state, StateFamily, StateSpec};

/// Exit code for invalid input.
pub const EXIT_VALIDATION: i32 = 1;
/// Exit code for numerical or I/O failures.
pub const EXIT_RUNTIME: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "robent",
    version,
    about = "Entanglement decay of multi-qubit states under local noise"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Global and per-class entanglement along a noise-strength grid.
    Sweep(SweepArgs),
    /// Search for the initial state with the most entanglement after the channel.
    Optimize(OptimizeArgs),
    /// Locate where unbalanced and balanced cuts become PPT.
    Bound(BoundArgs),
    /// Sweep random local-unitary variants of a base state.
    Survey(SurveyArgs),
    /// Print the number of non-equivalent bipartitions per cut size.
    Bipartitions(BipartitionArgs),
    /// Write a catalog state to a state file.
    State(StateArgs),
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, default_value_t = 0.0)]
    pmin: f64,
    #[arg(long, default_value_t = 1.0)]
    pmax: f64,
    #[arg(long, default_value_t = 101)]
    steps: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<Vec<f64>> {
        linear_grid(self.pmin, self.pmax, self.steps)
    }
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelKind,
    /// ghz, w, hs, rob5, h, hbar or file:<path>
    #[arg(long, value_parser = parse_family)]
    state: StateFamily,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    grid: GridArgs,
    /// Add one column per bipartition.
    #[arg(long)]
    per_cut: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct OptimizeArgs {
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelKind,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 16)]
    restarts: usize,
    #[arg(long, default_value_t = 20_000)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.2)]
    step: f64,
    #[arg(long, default_value_t = 0.5)]
    step_decay: f64,
    #[arg(long, default_value_t = 200)]
    patience: usize,
    #[arg(long, default_value_t = 1e-6)]
    min_step: f64,
    /// Only search the local-unitary orbit of `--base`.
    #[arg(long)]
    lu_restricted: bool,
    #[arg(long, value_parser = parse_family, requires = "lu_restricted")]
    base: Option<StateFamily>,
    /// Best initial state.
    #[arg(long)]
    out: PathBuf,
    /// Accepted-move log; defaults to `<out>.traj`.
    #[arg(long)]
    trajectory: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelKind,
    #[arg(long, value_parser = parse_family)]
    state: StateFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    threshold: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SurveyArgs {
    #[arg(long, value_parser = parse_family)]
    base: StateFamily,
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct BipartitionArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct StateArgs {
    #[arg(long, value_parser = parse_family)]
    family: StateFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

fn parse_channel(s: &str) -> std::result::Result<ChannelKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<StateFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn create(path: &PathBuf) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    eprintln!("robent config: {:?}", cli.command);
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("robent: error: {e}");
            if e.is_validation() {
                EXIT_VALIDATION
            } else {
                EXIT_RUNTIME
            }
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Sweep(a) => {
            let spec = StateSpec::new(a.state, a.n);
            spec.validate()?;
            let grid = a.grid.grid()?;
            let state = spec.build()?;
            let records = sweep(&state, a.channel, &grid, a.per_cut)?;
            write_csv(&records, create(&a.out)?)?;
            eprintln!("wrote {} records to {}", records.len(), a.out.display());
        }
        Command::Optimize(a) => {
            let channel = a.channel.at(a.p)?;
            let space = if a.lu_restricted {
                let family = a.base.unwrap_or(StateFamily::Ghz);
                let base = StateSpec::new(family, Some(a.n)).build()?;
                SearchSpace::LocalUnitary { base }
            } else {
                SearchSpace::Amplitudes
            };
            let config = SearchConfig {
                max_iters: a.iters,
                initial_step: a.step,
                step_decay: a.step_decay,
                patience: a.patience,
                min_step: a.min_step,
                restarts: a.restarts,
                seed: a.seed,
                space,
                ..SearchConfig::new(a.n, channel)
            };
            config.validate()?;
            let result = search(&config)?;
            save_state(&result.best_state, &a.out)?;
            let traj = a.trajectory.unwrap_or_else(|| {
                let mut p = a.out.clone().into_os_string();
                p.push(".traj");
                PathBuf::from(p)
            });
            result.write_trajectory(create(&traj)?)?;
            eprintln!(
                "best restart {}: evolved E = {:.10}, initial E = {:.10}, {} accepted moves",
                result.restart_index,
                result.evolved_score,
                result.initial_score,
                result.trajectory.len() - 1
            );
        }
        Command::Bound(a) => {
            let spec = StateSpec::new(a.state, a.n);
            spec.validate()?;
            let grid = a.grid.grid()?;
            let state = spec.build()?;
            let window = bound_scan(&state, a.channel, &grid, a.threshold)?;
            write_bound_csv(&window, create(&a.out)?)?;
            eprintln!(
                "unbalanced cuts vanish at p = {}, balanced at p = {} ({})",
                window.p_unbalanced_vanish,
                window.p_balanced_vanish,
                window.orientation.name()
            );
        }
        Command::Survey(a) => {
            let spec = StateSpec::new(a.base, a.n);
            spec.validate()?;
            let grid = a.grid.grid()?;
            let base = spec.build()?;
            let survey = lu_survey(&base, a.channel, &grid, a.samples, a.seed)?;
            write_survey_csv(&survey, create(&a.out)?)?;
        }
        Command::Bipartitions(a) => {
            if !(2..=64).contains(&a.n) {
                return Err(Error::InvalidConfig(format!("n = {} outside [2, 64]", a.n)));
            }
            for m in 1..=a.n / 2 {
                println!("m={m} {}", bipartition_count(a.n, m)?);
            }
            println!("total {}", n_cuts(a.n));
        }
        Command::State(a) => {
            let state = StateSpec::new(a.family, a.n).build()?;
            save_state(&state, &a.out)?;
        }
    }
    Ok(())
}

/// Counts without materializing the list for large `n`.
fn bipartition_count(n: usize, m: usize) -> Result<u64> {
    if n <= 20 {
        return Ok(enumerate_bipartitions(n, m)?.len() as u64);
    }
    let c = (0..m as u64).fold(1u128, |acc, i| acc * (n as u128 - i as u128) / (i as u128 + 1));
    Ok(if 2 * m == n { c / 2 } else { c } as u64)
}
