//! Greedy stochastic search for initial pure states whose entanglement
//! survives a fixed decoherence step best.
//!
//! The objective is the global entanglement of the *evolved* state. A
//! candidate is kept only if it strictly improves that objective; after
//! `patience` consecutive rejections the perturbation scale is multiplied by
//! `step_decay`, and a run ends once the scale falls below `min_step` or
//! `max_iters` candidates have been tried. Independent restarts are seeded
//! with `seed + restart_index` and the best one wins (lowest index on ties).

use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::channels::NoiseChannel;
use crate::entanglement::entanglement_profile;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, PureState};
use crate::states::random_pure_state;

/// Where candidate states live.
#[derive(Debug, Clone, PartialEq)]
pub enum SearchSpace {
    /// Any pure state; moves are Gaussian kicks on the raw amplitudes.
    Amplitudes,
    /// States `U_0 ⊗ … ⊗ U_{N−1} |base⟩`; moves are Gaussian kicks on three
    /// Euler angles per qubit.
    LocalUnitary { base: PureState },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub n_qubits: usize,
    pub channel: NoiseChannel,
    pub max_iters: usize,
    pub initial_step: f64,
    pub step_decay: f64,
    pub patience: usize,
    pub min_step: f64,
    pub restarts: usize,
    pub seed: u64,
    pub space: SearchSpace,
}

impl SearchConfig {
    /// Default schedule: 20000 iterations, step 0.2 halved after 200
    /// rejections down to 1e-6, 16 restarts, seed 0.
    pub fn new(n_qubits: usize, channel: NoiseChannel) -> Self {
        Self {
            n_qubits,
            channel,
            max_iters: 20_000,
            initial_step: 0.2,
            step_decay: 0.5,
            patience: 200,
            min_step: 1e-6,
            restarts: 16,
            seed: 0,
            space: SearchSpace::Amplitudes,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(2..=crate::linalg::MAX_QUBITS).contains(&self.n_qubits) {
            return bad(format!(
                "n_qubits = {} outside [2, {}]",
                self.n_qubits,
                crate::linalg::MAX_QUBITS
            ));
        }
        if self.max_iters < 1 {
            return bad("max_iters must be at least 1".into());
        }
        if self.restarts < 1 {
            return bad("restarts must be at least 1".into());
        }
        if self.patience < 1 {
            return bad("patience must be at least 1".into());
        }
        if !(self.step_decay > 0.0 && self.step_decay < 1.0) {
            return bad(format!("step_decay = {} outside (0, 1)", self.step_decay));
        }
        if !(self.initial_step > 0.0 && self.initial_step.is_finite()) {
            return bad(format!("initial_step = {} must be positive", self.initial_step));
        }
        if self.min_step.is_nan() || self.initial_step.is_nan() || self.min_step >= self.initial_step {
            return bad(format!(
                "min_step = {} must be below initial_step = {}",
                self.min_step, self.initial_step
            ));
        }
        if let SearchSpace::LocalUnitary { base } = &self.space {
            if base.n_qubits() != self.n_qubits {
                return bad(format!(
                    "base state has {} qubits, search has {}",
                    base.n_qubits(),
                    self.n_qubits
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// The optimized initial state.
    pub best_state: PureState,
    /// Global entanglement of the evolved state.
    pub evolved_score: f64,
    /// Global entanglement of `best_state` itself.
    pub initial_score: f64,
    /// `(iteration, score)` for the starting point and every accepted move.
    pub trajectory: Vec<(usize, f64)>,
    pub restart_index: usize,
    /// Candidates evaluated in the winning restart.
    pub iterations: usize,
}

impl SearchResult {
    /// Writes the trajectory log, one `iter score` line per accepted state.
    pub fn write_trajectory<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (iter, score) in &self.trajectory {
            writeln!(out, "{iter} {score:?}")?;
        }
        Ok(())
    }
}

/// Global entanglement of `channel` applied to `|ψ⟩⟨ψ|`.
pub fn score(state: &PureState, channel: &NoiseChannel) -> Result<f64> {
    let evolved = channel.apply_all(&state.density_matrix());
    Ok(entanglement_profile(&evolved, false)?.global)
}

/// Adds complex Gaussian noise with `E|δ|² = step²` to each amplitude and
/// renormalizes.
pub fn perturb<R: Rng + ?Sized>(state: &PureState, step: f64, rng: &mut R) -> Result<PureState> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "perturbation step {step} must be positive"
        )));
    }
    let scale = step * std::f64::consts::FRAC_1_SQRT_2;
    loop {
        let amps: Vec<Complex64> = state
            .amplitudes()
            .iter()
            .map(|a| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                a + Complex64::new(re, im) * scale
            })
            .collect();
        if let Ok(s) = PureState::normalized(amps) {
            return Ok(s);
        }
    }
}

/// ZYZ Euler rotation `Rz(a) Ry(b) Rz(c)`.
fn euler_unitary([a, b, c]: [f64; 3]) -> ComplexMatrix {
    let (cb, sb) = ((b / 2.0).cos(), (b / 2.0).sin());
    let e = |t: f64| Complex64::from_polar(1.0, t / 2.0);
    ComplexMatrix::from_rows([[e(-a - c) * cb, -e(-a + c) * sb], [e(a - c) * sb, e(a + c) * cb]])
}

fn lu_state(base: &PureState, angles: &[[f64; 3]]) -> PureState {
    let unitaries: Vec<ComplexMatrix> = angles.iter().copied().map(euler_unitary).collect();
    base.apply_local(&unitaries).expect("one rotation per qubit")
}

/// Search point in either space.
#[derive(Clone)]
enum Point {
    Amplitudes(PureState),
    Angles(Vec<[f64; 3]>, PureState),
}

impl Point {
    fn state(&self) -> &PureState {
        match self {
            Point::Amplitudes(s) | Point::Angles(_, s) => s,
        }
    }
}

fn random_start(config: &SearchConfig, rng: &mut ChaCha20Rng) -> Result<Point> {
    Ok(match &config.space {
        SearchSpace::Amplitudes => Point::Amplitudes(random_pure_state(config.n_qubits, rng)?),
        SearchSpace::LocalUnitary { base } => {
            let angles: Vec<[f64; 3]> = (0..config.n_qubits)
                .map(|_| std::array::from_fn(|_| rng.random_range(0.0..std::f64::consts::TAU)))
                .collect();
            let s = lu_state(base, &angles);
            Point::Angles(angles, s)
        }
    })
}

fn neighbour(config: &SearchConfig, point: &Point, step: f64, rng: &mut ChaCha20Rng) -> Result<Point> {
    Ok(match (point, &config.space) {
        (Point::Amplitudes(s), _) => Point::Amplitudes(perturb(s, step, rng)?),
        (Point::Angles(angles, _), SearchSpace::LocalUnitary { base }) => {
            let moved: Vec<[f64; 3]> = angles
                .iter()
                .map(|a| a.map(|x| x + step * rng.sample::<f64, _>(StandardNormal)))
                .collect();
            let s = lu_state(base, &moved);
            Point::Angles(moved, s)
        }
        (Point::Angles(..), SearchSpace::Amplitudes) => unreachable!("point kind follows the search space"),
    })
}

/// One hill-climbing run seeded with `seed + restart_index`.
pub fn run_restart(config: &SearchConfig, restart_index: usize) -> Result<SearchResult> {
    config.validate()?;
    let mut rng = ChaCha20Rng::seed_from_u64(config.seed.wrapping_add(restart_index as u64));
    let mut current = random_start(config, &mut rng)?;
    let mut current_score = score(current.state(), &config.channel)?;
    let mut trajectory = vec![(0, current_score)];
    let mut step = config.initial_step;
    let mut rejections = 0;
    let mut iterations = 0;

    for iter in 1..=config.max_iters {
        if step < config.min_step {
            break;
        }
        iterations = iter;
        let candidate = neighbour(config, &current, step, &mut rng)?;
        let s = score(candidate.state(), &config.channel)?;
        if s > current_score {
            current = candidate;
            current_score = s;
            trajectory.push((iter, s));
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= config.patience {
                step *= config.step_decay;
                rejections = 0;
            }
        }
    }

    let best_state = current.state().clone();
    let initial_score = entanglement_profile(&best_state.density_matrix(), false)?.global;
    Ok(SearchResult {
        best_state,
        evolved_score: current_score,
        initial_score,
        trajectory,
        restart_index,
        iterations,
    })
}

/// Runs every restart (concurrently) and keeps the best evolved score.
pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let runs = (0..config.restarts)
        .into_par_iter()
        .map(|i| run_restart(config, i))
        .collect::<Result<Vec<_>>>()?;
    let best = runs
        .into_iter()
        .reduce(|best, r| if r.evolved_score > best.evolved_score { r } else { best })
        .expect("at least one restart");
    Ok(best)
}
