//! Catalog states, random local-unitary variants, and the state file format.

mod file;

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, PureState};

pub use file::{load_state, parse_state, save_state, write_state, LOAD_NORM_TOL};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn require_at_least_two(family: &str, n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidConfig(format!("{family} needs n >= 2, got {n}")))
    } else {
        Ok(())
    }
}

/// (|0…0⟩ + |1…1⟩)/√2.
pub fn make_ghz(n: usize) -> Result<PureState> {
    require_at_least_two("ghz", n)?;
    let mut amps = vec![re(0.0); 1 << n];
    amps[0] = re(FRAC_1_SQRT_2);
    amps[(1 << n) - 1] = re(FRAC_1_SQRT_2);
    PureState::new(amps)
}

/// Equal superposition of the `n` single-excitation basis states.
pub fn make_w(n: usize) -> Result<PureState> {
    require_at_least_two("w", n)?;
    let mut amps = vec![re(0.0); 1 << n];
    let a = re(1.0 / (n as f64).sqrt());
    for q in 0..n {
        amps[1 << q] = a;
    }
    PureState::new(amps)
}

/// The four-qubit Higuchi–Sudbery state.
pub fn make_hs() -> PureState {
    let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let s = re(1.0 / 6f64.sqrt());
    let mut amps = vec![re(0.0); 16];
    amps[0b1100] = s;
    amps[0b0011] = s;
    amps[0b1001] = omega * s;
    amps[0b0110] = omega * s;
    amps[0b1010] = omega * omega * s;
    amps[0b0101] = omega * omega * s;
    PureState::normalized(amps).expect("nonzero")
}

/// The five-qubit state found robust under most channels.
pub fn make_rob5() -> PureState {
    const REAL: [(usize, f64); 8] = [
        (5, -1.0),
        (6, 1.0),
        (9, -1.0),
        (10, 1.0),
        (17, 1.0),
        (18, 1.0),
        (29, -1.0),
        (30, -1.0),
    ];
    const IMAG: [(usize, f64); 8] = [
        (0, -1.0),
        (3, 1.0),
        (12, -1.0),
        (15, 1.0),
        (20, -1.0),
        (23, -1.0),
        (24, 1.0),
        (27, 1.0),
    ];
    let mut amps = vec![re(0.0); 32];
    for (i, s) in REAL {
        amps[i] = re(0.25 * s);
    }
    for (i, s) in IMAG {
        amps[i] = Complex64::new(0.0, 0.25 * s);
    }
    PureState::new(amps).expect("sixteen amplitudes of modulus 1/4")
}

/// Returns `(|H⟩_n, |H̄⟩_n)` built from the two-qubit base case via
/// `|H⟩_n = (|0⟩|H⟩_{n−1} + |1⟩|H̄⟩_{n−1})/√2` and
/// `|H̄⟩_n = (|1⟩|H⟩_{n−1} + |0⟩|H̄⟩_{n−1})/√2`.
fn hadamard_pair(n: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    let h = re(FRAC_1_SQRT_2);
    let z = re(0.0);
    let mut hn = vec![h, z, z, h];
    let mut hbar = vec![z, h, h, z];
    for _ in 2..n {
        let next_h: Vec<Complex64> = hn.iter().chain(&hbar).map(|a| a * h).collect();
        let next_bar: Vec<Complex64> = hbar.iter().chain(&hn).map(|a| a * h).collect();
        hn = next_h;
        hbar = next_bar;
    }
    (hn, hbar)
}

/// Hadamard-rotated GHZ state `U_H^⊗n |GHZ⟩`, built by recurrence.
pub fn make_h(n: usize) -> Result<PureState> {
    require_at_least_two("h", n)?;
    PureState::normalized(hadamard_pair(n).0)
}

/// Companion state of [`make_h`] in the recurrence.
pub fn make_hbar(n: usize) -> Result<PureState> {
    require_at_least_two("hbar", n)?;
    PureState::normalized(hadamard_pair(n).1)
}

/// Haar-distributed 2×2 unitary: Gram–Schmidt on a complex Gaussian matrix,
/// which leaves a positive real diagonal in the implied R factor.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let mut g = || Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let (a0, a1, b0, b1) = (g(), g(), g(), g());
    let n0 = (a0.norm_sqr() + a1.norm_sqr()).sqrt();
    let (q00, q10) = (a0 / n0, a1 / n0);
    let proj = q00.conj() * b0 + q10.conj() * b1;
    let (c0, c1) = (b0 - q00 * proj, b1 - q10 * proj);
    let n1 = (c0.norm_sqr() + c1.norm_sqr()).sqrt();
    ComplexMatrix::from_rows([[q00, c0 / n1], [q10, c1 / n1]])
}

/// Applies an independent Haar unitary to every qubit, seeded deterministically.
pub fn random_local_unitary_state(base: &PureState, seed: u64) -> PureState {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let unitaries: Vec<ComplexMatrix> = (0..base.n_qubits()).map(|_| haar_unitary(&mut rng)).collect();
    base.apply_local(&unitaries).expect("one unitary per qubit")
}

/// Haar-random pure state of `n` qubits.
pub fn random_pure_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PureState> {
    loop {
        let amps: Vec<Complex64> = (0..1usize << n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        match PureState::normalized(amps) {
            Err(Error::InvalidState(msg)) if msg.contains("zero vector") => continue,
            other => return other,
        }
    }
}

/// Named state families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateFamily {
    Ghz,
    W,
    Hs,
    Rob5,
    H,
    HBar,
    File(PathBuf),
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ghz" => StateFamily::Ghz,
            "w" => StateFamily::W,
            "hs" => StateFamily::Hs,
            "rob5" => StateFamily::Rob5,
            "h" => StateFamily::H,
            "hbar" => StateFamily::HBar,
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => StateFamily::File(PathBuf::from(path)),
                _ => {
                    return Err(Error::InvalidConfig(format!(
                        "unknown state family `{s}` (expected ghz, w, hs, rob5, h, hbar or file:<path>)"
                    )))
                }
            },
        })
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateFamily::Ghz => f.write_str("ghz"),
            StateFamily::W => f.write_str("w"),
            StateFamily::Hs => f.write_str("hs"),
            StateFamily::Rob5 => f.write_str("rob5"),
            StateFamily::H => f.write_str("h"),
            StateFamily::HBar => f.write_str("hbar"),
            StateFamily::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A state family together with its qubit count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpec {
    pub family: StateFamily,
    /// Required for every family except `File`, where it is checked if given.
    pub n_qubits: Option<usize>,
}

impl StateSpec {
    pub fn new(family: StateFamily, n_qubits: Option<usize>) -> Self {
        Self { family, n_qubits }
    }

    /// Checks family/size compatibility without building the state.
    pub fn validate(&self) -> Result<()> {
        let need = |n: Option<usize>| {
            n.ok_or_else(|| Error::InvalidConfig(format!("state `{}` needs a qubit count", self.family)))
        };
        match &self.family {
            StateFamily::Hs => match need(self.n_qubits)? {
                4 => Ok(()),
                n => Err(Error::InvalidConfig(format!("hs is a 4-qubit state, got n = {n}"))),
            },
            StateFamily::Rob5 => match need(self.n_qubits)? {
                5 => Ok(()),
                n => Err(Error::InvalidConfig(format!("rob5 is a 5-qubit state, got n = {n}"))),
            },
            StateFamily::File(_) => Ok(()),
            _ => {
                let n = need(self.n_qubits)?;
                require_at_least_two(&self.family.to_string(), n)?;
                if n > crate::linalg::MAX_QUBITS {
                    return Err(Error::InvalidConfig(format!(
                        "n = {n} exceeds the {}-qubit limit",
                        crate::linalg::MAX_QUBITS
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn build(&self) -> Result<PureState> {
        self.validate()?;
        let n = self.n_qubits.unwrap_or(0);
        match &self.family {
            StateFamily::Ghz => make_ghz(n),
            StateFamily::W => make_w(n),
            StateFamily::Hs => Ok(make_hs()),
            StateFamily::Rob5 => Ok(make_rob5()),
            StateFamily::H => make_h(n),
            StateFamily::HBar => make_hbar(n),
            StateFamily::File(path) => {
                let s = load_state(path)?;
                match self.n_qubits {
                    Some(n) if n != s.n_qubits() => Err(Error::InvalidConfig(format!(
                        "{} holds a {}-qubit state but n = {n} was requested",
                        path.display(),
                        s.n_qubits()
                    ))),
                    _ => Ok(s),
                }
            }
        }
    }
}
