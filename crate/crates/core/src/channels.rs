//! The five single-qubit decoherence channels and their action on every
//! qubit of a register, each qubit coupled to its own environment.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::density::accumulate_conjugation;
use crate::linalg::{pauli, ComplexMatrix, DensityMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChannelKind {
    PhaseDamping,
    Depolarizing,
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 5] = [
        ChannelKind::PhaseDamping,
        ChannelKind::Depolarizing,
        ChannelKind::BitFlip,
        ChannelKind::PhaseFlip,
        ChannelKind::BitPhaseFlip,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::PhaseDamping => "pd",
            ChannelKind::Depolarizing => "dep",
            ChannelKind::BitFlip => "bf",
            ChannelKind::PhaseFlip => "pf",
            ChannelKind::BitPhaseFlip => "bpf",
        }
    }

    pub fn at(self, p: f64) -> Result<NoiseChannel> {
        NoiseChannel::new(self, p)
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown channel `{s}` (expected pd, dep, bf, pf or bpf)")))
    }
}

/// A channel kind at a fixed noise strength `p ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseChannel {
    kind: ChannelKind,
    p: f64,
}

impl NoiseChannel {
    pub fn new(kind: ChannelKind, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidStrength(p));
        }
        Ok(Self { kind, p })
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Single-qubit Kraus operators.
    ///
    /// Depolarizing uses weight `p' = 3p/4` on the Pauli terms, which makes the
    /// Kraus sum equal to `ρ ↦ (p/2) I + (1 − p) ρ`.
    pub fn kraus_operators(&self) -> Vec<ComplexMatrix> {
        let p = self.p;
        let re = |x: f64| Complex64::new(x, 0.0);
        match self.kind {
            ChannelKind::PhaseDamping => vec![
                ComplexMatrix::from_diagonal(&[re(1.0), re((1.0 - p).sqrt())]),
                ComplexMatrix::from_diagonal(&[re(0.0), re(p.sqrt())]),
            ],
            ChannelKind::Depolarizing => {
                let pp = 0.75 * p;
                let w = re((pp / 3.0).sqrt());
                vec![
                    pauli::identity().scale(re((1.0 - pp).sqrt())),
                    pauli::x().scale(w),
                    pauli::y().scale(w),
                    pauli::z().scale(w),
                ]
            }
            ChannelKind::BitFlip | ChannelKind::PhaseFlip | ChannelKind::BitPhaseFlip => {
                let sigma = match self.kind {
                    ChannelKind::BitFlip => pauli::x(),
                    ChannelKind::PhaseFlip => pauli::z(),
                    _ => pauli::y(),
                };
                vec![
                    pauli::identity().scale(re((1.0 - p / 2.0).sqrt())),
                    sigma.scale(re((p / 2.0).sqrt())),
                ]
            }
        }
    }

    /// Applies the channel to one qubit of `rho`.
    pub fn apply_single(&self, rho: &DensityMatrix, qubit: usize) -> Result<DensityMatrix> {
        let n = rho.n_qubits();
        if qubit >= n {
            return Err(Error::QubitOutOfRange { qubit, n_qubits: n });
        }
        Ok(self.apply_with_kraus(&self.kraus_operators(), rho.matrix(), qubit, n))
    }

    /// Applies the channel independently to every qubit, in order 0…N−1.
    pub fn apply_all(&self, rho: &DensityMatrix) -> DensityMatrix {
        let order: Vec<usize> = (0..rho.n_qubits()).collect();
        self.apply_in_order(rho, &order)
            .expect("qubit order is in range by construction")
    }

    /// Applies the channel once to each listed qubit, in the listed order.
    pub fn apply_in_order(&self, rho: &DensityMatrix, order: &[usize]) -> Result<DensityMatrix> {
        let n = rho.n_qubits();
        if let Some(&q) = order.iter().find(|&&q| q >= n) {
            return Err(Error::QubitOutOfRange { qubit: q, n_qubits: n });
        }
        if self.p == 0.0 {
            return Ok(rho.clone());
        }
        let kraus = self.kraus_operators();
        let mut current = rho.clone();
        for &q in order {
            current = self.apply_with_kraus(&kraus, current.matrix(), q, n);
        }
        Ok(current)
    }

    fn apply_with_kraus(&self, kraus: &[ComplexMatrix], m: &ComplexMatrix, qubit: usize, n: usize) -> DensityMatrix {
        let mut out = ComplexMatrix::zeros(m.dim());
        for k in kraus {
            accumulate_conjugation(&mut out, m, k, qubit, n);
        }
        DensityMatrix::unchecked(out).expect("dimension preserved")
    }
}

impl fmt::Display for NoiseChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={})", self.kind, self.p)
    }
}
