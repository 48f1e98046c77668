//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use robust_entanglement::channels::NoiseChannel;
use robust_entanglement::entanglement::Bipartition;
use robust_entanglement::linalg::{
    hermitian_eigenvalues, partial_trace, tensor_product, ComplexMatrix, DensityMatrix, PureState,
};
use robust_entanglement::states::{
    haar_unitary, make_ghz, make_h, make_hbar, make_hs, make_rob5, make_w, random_pure_state,
};

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn random_states(n: usize, count: usize, seed: u64) -> Vec<PureState> {
    let mut r = rng(seed);
    (0..count).map(|_| random_pure_state(n, &mut r).unwrap()).collect()
}

/// Random mixed state: a convex mixture of a few random pure states.
pub fn random_mixed(n: usize, seed: u64) -> DensityMatrix {
    let states = random_states(n, 3, seed);
    let weights = [0.5, 0.3, 0.2];
    let mut m = ComplexMatrix::zeros(1 << n);
    for (s, w) in states.iter().zip(weights) {
        m = m.add(&s.density_matrix().matrix().scale(Complex64::new(w, 0.0)));
    }
    DensityMatrix::new(m).unwrap()
}

pub fn random_local_unitaries(n: usize, seed: u64) -> Vec<ComplexMatrix> {
    let mut r = rng(seed);
    (0..n).map(|_| haar_unitary(&mut r)).collect()
}

/// Named catalog states for a given qubit count.
pub fn catalog(n: usize) -> Vec<(String, PureState)> {
    let mut out = vec![
        (format!("ghz{n}"), make_ghz(n).unwrap()),
        (format!("w{n}"), make_w(n).unwrap()),
        (format!("h{n}"), make_h(n).unwrap()),
        (format!("hbar{n}"), make_hbar(n).unwrap()),
    ];
    if n == 4 {
        out.push(("hs".into(), make_hs()));
    }
    if n == 5 {
        out.push(("rob5".into(), make_rob5()));
    }
    out
}

/// Pure-state negativity from the Schmidt coefficients of the reduced state,
/// `((Σ √λ)² − 1)/2`.
pub fn schmidt_negativity(state: &PureState, cut: &Bipartition) -> f64 {
    let reduced = partial_trace(&state.density_matrix(), cut.qubits()).unwrap();
    let ev = hermitian_eigenvalues(reduced.matrix()).unwrap();
    let s: f64 = ev.iter().map(|l| l.max(0.0).sqrt()).sum();
    (s * s - 1.0) / 2.0
}

/// The full product-operator sum over every Kraus string on `n` qubits.
pub fn brute_force_channel(channel: &NoiseChannel, rho: &DensityMatrix) -> ComplexMatrix {
    let kraus = channel.kraus_operators();
    let n = rho.n_qubits();
    let m = kraus.len();
    let mut out = ComplexMatrix::zeros(rho.dim());
    for string in 0..m.pow(n as u32) {
        let mut idx = string;
        let mut op = ComplexMatrix::identity(1);
        for _ in 0..n {
            op = tensor_product(&op, &kraus[idx % m]).unwrap();
            idx /= m;
        }
        // The string is assembled in reverse qubit order; the sum over all
        // strings is the same.
        out = out.add(&op.matmul(rho.matrix()).matmul(&op.adjoint()));
    }
    out
}

/// Closed form of one-qubit depolarizing, `(p/2) I_q ⊗ Tr_q ρ + (1 − p) ρ`,
/// applied to every qubit.
pub fn depolarizing_closed_form(p: f64, rho: &DensityMatrix) -> ComplexMatrix {
    let n = rho.n_qubits();
    let dim = rho.dim();
    let mut m = rho.matrix().clone();
    for q in 0..n {
        let bit = 1 << (n - 1 - q);
        let mut next = ComplexMatrix::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                let mut v = m[(r, c)] * (1.0 - p);
                if (r & bit) == (c & bit) {
                    let traced = m[(r & !bit, c & !bit)] + m[(r | bit, c | bit)];
                    v += traced * (p / 2.0);
                }
                next[(r, c)] = v;
            }
        }
        m = next;
    }
    m
}

pub fn max_abs(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |a, b| a.max(b.abs()))
}
