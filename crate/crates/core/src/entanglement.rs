//! Bipartitions of a qubit register and the negativity-based multipartite
//! entanglement measure.
//!
//! For each cut size `m = 1..=⌊N/2⌋` the measure averages the negativity over
//! all non-equivalent `m : N−m` cuts, then averages those `⌊N/2⌋` class means.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::density::partial_transpose_mask;
use crate::linalg::{hermitian_eigenvalues, qubit_mask, DensityMatrix};

/// Negativities below this are reported as exactly zero.
pub const ZERO_CLAMP: f64 = 1e-10;

/// One side of a cut `A : complement(A)`, stored in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n_qubits: usize,
    subset: Vec<usize>,
}

impl Bipartition {
    /// Accepts either side of the cut and stores the canonical smaller side
    /// (for balanced cuts, the side containing qubit 0).
    pub fn new(n_qubits: usize, qubits: &[usize]) -> Result<Self> {
        let mut subset = qubits.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if subset.len() != qubits.len() {
            return Err(Error::InvalidSubset("repeated qubit index".into()));
        }
        if let Some(&q) = subset.iter().find(|&&q| q >= n_qubits) {
            return Err(Error::QubitOutOfRange { qubit: q, n_qubits });
        }
        if subset.is_empty() || subset.len() == n_qubits {
            return Err(Error::InvalidSubset(format!(
                "cut of size {} is degenerate for {n_qubits} qubits",
                subset.len()
            )));
        }
        let m = subset.len();
        if 2 * m > n_qubits || (2 * m == n_qubits && subset[0] != 0) {
            subset = (0..n_qubits).filter(|q| !subset.contains(q)).collect();
        }
        Ok(Self { n_qubits, subset })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn qubits(&self) -> &[usize] {
        &self.subset
    }

    /// Size `m` of the canonical (smaller) side.
    pub fn size(&self) -> usize {
        self.subset.len()
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..self.n_qubits).filter(|q| !self.subset.contains(q)).collect()
    }

    pub(crate) fn mask(&self) -> usize {
        self.subset.iter().fold(0, |acc, &q| acc | qubit_mask(q, self.n_qubits))
    }

    /// Label used in CSV headers, e.g. `0-2`.
    pub fn label(&self) -> String {
        self.subset.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("-")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}:{{", self.label())?;
        let rest: Vec<String> = self.complement().iter().map(|q| q.to_string()).collect();
        write!(f, "{}}}", rest.join("-"))
    }
}

/// Non-equivalent `m : n−m` cuts in lexicographic order.
pub fn enumerate_bipartitions(n: usize, m: usize) -> Result<Vec<Bipartition>> {
    if n < 2 || m < 1 || m > n / 2 {
        return Err(Error::InvalidConfig(format!(
            "cut size m = {m} outside [1, {}] for {n} qubits",
            n / 2
        )));
    }
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..m).collect();
    loop {
        if 2 * m != n || combo[0] == 0 {
            out.push(Bipartition {
                n_qubits: n,
                subset: combo.clone(),
            });
        }
        // Advance to the next m-combination of 0..n.
        let Some(i) = (0..m).rev().find(|&i| combo[i] < n - m + i) else {
            break;
        };
        combo[i] += 1;
        for j in (i + 1)..m {
            combo[j] = combo[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Every non-equivalent cut, grouped by `m` ascending.
pub fn all_bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    let mut out = Vec::new();
    for m in 1..=n / 2 {
        out.extend(enumerate_bipartitions(n, m)?);
    }
    Ok(out)
}

/// Total number of non-equivalent cuts, `2^(n−1) − 1`.
pub fn n_cuts(n: usize) -> u64 {
    assert!((1..=64).contains(&n));
    (1u64 << (n - 1)) - 1
}

/// `(‖ρ^{T_A}‖₁ − 1)/2`, i.e. the summed magnitude of the negative eigenvalues
/// of the partial transpose.
pub fn negativity(rho: &DensityMatrix, cut: &Bipartition) -> Result<f64> {
    if cut.n_qubits() != rho.n_qubits() {
        return Err(Error::DimensionMismatch {
            expected: rho.n_qubits(),
            actual: cut.n_qubits(),
        });
    }
    let pt = partial_transpose_mask(rho.matrix(), cut.mask());
    let eigs = hermitian_eigenvalues(&pt)?;
    let neg: f64 = eigs.iter().filter(|&&x| x < 0.0).map(|x| -x).sum();
    Ok(if neg < ZERO_CLAMP { 0.0 } else { neg })
}

/// Per-class and global averaged negativities of one state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementProfile {
    /// `E^(m)` for `m = 1..=⌊N/2⌋` (index `m − 1`).
    pub per_m: Vec<f64>,
    /// Mean of `per_m`.
    pub global: f64,
    /// Every cut with its negativity, in `all_bipartitions` order.
    pub per_cut: Option<Vec<(Bipartition, f64)>>,
}

impl EntanglementProfile {
    /// Builds the two-stage average from per-cut values in `all_bipartitions` order.
    pub fn from_cuts(n: usize, cuts: Vec<(Bipartition, f64)>, keep_cuts: bool) -> Self {
        let classes = n / 2;
        let mut sums = vec![0.0; classes];
        let mut counts = vec![0usize; classes];
        for (cut, value) in &cuts {
            sums[cut.size() - 1] += value;
            counts[cut.size() - 1] += 1;
        }
        let per_m: Vec<f64> = sums.iter().zip(&counts).map(|(s, &c)| s / c as f64).collect();
        let global = per_m.iter().sum::<f64>() / classes as f64;
        Self {
            per_m,
            global,
            per_cut: keep_cuts.then_some(cuts),
        }
    }

    /// Flat mean over all cuts (biased towards balanced cuts); needs `per_cut`.
    pub fn flat_average(&self) -> Option<f64> {
        self.per_cut
            .as_ref()
            .map(|c| c.iter().map(|(_, v)| v).sum::<f64>() / c.len() as f64)
    }
}

/// Computes `E^(m)` for every class and their mean. Per-cut values are
/// computed in parallel and retained when `keep_cuts` is set.
pub fn entanglement_profile(rho: &DensityMatrix, keep_cuts: bool) -> Result<EntanglementProfile> {
    let n = rho.n_qubits();
    if n < 2 {
        return Err(Error::InvalidConfig(
            "entanglement profile needs at least 2 qubits".into(),
        ));
    }
    let cuts = all_bipartitions(n)?;
    let values = cuts
        .par_iter()
        .map(|cut| negativity(rho, cut))
        .collect::<Result<Vec<f64>>>()?;
    let pairs = cuts.into_iter().zip(values).collect();
    Ok(EntanglementProfile::from_cuts(n, pairs, keep_cuts))
}
