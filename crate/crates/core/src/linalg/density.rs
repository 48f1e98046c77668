use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, qubit_mask, ComplexMatrix};

pub const MAX_QUBITS: usize = 12;

const NORM_TOL: f64 = 1e-12;
const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;

fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidState(format!(
            "qubit count {n} outside [1, {MAX_QUBITS}]"
        )))
    }
}

/// Unit-norm amplitude vector over the 2^N computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps amplitudes that must already be normalized to within 1e-12.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = Self::qubits_for_len(amplitudes.len())?;
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!("norm {norm} is not 1")));
        }
        Ok(Self {
            n_qubits: n,
            amplitudes,
        })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = Self::qubits_for_len(amplitudes.len())?;
        let norm = norm(&amplitudes);
        if !(norm.is_finite() && norm > 1e-150) {
            return Err(Error::InvalidState("cannot normalize a zero vector".into()));
        }
        let inv = 1.0 / norm;
        amplitudes.iter_mut().for_each(|a| *a *= inv);
        Ok(Self {
            n_qubits: n,
            amplitudes,
        })
    }

    /// The computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1 << n_qubits;
        if index >= dim {
            return Err(Error::InvalidState(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes: amps,
        })
    }

    fn qubits_for_len(len: usize) -> Result<usize> {
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidState(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let n = len.trailing_zeros() as usize;
        check_qubits(n)?;
        Ok(n)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn fidelity(&self, other: &PureState) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// Applies a 2×2 unitary to one qubit.
    pub fn apply_single_qubit(&self, u: &ComplexMatrix, qubit: usize) -> Result<PureState> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        if u.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: u.dim(),
            });
        }
        let mask = qubit_mask(qubit, self.n_qubits);
        let mut out = self.amplitudes.clone();
        for i in (0..self.dim()).filter(|i| i & mask == 0) {
            let a0 = self.amplitudes[i];
            let a1 = self.amplitudes[i | mask];
            out[i] = u[(0, 0)] * a0 + u[(0, 1)] * a1;
            out[i | mask] = u[(1, 0)] * a0 + u[(1, 1)] * a1;
        }
        Ok(PureState {
            n_qubits: self.n_qubits,
            amplitudes: out,
        })
    }

    /// Applies `unitaries[q]` to every qubit `q`.
    pub fn apply_local(&self, unitaries: &[ComplexMatrix]) -> Result<PureState> {
        if unitaries.len() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                actual: unitaries.len(),
            });
        }
        unitaries
            .iter()
            .enumerate()
            .try_fold(self.clone(), |s, (q, u)| s.apply_single_qubit(u, q))
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        DensityMatrix {
            n_qubits: self.n_qubits,
            matrix: ComplexMatrix::outer(&self.amplitudes),
        }
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian, unit-trace, positive semidefinite operator on N qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates all density-matrix invariants, including positivity.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let rho = Self::unchecked(matrix)?;
        rho.validate()?;
        Ok(rho)
    }

    /// Checks only that the dimension is a power of two.
    pub fn unchecked(matrix: ComplexMatrix) -> Result<Self> {
        let dim = matrix.dim();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidDensityMatrix(format!(
                "dimension {dim} is not a power of two >= 2"
            )));
        }
        let n_qubits = dim.trailing_zeros() as usize;
        check_qubits(n_qubits)?;
        Ok(Self { n_qubits, matrix })
    }

    /// I / 2^N.
    pub fn maximally_mixed(n_qubits: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1 << n_qubits;
        Ok(Self {
            n_qubits,
            matrix: ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0)),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let defect = self.matrix.hermitian_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (defect {defect:e})"
            )));
        }
        let tr = self.matrix.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} != 1")));
        }
        let min = self.min_eigenvalue()?;
        if min < -PSD_TOL {
            return Err(Error::InvalidDensityMatrix(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(hermitian_eigenvalues(&self.matrix)?[0])
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn purity(&self) -> f64 {
        self.matrix.matmul(&self.matrix).trace().re
    }

    /// U ρ U† for a product of single-qubit unitaries, `unitaries[q]` acting on qubit `q`.
    pub fn conjugate_local(&self, unitaries: &[ComplexMatrix]) -> Result<Self> {
        if unitaries.len() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                actual: unitaries.len(),
            });
        }
        let mut m = self.matrix.clone();
        for (q, u) in unitaries.iter().enumerate() {
            m = conjugate_one_qubit(&m, u, q, self.n_qubits);
        }
        Ok(Self {
            n_qubits: self.n_qubits,
            matrix: m,
        })
    }
}

/// (I⊗…⊗K⊗…⊗I) M (I⊗…⊗K⊗…⊗I)†, with K acting on `qubit`.
pub(crate) fn conjugate_one_qubit(m: &ComplexMatrix, k: &ComplexMatrix, qubit: usize, n: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(m.dim());
    accumulate_conjugation(&mut out, m, k, qubit, n);
    out
}

/// out += (K on `qubit`) M (K on `qubit`)†.
pub(crate) fn accumulate_conjugation(
    out: &mut ComplexMatrix,
    m: &ComplexMatrix,
    k: &ComplexMatrix,
    qubit: usize,
    n: usize,
) {
    let dim = m.dim();
    let mask = qubit_mask(qubit, n);
    let (k00, k01, k10, k11) = (k[(0, 0)], k[(0, 1)], k[(1, 0)], k[(1, 1)]);
    let (c00, c01, c10, c11) = (k00.conj(), k01.conj(), k10.conj(), k11.conj());
    let src = m.as_slice();
    let dst = out.as_mut_slice();
    for r in (0..dim).filter(|r| r & mask == 0) {
        let r1 = r | mask;
        for c in (0..dim).filter(|c| c & mask == 0) {
            let c1 = c | mask;
            let m00 = src[r * dim + c];
            let m01 = src[r * dim + c1];
            let m10 = src[r1 * dim + c];
            let m11 = src[r1 * dim + c1];
            // T = K M on the 2×2 block, then T K†.
            let t00 = k00 * m00 + k01 * m10;
            let t01 = k00 * m01 + k01 * m11;
            let t10 = k10 * m00 + k11 * m10;
            let t11 = k10 * m01 + k11 * m11;
            dst[r * dim + c] += t00 * c00 + t01 * c01;
            dst[r * dim + c1] += t00 * c10 + t01 * c11;
            dst[r1 * dim + c] += t10 * c00 + t11 * c01;
            dst[r1 * dim + c1] += t10 * c10 + t11 * c11;
        }
    }
}

fn subset_mask(subset: &[usize], n: usize) -> Result<usize> {
    let mut mask = 0usize;
    for &q in subset {
        if q >= n {
            return Err(Error::QubitOutOfRange { qubit: q, n_qubits: n });
        }
        let bit = qubit_mask(q, n);
        if mask & bit != 0 {
            return Err(Error::InvalidSubset(format!("qubit {q} listed twice")));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Transposes the tensor factors of the qubits in `subset`.
///
/// Entry `(r, c)` of the result is entry `(r', c')` of `rho`, where `r'` and
/// `c'` are `r` and `c` with their bits at the subset positions exchanged.
pub fn partial_transpose(rho: &DensityMatrix, subset: &[usize]) -> Result<ComplexMatrix> {
    let n = rho.n_qubits();
    if subset.is_empty() || subset.len() >= n {
        return Err(Error::InvalidSubset(format!(
            "cut of size {} is degenerate for {n} qubits",
            subset.len()
        )));
    }
    let mask = subset_mask(subset, n)?;
    Ok(partial_transpose_mask(rho.matrix(), mask))
}

pub(crate) fn partial_transpose_mask(m: &ComplexMatrix, mask: usize) -> ComplexMatrix {
    let dim = m.dim();
    let src = m.as_slice();
    let mut out = ComplexMatrix::zeros(dim);
    let dst = out.as_mut_slice();
    for r in 0..dim {
        for c in 0..dim {
            let diff = (r ^ c) & mask;
            dst[r * dim + c] = src[(r ^ diff) * dim + (c ^ diff)];
        }
    }
    out
}

/// Traces out every qubit not in `keep`; kept qubits retain their relative order.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.n_qubits();
    if keep.is_empty() {
        return Err(Error::InvalidSubset("keep set is empty".into()));
    }
    subset_mask(keep, n)?;
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    let traced: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
    let k = kept.len();
    let out_dim = 1 << k;

    // Scatters the bits of `sub` into the positions of `qubits` of a full index.
    let embed = |sub: usize, qubits: &[usize]| -> usize {
        let m = qubits.len();
        qubits.iter().enumerate().fold(0, |acc, (pos, &q)| {
            if sub & (1 << (m - 1 - pos)) != 0 {
                acc | qubit_mask(q, n)
            } else {
                acc
            }
        })
    };

    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(out_dim);
    let env: Vec<usize> = (0..1usize << traced.len()).map(|e| embed(e, &traced)).collect();
    for i in 0..out_dim {
        let ri = embed(i, &kept);
        for j in 0..out_dim {
            let cj = embed(j, &kept);
            out[(i, j)] = env.iter().map(|&e| m[(ri | e, cj | e)]).sum();
        }
    }
    DensityMatrix::unchecked(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigenvalues, tensor_product};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> DensityMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(vec![c(h), c(0.0), c(0.0), c(h)])
            .unwrap()
            .density_matrix()
    }

    fn ghz3() -> DensityMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut a = vec![c(0.0); 8];
        a[0] = c(h);
        a[7] = c(h);
        PureState::new(a).unwrap().density_matrix()
    }

    fn single(m: [[Complex64; 2]; 2]) -> ComplexMatrix {
        ComplexMatrix::from_rows(m)
    }

    #[test]
    fn pt_of_product_factorizes() {
        let a = single([[c(0.7), Complex64::new(0.1, 0.2)], [Complex64::new(0.1, -0.2), c(0.3)]]);
        let b = single([
            [c(0.4), Complex64::new(-0.2, 0.1)],
            [Complex64::new(-0.2, -0.1), c(0.6)],
        ]);
        let rho = DensityMatrix::new(tensor_product(&a, &b).unwrap()).unwrap();
        let pt = partial_transpose(&rho, &[0]).unwrap();
        let expect = tensor_product(&a.transpose(), &b).unwrap();
        assert!(pt.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn pt_fixes_diagonal_matrices() {
        let diag: Vec<Complex64> = [0.1, 0.2, 0.3, 0.05, 0.05, 0.1, 0.1, 0.1].map(c).to_vec();
        let rho = DensityMatrix::new(ComplexMatrix::from_diagonal(&diag)).unwrap();
        for subset in [&[0][..], &[1], &[2], &[0, 2]] {
            assert_eq!(&partial_transpose(&rho, subset).unwrap(), rho.matrix());
        }
    }

    #[test]
    fn pt_bell_spectrum() {
        let ev = hermitian_eigenvalues(&partial_transpose(&bell(), &[0]).unwrap()).unwrap();
        for (a, b) in ev.iter().zip([-0.5, 0.5, 0.5, 0.5]) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn pt_rejects_degenerate_cuts() {
        assert!(partial_transpose(&bell(), &[]).is_err());
        assert!(partial_transpose(&bell(), &[0, 1]).is_err());
        assert!(partial_transpose(&bell(), &[2]).is_err());
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let r = partial_trace(&bell(), &[0]).unwrap();
        assert!(r.matrix().max_abs_diff(&ComplexMatrix::identity(2).scale(c(0.5))) < 1e-15);
    }

    #[test]
    fn product_marginal() {
        let sigma = single([
            [c(0.25), Complex64::new(0.0, 0.3)],
            [Complex64::new(0.0, -0.3), c(0.75)],
        ]);
        let zero = ComplexMatrix::from_diagonal(&[c(1.0), c(0.0)]);
        let rho = DensityMatrix::new(tensor_product(&zero, &sigma).unwrap()).unwrap();
        assert!(partial_trace(&rho, &[1]).unwrap().matrix().max_abs_diff(&sigma) < 1e-15);
        assert!(partial_trace(&rho, &[0]).unwrap().matrix().max_abs_diff(&zero) < 1e-15);
    }

    #[test]
    fn ghz3_two_qubit_marginal() {
        let r = partial_trace(&ghz3(), &[0, 1]).unwrap();
        let expect = ComplexMatrix::from_diagonal(&[c(0.5), c(0.0), c(0.0), c(0.5)]);
        assert!(r.matrix().max_abs_diff(&expect) < 1e-15);
        assert!(partial_trace(&ghz3(), &[]).is_err());
    }

    #[test]
    fn validation_flags_bad_matrices() {
        let mut m = ComplexMatrix::identity(2).scale(c(0.5));
        assert!(DensityMatrix::new(m.clone()).is_ok());
        m[(0, 1)] = c(0.1);
        assert!(DensityMatrix::new(m).is_err());
        let neg = ComplexMatrix::from_diagonal(&[c(1.5), c(-0.5)]);
        assert!(DensityMatrix::new(neg).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn pure_state_checks() {
        assert!(PureState::new(vec![c(1.0), c(1.0)]).is_err());
        assert!(PureState::normalized(vec![c(0.0), c(0.0)]).is_err());
        assert!(PureState::normalized(vec![c(1.0); 3]).is_err());
        let s = PureState::normalized(vec![c(3.0), c(4.0)]).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }
}
