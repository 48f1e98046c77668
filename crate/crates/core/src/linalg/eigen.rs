//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a[p,q]` with a diagonal
//! unitary and then applies the real symmetric Jacobi rotation that zeroes it.
//! Sweeps visit every upper-triangular pair in row order and stop once the
//! off-diagonal Frobenius norm drops below `OFF_DIAGONAL_TOL` (scaled by the
//! matrix norm when that exceeds one).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Input asymmetry accepted by the solver.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) together with the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector of `values[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }
}

/// All eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    jacobi(m, false).map(|(values, _)| values)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix, sorted ascending.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigen> {
    let (values, vectors) = jacobi(m, true)?;
    Ok(HermitianEigen {
        values,
        vectors: vectors.expect("vectors requested"),
    })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += a[(i, j)].norm_sqr();
        }
    }
    (2.0 * s).sqrt()
}

fn jacobi(m: &ComplexMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    let defect = m.hermitian_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();
    let mut a = m.clone();
    // Symmetrize so the two triangles stay exact conjugates of one another.
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let tol = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a);
    while off >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| {
        let mut sorted = ComplexMatrix::zeros(n);
        for (k, &src) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, k)] = v[(i, src)];
            }
        }
        sorted
    });
    Ok((values, vectors))
}

/// Applies `A ← G† A G` with `G` chosen so that `A[p,q]` becomes zero.
fn rotate(a: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag < 1e-300 {
        return;
    }
    let n = a.dim();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Pivot phase e^{iθ} = apq / |apq|.
    let phase = apq / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // G = [[c, s], [-s·e^{-iθ}, c·e^{-iθ}]] in the (p, q) plane.
    let gqp = -phase.conj() * s;
    let gqq = phase.conj() * c;

    let data = a.as_mut_slice();
    // Columns: A ← A G.
    for k in 0..n {
        let akp = data[k * n + p];
        let akq = data[k * n + q];
        data[k * n + p] = akp * c + akq * gqp;
        data[k * n + q] = akp * s + akq * gqq;
    }
    // Rows: A ← G† A.
    for k in 0..n {
        let apk = data[p * n + k];
        let aqk = data[q * n + k];
        data[p * n + k] = apk * c + aqk * gqp.conj();
        data[q * n + k] = apk * s + aqk * gqq.conj();
    }
    data[p * n + q] = Complex64::new(0.0, 0.0);
    data[q * n + p] = Complex64::new(0.0, 0.0);
    data[p * n + p].im = 0.0;
    data[q * n + q].im = 0.0;

    if let Some(v) = v {
        let vd = v.as_mut_slice();
        for k in 0..n {
            let vkp = vd[k * n + p];
            let vkq = vd[k * n + q];
            vd[k * n + p] = vkp * c + vkq * gqp;
            vd[k * n + q] = vkp * s + vkq * gqq;
        }
    }
}
