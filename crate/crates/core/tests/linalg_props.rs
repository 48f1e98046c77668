mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use robust_entanglement::entanglement::{all_bipartitions, Bipartition};
use robust_entanglement::linalg::{
    hermitian_eigenvalues, partial_trace, partial_transpose, tensor_product, ComplexMatrix, DensityMatrix,
};

fn matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim).prop_map(move |v| {
        ComplexMatrix::from_row_major(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tensor_product_associative_and_trace_multiplicative(
        a in matrix(2), b in matrix(3), c in matrix(2)
    ) {
        let left = tensor_product(&tensor_product(&a, &b).unwrap(), &c).unwrap();
        let right = tensor_product(&a, &tensor_product(&b, &c).unwrap()).unwrap();
        prop_assert!(left.max_abs_diff(&right) < 1e-15);
        let tr = tensor_product(&a, &b).unwrap().trace();
        prop_assert!((tr - a.trace() * b.trace()).norm() < 1e-12);
    }

    #[test]
    fn tensor_product_bilinear(a in matrix(2), b in matrix(2), c in matrix(2), s in -2.0f64..2.0) {
        let s = Complex64::new(s, 0.5);
        let lhs = tensor_product(&a.scale(s).add(&b), &c).unwrap();
        let rhs = tensor_product(&a, &c).unwrap().scale(s).add(&tensor_product(&b, &c).unwrap());
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }

    #[test]
    fn partial_transpose_involution_and_complement_spectra(seed in 0u64..10_000, n in 2usize..=5) {
        let rho = common::random_mixed(n, seed);
        for cut in all_bipartitions(n).unwrap() {
            let once = DensityMatrix::unchecked(partial_transpose(&rho, cut.qubits()).unwrap()).unwrap();
            let twice = partial_transpose(&once, cut.qubits()).unwrap();
            prop_assert!(twice.max_abs_diff(rho.matrix()) <= 1e-15);
            prop_assert!(once.matrix().hermitian_defect() < 1e-15);
            prop_assert!((once.trace() - rho.trace()).norm() < 1e-14);

            let a = hermitian_eigenvalues(once.matrix()).unwrap();
            let b = hermitian_eigenvalues(&partial_transpose(&rho, &cut.complement()).unwrap()).unwrap();
            let gap = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            prop_assert!(gap < 1e-10, "spectra differ by {gap}");
        }
    }

    #[test]
    fn partial_trace_yields_density_matrices(seed in 0u64..10_000, n in 2usize..=4, mask in 1usize..15) {
        let rho = common::random_mixed(n, seed);
        let keep: Vec<usize> = (0..n).filter(|q| mask & (1 << q) != 0).collect();
        prop_assume!(!keep.is_empty());
        let r = partial_trace(&rho, &keep).unwrap();
        prop_assert_eq!(r.n_qubits(), keep.len());
        prop_assert!(r.validate().is_ok());
    }
}

#[test]
fn eigenvalue_sums_on_density_matrices() {
    for n in 2..=6 {
        let rho = common::random_mixed(n, n as u64);
        let ev = hermitian_eigenvalues(rho.matrix()).unwrap();
        assert!((ev.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        assert!((ev.iter().map(|x| x * x).sum::<f64>() - rho.purity()).abs() < 1e-9);
        assert!(ev[0] > -1e-10);
    }
}

#[test]
fn seven_qubit_matrices_diagonalize() {
    let rho = common::random_mixed(7, 3);
    let cut = Bipartition::new(7, &[0, 3, 5]).unwrap();
    let pt = partial_transpose(&rho, cut.qubits()).unwrap();
    let ev = hermitian_eigenvalues(&pt).unwrap();
    assert_eq!(ev.len(), 128);
    assert!((ev.iter().sum::<f64>() - 1.0).abs() < 1e-10);
}
