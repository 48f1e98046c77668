mod common;

use num_complex::Complex64;
use robust_entanglement::channels::ChannelKind;
use robust_entanglement::linalg::{ComplexMatrix, DensityMatrix};
use robust_entanglement::states::make_ghz;

fn grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

#[test]
fn trace_preserved_for_every_channel_and_strength() {
    let rho = common::random_mixed(3, 1);
    for kind in ChannelKind::ALL {
        for p in grid() {
            let out = kind.at(p).unwrap().apply_all(&rho);
            assert!((out.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-12, "{kind} p={p}");
        }
    }
}

#[test]
fn outputs_stay_positive_semidefinite() {
    for kind in ChannelKind::ALL {
        let ch = kind.at(0.37).unwrap();
        for (i, s) in common::random_states(3, 100, 40 + kind as u64).iter().enumerate() {
            let out = ch.apply_all(&s.density_matrix());
            assert!(out.validate().is_ok(), "{kind} sample {i}");
        }
    }
}

#[test]
fn noiseless_channels_leave_state_untouched() {
    let rho = common::random_mixed(4, 9);
    for kind in ChannelKind::ALL {
        let out = kind.at(0.0).unwrap().apply_all(&rho);
        assert!(out.matrix().max_abs_diff(rho.matrix()) <= 1e-14);
    }
}

#[test]
fn qubit_order_does_not_matter() {
    let rho = common::random_mixed(4, 2);
    for kind in ChannelKind::ALL {
        let ch = kind.at(0.55).unwrap();
        let forward = ch.apply_all(&rho);
        for order in [[3, 2, 1, 0], [1, 3, 0, 2], [2, 0, 3, 1]] {
            let other = ch.apply_in_order(&rho, &order).unwrap();
            assert!(other.matrix().max_abs_diff(forward.matrix()) < 1e-12);
        }
    }
}

#[test]
fn sequential_application_equals_kraus_string_sum() {
    for n in 1..=3 {
        let rho = common::random_mixed(n.max(1), 30 + n as u64);
        for kind in ChannelKind::ALL {
            for p in [0.2, 0.75, 1.0] {
                let ch = kind.at(p).unwrap();
                let oracle = common::brute_force_channel(&ch, &rho);
                assert!(
                    ch.apply_all(&rho).matrix().max_abs_diff(&oracle) < 1e-12,
                    "{kind} n={n}"
                );
            }
        }
    }
}

#[test]
fn depolarizing_matches_white_noise_mixture() {
    for n in 1..=4 {
        let rho = common::random_mixed(n, 70 + n as u64);
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let kraus = ChannelKind::Depolarizing.at(p).unwrap().apply_all(&rho);
            let closed = common::depolarizing_closed_form(p, &rho);
            assert!(kraus.matrix().max_abs_diff(&closed) < 1e-12, "n={n} p={p}");
        }
    }
}

#[test]
fn depolarizing_commutes_with_local_unitaries() {
    let rho = common::random_mixed(3, 5);
    for seed in 0..10 {
        let us = common::random_local_unitaries(3, seed);
        let ch = ChannelKind::Depolarizing.at(0.4).unwrap();
        let a = ch.apply_all(&rho.conjugate_local(&us).unwrap());
        let b = ch.apply_all(&rho).conjugate_local(&us).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-10);
    }
}

#[test]
fn full_depolarizing_of_ghz3_is_maximally_mixed() {
    let out = ChannelKind::Depolarizing
        .at(1.0)
        .unwrap()
        .apply_all(&make_ghz(3).unwrap().density_matrix());
    let mixed = DensityMatrix::maximally_mixed(3).unwrap();
    assert!(out.matrix().max_abs_diff(mixed.matrix()) < 1e-15);
}

#[test]
fn phase_damping_shrinks_ghz_corner_coherence() {
    for n in 2..=5 {
        let ghz = make_ghz(n).unwrap().density_matrix();
        let last = (1 << n) - 1;
        for p in [0.1, 0.5, 0.9] {
            let ch = ChannelKind::PhaseDamping.at(p).unwrap();
            let out = ch.apply_all(&ghz);
            let expect = 0.5 * (1.0f64 - p).powf(n as f64 / 2.0);
            assert!((out.matrix()[(0, last)].re - expect).abs() < 1e-14);
            if n <= 3 {
                let oracle = common::brute_force_channel(&ch, &ghz);
                assert!((oracle[(0, last)].re - expect).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn single_qubit_channel_embeds_in_register() {
    // Bit flip on qubit 1 of |000⟩ moves weight p/2 onto |010⟩.
    let rho = robust_entanglement::linalg::PureState::basis(3, 0)
        .unwrap()
        .density_matrix();
    let out = ChannelKind::BitFlip.at(0.6).unwrap().apply_single(&rho, 1).unwrap();
    let mut expect = ComplexMatrix::zeros(8);
    expect[(0, 0)] = Complex64::new(0.7, 0.0);
    expect[(2, 2)] = Complex64::new(0.3, 0.0);
    assert!(out.matrix().max_abs_diff(&expect) < 1e-15);
}
