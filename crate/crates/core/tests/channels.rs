use num_complex::Complex64;
use proptest::prelude::*;
use switch_thermo::channels::{
    apply_sequential, gad_kraus, ground_state, switch_apply, switch_kraus,
    switch_output_closed_form, thermal_state, BathSpec, KrausChannel, ProbeSpec, SwitchConfig,
};
use switch_thermo::matcore::{hermitian_eig, partial_trace_control, partial_trace_probe, tensor};
use switch_thermo::ComplexMatrix;

const GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn tenths() -> impl Iterator<Item = f64> {
    (0..=10).map(|i| i as f64 / 10.0)
}

/// Arbitrary qubit state from Bloch coordinates, clipped into the ball.
fn bloch_state(x: f64, y: f64, z: f64) -> ComplexMatrix {
    let r = (x * x + y * y + z * z).sqrt();
    let s = if r > 1.0 { 1.0 / r } else { 1.0 };
    let (x, y, z) = (x * s, y * s, z * s);
    ComplexMatrix::new(
        2,
        2,
        vec![
            Complex64::new(0.5 * (1.0 + z), 0.0),
            Complex64::new(0.5 * x, -0.5 * y),
            Complex64::new(0.5 * x, 0.5 * y),
            Complex64::new(0.5 * (1.0 - z), 0.0),
        ],
    )
    .unwrap()
}

/// Independent λ = 1 oracle for arbitrary input: the control-diagonal blocks
/// are `α τ` and `(1−α) τ` with `τ = diag(p, 1−p)`, and the control coherence
/// block is `X_ab = w_a w_b ρ_ab` with `w = (p, 1−p)`.
fn full_damping_oracle(rho: &ComplexMatrix, alpha: f64, p: f64) -> ComplexMatrix {
    let w = [p, 1.0 - p];
    let coh = (alpha * (1.0 - alpha)).sqrt();
    let mut out = ComplexMatrix::zeros(4, 4);
    for a in 0..2 {
        out[(2 * a, 2 * a)] = Complex64::new(alpha * w[a], 0.0);
        out[(2 * a + 1, 2 * a + 1)] = Complex64::new((1.0 - alpha) * w[a], 0.0);
        for b in 0..2 {
            let x = rho[(a, b)] * (w[a] * w[b] * coh);
            out[(2 * a, 2 * b + 1)] = x;
            out[(2 * b + 1, 2 * a)] = x.conj();
        }
    }
    out
}

#[test]
fn kraus_completeness_on_grid() {
    for &p in &GRID {
        for &lambda in &GRID {
            let ch = KrausChannel::generalized_amplitude_damping(p, lambda).unwrap();
            assert!(ch.completeness_defect() < 1e-12, "K at p={p}, λ={lambda}");
            let w = switch_kraus(&ch);
            assert_eq!(w.operators().len(), 16);
            assert!(w.completeness_defect() < 1e-12, "W at p={p}, λ={lambda}");
        }
    }
}

#[test]
fn switch_output_is_a_state_on_grid() {
    let inputs = [
        ground_state(),
        bloch_state(0.3, -0.4, 0.2),
        bloch_state(0.0, 0.0, -1.0),
    ];
    for &p in &GRID {
        for &lambda in &GRID {
            let ch = KrausChannel::generalized_amplitude_damping(p, lambda).unwrap();
            for &alpha in &GRID {
                let control = SwitchConfig::new(alpha).unwrap();
                for rho in &inputs {
                    let out = switch_apply(&ch, rho, &control).unwrap();
                    assert!((out.trace().re - 1.0).abs() < 1e-12);
                    assert!(out.max_asymmetry() < 1e-12);
                    assert!(hermitian_eig(&out).unwrap().eigenvalues[0] >= -1e-12);
                }
            }
        }
    }
}

#[test]
fn full_damping_matches_closed_form() {
    for alpha in tenths() {
        let control = SwitchConfig::new(alpha).unwrap();
        for p in tenths() {
            let ch = KrausChannel::generalized_amplitude_damping(p, 1.0).unwrap();
            let brute = switch_apply(&ch, &ground_state(), &control).unwrap();
            let closed = switch_output_closed_form(&control, p);
            assert!(brute.max_abs_diff(&closed) < 1e-12, "α={alpha}, p={p}");
        }
    }
}

#[test]
fn full_damping_general_input_matches_oracle() {
    let inputs = [
        ground_state(),
        bloch_state(0.0, 0.0, -1.0),
        bloch_state(0.6, 0.3, -0.1),
        ComplexMatrix::identity(2).scale(0.5),
    ];
    for rho in &inputs {
        for alpha in tenths() {
            let control = SwitchConfig::new(alpha).unwrap();
            for p in tenths() {
                let ch = KrausChannel::generalized_amplitude_damping(p, 1.0).unwrap();
                let brute = switch_apply(&ch, rho, &control).unwrap();
                assert!(brute.max_abs_diff(&full_damping_oracle(rho, alpha, p)) < 1e-12);
            }
        }
    }
}

#[test]
fn control_trace_recovers_thermal_state() {
    let probe = ProbeSpec::new(1.0).unwrap();
    for beta in [0.0, 0.3, 1.0, 4.0] {
        let bath = BathSpec::thermalizing(beta).unwrap();
        let ch = gad_kraus(&probe, &bath);
        let thermal = thermal_state(&probe, beta);
        for alpha in tenths() {
            let control = SwitchConfig::new(alpha).unwrap();
            for rho in [ground_state(), bloch_state(-0.2, 0.5, 0.4)] {
                let out = switch_apply(&ch, &rho, &control).unwrap();
                let reduced = partial_trace_control(&out, 2, 2).unwrap();
                assert!(reduced.max_abs_diff(&thermal) < 1e-12);
            }
        }
    }
}

#[test]
fn definite_order_reduces_to_sequential() {
    for &p in &GRID {
        for &lambda in &GRID {
            let ch = KrausChannel::generalized_amplitude_damping(p, lambda).unwrap();
            let rho = bloch_state(0.2, 0.1, -0.3);
            let seq = apply_sequential(&ch, &rho).unwrap();
            for alpha in [0.0, 1.0] {
                let out = switch_apply(&ch, &rho, &SwitchConfig::new(alpha).unwrap()).unwrap();
                let reduced = partial_trace_control(&out, 2, 2).unwrap();
                assert!(reduced.max_abs_diff(&seq) < 1e-12);
            }
        }
    }
}

#[test]
fn sequential_fixed_points() {
    let probe = ProbeSpec::new(1.3).unwrap();
    let beta = 0.8;
    let thermal = thermal_state(&probe, beta);
    let full = gad_kraus(&probe, &BathSpec::thermalizing(beta).unwrap());
    let out = apply_sequential(&full, &bloch_state(0.5, -0.5, -0.5)).unwrap();
    assert!(out.max_abs_diff(&thermal) < 1e-12);
    for lambda in [0.1, 0.5, 0.9] {
        let ch = gad_kraus(&probe, &BathSpec::new(beta, lambda).unwrap());
        assert!(
            apply_sequential(&ch, &thermal)
                .unwrap()
                .max_abs_diff(&thermal)
                < 1e-12
        );
    }
}

#[test]
fn definite_order_control_state_is_pure() {
    let ch = KrausChannel::generalized_amplitude_damping(0.9, 1.0).unwrap();
    let out = switch_apply(
        &ch,
        &bloch_state(0.1, 0.2, 0.3),
        &SwitchConfig::new(0.0).unwrap(),
    )
    .unwrap();
    let control = partial_trace_probe(&out, 2, 2).unwrap();
    let expected = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]);
    assert!(control.max_abs_diff(&expected) < 1e-15);
}

proptest! {
    #[test]
    fn switch_preserves_trace_and_positivity(
        p in 0.0f64..=1.0,
        lambda in 0.0f64..=1.0,
        alpha in 0.0f64..=1.0,
        x in -1.0f64..1.0,
        y in -1.0f64..1.0,
        z in -1.0f64..1.0,
    ) {
        let ch = KrausChannel::generalized_amplitude_damping(p, lambda).unwrap();
        let out = switch_apply(&ch, &bloch_state(x, y, z), &SwitchConfig::new(alpha).unwrap()).unwrap();
        prop_assert!((out.trace().re - 1.0).abs() < 1e-12);
        prop_assert!(out.max_asymmetry() < 1e-12);
        prop_assert!(hermitian_eig(&out).unwrap().eigenvalues[0] >= -1e-12);
    }

    #[test]
    fn partial_trace_inverts_tensor(
        x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0,
        s0 in 0.0f64..2.0, s1 in 0.0f64..2.0, re in -1.0f64..1.0, im in -1.0f64..1.0,
    ) {
        let rho = bloch_state(x, y, z);
        let sigma = ComplexMatrix::new(2, 2, vec![
            Complex64::new(s0, 0.0), Complex64::new(re, im),
            Complex64::new(re, -im), Complex64::new(s1, 0.0),
        ]).unwrap();
        let reduced = partial_trace_control(&tensor(&rho, &sigma), 2, 2).unwrap();
        prop_assert!(reduced.max_abs_diff(&rho.scale(s0 + s1)) < 1e-12);
    }
}
