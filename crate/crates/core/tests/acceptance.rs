//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p switch-thermo --test acceptance`.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use switch_thermo::analysis::{
    gain_ratio, gap_objective, golden_section_max, ho_threshold, precision_gain_percent,
    sign_crossings, solve_optimal_gap, tur_bound, tur_consistency, PrecisionQuery,
};
use switch_thermo::channels::{
    ground_population, ground_state, switch_apply, switch_kraus, switch_output_closed_form,
    KrausChannel, ProbeSpec, SwitchConfig,
};
use switch_thermo::matcore::partial_trace_control;
use switch_thermo::qfi::{
    central_difference_of, d_rho_d_beta_switch, kernels, qfi_spectral, ParameterizedState,
};
use switch_thermo::ComplexMatrix;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn probe(gap: f64) -> ProbeSpec {
    ProbeSpec::new(gap).expect("positive gap")
}

fn control(alpha: f64) -> SwitchConfig {
    SwitchConfig::new(alpha).expect("alpha in [0, 1]")
}

/// Switched-qubit closed form transcribed in exponentials of `βε`.
fn switch_qfi_exp(beta: f64, gap: f64, xi: f64) -> f64 {
    let e = (beta * gap).exp();
    gap * gap * ((2.0 + xi) * e.powi(3) + 3.0 * e * e + e) / ((1.0 + e).powi(3) * (1.0 + 2.0 * e))
}

fn c1_optimal_gap_no_switch() -> Check {
    let sol = solve_optimal_gap(0.0).map_err(|e| e.to_string())?;
    let x = sol.x_star();
    ensure((x - 2.399).abs() <= 1e-3, || {
        format!("x* = {x}, expected 2.399 ± 1e-3")
    })?;
    let argmax = golden_section_max(|x| gap_objective(x, 0.0), 0.1, 20.0, 1e-10).x;
    ensure((x - argmax).abs() <= 1e-6, || {
        format!("root {x} vs argmax {argmax}")
    })?;
    Ok(format!(
        "x* = {x:.6}, argmax = {argmax:.6}, residual = {:.1e}",
        sol.root.residual
    ))
}

fn c2_optimal_gap_full_switch() -> Check {
    let sol = solve_optimal_gap(1.0).map_err(|e| e.to_string())?;
    let x = sol.x_star();
    ensure((x - 2.4741).abs() <= 1e-3, || {
        format!("x* = {x}, expected 2.4741 ± 1e-3")
    })?;
    Ok(format!("x* = {x:.6}, argmax = {:.6}", sol.argmax))
}

fn c3_gain_ratio_limits() -> Check {
    let (p, s) = (probe(1.0), control(0.5));
    let high = gain_ratio(1e-8, &p, &s);
    let low = gain_ratio(50.0, &p, &s);
    ensure((high - 7.0 / 6.0).abs() <= 1e-6, || {
        format!("χ(β=1e-8) = {high}")
    })?;
    ensure((low - 1.5).abs() <= 1e-6, || format!("χ(β=50) = {low}"))?;
    let pct_high = precision_gain_percent(high).map_err(|e| e.to_string())?;
    let pct_low = precision_gain_percent(low).map_err(|e| e.to_string())?;
    ensure((pct_high - 8.01).abs() < 5e-3, || {
        format!("high-T gain {pct_high}%")
    })?;
    ensure((pct_low - 22.47).abs() < 5e-3, || {
        format!("low-T gain {pct_low}%")
    })?;
    Ok(format!(
        "χ = {high:.9} / {low:.9}; precision gain {pct_high:.3}% / {pct_low:.3}%"
    ))
}

fn c4_ho_threshold() -> Check {
    let t = ho_threshold(&probe(1.0)).map_err(|e| e.to_string())?;
    ensure((t.t_threshold - 0.4157).abs() <= 1e-3, || {
        format!("T_threshold = {}", t.t_threshold)
    })?;
    ensure((t.x_star - 2.40).abs() <= 5e-2, || {
        format!("x* = {}", t.x_star)
    })?;
    Ok(format!(
        "x* = {:.6}, T_threshold = {:.6}",
        t.x_star, t.t_threshold
    ))
}

const BETAS: [f64; 3] = [0.2, 1.0, 3.0];
const GAPS: [f64; 3] = [0.5, 1.0, 2.0];
const ALPHAS: [f64; 3] = [0.0, 0.25, 0.5];

fn c5_spectral_vs_analytic() -> Check {
    let mut worst: f64 = 0.0;
    for &beta in &BETAS {
        for &gap in &GAPS {
            for &alpha in &ALPHAS {
                let s = control(alpha);
                let ps = ParameterizedState::switch_output(probe(gap), s);
                let spectral = qfi_spectral(&ps, beta).map_err(|e| e.to_string())?.value;
                let oracle = switch_qfi_exp(beta, gap, s.xi());
                let rel = (spectral - oracle).abs() / oracle;
                worst = worst.max(rel);
                ensure(rel <= 1e-8, || {
                    format!("β={beta} ε={gap} α={alpha}: spectral {spectral} vs {oracle}")
                })?;
            }
        }
    }
    Ok(format!("27 points, max relative error {worst:.2e}"))
}

fn c6_channel_correctness() -> Check {
    let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut worst_k: f64 = 0.0;
    let mut worst_w: f64 = 0.0;
    for &p in &grid {
        for &lambda in &grid {
            let ch = KrausChannel::generalized_amplitude_damping(p, lambda)
                .map_err(|e| e.to_string())?;
            worst_k = worst_k.max(ch.completeness_defect());
            worst_w = worst_w.max(switch_kraus(&ch).completeness_defect());
        }
    }
    ensure(worst_k <= 1e-12, || format!("Σ K†K defect {worst_k:e}"))?;
    ensure(worst_w <= 1e-12, || format!("Σ W†W defect {worst_w:e}"))?;

    let mut worst_state: f64 = 0.0;
    for i in 0..=10 {
        let alpha = i as f64 / 10.0;
        for j in 0..=10 {
            let p = j as f64 / 10.0;
            let ch =
                KrausChannel::generalized_amplitude_damping(p, 1.0).map_err(|e| e.to_string())?;
            let brute =
                switch_apply(&ch, &ground_state(), &control(alpha)).map_err(|e| e.to_string())?;
            worst_state =
                worst_state.max(brute.max_abs_diff(&switch_output_closed_form(&control(alpha), p)));
        }
    }
    ensure(worst_state <= 1e-12, || {
        format!("ρ_out deviation {worst_state:e}")
    })?;
    Ok(format!(
        "completeness K {worst_k:.1e}, W {worst_w:.1e}; ρ_out max deviation {worst_state:.1e}"
    ))
}

fn c7_control_trace_invariance() -> Check {
    let mut worst: f64 = 0.0;
    for i in 0..=10 {
        let alpha = i as f64 / 10.0;
        for j in 0..=10 {
            let p = j as f64 / 10.0;
            let ch =
                KrausChannel::generalized_amplitude_damping(p, 1.0).map_err(|e| e.to_string())?;
            let out =
                switch_apply(&ch, &ground_state(), &control(alpha)).map_err(|e| e.to_string())?;
            let reduced = partial_trace_control(&out, 2, 2).map_err(|e| e.to_string())?;
            worst =
                worst.max(reduced.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[p, 1.0 - p])));
        }
    }
    ensure(worst <= 1e-12, || format!("max deviation {worst:e}"))?;
    Ok(format!("121 (α, p) points, max deviation {worst:.1e}"))
}

fn c8_tur_suite() -> Check {
    let p1 = probe(1.0);
    for beta in [0.0, 0.5, 3.0, 50.0] {
        let b = tur_bound(beta, &p1, &control(0.0));
        ensure(b == 1.0, || format!("ξ=0 bound {b} at β={beta}"))?;
    }
    let full = control(0.5);
    let low = tur_bound(50.0, &p1, &full);
    let high = tur_bound(1e-8, &p1, &full);
    let low_formula = 1.0 / (1.0 + full.xi() * 1.0 / 2.0).sqrt();
    let high_formula = 1.0 / (1.0 + full.xi() * 1.0 / 6.0).sqrt();
    ensure((low - low_formula).abs() <= 1e-6, || {
        format!("low-T {low} vs {low_formula}")
    })?;
    ensure((high - high_formula).abs() <= 1e-6, || {
        format!("high-T {high} vs {high_formula}")
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_7e57);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let beta = rng.gen_range(0.05..10.0);
        let gap = rng.gen_range(0.1..5.0);
        let xi = rng.gen_range(0.0..=1.0);
        let query = PrecisionQuery::new(
            1,
            beta,
            probe(gap),
            SwitchConfig::from_xi(xi).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        let r = tur_consistency(&query).map_err(|e| format!("β={beta} ε={gap} ξ={xi}: {e}"))?;
        worst = worst.max(r.relative_error);
    }
    ensure(worst <= 1e-10, || format!("identity error {worst:e}"))?;
    Ok(format!(
        "limits {low:.9} / {high:.9}; identity max relative error {worst:.1e}"
    ))
}

fn c9_derivative_check() -> Check {
    let mut worst: f64 = 0.0;
    for &beta in &BETAS {
        for &gap in &GAPS {
            for &alpha in &ALPHAS {
                let s = control(alpha);
                let analytic = d_rho_d_beta_switch(beta, &probe(gap), &s);
                let fd = central_difference_of(
                    |b| Ok(switch_output_closed_form(&s, ground_population(b, gap))),
                    beta,
                    1e-5,
                )
                .map_err(|e| e.to_string())?;
                worst = worst.max(analytic.max_abs_diff(&fd));
            }
        }
    }
    ensure(worst <= 1e-7, || format!("max deviation {worst:e}"))?;
    Ok(format!("27 points, max deviation {worst:.1e}"))
}

fn c10_figure_ordering() -> Check {
    let threshold = ho_threshold(&probe(1.0))
        .map_err(|e| e.to_string())?
        .t_threshold;
    let temps: Vec<f64> = (0..=2950).map(|i| 0.05 + i as f64 * 1e-3).collect();
    let mut diff = Vec::with_capacity(temps.len());
    for &t in &temps {
        let beta = 1.0 / t;
        let f_switch = kernels::beta_to_temperature(kernels::switch_qfi(beta, 1.0, 1.0), t);
        let f_plain = kernels::beta_to_temperature(kernels::qubit_qfi(beta, 1.0), t);
        let f_ho = kernels::beta_to_temperature(kernels::ho_qfi(beta, 1.0), t);
        ensure(f_switch >= f_plain, || {
            format!("F_switch < F_noswitch at T = {t}")
        })?;
        diff.push(f_switch - f_ho);
    }
    let crossings = sign_crossings(&temps, &diff);
    ensure(crossings.len() == 1, || {
        format!("{} sign changes", crossings.len())
    })?;
    let t_cross = crossings[0];
    ensure((t_cross - threshold).abs() <= 2e-3, || {
        format!("crossing at T = {t_cross}, threshold {threshold}")
    })?;
    Ok(format!(
        "{} points, single crossing at T = {t_cross:.5}",
        temps.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 optimal gap, no switch", c1_optimal_gap_no_switch),
        ("2 optimal gap, full switch", c2_optimal_gap_full_switch),
        ("3 gain-ratio limits", c3_gain_ratio_limits),
        ("4 oscillator threshold", c4_ho_threshold),
        ("5 spectral vs closed-form QFI", c5_spectral_vs_analytic),
        ("6 channel correctness", c6_channel_correctness),
        ("7 control-trace invariance", c7_control_trace_invariance),
        ("8 uncertainty relation suite", c8_tur_suite),
        ("9 derivative check", c9_derivative_check),
        ("10 three-probe ordering", c10_figure_ordering),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
