//! Quantum Fisher information for the inverse temperature.
//!
//! Two independent routes are provided:
//!
//! - [`qfi_spectral`] evaluates the QFI of any [`ParameterizedState`] from the
//!   eigendecomposition of `ρ` and the derivative `∂_β ρ`.
//! - [`qfi_switch_analytic`], [`qfi_qubit_noswitch`] and [`qfi_ho`] are closed
//!   forms for the switched qubit at `λ = 1`, the plain thermal qubit and the
//!   thermal harmonic oscillator.
//!
//! [`to_temperature_parameter`] converts a `β`-QFI to a `T`-QFI.

use std::fmt;

use serde::Serialize;

use crate::channels::{
    apply_sequential, ground_population, ground_population_derivative, switch_apply,
    switch_output_closed_form, KrausChannel, ProbeSpec, SwitchConfig,
};
use crate::error::{Error, Result};
use crate::matcore::{hermitian_eig, ComplexMatrix, HERMITIAN_TOL, PSD_TOL, TRACE_TOL};

/// Pairs with `p_m + p_n` at or below this are excluded from the QFI sums.
pub const SUPPORT_TOL: f64 = 1e-12;
/// Eigenvalues at or below this count as zero in the population term.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-15;
/// Largest `|∂_β p_k|` tolerated on a zero eigenvalue.
pub const ZERO_EIGENVALUE_SLOPE_TOL: f64 = 1e-12;
/// Eigenvalues closer than this are treated as one degenerate level.
pub const DEGENERACY_TOL: f64 = 1e-10;
/// Negative QFI values down to `−NEGATIVITY_TOL` clamp to zero.
pub const NEGATIVITY_TOL: f64 = 1e-10;
/// Relative agreement required between the two spectral routes.
pub const ROUTE_AGREEMENT_TOL: f64 = 1e-8;

/// Scalar closed forms, written in `u = e^{−βε}` so that every `β ≥ 0`,
/// including `β = ∞`, evaluates without overflow.
///
/// These take a raw gap (any `ε ≥ 0`) so they can be used inside root finders
/// and sweeps.
pub mod kernels {
    /// `F_β` of the switched qubit at `λ = 1`:
    /// `ε² u((2+ξ) + 3u + u²) / ((1+u)³(2+u))`, equivalently
    /// `ε²((2+ξ)e^{3βε} + 3e^{2βε} + e^{βε}) / ((1+e^{βε})³(1+2e^{βε}))`.
    pub fn switch_qfi(beta: f64, gap: f64, xi: f64) -> f64 {
        if gap == 0.0 {
            return 0.0;
        }
        let u = (-beta * gap).exp();
        gap * gap * u * ((2.0 + xi) + 3.0 * u + u * u) / ((1.0 + u).powi(3) * (2.0 + u))
    }

    /// `F_β` of a thermal qubit: `ε² e^{βε}/(1+e^{βε})² = ΔH²`.
    pub fn qubit_qfi(beta: f64, gap: f64) -> f64 {
        if gap == 0.0 {
            return 0.0;
        }
        let u = (-beta * gap).exp();
        gap * gap * u / ((1.0 + u) * (1.0 + u))
    }

    /// `F_β` of a thermal harmonic oscillator: `ε² e^{−βε}/(1−e^{−βε})²`.
    /// Infinite at `βε = 0`.
    pub fn ho_qfi(beta: f64, gap: f64) -> f64 {
        let x = beta * gap;
        let one_minus_u = -(-x).exp_m1();
        gap * gap * (-x).exp() / (one_minus_u * one_minus_u)
    }

    /// `F_T = F_β / T⁴`.
    pub fn beta_to_temperature(f_beta: f64, temperature: f64) -> f64 {
        f_beta / temperature.powi(4)
    }
}

/// Which parameter a QFI value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Beta,
    Temperature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Analytic,
    Spectral,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Analytic => f.write_str("analytic"),
            Method::Spectral => f.write_str("spectral"),
        }
    }
}

/// How `∂_β ρ` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeMethod {
    Analytic,
    CentralDifference { step: f64 },
}

/// Parameter record attached to a [`QfiResult`].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct QfiInputs {
    pub beta: f64,
    pub temperature: Option<f64>,
    pub gap: Option<f64>,
    pub xi: Option<f64>,
    pub lambda: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QfiResult {
    pub value: f64,
    pub parameter: Parameter,
    pub method: Method,
    pub derivative_method: DerivativeMethod,
    pub inputs: QfiInputs,
}

type StateFn = Box<dyn Fn(f64) -> Result<ComplexMatrix> + Send + Sync>;

/// A family of density matrices `β ↦ ρ(β)`, optionally with its analytic
/// derivative.
pub struct ParameterizedState {
    state: StateFn,
    derivative: Option<StateFn>,
    gap: Option<f64>,
    xi: Option<f64>,
    lambda: Option<f64>,
}

impl fmt::Debug for ParameterizedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParameterizedState")
            .field("analytic_derivative", &self.derivative.is_some())
            .field("gap", &self.gap)
            .field("xi", &self.xi)
            .field("lambda", &self.lambda)
            .finish()
    }
}

impl ParameterizedState {
    pub fn new<F>(state: F) -> Self
    where
        F: Fn(f64) -> Result<ComplexMatrix> + Send + Sync + 'static,
    {
        Self {
            state: Box::new(state),
            derivative: None,
            gap: None,
            xi: None,
            lambda: None,
        }
    }

    pub fn with_derivative<F>(mut self, derivative: F) -> Self
    where
        F: Fn(f64) -> Result<ComplexMatrix> + Send + Sync + 'static,
    {
        self.derivative = Some(Box::new(derivative));
        self
    }

    /// Labels copied into [`QfiResult::inputs`].
    pub fn with_labels(mut self, gap: Option<f64>, xi: Option<f64>, lambda: Option<f64>) -> Self {
        self.gap = gap;
        self.xi = xi;
        self.lambda = lambda;
        self
    }

    pub fn state_at(&self, beta: f64) -> Result<ComplexMatrix> {
        (self.state)(beta)
    }

    pub fn has_analytic_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    /// `∂_β ρ`, analytic when available and otherwise a central difference
    /// with step `h = max(1e-5, 1e-6·|β|)`.
    pub fn derivative_at(&self, beta: f64) -> Result<(ComplexMatrix, DerivativeMethod)> {
        match &self.derivative {
            Some(d) => {
                let drho = d(beta)?;
                let tr = drho.trace();
                if tr.norm() > TRACE_TOL {
                    return Err(Error::InvalidState(format!(
                        "analytic derivative has trace {tr}, expected 0"
                    )));
                }
                Ok((drho, DerivativeMethod::Analytic))
            }
            None => {
                let step = finite_difference_step(beta);
                Ok((
                    central_difference(&self.state, beta, step)?,
                    DerivativeMethod::CentralDifference { step },
                ))
            }
        }
    }

    /// Switched-qubit output at `λ = 1` with a ground-state input, with the
    /// analytic derivative.
    pub fn switch_output(probe: ProbeSpec, control: SwitchConfig) -> Self {
        let gap = probe.gap();
        Self::new(move |beta| {
            Ok(switch_output_closed_form(
                &control,
                ground_population(beta, gap),
            ))
        })
        .with_derivative(move |beta| Ok(switch_output_derivative(beta, gap, control.alpha())))
        .with_labels(Some(gap), Some(control.xi()), Some(1.0))
    }

    /// Thermal qubit `diag(p, 1−p)` with the analytic derivative.
    pub fn thermal_qubit(probe: ProbeSpec) -> Self {
        let gap = probe.gap();
        Self::new(move |beta| {
            let p = ground_population(beta, gap);
            Ok(ComplexMatrix::from_real_diagonal(&[p, 1.0 - p]))
        })
        .with_derivative(move |beta| {
            let dp = ground_population_derivative(beta, gap);
            Ok(ComplexMatrix::from_real_diagonal(&[dp, -dp]))
        })
        .with_labels(Some(gap), Some(0.0), None)
    }

    /// Switch output for a general damping `λ`, computed by brute-force Kraus
    /// summation on `input`; no analytic derivative.
    pub fn switch_channel_output(
        probe: ProbeSpec,
        control: SwitchConfig,
        lambda: f64,
        input: ComplexMatrix,
    ) -> Self {
        let gap = probe.gap();
        Self::new(move |beta| {
            let p = ground_population(beta, gap);
            let channel = KrausChannel::generalized_amplitude_damping(p, lambda)?;
            switch_apply(&channel, &input, &control)
        })
        .with_labels(Some(gap), Some(control.xi()), Some(lambda))
    }

    /// Two sequential channel uses on `input` for a general damping `λ`; no
    /// analytic derivative.
    pub fn sequential_channel_output(probe: ProbeSpec, lambda: f64, input: ComplexMatrix) -> Self {
        let gap = probe.gap();
        Self::new(move |beta| {
            let p = ground_population(beta, gap);
            let channel = KrausChannel::generalized_amplitude_damping(p, lambda)?;
            apply_sequential(&channel, &input)
        })
        .with_labels(Some(gap), Some(0.0), Some(lambda))
    }
}

/// Step used for finite-difference derivatives in `β`.
pub fn finite_difference_step(beta: f64) -> f64 {
    (1e-6 * beta.abs()).max(1e-5)
}

fn central_difference(state: &StateFn, beta: f64, step: f64) -> Result<ComplexMatrix> {
    let plus = state(beta + step)?;
    let minus = state(beta - step)?;
    Ok((&plus - &minus).scale(0.5 / step))
}

/// Central finite difference of a state family; test and cross-check helper.
pub fn central_difference_of<F>(state: F, beta: f64, step: f64) -> Result<ComplexMatrix>
where
    F: Fn(f64) -> Result<ComplexMatrix>,
{
    let plus = state(beta + step)?;
    let minus = state(beta - step)?;
    Ok((&plus - &minus).scale(0.5 / step))
}

/// The two sums of the spectral formula, plus the SLD-form total used to
/// cross-check them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralBreakdown {
    /// `Σ_k (∂p_k)²/p_k`.
    pub populations: f64,
    /// `2 Σ_{n≠m} (p_m−p_n)²/(p_m+p_n) |⟨ψ_n|∂ψ_m⟩|²`.
    pub coherences: f64,
    /// `Σ_{m,n} 2|⟨ψ_m|∂ρ|ψ_n⟩|²/(p_m+p_n)`.
    pub sld: f64,
}

impl SpectralBreakdown {
    pub fn total(&self) -> f64 {
        self.populations + self.coherences
    }
}

/// Spectral QFI of `rho` given `drho = ∂_β ρ`.
///
/// Degenerate eigenspaces of `ρ` are rotated so that `∂_β ρ` is diagonal
/// inside them; the eigenvector-derivative overlaps are then well defined and
/// the two sums match the basis-independent SLD form.
pub fn spectral_breakdown(rho: &ComplexMatrix, drho: &ComplexMatrix) -> Result<SpectralBreakdown> {
    if !rho.is_square() {
        return Err(Error::NotSquare {
            rows: rho.rows(),
            cols: rho.cols(),
        });
    }
    let n = rho.rows();
    if drho.rows() != n || drho.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "derivative is {}x{}, state is {n}x{n}",
            drho.rows(),
            drho.cols()
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
    }
    let drho_asym = drho.max_asymmetry();
    if drho_asym > HERMITIAN_TOL * drho.frobenius_norm().max(1.0) {
        return Err(Error::NotHermitian {
            asymmetry: drho_asym,
        });
    }
    let eig = hermitian_eig(rho)?;
    let p = eig.eigenvalues.clone();
    if p[0] < -PSD_TOL {
        return Err(Error::InvalidState(format!(
            "negative eigenvalue {:.3e}",
            p[0]
        )));
    }

    let basis = align_degenerate_subspaces(&p, eig.eigenvectors, drho)?;
    let x = &(&basis.adjoint() * drho) * &basis;

    let mut populations = 0.0;
    for k in 0..n {
        let dp = x[(k, k)].re;
        if p[k] <= ZERO_EIGENVALUE_TOL {
            if dp.abs() > ZERO_EIGENVALUE_SLOPE_TOL {
                return Err(Error::InvalidState(format!(
                    "eigenvalue {:.3e} changes at rate {dp:.3e}; the rank of ρ changes at this β",
                    p[k]
                )));
            }
            continue;
        }
        populations += dp * dp / p[k];
    }

    let mut coherences = 0.0;
    let mut sld = 0.0;
    for m in 0..n {
        for k in 0..n {
            let s = p[m] + p[k];
            if s <= SUPPORT_TOL {
                continue;
            }
            let x2 = x[(m, k)].norm_sqr();
            sld += 2.0 * x2 / s;
            let gap = p[m] - p[k];
            if m != k && gap.abs() > DEGENERACY_TOL {
                // |⟨ψ_k|∂ψ_m⟩|² = |⟨ψ_k|∂ρ|ψ_m⟩|² / (p_m − p_k)²
                let overlap2 = x2 / (gap * gap);
                coherences += 2.0 * gap * gap / s * overlap2;
            }
        }
    }

    Ok(SpectralBreakdown {
        populations,
        coherences,
        sld,
    })
}

/// Rotates each degenerate block of eigenvectors to diagonalize `drho`
/// restricted to it.
fn align_degenerate_subspaces(
    p: &[f64],
    mut basis: ComplexMatrix,
    drho: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let n = p.len();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && p[end] - p[end - 1] <= DEGENERACY_TOL {
            end += 1;
        }
        let size = end - start;
        if size > 1 {
            let mut block_vecs = ComplexMatrix::zeros(n, size);
            for i in 0..n {
                for j in 0..size {
                    block_vecs[(i, j)] = basis[(i, start + j)];
                }
            }
            let restricted = &(&block_vecs.adjoint() * drho) * &block_vecs;
            let rot = hermitian_eig(&restricted)?.eigenvectors;
            let rotated = &block_vecs * &rot;
            for i in 0..n {
                for j in 0..size {
                    basis[(i, start + j)] = rotated[(i, j)];
                }
            }
        }
        start = end;
    }
    Ok(basis)
}

/// Spectral QFI of `ps` at `beta`, with the two evaluation routes required to
/// agree within [`ROUTE_AGREEMENT_TOL`].
pub fn qfi_spectral(ps: &ParameterizedState, beta: f64) -> Result<QfiResult> {
    let (value, derivative_method, _) = qfi_spectral_detailed(ps, beta)?;
    Ok(QfiResult {
        value,
        parameter: Parameter::Beta,
        method: Method::Spectral,
        derivative_method,
        inputs: QfiInputs {
            beta,
            temperature: None,
            gap: ps.gap,
            xi: ps.xi,
            lambda: ps.lambda,
        },
    })
}

/// Like [`qfi_spectral`] but also returns the per-sum breakdown.
pub fn qfi_spectral_detailed(
    ps: &ParameterizedState,
    beta: f64,
) -> Result<(f64, DerivativeMethod, SpectralBreakdown)> {
    let rho = ps.state_at(beta)?;
    let (drho, method) = ps.derivative_at(beta)?;
    let parts = spectral_breakdown(&rho, &drho)?;
    let total = parts.total();
    if (total - parts.sld).abs() > ROUTE_AGREEMENT_TOL * total.abs().max(parts.sld.abs()) + 1e-14 {
        return Err(Error::Inconsistent(format!(
            "spectral sums give {total:.15e} but SLD form gives {:.15e}",
            parts.sld
        )));
    }
    Ok((clamp_non_negative(total)?, method, parts))
}

fn clamp_non_negative(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -NEGATIVITY_TOL {
        Ok(0.0)
    } else {
        Err(Error::Inconsistent(format!("negative QFI {value:.3e}")))
    }
}

fn analytic_result(
    value: f64,
    beta: f64,
    gap: f64,
    xi: Option<f64>,
    lambda: Option<f64>,
) -> QfiResult {
    QfiResult {
        value,
        parameter: Parameter::Beta,
        method: Method::Analytic,
        derivative_method: DerivativeMethod::Analytic,
        inputs: QfiInputs {
            beta,
            temperature: None,
            gap: Some(gap),
            xi,
            lambda,
        },
    }
}

/// Closed-form `F_β` of the switched qubit at `λ = 1`.
pub fn qfi_switch_analytic(beta: f64, probe: &ProbeSpec, control: &SwitchConfig) -> QfiResult {
    let xi = control.xi();
    analytic_result(
        kernels::switch_qfi(beta, probe.gap(), xi),
        beta,
        probe.gap(),
        Some(xi),
        Some(1.0),
    )
}

/// Closed-form `F_β = ΔH²` of a thermal qubit.
pub fn qfi_qubit_noswitch(beta: f64, probe: &ProbeSpec) -> QfiResult {
    analytic_result(
        kernels::qubit_qfi(beta, probe.gap()),
        beta,
        probe.gap(),
        Some(0.0),
        Some(1.0),
    )
}

/// Harmonic-oscillator probe with level spacing `ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HOProbeSpec {
    spacing: f64,
}

impl HOProbeSpec {
    pub fn new(spacing: f64) -> Result<Self> {
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::Domain(format!(
                "oscillator spacing must be > 0, got {spacing}"
            )));
        }
        Ok(Self { spacing })
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }
}

/// Closed-form `F_β` of a thermal harmonic oscillator; diverges as `β → 0`.
pub fn qfi_ho(beta: f64, probe: &HOProbeSpec) -> Result<QfiResult> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(Error::Domain(format!(
            "oscillator QFI diverges for beta <= 0, got {beta}"
        )));
    }
    Ok(analytic_result(
        kernels::ho_qfi(beta, probe.spacing()),
        beta,
        probe.spacing(),
        None,
        None,
    ))
}

/// `F_T = F_β / T⁴` (from `dβ/dT = −1/T²`).
pub fn to_temperature_parameter(f_beta: &QfiResult, temperature: f64) -> Result<QfiResult> {
    if f_beta.parameter != Parameter::Beta {
        return Err(Error::Domain(
            "QFI is already parameterized by temperature".into(),
        ));
    }
    if temperature.is_nan() || temperature <= 0.0 {
        return Err(Error::Domain(format!(
            "temperature must be > 0, got {temperature}"
        )));
    }
    let beta = f_beta.inputs.beta;
    if (beta * temperature - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "temperature {temperature} does not match beta {beta}"
        )));
    }
    Ok(QfiResult {
        value: kernels::beta_to_temperature(f_beta.value, temperature),
        parameter: Parameter::Temperature,
        inputs: QfiInputs {
            temperature: Some(temperature),
            ..f_beta.inputs
        },
        ..*f_beta
    })
}

/// Analytic `∂_β` of [`switch_output_closed_form`] for any gap `≥ 0`.
pub fn switch_output_derivative(beta: f64, gap: f64, alpha: f64) -> ComplexMatrix {
    let p = ground_population(beta, gap);
    let dp = ground_population_derivative(beta, gap);
    let mut m = ComplexMatrix::from_real_diagonal(&[
        alpha * dp,
        (1.0 - alpha) * dp,
        -alpha * dp,
        -(1.0 - alpha) * dp,
    ]);
    let coh = 2.0 * p * dp * (alpha * (1.0 - alpha)).sqrt();
    m[(0, 1)].re = coh;
    m[(1, 0)].re = coh;
    m
}

/// `∂_β ρ_out` of the switched qubit at `λ = 1`.
pub fn d_rho_d_beta_switch(beta: f64, probe: &ProbeSpec, control: &SwitchConfig) -> ComplexMatrix {
    switch_output_derivative(beta, probe.gap(), control.alpha())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe(gap: f64) -> ProbeSpec {
        ProbeSpec::new(gap).unwrap()
    }

    #[test]
    fn qubit_closed_form_values() {
        assert!((qfi_qubit_noswitch(0.0, &probe(1.0)).value - 0.25).abs() < 1e-15);
        assert_eq!(qfi_qubit_noswitch(f64::INFINITY, &probe(1.0)).value, 0.0);
    }

    #[test]
    fn switch_closed_form_at_infinite_temperature() {
        for xi in [0.0, 0.3, 1.0] {
            let control = SwitchConfig::from_xi(xi).unwrap();
            for gap in [0.5, 1.0, 2.0] {
                let f = qfi_switch_analytic(0.0, &probe(gap), &control).value;
                let expected = gap * gap * (6.0 + control.xi()) / 24.0;
                assert!((f - expected).abs() < 1e-14 * expected);
            }
        }
    }

    #[test]
    fn switch_reduces_to_qubit_without_coherence() {
        let control = SwitchConfig::new(0.0).unwrap();
        for beta in [0.1, 1.0, 5.0] {
            let a = qfi_switch_analytic(beta, &probe(1.0), &control).value;
            let b = qfi_qubit_noswitch(beta, &probe(1.0)).value;
            assert!((a - b).abs() < 1e-15 * b);
        }
    }

    #[test]
    fn zero_gap_kernels_vanish() {
        assert_eq!(kernels::switch_qfi(1.0, 0.0, 1.0), 0.0);
        assert_eq!(kernels::qubit_qfi(1.0, 0.0), 0.0);
        assert_eq!(
            switch_output_derivative(1.0, 0.0, 0.5),
            ComplexMatrix::zeros(4, 4)
        );
    }

    #[test]
    fn ho_values_and_domain() {
        let ho = HOProbeSpec::new(1.0).unwrap();
        let f = qfi_ho(std::f64::consts::LN_2, &ho).unwrap().value;
        assert!((f - 2.0).abs() < 1e-14);
        assert!(qfi_ho(0.0, &ho).is_err());
        assert!(qfi_ho(-1.0, &ho).is_err());
        assert!(qfi_ho(800.0, &ho).unwrap().value < 1e-300);
    }

    #[test]
    fn temperature_reparameterization() {
        let mut f = qfi_qubit_noswitch(1.0, &probe(1.0));
        let ft = to_temperature_parameter(&f, 1.0).unwrap();
        assert_eq!(ft.value, f.value);
        assert_eq!(ft.parameter, Parameter::Temperature);

        f.value = 16.0;
        f.inputs.beta = 0.5;
        assert_eq!(to_temperature_parameter(&f, 2.0).unwrap().value, 1.0);
        assert!(to_temperature_parameter(&f, 0.0).is_err());
        assert!(to_temperature_parameter(&f, 3.0).is_err());
        assert!(to_temperature_parameter(&ft, 1.0).is_err());
    }

    #[test]
    fn constant_family_has_zero_qfi() {
        let ps = ParameterizedState::new(|_| Ok(ComplexMatrix::from_real_diagonal(&[0.3, 0.7])));
        let r = qfi_spectral(&ps, 1.3).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(matches!(
            r.derivative_method,
            DerivativeMethod::CentralDifference { .. }
        ));
    }

    #[test]
    fn spectral_rejects_non_states() {
        let ps = ParameterizedState::new(|_| Ok(ComplexMatrix::from_real_diagonal(&[0.6, 0.6])));
        assert!(matches!(
            qfi_spectral(&ps, 1.0),
            Err(Error::InvalidState(_))
        ));
        let ps = ParameterizedState::new(|_| Ok(ComplexMatrix::from_real_diagonal(&[1.2, -0.2])));
        assert!(matches!(
            qfi_spectral(&ps, 1.0),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn rank_change_is_reported() {
        // Eigenvalue pinned at zero while its derivative is not.
        let ps = ParameterizedState::new(|_| Ok(ComplexMatrix::from_real_diagonal(&[1.0, 0.0])))
            .with_derivative(|_| Ok(ComplexMatrix::from_real_diagonal(&[-0.5, 0.5])));
        assert!(matches!(
            qfi_spectral(&ps, 1.0),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn degenerate_spectrum_routes_agree() {
        // ρ = I/2 with an off-diagonal derivative: all information is in the
        // degenerate block and only the aligned basis makes the sums agree.
        let ps = ParameterizedState::new(|b| {
            let c = 0.1 * (b - 1.0);
            ComplexMatrix::from_real(2, 2, &[0.5, c, c, 0.5])
        })
        .with_derivative(|_| ComplexMatrix::from_real(2, 2, &[0.0, 0.1, 0.1, 0.0]));
        let (value, _, parts) = qfi_spectral_detailed(&ps, 1.0).unwrap();
        // SLD form: 2·(2·0.01)/1 = 0.04.
        assert!((value - 0.04).abs() < 1e-15);
        assert!((parts.sld - 0.04).abs() < 1e-15);
        assert_eq!(parts.coherences, 0.0);
    }

    #[test]
    fn diagonal_switch_output_has_no_coherence_term() {
        for alpha in [0.0, 1.0] {
            let control = SwitchConfig::new(alpha).unwrap();
            let ps = ParameterizedState::switch_output(probe(1.0), control);
            let (_, _, parts) = qfi_spectral_detailed(&ps, 0.7).unwrap();
            assert_eq!(parts.coherences, 0.0);
        }
    }
}
