//! Thermalizing channel, thermal states and the quantum switch.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcore::{tensor, ComplexMatrix};

/// Completeness tolerance accepted when constructing a [`KrausChannel`].
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Qubit probe with Hamiltonian `diag(0, ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbeSpec {
    gap: f64,
}

impl ProbeSpec {
    pub fn new(gap: f64) -> Result<Self> {
        if !(gap.is_finite() && gap > 0.0) {
            return Err(Error::Domain(format!("probe gap must be > 0, got {gap}")));
        }
        Ok(Self { gap })
    }

    pub fn gap(&self) -> f64 {
        self.gap
    }

    /// Thermal population of the ground level at inverse temperature `beta`.
    pub fn ground_population(&self, beta: f64) -> f64 {
        ground_population(beta, self.gap)
    }
}

/// `p = 1/(1 + e^{−βε})`.
///
/// `β = +∞` (or any `βε` large enough that `e^{−βε}` underflows) gives exactly
/// 1; `βε = 0` gives exactly 1/2.
pub fn ground_population(beta: f64, gap: f64) -> f64 {
    if beta == 0.0 || gap == 0.0 {
        return 0.5;
    }
    1.0 / (1.0 + (-beta * gap).exp())
}

/// `dp/dβ = ε e^{−βε}/(1 + e^{−βε})²`.
pub fn ground_population_derivative(beta: f64, gap: f64) -> f64 {
    if gap == 0.0 {
        return 0.0;
    }
    let u = (-beta * gap).exp();
    gap * u / ((1.0 + u) * (1.0 + u))
}

/// Bath seen by the probe: inverse temperature and damping strength
/// `λ = 1 − e^{−t/τ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BathSpec {
    beta: f64,
    lambda: f64,
}

impl BathSpec {
    /// `beta` may be `f64::INFINITY` for a zero-temperature bath.
    pub fn new(beta: f64, lambda: f64) -> Result<Self> {
        if beta.is_nan() || beta < 0.0 {
            return Err(Error::Domain(format!("beta must be >= 0, got {beta}")));
        }
        check_unit_interval("lambda", lambda)?;
        Ok(Self { beta, lambda })
    }

    /// Fully thermalizing bath (`λ = 1`).
    pub fn thermalizing(beta: f64) -> Result<Self> {
        Self::new(beta, 1.0)
    }

    /// Zero-temperature limit, `p = 1` exactly.
    pub fn zero_temperature(lambda: f64) -> Result<Self> {
        Self::new(f64::INFINITY, lambda)
    }

    /// `λ = 1 − e^{−t/τ}` from interaction time `t` and relaxation time `τ`.
    pub fn from_interaction_time(beta: f64, t: f64, tau: f64) -> Result<Self> {
        if t.is_nan() || t < 0.0 || tau.is_nan() || tau <= 0.0 {
            return Err(Error::Domain(format!(
                "need t >= 0 and tau > 0, got t = {t}, tau = {tau}"
            )));
        }
        Self::new(beta, -(-t / tau).exp_m1())
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

fn check_unit_interval(name: &str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::Domain(format!(
            "{name} must lie in [0, 1], got {value}"
        )));
    }
    Ok(())
}

/// Control qubit `√α|0⟩ + √(1−α)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SwitchConfig {
    alpha: f64,
}

impl SwitchConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        check_unit_interval("alpha", alpha)?;
        Ok(Self { alpha })
    }

    /// Control with coherence `ξ`; picks the root `α = (1 − √(1−ξ))/2 ≤ 1/2`.
    pub fn from_xi(xi: f64) -> Result<Self> {
        check_unit_interval("xi", xi)?;
        Ok(Self {
            alpha: 0.5 * (1.0 - (1.0 - xi).sqrt()),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `ξ = 4α(1−α)`.
    pub fn xi(&self) -> f64 {
        4.0 * self.alpha * (1.0 - self.alpha)
    }

    /// l1-norm coherence `2√(α(1−α))`.
    pub fn c_l1(&self) -> f64 {
        2.0 * (self.alpha * (1.0 - self.alpha)).sqrt()
    }

    pub fn control_state(&self) -> ComplexMatrix {
        ComplexMatrix::projector(&[
            Complex64::new(self.alpha.sqrt(), 0.0),
            Complex64::new((1.0 - self.alpha).sqrt(), 0.0),
        ])
    }
}

/// Ordered Kraus operators of a channel on a `dim`-dimensional system.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    dim: usize,
    operators: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Validates shapes and completeness `Σ K†K = I` within
    /// [`COMPLETENESS_TOL`].
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self> {
        let dim = operators
            .first()
            .map(ComplexMatrix::rows)
            .ok_or_else(|| Error::DimensionMismatch("channel has no Kraus operators".into()))?;
        if let Some(k) = operators
            .iter()
            .find(|k| k.rows() != dim || k.cols() != dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "Kraus operator is {}x{}, expected {dim}x{dim}",
                k.rows(),
                k.cols()
            )));
        }
        let channel = Self { dim, operators };
        let defect = channel.completeness_defect();
        if defect > COMPLETENESS_TOL {
            return Err(Error::InvalidState(format!(
                "Kraus operators are not complete (max |Σ K†K − I| = {defect:.3e})"
            )));
        }
        Ok(channel)
    }

    /// Generalized amplitude damping with ground population `p` and damping
    /// `λ`:
    ///
    /// ```text
    /// K0 = √p     [[1, 0], [0, √(1−λ)]]    K1 = √p     [[0, √λ], [0, 0]]
    /// K2 = √(1−p) [[√(1−λ), 0], [0, 1]]    K3 = √(1−p) [[0, 0], [√λ, 0]]
    /// ```
    pub fn generalized_amplitude_damping(p: f64, lambda: f64) -> Result<Self> {
        check_unit_interval("p", p)?;
        check_unit_interval("lambda", lambda)?;
        let (sp, sq) = (p.sqrt(), (1.0 - p).sqrt());
        let (sl, sm) = (lambda.sqrt(), (1.0 - lambda).sqrt());
        let op = |entries: [f64; 4], w: f64| {
            ComplexMatrix::from_real(2, 2, &entries.map(|x| x * w)).expect("2x2")
        };
        Self::new(vec![
            op([1.0, 0.0, 0.0, sm], sp),
            op([0.0, sl, 0.0, 0.0], sp),
            op([sm, 0.0, 0.0, 1.0], sq),
            op([0.0, 0.0, sl, 0.0], sq),
        ])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    /// Largest entry of `|Σ K†K − I|`.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.operators {
            sum = &sum + &(&k.adjoint() * k);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    /// `ρ ↦ Σ K ρ K†`.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "state is {}x{}, channel acts on dimension {}",
                rho.rows(),
                rho.cols(),
                self.dim
            )));
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.operators {
            out = &out + &k.sandwich(rho)?;
        }
        Ok(out)
    }
}

/// Thermalizing channel for `probe` in `bath`.
pub fn gad_kraus(probe: &ProbeSpec, bath: &BathSpec) -> KrausChannel {
    let p = probe.ground_population(bath.beta());
    KrausChannel::generalized_amplitude_damping(p, bath.lambda())
        .expect("validated bath parameters yield a valid channel")
}

/// `diag(p, 1−p)` with `p = 1/(1 + e^{−βε})`.
pub fn thermal_state(probe: &ProbeSpec, beta: f64) -> ComplexMatrix {
    let p = probe.ground_population(beta);
    ComplexMatrix::from_real_diagonal(&[p, 1.0 - p])
}

/// Two successive uses of `channel` in a definite order.
pub fn apply_sequential(
    channel: &KrausChannel,
    probe_state: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    channel.apply(&channel.apply(probe_state)?)
}

/// Joint Kraus operators of the switch,
/// `W_ij = K_i K_j ⊗ |0⟩⟨0| + K_j K_i ⊗ |1⟩⟨1|`, in `probe ⊗ control` order.
pub fn switch_kraus(channel: &KrausChannel) -> KrausChannel {
    let ket0 = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
    let ket1 = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]);
    let ops = channel.operators();
    let mut w = Vec::with_capacity(ops.len() * ops.len());
    for ki in ops {
        for kj in ops {
            w.push(&tensor(&(ki * kj), &ket0) + &tensor(&(kj * ki), &ket1));
        }
    }
    KrausChannel::new(w).expect("switch of a complete channel is complete")
}

/// Output of the quantum switch acting on `probe_state ⊗ ρ_c`, computed by
/// summing all `W_ij` terms. Returned in `probe ⊗ control` order.
pub fn switch_apply(
    channel: &KrausChannel,
    probe_state: &ComplexMatrix,
    control: &SwitchConfig,
) -> Result<ComplexMatrix> {
    if probe_state.rows() != channel.dim() || probe_state.cols() != channel.dim() {
        return Err(Error::DimensionMismatch(format!(
            "probe state is {}x{}, channel acts on dimension {}",
            probe_state.rows(),
            probe_state.cols(),
            channel.dim()
        )));
    }
    let joint_in = tensor(probe_state, &control.control_state());
    switch_kraus(channel).apply(&joint_in)
}

/// Closed form of the switch output at `λ = 1` for a ground-state input
/// probe, in `probe ⊗ control` order:
///
/// ```text
/// ⎡ αp        p²√(α(1−α))  0         0           ⎤
/// ⎢ p²√(α(1−α)) (1−α)p     0         0           ⎥
/// ⎢ 0          0           α(1−p)    0           ⎥
/// ⎣ 0          0           0         (1−α)(1−p)  ⎦
/// ```
///
/// The control coherence block is `diag(p², (1−p)²)` weighted by the input
/// populations, so only the ground-state input yields exactly this matrix.
pub fn switch_output_closed_form(control: &SwitchConfig, p: f64) -> ComplexMatrix {
    let a = control.alpha();
    let coh = p * p * (a * (1.0 - a)).sqrt();
    let mut m = ComplexMatrix::from_real_diagonal(&[
        a * p,
        (1.0 - a) * p,
        a * (1.0 - p),
        (1.0 - a) * (1.0 - p),
    ]);
    m[(0, 1)] = Complex64::new(coh, 0.0);
    m[(1, 0)] = Complex64::new(coh, 0.0);
    m
}

/// Ground-state probe input `|0⟩⟨0|`.
pub fn ground_state() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, 0.0])
}
