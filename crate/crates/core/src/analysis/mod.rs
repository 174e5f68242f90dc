//! Optimal-gap and crossover equations, gain ratio and thermodynamic
//! uncertainty bounds.
//!
//! All transcendental equations are written in the dimensionless ratio
//! `x = βε = ε/T` and solved on the bracket `[2 + 1e-6, 10]`, which excludes
//! the trivial root and the pole structure near `x = 2` and `x = 0`.

mod roots;

pub use roots::{brent, golden_section_max, Maximum, RootResult};

use serde::Serialize;

use crate::channels::{ProbeSpec, SwitchConfig};
use crate::error::{Error, Result};
use crate::qfi::kernels;

/// Search interval for the optimal-gap and threshold equations.
pub const ROOT_BRACKET: (f64, f64) = (2.0 + 1e-6, 10.0);
/// Residual and interval tolerances for the root finder.
pub const ROOT_F_TOL: f64 = 1e-10;
pub const ROOT_X_TOL: f64 = 1e-12;
/// Interval of the independent golden-section maximization.
pub const ARGMAX_BRACKET: (f64, f64) = (0.1, 20.0);
/// Required agreement between root and argmax.
pub const ARGMAX_AGREEMENT_TOL: f64 = 1e-6;
/// `βε` used for the high-temperature (`β → 0`) limit.
pub const HIGH_TEMPERATURE_X: f64 = 1e-8;
/// `βε` used for the low-temperature (`β → ∞`) limit.
pub const LOW_TEMPERATURE_X: f64 = 50.0;

/// QFI at `T = 1` as a function of the gap `x`: `x² g(x)` where `g` is the
/// switched-qubit closed form divided by `ε²`. Its maximum in `x` is the
/// optimal gap at fixed temperature.
pub fn gap_objective(x: f64, xi: f64) -> f64 {
    kernels::switch_qfi(1.0, x, xi)
}

/// Stationarity condition of [`gap_objective`], cross-multiplied and scaled
/// by `e^{−4x}`:
///
/// `(1+u)(2+u)²[(x−2) − (x+2)u] − ξ[(2+3x)u² + (6+4x)u + (4−2x)]`, `u = e^{−x}`.
///
/// At `ξ = 0` its root solves `eˣ = (x+2)/(x−2)`.
pub fn optimal_gap_condition(x: f64, xi: f64) -> f64 {
    let u = (-x).exp();
    let numerator = (1.0 + u) * (2.0 + u).powi(2) * ((x - 2.0) - (x + 2.0) * u);
    let denominator = (2.0 + 3.0 * x) * u * u + (6.0 + 4.0 * x) * u + (4.0 - 2.0 * x);
    numerator - xi * denominator
}

/// Optimal `x* = ε/T` for a given switch coherence, certified twice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimalGap {
    pub xi: f64,
    pub root: RootResult,
    /// Golden-section maximizer of [`gap_objective`].
    pub argmax: f64,
    /// `|root.x_star − argmax|`.
    pub discrepancy: f64,
}

impl OptimalGap {
    pub fn x_star(&self) -> f64 {
        self.root.x_star
    }

    /// Optimal temperature for a unit gap, `1/x*`.
    pub fn optimal_temperature_for_unit_gap(&self) -> f64 {
        1.0 / self.root.x_star
    }
}

/// Solves the optimal-gap condition for coherence `xi ∈ [0, 1]` and checks
/// the root against an independent maximization of [`gap_objective`].
pub fn solve_optimal_gap(xi: f64) -> Result<OptimalGap> {
    if !(0.0..=1.0).contains(&xi) {
        return Err(Error::Domain(format!("xi must lie in [0, 1], got {xi}")));
    }
    let (lo, hi) = ROOT_BRACKET;
    let root = brent(
        |x| optimal_gap_condition(x, xi),
        lo,
        hi,
        ROOT_F_TOL,
        ROOT_X_TOL,
    )?;
    certify_residual(&root)?;
    let argmax = golden_section_max(
        |x| gap_objective(x, xi),
        ARGMAX_BRACKET.0,
        ARGMAX_BRACKET.1,
        1e-10,
    )
    .x;
    let discrepancy = (root.x_star - argmax).abs();
    if discrepancy > ARGMAX_AGREEMENT_TOL {
        return Err(Error::Inconsistent(format!(
            "optimal-gap root {} disagrees with argmax {argmax} (xi = {xi})",
            root.x_star
        )));
    }
    Ok(OptimalGap {
        xi,
        root,
        argmax,
        discrepancy,
    })
}

fn certify_residual(root: &RootResult) -> Result<()> {
    if root.residual.abs() > ROOT_F_TOL {
        return Err(Error::Inconsistent(format!(
            "root {} has residual {:.3e} above {ROOT_F_TOL:.0e}",
            root.x_star, root.residual
        )));
    }
    Ok(())
}

/// `χ = F_switch / F_noswitch = ((2+ξ)e^{3βε} + 3e^{2βε} + e^{βε}) /
/// (2e^{3βε} + 3e^{2βε} + e^{βε})`.
pub fn gain_ratio(beta: f64, probe: &ProbeSpec, control: &SwitchConfig) -> f64 {
    gain_ratio_x(beta * probe.gap(), control.xi())
}

fn gain_ratio_x(x: f64, xi: f64) -> f64 {
    let u = (-x).exp();
    ((2.0 + xi) + 3.0 * u + u * u) / (2.0 + 3.0 * u + u * u)
}

/// `χ` evaluated at `βε = 1e-8` (high temperature) and `βε = 50` (low
/// temperature).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GainLimits {
    pub high_temperature: f64,
    pub low_temperature: f64,
}

pub fn gain_ratio_limits(control: &SwitchConfig) -> GainLimits {
    GainLimits {
        high_temperature: gain_ratio_x(HIGH_TEMPERATURE_X, control.xi()),
        low_temperature: gain_ratio_x(LOW_TEMPERATURE_X, control.xi()),
    }
}

/// Improvement of `δT` implied by a QFI ratio `chi`: `100(√χ − 1)` percent.
pub fn precision_gain_percent(chi: f64) -> Result<f64> {
    if chi.is_nan() || chi < 1.0 {
        return Err(Error::Domain(format!("gain ratio must be >= 1, got {chi}")));
    }
    Ok(100.0 * (chi.sqrt() - 1.0))
}

/// Crossover between the maximally switched qubit and a harmonic oscillator
/// with the same spacing. The switched qubit has the larger QFI for
/// `T < t_threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Threshold {
    pub x_star: f64,
    pub t_threshold: f64,
    pub root: RootResult,
}

/// `F_switch(ξ=1) = F_HO`, cross-multiplied by the (positive) denominators
/// and scaled by `e^{−4x}`: `(3 + 3u + u²)(1−u)² − (1+u)³(2+u)`, `u = e^{−x}`.
/// In `E = eˣ` this is the quartic `E⁴ − 10E³ − 11E² − 4E`.
pub fn threshold_condition(x: f64) -> f64 {
    let u = (-x).exp();
    (3.0 + 3.0 * u + u * u) * (1.0 - u).powi(2) - (1.0 + u).powi(3) * (2.0 + u)
}

pub fn ho_threshold(probe: &ProbeSpec) -> Result<Threshold> {
    let (lo, hi) = ROOT_BRACKET;
    let root = brent(threshold_condition, lo, hi, ROOT_F_TOL, ROOT_X_TOL)?;
    certify_residual(&root)?;
    Ok(Threshold {
        x_star: root.x_star,
        t_threshold: probe.gap() / root.x_star,
        root,
    })
}

/// Lower bound on `δβ·ΔH` with a switch: `1/√χ`, i.e.
/// `1/√(1 + ξ/((1+e^{−βε})(2+e^{−βε})))`. Equals 1 without coherence.
pub fn tur_bound(beta: f64, probe: &ProbeSpec, control: &SwitchConfig) -> f64 {
    let u = (-beta * probe.gap()).exp();
    1.0 / (1.0 + control.xi() / ((1.0 + u) * (2.0 + u))).sqrt()
}

/// `β → ∞` limit of [`tur_bound`]: `1/√(1 + ξ/2)`.
pub fn tur_low_temperature_limit(control: &SwitchConfig) -> f64 {
    1.0 / (1.0 + control.xi() / 2.0).sqrt()
}

/// `β → 0` limit of [`tur_bound`]: `1/√(1 + ξ/6)`.
pub fn tur_high_temperature_limit(control: &SwitchConfig) -> f64 {
    1.0 / (1.0 + control.xi() / 6.0).sqrt()
}

/// [`tur_bound`] evaluated directly at `β = 50/ε` and `β = 1e-8/ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TurLimits {
    pub low_temperature: f64,
    pub high_temperature: f64,
}

pub fn tur_limits(probe: &ProbeSpec, control: &SwitchConfig) -> TurLimits {
    TurLimits {
        low_temperature: tur_bound(LOW_TEMPERATURE_X / probe.gap(), probe, control),
        high_temperature: tur_bound(HIGH_TEMPERATURE_X / probe.gap(), probe, control),
    }
}

/// Energy spread `ΔH = ε√(p(1−p))` of the thermal qubit, evaluated as
/// `ε√u/(1+u)` with `u = e^{−βε}` so it stays accurate where `1 − p` rounds
/// to zero.
pub fn delta_h(beta: f64, probe: &ProbeSpec) -> f64 {
    let u = (-beta * probe.gap()).exp();
    probe.gap() * u.sqrt() / (1.0 + u)
}

/// Number of measurements and the operating point for a precision estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrecisionQuery {
    nu: u64,
    pub beta: f64,
    pub probe: ProbeSpec,
    pub control: SwitchConfig,
}

impl PrecisionQuery {
    pub fn new(nu: u64, beta: f64, probe: ProbeSpec, control: SwitchConfig) -> Result<Self> {
        if nu == 0 {
            return Err(Error::Domain("number of measurements must be >= 1".into()));
        }
        if beta.is_nan() || beta < 0.0 {
            return Err(Error::Domain(format!("beta must be >= 0, got {beta}")));
        }
        Ok(Self {
            nu,
            beta,
            probe,
            control,
        })
    }

    pub fn nu(&self) -> u64 {
        self.nu
    }

    /// Cramér–Rao lower bound `1/√(ν F_switch)` on `δβ`.
    pub fn delta_beta_bound(&self) -> f64 {
        let f = kernels::switch_qfi(self.beta, self.probe.gap(), self.control.xi());
        1.0 / (self.nu as f64 * f).sqrt()
    }
}

/// Both sides of `ΔH/√(ν F_switch) = tur_bound/√ν`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TurConsistency {
    pub nu: u64,
    pub delta_h: f64,
    pub f_switch: f64,
    /// `ΔH · 1/√(ν F_switch)`.
    pub cramer_rao_side: f64,
    /// `tur_bound / √ν`.
    pub bound_side: f64,
    pub relative_error: f64,
}

/// Relative tolerance of the TUR identity.
pub const TUR_IDENTITY_TOL: f64 = 1e-10;

/// Checks that the switched uncertainty bound is the Cramér–Rao bound
/// multiplied by `ΔH`.
pub fn tur_consistency(query: &PrecisionQuery) -> Result<TurConsistency> {
    let dh = delta_h(query.beta, &query.probe);
    let f_switch = kernels::switch_qfi(query.beta, query.probe.gap(), query.control.xi());
    if f_switch.is_nan() || f_switch <= 0.0 {
        return Err(Error::Domain(format!(
            "QFI vanishes at beta = {}; the Cramér–Rao bound is undefined",
            query.beta
        )));
    }
    let cramer_rao_side = dh * query.delta_beta_bound();
    let bound_side = tur_bound(query.beta, &query.probe, &query.control) / (query.nu as f64).sqrt();
    let relative_error = (cramer_rao_side - bound_side).abs() / bound_side.abs();
    if relative_error > TUR_IDENTITY_TOL {
        return Err(Error::Inconsistent(format!(
            "Cramér–Rao side {cramer_rao_side:.15e} differs from bound side {bound_side:.15e}"
        )));
    }
    Ok(TurConsistency {
        nu: query.nu,
        delta_h: dh,
        f_switch,
        cramer_rao_side,
        bound_side,
        relative_error,
    })
}

/// Zero crossings of `ys` over `xs`, located by linear interpolation between
/// adjacent samples of opposite sign.
pub fn sign_crossings(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 1..xs.len().min(ys.len()) {
        let (y0, y1) = (ys[i - 1], ys[i]);
        if y0 == 0.0 && i == 1 {
            out.push(xs[0]);
        }
        if y1 == 0.0 {
            out.push(xs[i]);
        } else if y0 != 0.0 && y0.signum() != y1.signum() {
            out.push(xs[i - 1] + (xs[i] - xs[i - 1]) * y0 / (y0 - y1));
        }
    }
    out
}
