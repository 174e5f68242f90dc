//! Scalar JSON reports: optimal gap, oscillator threshold, TUR bound.

use serde::Serialize;
use switch_thermo::analysis::{
    ho_threshold, solve_optimal_gap, tur_bound, tur_consistency, tur_limits, PrecisionQuery,
};

use crate::args::{OptimizeArgs, ThresholdArgs, TurArgs};
use crate::error::{usage, CliResult};
use crate::output::{timestamp, TOOL_VERSION};
use crate::sweep::{probe_spec, resolve_control, resolve_temperature};

#[derive(Debug, Serialize)]
pub struct OptimizeReport {
    pub tool_version: &'static str,
    pub timestamp: String,
    pub xi: f64,
    pub x_star: f64,
    pub residual: f64,
    pub argmax_crosscheck: f64,
    pub discrepancy: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    #[serde(rename = "optimal_T_for_unit_gap")]
    pub optimal_t_for_unit_gap: f64,
}

pub fn optimize(args: &OptimizeArgs) -> CliResult<OptimizeReport> {
    let control =
        resolve_control(&args.control)?.ok_or_else(|| usage("optimize needs --xi or --alpha"))?;
    let sol = solve_optimal_gap(control.xi())?;
    Ok(OptimizeReport {
        tool_version: TOOL_VERSION,
        timestamp: timestamp(),
        xi: sol.xi,
        x_star: sol.x_star(),
        residual: sol.root.residual,
        argmax_crosscheck: sol.argmax,
        discrepancy: sol.discrepancy,
        bracket: sol.root.bracket,
        iterations: sol.root.iterations,
        optimal_t_for_unit_gap: sol.optimal_temperature_for_unit_gap(),
    })
}

#[derive(Debug, Serialize)]
pub struct ThresholdReport {
    pub tool_version: &'static str,
    pub timestamp: String,
    pub gap: f64,
    pub x_star: f64,
    pub t_threshold: f64,
    pub residual: f64,
    pub iterations: usize,
}

pub fn threshold(args: &ThresholdArgs) -> CliResult<ThresholdReport> {
    let probe = probe_spec(args.gap)?;
    let t = ho_threshold(&probe)?;
    Ok(ThresholdReport {
        tool_version: TOOL_VERSION,
        timestamp: timestamp(),
        gap: args.gap,
        x_star: t.x_star,
        t_threshold: t.t_threshold,
        residual: t.root.residual,
        iterations: t.root.iterations,
    })
}

#[derive(Debug, Serialize)]
pub struct TurReport {
    pub tool_version: &'static str,
    pub timestamp: String,
    pub beta: f64,
    pub gap: f64,
    pub alpha: f64,
    pub xi: f64,
    pub nu: u64,
    pub bound: f64,
    pub delta_h: f64,
    pub f_switch: f64,
    pub delta_beta_bound: f64,
    pub consistency_pass: bool,
    pub consistency_relative_error: f64,
    #[serde(rename = "low_T_limit")]
    pub low_t_limit: f64,
    #[serde(rename = "high_T_limit")]
    pub high_t_limit: f64,
}

/// A failed consistency check surfaces as a numerical error, so a report is
/// only ever written with `consistency_pass = true`.
pub fn tur(args: &TurArgs) -> CliResult<TurReport> {
    let (beta, _) = resolve_temperature(&args.temperature)?
        .ok_or_else(|| usage("tur needs --beta or --temp"))?;
    let control =
        resolve_control(&args.control)?.ok_or_else(|| usage("tur needs --xi or --alpha"))?;
    let probe = probe_spec(args.gap)?;
    let query =
        PrecisionQuery::new(args.nu, beta, probe, control).map_err(|e| usage(e.to_string()))?;
    let check = tur_consistency(&query)?;
    let limits = tur_limits(&probe, &control);
    Ok(TurReport {
        tool_version: TOOL_VERSION,
        timestamp: timestamp(),
        beta,
        gap: args.gap,
        alpha: control.alpha(),
        xi: control.xi(),
        nu: args.nu,
        bound: tur_bound(beta, &probe, &control),
        delta_h: check.delta_h,
        f_switch: check.f_switch,
        delta_beta_bound: query.delta_beta_bound(),
        consistency_pass: true,
        consistency_relative_error: check.relative_error,
        low_t_limit: limits.low_temperature,
        high_t_limit: limits.high_temperature,
    })
}
