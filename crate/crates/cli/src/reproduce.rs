//! Data sets behind the figures and the headline numbers.
//!
//! Default grids:
//! - `fig2.csv`: β-QFI of the switched qubit at T = 1 over ε ∈ [0.1, 10]
//!   (100 points) × α ∈ [0, 1] (21 points), ε-major; columns
//!   `gap,alpha,xi,F_switch,method`.
//! - `fig3.csv`: F_T and χ over T ∈ [0.05, 3] (296 points) at ε = 1, ξ = 1;
//!   columns `T,beta,F_noswitch,F_switch,chi,method`.
//! - `fig4.csv`: three-probe F_T over the same T grid at ε = 1, ξ = 1;
//!   columns `T,beta,F_noswitch,F_switch,F_ho,chi,method`.
//! - `headline.json`: optimal gaps, gain-ratio limits, precision gains and
//!   the oscillator threshold.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use switch_thermo::analysis::{
    gain_ratio, ho_threshold, precision_gain_percent, solve_optimal_gap, HIGH_TEMPERATURE_X,
    LOW_TEMPERATURE_X,
};
use switch_thermo::channels::{ProbeSpec, SwitchConfig};
use switch_thermo::qfi::{qfi_switch_analytic, Method};

use crate::args::{Figure, Probe, ReproduceArgs, SweptParameter};
use crate::error::{usage, CliResult};
use crate::output::{linspace, timestamp, to_json, Table, TOOL_VERSION};
use crate::sweep::{probe_spec, resolve_control, Fixed, SweepConfig, DEFAULT_GAP};

pub const FIG2_GAP_RANGE: (f64, f64) = (0.1, 10.0);
pub const FIG2_GAP_POINTS: usize = 100;
pub const FIG2_ALPHA_POINTS: usize = 21;
pub const FIG2_TEMPERATURE: f64 = 1.0;
pub const TEMPERATURE_RANGE: (f64, f64) = (0.05, 3.0);
pub const TEMPERATURE_POINTS: usize = 296;

#[derive(Debug, Serialize)]
pub struct Written {
    pub tool_version: &'static str,
    pub timestamp: String,
    pub written: Vec<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Pair {
    #[serde(rename = "high_T")]
    pub high_t: f64,
    #[serde(rename = "low_T")]
    pub low_t: f64,
}

#[derive(Debug, Serialize)]
pub struct Headline {
    pub tool_version: &'static str,
    pub timestamp: String,
    pub x_star_0: f64,
    pub x_star_1: f64,
    pub chi_limits: Pair,
    pub precision_percents: Pair,
    #[serde(rename = "T_threshold")]
    pub t_threshold: f64,
    pub x_star_threshold: f64,
}

pub fn headline() -> CliResult<Headline> {
    let probe = ProbeSpec::new(1.0)?;
    let full = SwitchConfig::from_xi(1.0)?;
    let high = gain_ratio(HIGH_TEMPERATURE_X, &probe, &full);
    let low = gain_ratio(LOW_TEMPERATURE_X, &probe, &full);
    let threshold = ho_threshold(&probe)?;
    Ok(Headline {
        tool_version: TOOL_VERSION,
        timestamp: timestamp(),
        x_star_0: solve_optimal_gap(0.0)?.x_star(),
        x_star_1: solve_optimal_gap(1.0)?.x_star(),
        chi_limits: Pair {
            high_t: high,
            low_t: low,
        },
        precision_percents: Pair {
            high_t: precision_gain_percent(high)?,
            low_t: precision_gain_percent(low)?,
        },
        t_threshold: threshold.t_threshold,
        x_star_threshold: threshold.x_star,
    })
}

pub fn fig2(gap_points: usize) -> CliResult<Table> {
    let mut rows = Vec::with_capacity(gap_points * FIG2_ALPHA_POINTS);
    let beta = 1.0 / FIG2_TEMPERATURE;
    for gap in linspace(FIG2_GAP_RANGE.0, FIG2_GAP_RANGE.1, gap_points) {
        let probe = ProbeSpec::new(gap)?;
        for alpha in linspace(0.0, 1.0, FIG2_ALPHA_POINTS) {
            let control = SwitchConfig::new(alpha)?;
            let f = qfi_switch_analytic(beta, &probe, &control).value;
            rows.push(vec![gap, alpha, control.xi(), f]);
        }
    }
    Ok(Table {
        columns: vec!["gap", "alpha", "xi", "F_switch"],
        method: Method::Analytic,
        rows,
    })
}

fn temperature_sweep(
    probes: Vec<Probe>,
    points: usize,
    gap: f64,
    control: SwitchConfig,
) -> CliResult<Table> {
    SweepConfig {
        parameter: "temperature",
        swept: SweptParameter::Temperature,
        start: TEMPERATURE_RANGE.0,
        stop: TEMPERATURE_RANGE.1,
        points,
        fixed: Fixed {
            gap: Some(gap),
            alpha: Some(control.alpha()),
            xi: Some(control.xi()),
            beta: None,
            temperature: None,
            lambda: 1.0,
        },
        probes,
    }
    .run()
}

pub fn reproduce(args: &ReproduceArgs) -> CliResult<Written> {
    if let Some(n) = args.points {
        if n < 2 {
            return Err(usage(format!("--points must be at least 2, got {n}")));
        }
    }
    let gap = args.gap.unwrap_or(DEFAULT_GAP);
    probe_spec(gap)?;
    let control = resolve_control(&args.control)?.unwrap_or(SwitchConfig::from_xi(1.0)?);
    let t_points = args.points.unwrap_or(TEMPERATURE_POINTS);

    fs::create_dir_all(&args.out)?;
    let mut written = Vec::new();
    let mut write = |name: &str, text: String| -> CliResult<()> {
        let path = Path::new(&args.out).join(name);
        fs::write(&path, text)?;
        written.push(path);
        Ok(())
    };
    let wants = |f: Figure| args.figure == f || args.figure == Figure::All;

    if wants(Figure::Fig2) {
        write(
            "fig2.csv",
            fig2(args.points.unwrap_or(FIG2_GAP_POINTS))?.to_csv(),
        )?;
    }
    if wants(Figure::Fig3) {
        let probes = vec![Probe::QubitNoswitch, Probe::QubitSwitch];
        write(
            "fig3.csv",
            temperature_sweep(probes, t_points, gap, control)?.to_csv(),
        )?;
    }
    if wants(Figure::Fig4) {
        let probes = vec![
            Probe::QubitNoswitch,
            Probe::QubitSwitch,
            Probe::HarmonicOscillator,
        ];
        write(
            "fig4.csv",
            temperature_sweep(probes, t_points, gap, control)?.to_csv(),
        )?;
    }
    if wants(Figure::Headline) {
        write("headline.json", to_json(&headline()?))?;
    }
    Ok(Written {
        tool_version: TOOL_VERSION,
        timestamp: timestamp(),
        written,
    })
}
