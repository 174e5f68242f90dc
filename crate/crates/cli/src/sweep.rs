//! One-parameter QFI sweeps over the probe families.
//!
//! Column schemas, by swept parameter (QFI columns appear only for the
//! requested probes, `chi` only when both qubit probes are requested, and
//! every row ends with `method`):
//!
//! | parameter     | leading columns | QFI parameterization |
//! |---------------|-----------------|----------------------|
//! | `temperature` | `T,beta`        | F_T                  |
//! | `beta`        | `beta`          | F_β                  |
//! | `gap`         | `gap`           | F_β at fixed β       |
//! | `alpha`       | `alpha,xi`      | F_β at fixed β       |
//!
//! followed by `F_noswitch,F_switch,F_ho,chi`.

use rayon::prelude::*;
use serde::Serialize;
use switch_thermo::analysis::gain_ratio;
use switch_thermo::channels::{ground_state, ProbeSpec, SwitchConfig};
use switch_thermo::qfi::{
    qfi_ho, qfi_qubit_noswitch, qfi_spectral, qfi_switch_analytic, to_temperature_parameter,
    HOProbeSpec, Method, ParameterizedState, QfiResult,
};

use crate::args::{ControlArgs, Probe, SweepArgs, SweptParameter, TemperatureArgs};
use crate::error::{usage, CliError, CliResult};
use crate::output::{linspace, timestamp, Table, TOOL_VERSION};

pub const DEFAULT_GAP: f64 = 1.0;
pub const DEFAULT_TEMPERATURE: f64 = 1.0;

/// Values held fixed during a sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Fixed {
    pub gap: Option<f64>,
    pub alpha: Option<f64>,
    pub xi: Option<f64>,
    pub beta: Option<f64>,
    pub temperature: Option<f64>,
    pub lambda: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub parameter: &'static str,
    #[serde(skip)]
    pub swept: SweptParameter,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub fixed: Fixed,
    pub probes: Vec<Probe>,
}

#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub tool_version: &'static str,
    pub timestamp: String,
    pub config: SweepConfig,
    #[serde(flatten)]
    pub table: Table,
}

pub fn resolve_control(args: &ControlArgs) -> CliResult<Option<SwitchConfig>> {
    let control = match (args.alpha, args.xi) {
        (Some(a), _) => SwitchConfig::new(a),
        (None, Some(x)) => SwitchConfig::from_xi(x),
        (None, None) => return Ok(None),
    };
    control.map(Some).map_err(|e| usage(e.to_string()))
}

/// Returns `(β, T)`; `T` is absent when `β = 0`.
pub fn resolve_temperature(args: &TemperatureArgs) -> CliResult<Option<(f64, Option<f64>)>> {
    match (args.beta, args.temp) {
        (Some(b), _) if b.is_finite() && b >= 0.0 => Ok(Some((b, (b > 0.0).then(|| 1.0 / b)))),
        (Some(b), _) => Err(usage(format!("--beta must be finite and ≥ 0, got {b}"))),
        (None, Some(t)) if t.is_finite() && t > 0.0 => Ok(Some((1.0 / t, Some(t)))),
        (None, Some(t)) => Err(usage(format!("--temp must be finite and > 0, got {t}"))),
        (None, None) => Ok(None),
    }
}

pub fn probe_spec(gap: f64) -> CliResult<ProbeSpec> {
    ProbeSpec::new(gap).map_err(|e| usage(e.to_string()))
}

impl SweepConfig {
    pub fn from_args(args: &SweepArgs) -> CliResult<Self> {
        let (start, stop, points) = (args.start, args.stop, args.points);
        if !(start.is_finite() && stop.is_finite()) {
            return Err(usage("--start and --stop must be finite"));
        }
        if start >= stop {
            return Err(usage(format!(
                "--start ({start}) must be below --stop ({stop})"
            )));
        }
        if points < 2 {
            return Err(usage(format!("--points must be at least 2, got {points}")));
        }
        if !(0.0..=1.0).contains(&args.lambda) {
            return Err(usage(format!(
                "--lambda must lie in [0, 1], got {}",
                args.lambda
            )));
        }
        let mut probes = args.probes.clone();
        probes.sort();
        probes.dedup();
        let has_ho = probes.contains(&Probe::HarmonicOscillator);
        if has_ho && args.lambda != 1.0 {
            return Err(usage(
                "the harmonic_oscillator probe is only defined for --lambda 1",
            ));
        }

        let control = resolve_control(&args.control)?;
        let temperature = resolve_temperature(&args.temperature)?;
        if let Some(gap) = args.gap {
            probe_spec(gap)?;
        }
        let swept_in_fixed = match args.param {
            SweptParameter::Temperature | SweptParameter::Beta => temperature.is_some(),
            SweptParameter::Gap => args.gap.is_some(),
            SweptParameter::Alpha => control.is_some(),
        };
        if swept_in_fixed {
            return Err(usage(
                "the swept parameter must not also be given as a fixed value",
            ));
        }
        match args.param {
            SweptParameter::Temperature | SweptParameter::Gap if start <= 0.0 => {
                return Err(usage("temperature and gap sweeps need --start > 0"));
            }
            SweptParameter::Beta if start < 0.0 || (start == 0.0 && has_ho) => {
                return Err(usage(
                    "beta sweeps need --start ≥ 0 (> 0 with the harmonic_oscillator probe)",
                ));
            }
            SweptParameter::Alpha if start < 0.0 || stop > 1.0 => {
                return Err(usage("alpha sweeps must stay within [0, 1]"));
            }
            _ => {}
        }
        if has_ho && temperature.is_some_and(|(b, _)| b == 0.0) {
            return Err(usage("the harmonic_oscillator probe needs --beta > 0"));
        }

        let uses_temperature = matches!(args.param, SweptParameter::Gap | SweptParameter::Alpha);
        let (beta, temp) = match temperature {
            Some((b, t)) => (Some(b), t),
            None if uses_temperature => {
                (Some(1.0 / DEFAULT_TEMPERATURE), Some(DEFAULT_TEMPERATURE))
            }
            None => (None, None),
        };
        let control = match args.param {
            SweptParameter::Alpha => None,
            _ => Some(control.unwrap_or(SwitchConfig::from_xi(1.0).expect("ξ = 1 is valid"))),
        };
        let parameter = match args.param {
            SweptParameter::Temperature => "temperature",
            SweptParameter::Beta => "beta",
            SweptParameter::Gap => "gap",
            SweptParameter::Alpha => "alpha",
        };
        Ok(SweepConfig {
            parameter,
            swept: args.param,
            start,
            stop,
            points,
            fixed: Fixed {
                gap: (args.param != SweptParameter::Gap).then(|| args.gap.unwrap_or(DEFAULT_GAP)),
                alpha: control.map(|c| c.alpha()),
                xi: control.map(|c| c.xi()),
                beta,
                temperature: temp,
                lambda: args.lambda,
            },
            probes,
        })
    }

    fn has_chi(&self) -> bool {
        self.probes.contains(&Probe::QubitNoswitch) && self.probes.contains(&Probe::QubitSwitch)
    }

    fn method(&self) -> Method {
        if self.fixed.lambda == 1.0 {
            Method::Analytic
        } else {
            Method::Spectral
        }
    }

    pub fn columns(&self) -> Vec<&'static str> {
        let mut cols = match self.swept {
            SweptParameter::Temperature => vec!["T", "beta"],
            SweptParameter::Beta => vec!["beta"],
            SweptParameter::Gap => vec!["gap"],
            SweptParameter::Alpha => vec!["alpha", "xi"],
        };
        for p in &self.probes {
            cols.push(match p {
                Probe::QubitNoswitch => "F_noswitch",
                Probe::QubitSwitch => "F_switch",
                Probe::HarmonicOscillator => "F_ho",
            });
        }
        if self.has_chi() {
            cols.push("chi");
        }
        cols
    }

    fn evaluate(&self, v: f64) -> CliResult<Vec<f64>> {
        let fixed = &self.fixed;
        let (beta, temperature, gap, control, mut row) = match self.swept {
            SweptParameter::Temperature => (
                1.0 / v,
                Some(v),
                fixed.gap.unwrap(),
                fixed_control(fixed),
                vec![v, 1.0 / v],
            ),
            SweptParameter::Beta => (v, None, fixed.gap.unwrap(), fixed_control(fixed), vec![v]),
            SweptParameter::Gap => (fixed.beta.unwrap(), None, v, fixed_control(fixed), vec![v]),
            SweptParameter::Alpha => {
                let c = SwitchConfig::new(v)?;
                (
                    fixed.beta.unwrap(),
                    None,
                    fixed.gap.unwrap(),
                    c,
                    vec![v, c.xi()],
                )
            }
        };
        let probe = ProbeSpec::new(gap)?;
        let mut values = Vec::with_capacity(self.probes.len());
        for &p in &self.probes {
            let r = probe_qfi(p, beta, &probe, &control, fixed.lambda)?;
            let r = match temperature {
                Some(t) => to_temperature_parameter(&r, t)?,
                None => r,
            };
            values.push((p, r.value));
        }
        row.extend(values.iter().map(|&(_, f)| f));
        if self.has_chi() {
            let chi = if fixed.lambda == 1.0 {
                gain_ratio(beta, &probe, &control)
            } else {
                let get = |k| {
                    values
                        .iter()
                        .find(|(p, _)| *p == k)
                        .map(|&(_, f)| f)
                        .unwrap()
                };
                get(Probe::QubitSwitch) / get(Probe::QubitNoswitch)
            };
            if !chi.is_finite() {
                return Err(CliError::Numerical(format!(
                    "gain ratio undefined at {} = {v}: the unswitched QFI vanishes",
                    self.parameter
                )));
            }
            row.push(chi);
        }
        if let Some(bad) = row.iter().find(|x| !x.is_finite()) {
            return Err(CliError::Numerical(format!(
                "non-finite value {bad} at {} = {v}",
                self.parameter
            )));
        }
        Ok(row)
    }

    /// Evaluates the grid in parallel; rows come back in grid order.
    pub fn run(&self) -> CliResult<Table> {
        let grid = linspace(self.start, self.stop, self.points);
        let rows = grid
            .par_iter()
            .map(|&v| self.evaluate(v))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Table {
            columns: self.columns(),
            method: self.method(),
            rows,
        })
    }

    pub fn record(self) -> CliResult<RunRecord> {
        let table = self.run()?;
        Ok(RunRecord {
            tool_version: TOOL_VERSION,
            timestamp: timestamp(),
            config: self,
            table,
        })
    }
}

fn fixed_control(fixed: &Fixed) -> SwitchConfig {
    SwitchConfig::new(fixed.alpha.expect("control fixed unless alpha is swept"))
        .expect("validated when the config was built")
}

/// QFI with respect to β of one probe. Below full damping the qubit probes
/// start in the ground state and go through the numerical spectral route.
pub fn probe_qfi(
    probe_kind: Probe,
    beta: f64,
    probe: &ProbeSpec,
    control: &SwitchConfig,
    lambda: f64,
) -> CliResult<QfiResult> {
    let r = match (probe_kind, lambda == 1.0) {
        (Probe::QubitNoswitch, true) => qfi_qubit_noswitch(beta, probe),
        (Probe::QubitSwitch, true) => qfi_switch_analytic(beta, probe, control),
        (Probe::HarmonicOscillator, _) => qfi_ho(beta, &HOProbeSpec::new(probe.gap())?)?,
        (Probe::QubitNoswitch, false) => qfi_spectral(
            &ParameterizedState::sequential_channel_output(*probe, lambda, ground_state()),
            beta,
        )?,
        (Probe::QubitSwitch, false) => qfi_spectral(
            &ParameterizedState::switch_channel_output(*probe, *control, lambda, ground_state()),
            beta,
        )?,
    };
    Ok(r)
}
