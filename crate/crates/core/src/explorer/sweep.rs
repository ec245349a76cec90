use serde::Serialize;

use crate::capacity::{
    binary_capacity, capacity_derivative, ideal_capacity, mixed_capacity, mostly_digital_capacity,
    percent_of_max, CapacityResult, CircuitFrequency, DelaySpread, FrequencyModel,
    ModulationScheme, PulseSpec, SamplingConfig, SnrValue,
};
use crate::error::{Error, Result};
use crate::output::{Cell, Tabular};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SweepMode {
    Ideal { snr: SnrValue },
    Binary,
    MostlyDigital,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweptParameter {
    Bandwidth,
    SamplingFrequency,
    CircuitFrequency,
}

impl SweepMode {
    /// The only frequency axis each model has.
    pub fn parameter(self) -> SweptParameter {
        match self {
            SweepMode::Ideal { .. } | SweepMode::Binary => SweptParameter::Bandwidth,
            SweepMode::MostlyDigital => SweptParameter::SamplingFrequency,
            SweepMode::Mixed => SweptParameter::CircuitFrequency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    Linear,
    Logarithmic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrequencyRange {
    pub start_hz: f64,
    pub end_hz: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl FrequencyRange {
    pub fn log(start_hz: f64, end_hz: f64, points: usize) -> Self {
        FrequencyRange {
            start_hz,
            end_hz,
            points,
            spacing: Spacing::Logarithmic,
        }
    }

    pub fn linear(start_hz: f64, end_hz: f64, points: usize) -> Self {
        FrequencyRange {
            start_hz,
            end_hz,
            points,
            spacing: Spacing::Linear,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.start_hz.is_finite() && self.end_hz.is_finite() && self.start_hz > 0.0) {
            return Err(Error::invalid(
                "sweep range",
                format!(
                    "bounds must be finite and > 0 Hz, got {} .. {}",
                    self.start_hz, self.end_hz
                ),
            ));
        }
        if self.start_hz >= self.end_hz {
            return Err(Error::invalid(
                "sweep range",
                format!(
                    "start {} Hz must be below end {} Hz",
                    self.start_hz, self.end_hz
                ),
            ));
        }
        if self.points < 2 {
            return Err(Error::invalid(
                "sweep range",
                format!("needs at least 2 points, got {}", self.points),
            ));
        }
        Ok(())
    }

    /// Grid points from `start` to `end`, both endpoints exact.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.start_hz;
                }
                if i == self.points - 1 {
                    return self.end_hz;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.start_hz + t * (self.end_hz - self.start_hz),
                    Spacing::Logarithmic => self.start_hz * (self.end_hz / self.start_hz).powf(t),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepOutputs {
    pub capacity: bool,
    pub derivative: bool,
    pub percent_of_max: bool,
}

impl SweepOutputs {
    pub const ALL: SweepOutputs = SweepOutputs {
        capacity: true,
        derivative: true,
        percent_of_max: true,
    };
    pub const CAPACITY: SweepOutputs = SweepOutputs {
        capacity: true,
        derivative: false,
        percent_of_max: false,
    };
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub parameter: SweptParameter,
    pub range: FrequencyRange,
    pub delay_spreads: Vec<DelaySpread>,
    /// Only used by the mostly-digital mode.
    pub sampling_factors: Vec<f64>,
    pub modulation: ModulationScheme,
    pub outputs: SweepOutputs,
}

fn spreads_ns(values: &[f64]) -> Vec<DelaySpread> {
    values
        .iter()
        .map(|ns| DelaySpread::from_seconds(ns * 1e-9).expect("positive literal"))
        .collect()
}

impl SweepSpec {
    /// Binary capacity versus bandwidth, 0.1 to 100 GHz, for the industrial
    /// LOS, residential LOS and industrial NLOS delay spreads.
    pub fn binary_bandwidth() -> Self {
        SweepSpec {
            mode: SweepMode::Binary,
            parameter: SweptParameter::Bandwidth,
            range: FrequencyRange::log(0.1e9, 100e9, 200),
            delay_spreads: spreads_ns(&[9.0, 17.0, 89.0]),
            sampling_factors: Vec::new(),
            modulation: ModulationScheme::binary(),
            outputs: SweepOutputs::CAPACITY,
        }
    }

    /// Mostly-digital capacity versus ADC rate, 0.1 to 100 GSPS, with
    /// sampling factors 2 and 4.
    pub fn mostly_digital() -> Self {
        SweepSpec {
            mode: SweepMode::MostlyDigital,
            parameter: SweptParameter::SamplingFrequency,
            range: FrequencyRange::log(0.1e9, 100e9, 200),
            delay_spreads: spreads_ns(&[9.0, 17.0, 89.0]),
            sampling_factors: vec![2.0, 4.0],
            modulation: ModulationScheme::binary(),
            outputs: SweepOutputs::ALL,
        }
    }

    /// Mixed-implementation capacity versus circuit frequency, 1 to 60 GHz,
    /// for 1, 5 and 10 ns delay spreads.
    pub fn mixed() -> Self {
        SweepSpec {
            mode: SweepMode::Mixed,
            parameter: SweptParameter::CircuitFrequency,
            range: FrequencyRange::log(1e9, 60e9, 120),
            delay_spreads: spreads_ns(&[1.0, 5.0, 10.0]),
            sampling_factors: Vec::new(),
            modulation: ModulationScheme::binary(),
            outputs: SweepOutputs::ALL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.range.validate()?;
        if self.delay_spreads.is_empty() {
            return Err(Error::invalid(
                "sweep",
                "at least one delay spread is required",
            ));
        }
        if self.parameter != self.mode.parameter() {
            return Err(Error::invalid(
                "sweep",
                format!(
                    "{:?} mode sweeps {:?}, not {:?}",
                    self.mode,
                    self.mode.parameter(),
                    self.parameter
                ),
            ));
        }
        match self.mode {
            SweepMode::MostlyDigital => {
                if self.sampling_factors.is_empty() {
                    return Err(Error::invalid(
                        "sweep",
                        "mostly-digital sweeps need at least one sampling factor",
                    ));
                }
                for &n in &self.sampling_factors {
                    FrequencyModel::mostly_digital(n)?;
                }
            }
            SweepMode::Ideal { .. } | SweepMode::Binary => {
                if self.modulation.order() != 2 {
                    return Err(Error::invalid(
                        "sweep",
                        "ideal and binary sweeps are defined for binary modulation only",
                    ));
                }
            }
            SweepMode::Mixed => {}
        }
        if !(self.outputs.capacity || self.outputs.derivative || self.outputs.percent_of_max) {
            return Err(Error::invalid("sweep", "no outputs requested"));
        }
        Ok(())
    }

    /// Sampling factors iterated per delay spread; a single `None` for
    /// modes without one.
    fn factor_axis(&self) -> Vec<Option<f64>> {
        match self.mode {
            SweepMode::MostlyDigital => self.sampling_factors.iter().copied().map(Some).collect(),
            _ => vec![None],
        }
    }

    pub fn row_count(&self) -> usize {
        self.range.points * self.delay_spreads.len() * self.factor_axis().len()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub frequency_hz: f64,
    pub delay_spread_s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling_factor: Option<f64>,
    pub modulation_order: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capacity_bps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivative_bps_per_hz: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub percent_of_max: Option<f64>,
}

impl Tabular for SweepRow {
    fn columns(&self) -> Vec<(&'static str, Cell)> {
        let mut cols = vec![
            ("frequency_hz", self.frequency_hz.into()),
            ("delay_spread_s", self.delay_spread_s.into()),
        ];
        if self.sampling_factor.is_some() {
            cols.push(("sampling_factor", self.sampling_factor.into()));
        }
        cols.push((
            "modulation_order",
            Cell::Integer(self.modulation_order.into()),
        ));
        if self.capacity_bps.is_some() {
            cols.push(("capacity_bps", self.capacity_bps.into()));
            cols.push(("capacity_mbit_s", self.capacity_bps.map(|c| c / 1e6).into()));
        }
        if self.derivative_bps_per_hz.is_some() {
            cols.push(("derivative_bps_per_hz", self.derivative_bps_per_hz.into()));
        }
        if self.percent_of_max.is_some() {
            cols.push(("percent_of_max", self.percent_of_max.into()));
        }
        cols
    }
}

/// Capacity at one grid point through the matching core operation.
fn point_capacity(
    mode: SweepMode,
    frequency: f64,
    factor: Option<f64>,
    d: DelaySpread,
    modulation: ModulationScheme,
) -> Result<CapacityResult> {
    Ok(match mode {
        SweepMode::Ideal { snr } => ideal_capacity(PulseSpec::from_bandwidth(frequency)?, d, snr),
        SweepMode::Binary => binary_capacity(PulseSpec::from_bandwidth(frequency)?, d),
        SweepMode::MostlyDigital => mostly_digital_capacity(
            SamplingConfig::new(frequency, factor.expect("digital rows carry a factor"))?,
            d,
            modulation,
        ),
        SweepMode::Mixed => mixed_capacity(CircuitFrequency::from_hertz(frequency)?, d, modulation),
    })
}

/// One row per grid point, ordered by delay spread, then sampling factor,
/// then frequency.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.range.grid();
    let factors = spec.factor_axis();
    let mut rows = Vec::with_capacity(spec.row_count());
    for &d in &spec.delay_spreads {
        for &factor in &factors {
            let model = match factor {
                Some(n) => FrequencyModel::mostly_digital(n)?,
                None => FrequencyModel::Mixed,
            };
            // d(mC)/dF = m dC/dF; for the ideal model m is the Shannon term
            let scale = match spec.mode {
                SweepMode::Ideal { snr } => 0.5 * (1.0 + snr.linear()).log2(),
                SweepMode::Binary => 1.0,
                SweepMode::MostlyDigital | SweepMode::Mixed => spec.modulation.multiplier(),
            };
            for &f in &grid {
                let capacity = spec
                    .outputs
                    .capacity
                    .then(|| point_capacity(spec.mode, f, factor, d, spec.modulation))
                    .transpose()?
                    .map(|c| c.rate);
                let derivative = spec
                    .outputs
                    .derivative
                    .then(|| capacity_derivative(model, f, d).map(|g| scale * g))
                    .transpose()?;
                let percent = spec
                    .outputs
                    .percent_of_max
                    .then(|| percent_of_max(model, f, d))
                    .transpose()?;
                rows.push(SweepRow {
                    frequency_hz: f,
                    delay_spread_s: d.seconds(),
                    sampling_factor: factor,
                    modulation_order: spec.modulation.order(),
                    capacity_bps: capacity,
                    derivative_bps_per_hz: derivative,
                    percent_of_max: percent,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::{asymptote_with, MaryConvention};

    #[test]
    fn grids_hit_both_endpoints() {
        let g = FrequencyRange::log(0.1e9, 100e9, 200).grid();
        assert_eq!(g.len(), 200);
        assert_eq!(g[0], 0.1e9);
        assert_eq!(g[199], 100e9);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        let g = FrequencyRange::linear(1e9, 2e9, 3).grid();
        assert_eq!(g, vec![1e9, 1.5e9, 2e9]);
    }

    #[test]
    fn two_point_sweep_has_two_rows() {
        let spec = SweepSpec {
            range: FrequencyRange::linear(1e9, 2e9, 2),
            delay_spreads: vec![DelaySpread::from_seconds(5e-9).unwrap()],
            outputs: SweepOutputs::CAPACITY,
            ..SweepSpec::mixed()
        };
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].derivative_bps_per_hz.is_none());
    }

    #[test]
    fn digital_sweep_bounds_and_table_point() {
        let mut spec = SweepSpec::mostly_digital();
        spec.range = FrequencyRange::log(0.1e9, 100e9, 301);
        spec.sampling_factors = vec![2.0, 4.0];
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 301 * 3 * 2);
        for r in &rows {
            assert!(r.capacity_bps.unwrap() < 1.0 / r.delay_spread_s);
        }
        // log grid with 301 points over three decades lands on 2 GSPS only
        // approximately, so check the operating point directly
        let d17 = DelaySpread::from_seconds(17e-9).unwrap();
        let c = point_capacity(
            SweepMode::MostlyDigital,
            2e9,
            Some(4.0),
            d17,
            ModulationScheme::binary(),
        )
        .unwrap();
        assert!((c.rate_mbps() - 52.63157895).abs() < 1e-7);
    }

    #[test]
    fn monotone_along_frequency() {
        for spec in [
            SweepSpec::mostly_digital(),
            SweepSpec::mixed(),
            SweepSpec {
                outputs: SweepOutputs::ALL,
                ..SweepSpec::binary_bandwidth()
            },
        ] {
            let rows = run_sweep(&spec).unwrap();
            for curve in rows.chunks(spec.range.points) {
                for w in curve.windows(2) {
                    assert!(w[1].capacity_bps > w[0].capacity_bps);
                    assert!(w[1].derivative_bps_per_hz < w[0].derivative_bps_per_hz);
                    assert!(w[1].percent_of_max > w[0].percent_of_max);
                }
            }
        }
    }

    #[test]
    fn mary_sweep_scales_capacity_and_derivative() {
        let m4 = ModulationScheme::new(4, MaryConvention::MinusOne).unwrap();
        let base = run_sweep(&SweepSpec::mixed()).unwrap();
        let mary = run_sweep(&SweepSpec {
            modulation: m4,
            ..SweepSpec::mixed()
        })
        .unwrap();
        for (b, m) in base.iter().zip(&mary) {
            assert_eq!(m.capacity_bps.unwrap(), 3.0 * b.capacity_bps.unwrap());
            assert_eq!(
                m.derivative_bps_per_hz.unwrap(),
                3.0 * b.derivative_bps_per_hz.unwrap()
            );
            assert_eq!(m.percent_of_max, b.percent_of_max);
            let d = DelaySpread::from_seconds(m.delay_spread_s).unwrap();
            assert!(m.capacity_bps.unwrap() < asymptote_with(d, m4).unwrap());
        }
    }

    #[test]
    fn ideal_sweep_uses_shannon_term() {
        let snr = SnrValue::from_linear(15.0).unwrap();
        let spec = SweepSpec {
            mode: SweepMode::Ideal { snr },
            outputs: SweepOutputs::ALL,
            ..SweepSpec::binary_bandwidth()
        };
        let ideal = run_sweep(&spec).unwrap();
        let binary = run_sweep(&SweepSpec {
            outputs: SweepOutputs::ALL,
            ..SweepSpec::binary_bandwidth()
        })
        .unwrap();
        for (i, b) in ideal.iter().zip(&binary) {
            assert_eq!(i.capacity_bps.unwrap(), 2.0 * b.capacity_bps.unwrap());
            assert_eq!(
                i.derivative_bps_per_hz.unwrap(),
                2.0 * b.derivative_bps_per_hz.unwrap()
            );
        }
    }

    #[test]
    fn invalid_specs() {
        let bad = |spec: SweepSpec| run_sweep(&spec).unwrap_err();
        bad(SweepSpec {
            range: FrequencyRange::log(2e9, 1e9, 10),
            ..SweepSpec::mixed()
        });
        bad(SweepSpec {
            range: FrequencyRange::log(1e9, 2e9, 1),
            ..SweepSpec::mixed()
        });
        bad(SweepSpec {
            delay_spreads: vec![],
            ..SweepSpec::mixed()
        });
        bad(SweepSpec {
            parameter: SweptParameter::SamplingFrequency,
            ..SweepSpec::mixed()
        });
        bad(SweepSpec {
            sampling_factors: vec![1.0],
            ..SweepSpec::mostly_digital()
        });
        bad(SweepSpec {
            modulation: ModulationScheme::new(3, MaryConvention::MinusOne).unwrap(),
            ..SweepSpec::binary_bandwidth()
        });
    }

    #[test]
    fn zero_delay_spread_with_percent_is_a_domain_error() {
        let spec = SweepSpec {
            delay_spreads: vec![DelaySpread::from_seconds(0.0).unwrap()],
            ..SweepSpec::mixed()
        };
        assert!(run_sweep(&spec).unwrap_err().is_domain());
        let ok = SweepSpec {
            outputs: SweepOutputs::CAPACITY,
            ..spec
        };
        let rows = run_sweep(&ok).unwrap();
        let (c, f) = (rows[0].capacity_bps.unwrap(), rows[0].frequency_hz);
        assert!(((c - f) / f).abs() < 1e-15);
    }
}
