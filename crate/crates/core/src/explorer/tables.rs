//! Reproduction of the mostly-digital and mixed achievable-rate tables from
//! the built-in surveys, with their printed values as golden fixtures.

use serde::Serialize;

use crate::capacity::{
    mixed_capacity, mostly_digital_capacity, CircuitFrequency, DelaySpread, MaryConvention,
    ModulationScheme, SamplingConfig,
};
use crate::datasets::{self, AdcEntry, AdcSource, ChannelEnvironment};
use crate::error::{Error, Result};
use crate::output::{Cell, Tabular};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrequencyKind {
    SamplingFrequency,
    CircuitFrequency,
}

/// One operating point of a reproduced table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioRow {
    pub environment: String,
    pub delay_spread_s: f64,
    pub frequency_kind: FrequencyKind,
    pub frequency_hz: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling_factor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pulse_generator: Option<String>,
    pub modulation_order: u32,
    pub capacity_bps: f64,
}

impl ScenarioRow {
    pub fn capacity_mbps(&self) -> f64 {
        self.capacity_bps / 1e6
    }
}

impl Tabular for ScenarioRow {
    fn columns(&self) -> Vec<(&'static str, Cell)> {
        let mut cols = vec![
            ("environment", self.environment.as_str().into()),
            ("delay_spread_s", self.delay_spread_s.into()),
        ];
        match self.frequency_kind {
            FrequencyKind::SamplingFrequency => {
                cols.push(("sampling_frequency_hz", self.frequency_hz.into()));
                cols.push(("sampling_factor", self.sampling_factor.into()));
            }
            FrequencyKind::CircuitFrequency => {
                cols.push((
                    "pulse_generator",
                    self.pulse_generator.as_deref().unwrap_or("").into(),
                ));
                cols.push(("bandwidth_hz", self.frequency_hz.into()));
            }
        }
        cols.push((
            "modulation_order",
            Cell::Integer(self.modulation_order.into()),
        ));
        cols.push(("capacity_bps", self.capacity_bps.into()));
        cols.push(("capacity_mbit_s", self.capacity_mbps().into()));
        cols
    }
}

/// ADC rates of the mostly-digital table.
pub const TABLE_IV_SAMPLING_FREQUENCIES: [f64; 3] = [2e9, 5e9, 10e9];
pub const TABLE_IV_ENVIRONMENTS: [&str; 3] =
    ["Residential LOS", "Industrial LOS", "Industrial NLOS"];

/// Printed mostly-digital rates: environment, d_RMS (ns), F_s (GSPS), n, Mbit/s.
pub const TABLE_IV_GOLDEN: [(&str, f64, f64, f64, f64); 9] = [
    ("Residential LOS", 17.0, 2.0, 4.0, 52.63157895),
    ("Residential LOS", 17.0, 5.0, 4.0, 56.17977528),
    ("Residential LOS", 17.0, 10.0, 4.0, 57.47126437),
    ("Industrial LOS", 9.0, 2.0, 4.0, 90.90909091),
    ("Industrial LOS", 9.0, 5.0, 4.0, 102.0408163),
    ("Industrial LOS", 9.0, 10.0, 4.0, 106.3829787),
    ("Industrial NLOS", 89.0, 2.0, 4.0, 10.98901099),
    ("Industrial NLOS", 89.0, 5.0, 4.0, 11.13585746),
    ("Industrial NLOS", 89.0, 10.0, 4.0, 11.18568233),
];
pub const TABLE_IV_TOLERANCE: f64 = 1e-6;

/// Antenna configuration (row index in the antenna survey) paired with a
/// pulse generator (author in the pulse-generator survey).
pub const TABLE_VII_SCENARIOS: [(usize, &str); 10] = [
    (0, "Kim et al."),
    (0, "Badalawa et al."),
    (0, "Bachelet et al."),
    (1, "Bachelet et al."),
    (2, "Bachelet et al."),
    (3, "Bachelet et al."),
    (4, "Bachelet et al."),
    (5, "Bachelet et al."),
    (6, "Bachelet et al."),
    (6, "Deparis et al."),
];

/// Printed mixed rates: d_RMS (ns), pulse generator ref, bandwidth (GHz),
/// Mbit/s for binary, ternary and M=4.
pub const TABLE_VII_GOLDEN: [(f64, &str, f64, [f64; 3]); 10] = [
    (17.0, "[15]", 2.63, [57.54, 115.07, 172.61]),
    (17.0, "[14]", 4.46, [58.06, 116.12, 174.17]),
    (17.0, "[16]", 10.87, [58.51, 117.01, 175.52]),
    (7.718, "[16]", 10.87, [128.04, 256.08, 384.12]),
    (6.2, "[16]", 10.87, [158.93, 317.86, 476.80]),
    (3.455, "[16]", 10.87, [281.93, 563.86, 845.79]),
    (2.147, "[16]", 10.87, [446.63, 893.26, 1339.89]),
    (0.948, "[16]", 10.87, [961.54, 1923.08, 2884.63]),
    (0.87, "[16]", 10.87, [1039.51, 2079.01, 3118.52]),
    (0.87, "[13]", 20.00, [1086.96, 2173.91, 3260.87]),
];
pub const TABLE_VII_TOLERANCE: f64 = 0.005;
pub const TABLE_VII_ORDERS: [u32; 3] = [2, 3, 4];

/// Mostly-digital rates for three channels at 2, 5 and 10 GSPS with a
/// sampling factor of 4.
pub fn reproduce_table_iv() -> Vec<ScenarioRow> {
    let channels = datasets::channels();
    let mut rows = Vec::with_capacity(9);
    for name in TABLE_IV_ENVIRONMENTS {
        let env = channels
            .iter()
            .find(|c| c.name == name)
            .expect("built-in channel table lists every environment");
        let d = DelaySpread::from_seconds(env.rms_delay_spread).expect("positive by invariant");
        for fs in TABLE_IV_SAMPLING_FREQUENCIES {
            let sampling = SamplingConfig::new(fs, SamplingConfig::CANONICAL_FACTOR)
                .expect("literal configuration");
            let c = mostly_digital_capacity(sampling, d, ModulationScheme::binary());
            rows.push(ScenarioRow {
                environment: env.name.clone(),
                delay_spread_s: env.rms_delay_spread,
                frequency_kind: FrequencyKind::SamplingFrequency,
                frequency_hz: fs,
                sampling_factor: Some(SamplingConfig::CANONICAL_FACTOR),
                pulse_generator: None,
                modulation_order: 2,
                capacity_bps: c.rate,
            });
        }
    }
    rows
}

/// Mixed-implementation rates: each scenario's circuit frequency is the
/// bandwidth of the generator's shortest pulse. Rows are grouped per
/// scenario as binary, ternary, M=4.
pub fn reproduce_table_vii() -> Vec<ScenarioRow> {
    let antennas = datasets::antenna_configs();
    let generators = datasets::pulse_generators();
    let mut rows = Vec::with_capacity(30);
    for (antenna, author) in TABLE_VII_SCENARIOS {
        let config = &antennas[antenna];
        let generator = generators
            .iter()
            .find(|g| g.author == author)
            .expect("built-in pulse generator table lists every scenario author");
        let d = DelaySpread::from_seconds(config.rms_delay_spread).expect("positive by invariant");
        let circuit =
            CircuitFrequency::from_hertz(generator.max_bandwidth()).expect("positive by invariant");
        for order in TABLE_VII_ORDERS {
            let m = ModulationScheme::new(order, MaryConvention::MinusOne).expect("order >= 2");
            let c = mixed_capacity(circuit, d, m);
            rows.push(ScenarioRow {
                environment: config.label(),
                delay_spread_s: config.rms_delay_spread,
                frequency_kind: FrequencyKind::CircuitFrequency,
                frequency_hz: circuit.hertz(),
                sampling_factor: None,
                pulse_generator: Some(format!("{} {}", generator.reference, generator.author)),
                modulation_order: order,
                capacity_bps: c.rate,
            });
        }
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenComparison {
    pub label: String,
    pub expected: f64,
    pub actual: f64,
    pub relative_error: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenCheck {
    pub table: &'static str,
    pub tolerance: f64,
    pub comparisons: Vec<GoldenComparison>,
}

impl GoldenCheck {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.pass)
    }

    pub fn max_relative_error(&self) -> f64 {
        self.comparisons
            .iter()
            .map(|c| c.relative_error)
            .fold(0.0, f64::max)
    }

    fn push(&mut self, label: String, expected: f64, actual: f64) {
        let relative_error = ((actual - expected) / expected).abs();
        self.comparisons.push(GoldenComparison {
            label,
            expected,
            actual,
            relative_error,
            pass: relative_error <= self.tolerance,
        });
    }
}

impl Tabular for GoldenComparison {
    fn columns(&self) -> Vec<(&'static str, Cell)> {
        vec![
            ("row", self.label.as_str().into()),
            ("expected_mbit_s", self.expected.into()),
            ("actual_mbit_s", self.actual.into()),
            ("relative_error", self.relative_error.into()),
            ("pass", if self.pass { "yes" } else { "NO" }.into()),
        ]
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    ((a - b) / b).abs() <= rel
}

/// Compares reproduced mostly-digital rows with the printed values. The
/// inputs (delay spread, rate, factor) must match exactly as well.
pub fn check_table_iv(rows: &[ScenarioRow]) -> Result<GoldenCheck> {
    if rows.len() != TABLE_IV_GOLDEN.len() {
        return Err(Error::invalid(
            "table",
            format!(
                "expected {} rows, got {}",
                TABLE_IV_GOLDEN.len(),
                rows.len()
            ),
        ));
    }
    let mut check = GoldenCheck {
        table: "iv",
        tolerance: TABLE_IV_TOLERANCE,
        comparisons: Vec::new(),
    };
    for (row, &(env, d_ns, fs_gsps, n, mbps)) in rows.iter().zip(&TABLE_IV_GOLDEN) {
        let inputs_match = row.environment == env
            && close(row.delay_spread_s, d_ns * 1e-9, 1e-12)
            && close(row.frequency_hz, fs_gsps * 1e9, 1e-12)
            && row.sampling_factor == Some(n);
        let label = format!("{env} {d_ns} ns {fs_gsps} GSPS n={n}");
        let actual = if inputs_match {
            row.capacity_mbps()
        } else {
            f64::NAN
        };
        check.push(label, mbps, actual);
    }
    Ok(check)
}

/// Compares reproduced mixed rows with the printed values at the printed
/// two-decimal precision.
pub fn check_table_vii(rows: &[ScenarioRow]) -> Result<GoldenCheck> {
    let expected_rows = TABLE_VII_GOLDEN.len() * TABLE_VII_ORDERS.len();
    if rows.len() != expected_rows {
        return Err(Error::invalid(
            "table",
            format!("expected {expected_rows} rows, got {}", rows.len()),
        ));
    }
    let mut check = GoldenCheck {
        table: "vii",
        tolerance: TABLE_VII_TOLERANCE,
        comparisons: Vec::new(),
    };
    for (group, &(d_ns, reference, bw_ghz, rates)) in
        rows.chunks(TABLE_VII_ORDERS.len()).zip(&TABLE_VII_GOLDEN)
    {
        for ((row, order), mbps) in group.iter().zip(TABLE_VII_ORDERS).zip(rates) {
            let inputs_match = close(row.delay_spread_s, d_ns * 1e-9, 1e-12)
                // printed bandwidths are rounded to 10 MHz
                && (row.frequency_hz / 1e9 - bw_ghz).abs() <= 0.005
                && row.modulation_order == order
                && row
                    .pulse_generator
                    .as_deref()
                    .is_some_and(|g| g.starts_with(reference));
            let label = format!("{d_ns} ns {reference} {bw_ghz} GHz M={order}");
            let actual = if inputs_match {
                row.capacity_mbps()
            } else {
                f64::NAN
            };
            check.push(label, mbps, actual);
        }
    }
    Ok(check)
}

/// A survey converter used as the ADC of a mostly-digital receiver.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarketPoint {
    pub designer: String,
    pub source: AdcSource,
    pub year: Option<u16>,
    pub sampling_frequency_hz: f64,
    pub bit_precision: u8,
    pub environment: String,
    pub delay_spread_s: f64,
    pub sampling_factor: f64,
    pub capacity_bps: f64,
}

impl Tabular for MarketPoint {
    fn columns(&self) -> Vec<(&'static str, Cell)> {
        vec![
            ("designer", self.designer.as_str().into()),
            ("source", self.source.as_str().into()),
            ("sampling_frequency_hz", self.sampling_frequency_hz.into()),
            ("bit_precision", Cell::Integer(self.bit_precision.into())),
            ("environment", self.environment.as_str().into()),
            ("delay_spread_s", self.delay_spread_s.into()),
            ("sampling_factor", self.sampling_factor.into()),
            ("capacity_bps", self.capacity_bps.into()),
            ("capacity_mbit_s", (self.capacity_bps / 1e6).into()),
        ]
    }
}

/// Capacity of every survey ADC (state of the art, then market) in every
/// environment, using the converter's rate as `F_s`.
pub fn market_capacity_points(
    sampling_factor: f64,
    environments: &[ChannelEnvironment],
) -> Result<Vec<MarketPoint>> {
    let mut adcs: Vec<AdcEntry> = datasets::adc_state_of_art();
    adcs.extend(datasets::adc_market());
    market_capacity_points_for(&adcs, sampling_factor, environments)
}

pub fn market_capacity_points_for(
    adcs: &[AdcEntry],
    sampling_factor: f64,
    environments: &[ChannelEnvironment],
) -> Result<Vec<MarketPoint>> {
    let mut points = Vec::with_capacity(adcs.len() * environments.len());
    for adc in adcs {
        let sampling = SamplingConfig::new(adc.sampling_frequency, sampling_factor)?;
        for env in environments {
            let d = DelaySpread::from_seconds(env.rms_delay_spread)?;
            let c = mostly_digital_capacity(sampling, d, ModulationScheme::binary());
            points.push(MarketPoint {
                designer: adc.designer.clone(),
                source: adc.source,
                year: adc.year,
                sampling_frequency_hz: adc.sampling_frequency,
                bit_precision: adc.bit_precision,
                environment: env.name.clone(),
                delay_spread_s: env.rms_delay_spread,
                sampling_factor,
                capacity_bps: c.rate,
            });
        }
    }
    Ok(points)
}
