//! Survey tables: A/D converters, IEEE 802.15.4a channel delay spreads,
//! UWB pulse generators and directive-antenna delay spreads.
//!
//! The built-in tables are embedded verbatim (decimal commas converted to
//! points, blank cells kept as absent). User extensions come in through
//! [`ingest_csv`] using the same schemas [`write_csv`] emits.

mod builtin;
mod csv_io;
mod query;
mod records;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::units::Dimension;

pub use builtin::{
    adc_market, adc_state_of_art, antenna_configs, channels, load_builtin, pulse_generators,
};
pub use csv_io::{ingest_csv, parse_csv, to_csv_string, write_csv};
pub use query::{query, select, Comparison, Extreme, Filter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableId {
    AdcStateOfArt,
    AdcMarket,
    Channels,
    PulseGenerators,
    AntennaConfigs,
}

impl TableId {
    pub const ALL: [TableId; 5] = [
        TableId::AdcStateOfArt,
        TableId::AdcMarket,
        TableId::Channels,
        TableId::PulseGenerators,
        TableId::AntennaConfigs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::AdcStateOfArt => "adc_state_of_art",
            TableId::AdcMarket => "adc_market",
            TableId::Channels => "channels",
            TableId::PulseGenerators => "pulse_generators",
            TableId::AntennaConfigs => "antenna_configs",
        }
    }

    /// CSV header of the table's schema.
    pub fn schema(self) -> &'static [&'static str] {
        match self {
            TableId::AdcStateOfArt | TableId::AdcMarket => AdcEntry::SCHEMA,
            TableId::Channels => ChannelEnvironment::SCHEMA,
            TableId::PulseGenerators => PulseGeneratorEntry::SCHEMA,
            TableId::AntennaConfigs => AntennaConfigEntry::SCHEMA,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    /// Accepts `snake_case` and `kebab-case` spellings.
    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_lowercase().replace('-', "_");
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == normalized)
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

/// A field value as seen by filters and selectors.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldValue {
    Quantity(f64, Dimension),
    Number(f64),
    Text(String),
    Absent,
}

/// A row of one of the survey tables.
pub trait Record: Clone + Serialize {
    /// CSV header, in column order.
    const SCHEMA: &'static [&'static str];
    /// Names accepted by [`Record::field`].
    const FIELDS: &'static [&'static str];

    /// `None` when `name` is not a field of this record.
    fn field(&self, name: &str) -> Option<FieldValue>;

    fn to_csv_row(&self) -> Vec<String>;

    /// Parses one CSV row; `cells` is padded with empty strings up to the
    /// schema width. `table` lets ADC rows default their `source` column.
    fn from_csv_row(cells: &[&str], table: TableId) -> std::result::Result<Self, String>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AdcSource {
    StateOfArt,
    Market,
}

impl AdcSource {
    pub fn as_str(self) -> &'static str {
        match self {
            AdcSource::StateOfArt => "state_of_art",
            AdcSource::Market => "market",
        }
    }
}

impl FromStr for AdcSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "state_of_art" => Ok(AdcSource::StateOfArt),
            "market" => Ok(AdcSource::Market),
            other => Err(format!(
                "unknown source {other:?} (expected state_of_art or market)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdcEntry {
    pub designer: String,
    pub year: Option<u16>,
    #[serde(rename = "sampling_frequency_hz")]
    pub sampling_frequency: f64,
    pub bit_precision: u8,
    #[serde(rename = "dissipated_power_w")]
    pub dissipated_power: Option<f64>,
    pub source: AdcSource,
    pub reference: String,
}

impl AdcEntry {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if !(self.sampling_frequency.is_finite() && self.sampling_frequency > 0.0) {
            return Err(format!(
                "sampling_frequency must be > 0, got {} Hz",
                self.sampling_frequency
            ));
        }
        if !(1..=32).contains(&self.bit_precision) {
            return Err(format!(
                "bit_precision must be in 1..=32, got {}",
                self.bit_precision
            ));
        }
        if let Some(p) = self.dissipated_power {
            if !(p.is_finite() && p >= 0.0) {
                return Err(format!("dissipated_power must be >= 0, got {p} W"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sight {
    #[serde(rename = "LOS")]
    Los,
    #[serde(rename = "NLOS")]
    Nlos,
}

impl Sight {
    pub fn as_str(self) -> &'static str {
        match self {
            Sight::Los => "LOS",
            Sight::Nlos => "NLOS",
        }
    }
}

impl FromStr for Sight {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "LOS" => Ok(Sight::Los),
            "NLOS" => Ok(Sight::Nlos),
            other => Err(format!("unknown sight {other:?} (expected LOS or NLOS)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelEnvironment {
    pub name: String,
    pub sight: Sight,
    #[serde(rename = "rms_delay_spread_s")]
    pub rms_delay_spread: f64,
}

impl ChannelEnvironment {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if !(self.rms_delay_spread.is_finite() && self.rms_delay_spread > 0.0) {
            return Err(format!(
                "rms_delay_spread must be > 0, got {} s",
                self.rms_delay_spread
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PulseGeneratorEntry {
    pub year: u16,
    pub author: String,
    pub technology: String,
    #[serde(rename = "min_pulse_duration_s")]
    pub min_pulse_duration: f64,
    #[serde(rename = "max_pulse_duration_s")]
    pub max_pulse_duration: Option<f64>,
    pub reference: String,
}

impl PulseGeneratorEntry {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if !(self.min_pulse_duration.is_finite() && self.min_pulse_duration > 0.0) {
            return Err(format!(
                "min_pulse_duration must be > 0, got {} s",
                self.min_pulse_duration
            ));
        }
        if let Some(max) = self.max_pulse_duration {
            if max.is_nan() || max < self.min_pulse_duration {
                return Err(format!(
                    "max_pulse_duration {max} s is below min_pulse_duration {} s",
                    self.min_pulse_duration
                ));
            }
        }
        Ok(())
    }

    /// Bandwidth of the shortest pulse, `1 / T_p,min`.
    pub fn max_bandwidth(&self) -> f64 {
        1.0 / self.min_pulse_duration
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Band {
    #[serde(rename = "UWB_3_10GHz")]
    Uwb3To10GHz,
    #[serde(rename = "UWB_60GHz")]
    Uwb60GHz,
}

impl Band {
    pub fn as_str(self) -> &'static str {
        match self {
            Band::Uwb3To10GHz => "UWB_3_10GHz",
            Band::Uwb60GHz => "UWB_60GHz",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Band::Uwb3To10GHz => "UWB 3-10 GHz",
            Band::Uwb60GHz => "UWB 60 GHz",
        }
    }
}

impl FromStr for Band {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "UWB_3_10GHz" => Ok(Band::Uwb3To10GHz),
            "UWB_60GHz" => Ok(Band::Uwb60GHz),
            other => Err(format!(
                "unknown band {other:?} (expected UWB_3_10GHz or UWB_60GHz)"
            )),
        }
    }
}

/// Residential LOS delay spread for a given antenna half-power beamwidth pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AntennaConfigEntry {
    pub band: Band,
    #[serde(rename = "tx_beamwidth_deg")]
    pub tx_beamwidth: f64,
    #[serde(rename = "rx_beamwidth_deg")]
    pub rx_beamwidth: f64,
    #[serde(rename = "rms_delay_spread_s")]
    pub rms_delay_spread: f64,
}

impl AntennaConfigEntry {
    pub fn validate(&self) -> std::result::Result<(), String> {
        for (name, bw) in [
            ("tx_beamwidth", self.tx_beamwidth),
            ("rx_beamwidth", self.rx_beamwidth),
        ] {
            if !(bw > 0.0 && bw <= 360.0) {
                return Err(format!("{name} must lie in (0, 360] degrees, got {bw}"));
            }
        }
        if !(self.rms_delay_spread.is_finite() && self.rms_delay_spread > 0.0) {
            return Err(format!(
                "rms_delay_spread must be > 0, got {} s",
                self.rms_delay_spread
            ));
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        format!(
            "{} Tx {}°/Rx {}°",
            self.band.label(),
            self.tx_beamwidth,
            self.rx_beamwidth
        )
    }
}

/// Entries of any table, for callers that pick the table at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Entries {
    Adc(Vec<AdcEntry>),
    Channels(Vec<ChannelEnvironment>),
    PulseGenerators(Vec<PulseGeneratorEntry>),
    AntennaConfigs(Vec<AntennaConfigEntry>),
}

/// Runs `$body` with `$v` bound to the typed vector inside an [`Entries`].
#[macro_export]
macro_rules! with_entries {
    ($entries:expr, $v:ident => $body:expr) => {
        match $entries {
            $crate::datasets::Entries::Adc($v) => $body,
            $crate::datasets::Entries::Channels($v) => $body,
            $crate::datasets::Entries::PulseGenerators($v) => $body,
            $crate::datasets::Entries::AntennaConfigs($v) => $body,
        }
    };
}

impl Entries {
    pub fn len(&self) -> usize {
        with_entries!(self, v => v.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn fields(&self) -> &'static [&'static str] {
        match self {
            Entries::Adc(_) => AdcEntry::FIELDS,
            Entries::Channels(_) => ChannelEnvironment::FIELDS,
            Entries::PulseGenerators(_) => PulseGeneratorEntry::FIELDS,
            Entries::AntennaConfigs(_) => AntennaConfigEntry::FIELDS,
        }
    }

    pub fn filter(&self, filters: &[Filter]) -> Result<Entries> {
        Ok(match self {
            Entries::Adc(v) => Entries::Adc(query(v, filters)?),
            Entries::Channels(v) => Entries::Channels(query(v, filters)?),
            Entries::PulseGenerators(v) => Entries::PulseGenerators(query(v, filters)?),
            Entries::AntennaConfigs(v) => Entries::AntennaConfigs(query(v, filters)?),
        })
    }

    /// Keeps only the entry with the smallest or largest `field`.
    pub fn select(&self, field: &str, extreme: Extreme) -> Result<Entries> {
        fn one<T: Record>(v: &[T], field: &str, extreme: Extreme) -> Result<Vec<T>> {
            Ok(select(v, field, extreme)?.into_iter().collect())
        }
        Ok(match self {
            Entries::Adc(v) => Entries::Adc(one(v, field, extreme)?),
            Entries::Channels(v) => Entries::Channels(one(v, field, extreme)?),
            Entries::PulseGenerators(v) => Entries::PulseGenerators(one(v, field, extreme)?),
            Entries::AntennaConfigs(v) => Entries::AntennaConfigs(one(v, field, extreme)?),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(with_entries!(self, v => serde_json::to_string_pretty(v))?)
    }

    pub fn to_csv(&self) -> Result<String> {
        with_entries!(self, v => to_csv_string(v))
    }
}
