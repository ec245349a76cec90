use super::*;
use crate::units::{format_quantity, parse_quantity, Unit};

fn text(s: &str) -> FieldValue {
    FieldValue::Text(s.to_string())
}

fn required<'a>(cells: &[&'a str], i: usize, name: &str) -> std::result::Result<&'a str, String> {
    let cell = cells[i].trim();
    if cell.is_empty() {
        Err(format!("missing required column {name}"))
    } else {
        Ok(cell)
    }
}

fn is_blank(cell: &str) -> bool {
    matches!(cell.trim(), "" | "-")
}

fn quantity(cell: &str, name: &str, dim: Dimension) -> std::result::Result<f64, String> {
    parse_quantity(cell, dim).map_err(|e| format!("column {name}: {e}"))
}

fn integer<T: FromStr>(cell: &str, name: &str) -> std::result::Result<T, String> {
    cell.trim()
        .parse()
        .map_err(|_| format!("column {name}: {cell:?} is not an integer in range"))
}

fn number(cell: &str, name: &str) -> std::result::Result<f64, String> {
    let v: f64 = cell
        .trim()
        .parse()
        .map_err(|_| format!("column {name}: {cell:?} is not a number"))?;
    if !v.is_finite() {
        return Err(format!("column {name}: {cell:?} is not finite"));
    }
    Ok(v)
}

/// Watts as a plain number, or with a `W`/`mW` suffix.
fn watts(cell: &str) -> std::result::Result<f64, String> {
    let cell = cell.trim();
    if cell.ends_with('W') {
        quantity(cell, "dissipated_power_w", Dimension::Power)
    } else {
        number(cell, "dissipated_power_w")
    }
}

fn opt_to_string<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Record for AdcEntry {
    const SCHEMA: &'static [&'static str] = &[
        "designer",
        "year",
        "sampling_frequency",
        "bit_precision",
        "dissipated_power_w",
        "source",
        "reference",
    ];
    const FIELDS: &'static [&'static str] = &[
        "designer",
        "year",
        "sampling_frequency",
        "bit_precision",
        "dissipated_power",
        "source",
        "reference",
    ];

    fn field(&self, name: &str) -> Option<FieldValue> {
        Some(match name {
            "designer" => text(&self.designer),
            "year" => self
                .year
                .map_or(FieldValue::Absent, |y| FieldValue::Number(y.into())),
            "sampling_frequency" => {
                FieldValue::Quantity(self.sampling_frequency, Dimension::Frequency)
            }
            "bit_precision" => FieldValue::Number(self.bit_precision.into()),
            "dissipated_power" | "dissipated_power_w" => {
                self.dissipated_power.map_or(FieldValue::Absent, |p| {
                    FieldValue::Quantity(p, Dimension::Power)
                })
            }
            "source" => text(self.source.as_str()),
            "reference" => text(&self.reference),
            _ => return None,
        })
    }

    fn to_csv_row(&self) -> Vec<String> {
        vec![
            self.designer.clone(),
            opt_to_string(self.year),
            format_quantity(self.sampling_frequency, &Unit::SAMPLE_RATE),
            self.bit_precision.to_string(),
            opt_to_string(self.dissipated_power),
            self.source.as_str().to_string(),
            self.reference.clone(),
        ]
    }

    fn from_csv_row(cells: &[&str], table: TableId) -> std::result::Result<Self, String> {
        let source = if cells[5].trim().is_empty() {
            match table {
                TableId::AdcStateOfArt => AdcSource::StateOfArt,
                _ => AdcSource::Market,
            }
        } else {
            cells[5].parse()?
        };
        let entry = AdcEntry {
            designer: required(cells, 0, "designer")?.to_string(),
            year: if is_blank(cells[1]) {
                None
            } else {
                Some(integer(cells[1], "year")?)
            },
            sampling_frequency: quantity(
                required(cells, 2, "sampling_frequency")?,
                "sampling_frequency",
                Dimension::Frequency,
            )?,
            bit_precision: integer(required(cells, 3, "bit_precision")?, "bit_precision")?,
            dissipated_power: if is_blank(cells[4]) {
                None
            } else {
                Some(watts(cells[4])?)
            },
            source,
            reference: cells[6].trim().to_string(),
        };
        entry.validate()?;
        Ok(entry)
    }
}

impl Record for ChannelEnvironment {
    const SCHEMA: &'static [&'static str] = &["name", "sight", "rms_delay_spread"];
    const FIELDS: &'static [&'static str] = &["name", "sight", "rms_delay_spread"];

    fn field(&self, name: &str) -> Option<FieldValue> {
        Some(match name {
            "name" => text(&self.name),
            "sight" => text(self.sight.as_str()),
            "rms_delay_spread" => FieldValue::Quantity(self.rms_delay_spread, Dimension::Time),
            _ => return None,
        })
    }

    fn to_csv_row(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            self.sight.as_str().to_string(),
            format_quantity(self.rms_delay_spread, &Unit::TIME),
        ]
    }

    fn from_csv_row(cells: &[&str], _: TableId) -> std::result::Result<Self, String> {
        let entry = ChannelEnvironment {
            name: required(cells, 0, "name")?.to_string(),
            sight: required(cells, 1, "sight")?.parse()?,
            rms_delay_spread: quantity(
                required(cells, 2, "rms_delay_spread")?,
                "rms_delay_spread",
                Dimension::Time,
            )?,
        };
        entry.validate()?;
        Ok(entry)
    }
}

impl Record for PulseGeneratorEntry {
    const SCHEMA: &'static [&'static str] = &[
        "year",
        "author",
        "technology",
        "min_pulse_duration",
        "max_pulse_duration",
        "reference",
    ];
    const FIELDS: &'static [&'static str] = Self::SCHEMA;

    fn field(&self, name: &str) -> Option<FieldValue> {
        Some(match name {
            "year" => FieldValue::Number(self.year.into()),
            "author" => text(&self.author),
            "technology" => text(&self.technology),
            "min_pulse_duration" => FieldValue::Quantity(self.min_pulse_duration, Dimension::Time),
            "max_pulse_duration" => self.max_pulse_duration.map_or(FieldValue::Absent, |t| {
                FieldValue::Quantity(t, Dimension::Time)
            }),
            "reference" => text(&self.reference),
            _ => return None,
        })
    }

    fn to_csv_row(&self) -> Vec<String> {
        vec![
            self.year.to_string(),
            self.author.clone(),
            self.technology.clone(),
            format_quantity(self.min_pulse_duration, &Unit::TIME),
            self.max_pulse_duration
                .map(|t| format_quantity(t, &Unit::TIME))
                .unwrap_or_default(),
            self.reference.clone(),
        ]
    }

    fn from_csv_row(cells: &[&str], _: TableId) -> std::result::Result<Self, String> {
        let entry = PulseGeneratorEntry {
            year: integer(required(cells, 0, "year")?, "year")?,
            author: required(cells, 1, "author")?.to_string(),
            technology: cells[2].trim().to_string(),
            min_pulse_duration: quantity(
                required(cells, 3, "min_pulse_duration")?,
                "min_pulse_duration",
                Dimension::Time,
            )?,
            max_pulse_duration: if is_blank(cells[4]) {
                None
            } else {
                Some(quantity(cells[4], "max_pulse_duration", Dimension::Time)?)
            },
            reference: cells[5].trim().to_string(),
        };
        entry.validate()?;
        Ok(entry)
    }
}

impl Record for AntennaConfigEntry {
    const SCHEMA: &'static [&'static str] = &[
        "band",
        "tx_beamwidth_deg",
        "rx_beamwidth_deg",
        "rms_delay_spread",
    ];
    const FIELDS: &'static [&'static str] =
        &["band", "tx_beamwidth", "rx_beamwidth", "rms_delay_spread"];

    fn field(&self, name: &str) -> Option<FieldValue> {
        Some(match name {
            "band" => text(self.band.as_str()),
            "tx_beamwidth" | "tx_beamwidth_deg" => FieldValue::Number(self.tx_beamwidth),
            "rx_beamwidth" | "rx_beamwidth_deg" => FieldValue::Number(self.rx_beamwidth),
            "rms_delay_spread" => FieldValue::Quantity(self.rms_delay_spread, Dimension::Time),
            _ => return None,
        })
    }

    fn to_csv_row(&self) -> Vec<String> {
        vec![
            self.band.as_str().to_string(),
            self.tx_beamwidth.to_string(),
            self.rx_beamwidth.to_string(),
            format_quantity(self.rms_delay_spread, &Unit::TIME),
        ]
    }

    fn from_csv_row(cells: &[&str], _: TableId) -> std::result::Result<Self, String> {
        let entry = AntennaConfigEntry {
            band: required(cells, 0, "band")?.parse()?,
            tx_beamwidth: number(required(cells, 1, "tx_beamwidth_deg")?, "tx_beamwidth_deg")?,
            rx_beamwidth: number(required(cells, 2, "rx_beamwidth_deg")?, "rx_beamwidth_deg")?,
            rms_delay_spread: quantity(
                required(cells, 3, "rms_delay_spread")?,
                "rms_delay_spread",
                Dimension::Time,
            )?,
        };
        entry.validate()?;
        Ok(entry)
    }
}
