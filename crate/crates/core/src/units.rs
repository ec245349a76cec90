//! Unit-suffixed quantity grammar shared by the CSV datasets and the CLI.
//!
//! A quantity is a decimal number, an optional space, and a mandatory unit
//! suffix. Values are converted to SI base units (seconds, hertz, watts) by
//! shifting the decimal exponent in the text before parsing, so `"2.63 GHz"`
//! parses to exactly the same `f64` as the literal `2.63e9`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Time,
    Frequency,
    Power,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dimension::Time => "time",
            Dimension::Frequency => "frequency",
            Dimension::Power => "power",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Picosecond,
    Nanosecond,
    Microsecond,
    Millisecond,
    Second,
    Hertz,
    Kilohertz,
    Megahertz,
    Gigahertz,
    MegaSamplesPerSecond,
    GigaSamplesPerSecond,
    Watt,
    Milliwatt,
}

impl Unit {
    pub const ALL: [Unit; 13] = [
        Unit::Picosecond,
        Unit::Nanosecond,
        Unit::Microsecond,
        Unit::Millisecond,
        Unit::Second,
        Unit::Hertz,
        Unit::Kilohertz,
        Unit::Megahertz,
        Unit::Gigahertz,
        Unit::MegaSamplesPerSecond,
        Unit::GigaSamplesPerSecond,
        Unit::Watt,
        Unit::Milliwatt,
    ];

    pub const TIME: [Unit; 5] = [
        Unit::Picosecond,
        Unit::Nanosecond,
        Unit::Microsecond,
        Unit::Millisecond,
        Unit::Second,
    ];
    pub const FREQUENCY: [Unit; 4] = [
        Unit::Hertz,
        Unit::Kilohertz,
        Unit::Megahertz,
        Unit::Gigahertz,
    ];
    pub const SAMPLE_RATE: [Unit; 2] = [Unit::MegaSamplesPerSecond, Unit::GigaSamplesPerSecond];
    pub const POWER: [Unit; 2] = [Unit::Milliwatt, Unit::Watt];

    pub fn suffix(self) -> &'static str {
        match self {
            Unit::Picosecond => "ps",
            Unit::Nanosecond => "ns",
            Unit::Microsecond => "us",
            Unit::Millisecond => "ms",
            Unit::Second => "s",
            Unit::Hertz => "Hz",
            Unit::Kilohertz => "kHz",
            Unit::Megahertz => "MHz",
            Unit::Gigahertz => "GHz",
            Unit::MegaSamplesPerSecond => "MSPS",
            Unit::GigaSamplesPerSecond => "GSPS",
            Unit::Watt => "W",
            Unit::Milliwatt => "mW",
        }
    }

    /// Power of ten taking a value in this unit to the SI base unit.
    pub fn exponent(self) -> i32 {
        match self {
            Unit::Picosecond => -12,
            Unit::Nanosecond => -9,
            Unit::Microsecond => -6,
            Unit::Millisecond | Unit::Milliwatt => -3,
            Unit::Second | Unit::Hertz | Unit::Watt => 0,
            Unit::Kilohertz => 3,
            Unit::Megahertz | Unit::MegaSamplesPerSecond => 6,
            Unit::Gigahertz | Unit::GigaSamplesPerSecond => 9,
        }
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Unit::Picosecond
            | Unit::Nanosecond
            | Unit::Microsecond
            | Unit::Millisecond
            | Unit::Second => Dimension::Time,
            Unit::Hertz
            | Unit::Kilohertz
            | Unit::Megahertz
            | Unit::Gigahertz
            | Unit::MegaSamplesPerSecond
            | Unit::GigaSamplesPerSecond => Dimension::Frequency,
            Unit::Watt | Unit::Milliwatt => Dimension::Power,
        }
    }

    /// Splits a trailing unit suffix off `text`, longest suffix first.
    fn strip(text: &str) -> Option<(&str, Unit)> {
        let mut candidates = Unit::ALL;
        candidates.sort_by_key(|u| std::cmp::Reverse(u.suffix().len()));
        candidates
            .into_iter()
            .find_map(|u| text.strip_suffix(u.suffix()).map(|rest| (rest, u)))
    }
}

/// A decimal number split into its significant digits and a decimal
/// exponent: `value = d0.d1d2... × 10^exponent`.
struct Decimal {
    negative: bool,
    digits: String,
    exponent: i32,
}

impl Decimal {
    /// Parses the restricted decimal grammar `[+-]?D+(.D*)?([eE][+-]?D+)?`.
    fn parse(text: &str) -> Option<Decimal> {
        let (negative, body) = match text.as_bytes().first()? {
            b'-' => (true, &text[1..]),
            b'+' => (false, &text[1..]),
            _ => (false, text),
        };
        let (mantissa, exp_part) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], Some(&body[i + 1..])),
            None => (body, None),
        };
        let extra_exp: i32 = match exp_part {
            Some(e) => {
                let digits = e.strip_prefix(['+', '-']).unwrap_or(e);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                e.parse().ok()?
            }
            None => 0,
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty()
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return None;
        }
        let all: String = format!("{int_part}{frac_part}");
        let leading = all.bytes().take_while(|&b| b == b'0').count();
        let digits = all[leading..].trim_end_matches('0').to_string();
        if digits.is_empty() {
            return Some(Decimal {
                negative,
                digits: "0".into(),
                exponent: 0,
            });
        }
        let exponent = int_part.len() as i32 - 1 - leading as i32 + extra_exp;
        Some(Decimal {
            negative,
            digits,
            exponent,
        })
    }

    /// Shortest round-trip decimal expansion of a finite `f64`.
    fn from_f64(value: f64) -> Decimal {
        Decimal::parse(&format!("{value:e}")).expect("std scientific format is valid")
    }

    fn to_f64(&self) -> f64 {
        let sign = if self.negative { "-" } else { "" };
        format!("{sign}0.{}e{}", self.digits, self.exponent + 1)
            .parse()
            .expect("well-formed decimal")
    }

    /// Positional rendering without exponent, e.g. `2.63`, `2630000000`, `0.00263`.
    fn positional(&self) -> String {
        let sign = if self.negative && self.digits != "0" {
            "-"
        } else {
            ""
        };
        let n = self.digits.len() as i32;
        let body = if self.exponent < 0 {
            let zeros = "0".repeat((-self.exponent - 1) as usize);
            format!("0.{zeros}{}", self.digits)
        } else if self.exponent + 1 >= n {
            let zeros = "0".repeat((self.exponent + 1 - n) as usize);
            format!("{}{zeros}", self.digits)
        } else {
            let split = (self.exponent + 1) as usize;
            format!("{}.{}", &self.digits[..split], &self.digits[split..])
        };
        format!("{sign}{body}")
    }
}

/// Parses a unit-suffixed quantity of the given dimension into SI base units.
///
/// Bare numbers are rejected: the suffix is mandatory.
pub fn parse_quantity(input: &str, dimension: Dimension) -> Result<f64> {
    let err = |reason: String| Error::Quantity {
        input: input.to_string(),
        reason,
    };
    let text = input.trim();
    let (number, unit) = Unit::strip(text).ok_or_else(|| {
        err(format!(
            "missing unit suffix (expected a {dimension} unit such as {})",
            example_suffixes(dimension)
        ))
    })?;
    if unit.dimension() != dimension {
        return Err(err(format!(
            "unit {} is a {}, expected a {dimension}",
            unit.suffix(),
            unit.dimension()
        )));
    }
    let number = number.strip_suffix(' ').unwrap_or(number);
    let mut decimal = Decimal::parse(number).ok_or_else(|| err("not a decimal number".into()))?;
    if decimal.digits != "0" {
        decimal.exponent += unit.exponent();
    }
    let value = decimal.to_f64();
    if !value.is_finite() {
        return Err(err("value out of range".into()));
    }
    Ok(value)
}

fn example_suffixes(dimension: Dimension) -> String {
    Unit::ALL
        .iter()
        .filter(|u| u.dimension() == dimension)
        .map(|u| u.suffix())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Renders `value` (SI base units) in `unit` so that [`parse_quantity`]
/// recovers exactly the same `f64`.
pub fn format_in(value: f64, unit: Unit) -> String {
    let mut decimal = Decimal::from_f64(value);
    if decimal.digits != "0" {
        decimal.exponent -= unit.exponent();
    }
    format!("{} {}", decimal.positional(), unit.suffix())
}

/// Lossless rendering using the largest unit from `units` that keeps the
/// number at or above one. `units` must be ordered from smallest to largest.
pub fn format_quantity(value: f64, units: &[Unit]) -> String {
    let unit = best_unit(value, units);
    format_in(value, unit)
}

pub fn best_unit(value: f64, units: &[Unit]) -> Unit {
    let magnitude = value.abs();
    units
        .iter()
        .rev()
        .copied()
        .find(|u| magnitude >= 10f64.powi(u.exponent()))
        .unwrap_or(units[0])
}

/// Formats with `significant` significant digits, positional notation,
/// trailing fractional zeros removed.
pub fn format_significant(value: f64, significant: usize) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", significant.saturating_sub(1), value);
    let decimal = Decimal::parse(&sci).expect("std scientific format is valid");
    decimal.positional()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_and_without_space() {
        assert_eq!(parse_quantity("17 ns", Dimension::Time).unwrap(), 17e-9);
        assert_eq!(parse_quantity("17ns", Dimension::Time).unwrap(), 17e-9);
        assert_eq!(parse_quantity("0.87ns", Dimension::Time).unwrap(), 0.87e-9);
        assert_eq!(parse_quantity("380 ps", Dimension::Time).unwrap(), 380e-12);
        assert_eq!(parse_quantity("0s", Dimension::Time).unwrap(), 0.0);
        assert_eq!(parse_quantity("1 s", Dimension::Time).unwrap(), 1.0);
        assert_eq!(parse_quantity("5 us", Dimension::Time).unwrap(), 5e-6);
    }

    #[test]
    fn sample_rates_normalize_to_hertz() {
        assert_eq!(parse_quantity("2GSPS", Dimension::Frequency).unwrap(), 2e9);
        assert_eq!(
            parse_quantity("1.20 GSPS", Dimension::Frequency).unwrap(),
            1.2e9
        );
        assert_eq!(
            parse_quantity("75 MSPS", Dimension::Frequency).unwrap(),
            75e6
        );
        assert_eq!(
            parse_quantity("2.63 GHz", Dimension::Frequency).unwrap(),
            2.63e9
        );
        assert_eq!(
            parse_quantity("100 kHz", Dimension::Frequency).unwrap(),
            1e5
        );
        assert_eq!(parse_quantity("3.9 W", Dimension::Power).unwrap(), 3.9);
        assert_eq!(parse_quantity("340 mW", Dimension::Power).unwrap(), 0.34);
    }

    #[test]
    fn rejects_bare_numbers_and_wrong_dimension() {
        assert!(parse_quantity("17", Dimension::Time).is_err());
        assert!(parse_quantity("17 GHz", Dimension::Time).is_err());
        assert!(parse_quantity("2 ns", Dimension::Frequency).is_err());
        assert!(parse_quantity("abc ns", Dimension::Time).is_err());
        assert!(parse_quantity("2,63 GHz", Dimension::Frequency).is_err());
        assert!(parse_quantity("inf ns", Dimension::Time).is_err());
        assert!(parse_quantity(" ns", Dimension::Time).is_err());
    }

    #[test]
    fn exponent_notation_is_accepted() {
        assert_eq!(parse_quantity("1.7e-8 s", Dimension::Time).unwrap(), 1.7e-8);
        assert_eq!(
            parse_quantity("2e3 MHz", Dimension::Frequency).unwrap(),
            2e9
        );
    }

    #[test]
    fn formatting_picks_readable_units() {
        assert_eq!(format_quantity(17e-9, &Unit::TIME), "17 ns");
        assert_eq!(format_quantity(92e-12, &Unit::TIME), "92 ps");
        assert_eq!(format_quantity(0.948e-9, &Unit::TIME), "948 ps");
        assert_eq!(format_quantity(2.2e9, &Unit::SAMPLE_RATE), "2.2 GSPS");
        assert_eq!(format_quantity(75e6, &Unit::SAMPLE_RATE), "75 MSPS");
        assert_eq!(format_quantity(0.35, &Unit::POWER), "350 mW");
        assert_eq!(format_quantity(39.0, &Unit::POWER), "39 W");
        assert_eq!(format_quantity(0.0, &Unit::TIME), "0 ps");
    }

    #[test]
    fn significant_digits_match_table_printing() {
        assert_eq!(format_significant(52.631578947368425, 10), "52.63157895");
        assert_eq!(format_significant(102.04081632653062, 10), "102.0408163");
        assert_eq!(format_significant(1086.9565217391305, 10), "1086.956522");
        assert_eq!(format_significant(1000.0, 10), "1000");
        assert_eq!(format_significant(0.0027700831, 4), "0.00277");
        assert_eq!(format_significant(-2.5, 3), "-2.5");
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn formatting_round_trips_exactly(mantissa in 1e-3f64..1e3, exp in -15i32..12) {
            let value = mantissa * 10f64.powi(exp);
            let units: &[Unit] = if exp < 0 { &Unit::TIME } else { &Unit::FREQUENCY };
            let text = format_quantity(value, units);
            let back = parse_quantity(&text, units[0].dimension()).unwrap();
            prop_assert_eq!(back.to_bits(), value.to_bits(), "{}", text);
        }
    }
}
