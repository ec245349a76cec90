//! IR-UWB channel capacity under the no-ISI symbol spacing `T_s = T_p + d_RMS`.
//!
//! Every operation is a pure function of its arguments. All quantities are
//! SI base units: seconds, hertz, bits per second.
//!
//! | model          | rate                                   |
//! |----------------|----------------------------------------|
//! | ideal          | `1/(T_p + d) · ½·log2(1 + SNR)`        |
//! | binary         | `1/(T_p + d)`, `T_p = 1/B`             |
//! | mostly digital | `m(M) / (n/F_s + d)`                   |
//! | mixed          | `m(M) / (1/F_circuit + d)`             |
//!
//! where `m(M)` is the capacity multiplier of the modulation order.
//!
//! ```
//! use uwb_capacity::capacity::*;
//!
//! let d = DelaySpread::from_seconds(17e-9).unwrap();
//! let adc = SamplingConfig::new(2e9, 4.0).unwrap();
//! let c = mostly_digital_capacity(adc, d, ModulationScheme::binary());
//! assert!((c.rate - 52.63157895e6).abs() < 1.0);
//! ```

use serde::Serialize;

use crate::error::{Error, Result};

/// RMS channel delay spread in seconds.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct DelaySpread(f64);

impl DelaySpread {
    /// Zero is accepted; operations needing the `1/d` asymptote reject it.
    pub fn from_seconds(seconds: f64) -> Result<Self> {
        if !seconds.is_finite() || seconds < 0.0 {
            return Err(Error::invalid(
                "delay spread",
                format!("must be finite and >= 0 s, got {seconds}"),
            ));
        }
        Ok(DelaySpread(seconds))
    }

    pub fn seconds(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

/// Pulse duration and bandwidth, tied by `T_p · B = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseSpec {
    #[serde(rename = "pulse_duration_s")]
    duration: f64,
    #[serde(rename = "bandwidth_hz")]
    bandwidth: f64,
}

impl PulseSpec {
    pub fn from_duration(seconds: f64) -> Result<Self> {
        if !(seconds.is_finite() && seconds > 0.0) {
            return Err(Error::invalid(
                "pulse duration",
                format!("must be finite and > 0 s, got {seconds}"),
            ));
        }
        Ok(PulseSpec {
            duration: seconds,
            bandwidth: 1.0 / seconds,
        })
    }

    pub fn from_bandwidth(hertz: f64) -> Result<Self> {
        if !(hertz.is_finite() && hertz > 0.0) {
            return Err(Error::invalid(
                "bandwidth",
                format!("must be finite and > 0 Hz, got {hertz}"),
            ));
        }
        Ok(PulseSpec {
            duration: 1.0 / hertz,
            bandwidth: hertz,
        })
    }

    pub fn duration(self) -> f64 {
        self.duration
    }

    pub fn bandwidth(self) -> f64 {
        self.bandwidth
    }
}

/// Data-converter sampling frequency and sampling factor.
///
/// The sampling factor is the ratio between `F_s` and the highest analog
/// frequency `1/T_p`, so the effective pulse duration is `n / F_s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplingConfig {
    #[serde(rename = "sampling_frequency_hz")]
    sampling_frequency: f64,
    sampling_factor: f64,
}

impl SamplingConfig {
    /// Sampling factor used throughout the converter survey.
    pub const CANONICAL_FACTOR: f64 = 4.0;

    pub fn new(sampling_frequency: f64, sampling_factor: f64) -> Result<Self> {
        if !(sampling_frequency.is_finite() && sampling_frequency > 0.0) {
            return Err(Error::invalid(
                "sampling frequency",
                format!("must be finite and > 0 Hz, got {sampling_frequency}"),
            ));
        }
        if !(sampling_factor.is_finite() && sampling_factor >= 2.0) {
            return Err(Error::invalid(
                "sampling factor",
                format!("must be >= 2 (Nyquist), got {sampling_factor}"),
            ));
        }
        Ok(SamplingConfig {
            sampling_frequency,
            sampling_factor,
        })
    }

    pub fn sampling_frequency(self) -> f64 {
        self.sampling_frequency
    }

    pub fn sampling_factor(self) -> f64 {
        self.sampling_factor
    }

    /// `n / F_s`, the shortest pulse the converter can resolve.
    pub fn effective_pulse_duration(self) -> f64 {
        self.sampling_factor / self.sampling_frequency
    }
}

/// Lowest operating frequency among the analog circuits of a mixed transceiver.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct CircuitFrequency(f64);

impl CircuitFrequency {
    pub fn from_hertz(hertz: f64) -> Result<Self> {
        if !(hertz.is_finite() && hertz > 0.0) {
            return Err(Error::invalid(
                "circuit frequency",
                format!("must be finite and > 0 Hz, got {hertz}"),
            ));
        }
        Ok(CircuitFrequency(hertz))
    }

    pub fn hertz(self) -> f64 {
        self.0
    }
}

/// Signal-to-noise ratio, stored as a linear power ratio.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct SnrValue(f64);

impl SnrValue {
    /// Linear SNR at which `½·log2(1 + SNR)` is exactly one bit per symbol.
    pub const BINARY: SnrValue = SnrValue(3.0);

    /// Lower edge of the binary-modulation validity region.
    pub const VALIDITY_FLOOR_DB: f64 = 3.0;

    pub fn from_linear(ratio: f64) -> Result<Self> {
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(Error::invalid(
                "SNR",
                format!("linear ratio must be finite and > 0, got {ratio}"),
            ));
        }
        Ok(SnrValue(ratio))
    }

    pub fn from_db(db: f64) -> Result<Self> {
        if !db.is_finite() {
            return Err(Error::invalid(
                "SNR",
                format!("dB value must be finite, got {db}"),
            ));
        }
        SnrValue::from_linear(10f64.powf(db / 10.0))
    }

    pub fn linear(self) -> f64 {
        self.0
    }

    pub fn db(self) -> f64 {
        10.0 * self.0.log10()
    }
}

/// How the modulation order maps onto a capacity multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaryConvention {
    /// `M - 1`: binary ×1, ternary ×2, M=4 ×3. Reproduces the mixed
    /// implementation rate table.
    #[default]
    MinusOne,
    /// `log2(M)` bits per symbol.
    Log2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModulationScheme {
    order: u32,
    convention: MaryConvention,
}

impl ModulationScheme {
    pub fn new(order: u32, convention: MaryConvention) -> Result<Self> {
        if order < 2 {
            return Err(Error::invalid(
                "modulation order",
                format!("must be >= 2, got {order}"),
            ));
        }
        Ok(ModulationScheme { order, convention })
    }

    pub fn binary() -> Self {
        ModulationScheme {
            order: 2,
            convention: MaryConvention::MinusOne,
        }
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn convention(self) -> MaryConvention {
        self.convention
    }

    pub fn multiplier(self) -> f64 {
        match self.convention {
            MaryConvention::MinusOne => f64::from(self.order - 1),
            MaryConvention::Log2 => f64::from(self.order).log2(),
        }
    }

    /// The table convention is only observed for M in {2, 3, 4}; other
    /// orders extrapolate `M - 1`.
    pub fn is_extrapolated(self) -> bool {
        self.convention == MaryConvention::MinusOne && !(2..=4).contains(&self.order)
    }
}

impl Default for ModulationScheme {
    fn default() -> Self {
        ModulationScheme::binary()
    }
}

/// The parameter set a capacity was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum CapacityInputs {
    Ideal {
        pulse: PulseSpec,
        delay_spread_s: DelaySpread,
        snr_linear: SnrValue,
    },
    Binary {
        pulse: PulseSpec,
        delay_spread_s: DelaySpread,
    },
    MostlyDigital {
        sampling: SamplingConfig,
        delay_spread_s: DelaySpread,
        modulation: ModulationScheme,
    },
    Mixed {
        circuit_frequency_hz: CircuitFrequency,
        delay_spread_s: DelaySpread,
        modulation: ModulationScheme,
    },
}

impl CapacityInputs {
    pub fn delay_spread(&self) -> DelaySpread {
        match *self {
            CapacityInputs::Ideal { delay_spread_s, .. }
            | CapacityInputs::Binary { delay_spread_s, .. }
            | CapacityInputs::MostlyDigital { delay_spread_s, .. }
            | CapacityInputs::Mixed { delay_spread_s, .. } => delay_spread_s,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CapacityNote {
    /// SNR below 3 dB; the binary-modulation derivation does not cover it.
    SnrBelowBinaryValidity,
    /// Modulation multiplier extrapolated beyond the tabulated orders.
    ExtrapolatedMultiplier,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CapacityResult {
    #[serde(rename = "rate_bps")]
    pub rate: f64,
    /// `multiplier / d_RMS`, or `None` (unbounded) when `d_RMS = 0`.
    #[serde(rename = "limiting_asymptote_bps")]
    pub limiting_asymptote: Option<f64>,
    pub inputs: CapacityInputs,
    pub notes: Vec<CapacityNote>,
}

impl CapacityResult {
    fn new(rate: f64, multiplier: f64, inputs: CapacityInputs) -> Self {
        let d = inputs.delay_spread();
        let limiting_asymptote = (!d.is_zero()).then(|| multiplier / d.seconds());
        CapacityResult {
            rate,
            limiting_asymptote,
            inputs,
            notes: Vec::new(),
        }
    }

    pub fn rate_mbps(&self) -> f64 {
        self.rate / 1e6
    }
}

/// Rate of one pulse per `T_p + d_RMS` seconds.
fn symbol_rate(pulse_duration: f64, d: DelaySpread) -> f64 {
    1.0 / (pulse_duration + d.seconds())
}

/// General expression with a Shannon amplitude term.
pub fn ideal_capacity(pulse: PulseSpec, d: DelaySpread, snr: SnrValue) -> CapacityResult {
    let bits_per_symbol = 0.5 * (1.0 + snr.linear()).log2();
    let rate = symbol_rate(pulse.duration(), d) * bits_per_symbol;
    let mut result = CapacityResult::new(
        rate,
        bits_per_symbol,
        CapacityInputs::Ideal {
            pulse,
            delay_spread_s: d,
            snr_linear: snr,
        },
    );
    // tolerance absorbs the dB -> linear -> dB round trip
    if snr.db() < SnrValue::VALIDITY_FLOOR_DB - 1e-9 {
        result.notes.push(CapacityNote::SnrBelowBinaryValidity);
    }
    result
}

/// Binary modulations: one bit per `T_p + d_RMS`.
pub fn binary_capacity(pulse: PulseSpec, d: DelaySpread) -> CapacityResult {
    CapacityResult::new(
        symbol_rate(pulse.duration(), d),
        1.0,
        CapacityInputs::Binary {
            pulse,
            delay_spread_s: d,
        },
    )
}

/// Mostly-digital radio, limited by the data converter sampling rate.
pub fn mostly_digital_capacity(
    sampling: SamplingConfig,
    d: DelaySpread,
    modulation: ModulationScheme,
) -> CapacityResult {
    let multiplier = modulation.multiplier();
    let rate = multiplier * symbol_rate(sampling.effective_pulse_duration(), d);
    let mut result = CapacityResult::new(
        rate,
        multiplier,
        CapacityInputs::MostlyDigital {
            sampling,
            delay_spread_s: d,
            modulation,
        },
    );
    if modulation.is_extrapolated() {
        result.notes.push(CapacityNote::ExtrapolatedMultiplier);
    }
    result
}

/// Mixed analog/digital transceiver, limited by its slowest analog circuit.
pub fn mixed_capacity(
    circuit: CircuitFrequency,
    d: DelaySpread,
    modulation: ModulationScheme,
) -> CapacityResult {
    let multiplier = modulation.multiplier();
    let rate = multiplier * symbol_rate(1.0 / circuit.hertz(), d);
    let mut result = CapacityResult::new(
        rate,
        multiplier,
        CapacityInputs::Mixed {
            circuit_frequency_hz: circuit,
            delay_spread_s: d,
            modulation,
        },
    );
    if modulation.is_extrapolated() {
        result.notes.push(CapacityNote::ExtrapolatedMultiplier);
    }
    result
}

/// Binary-rate ceiling `1/d_RMS` reached as the pulse duration vanishes.
pub fn asymptote(d: DelaySpread) -> Result<f64> {
    asymptote_with(d, ModulationScheme::binary())
}

/// `multiplier(M) / d_RMS`.
pub fn asymptote_with(d: DelaySpread, modulation: ModulationScheme) -> Result<f64> {
    if d.is_zero() {
        return Err(Error::domain(
            "asymptote is unbounded for a zero delay spread",
        ));
    }
    Ok(modulation.multiplier() / d.seconds())
}

/// Which frequency parameter limits the pulse duration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum FrequencyModel {
    /// `T_p = n / F_s`.
    MostlyDigital { sampling_factor: f64 },
    /// `T_p = 1 / F`. Also covers the binary bandwidth axis, where `F = B`.
    Mixed,
}

impl FrequencyModel {
    pub fn mostly_digital(sampling_factor: f64) -> Result<Self> {
        if !(sampling_factor.is_finite() && sampling_factor >= 2.0) {
            return Err(Error::invalid(
                "sampling factor",
                format!("must be >= 2 (Nyquist), got {sampling_factor}"),
            ));
        }
        Ok(FrequencyModel::MostlyDigital { sampling_factor })
    }

    /// Numerator of the pulse duration: `n` or 1.
    fn cycles(self) -> f64 {
        match self {
            FrequencyModel::MostlyDigital { sampling_factor } => sampling_factor,
            FrequencyModel::Mixed => 1.0,
        }
    }

    /// Binary capacity at `frequency` through the matching core operation.
    pub fn capacity(self, frequency: f64, d: DelaySpread) -> Result<CapacityResult> {
        Ok(match self {
            FrequencyModel::MostlyDigital { sampling_factor } => mostly_digital_capacity(
                SamplingConfig::new(frequency, sampling_factor)?,
                d,
                ModulationScheme::binary(),
            ),
            FrequencyModel::Mixed => mixed_capacity(
                CircuitFrequency::from_hertz(frequency)?,
                d,
                ModulationScheme::binary(),
            ),
        })
    }
}

fn check_frequency(frequency: f64) -> Result<()> {
    if !(frequency.is_finite() && frequency > 0.0) {
        return Err(Error::invalid(
            "frequency",
            format!("must be finite and > 0 Hz, got {frequency}"),
        ));
    }
    Ok(())
}

/// Analytic `dC/dF` of the binary capacity, in bit/s per hertz.
///
/// `C = 1/(n/F + d)` gives `dC/dF = (n/F²)/(n/F + d)² = n/(n + d·F)²`;
/// the second form avoids the `1/F²` underflow at very high frequency.
pub fn capacity_derivative(model: FrequencyModel, frequency: f64, d: DelaySpread) -> Result<f64> {
    check_frequency(frequency)?;
    let n = model.cycles();
    let denom = n + d.seconds() * frequency;
    Ok(n / (denom * denom))
}

/// Capacity at `frequency` as a fraction of the `1/d_RMS` ceiling.
pub fn percent_of_max(model: FrequencyModel, frequency: f64, d: DelaySpread) -> Result<f64> {
    let ceiling = asymptote(d)?;
    Ok(model.capacity(frequency, d)?.rate / ceiling)
}

/// Frequency at which the capacity reaches `fraction` of its ceiling:
/// `F = n·p / (d·(1 - p))`.
pub fn required_frequency(model: FrequencyModel, fraction: f64, d: DelaySpread) -> Result<f64> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::domain(format!(
            "target fraction must lie in (0, 1), got {fraction}"
        )));
    }
    if d.is_zero() {
        return Err(Error::domain(
            "a zero delay spread has no finite ceiling to approach",
        ));
    }
    Ok(model.cycles() * fraction / (d.seconds() * (1.0 - fraction)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(seconds: f64) -> DelaySpread {
        DelaySpread::from_seconds(seconds).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn ideal_capacity_examples() {
        let half_ns = PulseSpec::from_duration(0.5e-9).unwrap();
        let three = SnrValue::from_linear(3.0).unwrap();
        let c = ideal_capacity(half_ns, ds(0.0), three);
        assert!(rel(c.rate, 2.0e9) < 1e-15);
        assert_eq!(c.limiting_asymptote, None);

        let c = ideal_capacity(half_ns, ds(17e-9), three);
        assert!(rel(c.rate, 1.0 / 17.5e-9) < 1e-12);
        assert!(rel(c.rate, 57.142857e6) < 1e-8);

        let one_ns = PulseSpec::from_duration(1e-9).unwrap();
        let c = ideal_capacity(one_ns, ds(1e-9), SnrValue::from_linear(15.0).unwrap());
        assert!(rel(c.rate, 1.0e9) < 1e-15);
        assert!(rel(c.limiting_asymptote.unwrap(), 2.0e9) < 1e-15);
    }

    #[test]
    fn low_snr_is_annotated_not_rejected() {
        let pulse = PulseSpec::from_duration(1e-9).unwrap();
        let c = ideal_capacity(pulse, ds(1e-9), SnrValue::from_db(1.0).unwrap());
        assert!(c.rate > 0.0);
        assert_eq!(c.notes, vec![CapacityNote::SnrBelowBinaryValidity]);
        let c = ideal_capacity(pulse, ds(1e-9), SnrValue::from_db(3.0).unwrap());
        assert!(c.notes.is_empty());
    }

    #[test]
    fn binary_capacity_examples() {
        let kim = PulseSpec::from_duration(380e-12).unwrap();
        let c = binary_capacity(kim, ds(17e-9));
        assert!((c.rate_mbps() - 57.54).abs() < 0.005);
        assert!((kim.bandwidth() / 1e9 - 2.63).abs() < 0.005);

        let c = binary_capacity(PulseSpec::from_bandwidth(20e9).unwrap(), ds(0.87e-9));
        assert!((c.rate_mbps() - 1086.96).abs() < 0.005);

        let c = binary_capacity(PulseSpec::from_bandwidth(1e9).unwrap(), ds(0.0));
        assert!(rel(c.rate, 1e9) < 1e-15);
    }

    #[test]
    fn binary_equals_ideal_at_snr_three() {
        let pulse = PulseSpec::from_duration(0.5e-9).unwrap();
        let a = binary_capacity(pulse, ds(17e-9)).rate;
        let b = ideal_capacity(pulse, ds(17e-9), SnrValue::BINARY).rate;
        assert_eq!(a, b);
    }

    #[test]
    fn mostly_digital_examples() {
        let bin = ModulationScheme::binary();
        let cases = [
            (2e9, 17e-9, 52.63157895),
            (10e9, 9e-9, 106.3829787),
            (5e9, 89e-9, 11.13585746),
        ];
        for (fs, d, mbps) in cases {
            let s = SamplingConfig::new(fs, 4.0).unwrap();
            let c = mostly_digital_capacity(s, ds(d), bin);
            assert!(
                rel(c.rate_mbps(), mbps) < 1e-9,
                "{fs} {d}: {}",
                c.rate_mbps()
            );
            assert!(c.rate < c.limiting_asymptote.unwrap());
        }
    }

    #[test]
    fn mixed_examples() {
        let f = CircuitFrequency::from_hertz(10.87e9).unwrap();
        let m4 = ModulationScheme::new(4, MaryConvention::MinusOne).unwrap();
        let c = mixed_capacity(f, ds(0.87e-9), m4);
        assert!((c.rate_mbps() - 3118.52).abs() < 0.01);

        let m3 = ModulationScheme::new(3, MaryConvention::MinusOne).unwrap();
        let c = mixed_capacity(f, ds(7.718e-9), m3);
        assert!((c.rate_mbps() - 256.08).abs() < 0.01);

        let c = mixed_capacity(
            CircuitFrequency::from_hertz(1e9).unwrap(),
            ds(0.0),
            ModulationScheme::binary(),
        );
        assert!(rel(c.rate, 1e9) < 1e-15);
    }

    #[test]
    fn multipliers() {
        let minus_one = |m| ModulationScheme::new(m, MaryConvention::MinusOne).unwrap();
        let log2 = |m| ModulationScheme::new(m, MaryConvention::Log2).unwrap();
        assert_eq!(minus_one(2).multiplier(), 1.0);
        assert_eq!(minus_one(3).multiplier(), 2.0);
        assert_eq!(minus_one(4).multiplier(), 3.0);
        assert_eq!(log2(2).multiplier(), 1.0);
        assert_eq!(log2(4).multiplier(), 2.0);
        assert!(rel(log2(3).multiplier(), 3f64.log2()) < 1e-15);
        assert!(!minus_one(4).is_extrapolated());
        assert!(minus_one(8).is_extrapolated());
        assert!(!log2(8).is_extrapolated());
        assert!(ModulationScheme::new(1, MaryConvention::Log2).is_err());

        let c = mixed_capacity(
            CircuitFrequency::from_hertz(1e9).unwrap(),
            ds(1e-9),
            minus_one(8),
        );
        assert_eq!(c.notes, vec![CapacityNote::ExtrapolatedMultiplier]);
    }

    #[test]
    fn asymptote_examples() {
        assert!(rel(asymptote(ds(17e-9)).unwrap(), 58.8235294e6) < 1e-8);
        assert!(rel(asymptote(ds(89e-9)).unwrap(), 11.2359551e6) < 1e-8);
        assert_eq!(asymptote(ds(1.0)).unwrap(), 1.0);
        assert!(asymptote(ds(0.0)).unwrap_err().is_domain());
        let m3 = ModulationScheme::new(3, MaryConvention::MinusOne).unwrap();
        assert_eq!(asymptote_with(ds(1.0), m3).unwrap(), 2.0);
    }

    #[test]
    fn derivative_examples() {
        let digital = FrequencyModel::mostly_digital(4.0).unwrap();
        let g = capacity_derivative(digital, 2e9, ds(17e-9)).unwrap();
        assert!(rel(g, 2.770083e-3) < 1e-6);

        // central difference, 1 kHz step
        let c = |f: f64| digital.capacity(f, ds(17e-9)).unwrap().rate;
        let h = 1e3;
        let fd = (c(2e9 + h) - c(2e9 - h)) / (2.0 * h);
        assert!(rel(g, fd) < 1e-6);

        assert_eq!(
            capacity_derivative(FrequencyModel::Mixed, 1e9, ds(0.0)).unwrap(),
            1.0
        );
        assert!(capacity_derivative(digital, 1e15, ds(10e-9)).unwrap() < 1e-12);
        assert!(capacity_derivative(digital, 0.0, ds(10e-9)).is_err());
    }

    #[test]
    fn percent_of_max_examples() {
        let digital = FrequencyModel::mostly_digital(4.0).unwrap();
        let p = percent_of_max(digital, 2e9, ds(17e-9)).unwrap();
        assert!(rel(p, 17.0 / 19.0) < 1e-12);

        let p5 = percent_of_max(FrequencyModel::Mixed, 5e9, ds(10e-9)).unwrap();
        assert!(rel(p5, 10.0 / 10.2) < 1e-12);
        let p60 = percent_of_max(FrequencyModel::Mixed, 60e9, ds(10e-9)).unwrap();
        assert!((p60 - 0.9983).abs() < 1e-4);

        // n / F_s = d
        let p = percent_of_max(digital, 4.0 / 10e-9, ds(10e-9)).unwrap();
        assert!((p - 0.5).abs() < 1e-15);

        assert!(percent_of_max(digital, 2e9, ds(0.0))
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn required_frequency_examples() {
        let digital = FrequencyModel::mostly_digital(4.0).unwrap();
        let f17 = required_frequency(digital, 0.9, ds(17e-9)).unwrap();
        assert!(rel(f17, 2.11765e9) < 1e-5);
        let back = percent_of_max(digital, f17, ds(17e-9)).unwrap();
        assert!(rel(back, 0.9) < 1e-12);

        let f89 = required_frequency(digital, 0.9, ds(89e-9)).unwrap();
        assert!(rel(f89, 0.40449e9) < 1e-4);
        assert!(f89 < f17);

        let f = required_frequency(FrequencyModel::Mixed, 0.5, ds(10e-9)).unwrap();
        assert!(rel(f, 100e6) < 1e-12);

        for p in [0.0, 1.0, 1.5, -0.1] {
            assert!(required_frequency(digital, p, ds(1e-9))
                .unwrap_err()
                .is_domain());
        }
        assert!(required_frequency(digital, 0.5, ds(0.0))
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn invariant_violations_are_rejected() {
        assert!(DelaySpread::from_seconds(-1e-9).is_err());
        assert!(DelaySpread::from_seconds(f64::NAN).is_err());
        assert!(PulseSpec::from_duration(0.0).is_err());
        assert!(PulseSpec::from_bandwidth(-1.0).is_err());
        assert!(SamplingConfig::new(1e9, 1.5).is_err());
        assert!(SamplingConfig::new(0.0, 4.0).is_err());
        assert!(CircuitFrequency::from_hertz(0.0).is_err());
        assert!(SnrValue::from_linear(0.0).is_err());
    }

    #[test]
    fn pulse_spec_product_is_one() {
        for t in [50e-12, 92e-12, 224e-12, 380e-12, 1e-9] {
            let p = PulseSpec::from_duration(t).unwrap();
            assert!((p.duration() * p.bandwidth() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn snr_db_round_trip() {
        for db in [-10.0, 0.0, 3.0, 4.771212547, 30.0] {
            let s = SnrValue::from_db(db).unwrap();
            let back = SnrValue::from_db(s.db()).unwrap();
            assert!(rel(back.linear(), s.linear()) < 1e-12);
        }
    }
}
