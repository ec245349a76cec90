//! Inter-symbol interference check for the `T_s = T_p + d_RMS` spacing.
//!
//! Channels are single-cluster exponential power-delay profiles on a uniform
//! tap grid, with the decay constant calibrated so the discrete profile has
//! the requested RMS delay spread. The pulse is a unit-energy rectangle of
//! width `T_p`; tap powers add incoherently, so the received energy profile
//! is `Σ p_i · rect((t - τ_i) / T_p) / T_p` and the spill is the part of it
//! arriving at or after `T_s`.
//!
//! For a continuous exponential profile with decay `γ = d_RMS`, the spill at
//! `T_s = T_p + k·d_RMS` is `e^-k`: about 37% at the `k = 1` spacing.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::output::{Cell, Tabular};
use crate::units::{format_quantity, Unit};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tap {
    #[serde(rename = "delay_s")]
    pub delay: f64,
    pub power: f64,
}

impl Tap {
    pub fn new(delay: f64, power: f64) -> Self {
        Tap { delay, power }
    }
}

/// Discrete power-delay profile: delays start at zero and strictly
/// increase, powers are positive and sum to one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TappedDelayLine {
    taps: Vec<Tap>,
}

impl TappedDelayLine {
    /// Validates the tap list and normalizes its total power.
    pub fn new(mut taps: Vec<Tap>) -> Result<Self> {
        let Some(first) = taps.first() else {
            return Err(Error::invalid("tap line", "needs at least one tap"));
        };
        if first.delay != 0.0 {
            return Err(Error::invalid(
                "tap line",
                format!("first delay must be 0, got {} s", first.delay),
            ));
        }
        if taps
            .windows(2)
            .any(|w| w[1].delay.is_nan() || w[1].delay <= w[0].delay)
        {
            return Err(Error::invalid("tap line", "delays must strictly increase"));
        }
        if let Some(t) = taps
            .iter()
            .find(|t| !(t.delay.is_finite() && t.power.is_finite() && t.power > 0.0))
        {
            return Err(Error::invalid(
                "tap line",
                format!("tap at {} s has invalid power {}", t.delay, t.power),
            ));
        }
        let total: f64 = taps.iter().map(|t| t.power).sum();
        for t in &mut taps {
            t.power /= total;
        }
        Ok(TappedDelayLine { taps })
    }

    /// A non-dispersive channel.
    pub fn single_tap() -> Self {
        TappedDelayLine {
            taps: vec![Tap::new(0.0, 1.0)],
        }
    }

    pub fn taps(&self) -> &[Tap] {
        &self.taps
    }

    pub fn len(&self) -> usize {
        self.taps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taps.is_empty()
    }

    pub fn rms_delay_spread(&self) -> f64 {
        rms_delay_spread(&self.taps).expect("tap line is never empty")
    }

    /// `delay,power` CSV with unit-suffixed delays.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["delay", "power"])?;
        for t in &self.taps {
            writer.write_record([format_quantity(t.delay, &Unit::TIME), t.power.to_string()])?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
    }
}

/// Square root of the second central moment of the normalized profile.
///
/// Accepts arbitrary (unnormalized, unanchored) taps.
pub fn rms_delay_spread(taps: &[Tap]) -> Result<f64> {
    if taps.is_empty() {
        return Err(Error::invalid("tap line", "needs at least one tap"));
    }
    let total: f64 = taps.iter().map(|t| t.power).sum();
    let mean = taps.iter().map(|t| t.power * t.delay).sum::<f64>() / total;
    let variance = taps
        .iter()
        .map(|t| t.power * (t.delay - mean).powi(2))
        .sum::<f64>()
        / total;
    Ok(variance.max(0.0).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fading {
    /// Tap powers follow the exponential profile exactly.
    None,
    /// Each tap power is the profile times an Exp(1) draw (Rayleigh amplitude).
    #[default]
    Rayleigh,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SynthesisParams {
    pub target_d_rms: f64,
    pub tap_spacing: f64,
    pub num_taps: usize,
}

impl SynthesisParams {
    pub fn new(target_d_rms: f64, tap_spacing: f64, num_taps: usize) -> Result<Self> {
        let params = SynthesisParams {
            target_d_rms,
            tap_spacing,
            num_taps,
        };
        params.validate()?;
        Ok(params)
    }

    /// The tap grid must resolve the profile (spacing at most a tenth of the
    /// spread) and cover its tail (at least ten spreads long).
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Discretization(msg));
        if !(self.target_d_rms.is_finite() && self.target_d_rms > 0.0) {
            return fail(format!(
                "target delay spread must be > 0, got {} s",
                self.target_d_rms
            ));
        }
        if !(self.tap_spacing.is_finite() && self.tap_spacing > 0.0) {
            return fail(format!(
                "tap spacing must be > 0, got {} s",
                self.tap_spacing
            ));
        }
        // relative slack so that e.g. 0.9 ns / 9 ns passes despite rounding
        let slack = 1.0 + 1e-9;
        if self.tap_spacing > self.target_d_rms / 10.0 * slack {
            return fail(format!(
                "tap spacing {} s exceeds a tenth of the target spread {} s",
                self.tap_spacing, self.target_d_rms
            ));
        }
        if (self.num_taps as f64) * self.tap_spacing * slack < 10.0 * self.target_d_rms {
            return fail(format!(
                "{} taps at {} s span less than ten target spreads ({} s)",
                self.num_taps,
                self.tap_spacing,
                10.0 * self.target_d_rms
            ));
        }
        Ok(())
    }

    fn delays(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.num_taps).map(|i| i as f64 * self.tap_spacing)
    }

    /// Unnormalized exponential profile with decay constant `decay`; taps
    /// that underflow to zero are dropped.
    fn profile(&self, decay: f64) -> Vec<Tap> {
        self.delays()
            .map(|t| Tap::new(t, (-t / decay).exp()))
            .filter(|t| t.power > 0.0)
            .collect()
    }

    /// Decay constant whose truncated discrete profile has the target RMS
    /// delay spread, found by bisection in log space.
    pub fn calibrate_decay(&self) -> Result<f64> {
        self.validate()?;
        let spread = |decay: f64| rms_delay_spread(&self.profile(decay)).expect("tap 0 survives");
        let (mut lo, mut hi) = (self.tap_spacing * 1e-3, self.target_d_rms * 1e3);
        if spread(hi) < self.target_d_rms {
            return Err(Error::Discretization(format!(
                "a {} s window cannot reach a {} s spread",
                self.num_taps as f64 * self.tap_spacing,
                self.target_d_rms
            )));
        }
        for _ in 0..200 {
            let mid = (lo * hi).sqrt();
            if spread(mid) < self.target_d_rms {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi / lo - 1.0 < 1e-14 {
                break;
            }
        }
        Ok((lo * hi).sqrt())
    }
}

/// Synthesizes one channel. With [`Fading::None`] the seed is unused.
pub fn synthesize_channel(
    params: &SynthesisParams,
    fading: Fading,
    seed: u64,
) -> Result<TappedDelayLine> {
    synthesize_trial(params, fading, seed, 0)
}

/// The channel [`validate_assumption`] uses for trial `trial`.
pub fn synthesize_trial(
    params: &SynthesisParams,
    fading: Fading,
    seed: u64,
    trial: u64,
) -> Result<TappedDelayLine> {
    let decay = params.calibrate_decay()?;
    realize(params, decay, fading, seed, trial)
}

fn realize(
    params: &SynthesisParams,
    decay: f64,
    fading: Fading,
    seed: u64,
    trial: u64,
) -> Result<TappedDelayLine> {
    let mut taps = params.profile(decay);
    if fading == Fading::Rayleigh {
        let mut rng = trial_rng(seed, trial);
        for t in &mut taps {
            let gain: f64 = Exp1.sample(&mut rng);
            t.power *= gain;
        }
        taps.retain(|t| t.power > 0.0);
        // keep the first arrival at zero excess delay
        if taps.first().is_none_or(|t| t.delay != 0.0) {
            taps.insert(0, Tap::new(0.0, f64::MIN_POSITIVE));
        }
    }
    TappedDelayLine::new(taps)
}

/// Independent random stream per trial, so results do not depend on how
/// trials are scheduled.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn check_pulse(pulse_duration: f64, symbol_period: f64) -> Result<()> {
    if !(pulse_duration.is_finite() && pulse_duration > 0.0) {
        return Err(Error::invalid(
            "pulse duration",
            format!("must be > 0, got {pulse_duration} s"),
        ));
    }
    if !(symbol_period.is_finite() && symbol_period >= pulse_duration) {
        return Err(Error::invalid(
            "symbol period",
            format!(
                "must be at least the pulse duration {pulse_duration} s, got {symbol_period} s"
            ),
        ));
    }
    Ok(())
}

/// Fraction of received energy arriving at or after `symbol_period`.
pub fn isi_spill(
    channel: &TappedDelayLine,
    pulse_duration: f64,
    symbol_period: f64,
) -> Result<f64> {
    check_pulse(pulse_duration, symbol_period)?;
    let spill: f64 = channel
        .taps
        .iter()
        .map(|t| {
            t.power * ((t.delay + pulse_duration - symbol_period) / pulse_duration).clamp(0.0, 1.0)
        })
        .sum();
    Ok(spill.clamp(0.0, 1.0))
}

/// Fraction of received energy arriving before `symbol_period`; the
/// complement of [`isi_spill`].
pub fn in_symbol_fraction(
    channel: &TappedDelayLine,
    pulse_duration: f64,
    symbol_period: f64,
) -> Result<f64> {
    check_pulse(pulse_duration, symbol_period)?;
    let inside: f64 = channel
        .taps
        .iter()
        .map(|t| t.power * ((symbol_period - t.delay) / pulse_duration).clamp(0.0, 1.0))
        .sum();
    Ok(inside.clamp(0.0, 1.0))
}

/// Tap grid and fading used by [`validate_assumption`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidationConfig {
    /// Taps per target delay spread; at least 10.
    pub taps_per_spread: usize,
    /// Profile length in target delay spreads; at least 10.
    pub window_spreads: f64,
    pub fading: Fading,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig {
            taps_per_spread: 20,
            window_spreads: 15.0,
            fading: Fading::Rayleigh,
        }
    }
}

impl ValidationConfig {
    pub fn deterministic() -> Self {
        ValidationConfig {
            fading: Fading::None,
            ..ValidationConfig::default()
        }
    }

    pub fn synthesis(&self, target_d_rms: f64) -> Result<SynthesisParams> {
        let spacing = target_d_rms / self.taps_per_spread as f64;
        let taps = (self.window_spreads * self.taps_per_spread as f64).ceil() as usize + 1;
        SynthesisParams::new(target_d_rms, spacing, taps)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsiReport {
    pub target_d_rms_s: f64,
    /// Mean over trials of each channel's RMS delay spread.
    pub realized_d_rms_s: f64,
    pub pulse_duration_s: f64,
    /// `T_p + k · target_d_rms`.
    pub symbol_period_s: f64,
    pub guard_multiple: f64,
    /// Mean spill over trials.
    pub spill_fraction: f64,
    pub spill_min: f64,
    pub spill_max: f64,
    pub trials: usize,
}

impl Tabular for IsiReport {
    fn columns(&self) -> Vec<(&'static str, Cell)> {
        vec![
            ("guard_multiple", self.guard_multiple.into()),
            ("symbol_period_s", self.symbol_period_s.into()),
            ("target_d_rms_s", self.target_d_rms_s.into()),
            ("realized_d_rms_s", self.realized_d_rms_s.into()),
            ("spill_fraction", self.spill_fraction.into()),
            ("spill_min", self.spill_min.into()),
            ("spill_max", self.spill_max.into()),
            ("exp_minus_k", (-self.guard_multiple).exp().into()),
            ("trials", Cell::Integer(self.trials as i64)),
        ]
    }
}

/// Measures the spill at `T_s = T_p + k·d_RMS` for each guard multiple `k`
/// over `trials` channel realizations. Every `k` sees the same channels.
pub fn validate_assumption(
    target_d_rms: f64,
    pulse_duration: f64,
    guard_multiples: &[f64],
    trials: usize,
    seed: u64,
    config: &ValidationConfig,
) -> Result<Vec<IsiReport>> {
    if trials == 0 {
        return Err(Error::invalid("trials", "at least one trial is required"));
    }
    if config.taps_per_spread < 10 || config.window_spreads < 10.0 {
        return Err(Error::Discretization(format!(
            "need at least 10 taps per spread and a 10-spread window, got {} and {}",
            config.taps_per_spread, config.window_spreads
        )));
    }
    if let Some(k) = guard_multiples
        .iter()
        .find(|k| !(k.is_finite() && **k >= 0.0))
    {
        return Err(Error::invalid(
            "guard multiple",
            format!("must be >= 0, got {k}"),
        ));
    }
    let params = config.synthesis(target_d_rms)?;
    let decay = params.calibrate_decay()?;
    let periods: Vec<f64> = guard_multiples
        .iter()
        .map(|k| pulse_duration + k * target_d_rms)
        .collect();
    for &ts in &periods {
        check_pulse(pulse_duration, ts)?;
    }

    let per_trial: Vec<(f64, Vec<f64>)> = (0..trials as u64)
        .into_par_iter()
        .map(|trial| {
            let channel = realize(&params, decay, config.fading, seed, trial)?;
            let spills = periods
                .iter()
                .map(|&ts| isi_spill(&channel, pulse_duration, ts))
                .collect::<Result<Vec<f64>>>()?;
            Ok((channel.rms_delay_spread(), spills))
        })
        .collect::<Result<_>>()?;

    // sequential reduction keeps the sums independent of scheduling
    let n = trials as f64;
    let realized = per_trial.iter().map(|(d, _)| d).sum::<f64>() / n;
    Ok(guard_multiples
        .iter()
        .zip(&periods)
        .enumerate()
        .map(|(i, (&k, &ts))| {
            let spills = per_trial.iter().map(|(_, s)| s[i]);
            IsiReport {
                target_d_rms_s: target_d_rms,
                realized_d_rms_s: realized,
                pulse_duration_s: pulse_duration,
                symbol_period_s: ts,
                guard_multiple: k,
                spill_fraction: spills.clone().sum::<f64>() / n,
                spill_min: spills.clone().fold(f64::INFINITY, f64::min),
                spill_max: spills.fold(f64::NEG_INFINITY, f64::max),
                trials,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn rms_examples() {
        let two = [Tap::new(0.0, 1.0), Tap::new(2e-9, 1.0)];
        assert!(rel(rms_delay_spread(&two).unwrap(), 1e-9) < 1e-12);
        assert_eq!(TappedDelayLine::single_tap().rms_delay_spread(), 0.0);
        let three = [
            Tap::new(0.0, 0.5),
            Tap::new(1e-9, 0.25),
            Tap::new(3e-9, 0.25),
        ];
        assert!(rel(rms_delay_spread(&three).unwrap(), 1.5f64.sqrt() * 1e-9) < 1e-12);
        assert!(rel(rms_delay_spread(&three).unwrap(), 1.22474e-9) < 1e-5);
        assert!(rms_delay_spread(&[]).is_err());
    }

    #[test]
    fn tap_line_invariants() {
        assert!(TappedDelayLine::new(vec![]).is_err());
        assert!(TappedDelayLine::new(vec![Tap::new(1e-9, 1.0)]).is_err());
        assert!(TappedDelayLine::new(vec![Tap::new(0.0, 1.0), Tap::new(0.0, 1.0)]).is_err());
        assert!(TappedDelayLine::new(vec![Tap::new(0.0, 1.0), Tap::new(1e-9, 0.0)]).is_err());
        let line = TappedDelayLine::new(vec![Tap::new(0.0, 3.0), Tap::new(1e-9, 1.0)]).unwrap();
        let total: f64 = line.taps().iter().map(|t| t.power).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(line.taps()[0].power, 0.75);
    }

    #[test]
    fn deterministic_calibration() {
        for (target, spacing) in [(9e-9, 0.5e-9), (1e-9, 0.05e-9)] {
            let p = SynthesisParams::new(target, spacing, 400).unwrap();
            let ch = synthesize_channel(&p, Fading::None, 0).unwrap();
            assert!(rel(ch.rms_delay_spread(), target) < 0.01);
            assert!(rel(ch.rms_delay_spread(), target) < 1e-9);
        }
    }

    #[test]
    fn infeasible_discretization() {
        assert!(SynthesisParams::new(9e-9, 1e-9, 400)
            .unwrap_err()
            .is_domain());
        assert!(SynthesisParams::new(9e-9, 0.5e-9, 100)
            .unwrap_err()
            .is_domain());
        assert!(SynthesisParams::new(0.0, 0.5e-9, 100)
            .unwrap_err()
            .is_domain());
        // boundary cases pass
        SynthesisParams::new(9e-9, 0.9e-9, 100).unwrap();
    }

    /// Energy past `ts` by integrating the received energy profile on a fine
    /// time grid (midpoint rule), independent of the closed-form overlap.
    fn spill_by_integration(ch: &TappedDelayLine, tp: f64, ts: f64) -> f64 {
        let end = ch.taps().last().unwrap().delay + tp;
        let steps = 400_000;
        let dt = end / steps as f64;
        let (mut total, mut late) = (0.0, 0.0);
        for i in 0..steps {
            let t = (i as f64 + 0.5) * dt;
            let e: f64 = ch
                .taps()
                .iter()
                .filter(|tap| t >= tap.delay && t < tap.delay + tp)
                .map(|tap| tap.power / tp)
                .sum();
            total += e * dt;
            if t >= ts {
                late += e * dt;
            }
        }
        late / total
    }

    #[test]
    fn spill_matches_numerical_integration() {
        let ch = TappedDelayLine::new(vec![
            Tap::new(0.0, 0.5),
            Tap::new(0.3e-9, 0.3),
            Tap::new(1.1e-9, 0.2),
        ])
        .unwrap();
        let tp = 0.25e-9;
        for ts in [0.25e-9, 0.4e-9, 0.5e-9, 1.2e-9, 1.5e-9] {
            let a = isi_spill(&ch, tp, ts).unwrap();
            let b = spill_by_integration(&ch, tp, ts);
            assert!((a - b).abs() < 1e-4, "ts={ts}: {a} vs {b}");
        }
    }

    #[test]
    fn spill_examples() {
        let tp = 0.25e-9;
        assert_eq!(
            isi_spill(&TappedDelayLine::single_tap(), tp, tp).unwrap(),
            0.0
        );

        let p = SynthesisParams::new(9e-9, 0.5e-9, 400).unwrap();
        let ch = synthesize_channel(&p, Fading::None, 0).unwrap();
        // frozen from an independent numpy/brentq evaluation of the same profile
        let expected = [
            (1.0, 0.3480),
            (2.0, 0.1281),
            (3.0, 0.0471),
            (4.0, 0.0173),
            (5.0, 0.0064),
        ];
        for (k, frozen) in expected {
            let s = isi_spill(&ch, tp, tp + k * 9e-9).unwrap();
            assert!((s - frozen).abs() < 1e-4, "k={k}: {s}");
        }
        let s3 = isi_spill(&ch, tp, tp + 3.0 * 9e-9).unwrap();
        assert!((0.040..=0.060).contains(&s3));
        let s1 = isi_spill(&ch, tp, tp + 9e-9).unwrap();
        assert!((s1 - 0.37).abs() < 0.03);

        assert!(isi_spill(&ch, tp, 0.1e-9).is_err());
        assert!(isi_spill(&ch, 0.0, 1e-9).is_err());
    }

    #[test]
    fn spill_and_in_symbol_fraction_are_complementary() {
        let p = SynthesisParams::new(5e-9, 0.25e-9, 300).unwrap();
        let ch = synthesize_channel(&p, Fading::Rayleigh, 7).unwrap();
        for k in [0.0, 0.3, 1.0, 2.5, 7.0] {
            let ts = 0.5e-9 + k * 5e-9;
            let sum =
                isi_spill(&ch, 0.5e-9, ts).unwrap() + in_symbol_fraction(&ch, 0.5e-9, ts).unwrap();
            assert!((sum - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn stochastic_synthesis_is_seeded() {
        let p = SynthesisParams::new(9e-9, 0.5e-9, 400).unwrap();
        let a = synthesize_channel(&p, Fading::Rayleigh, 42).unwrap();
        let b = synthesize_channel(&p, Fading::Rayleigh, 42).unwrap();
        let c = synthesize_channel(&p, Fading::Rayleigh, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        let d1 = synthesize_channel(&p, Fading::None, 1).unwrap();
        let d2 = synthesize_channel(&p, Fading::None, 2).unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn validation_examples() {
        let ks = [1.0, 2.0, 3.0, 4.0, 5.0];
        let cfg = ValidationConfig::default();
        let reports = validate_assumption(9e-9, 0.25e-9, &ks, 200, 42, &cfg).unwrap();
        assert_eq!(reports.len(), 5);
        for w in reports.windows(2) {
            assert!(w[1].spill_fraction < w[0].spill_fraction);
        }
        assert!(reports[4].spill_fraction < 0.02);
        for r in &reports {
            assert!(r.spill_min <= r.spill_fraction && r.spill_fraction <= r.spill_max);
        }

        let again = validate_assumption(9e-9, 0.25e-9, &ks, 200, 42, &cfg).unwrap();
        assert_eq!(reports, again);

        let zero = validate_assumption(9e-9, 0.25e-9, &[0.0, 1.0], 50, 1, &cfg).unwrap();
        assert!(zero[0].spill_fraction >= zero[1].spill_fraction);

        assert!(validate_assumption(9e-9, 0.25e-9, &ks, 0, 42, &cfg).is_err());
        assert!(validate_assumption(9e-9, 0.25e-9, &[-1.0], 1, 42, &cfg).is_err());
        let coarse = ValidationConfig {
            taps_per_spread: 5,
            ..cfg
        };
        assert!(validate_assumption(9e-9, 0.25e-9, &ks, 1, 42, &coarse)
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn tap_line_csv_uses_quantity_grammar() {
        let line = TappedDelayLine::new(vec![Tap::new(0.0, 1.0), Tap::new(0.5e-9, 1.0)]).unwrap();
        assert_eq!(
            line.to_csv().unwrap(),
            "delay,power\n0 ps,0.5\n500 ps,0.5\n"
        );
    }
}
