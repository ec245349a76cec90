//! One operating point through each of the four capacity models.

use uwb_capacity::capacity::{
    asymptote, binary_capacity, ideal_capacity, mixed_capacity, mostly_digital_capacity,
    CircuitFrequency, DelaySpread, MaryConvention, ModulationScheme, PulseSpec, SamplingConfig,
    SnrValue,
};

fn main() -> uwb_capacity::Result<()> {
    // industrial LOS channel
    let d = DelaySpread::from_seconds(9e-9)?;
    let pulse = PulseSpec::from_bandwidth(2e9)?;

    let ideal = ideal_capacity(pulse, d, SnrValue::from_db(10.0)?);
    let binary = binary_capacity(pulse, d);
    let digital = mostly_digital_capacity(
        SamplingConfig::new(5e9, SamplingConfig::CANONICAL_FACTOR)?,
        d,
        ModulationScheme::binary(),
    );
    let mixed = mixed_capacity(
        CircuitFrequency::from_hertz(20e9)?,
        d,
        ModulationScheme::binary(),
    );
    let mixed_4ary = mixed_capacity(
        CircuitFrequency::from_hertz(20e9)?,
        d,
        ModulationScheme::new(4, MaryConvention::MinusOne)?,
    );

    println!(
        "d_RMS = 9 ns, ceiling 1/d = {:.3} Mbit/s",
        asymptote(d)? / 1e6
    );
    for (name, c) in [
        ("ideal, B = 2 GHz, 10 dB", &ideal),
        ("binary, B = 2 GHz", &binary),
        ("mostly digital, 5 GSPS, n = 4", &digital),
        ("mixed, F = 20 GHz", &mixed),
        ("mixed, F = 20 GHz, M = 4", &mixed_4ary),
    ] {
        println!(
            "{name:<32} {:>10.3} Mbit/s  notes: {:?}",
            c.rate_mbps(),
            c.notes
        );
    }
    Ok(())
}
