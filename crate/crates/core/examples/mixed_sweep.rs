//! Mixed implementation: how close a 5 GHz circuit gets to a 60 GHz one.

use uwb_capacity::capacity::{percent_of_max, DelaySpread, FrequencyModel};
use uwb_capacity::explorer::{run_sweep, SweepSpec};

fn main() -> uwb_capacity::Result<()> {
    for ns in [1.0, 5.0, 10.0] {
        let d = DelaySpread::from_seconds(ns * 1e-9)?;
        let at_5 = percent_of_max(FrequencyModel::Mixed, 5e9, d)?;
        let at_60 = percent_of_max(FrequencyModel::Mixed, 60e9, d)?;
        println!(
            "d_RMS = {ns:>4} ns: {:.2}% of 1/d at 5 GHz, {:.2}% at 60 GHz",
            100.0 * at_5,
            100.0 * at_60
        );
    }

    let rows = run_sweep(&SweepSpec::mixed())?;
    let steepest = rows
        .iter()
        .filter_map(|r| r.derivative_bps_per_hz)
        .fold(0.0, f64::max);
    println!(
        "{} sweep rows, steepest slope {:.4} bit/s per Hz",
        rows.len(),
        steepest
    );
    Ok(())
}
