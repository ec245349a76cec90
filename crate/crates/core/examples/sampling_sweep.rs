//! Mostly-digital receiver: capacity, its slope and the share of the
//! ceiling reached versus ADC rate, plus the rate needed for 90%.

use uwb_capacity::capacity::{required_frequency, DelaySpread, FrequencyModel};
use uwb_capacity::explorer::{run_sweep, FrequencyRange, SweepSpec};
use uwb_capacity::output::{render_human, write_rows, OutputFormat};

fn main() -> uwb_capacity::Result<()> {
    let mut spec = SweepSpec::mostly_digital();
    spec.range = FrequencyRange::log(0.1e9, 100e9, 7);
    spec.sampling_factors = vec![4.0];
    let rows = run_sweep(&spec)?;
    print!("{}", render_human(&rows));

    println!();
    let model = FrequencyModel::mostly_digital(4.0)?;
    for ns in [9.0, 17.0, 89.0] {
        let d = DelaySpread::from_seconds(ns * 1e-9)?;
        let fs = required_frequency(model, 0.9, d)?;
        println!(
            "d_RMS = {ns:>4} ns: 90% of 1/d needs F_s = {:.3} GSPS",
            fs / 1e9
        );
    }

    if std::env::args().any(|a| a == "--json") {
        write_rows(&rows, OutputFormat::Json, std::io::stdout())?;
    }
    Ok(())
}
