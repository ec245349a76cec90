//! Binary capacity versus pulse bandwidth for three channels, as CSV.
//!
//! The curves flatten at 1/d_RMS: past a few GHz, extra bandwidth buys
//! almost nothing.

use uwb_capacity::explorer::{run_sweep, SweepSpec};
use uwb_capacity::output::{write_rows, OutputFormat};

fn main() -> uwb_capacity::Result<()> {
    let mut spec = SweepSpec::binary_bandwidth();
    spec.range.points = 25;
    let rows = run_sweep(&spec)?;
    write_rows(&rows, OutputFormat::Csv, std::io::stdout())
}
