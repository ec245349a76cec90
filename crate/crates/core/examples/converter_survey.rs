//! Every surveyed ADC as the front end of a mostly-digital receiver.

use uwb_capacity::datasets;
use uwb_capacity::explorer::market_capacity_points;

fn main() -> uwb_capacity::Result<()> {
    let envs: Vec<_> = datasets::channels()
        .into_iter()
        .filter(|c| c.name.starts_with("Industrial"))
        .collect();
    let points = market_capacity_points(4.0, &envs)?;

    let best = points
        .iter()
        .max_by(|a, b| a.capacity_bps.total_cmp(&b.capacity_bps))
        .expect("survey is not empty");
    println!(
        "{} points; best: {} ({:.1} GSPS, {} bit) in {}: {:.2} Mbit/s",
        points.len(),
        best.designer,
        best.sampling_frequency_hz / 1e9,
        best.bit_precision,
        best.environment,
        best.capacity_bps / 1e6
    );
    for p in points.iter().filter(|p| p.environment == "Industrial NLOS") {
        println!(
            "{:<28} {:>7.3} GSPS {:>2} bit {:>8.3} Mbit/s",
            p.designer,
            p.sampling_frequency_hz / 1e9,
            p.bit_precision,
            p.capacity_bps / 1e6
        );
    }
    Ok(())
}
