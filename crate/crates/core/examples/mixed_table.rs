//! Rebuild the mixed-implementation table: fastest surveyed pulse generators
//! behind each directive-antenna delay spread, for M = 2, 3 and 4.

use uwb_capacity::explorer::{check_table_vii, reproduce_table_vii};

fn main() -> uwb_capacity::Result<()> {
    let rows = reproduce_table_vii();
    for group in rows.chunks(3) {
        let first = &group[0];
        let rates: Vec<String> = group
            .iter()
            .map(|r| format!("{:9.2}", r.capacity_mbps()))
            .collect();
        println!(
            "{:>5.2} ns  {:<22} {:>6.2} GHz  {}",
            first.delay_spread_s * 1e9,
            first.pulse_generator.as_deref().unwrap_or(""),
            first.frequency_hz / 1e9,
            rates.join(" ")
        );
    }
    let check = check_table_vii(&rows)?;
    println!("matches printed table: {}", check.passed());
    Ok(())
}
