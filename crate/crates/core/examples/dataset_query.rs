//! Query the built-in surveys and load a user extension from CSV.

use uwb_capacity::datasets::{
    self, ingest_csv, query, select, to_csv_string, AdcEntry, Extreme, Filter, TableId,
};

fn main() -> uwb_capacity::Result<()> {
    let fast: Filter = "sampling_frequency>=1GSPS".parse()?;
    let market = query(&datasets::adc_market(), &[fast])?;
    println!("{} market ADCs at 1 GSPS or more", market.len());

    let nlos = query(&datasets::channels(), &["sight=NLOS".parse()?])?;
    for env in &nlos {
        println!("  {:<20} {:>5.1} ns", env.name, env.rms_delay_spread * 1e9);
    }

    if let Some(g) = select(
        &datasets::pulse_generators(),
        "min_pulse_duration",
        Extreme::Min,
    )? {
        println!(
            "shortest pulse: {} ({:.0} ps)",
            g.author,
            g.min_pulse_duration * 1e12
        );
    }

    // round-trip a custom converter through the CSV schema
    let mut extended = datasets::adc_state_of_art();
    let text = format!("{}Acme,2024,20 GSPS,6,0.5,,\n", to_csv_string(&extended)?);
    let path = std::env::temp_dir().join("uwbcap_adc_extension.csv");
    std::fs::write(&path, text).expect("temp dir is writable");
    let loaded: Vec<AdcEntry> = ingest_csv(&path, TableId::AdcStateOfArt)?;
    extended.push(loaded.last().expect("one row appended").clone());
    assert_eq!(loaded, extended);
    println!("ingested {} rows from {}", loaded.len(), path.display());
    Ok(())
}
