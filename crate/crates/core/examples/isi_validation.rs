//! How much energy spills past T_s = T_p + k·d_RMS on exponential channels.

use uwb_capacity::isi::{
    isi_spill, synthesize_channel, validate_assumption, Fading, SynthesisParams, ValidationConfig,
};
use uwb_capacity::output::render_human;

fn main() -> uwb_capacity::Result<()> {
    let (d, tp) = (9e-9, 0.25e-9);

    let params = SynthesisParams::new(d, 0.5e-9, 400)?;
    let channel = synthesize_channel(&params, Fading::None, 0)?;
    println!(
        "deterministic profile: {} taps, d_RMS = {:.4} ns",
        channel.len(),
        channel.rms_delay_spread() * 1e9
    );
    for k in [1.0, 2.0, 3.0] {
        let spill = isi_spill(&channel, tp, tp + k * d)?;
        println!(
            "  k = {k}: spill {spill:.4}  (e^-k = {:.4})",
            (-k).exp()
        );
    }

    let ks = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0];
    let reports = validate_assumption(d, tp, &ks, 200, 42, &ValidationConfig::default())?;
    println!("\nRayleigh fading, 200 trials:");
    print!("{}", render_human(&reports));
    Ok(())
}
