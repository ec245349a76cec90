use std::process::{Command, Output};

use uwb_capacity::capacity::{
    mixed_capacity, mostly_digital_capacity, CircuitFrequency, DelaySpread, ModulationScheme,
    SamplingConfig,
};
use uwb_capacity::datasets::{self, parse_csv, AdcEntry, TableId};
use uwb_capacity::explorer::{run_sweep, SweepSpec};

fn uwbcap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uwbcap"))
        .args(args)
        .output()
        .expect("uwbcap runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = uwbcap(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn capacity_matches_library_exactly() {
    let v = json(&[
        "capacity",
        "digital",
        "--fs",
        "2GSPS",
        "--nsampling",
        "4",
        "--delay-spread",
        "17ns",
    ]);
    let lib = mostly_digital_capacity(
        SamplingConfig::new(2e9, 4.0).unwrap(),
        DelaySpread::from_seconds(17e-9).unwrap(),
        ModulationScheme::binary(),
    );
    assert_eq!(v["rate_bps"].as_f64().unwrap(), lib.rate);
    assert_eq!(v["inputs"]["model"], "mostly_digital");

    let v = json(&[
        "capacity",
        "mixed",
        "--fcircuit",
        "20GHz",
        "--delay-spread",
        "0.87ns",
        "--mary",
        "4",
    ]);
    let lib = mixed_capacity(
        CircuitFrequency::from_hertz(20e9).unwrap(),
        DelaySpread::from_seconds(0.87e-9).unwrap(),
        ModulationScheme::new(4, Default::default()).unwrap(),
    );
    assert_eq!(v["rate_bps"].as_f64().unwrap(), lib.rate);
}

#[test]
fn human_output_prints_ten_significant_digits() {
    let out = uwbcap(&[
        "capacity",
        "mixed",
        "--fcircuit",
        "20GHz",
        "--delay-spread",
        "0.87ns",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("capacity: 1086.956522 Mbit/s"), "{text}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| uwbcap(args).status.code();
    assert_eq!(
        code(&[
            "capacity",
            "binary",
            "--bandwidth",
            "1GHz",
            "--delay-spread",
            "0s"
        ]),
        Some(0)
    );
    // bare number without a unit
    assert_eq!(
        code(&[
            "capacity",
            "binary",
            "--bandwidth",
            "1GHz",
            "--delay-spread",
            "17"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["capacity", "binary", "--delay-spread", "17ns"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "capacity",
            "mixed",
            "--fcircuit",
            "20GHz",
            "--delay-spread",
            "0s",
            "--percent-of-max"
        ]),
        Some(3)
    );
    assert_eq!(code(&["table", "ix"]), Some(2));
    assert_eq!(code(&["table", "iv", "--check"]), Some(0));
    assert_eq!(
        code(&["datasets", "list", "adc-market", "--max", "colour"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "validate-isi",
            "--delay-spread",
            "9ns",
            "--pulse-duration",
            "0.25ns",
            "--window-spreads",
            "5"
        ]),
        Some(3)
    );
}

#[test]
fn sweep_rows_match_library() {
    let v = json(&[
        "sweep",
        "--mode",
        "mixed",
        "--param",
        "fcircuit",
        "--from",
        "1GHz",
        "--to",
        "60GHz",
        "--points",
        "60",
        "--delay-spreads",
        "1ns,5ns,10ns",
    ]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 180);
    let mut spec = SweepSpec::mixed();
    spec.range.points = 60;
    let lib = run_sweep(&spec).unwrap();
    for (row, expected) in rows.iter().zip(&lib) {
        let c = row["capacity_bps"].as_f64().unwrap();
        assert_eq!(c, expected.capacity_bps.unwrap());
        assert!(c < 1.0 / row["delay_spread_s"].as_f64().unwrap());
    }

    let v = json(&[
        "sweep",
        "--mode",
        "digital",
        "--from",
        "2GSPS",
        "--to",
        "10GSPS",
        "--points",
        "2",
        "--delay-spreads",
        "17ns",
        "--nsampling",
        "4",
    ]);
    assert_eq!(
        v[0]["capacity_bps"].as_f64().unwrap() / 1e6,
        52.63157894736842
    );
}

#[test]
fn csv_dataset_output_round_trips() {
    let out = uwbcap(&["--format", "csv", "datasets", "list", "adc-state-of-art"]);
    let parsed: Vec<AdcEntry> =
        parse_csv(out.stdout.as_slice(), TableId::AdcStateOfArt, "stdout").unwrap();
    assert_eq!(parsed, datasets::adc_state_of_art());
}

#[test]
fn dataset_queries() {
    assert_eq!(
        json(&["datasets", "list", "channels"])
            .as_array()
            .unwrap()
            .len(),
        9
    );
    let v = json(&[
        "datasets",
        "list",
        "pulse-generators",
        "--min",
        "min_pulse_duration",
    ]);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["author"], "Deparis et al.");
    let v = json(&[
        "datasets",
        "list",
        "adc-market",
        "--where",
        "sampling_frequency>=1GSPS",
    ]);
    assert_eq!(v.as_array().unwrap().len(), 9);
}

#[test]
fn isi_validation_is_deterministic() {
    let args = [
        "--format",
        "json",
        "validate-isi",
        "--delay-spread",
        "9ns",
        "--pulse-duration",
        "0.25ns",
        "--guard-multiples",
        "1,3,5",
        "--trials",
        "200",
        "--seed",
        "42",
    ];
    let a = uwbcap(&args);
    let b = uwbcap(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let spills: Vec<f64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["spill_fraction"].as_f64().unwrap())
        .collect();
    assert_eq!(spills.len(), 3);
    assert!(spills[0] > spills[1] && spills[1] > spills[2]);

    let v = json(&[
        "validate-isi",
        "--delay-spread",
        "9ns",
        "--pulse-duration",
        "0.25ns",
        "--guard-multiples",
        "1",
        "--deterministic",
        "--trials",
        "1",
    ]);
    let spill = v[0]["spill_fraction"].as_f64().unwrap();
    assert!((spill - 0.37).abs() < 0.03, "{spill}");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("uwbcap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let taps = dir.join("taps.csv");
    let out = uwbcap(&[
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
        "table",
        "iv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);

    let out = uwbcap(&[
        "validate-isi",
        "--delay-spread",
        "9ns",
        "--pulse-duration",
        "0.25ns",
        "--trials",
        "2",
        "--taps-csv",
        taps.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&taps).unwrap();
    assert!(text.starts_with("delay,power\n0 ps,"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}
