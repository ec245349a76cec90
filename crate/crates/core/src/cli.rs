//! The `uwbcap` command line.
//!
//! Every number printed comes straight from a library call. Exit codes:
//! 0 success, 1 failed `--check`, 2 usage error, 3 domain error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::capacity::{
    binary_capacity, ideal_capacity, mixed_capacity, mostly_digital_capacity, percent_of_max,
    CapacityInputs, CapacityResult, CircuitFrequency, DelaySpread, FrequencyModel, MaryConvention,
    ModulationScheme, PulseSpec, SamplingConfig, SnrValue,
};
use crate::datasets::{ingest_csv, load_builtin, Entries, Extreme, Filter, TableId};
use crate::error::{Error, Result};
use crate::explorer::{
    check_table_iv, check_table_vii, reproduce_table_iv, reproduce_table_vii, run_sweep,
    GoldenCheck, Spacing, SweepMode, SweepOutputs, SweepSpec, SweptParameter,
};
use crate::isi::{synthesize_trial, validate_assumption, ValidationConfig};
use crate::output::{render_aligned, write_rows, Cell, OutputFormat, Tabular};
use crate::units::{format_quantity, parse_quantity, Dimension, Unit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

fn time(s: &str) -> std::result::Result<f64, String> {
    parse_quantity(s, Dimension::Time).map_err(|e| e.to_string())
}

fn frequency(s: &str) -> std::result::Result<f64, String> {
    parse_quantity(s, Dimension::Frequency).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "uwbcap",
    version,
    about = "IR-UWB capacity limits, design sweeps, survey tables and ISI checks",
    after_help = "Quantities need a unit suffix: ps ns us ms s, Hz kHz MHz GHz, MSPS GSPS."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,

    /// Write results to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Human => OutputFormat::Human,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Capacity of one operating point.
    Capacity {
        #[command(subcommand)]
        model: CapacityCommand,
    },
    /// Capacity, derivative and percent-of-maximum over a frequency grid.
    Sweep(SweepArgs),
    /// Rebuild a published achievable-rate table from the surveys.
    Table(TableArgs),
    /// Browse the built-in survey tables.
    Datasets {
        #[command(subcommand)]
        action: DatasetsCommand,
    },
    /// Measure ISI spill at T_s = T_p + k·d_RMS over synthetic channels.
    ValidateIsi(IsiArgs),
}

#[derive(Debug, Subcommand)]
enum CapacityCommand {
    /// Shannon-limited pulse train.
    Ideal {
        #[command(flatten)]
        pulse: PulseArgs,
        /// SNR in dB [default: linear 3, the binary operating point]
        #[arg(long, allow_hyphen_values = true, conflicts_with = "snr")]
        snr_db: Option<f64>,
        /// Linear SNR.
        #[arg(long)]
        snr: Option<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// One bit per pulse.
    Binary {
        #[command(flatten)]
        pulse: PulseArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Pulse width set by the ADC: T_p = n / F_s.
    Digital {
        /// ADC sampling frequency.
        #[arg(long, value_parser = frequency)]
        fs: f64,
        /// Samples per pulse.
        #[arg(long, default_value_t = SamplingConfig::CANONICAL_FACTOR)]
        nsampling: f64,
        #[command(flatten)]
        mary: MaryArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Pulse width set by the analog circuit: T_p = 1 / F.
    Mixed {
        /// Circuit frequency.
        #[arg(long, value_parser = frequency)]
        fcircuit: f64,
        #[command(flatten)]
        mary: MaryArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PulseArgs {
    /// Pulse duration T_p.
    #[arg(long, value_parser = time)]
    pulse_duration: Option<f64>,
    /// Pulse bandwidth B = 1 / T_p.
    #[arg(long, value_parser = frequency)]
    bandwidth: Option<f64>,
}

impl PulseArgs {
    fn spec(&self) -> Result<PulseSpec> {
        match (self.pulse_duration, self.bandwidth) {
            (Some(t), _) => PulseSpec::from_duration(t),
            (None, Some(b)) => PulseSpec::from_bandwidth(b),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Channel RMS delay spread.
    #[arg(long, value_parser = time)]
    delay_spread: f64,
    /// Also report the fraction of the 1/d_RMS ceiling reached.
    #[arg(long)]
    percent_of_max: bool,
}

#[derive(Debug, Args)]
struct MaryArgs {
    /// Modulation order M.
    #[arg(long, default_value_t = 2)]
    mary: u32,
    /// Bits per symbol: `paper` uses M - 1 as the published tables do, `log2` uses log2(M).
    #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
    mary_convention: ConventionArg,
}

impl MaryArgs {
    fn scheme(&self) -> Result<ModulationScheme> {
        ModulationScheme::new(self.mary, self.mary_convention.into())
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Paper,
    Log2,
}

impl From<ConventionArg> for MaryConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => MaryConvention::MinusOne,
            ConventionArg::Log2 => MaryConvention::Log2,
        }
    }
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Capacity model.
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Swept frequency; must be the model's own [default: per mode]
    #[arg(long, value_enum)]
    param: Option<ParamArg>,
    /// First grid frequency.
    #[arg(long, value_parser = frequency)]
    from: Option<f64>,
    /// Last grid frequency.
    #[arg(long, value_parser = frequency)]
    to: Option<f64>,
    /// Grid points.
    #[arg(long)]
    points: Option<usize>,
    /// Logarithmic grid spacing (the default).
    #[arg(long, conflicts_with = "linear")]
    log: bool,
    /// Linear grid spacing.
    #[arg(long)]
    linear: bool,
    /// Comma-separated delay spreads.
    #[arg(long, value_delimiter = ',', value_parser = time)]
    delay_spreads: Vec<f64>,
    /// Comma-separated sampling factors (digital mode).
    #[arg(long, value_delimiter = ',')]
    nsampling: Vec<f64>,
    /// Comma-separated columns to emit.
    #[arg(long, value_delimiter = ',', value_enum)]
    outputs: Vec<SweepOutputArg>,
    /// SNR in dB for the ideal mode [default: linear 3]
    #[arg(long, allow_hyphen_values = true)]
    snr_db: Option<f64>,
    #[command(flatten)]
    mary: MaryArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Ideal,
    Binary,
    Digital,
    Mixed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParamArg {
    Bandwidth,
    Fs,
    Fcircuit,
}

impl From<ParamArg> for SweptParameter {
    fn from(p: ParamArg) -> Self {
        match p {
            ParamArg::Bandwidth => SweptParameter::Bandwidth,
            ParamArg::Fs => SweptParameter::SamplingFrequency,
            ParamArg::Fcircuit => SweptParameter::CircuitFrequency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum SweepOutputArg {
    Capacity,
    Derivative,
    Percent,
}

impl SweepArgs {
    fn spec(&self) -> Result<SweepSpec> {
        let mut spec = match self.mode {
            ModeArg::Ideal => {
                let snr = match self.snr_db {
                    Some(db) => SnrValue::from_db(db)?,
                    None => SnrValue::BINARY,
                };
                SweepSpec {
                    mode: SweepMode::Ideal { snr },
                    ..SweepSpec::binary_bandwidth()
                }
            }
            ModeArg::Binary => SweepSpec::binary_bandwidth(),
            ModeArg::Digital => SweepSpec::mostly_digital(),
            ModeArg::Mixed => SweepSpec::mixed(),
        };
        if let Some(p) = self.param {
            spec.parameter = p.into();
        }
        if let Some(f) = self.from {
            spec.range.start_hz = f;
        }
        if let Some(f) = self.to {
            spec.range.end_hz = f;
        }
        if let Some(n) = self.points {
            spec.range.points = n;
        }
        if self.linear {
            spec.range.spacing = Spacing::Linear;
        } else if self.log {
            spec.range.spacing = Spacing::Logarithmic;
        }
        if !self.delay_spreads.is_empty() {
            spec.delay_spreads = self
                .delay_spreads
                .iter()
                .map(|&d| DelaySpread::from_seconds(d))
                .collect::<Result<_>>()?;
        }
        if !self.nsampling.is_empty() {
            spec.sampling_factors = self.nsampling.clone();
        }
        if !self.outputs.is_empty() {
            spec.outputs = SweepOutputs {
                capacity: self.outputs.contains(&SweepOutputArg::Capacity),
                derivative: self.outputs.contains(&SweepOutputArg::Derivative),
                percent_of_max: self.outputs.contains(&SweepOutputArg::Percent),
            };
        }
        spec.modulation = self.mary.scheme()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Which table.
    #[arg(value_enum)]
    which: TableArg,
    /// Compare with the printed values; exit 1 on mismatch.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableArg {
    /// Mostly-digital rates for three ADC speeds.
    Iv,
    /// Mixed-implementation rates for surveyed pulse generators.
    Vii,
}

#[derive(Debug, Subcommand)]
enum DatasetsCommand {
    /// Print a table, optionally filtered.
    List(ListArgs),
}

#[derive(Debug, Args)]
struct ListArgs {
    /// adc-state-of-art, adc-market, channels, pulse-generators or antenna-configs.
    table: String,
    /// Filter such as `sampling_frequency>=1GSPS` or `sight=NLOS`; repeatable.
    #[arg(long = "where", value_name = "EXPR")]
    filters: Vec<String>,
    /// Keep only the entry with the smallest value of this field.
    #[arg(long, value_name = "FIELD", conflicts_with = "max")]
    min: Option<String>,
    /// Keep only the entry with the largest value of this field.
    #[arg(long, value_name = "FIELD")]
    max: Option<String>,
    /// Read entries from a CSV file in the table's schema instead.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IsiArgs {
    /// Target RMS delay spread.
    #[arg(long, value_parser = time)]
    delay_spread: f64,
    /// Pulse duration T_p.
    #[arg(long, value_parser = time)]
    pulse_duration: f64,
    /// Comma-separated guard multiples k.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
    guard_multiples: Vec<f64>,
    /// Channel realizations.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Use the exponential profile without fading.
    #[arg(long)]
    deterministic: bool,
    /// Taps per target delay spread.
    #[arg(long, default_value_t = ValidationConfig::default().taps_per_spread)]
    taps_per_spread: usize,
    /// Profile length in target delay spreads.
    #[arg(long, default_value_t = ValidationConfig::default().window_spreads)]
    window_spreads: f64,
    /// Also write the first trial's tap line as CSV.
    #[arg(long, value_name = "PATH")]
    taps_csv: Option<PathBuf>,
}

/// A capacity result with the flat columns the CLI prints.
#[derive(Debug, Clone, Serialize)]
pub struct CapacityReport {
    #[serde(flatten)]
    pub result: CapacityResult,
    pub rate_mbit_s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub percent_of_max: Option<f64>,
}

impl Tabular for CapacityReport {
    fn columns(&self) -> Vec<(&'static str, Cell)> {
        let r = &self.result;
        let (model, frequency_name, frequency, factor, order, snr) = match r.inputs {
            CapacityInputs::Ideal {
                pulse, snr_linear, ..
            } => (
                "ideal",
                "bandwidth_hz",
                pulse.bandwidth(),
                None,
                2,
                Some(snr_linear.linear()),
            ),
            CapacityInputs::Binary { pulse, .. } => {
                ("binary", "bandwidth_hz", pulse.bandwidth(), None, 2, None)
            }
            CapacityInputs::MostlyDigital {
                sampling,
                modulation,
                ..
            } => (
                "mostly_digital",
                "sampling_frequency_hz",
                sampling.sampling_frequency(),
                Some(sampling.sampling_factor()),
                modulation.order(),
                None,
            ),
            CapacityInputs::Mixed {
                circuit_frequency_hz,
                modulation,
                ..
            } => (
                "mixed",
                "circuit_frequency_hz",
                circuit_frequency_hz.hertz(),
                None,
                modulation.order(),
                None,
            ),
        };
        let mut cols = vec![
            ("model", model.into()),
            ("delay_spread_s", r.inputs.delay_spread().seconds().into()),
            (frequency_name, frequency.into()),
        ];
        if factor.is_some() {
            cols.push(("sampling_factor", factor.into()));
        }
        if snr.is_some() {
            cols.push(("snr_linear", snr.into()));
        }
        cols.push(("modulation_order", Cell::Integer(order.into())));
        cols.push(("capacity_bps", r.rate.into()));
        cols.push(("capacity_mbit_s", self.rate_mbit_s.into()));
        cols.push(("limiting_asymptote_bps", r.limiting_asymptote.into()));
        if self.percent_of_max.is_some() {
            cols.push(("percent_of_max", self.percent_of_max.into()));
        }
        let notes: Vec<String> = r
            .notes
            .iter()
            .map(|n| serde_json::to_value(n).map(|v| v.as_str().unwrap_or_default().to_string()))
            .collect::<std::result::Result<_, _>>()
            .unwrap_or_default();
        cols.push(("notes", Cell::Text(notes.join(" "))));
        cols
    }
}

fn capacity_report(cmd: &CapacityCommand) -> Result<CapacityReport> {
    let (result, model, frequency, common) = match cmd {
        CapacityCommand::Ideal {
            pulse,
            snr_db,
            snr,
            common,
        } => {
            let snr = match (snr_db, snr) {
                (Some(db), _) => SnrValue::from_db(*db)?,
                (None, Some(linear)) => SnrValue::from_linear(*linear)?,
                (None, None) => SnrValue::BINARY,
            };
            let p = pulse.spec()?;
            let d = DelaySpread::from_seconds(common.delay_spread)?;
            (
                ideal_capacity(p, d, snr),
                FrequencyModel::Mixed,
                p.bandwidth(),
                common,
            )
        }
        CapacityCommand::Binary { pulse, common } => {
            let p = pulse.spec()?;
            let d = DelaySpread::from_seconds(common.delay_spread)?;
            (
                binary_capacity(p, d),
                FrequencyModel::Mixed,
                p.bandwidth(),
                common,
            )
        }
        CapacityCommand::Digital {
            fs,
            nsampling,
            mary,
            common,
        } => {
            let sampling = SamplingConfig::new(*fs, *nsampling)?;
            let d = DelaySpread::from_seconds(common.delay_spread)?;
            (
                mostly_digital_capacity(sampling, d, mary.scheme()?),
                FrequencyModel::mostly_digital(*nsampling)?,
                *fs,
                common,
            )
        }
        CapacityCommand::Mixed {
            fcircuit,
            mary,
            common,
        } => {
            let f = CircuitFrequency::from_hertz(*fcircuit)?;
            let d = DelaySpread::from_seconds(common.delay_spread)?;
            (
                mixed_capacity(f, d, mary.scheme()?),
                FrequencyModel::Mixed,
                *fcircuit,
                common,
            )
        }
    };
    let percent = if common.percent_of_max {
        Some(percent_of_max(
            model,
            frequency,
            result.inputs.delay_spread(),
        )?)
    } else {
        None
    };
    Ok(CapacityReport {
        rate_mbit_s: result.rate_mbps(),
        result,
        percent_of_max: percent,
    })
}

/// Vertical `name  value` layout for a single record.
fn render_record<R: Tabular>(row: &R) -> String {
    let body: Vec<Vec<String>> = row
        .columns()
        .into_iter()
        .map(|(name, cell)| vec![name.to_string(), cell.to_string()])
        .collect();
    render_aligned(&[], &body)
}

fn run_capacity(cmd: &CapacityCommand, format: OutputFormat, out: &mut Vec<u8>) -> Result<i32> {
    let report = capacity_report(cmd)?;
    match format {
        OutputFormat::Human => {
            writeln!(out, "capacity: {} Mbit/s", Cell::Number(report.rate_mbit_s))?;
            out.extend_from_slice(render_record(&report).as_bytes());
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            out.push(b'\n');
        }
        OutputFormat::Csv => write_rows(&[report], format, out)?,
    }
    Ok(EXIT_OK)
}

fn run_sweep_command(args: &SweepArgs, format: OutputFormat, out: &mut Vec<u8>) -> Result<i32> {
    let spec = args.spec()?;
    let rows = run_sweep(&spec)?;
    if format == OutputFormat::Human {
        let spreads: Vec<String> = spec
            .delay_spreads
            .iter()
            .map(|d| format_quantity(d.seconds(), &Unit::TIME))
            .collect();
        writeln!(
            out,
            "# {} rows; delay spreads: {}",
            rows.len(),
            spreads.join(", ")
        )?;
    }
    write_rows(&rows, format, out)?;
    Ok(EXIT_OK)
}

fn run_table(
    args: &TableArgs,
    format: OutputFormat,
    out: &mut Vec<u8>,
    err: &mut dyn Write,
) -> Result<i32> {
    let (rows, check): (_, fn(&[_]) -> Result<GoldenCheck>) = match args.which {
        TableArg::Iv => (reproduce_table_iv(), check_table_iv),
        TableArg::Vii => (reproduce_table_vii(), check_table_vii),
    };
    if !args.check {
        write_rows(&rows, format, out)?;
        return Ok(EXIT_OK);
    }
    let result = check(&rows)?;
    write_rows(&result.comparisons, format, &mut *out)?;
    let failed = result.comparisons.iter().filter(|c| !c.pass).count();
    let summary = format!(
        "table {}: {} of {} values within {} (max relative error {})",
        result.table,
        result.comparisons.len() - failed,
        result.comparisons.len(),
        result.tolerance,
        Cell::Number(result.max_relative_error()),
    );
    if format == OutputFormat::Human {
        writeln!(out, "{summary}")?;
    } else {
        writeln!(err, "{summary}")?;
    }
    Ok(if result.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn ingest(table: TableId, path: &Path) -> Result<Entries> {
    Ok(match table {
        TableId::AdcStateOfArt | TableId::AdcMarket => Entries::Adc(ingest_csv(path, table)?),
        TableId::Channels => Entries::Channels(ingest_csv(path, table)?),
        TableId::PulseGenerators => Entries::PulseGenerators(ingest_csv(path, table)?),
        TableId::AntennaConfigs => Entries::AntennaConfigs(ingest_csv(path, table)?),
    })
}

fn run_datasets(args: &ListArgs, format: OutputFormat, out: &mut Vec<u8>) -> Result<i32> {
    let table: TableId = args.table.parse()?;
    let mut entries = match &args.csv {
        Some(path) => ingest(table, path)?,
        None => load_builtin(table),
    };
    let filters = args
        .filters
        .iter()
        .map(|f| f.parse())
        .collect::<Result<Vec<Filter>>>()?;
    entries = entries.filter(&filters)?;
    if let Some(field) = &args.min {
        entries = entries.select(field, Extreme::Min)?;
    }
    if let Some(field) = &args.max {
        entries = entries.select(field, Extreme::Max)?;
    }
    match format {
        OutputFormat::Json => {
            out.extend_from_slice(entries.to_json()?.as_bytes());
            out.push(b'\n');
        }
        OutputFormat::Csv => out.extend_from_slice(entries.to_csv()?.as_bytes()),
        OutputFormat::Human => {
            let csv = entries.to_csv()?;
            let mut reader = csv::Reader::from_reader(csv.as_bytes());
            let header: Vec<String> = reader.headers()?.iter().map(String::from).collect();
            let body = reader
                .records()
                .map(|r| r.map(|r| r.iter().map(String::from).collect()))
                .collect::<std::result::Result<Vec<Vec<String>>, _>>()?;
            out.extend_from_slice(render_aligned(&header, &body).as_bytes());
            writeln!(out, "({} entries)", body.len())?;
        }
    }
    Ok(EXIT_OK)
}

fn run_isi(args: &IsiArgs, format: OutputFormat, out: &mut Vec<u8>) -> Result<i32> {
    let config = ValidationConfig {
        taps_per_spread: args.taps_per_spread,
        window_spreads: args.window_spreads,
        fading: if args.deterministic {
            crate::isi::Fading::None
        } else {
            crate::isi::Fading::Rayleigh
        },
    };
    let reports = validate_assumption(
        args.delay_spread,
        args.pulse_duration,
        &args.guard_multiples,
        args.trials,
        args.seed,
        &config,
    )?;
    if let Some(path) = &args.taps_csv {
        let params = config.synthesis(args.delay_spread)?;
        let channel = synthesize_trial(&params, config.fading, args.seed, 0)?;
        write_file(path, channel.to_csv()?.as_bytes())?;
    }
    write_rows(&reports, format, out)?;
    Ok(EXIT_OK)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Exit code for a library error: 3 for model-domain errors, 2 otherwise.
pub fn exit_code(error: &Error) -> i32 {
    if error.is_domain() {
        EXIT_DOMAIN
    } else {
        EXIT_USAGE
    }
}

fn execute(cli: &Cli, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<i32> {
    let format = cli.format.into();
    match &cli.command {
        Command::Capacity { model } => run_capacity(model, format, out),
        Command::Sweep(args) => run_sweep_command(args, format, out),
        Command::Table(args) => run_table(args, format, out, err),
        Command::Datasets {
            action: DatasetsCommand::List(args),
        } => run_datasets(args, format, out),
        Command::ValidateIsi(args) => run_isi(args, format, out),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code. Results go to `stdout` or `--output`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let outcome = execute(&cli, &mut buffer, stderr).and_then(|code| {
        match &cli.output {
            Some(path) => write_file(path, &buffer)?,
            None => stdout.write_all(&buffer)?,
        }
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
