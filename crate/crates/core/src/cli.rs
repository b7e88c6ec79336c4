//! `mmwb` command line.
//!
//! Exit codes: 0 success, 1 runtime or I/O failure, 2 configuration error,
//! 3 infeasible multiplex plan.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::beam_control::{run_trace, LogEntry};
use crate::error::{Error, Result};
use crate::manifest::RunManifest;
use crate::multiplex::{allocate, default_min_separation, Allocation, CellRequest};
use crate::scenario::{presets, run_sweep, Scenario, SweepRange, SweepRecord};
use crate::throughput::snir_max_from_thr_max;
use crate::units::{BandwidthHz, DistanceM, FrequencyHz, GainDb, Passband, PowerDbm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mmwb", version, about = "mmWave bridge link simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep the UE along the track and write bridge and direct SNR/throughput.
    Run(RunArgs),
    /// Print the noise floor that puts the knee at a given distance.
    Calibrate(CalibrateArgs),
    /// Assign frequency slots to several cells sharing the donor link.
    Plan(PlanArgs),
    /// Run the donor beam-sweep controller and write its event log.
    Beams(BeamsArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Scenario file, or the name of a bundled preset.
    #[arg(long)]
    scenario: String,
    /// Distance grid `start:end:step` in metres; defaults to the scenario's.
    #[arg(long)]
    sweep: Option<String>,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Seed for shadowing, if the scenario enables it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct CalibrateArgs {
    /// Knee distance in metres.
    #[arg(long)]
    knee: f64,
    /// Carrier frequency of the link.
    #[arg(long)]
    frequency_hz: f64,
    /// Transmit EIRP.
    #[arg(long)]
    eirp_dbm: f64,
    /// Net receive gain, including pattern losses.
    #[arg(long, default_value_t = 0.0)]
    rx_gain_db: f64,
    /// SNIR at which throughput saturates.
    #[arg(long, conflicts_with = "thr_max_bps")]
    snir_max_db: Option<f64>,
    /// Throughput cap; snir_max is derived from it.
    #[arg(long)]
    thr_max_bps: Option<f64>,
    /// Shannon attenuation factor used with --thr-max-bps.
    #[arg(long, default_value_t = crate::throughput::DEFAULT_ALPHA)]
    alpha: f64,
    /// Channel bandwidth used with --thr-max-bps.
    #[arg(long, default_value_t = 20e6)]
    bandwidth_hz: f64,
}

#[derive(Debug, Args)]
struct PlanArgs {
    /// CSV with columns cell_id,bandwidth_hz,azimuth_deg.
    #[arg(long)]
    cells: PathBuf,
    /// Lower edge of the donor-link band.
    #[arg(long, default_value_t = 38e9)]
    band_lo_hz: f64,
    /// Upper edge of the donor-link band.
    #[arg(long, default_value_t = 40e9)]
    band_hi_hz: f64,
    /// Guard band between neighbouring slots.
    #[arg(long, default_value_t = 0.0)]
    guard_hz: f64,
    /// Minimum azimuth separation for two cells to share a slot.
    #[arg(long)]
    min_sep_deg: Option<f64>,
    /// Donor beamwidth; sets --min-sep-deg to 1.5 beamwidths when that is absent.
    #[arg(long, default_value_t = 10.0)]
    beamwidth_deg: f64,
    /// Output CSV; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BeamsArgs {
    /// Scenario file, or the name of a bundled preset.
    #[arg(long)]
    scenario: String,
    /// Output CSV for the controller event log.
    #[arg(long)]
    trace: PathBuf,
    /// Along-track service node position; defaults to the first fixed node
    /// or the start of the sweep.
    #[arg(long)]
    node: Option<f64>,
    /// Simulated time span.
    #[arg(long, default_value_t = 30.0)]
    duration_s: f64,
    /// Seed for RSSI measurement noise.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Deserialize)]
struct CellRow {
    cell_id: String,
    bandwidth_hz: f64,
    azimuth_deg: f64,
}

/// Failure reported by a subcommand, with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_CONFIG, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_FAILURE, message: format!("{}: {e}", path.display()) }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let out = match cli.command {
        Command::Run(a) => cmd_run(a, argv),
        Command::Calibrate(a) => cmd_calibrate(a),
        Command::Plan(a) => cmd_plan(a, argv),
        Command::Beams(a) => cmd_beams(a, argv),
    };
    match out {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("mmwb: {}", f.message);
            f.code
        }
    }
}

/// Scenario text: the path as given, then with `.toml` appended, then a
/// bundled preset named by the file stem.
fn load_scenario_text(spec: &str) -> Result<String, Failure> {
    let p = Path::new(spec);
    if p.is_file() {
        return fs::read_to_string(p).map_err(|e| io_failure(p, e));
    }
    let with_ext = PathBuf::from(format!("{spec}.toml"));
    if with_ext.is_file() {
        return fs::read_to_string(&with_ext).map_err(|e| io_failure(&with_ext, e));
    }
    let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
    presets::get(stem)
        .map(str::to_string)
        .ok_or_else(|| Failure { code: EXIT_CONFIG, message: format!("scenario {spec:?} not found") })
}

fn write_with_manifest(out: &Path, body: &str, manifest: &RunManifest) -> Result<(), Failure> {
    fs::write(out, body).map_err(|e| io_failure(out, e))?;
    let mpath = RunManifest::path_for(out);
    fs::write(&mpath, manifest.to_text()).map_err(|e| io_failure(&mpath, e))
}

fn cmd_run(a: RunArgs, argv: Vec<String>) -> Result<(), Failure> {
    let text = load_scenario_text(&a.scenario)?;
    let s = Scenario::from_toml_str(&text)?;
    let range = match &a.sweep {
        Some(r) => r.parse::<SweepRange>()?,
        None => s.sweep,
    };
    let records = run_sweep(&s, range, a.seed)?;
    let manifest = RunManifest::new(&text, argv, a.seed, vec![a.out.display().to_string()]);
    write_with_manifest(&a.out, &SweepRecord::to_csv(&records), &manifest)?;
    eprintln!("{}: {} rows written to {}", s.name, records.len(), a.out.display());
    Ok(())
}

fn cmd_calibrate(a: CalibrateArgs) -> Result<(), Failure> {
    let snir_max = match (a.snir_max_db, a.thr_max_bps) {
        (Some(v), _) => GainDb::new(v),
        (None, Some(thr)) => snir_max_from_thr_max(thr, a.alpha, BandwidthHz::new(a.bandwidth_hz)?)?,
        (None, None) => {
            return Err(Failure { code: EXIT_CONFIG, message: "give --snir-max-db or --thr-max-bps".into() })
        }
    };
    let floor = crate::scenario::calibrate_noise_floor(
        DistanceM::new(a.knee)?,
        FrequencyHz::new(a.frequency_hz)?,
        PowerDbm::new(a.eirp_dbm),
        GainDb::new(a.rx_gain_db),
        snir_max,
    )?;
    println!("snir_max_db = {:.3}", snir_max.value());
    println!("noise_floor_dbm = {:.3}", floor.value());
    Ok(())
}

fn read_cells(path: &Path) -> Result<(String, Vec<CellRequest>), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure { code: EXIT_CONFIG, message: format!("{}: {e}", path.display()) })?;
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut cells = Vec::new();
    for row in reader.deserialize::<CellRow>() {
        let row = row.map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        cells.push(CellRequest::new(row.cell_id, BandwidthHz::new(row.bandwidth_hz)?, row.azimuth_deg)?);
    }
    Ok((text, cells))
}

fn cmd_plan(a: PlanArgs, argv: Vec<String>) -> Result<(), Failure> {
    let (text, cells) = read_cells(&a.cells)?;
    let band = Passband::from_hz(a.band_lo_hz, a.band_hi_hz)?;
    let min_sep = a.min_sep_deg.unwrap_or_else(|| default_min_separation(a.beamwidth_deg));
    match allocate(&cells, &band, a.guard_hz, min_sep)? {
        Allocation::Feasible(plan) => {
            let body = plan.to_csv();
            match &a.out {
                Some(out) => {
                    let manifest = RunManifest::new(&text, argv, 0, vec![out.display().to_string()]);
                    write_with_manifest(out, &body, &manifest)?;
                }
                None => print!("{body}"),
            }
            eprintln!("{} cells in {} slots", cells.len(), plan.slots_used());
            Ok(())
        }
        Allocation::Infeasible { slots_needed, capacity } => Err(Failure {
            code: EXIT_INFEASIBLE,
            message: format!("plan needs {slots_needed} slots but the band holds {capacity}"),
        }),
    }
}

fn cmd_beams(a: BeamsArgs, argv: Vec<String>) -> Result<(), Failure> {
    let text = load_scenario_text(&a.scenario)?;
    let s = Scenario::from_toml_str(&text)?;
    let along = a
        .node
        .or_else(|| s.service.fixed_positions_m.first().copied())
        .unwrap_or(s.sweep.start.value());
    let node = s.node_placement(along)?;
    let rssi = s.pilot_rssi(&node)?;
    let ids = s.donor.beams.beams().iter().map(|b| b.id).collect();
    let ctl = run_trace(ids, &rssi, s.beam_control, a.duration_s, s.rssi_noise_sigma_db, a.seed)?;
    let manifest = RunManifest::new(&text, argv, a.seed, vec![a.trace.display().to_string()]);
    write_with_manifest(&a.trace, &LogEntry::to_csv(ctl.log()), &manifest)?;
    eprintln!("{} log entries, {} interruptions", ctl.log().len(), ctl.interruptions().len());
    Ok(())
}
