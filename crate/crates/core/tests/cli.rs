use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mmwb(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mmwb")).args(args).current_dir(cwd).output().expect("spawn mmwb")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

#[test]
fn help_exits_zero_and_lists_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let o = mmwb(&["--help"], dir.path());
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    for sub in ["run", "calibrate", "plan", "beams"] {
        assert!(text.contains(sub), "{sub} missing from help");
    }
    let o = mmwb(&["run", "--help"], dir.path());
    let text = String::from_utf8_lossy(&o.stdout);
    for flag in ["--scenario", "--sweep", "--out", "--seed"] {
        assert!(text.contains(flag), "{flag} missing from run help");
    }
}

#[test]
fn run_writes_csv_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = mmwb(&["run", "--scenario", "presets/rural_track", "--sweep", "50:3000:5", "--out", "out.csv"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(dir.path().join("out.csv")).unwrap();
    assert_eq!(csv.lines().count(), 592);
    assert!(csv.starts_with("distance_m,snr_bridge_db,"));
    let manifest = fs::read_to_string(dir.path().join("out.csv.manifest")).unwrap();
    assert!(manifest.contains("seed = 0\n"));
    assert!(manifest.contains("outputs = out.csv\n"));
    assert!(manifest.lines().any(|l| l.starts_with("scenario_sha256 = ") && l.len() == "scenario_sha256 = ".len() + 64));
}

#[test]
fn scenario_file_with_implicit_extension() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("lab.toml"), mmwb::scenario::presets::get("lab_faraday").unwrap()).unwrap();
    let o = mmwb(&["run", "--scenario", "lab", "--out", "lab.csv"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_to_string(dir.path().join("lab.csv")).unwrap().lines().count(), 11);
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&mmwb(&["run", "--scenario", "missing"], dir.path())), 2);
    assert_eq!(code(&mmwb(&["run", "--scenario", "missing", "--out", "x.csv"], dir.path())), 2);
    assert_eq!(code(&mmwb(&["teleport"], dir.path())), 2);

    fs::write(dir.path().join("bad.toml"), "name = \"x\"\nunknown_section = 1\n").unwrap();
    let o = mmwb(&["run", "--scenario", "bad.toml", "--out", "x.csv"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    assert!(!dir.path().join("x.csv").exists());
}

#[test]
fn calibrate_prints_noise_floor() {
    let dir = tempfile::tempdir().unwrap();
    let o = mmwb(
        &["calibrate", "--knee", "1100", "--frequency-hz", "2.6e9", "--eirp-dbm", "30", "--thr-max-bps", "75e6"],
        dir.path(),
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("snir_max_db = 18.757"), "{text}");
    assert!(text.contains("noise_floor_dbm = "));
    assert_eq!(code(&mmwb(&["calibrate", "--knee", "800", "--frequency-hz", "39e9", "--eirp-dbm", "30"], dir.path())), 2);
}

#[test]
fn plan_feasible_and_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("cells.csv"), "cell_id,bandwidth_hz,azimuth_deg\na,20e6,0\nb,20e6,5\nc,20e6,90\n").unwrap();
    let o = mmwb(&["plan", "--cells", "cells.csv", "--min-sep-deg", "15", "--out", "plan.csv"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let plan = fs::read_to_string(dir.path().join("plan.csv")).unwrap();
    assert_eq!(
        plan,
        "cell_id,slot_index,center_hz,azimuth_deg\na,0,38010000000.000,0.000\nb,1,38030000000.000,5.000\nc,0,38010000000.000,90.000\n"
    );
    assert!(dir.path().join("plan.csv.manifest").exists());

    let o = mmwb(&["plan", "--cells", "cells.csv", "--band-hi-hz", "38.03e9"], dir.path());
    assert_eq!(code(&o), 3);

    fs::write(dir.path().join("dup.csv"), "cell_id,bandwidth_hz,azimuth_deg\na,20e6,0\na,20e6,90\n").unwrap();
    assert_eq!(code(&mmwb(&["plan", "--cells", "dup.csv"], dir.path())), 2);
}

#[test]
fn beams_trace_layout() {
    let dir = tempfile::tempdir().unwrap();
    let o = mmwb(&["beams", "--scenario", "rural_track", "--trace", "t.csv", "--node", "400", "--duration-s", "15"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let trace = fs::read_to_string(dir.path().join("t.csv")).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next(), Some("timestamp_s,phase,beam_id,rssi_dbm"));
    assert_eq!(lines.next(), Some("0.000,await_pilot,,"));
    assert!(trace.lines().any(|l| l.contains(",selected,")));
    assert!(trace.lines().all(|l| l.split(',').count() == 4));
}
