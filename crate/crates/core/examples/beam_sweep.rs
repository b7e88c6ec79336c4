//! Donor beam sweep against a service node 500 m down the track.

use mmwb::beam_control::{run_trace, scan_duration, LogEntry};
use mmwb::scenario::Scenario;

fn main() -> mmwb::Result<()> {
    let s = Scenario::preset("rural_track")?;
    let node = s.node_placement(500.0)?;
    let rssi = s.pilot_rssi(&node)?;
    let ids: Vec<_> = s.donor.beams.beams().iter().map(|b| b.id).collect();
    println!(
        "{} beams, scan {:.0} ms of a {:.0} ms budget",
        ids.len(),
        scan_duration(ids.len(), &s.beam_control)? * 1e3,
        s.beam_control.reestablish_budget_s * 1e3
    );

    let ctl = run_trace(ids, &rssi, s.beam_control, 25.0, 1.0, 7)?;
    println!("final phase {:?}, interruptions {:?}", ctl.state().phase, ctl.interruptions());
    let csv = LogEntry::to_csv(ctl.log());
    for line in csv.lines().take(6) {
        println!("{line}");
    }
    println!("... {} log entries", ctl.log().len());
    Ok(())
}
