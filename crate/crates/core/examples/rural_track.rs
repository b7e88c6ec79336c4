//! Bridge and direct coverage along a rural track.

use mmwb::scenario::{knee_distance, run_sweep, Scenario, SweepColumn};

fn main() -> mmwb::Result<()> {
    let s = Scenario::preset("rural_track")?;
    println!(
        "noise floors: donor {}, direct {}; downlink on {}",
        s.noise.donor_link, s.noise.direct_link, s.mmwave.downlink_rf
    );
    let records = run_sweep(&s, s.sweep, 0)?;
    let thr_max = s.throughput.thr_max();
    println!("bridge holds {:.0} Mb/s up to {:?} m", thr_max / 1e6, knee_distance(&records, SweepColumn::Bridge, thr_max));
    println!("direct holds {:.0} Mb/s up to {:?} m", thr_max / 1e6, knee_distance(&records, SweepColumn::Direct, thr_max));
    for r in records.iter().filter(|r| (r.distance_m as u64) % 500 == 0) {
        println!(
            "{:>6.0} m  bridge {:>6.2} dB {:>6.2} Mb/s   direct {:>6.2} dB {:>6.2} Mb/s",
            r.distance_m,
            r.snr_bridge_db,
            r.thr_bridge_bps / 1e6,
            r.snr_direct_db,
            r.thr_direct_bps / 1e6
        );
    }
    Ok(())
}
