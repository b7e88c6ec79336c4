//! Fixed service nodes along a rail corridor.

use mmwb::scenario::{corridor_coverage, Scenario};

fn main() -> mmwb::Result<()> {
    let s = Scenario::preset("train_corridor")?;
    println!("nodes at {:?} m", s.service.fixed_positions_m);
    for c in corridor_coverage(&s, 5.0)? {
        println!(
            "node {:>5.0} m: donor hop {:>6.1} m at {:.2} dB, worst end-to-end {:.2} dB",
            c.node_along_m, c.donor_distance_m, c.donor_hop_snr_db, c.min_e2e_snr_db
        );
    }
    Ok(())
}
