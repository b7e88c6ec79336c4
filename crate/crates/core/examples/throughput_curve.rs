//! SNIR to throughput mapping for the two cell types.

use mmwb::throughput::{throughput, ThroughputParams, COMMERCIAL_CELL_THR_MAX_BPS, COMPACT_CELL_THR_MAX_BPS};
use mmwb::units::{BandwidthHz, GainDb};

fn main() -> mmwb::Result<()> {
    let bw = BandwidthHz::mhz(20.0)?;
    let commercial = ThroughputParams::with_defaults(COMMERCIAL_CELL_THR_MAX_BPS, bw)?;
    let compact = ThroughputParams::with_defaults(COMPACT_CELL_THR_MAX_BPS, bw)?;
    println!("snir_max: commercial {}, compact {}", commercial.snir_max(), compact.snir_max());
    println!("{:>8} {:>12} {:>12}", "SNIR dB", "98 Mb/s cap", "75 Mb/s cap");
    for snir in (-12..=30).step_by(3) {
        let s = GainDb::new(f64::from(snir));
        println!("{snir:>8} {:>12.2} {:>12.2}", throughput(s, &commercial) / 1e6, throughput(s, &compact) / 1e6);
    }
    Ok(())
}
