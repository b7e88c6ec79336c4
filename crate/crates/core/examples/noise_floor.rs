//! Thermal noise floors and dB arithmetic.

use mmwb::units::{db_to_linear, thermal_noise_floor, BandwidthHz, GainDb, PowerDbm};

fn main() -> mmwb::Result<()> {
    let bw = BandwidthHz::mhz(20.0)?;
    for nf in [0.0, 3.0, 7.0, 10.0] {
        let floor = thermal_noise_floor(bw, GainDb::new(nf))?;
        println!("NF {nf:>4.1} dB -> floor {floor}");
    }

    // adding dB is multiplying linear ratios
    let a = GainDb::new(3.0);
    let b = GainDb::new(10.0);
    println!("{} + {} = {} (x{:.3})", a, b, a + b, db_to_linear(a + b)?);
    println!("30 dBm - 12 dB = {}", PowerDbm::new(30.0) - GainDb::new(12.0));
    Ok(())
}
