//! Two-hop amplify-and-forward budget next to a direct link.

use mmwb::link_budget::{evaluate, BudgetParams, Hop};
use mmwb::propagation::fspl;
use mmwb::units::{BandwidthHz, DistanceM, FrequencyHz, GainDb, PowerDbm, thermal_noise_floor};

fn main() -> mmwb::Result<()> {
    let bw = BandwidthHz::mhz(20.0)?;
    let d = DistanceM::new(600.0)?;

    let donor_loss = fspl(d, FrequencyHz::ghz(39.0)?)?;
    let donor = Hop::new(PowerDbm::new(30.0), GainDb::new(20.0) - donor_loss, thermal_noise_floor(bw, GainDb::new(7.0))?)?;
    let access = Hop::cabled(PowerDbm::new(-14.0))?;
    let bridge = evaluate(&[donor, access], &BudgetParams::default())?;

    let direct_loss = fspl(d, FrequencyHz::ghz(2.6)?)?;
    let direct = Hop::new(PowerDbm::new(30.0), -direct_loss, thermal_noise_floor(bw, GainDb::new(7.0))?)?;
    let direct = evaluate(&[direct], &BudgetParams::default())?;

    println!("FSPL at {d}: 39 GHz {donor_loss}, 2.6 GHz {direct_loss}");
    for (name, r) in [("bridge", &bridge), ("direct", &direct)] {
        println!(
            "{name}: SNR {} (reported {}), RSRP {}, EVM {:.2} %",
            r.e2e_snr, r.reported_snr, r.rsrp, r.evm_percent
        );
    }
    Ok(())
}
