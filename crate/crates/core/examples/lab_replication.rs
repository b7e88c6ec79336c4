//! Short cabled-style lab link near 34.5 dB SNR.

use mmwb::scenario::Scenario;
use mmwb::throughput::throughput;

fn main() -> mmwb::Result<()> {
    let s = Scenario::preset("lab_faraday")?;
    for d in [5.0, 10.0, 20.0, 40.0] {
        let b = s.bridge_budget(d)?;
        println!(
            "{d:>4} m: SNR {} reported {} EVM {:.2} % throughput {:.1} Mb/s",
            b.e2e_snr,
            b.reported_snr,
            b.evm_percent,
            throughput(b.e2e_snr, &s.throughput) / 1e6
        );
    }
    Ok(())
}
