//! Indoor UE served through the wall, bridged versus direct.

use mmwb::scenario::{fwa_power_check, Scenario};

fn main() -> mmwb::Result<()> {
    let s = Scenario::preset("fwa_building")?;
    println!("entry loss {}, direct EIRP needed for parity: {}", s.ue.entry_loss, fwa_power_check(&s));
    let mut boosted = s.clone();
    boosted.direct.eirp = fwa_power_check(&s);
    for d in [100.0, 400.0, 800.0] {
        println!(
            "{d:>4} m: bridge {}  direct {}  direct boosted {}",
            s.bridge_budget(d)?.e2e_snr,
            s.direct_budget(d)?.e2e_snr,
            boosted.direct_budget(d)?.e2e_snr
        );
    }
    Ok(())
}
