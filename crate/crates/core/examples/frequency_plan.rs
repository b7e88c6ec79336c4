//! Up-conversion of the sub-6 GHz carrier into the 38-40 GHz band.

use mmwb::rf_chain::{plan_frequency, residual_cfo, LoSpec, Sideband};
use mmwb::units::{FrequencyHz, Passband};

fn main() -> mmwb::Result<()> {
    let band = Passband::from_hz(38e9, 40e9)?;
    let carrier = FrequencyHz::ghz(2.6)?;

    let lo = LoSpec::disciplined(FrequencyHz::ghz(36.4)?);
    let rf = plan_frequency(carrier, &lo, Sideband::Upper, &band)?;
    println!("{carrier} + LO {} -> {rf}", lo.nominal);

    // a 37.5 GHz LO puts the wanted product above the band
    let off = LoSpec::disciplined(FrequencyHz::ghz(37.5)?);
    match plan_frequency(carrier, &off, Sideband::Upper, &band) {
        Ok(f) => println!("unexpected plan {f}"),
        Err(e) => println!("LO 37.5 GHz rejected: {e}"),
    }

    let free_up = LoSpec::new(FrequencyHz::ghz(36.4)?, 0.5, false)?;
    let free_down = LoSpec::new(FrequencyHz::ghz(36.4)?, -0.5, false)?;
    println!("free-running LOs at +-0.5 ppm: residual CFO {:.1} Hz", residual_cfo(&free_up, &free_down));
    println!("disciplined LOs: residual CFO {:.1} Hz", residual_cfo(&lo, &lo));
    Ok(())
}
