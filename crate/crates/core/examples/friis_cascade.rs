//! Gain and noise figure of a few receive chains.

use mmwb::rf_chain::{cascade, Direction, RfChain, Stage};
use mmwb::units::GainDb;

fn show(label: &str, stages: Vec<Stage>) -> mmwb::Result<()> {
    let c = cascade(&RfChain::new(stages, Direction::Downlink)?)?;
    println!("{label:<24} gain {:>8}  NF {}", c.gain, c.noise_figure);
    Ok(())
}

fn main() -> mmwb::Result<()> {
    let lna = || Stage::amplifier(GainDb::new(20.0), GainDb::new(3.0));
    let gain10 = || Stage::amplifier(GainDb::new(10.0), GainDb::new(10.0));

    show("LNA then 10 dB stage", vec![lna()?, gain10()?])?;
    show("10 dB stage then LNA", vec![gain10()?, lna()?])?;
    show("cable in front of LNA", vec![Stage::cable(2.0)?, lna()?, gain10()?])?;
    show("switch, LNA, cable", vec![Stage::switch(1.0)?, lna()?, Stage::cable(2.0)?])?;
    Ok(())
}
