//! Analog conversion chain of a bridge node.
//!
//! A chain is an ordered list of stages. [`cascade`] folds it into a single
//! gain and noise figure with the Friis formula, [`RfChain::trace_frequency`]
//! follows a carrier through every mixer and filter, and [`plan_frequency`]
//! checks a single up-conversion against the mmWave bandpass.

use serde::Deserialize;

use crate::error::{ensure_finite, Error, Result};
use crate::units::{db_to_linear, linear_to_db, FrequencyHz, GainDb, Passband};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sideband {
    /// Sum product `lo + f`.
    Upper,
    /// Difference product `|lo - f|`.
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Uplink,
    Downlink,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StageKind {
    Amplifier,
    Mixer { lo_frequency: FrequencyHz, sideband: Sideband },
    Filter { passband: Passband },
    Diplexer { passband: Passband },
    Switch,
    Cable,
}

impl StageKind {
    fn is_passive(&self) -> bool {
        matches!(
            self,
            StageKind::Filter { .. } | StageKind::Diplexer { .. } | StageKind::Switch | StageKind::Cable
        )
    }

    fn passband(&self) -> Option<&Passband> {
        match self {
            StageKind::Filter { passband } | StageKind::Diplexer { passband } => Some(passband),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub kind: StageKind,
    pub gain: GainDb,
    pub noise_figure: GainDb,
}

impl Stage {
    pub fn amplifier(gain: GainDb, noise_figure: GainDb) -> Result<Self> {
        Self::checked(StageKind::Amplifier, gain, noise_figure)
    }

    pub fn mixer(gain: GainDb, noise_figure: GainDb, lo_frequency: FrequencyHz, sideband: Sideband) -> Result<Self> {
        Self::checked(StageKind::Mixer { lo_frequency, sideband }, gain, noise_figure)
    }

    /// Passive stages take their insertion loss (positive dB) and get `NF = loss`.
    pub fn filter(passband: Passband, loss_db: f64) -> Result<Self> {
        Self::passive(StageKind::Filter { passband }, loss_db)
    }

    pub fn diplexer(passband: Passband, loss_db: f64) -> Result<Self> {
        Self::passive(StageKind::Diplexer { passband }, loss_db)
    }

    pub fn switch(loss_db: f64) -> Result<Self> {
        Self::passive(StageKind::Switch, loss_db)
    }

    pub fn cable(loss_db: f64) -> Result<Self> {
        Self::passive(StageKind::Cable, loss_db)
    }

    fn passive(kind: StageKind, loss_db: f64) -> Result<Self> {
        Self::checked(kind, GainDb::new(-loss_db), GainDb::new(loss_db))
    }

    fn checked(kind: StageKind, gain: GainDb, noise_figure: GainDb) -> Result<Self> {
        let stage = Self { kind, gain, noise_figure };
        stage.validate()?;
        Ok(stage)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_finite("stage gain", self.gain.value())?;
        ensure_finite("stage noise figure", self.noise_figure.value())?;
        if self.noise_figure.value() < 0.0 {
            return Err(Error::InvalidStage(format!(
                "negative noise figure {}",
                self.noise_figure
            )));
        }
        if self.kind.is_passive() {
            if self.gain.value() > 0.0 {
                return Err(Error::InvalidStage(format!("passive stage with gain {}", self.gain)));
            }
            if self.noise_figure.value() != -self.gain.value() {
                return Err(Error::InvalidStage(
                    "passive stage noise figure must equal its insertion loss".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RfChain {
    pub stages: Vec<Stage>,
    pub direction: Direction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cascade {
    pub gain: GainDb,
    pub noise_figure: GainDb,
}

/// Friis cascade: `F = F1 + sum_k (F_k - 1) / (G_1 ... G_{k-1})`.
pub fn cascade(chain: &RfChain) -> Result<Cascade> {
    if chain.stages.is_empty() {
        return Err(Error::EmptyChain);
    }
    let mut gain_db = 0.0;
    let mut gain_lin = 1.0;
    let mut factor = 0.0;
    for (k, stage) in chain.stages.iter().enumerate() {
        stage.validate()?;
        let f = db_to_linear(stage.noise_figure)?;
        factor += if k == 0 { f } else { (f - 1.0) / gain_lin };
        gain_db += stage.gain.value();
        gain_lin *= db_to_linear(stage.gain)?;
    }
    Ok(Cascade { gain: GainDb::new(gain_db), noise_figure: linear_to_db(factor)? })
}

impl RfChain {
    pub fn new(stages: Vec<Stage>, direction: Direction) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::EmptyChain);
        }
        for s in &stages {
            s.validate()?;
        }
        Ok(Self { stages, direction })
    }

    /// Follow a carrier through the chain. Every filter it meets must
    /// contain it and must reject the image produced by the preceding mixer.
    pub fn trace_frequency(&self, input: FrequencyHz) -> Result<FrequencyHz> {
        let mut f = input.value();
        let mut image: Option<f64> = None;
        for stage in &self.stages {
            match &stage.kind {
                StageKind::Mixer { lo_frequency, sideband } => {
                    let lo = lo_frequency.value();
                    let sum = lo + f;
                    let diff = (lo - f).abs();
                    let (wanted, other) = match sideband {
                        Sideband::Upper => (sum, diff),
                        Sideband::Lower => (diff, sum),
                    };
                    f = wanted;
                    image = Some(other);
                }
                kind => {
                    if let Some(pb) = kind.passband() {
                        if !pb.contains(f) {
                            return Err(Error::OutOfPassband { frequency_hz: f });
                        }
                        if let Some(img) = image.take() {
                            if pb.contains(img) {
                                return Err(Error::ImageNotRejected { image_hz: img });
                            }
                        }
                    }
                }
            }
        }
        FrequencyHz::new(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoSpec {
    pub nominal: FrequencyHz,
    pub ppm_error: f64,
    pub disciplined: bool,
}

impl LoSpec {
    pub fn new(nominal: FrequencyHz, ppm_error: f64, disciplined: bool) -> Result<Self> {
        ensure_finite("ppm error", ppm_error)?;
        if ppm_error.abs() > 100.0 {
            return Err(Error::OutOfRange { what: "ppm error", value: ppm_error });
        }
        Ok(Self { nominal, ppm_error, disciplined })
    }

    pub fn disciplined(nominal: FrequencyHz) -> Self {
        Self { nominal, ppm_error: 0.0, disciplined: true }
    }

    pub fn effective_ppm(&self) -> f64 {
        if self.disciplined {
            0.0
        } else {
            self.ppm_error
        }
    }
}

/// Single up-conversion of `f_if` with `lo`, checked against `passband`.
pub fn plan_frequency(f_if: FrequencyHz, lo: &LoSpec, sideband: Sideband, passband: &Passband) -> Result<FrequencyHz> {
    let lo_hz = lo.nominal.value();
    let if_hz = f_if.value();
    if if_hz >= lo_hz {
        return Err(Error::OutOfRange { what: "IF frequency above LO", value: if_hz });
    }
    let (selected, image) = match sideband {
        Sideband::Upper => (lo_hz + if_hz, lo_hz - if_hz),
        Sideband::Lower => (lo_hz - if_hz, lo_hz + if_hz),
    };
    if !passband.contains(selected) {
        return Err(Error::OutOfPassband { frequency_hz: selected });
    }
    if passband.contains(image) {
        return Err(Error::ImageNotRejected { image_hz: image });
    }
    FrequencyHz::new(selected)
}

/// Signed offset on the recovered sub-6 GHz carrier, in Hz.
pub fn residual_cfo(up_lo: &LoSpec, down_lo: &LoSpec) -> f64 {
    up_lo.nominal.value() * up_lo.effective_ppm() * 1e-6
        - down_lo.nominal.value() * down_lo.effective_ppm() * 1e-6
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DuplexMode {
    Fdd,
    Tdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MmwaveAntennas {
    SeparateDlUl,
    Shared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separator {
    Duplexer,
    RfSwitch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub struct DuplexConfig {
    pub mode: DuplexMode,
    pub mmwave_antennas: MmwaveAntennas,
    pub separator: Separator,
}

pub fn validate_duplex(cfg: &DuplexConfig) -> Result<()> {
    match cfg.mode {
        DuplexMode::Fdd => {
            if cfg.separator != Separator::Duplexer {
                return Err(Error::InvalidDuplexConfig(
                    "FDD separates TX and RX paths with duplexers".into(),
                ));
            }
            if cfg.mmwave_antennas != MmwaveAntennas::SeparateDlUl {
                return Err(Error::InvalidDuplexConfig(
                    "FDD requires separate mmWave antennas for DL and UL".into(),
                ));
            }
        }
        DuplexMode::Tdd => {
            if cfg.separator != Separator::RfSwitch {
                return Err(Error::InvalidDuplexConfig(
                    "TDD switches between TX and RX with RF switches".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Named building blocks for chain layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StageName {
    Lna,
    Pa,
    Mixer,
    MmwaveFilter,
    IfFilter,
    Diplexer,
    Switch,
    Cable,
}

/// Catalog values used when a chain is built from stage names.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(default)]
pub struct StageLibrary {
    pub lna_gain_db: f64,
    pub lna_noise_figure_db: f64,
    pub pa_gain_db: f64,
    pub pa_noise_figure_db: f64,
    pub mixer_gain_db: f64,
    pub mixer_noise_figure_db: f64,
    pub filter_loss_db: f64,
    pub diplexer_loss_db: f64,
    pub switch_loss_db: f64,
    pub cable_loss_db: f64,
}

impl Default for StageLibrary {
    fn default() -> Self {
        Self {
            lna_gain_db: 20.0,
            lna_noise_figure_db: 3.0,
            pa_gain_db: 30.0,
            pa_noise_figure_db: 7.0,
            mixer_gain_db: -7.0,
            mixer_noise_figure_db: 7.0,
            filter_loss_db: 1.5,
            diplexer_loss_db: 1.5,
            switch_loss_db: 1.0,
            cable_loss_db: 2.0,
        }
    }
}

/// Frequencies a named layout is resolved against.
#[derive(Debug, Clone, Copy)]
pub struct ChainContext {
    pub mmwave_band: Passband,
    pub if_band: Passband,
    pub lo: FrequencyHz,
    pub sideband: Sideband,
}

impl StageLibrary {
    pub fn stage(&self, name: StageName, ctx: &ChainContext) -> Result<Stage> {
        match name {
            StageName::Lna => Stage::amplifier(GainDb::new(self.lna_gain_db), GainDb::new(self.lna_noise_figure_db)),
            StageName::Pa => Stage::amplifier(GainDb::new(self.pa_gain_db), GainDb::new(self.pa_noise_figure_db)),
            StageName::Mixer => Stage::mixer(
                GainDb::new(self.mixer_gain_db),
                GainDb::new(self.mixer_noise_figure_db),
                ctx.lo,
                ctx.sideband,
            ),
            StageName::MmwaveFilter => Stage::filter(ctx.mmwave_band, self.filter_loss_db),
            StageName::IfFilter => Stage::filter(ctx.if_band, self.filter_loss_db),
            StageName::Diplexer => Stage::diplexer(ctx.if_band, self.diplexer_loss_db),
            StageName::Switch => Stage::switch(self.switch_loss_db),
            StageName::Cable => Stage::cable(self.cable_loss_db),
        }
    }

    pub fn build(&self, layout: &[StageName], direction: Direction, ctx: &ChainContext) -> Result<RfChain> {
        let stages = layout.iter().map(|n| self.stage(*n, ctx)).collect::<Result<Vec<_>>>()?;
        RfChain::new(stages, direction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn amp(g: f64, nf: f64) -> Stage {
        Stage::amplifier(GainDb::new(g), GainDb::new(nf)).unwrap()
    }

    fn chain(stages: Vec<Stage>) -> RfChain {
        RfChain::new(stages, Direction::Downlink).unwrap()
    }

    /// Linear-domain Friis evaluation written out term by term.
    fn friis_oracle(stages: &[(f64, f64)]) -> f64 {
        let mut f_total = 0.0;
        let mut g_prod = 1.0;
        for (i, (g, nf)) in stages.iter().enumerate() {
            let f = 10f64.powf(nf / 10.0);
            if i == 0 {
                f_total = f;
            } else {
                f_total += (f - 1.0) / g_prod;
            }
            g_prod *= 10f64.powf(g / 10.0);
        }
        10.0 * f_total.log10()
    }

    #[test]
    fn single_stage_identity() {
        let c = cascade(&chain(vec![amp(20.0, 3.0)])).unwrap();
        assert_eq!(c.gain.value(), 20.0);
        assert!((c.noise_figure.value() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn lna_then_mixer() {
        let c = cascade(&chain(vec![amp(20.0, 3.0), amp(-7.0, 7.0)])).unwrap();
        assert!((c.gain.value() - 13.0).abs() < 1e-12);
        assert!((c.noise_figure.value() - 3.086).abs() < 0.005);
        assert!((c.noise_figure.value() - friis_oracle(&[(20.0, 3.0), (-7.0, 7.0)])).abs() < 1e-12);
    }

    #[test]
    fn mixer_then_lna_is_worse() {
        let c = cascade(&chain(vec![amp(-7.0, 7.0), amp(20.0, 3.0)])).unwrap();
        assert!((c.gain.value() - 13.0).abs() < 1e-12);
        // F = 10^0.7 + (10^0.3 - 1) * 10^0.7 = 10.0 in linear terms
        assert!((c.noise_figure.value() - 10.0).abs() < 0.01);
    }

    #[test]
    fn empty_chain_rejected() {
        assert_eq!(RfChain::new(vec![], Direction::Uplink), Err(Error::EmptyChain));
        let bad = RfChain { stages: vec![], direction: Direction::Uplink };
        assert_eq!(cascade(&bad), Err(Error::EmptyChain));
    }

    #[test]
    fn non_finite_stage_rejected() {
        assert!(Stage::amplifier(GainDb::new(f64::NAN), GainDb::new(1.0)).is_err());
        let raw = RfChain {
            stages: vec![Stage { kind: StageKind::Amplifier, gain: GainDb::new(10.0), noise_figure: GainDb::new(f64::INFINITY) }],
            direction: Direction::Uplink,
        };
        assert!(cascade(&raw).is_err());
    }

    #[test]
    fn passive_stage_invariants() {
        let s = Stage::cable(2.0).unwrap();
        assert_eq!(s.gain.value(), -2.0);
        assert_eq!(s.noise_figure.value(), 2.0);
        assert!(Stage::switch(-1.0).is_err());
        let lossy_nf = Stage { kind: StageKind::Cable, gain: GainDb::new(-2.0), noise_figure: GainDb::new(1.0) };
        assert!(lossy_nf.validate().is_err());
    }

    #[test]
    fn high_gain_front_end_dominates() {
        let front = cascade(&chain(vec![amp(60.0, 2.0)])).unwrap();
        let both = cascade(&chain(vec![amp(60.0, 2.0), amp(-7.0, 10.0)])).unwrap();
        assert!(both.noise_figure.value() >= front.noise_figure.value());
        assert!(both.noise_figure.value() - front.noise_figure.value() < 0.01);
    }

    fn band() -> Passband {
        Passband::from_hz(38e9, 40e9).unwrap()
    }

    fn lo(ghz: f64) -> LoSpec {
        LoSpec::disciplined(FrequencyHz::ghz(ghz).unwrap())
    }

    #[test]
    fn plan_upper_sideband() {
        let f = plan_frequency(FrequencyHz::new(2.6e9).unwrap(), &lo(36.4), Sideband::Upper, &band()).unwrap();
        assert_eq!(f.value(), 39.0e9);
    }

    #[test]
    fn plan_out_of_passband() {
        let r = plan_frequency(FrequencyHz::new(2.6e9).unwrap(), &lo(37.5), Sideband::Upper, &band());
        assert!(matches!(r, Err(Error::OutOfPassband { .. })));
    }

    #[test]
    fn plan_image_on_edge_not_rejected() {
        let r = plan_frequency(FrequencyHz::new(1.0e9).unwrap(), &lo(39.0), Sideband::Upper, &band());
        assert_eq!(r, Err(Error::ImageNotRejected { image_hz: 38.0e9 }));
    }

    #[test]
    fn plan_requires_if_below_lo() {
        assert!(plan_frequency(FrequencyHz::ghz(40.0).unwrap(), &lo(36.4), Sideband::Upper, &band()).is_err());
    }

    #[test]
    fn lo_ppm_bound() {
        assert!(LoSpec::new(FrequencyHz::ghz(36.4).unwrap(), 100.0, false).is_ok());
        assert!(LoSpec::new(FrequencyHz::ghz(36.4).unwrap(), -100.5, false).is_err());
    }

    #[test]
    fn cfo_examples() {
        let n = FrequencyHz::ghz(36.4).unwrap();
        assert_eq!(residual_cfo(&LoSpec::disciplined(n), &LoSpec::disciplined(n)), 0.0);
        let up = LoSpec::new(n, 0.1, false).unwrap();
        assert!((residual_cfo(&up, &LoSpec::disciplined(n)) - 3640.0).abs() < 1e-6);
        let same = LoSpec::new(n, 2.5, false).unwrap();
        assert_eq!(residual_cfo(&same, &same), 0.0);
        // a disciplined LO ignores its nominal ppm error
        let disc = LoSpec::new(n, 50.0, true).unwrap();
        assert_eq!(residual_cfo(&disc, &LoSpec::disciplined(n)), 0.0);
    }

    #[test]
    fn duplex_rules() {
        let fdd = DuplexConfig { mode: DuplexMode::Fdd, mmwave_antennas: MmwaveAntennas::SeparateDlUl, separator: Separator::Duplexer };
        assert!(validate_duplex(&fdd).is_ok());
        let shared = DuplexConfig { mmwave_antennas: MmwaveAntennas::Shared, ..fdd };
        match validate_duplex(&shared) {
            Err(Error::InvalidDuplexConfig(reason)) => assert!(reason.contains("separate mmWave antennas")),
            other => panic!("unexpected {other:?}"),
        }
        let switched = DuplexConfig { separator: Separator::RfSwitch, ..fdd };
        assert!(validate_duplex(&switched).is_err());
        let tdd = DuplexConfig { mode: DuplexMode::Tdd, mmwave_antennas: MmwaveAntennas::Shared, separator: Separator::RfSwitch };
        assert!(validate_duplex(&tdd).is_ok());
        let tdd_dup = DuplexConfig { separator: Separator::Duplexer, ..tdd };
        assert!(validate_duplex(&tdd_dup).is_err());
    }

    fn ctx(lo_ghz: f64, sideband: Sideband) -> ChainContext {
        ChainContext {
            mmwave_band: band(),
            if_band: Passband::from_hz(2.5e9, 2.7e9).unwrap(),
            lo: FrequencyHz::ghz(lo_ghz).unwrap(),
            sideband,
        }
    }

    #[test]
    fn trace_up_and_down_conversion() {
        use StageName::*;
        let lib = StageLibrary::default();
        let up = lib.build(&[Diplexer, Mixer, MmwaveFilter, Pa], Direction::Downlink, &ctx(36.4, Sideband::Upper)).unwrap();
        let rf = up.trace_frequency(FrequencyHz::new(2.6e9).unwrap()).unwrap();
        assert_eq!(rf.value(), 39.0e9);
        let down = lib
            .build(&[Lna, MmwaveFilter, Mixer, IfFilter, Diplexer], Direction::Downlink, &ctx(36.4, Sideband::Lower))
            .unwrap();
        assert_eq!(down.trace_frequency(rf).unwrap().value(), 2.6e9);

        let bad = lib.build(&[Mixer, MmwaveFilter], Direction::Downlink, &ctx(37.5, Sideband::Upper)).unwrap();
        assert!(matches!(bad.trace_frequency(FrequencyHz::new(2.6e9).unwrap()), Err(Error::OutOfPassband { .. })));
    }

    #[test]
    fn library_defaults() {
        use StageName::*;
        let lib = StageLibrary::default();
        let c = ctx(36.4, Sideband::Upper);
        let lna = lib.stage(Lna, &c).unwrap();
        assert_eq!((lna.gain.value(), lna.noise_figure.value()), (20.0, 3.0));
        let pa = lib.stage(Pa, &c).unwrap();
        assert_eq!((pa.gain.value(), pa.noise_figure.value()), (30.0, 7.0));
        let mixer = lib.stage(Mixer, &c).unwrap();
        assert_eq!((mixer.gain.value(), mixer.noise_figure.value()), (-7.0, 7.0));
        assert_eq!(lib.stage(MmwaveFilter, &c).unwrap().gain.value(), -1.5);
        assert_eq!(lib.stage(Switch, &c).unwrap().gain.value(), -1.0);
        assert_eq!(lib.stage(Cable, &c).unwrap().gain.value(), -2.0);
    }

    fn stage_strategy() -> impl Strategy<Value = (f64, f64)> {
        (-10.0f64..40.0, 0.0f64..15.0)
    }

    proptest! {
        #[test]
        fn cascade_matches_oracle(stages in prop::collection::vec(stage_strategy(), 1..6)) {
            let c = cascade(&chain(stages.iter().map(|(g, nf)| amp(*g, *nf)).collect())).unwrap();
            prop_assert!((c.noise_figure.value() - friis_oracle(&stages)).abs() < 1e-9);
            prop_assert!(c.noise_figure.value() >= stages[0].1 - 1e-12);
        }

        #[test]
        fn cascade_gain_permutation_invariant(mut stages in prop::collection::vec(stage_strategy(), 2..6), seed in 0usize..100) {
            let a = cascade(&chain(stages.iter().map(|(g, nf)| amp(*g, *nf)).collect())).unwrap();
            let n = stages.len();
            stages.rotate_left(seed % n);
            stages.swap(0, n - 1);
            let b = cascade(&chain(stages.iter().map(|(g, nf)| amp(*g, *nf)).collect())).unwrap();
            prop_assert!((a.gain.value() - b.gain.value()).abs() < 1e-9);
        }

        #[test]
        fn plan_is_exact(if_hz in 1_000_000u64..5_000_000_000, lo_hz in 33_000_000_000u64..37_000_000_000) {
            let wide = Passband::from_hz(30e9, 45e9).unwrap();
            let lo = LoSpec::disciplined(FrequencyHz::new(lo_hz as f64).unwrap());
            let f_if = FrequencyHz::new(if_hz as f64).unwrap();
            match plan_frequency(f_if, &lo, Sideband::Upper, &wide) {
                Ok(rf) => prop_assert_eq!(rf.value() - lo_hz as f64, if_hz as f64),
                Err(e) => {
                    let expected = matches!(e, Error::ImageNotRejected { .. } | Error::OutOfPassband { .. });
                    prop_assert!(expected, "unexpected error {e:?}");
                }
            }
            if let Ok(rf) = plan_frequency(f_if, &lo, Sideband::Lower, &wide) {
                prop_assert_eq!(rf.value() - lo_hz as f64, -(if_hz as f64));
            }
        }

        #[test]
        fn cfo_bounded(e_up in -100.0f64..100.0, e_down in -100.0f64..100.0, n_up in 30e9f64..40e9, n_down in 30e9f64..40e9, d_up: bool, d_down: bool) {
            let up = LoSpec::new(FrequencyHz::new(n_up).unwrap(), e_up, d_up).unwrap();
            let down = LoSpec::new(FrequencyHz::new(n_down).unwrap(), e_down, d_down).unwrap();
            let bound = (up.effective_ppm().abs() + down.effective_ppm().abs()) * n_up.max(n_down) * 1e-6;
            prop_assert!(residual_cfo(&up, &down).abs() <= bound * (1.0 + 1e-12));
        }
    }
}
