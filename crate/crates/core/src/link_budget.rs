//! Per-hop and end-to-end budgets through the amplify-and-forward bridge.

use crate::error::{ensure_finite, Error, Result};
use crate::units::{db_to_linear, linear_to_db, GainDb, PowerDbm};

/// SNR assigned to a cabled hop.
pub const CABLED_HOP_SNR_DB: f64 = 200.0;

/// UEs saturate their reported SNR here.
pub const DEFAULT_REPORT_CAP_DB: f64 = 30.0;

/// 100 resource blocks of 12 subcarriers.
pub const LTE_20MHZ_SUBCARRIERS: u32 = 1200;

pub const DEFAULT_RESIDUAL_EVM_PERCENT: f64 = 4.2;

/// One radio hop. `path_gain` already holds both antenna pattern gains
/// beyond what `eirp` accounts for; `noise_floor` is input-referred at the
/// receiver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hop {
    pub eirp: PowerDbm,
    pub path_gain: GainDb,
    pub noise_floor: PowerDbm,
}

impl Hop {
    pub fn new(eirp: PowerDbm, path_gain: GainDb, noise_floor: PowerDbm) -> Result<Self> {
        ensure_finite("eirp", eirp.value())?;
        ensure_finite("path gain", path_gain.value())?;
        let n = ensure_finite("noise floor", noise_floor.value())?;
        if n >= 0.0 {
            return Err(Error::OutOfRange { what: "noise floor", value: n });
        }
        Ok(Self { eirp, path_gain, noise_floor })
    }

    /// A cable feeding `power` straight into the receiver.
    pub fn cabled(power: PowerDbm) -> Result<Self> {
        Self::new(power, GainDb::ZERO, power - GainDb::new(CABLED_HOP_SNR_DB))
    }
}

pub fn rx_power(hop: &Hop) -> PowerDbm {
    hop.eirp + hop.path_gain
}

pub fn hop_snr(hop: &Hop) -> GainDb {
    rx_power(hop) - hop.noise_floor
}

/// Amplify-and-forward cascade, `g1 g2 / (g1 + g2 + 1)` folded left.
pub fn e2e_snr_af(snr_hops: &[GainDb]) -> Result<GainDb> {
    let (first, rest) = snr_hops.split_first().ok_or(Error::EmptyHopList)?;
    if rest.is_empty() {
        ensure_finite("hop snr", first.value())?;
        return Ok(*first);
    }
    let mut acc = db_to_linear(*first)?;
    for g in rest {
        let g = db_to_linear(*g)?;
        acc = acc * g / (acc + g + 1.0);
    }
    linear_to_db(acc)
}

/// Root-sum-square of the noise-induced EVM and the residual transmitter EVM.
pub fn evm_percent(snr: GainDb, residual_evm_percent: f64) -> Result<f64> {
    let r = ensure_finite("residual evm", residual_evm_percent)?;
    if r < 0.0 {
        return Err(Error::OutOfRange { what: "residual evm", value: r });
    }
    let noise = 100.0 * 10f64.powf(-snr.value() / 20.0);
    Ok((noise * noise + r * r).sqrt())
}

pub fn rsrp_from_total(p_total: PowerDbm, n_subcarriers: u32) -> Result<PowerDbm> {
    if n_subcarriers == 0 {
        return Err(Error::OutOfRange { what: "subcarrier count", value: 0.0 });
    }
    Ok(p_total - GainDb::new(10.0 * f64::from(n_subcarriers).log10()))
}

pub fn reported_snr(snr: GainDb, cap: GainDb) -> GainDb {
    if snr.value() > cap.value() {
        cap
    } else {
        snr
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkBudgetResult {
    pub rx_power: Vec<PowerDbm>,
    pub snr: Vec<GainDb>,
    pub e2e_snr: GainDb,
    /// RSRP at the output of the last hop.
    pub rsrp: PowerDbm,
    pub evm_percent: f64,
    pub reported_snr: GainDb,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BudgetParams {
    pub residual_evm_percent: f64,
    pub n_subcarriers: u32,
    pub report_cap: GainDb,
}

impl Default for BudgetParams {
    fn default() -> Self {
        Self {
            residual_evm_percent: DEFAULT_RESIDUAL_EVM_PERCENT,
            n_subcarriers: LTE_20MHZ_SUBCARRIERS,
            report_cap: GainDb::new(DEFAULT_REPORT_CAP_DB),
        }
    }
}

pub fn evaluate(hops: &[Hop], params: &BudgetParams) -> Result<LinkBudgetResult> {
    let last = hops.last().ok_or(Error::EmptyHopList)?;
    let rx: Vec<PowerDbm> = hops.iter().map(rx_power).collect();
    let snr: Vec<GainDb> = hops.iter().map(hop_snr).collect();
    let e2e = e2e_snr_af(&snr)?;
    Ok(LinkBudgetResult {
        rsrp: rsrp_from_total(rx_power(last), params.n_subcarriers)?,
        evm_percent: evm_percent(e2e, params.residual_evm_percent)?,
        reported_snr: reported_snr(e2e, params.report_cap),
        rx_power: rx,
        snr,
        e2e_snr: e2e,
    })
}
