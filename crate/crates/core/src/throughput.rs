//! Attenuated and capped Shannon mapping from SNIR to throughput.
//!
//! ```text
//! thr = 0                                 snir <  snir_min
//! thr = alpha * bw * log2(1 + snir_lin)   snir_min <= snir < snir_max
//! thr = thr_max                           snir >= snir_max
//! ```

use crate::error::{Error, Result};
use crate::units::{db_to_linear, BandwidthHz, GainDb};

pub const DEFAULT_ALPHA: f64 = 0.6;
pub const DEFAULT_SNIR_MIN_DB: f64 = -10.0;

/// Cap of the commercial 20 MHz FDD cell.
pub const COMMERCIAL_CELL_THR_MAX_BPS: f64 = 98e6;
/// Cap of the compact Release 10 cell.
pub const COMPACT_CELL_THR_MAX_BPS: f64 = 75e6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThroughputParams {
    alpha: f64,
    snir_min: GainDb,
    snir_max: GainDb,
    thr_max: f64,
    bandwidth: BandwidthHz,
}

impl ThroughputParams {
    pub fn new(alpha: f64, snir_min: GainDb, snir_max: GainDb, thr_max: f64, bandwidth: BandwidthHz) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidThroughputParams(msg));
        if !(alpha > 0.0 && alpha <= 1.0) {
            return bad(format!("alpha {alpha} outside (0, 1]"));
        }
        if !snir_min.value().is_finite() || !snir_max.value().is_finite() {
            return bad("snir bounds must be finite".into());
        }
        if snir_min >= snir_max {
            return bad(format!("snir_min {snir_min} not below snir_max {snir_max}"));
        }
        if !(thr_max > 0.0 && thr_max.is_finite()) {
            return bad(format!("thr_max {thr_max} must be positive"));
        }
        let at_cap = shannon(alpha, bandwidth, snir_max)?;
        if ((at_cap - thr_max) / thr_max).abs() > 0.005 {
            return bad(format!(
                "cap {thr_max} b/s inconsistent with {at_cap:.0} b/s reached at snir_max"
            ));
        }
        Ok(Self { alpha, snir_min, snir_max, thr_max, bandwidth })
    }

    /// Derive `snir_max` from the cap so the curve is continuous there.
    pub fn from_cap(alpha: f64, snir_min: GainDb, thr_max: f64, bandwidth: BandwidthHz) -> Result<Self> {
        let snir_max = snir_max_from_thr_max(thr_max, alpha, bandwidth)?;
        Self::new(alpha, snir_min, snir_max, thr_max, bandwidth)
    }

    pub fn with_defaults(thr_max: f64, bandwidth: BandwidthHz) -> Result<Self> {
        Self::from_cap(DEFAULT_ALPHA, GainDb::new(DEFAULT_SNIR_MIN_DB), thr_max, bandwidth)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn snir_min(&self) -> GainDb {
        self.snir_min
    }

    pub fn snir_max(&self) -> GainDb {
        self.snir_max
    }

    pub fn thr_max(&self) -> f64 {
        self.thr_max
    }

    pub fn bandwidth(&self) -> BandwidthHz {
        self.bandwidth
    }
}

fn shannon(alpha: f64, bw: BandwidthHz, snir: GainDb) -> Result<f64> {
    Ok(alpha * bw.value() * (1.0 + db_to_linear(snir)?).log2())
}

/// Throughput in bit/s. NaN input maps to zero.
pub fn throughput(snir: GainDb, p: &ThroughputParams) -> f64 {
    let s = snir.value();
    if !(s >= p.snir_min.value()) {
        0.0
    } else if s >= p.snir_max.value() {
        p.thr_max
    } else {
        p.alpha * p.bandwidth.value() * (1.0 + 10f64.powf(s / 10.0)).log2()
    }
}

pub fn snir_max_from_thr_max(thr_max: f64, alpha: f64, bw: BandwidthHz) -> Result<GainDb> {
    if !(thr_max > 0.0 && thr_max.is_finite()) {
        return Err(Error::InvalidThroughputParams(format!("thr_max {thr_max} must be positive")));
    }
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidThroughputParams(format!("alpha {alpha} must be positive")));
    }
    let spectral = thr_max / (alpha * bw.value());
    Ok(GainDb::new(10.0 * (2f64.powf(spectral) - 1.0).log10()))
}
