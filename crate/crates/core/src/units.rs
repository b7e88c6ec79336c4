//! Unit-safe scalars and decibel arithmetic.
//!
//! Logarithmic quantities (`PowerDbm`, `GainDb`) accept any real and are
//! checked for finiteness at the operation boundary. Linear quantities
//! (`FrequencyHz`, `BandwidthHz`, `DistanceM`) validate their range on
//! construction.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{ensure_finite, Error, Result};

/// Thermal noise density at 290 K.
pub const THERMAL_NOISE_DBM_PER_HZ: f64 = -174.0;

/// Absolute power in dBm.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PowerDbm(f64);

/// Relative gain in dB. Negative values are losses.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GainDb(f64);

impl PowerDbm {
    pub const fn new(dbm: f64) -> Self {
        Self(dbm)
    }

    pub const fn value(self) -> f64 {
        self.0
    }

    pub fn from_mw(mw: f64) -> Result<Self> {
        if !(mw > 0.0) || !mw.is_finite() {
            return Err(Error::OutOfRange { what: "power (mW)", value: mw });
        }
        Ok(Self(10.0 * mw.log10()))
    }
}

impl GainDb {
    pub const ZERO: GainDb = GainDb(0.0);

    pub const fn new(db: f64) -> Self {
        Self(db)
    }

    pub const fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for PowerDbm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3} dBm", self.0)
    }
}

impl fmt::Display for GainDb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3} dB", self.0)
    }
}

impl Add<GainDb> for PowerDbm {
    type Output = PowerDbm;
    fn add(self, rhs: GainDb) -> PowerDbm {
        PowerDbm(self.0 + rhs.0)
    }
}

impl Sub<GainDb> for PowerDbm {
    type Output = PowerDbm;
    fn sub(self, rhs: GainDb) -> PowerDbm {
        PowerDbm(self.0 - rhs.0)
    }
}

impl Sub for PowerDbm {
    type Output = GainDb;
    fn sub(self, rhs: PowerDbm) -> GainDb {
        GainDb(self.0 - rhs.0)
    }
}

impl Add for GainDb {
    type Output = GainDb;
    fn add(self, rhs: GainDb) -> GainDb {
        GainDb(self.0 + rhs.0)
    }
}

impl Sub for GainDb {
    type Output = GainDb;
    fn sub(self, rhs: GainDb) -> GainDb {
        GainDb(self.0 - rhs.0)
    }
}

impl Neg for GainDb {
    type Output = GainDb;
    fn neg(self) -> GainDb {
        GainDb(-self.0)
    }
}

macro_rules! positive_quantity {
    ($name:ident, $what:literal, $unit:literal, $allow_zero:expr) => {
        #[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
        pub struct $name(f64);

        impl $name {
            pub fn new(value: f64) -> Result<Self> {
                ensure_finite($what, value)?;
                let ok = if $allow_zero { value >= 0.0 } else { value > 0.0 };
                if ok {
                    Ok(Self(value))
                } else {
                    Err(Error::OutOfRange { what: $what, value })
                }
            }

            pub const fn value(self) -> f64 {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{} {}", self.0, $unit)
            }
        }
    };
}

positive_quantity!(FrequencyHz, "frequency", "Hz", false);
positive_quantity!(BandwidthHz, "bandwidth", "Hz", false);
positive_quantity!(DistanceM, "distance", "m", true);

impl FrequencyHz {
    pub fn ghz(v: f64) -> Result<Self> {
        Self::new(v * 1e9)
    }
}

impl BandwidthHz {
    pub fn mhz(v: f64) -> Result<Self> {
        Self::new(v * 1e6)
    }
}

/// Closed frequency interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Passband {
    lo: FrequencyHz,
    hi: FrequencyHz,
}

impl Passband {
    pub fn new(lo: FrequencyHz, hi: FrequencyHz) -> Result<Self> {
        if lo.value() < hi.value() {
            Ok(Self { lo, hi })
        } else {
            Err(Error::OutOfRange { what: "passband upper edge", value: hi.value() })
        }
    }

    pub fn from_hz(lo: f64, hi: f64) -> Result<Self> {
        Self::new(FrequencyHz::new(lo)?, FrequencyHz::new(hi)?)
    }

    pub fn lo(&self) -> FrequencyHz {
        self.lo
    }

    pub fn hi(&self) -> FrequencyHz {
        self.hi
    }

    pub fn width_hz(&self) -> f64 {
        self.hi.value() - self.lo.value()
    }

    /// Edges count as inside.
    pub fn contains(&self, f: f64) -> bool {
        f >= self.lo.value() && f <= self.hi.value()
    }
}

pub fn db_to_linear(x: GainDb) -> Result<f64> {
    let db = ensure_finite("gain", x.value())?;
    Ok(10f64.powf(db / 10.0))
}

pub fn linear_to_db(ratio: f64) -> Result<GainDb> {
    ensure_finite("ratio", ratio)?;
    if ratio <= 0.0 {
        return Err(Error::OutOfRange { what: "ratio", value: ratio });
    }
    Ok(GainDb(10.0 * ratio.log10()))
}

pub fn dbm_to_mw(p: PowerDbm) -> Result<f64> {
    let dbm = ensure_finite("power", p.value())?;
    Ok(10f64.powf(dbm / 10.0))
}

/// `-174 dBm/Hz + 10 log10(bw) + nf`.
pub fn thermal_noise_floor(bw: BandwidthHz, nf: GainDb) -> Result<PowerDbm> {
    let bw_hz = ensure_finite("bandwidth", bw.value())?;
    if bw_hz <= 0.0 {
        return Err(Error::OutOfRange { what: "bandwidth", value: bw_hz });
    }
    let nf_db = ensure_finite("noise figure", nf.value())?;
    if nf_db < 0.0 {
        return Err(Error::OutOfRange { what: "noise figure", value: nf_db });
    }
    Ok(PowerDbm(THERMAL_NOISE_DBM_PER_HZ + 10.0 * bw_hz.log10() + nf_db))
}
