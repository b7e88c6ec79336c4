//! Free-space propagation, building entry loss and antenna patterns.
//!
//! Azimuths are in degrees, counter-clockwise from the +x axis. Antenna
//! heights only enter through the 3-D line-of-sight distance.

use std::collections::HashSet;
use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{ensure_finite, Error, Result};
use crate::units::{DistanceM, FrequencyHz, GainDb};

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Free-space path loss `20 log10(4 pi d f / c)` as a positive loss.
pub fn fspl(d: DistanceM, f: FrequencyHz) -> Result<GainDb> {
    if d.value() <= 0.0 {
        return Err(Error::OutOfRange { what: "path distance", value: d.value() });
    }
    Ok(GainDb::new(20.0 * (4.0 * PI * d.value() * f.value() / SPEED_OF_LIGHT).log10()))
}

/// Parabolic main lobe clamped at the front-to-back floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntennaPattern {
    pub boresight_gain: GainDb,
    pub beamwidth_3db_deg: f64,
    pub front_to_back: GainDb,
}

impl AntennaPattern {
    pub fn new(boresight_gain: GainDb, beamwidth_3db_deg: f64, front_to_back: GainDb) -> Result<Self> {
        let g = ensure_finite("boresight gain", boresight_gain.value())?;
        if !(-10.0..=60.0).contains(&g) {
            return Err(Error::OutOfRange { what: "boresight gain", value: g });
        }
        let bw = ensure_finite("beamwidth", beamwidth_3db_deg)?;
        if !(bw > 0.0 && bw <= 360.0) {
            return Err(Error::OutOfRange { what: "beamwidth", value: bw });
        }
        let fb = ensure_finite("front-to-back ratio", front_to_back.value())?;
        if fb <= 0.0 {
            return Err(Error::OutOfRange { what: "front-to-back ratio", value: fb });
        }
        Ok(Self { boresight_gain, beamwidth_3db_deg, front_to_back })
    }

    /// Gain at `off_boresight_deg`; the pattern is symmetric, so any angle is
    /// folded onto `[0, 180]`.
    pub fn gain(&self, off_boresight_deg: f64) -> GainDb {
        let a = fold_angle(off_boresight_deg);
        let roll_off = 12.0 * (a / self.beamwidth_3db_deg).powi(2);
        GainDb::new(self.boresight_gain.value() - roll_off.min(self.front_to_back.value()))
    }
}

pub fn pattern_gain(p: &AntennaPattern, off_boresight_deg: f64) -> GainDb {
    p.gain(off_boresight_deg)
}

/// Absolute angular difference on the circle, in `[0, 180]`.
pub fn fold_angle(deg: f64) -> f64 {
    // even in deg by construction
    let a = deg.abs().rem_euclid(360.0);
    if a > 180.0 {
        360.0 - a
    } else {
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BeamId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beam {
    pub id: BeamId,
    pub azimuth_deg: f64,
    pub pattern: AntennaPattern,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeamSet {
    beams: Vec<Beam>,
}

impl BeamSet {
    pub fn new(beams: Vec<Beam>) -> Result<Self> {
        if beams.is_empty() {
            return Err(Error::InvalidBeamSet("no beams configured".into()));
        }
        let mut seen = HashSet::new();
        for b in &beams {
            if !seen.insert(b.id) {
                return Err(Error::InvalidBeamSet(format!("duplicate beam id {}", b.id.0)));
            }
        }
        Ok(Self { beams })
    }

    /// `count` beams spread evenly over `span_deg`, centered on `center_deg`.
    pub fn uniform(count: u32, span_deg: f64, center_deg: f64, pattern: AntennaPattern) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidBeamSet("beam count must be positive".into()));
        }
        let beams = (0..count)
            .map(|i| {
                let azimuth_deg = if count == 1 {
                    center_deg
                } else {
                    center_deg - span_deg / 2.0 + span_deg * f64::from(i) / f64::from(count - 1)
                };
                Beam { id: BeamId(i), azimuth_deg, pattern }
            })
            .collect();
        Self::new(beams)
    }

    pub fn beams(&self) -> &[Beam] {
        &self.beams
    }

    pub fn len(&self) -> usize {
        self.beams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beams.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodePlacement {
    pub x_m: f64,
    pub y_m: f64,
    pub antenna_height_m: f64,
    pub indoor: bool,
}

impl NodePlacement {
    pub fn new(x_m: f64, y_m: f64, antenna_height_m: f64, indoor: bool) -> Result<Self> {
        ensure_finite("x position", x_m)?;
        ensure_finite("y position", y_m)?;
        let h = ensure_finite("antenna height", antenna_height_m)?;
        if h <= 0.0 {
            return Err(Error::OutOfRange { what: "antenna height", value: h });
        }
        Ok(Self { x_m, y_m, antenna_height_m, indoor })
    }

    pub fn distance_to(&self, other: &NodePlacement) -> f64 {
        let dx = other.x_m - self.x_m;
        let dy = other.y_m - self.y_m;
        let dz = other.antenna_height_m - self.antenna_height_m;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn bearing_to(&self, other: &NodePlacement) -> f64 {
        (other.y_m - self.y_m).atan2(other.x_m - self.x_m).to_degrees()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Steering {
    /// Boresight points straight at the link peer.
    TowardPeer,
    Azimuth(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Antenna {
    pub pattern: AntennaPattern,
    pub steering: Steering,
}

impl Antenna {
    pub fn aimed(pattern: AntennaPattern) -> Self {
        Self { pattern, steering: Steering::TowardPeer }
    }

    pub fn steered(pattern: AntennaPattern, azimuth_deg: f64) -> Self {
        Self { pattern, steering: Steering::Azimuth(azimuth_deg) }
    }

    pub fn from_beam(beam: &Beam) -> Self {
        Self::steered(beam.pattern, beam.azimuth_deg)
    }

    fn gain_toward(&self, bearing_deg: f64) -> GainDb {
        match self.steering {
            Steering::TowardPeer => self.pattern.boresight_gain,
            Steering::Azimuth(az) => self.pattern.gain(bearing_deg - az),
        }
    }
}

/// Net gain between two antenna ports: both pattern gains minus FSPL, minus
/// `entry_loss` when exactly one endpoint is indoors.
pub fn path_gain(
    tx: &NodePlacement,
    rx: &NodePlacement,
    f: FrequencyHz,
    tx_antenna: &Antenna,
    rx_antenna: &Antenna,
    entry_loss: GainDb,
) -> Result<GainDb> {
    let d = tx.distance_to(rx);
    if d == 0.0 {
        return Err(Error::CoincidentPositions);
    }
    let loss = fspl(DistanceM::new(d)?, f)?;
    let g_tx = tx_antenna.gain_toward(tx.bearing_to(rx));
    let g_rx = rx_antenna.gain_toward(rx.bearing_to(tx));
    let entry = if tx.indoor != rx.indoor { entry_loss } else { GainDb::ZERO };
    Ok(g_tx + g_rx - loss - entry)
}

/// Zero-mean log-normal shadowing term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shadowing {
    normal: Normal<f64>,
}

impl Shadowing {
    pub fn new(sigma_db: f64) -> Result<Self> {
        let s = ensure_finite("shadowing sigma", sigma_db)?;
        if s < 0.0 {
            return Err(Error::OutOfRange { what: "shadowing sigma", value: s });
        }
        let normal = Normal::new(0.0, s).map_err(|_| Error::OutOfRange { what: "shadowing sigma", value: s })?;
        Ok(Self { normal })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> GainDb {
        GainDb::new(self.normal.sample(rng))
    }
}
