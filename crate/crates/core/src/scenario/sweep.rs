use std::fmt::Write as _;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::link_budget::{hop_snr, reported_snr};
use crate::propagation::Shadowing;
use crate::throughput::throughput;
use crate::units::{DistanceM, GainDb};

use super::Scenario;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: DistanceM,
    pub end: DistanceM,
    pub step: DistanceM,
}

impl SweepRange {
    pub fn new(start_m: f64, end_m: f64, step_m: f64) -> Result<Self> {
        if !(start_m > 0.0 && start_m <= end_m) {
            return Err(Error::InvalidScenario(format!("sweep needs 0 < start <= end, got {start_m}:{end_m}")));
        }
        if !(step_m > 0.0) {
            return Err(Error::InvalidScenario(format!("sweep step must be positive, got {step_m}")));
        }
        Ok(Self { start: DistanceM::new(start_m)?, end: DistanceM::new(end_m)?, step: DistanceM::new(step_m)? })
    }

    pub fn len(&self) -> usize {
        let span = (self.end.value() - self.start.value()) / self.step.value();
        (span + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points are computed as `start + i * step` so they do not accumulate error.
    pub fn distances(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.start.value() + i as f64 * self.step.value())
    }
}

impl FromStr for SweepRange {
    type Err = Error;

    /// `start:end:step` in metres.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Config(format!("sweep {s:?} is not start:end:step")));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| Error::Config(format!("bad number {t:?} in sweep")));
        Self::new(num(a)?, num(b)?, num(c)?)
    }
}

/// One row of the distance sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub distance_m: f64,
    pub snr_bridge_db: f64,
    pub snr_bridge_reported_db: f64,
    pub thr_bridge_bps: f64,
    pub snr_direct_db: f64,
    pub snr_direct_reported_db: f64,
    pub thr_direct_bps: f64,
}

impl SweepRecord {
    pub const HEADER: &'static str = "distance_m,snr_bridge_db,snr_bridge_reported_db,thr_bridge_bps,snr_direct_db,snr_direct_reported_db,thr_direct_bps";

    pub fn to_csv(records: &[SweepRecord]) -> String {
        let mut out = String::with_capacity(96 * (records.len() + 1));
        out.push_str(Self::HEADER);
        out.push('\n');
        for r in records {
            let _ = writeln!(
                out,
                "{:.3},{:.3},{:.3},{:.3},{:.3},{:.3},{:.3}",
                r.distance_m,
                r.snr_bridge_db,
                r.snr_bridge_reported_db,
                r.thr_bridge_bps,
                r.snr_direct_db,
                r.snr_direct_reported_db,
                r.thr_direct_bps
            );
        }
        out
    }
}

/// Mean of all samples within `window / 2` of each point. The series must
/// be sorted by distance; the window is truncated at the ends.
pub fn moving_average(series: &[(f64, f64)], window: DistanceM) -> Result<Vec<(f64, f64)>> {
    if series.windows(2).any(|w| !(w[0].0 <= w[1].0)) {
        return Err(Error::UnsortedSeries);
    }
    let half = window.value() / 2.0 + 1e-9;
    let mut lo = 0;
    let mut hi = 0;
    let mut out = Vec::with_capacity(series.len());
    for &(d, _) in series {
        while hi < series.len() && series[hi].0 <= d + half {
            hi += 1;
        }
        while series[lo].0 < d - half {
            lo += 1;
        }
        let window = &series[lo..hi];
        let mean = window.iter().map(|p| p.1).sum::<f64>() / window.len() as f64;
        out.push((d, mean));
    }
    Ok(out)
}

/// Sweep the UE (and any co-moving service node) along the track.
///
/// `seed` only matters when shadowing is enabled.
pub fn run_sweep(s: &Scenario, range: SweepRange, seed: u64) -> Result<Vec<SweepRecord>> {
    let dists: Vec<f64> = range.distances().collect();
    let mut bridge = Vec::with_capacity(dists.len());
    let mut direct = Vec::with_capacity(dists.len());
    for &d in &dists {
        bridge.push((d, s.best_bridge_path(d)?.e2e_snr()?.value()));
        direct.push((d, hop_snr(&s.direct_hop(d)?).value()));
    }
    if s.shadowing_sigma_db > 0.0 {
        let shadow = Shadowing::new(s.shadowing_sigma_db)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (b, dr) in bridge.iter_mut().zip(direct.iter_mut()) {
            b.1 += shadow.sample(&mut rng).value();
            dr.1 += shadow.sample(&mut rng).value();
        }
    }
    let bridge = moving_average(&bridge, s.smoothing_window)?;
    let direct = moving_average(&direct, s.smoothing_window)?;
    let cap = s.budget.report_cap;
    Ok(bridge
        .iter()
        .zip(&direct)
        .map(|(&(d, sb), &(_, sd))| SweepRecord {
            distance_m: d,
            snr_bridge_db: sb,
            snr_bridge_reported_db: reported_snr(GainDb::new(sb), cap).value(),
            thr_bridge_bps: throughput(GainDb::new(sb), &s.throughput),
            snr_direct_db: sd,
            snr_direct_reported_db: reported_snr(GainDb::new(sd), cap).value(),
            thr_direct_bps: throughput(GainDb::new(sd), &s.throughput),
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepColumn {
    Bridge,
    Direct,
}

/// Largest distance whose throughput still sits at `thr_max`, allowing a
/// relative rounding slack of 1e-9.
pub fn knee_distance(records: &[SweepRecord], column: SweepColumn, thr_max: f64) -> Option<f64> {
    records
        .iter()
        .rev()
        .find(|r| {
            let thr = match column {
                SweepColumn::Bridge => r.thr_bridge_bps,
                SweepColumn::Direct => r.thr_direct_bps,
            };
            thr >= thr_max * (1.0 - 1e-9)
        })
        .map(|r| r.distance_m)
}

/// Worst service-link SNR around one fixed node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeCoverage {
    pub node_along_m: f64,
    pub donor_distance_m: f64,
    pub donor_hop_snr_db: f64,
    pub min_e2e_snr_db: f64,
}

/// For every fixed service node, scan track points within half a spacing
/// on either side and record the weakest end-to-end SNR through that node.
pub fn corridor_coverage(s: &Scenario, step_m: f64) -> Result<Vec<NodeCoverage>> {
    let spacing = s
        .service
        .spacing_m
        .ok_or_else(|| Error::InvalidScenario("corridor coverage needs fixed service nodes".into()))?;
    if !(step_m > 0.0) {
        return Err(Error::OutOfRange { what: "coverage step", value: step_m });
    }
    let half = spacing / 2.0;
    let n_pts = (spacing / step_m).floor() as usize;
    s.service
        .fixed_positions_m
        .iter()
        .map(|&node| {
            let mut min_snr = f64::INFINITY;
            let mut donor_snr = f64::NAN;
            for i in 0..=n_pts {
                let ue = node - half + i as f64 * step_m;
                let p = s.bridge_path(node, ue)?;
                donor_snr = hop_snr(&p.donor_hop).value();
                min_snr = min_snr.min(p.e2e_snr()?.value());
            }
            let donor_distance_m = s.donor.placement.distance_to(&s.node_placement(node)?);
            Ok(NodeCoverage { node_along_m: node, donor_distance_m, donor_hop_snr_db: donor_snr, min_e2e_snr_db: min_snr })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(m: f64) -> DistanceM {
        DistanceM::new(m).unwrap()
    }

    #[test]
    fn moving_average_examples() {
        let c = vec![(0.0, 3.0), (5.0, 3.0), (10.0, 3.0)];
        assert_eq!(moving_average(&c, w(5.0)).unwrap(), c);
        assert_eq!(moving_average(&[(7.0, -2.0)], w(5.0)).unwrap(), vec![(7.0, -2.0)]);
        let out = moving_average(&[(0.0, 0.0), (2.0, 6.0), (4.0, 0.0)], w(5.0)).unwrap();
        assert!((out[1].1 - 2.0).abs() < 1e-12);
        assert!((out[0].1 - 3.0).abs() < 1e-12);
        assert!(moving_average(&[(2.0, 1.0), (1.0, 1.0)], w(5.0)).is_err());
    }

    #[test]
    fn sweep_range_parsing() {
        let r: SweepRange = "50:3000:5".parse().unwrap();
        assert_eq!(r.len(), 591);
        assert_eq!(r.distances().last(), Some(3000.0));
        assert_eq!("10:10:1".parse::<SweepRange>().unwrap().len(), 1);
        assert!("0:10:1".parse::<SweepRange>().is_err());
        assert!("10:5:1".parse::<SweepRange>().is_err());
        assert!("1:5".parse::<SweepRange>().is_err());
        assert!("a:5:1".parse::<SweepRange>().is_err());
    }

    #[test]
    fn csv_header_and_precision() {
        let r = SweepRecord {
            distance_m: 50.0,
            snr_bridge_db: 1.0 / 3.0,
            snr_bridge_reported_db: 0.0,
            thr_bridge_bps: 75e6,
            snr_direct_db: -2.0,
            snr_direct_reported_db: -2.0,
            thr_direct_bps: 0.0,
        };
        let csv = SweepRecord::to_csv(&[r]);
        assert_eq!(
            csv,
            format!("{}\n50.000,0.333,0.000,75000000.000,-2.000,-2.000,0.000\n", SweepRecord::HEADER)
        );
        assert!(!csv.contains('\r'));
    }

    proptest! {
        #[test]
        fn full_window_preserves_mean(vals in prop::collection::vec(-50.0f64..50.0, 1..30)) {
            let series: Vec<(f64, f64)> = vals.iter().enumerate().map(|(i, v)| (i as f64, *v)).collect();
            let span = series.len() as f64 * 2.0 + 2.0;
            let out = moving_average(&series, w(span)).unwrap();
            let mean = vals.iter().sum::<f64>() / vals.len() as f64;
            for (_, m) in out {
                prop_assert!((m - mean).abs() < 1e-9);
            }
        }

        #[test]
        fn idempotent_on_constants(c in -50.0f64..50.0, n in 1usize..40, win in 0.5f64..30.0) {
            let series: Vec<(f64, f64)> = (0..n).map(|i| (i as f64 * 1.5, c)).collect();
            let once = moving_average(&series, w(win)).unwrap();
            let twice = moving_average(&once, w(win)).unwrap();
            for ((_, a), (_, b)) in once.iter().zip(&twice) {
                prop_assert!((a - c).abs() < 1e-9 && (b - c).abs() < 1e-9);
            }
        }
    }
}
