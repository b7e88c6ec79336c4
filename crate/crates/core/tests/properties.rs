use mmwb::beam_control::{run_trace, scan_duration, SweepConfig};
use mmwb::multiplex::{allocate, angular_separation, Allocation, CellRequest};
use mmwb::propagation::BeamId;
use mmwb::scenario::{knee_distance, run_sweep, Scenario, SweepColumn, SweepRange};
use mmwb::units::{BandwidthHz, GainDb, Passband, PowerDbm};
use proptest::prelude::*;

#[test]
fn throughput_nonincreasing_with_distance() {
    for name in ["rural_track", "lab_faraday", "fwa_building"] {
        let s = Scenario::preset(name).unwrap();
        let r = run_sweep(&s, s.sweep, 0).unwrap();
        for w in r.windows(2) {
            assert!(w[1].thr_bridge_bps <= w[0].thr_bridge_bps, "{name} bridge at {}", w[1].distance_m);
            assert!(w[1].thr_direct_bps <= w[0].thr_direct_bps, "{name} direct at {}", w[1].distance_m);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn common_floor_orders_knees(nf in 0.0f64..15.0) {
        let s = Scenario::preset("rural_track").unwrap().with_common_noise_figure(GainDb::new(nf)).unwrap();
        let range = SweepRange::new(5.0, 30000.0, 5.0).unwrap();
        let r = run_sweep(&s, range, 0).unwrap();
        let thr = s.throughput.thr_max();
        let b = knee_distance(&r, SweepColumn::Bridge, thr).unwrap();
        let d = knee_distance(&r, SweepColumn::Direct, thr).unwrap();
        prop_assert!(b <= d, "nf {nf}: bridge {b} direct {d}");
    }
}

proptest! {
    #[test]
    fn interruption_per_rescan_is_scan_duration(n in 1usize..40, dwell_ms in 1.0f64..10.0, seed: u64) {
        let cfg = SweepConfig { dwell_per_beam_s: dwell_ms / 1e3, min_rssi: PowerDbm::new(-200.0), ..SweepConfig::default() };
        prop_assume!(cfg.accept(n).is_ok());
        let ids: Vec<BeamId> = (0..n as u32).map(BeamId).collect();
        let rssi: Vec<PowerDbm> = (0..n).map(|i| PowerDbm::new(-60.0 - i as f64)).collect();
        let ctl = run_trace(ids, &rssi, cfg, 35.0, 2.0, seed).unwrap();
        let scan = scan_duration(n, &cfg).unwrap();
        prop_assert_eq!(ctl.interruptions().len(), 3);
        for &i in ctl.interruptions() {
            prop_assert!((i - scan).abs() < 1e-12 && i <= cfg.reestablish_budget_s);
        }
    }

    #[test]
    fn plans_are_valid_and_deterministic(
        az in prop::collection::vec(0.0f64..360.0, 1..20),
        min_sep in 1.0f64..90.0,
        guard in 0.0f64..10e6,
    ) {
        let cells: Vec<CellRequest> = az
            .iter()
            .enumerate()
            .map(|(i, a)| CellRequest::new(format!("c{i}"), BandwidthHz::mhz(20.0).unwrap(), *a).unwrap())
            .collect();
        let band = Passband::from_hz(38e9, 40e9).unwrap();
        let first = allocate(&cells, &band, guard, min_sep).unwrap();
        prop_assert_eq!(&first, &allocate(&cells, &band, guard, min_sep).unwrap());
        let Allocation::Feasible(plan) = first else {
            return Err(TestCaseError::fail("2 GHz always fits 20 cells"));
        };
        for s in &plan.slots {
            prop_assert!(band.contains(s.center.value() - 10e6) && band.contains(s.center.value() + 10e6));
        }
        for (i, a) in plan.assignments.iter().enumerate() {
            for b in &plan.assignments[i + 1..] {
                prop_assert!(a.slot_index != b.slot_index || angular_separation(a.azimuth_deg, b.azimuth_deg) >= min_sep);
            }
        }
    }
}
