//! Deployment scenarios and the distance-sweep engine.
//!
//! A scenario is loaded from a TOML file, validated, and resolved into
//! immutable domain values: frequency plan, node chains, beam set and
//! receiver noise floors. Geometry is laid out along a straight track that
//! starts at the donor site and runs along `track.azimuth_deg`.

pub mod config;
pub mod presets;
mod sweep;

pub use sweep::{
    corridor_coverage, knee_distance, moving_average, run_sweep, NodeCoverage, SweepColumn, SweepRange,
    SweepRecord,
};

use crate::beam_control::{select_beam, SweepConfig};
use crate::error::{Error, Result};
use crate::link_budget::{self, hop_snr, BudgetParams, Hop, LinkBudgetResult};
use crate::propagation::{fspl, path_gain, Antenna, AntennaPattern, BeamSet, NodePlacement};
use crate::rf_chain::{
    cascade, plan_frequency, residual_cfo, validate_duplex, ChainContext, Direction, DuplexConfig, DuplexMode,
    LoSpec, RfChain, Sideband, StageName,
};
use crate::throughput::ThroughputParams;
use crate::units::{thermal_noise_floor, BandwidthHz, DistanceM, FrequencyHz, GainDb, Passband, PowerDbm};

use config::{AccessKind, NoiseSpec, ScenarioFile};

#[derive(Debug, Clone, PartialEq)]
pub struct Carrier {
    pub downlink: FrequencyHz,
    pub uplink: FrequencyHz,
    pub bandwidth: BandwidthHz,
    pub n_subcarriers: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MmwavePlan {
    pub passband: Passband,
    pub lo_up: LoSpec,
    pub lo_down: LoSpec,
    pub sideband: Sideband,
    /// mmWave frequency of the relayed downlink.
    pub downlink_rf: FrequencyHz,
    pub uplink_rf: FrequencyHz,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeChains {
    pub donor_tx: RfChain,
    pub service_rx: RfChain,
    pub service_tx: RfChain,
    pub donor_rx: RfChain,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Donor {
    pub placement: NodePlacement,
    /// EIRP on beam boresight.
    pub eirp: PowerDbm,
    pub beams: BeamSet,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AccessLink {
    /// The UE hangs off the service node by cable.
    Cabled { output_power: PowerDbm },
    Radiated { eirp: PowerDbm, indoor: bool, antenna_height_m: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ServiceSpec {
    pub antenna_height_m: f64,
    pub mmwave_pattern: AntennaPattern,
    pub pilot_eirp: PowerDbm,
    pub access: AccessLink,
    /// Along-track positions of fixed nodes. Empty: one node rides with the sweep.
    pub fixed_positions_m: Vec<f64>,
    pub spacing_m: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UeSpec {
    pub indoor: bool,
    pub entry_loss: GainDb,
    pub noise_figure: GainDb,
    pub antenna_gain: GainDb,
    pub antenna_height_m: f64,
    pub lateral_offset_m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSpec {
    pub eirp: PowerDbm,
    pub antenna_height_m: f64,
}

/// Receiver noise floors, input referred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseFloors {
    pub donor_link: PowerDbm,
    pub access_link: PowerDbm,
    pub direct_link: PowerDbm,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub carrier: Carrier,
    pub mmwave: MmwavePlan,
    pub duplex: DuplexConfig,
    pub chains: NodeChains,
    pub donor: Donor,
    pub service: ServiceSpec,
    pub ue: UeSpec,
    pub direct: DirectSpec,
    pub track_azimuth_deg: f64,
    pub noise: NoiseFloors,
    pub throughput: ThroughputParams,
    pub budget: BudgetParams,
    pub beam_control: SweepConfig,
    pub rssi_noise_sigma_db: f64,
    pub shadowing_sigma_db: f64,
    pub smoothing_window: DistanceM,
    pub sweep: SweepRange,
}

/// Noise floor that puts the hop SNR at `snir_max` at `knee_distance`:
/// `N = eirp - fspl(knee, f) + g_rx - snir_max`.
pub fn calibrate_noise_floor(
    knee_distance: DistanceM,
    f: FrequencyHz,
    eirp: PowerDbm,
    g_rx: GainDb,
    snir_max: GainDb,
) -> Result<PowerDbm> {
    Ok(eirp - fspl(knee_distance, f)? + g_rx - snir_max)
}

/// EIRP a direct outdoor transmitter needs for the same indoor SNR the
/// bridge-case EIRP gives outdoors.
pub fn required_direct_eirp(eirp: PowerDbm, entry_loss: GainDb) -> PowerDbm {
    eirp + entry_loss
}

pub fn fwa_power_check(s: &Scenario) -> PowerDbm {
    let loss = if s.ue.indoor { s.ue.entry_loss } else { GainDb::ZERO };
    required_direct_eirp(s.donor.eirp, loss)
}

fn default_layout(up: bool, tdd: bool) -> Vec<StageName> {
    use StageName::*;
    let port = if tdd { Switch } else { Diplexer };
    if up {
        vec![port, Mixer, MmwaveFilter, Pa]
    } else {
        vec![Lna, MmwaveFilter, Mixer, IfFilter, port]
    }
}

fn config_err(msg: impl Into<String>) -> Error {
    Error::InvalidScenario(msg.into())
}

/// One evaluated bridge path for a given service node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgePath {
    pub node_along_m: f64,
    pub beam_index: usize,
    pub donor_hop: Hop,
    pub access_hop: Hop,
}

impl BridgePath {
    pub fn hops(&self) -> [Hop; 2] {
        [self.donor_hop, self.access_hop]
    }

    pub fn e2e_snr(&self) -> Result<GainDb> {
        link_budget::e2e_snr_af(&[hop_snr(&self.donor_hop), hop_snr(&self.access_hop)])
    }
}

impl Scenario {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: ScenarioFile = toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
        Self::from_file(&file)
    }

    pub fn preset(name: &str) -> Result<Self> {
        let text = presets::get(name).ok_or_else(|| Error::Config(format!("unknown preset {name:?}")))?;
        Self::from_toml_str(text)
    }

    pub fn from_file(f: &ScenarioFile) -> Result<Self> {
        let carrier = Carrier {
            downlink: FrequencyHz::new(f.carrier.downlink_frequency_hz)?,
            uplink: FrequencyHz::new(f.carrier.uplink_frequency_hz)?,
            bandwidth: BandwidthHz::new(f.carrier.bandwidth_hz)?,
            n_subcarriers: f.carrier.subcarriers,
        };
        validate_duplex(&f.duplex)?;

        let passband = Passband::from_hz(f.mmwave.passband_lo_hz, f.mmwave.passband_hi_hz)?;
        let lo = |s: &config::LoSection| LoSpec::new(FrequencyHz::new(s.nominal_hz)?, s.ppm_error, s.disciplined);
        let lo_up = lo(&f.mmwave.lo_up)?;
        let lo_down = lo(&f.mmwave.lo_down)?;
        let sideband = f.mmwave.sideband;
        let downlink_rf = plan_frequency(carrier.downlink, &lo_up, sideband, &passband)?;
        let uplink_rf = plan_frequency(carrier.uplink, &lo_up, sideband, &passband)?;
        let mmwave = MmwavePlan { passband, lo_up, lo_down, sideband, downlink_rf, uplink_rf };

        let half = f.carrier.if_filter_half_width_hz;
        let sub6_band = |c: FrequencyHz| Passband::from_hz(c.value() - half, c.value() + half);
        let tdd = f.duplex.mode == DuplexMode::Tdd;
        let lib = &f.stage_library;
        let build = |layout: &Option<Vec<StageName>>, up: bool, dir: Direction, sub6: FrequencyHz| -> Result<RfChain> {
            let names = layout.clone().unwrap_or_else(|| default_layout(up, tdd));
            let ctx = ChainContext {
                mmwave_band: passband,
                if_band: sub6_band(sub6)?,
                lo: if up { lo_up.nominal } else { lo_down.nominal },
                sideband: if up { sideband } else { Sideband::Lower },
            };
            lib.build(&names, dir, &ctx)
        };
        let chains = NodeChains {
            donor_tx: build(&f.chains.donor_tx, true, Direction::Downlink, carrier.downlink)?,
            service_rx: build(&f.chains.service_rx, false, Direction::Downlink, carrier.downlink)?,
            service_tx: build(&f.chains.service_tx, true, Direction::Uplink, carrier.uplink)?,
            donor_rx: build(&f.chains.donor_rx, false, Direction::Uplink, carrier.uplink)?,
        };
        check_round_trip(&chains.donor_tx, &chains.service_rx, carrier.downlink, downlink_rf)?;
        check_round_trip(&chains.service_tx, &chains.donor_rx, carrier.uplink, uplink_rf)?;

        let b = &f.donor.beams;
        let beam_pattern = AntennaPattern::new(
            GainDb::new(b.boresight_gain_dbi),
            b.beamwidth_3db_deg,
            GainDb::new(b.front_to_back_db),
        )?;
        let donor = Donor {
            placement: NodePlacement::new(f.donor.x_m, f.donor.y_m, f.donor.antenna_height_m, false)?,
            eirp: PowerDbm::new(f.donor.eirp_dbm),
            beams: BeamSet::uniform(b.count, b.span_deg, b.center_deg, beam_pattern)?,
        };

        let svc = &f.service;
        let access = match svc.access {
            AccessKind::Cabled => AccessLink::Cabled {
                output_power: PowerDbm::new(
                    svc.output_power_dbm.ok_or_else(|| config_err("cabled access needs output_power_dbm"))?,
                ),
            },
            AccessKind::Radiated => AccessLink::Radiated {
                eirp: PowerDbm::new(
                    svc.access_eirp_dbm.ok_or_else(|| config_err("radiated access needs access_eirp_dbm"))?,
                ),
                indoor: svc.access_indoor,
                antenna_height_m: svc.access_antenna_height_m.unwrap_or(svc.antenna_height_m),
            },
        };
        let (fixed_positions_m, spacing_m) = match &svc.fixed {
            Some(fx) => {
                if fx.count == 0 || !(fx.spacing_m > 0.0) || !(fx.first_m > 0.0) {
                    return Err(config_err("fixed service nodes need count > 0, first_m > 0 and spacing_m > 0"));
                }
                ((0..fx.count).map(|i| fx.first_m + f64::from(i) * fx.spacing_m).collect(), Some(fx.spacing_m))
            }
            None => (Vec::new(), None),
        };
        if !fixed_positions_m.is_empty() && matches!(access, AccessLink::Cabled { .. }) {
            return Err(config_err("cabled access requires a node that follows the sweep"));
        }
        let service = ServiceSpec {
            antenna_height_m: svc.antenna_height_m,
            mmwave_pattern: AntennaPattern::new(
                GainDb::new(svc.mmwave_gain_dbi),
                svc.mmwave_beamwidth_3db_deg,
                GainDb::new(svc.mmwave_front_to_back_db),
            )?,
            pilot_eirp: PowerDbm::new(svc.pilot_eirp_dbm),
            access,
            fixed_positions_m,
            spacing_m,
        };
        NodePlacement::new(0.0, 0.0, service.antenna_height_m, false)?;

        let ue = UeSpec {
            indoor: f.ue.indoor,
            entry_loss: GainDb::new(f.ue.entry_loss_db),
            noise_figure: GainDb::new(f.ue.noise_figure_db),
            antenna_gain: GainDb::new(f.ue.antenna_gain_dbi),
            antenna_height_m: f.ue.antenna_height_m,
            lateral_offset_m: f.ue.lateral_offset_m,
        };
        if ue.entry_loss.value() < 0.0 {
            return Err(config_err("entry loss must be non-negative"));
        }
        let direct = DirectSpec {
            eirp: PowerDbm::new(f.direct.eirp_dbm),
            antenna_height_m: f.direct.antenna_height_m.unwrap_or(f.donor.antenna_height_m),
        };

        let throughput = ThroughputParams::from_cap(
            f.throughput.alpha,
            GainDb::new(f.throughput.snir_min_db),
            f.throughput.thr_max_bps,
            carrier.bandwidth,
        )?;
        let bc = &f.beam_control;
        let beam_control = SweepConfig {
            dwell_per_beam_s: bc.dwell_per_beam_s,
            rescan_period_s: bc.rescan_period_s,
            reestablish_budget_s: bc.reestablish_budget_s,
            min_rssi: PowerDbm::new(bc.min_rssi_dbm),
        }
        .accept(donor.beams.len())?;

        let sweep = SweepRange::new(f.sweep.start_m, f.sweep.end_m, f.sweep.step_m)?;

        let mut scenario = Scenario {
            name: f.name.clone(),
            carrier,
            mmwave,
            duplex: f.duplex,
            chains,
            donor,
            service,
            ue,
            direct,
            track_azimuth_deg: f.track.azimuth_deg,
            // placeholders until resolved below
            noise: NoiseFloors {
                donor_link: PowerDbm::new(-100.0),
                access_link: PowerDbm::new(-100.0),
                direct_link: PowerDbm::new(-100.0),
            },
            throughput,
            budget: BudgetParams {
                residual_evm_percent: f.budget.residual_evm_percent,
                n_subcarriers: f.carrier.subcarriers,
                report_cap: GainDb::new(f.budget.report_cap_db),
            },
            beam_control,
            rssi_noise_sigma_db: bc.rssi_noise_sigma_db,
            shadowing_sigma_db: f.shadowing.sigma_db,
            smoothing_window: DistanceM::new(f.smoothing.window_m)?,
            sweep,
        };
        if scenario.shadowing_sigma_db < 0.0 {
            return Err(config_err("shadowing sigma must be non-negative"));
        }
        scenario.noise = NoiseFloors {
            donor_link: scenario.resolve_noise(&f.noise.donor_link, Link::Donor)?,
            access_link: scenario.resolve_noise(&f.noise.access_link, Link::Access)?,
            direct_link: scenario.resolve_noise(&f.noise.direct_link, Link::Direct)?,
        };
        for n in [scenario.noise.donor_link, scenario.noise.access_link, scenario.noise.direct_link] {
            if !(n.value() < 0.0) {
                return Err(config_err(format!("noise floor {n} is not physical")));
            }
        }
        Ok(scenario)
    }

    fn resolve_noise(&self, spec: &NoiseSpec, link: Link) -> Result<PowerDbm> {
        match spec {
            NoiseSpec::Chain => {
                if link != Link::Donor {
                    return Err(config_err("chain noise mode only applies to the donor link"));
                }
                let nf = cascade(&self.chains.service_rx)?.noise_figure;
                thermal_noise_floor(self.carrier.bandwidth, nf)
            }
            NoiseSpec::NoiseFigure { noise_figure_db } => {
                let nf = noise_figure_db.map(GainDb::new).unwrap_or(self.ue.noise_figure);
                thermal_noise_floor(self.carrier.bandwidth, nf)
            }
            NoiseSpec::Fixed { noise_floor_dbm } => Ok(PowerDbm::new(*noise_floor_dbm)),
            NoiseSpec::Calibrated { knee_m, target_snr_db } => {
                let target = target_snr_db.map(GainDb::new).unwrap_or(self.throughput.snir_max());
                self.calibrate_link(link, *knee_m, target)
            }
        }
    }

    /// Anchors are evaluated outdoors: the floor is a receiver property
    /// estimated from the outdoor drive test.
    fn calibrate_link(&self, link: Link, knee_m: f64, target: GainDb) -> Result<PowerDbm> {
        let mut outdoor = self.clone();
        outdoor.ue.indoor = false;
        if let AccessLink::Radiated { ref mut indoor, .. } = outdoor.service.access {
            *indoor = false;
        }
        let along = knee_m;
        let (tx, rx, f, eirp, net_gain) = match link {
            Link::Donor => {
                let node = outdoor.node_placement(along)?;
                let (_, hop_gain) = outdoor.donor_hop_gain(&node)?;
                (outdoor.donor.placement, node, self.mmwave.downlink_rf, self.donor.eirp, hop_gain)
            }
            Link::Direct => {
                let site = outdoor.direct_site()?;
                let ue = outdoor.ue_placement(along)?;
                (site, ue, self.carrier.downlink, self.direct.eirp, outdoor.direct_gain(&site, &ue)?)
            }
            Link::Access => {
                let AccessLink::Radiated { eirp, .. } = outdoor.service.access else {
                    return Err(config_err("cannot calibrate a cabled access link"));
                };
                let node = outdoor.access_placement(along)?;
                let ue = outdoor.ue_placement(along)?;
                (node, ue, self.carrier.downlink, eirp, outdoor.access_gain(&node, &ue)?)
            }
        };
        let d = DistanceM::new(tx.distance_to(&rx))?;
        let g_rx = net_gain + fspl(d, f)?;
        calibrate_noise_floor(d, f, eirp, g_rx, target)
    }

    /// Replace both radio noise floors with a thermal floor at `nf`.
    pub fn with_common_noise_figure(&self, nf: GainDb) -> Result<Scenario> {
        let floor = thermal_noise_floor(self.carrier.bandwidth, nf)?;
        let mut s = self.clone();
        s.noise.donor_link = floor;
        s.noise.direct_link = floor;
        Ok(s)
    }

    pub fn residual_cfo_hz(&self) -> f64 {
        residual_cfo(&self.mmwave.lo_up, &self.mmwave.lo_down)
    }

    fn unit(&self) -> (f64, f64) {
        let a = self.track_azimuth_deg.to_radians();
        (a.cos(), a.sin())
    }

    fn track_point(&self, along_m: f64, lateral_m: f64, height_m: f64, indoor: bool) -> Result<NodePlacement> {
        let (ux, uy) = self.unit();
        let o = &self.donor.placement;
        NodePlacement::new(
            o.x_m + along_m * ux - lateral_m * uy,
            o.y_m + along_m * uy + lateral_m * ux,
            height_m,
            indoor,
        )
    }

    /// mmWave antennas of a service node, always outdoors.
    pub fn node_placement(&self, along_m: f64) -> Result<NodePlacement> {
        self.track_point(along_m, 0.0, self.service.antenna_height_m, false)
    }

    pub fn access_placement(&self, along_m: f64) -> Result<NodePlacement> {
        match self.service.access {
            AccessLink::Radiated { indoor, antenna_height_m, .. } => self.track_point(along_m, 0.0, antenna_height_m, indoor),
            AccessLink::Cabled { .. } => self.node_placement(along_m),
        }
    }

    pub fn ue_placement(&self, along_m: f64) -> Result<NodePlacement> {
        self.track_point(along_m, self.ue.lateral_offset_m, self.ue.antenna_height_m, self.ue.indoor)
    }

    pub fn direct_site(&self) -> Result<NodePlacement> {
        let o = &self.donor.placement;
        NodePlacement::new(o.x_m, o.y_m, self.direct.antenna_height_m, false)
    }

    fn service_antenna(&self) -> Antenna {
        Antenna::aimed(self.service.mmwave_pattern)
    }

    /// Per-beam pilot RSSI at the donor from a node at `node`.
    pub fn pilot_rssi(&self, node: &NodePlacement) -> Result<Vec<PowerDbm>> {
        let svc = self.service_antenna();
        self.donor
            .beams
            .beams()
            .iter()
            .map(|b| {
                let g = path_gain(node, &self.donor.placement, self.mmwave.uplink_rf, &svc, &Antenna::from_beam(b), GainDb::ZERO)?;
                Ok(self.service.pilot_eirp + (g - self.service.mmwave_pattern.boresight_gain))
            })
            .collect()
    }

    /// Select the donor beam for `node` and return it with the donor-hop
    /// gain relative to boresight EIRP.
    fn donor_hop_gain(&self, node: &NodePlacement) -> Result<(usize, GainDb)> {
        let idx = select_beam(&self.pilot_rssi(node)?)?;
        let beam = &self.donor.beams.beams()[idx];
        let g = path_gain(
            &self.donor.placement,
            node,
            self.mmwave.downlink_rf,
            &Antenna::from_beam(beam),
            &self.service_antenna(),
            GainDb::ZERO,
        )?;
        Ok((idx, g - beam.pattern.boresight_gain))
    }

    fn ue_antenna(&self) -> Result<Antenna> {
        Ok(Antenna::aimed(AntennaPattern::new(self.ue.antenna_gain, 360.0, GainDb::new(3.0))?))
    }

    /// Gain of a sub-6 GHz hop whose transmitter is described by its EIRP.
    fn sub6_gain(&self, tx: &NodePlacement, rx: &NodePlacement) -> Result<GainDb> {
        let tx_ant = Antenna::aimed(AntennaPattern::new(GainDb::ZERO, 360.0, GainDb::new(3.0))?);
        path_gain(tx, rx, self.carrier.downlink, &tx_ant, &self.ue_antenna()?, self.ue.entry_loss)
    }

    fn access_gain(&self, node: &NodePlacement, ue: &NodePlacement) -> Result<GainDb> {
        self.sub6_gain(node, ue)
    }

    fn direct_gain(&self, site: &NodePlacement, ue: &NodePlacement) -> Result<GainDb> {
        self.sub6_gain(site, ue)
    }

    /// Bridge path through the service node at `node_along_m` to a UE at
    /// `ue_along_m`.
    pub fn bridge_path(&self, node_along_m: f64, ue_along_m: f64) -> Result<BridgePath> {
        let node = self.node_placement(node_along_m)?;
        let (beam_index, g) = self.donor_hop_gain(&node)?;
        let donor_hop = Hop::new(self.donor.eirp, g, self.noise.donor_link)?;
        let access_hop = match self.service.access {
            AccessLink::Cabled { output_power } => Hop::cabled(output_power)?,
            AccessLink::Radiated { eirp, .. } => {
                let ap = self.access_placement(node_along_m)?;
                let ue = self.ue_placement(ue_along_m)?;
                Hop::new(eirp, self.access_gain(&ap, &ue)?, self.noise.access_link)?
            }
        };
        Ok(BridgePath { node_along_m, beam_index, donor_hop, access_hop })
    }

    /// Positions of the service nodes that can serve a UE at `ue_along_m`.
    pub fn candidate_nodes(&self, ue_along_m: f64) -> Vec<f64> {
        if self.service.fixed_positions_m.is_empty() {
            vec![ue_along_m]
        } else {
            self.service.fixed_positions_m.clone()
        }
    }

    /// Best bridge path for a UE at `ue_along_m`; ties go to the first node.
    pub fn best_bridge_path(&self, ue_along_m: f64) -> Result<BridgePath> {
        let mut best: Option<(BridgePath, f64)> = None;
        for node in self.candidate_nodes(ue_along_m) {
            let p = self.bridge_path(node, ue_along_m)?;
            let snr = p.e2e_snr()?.value();
            if best.as_ref().is_none_or(|(_, s)| snr > *s) {
                best = Some((p, snr));
            }
        }
        best.map(|(p, _)| p).ok_or_else(|| config_err("no service node"))
    }

    pub fn direct_hop(&self, ue_along_m: f64) -> Result<Hop> {
        let site = self.direct_site()?;
        let ue = self.ue_placement(ue_along_m)?;
        Hop::new(self.direct.eirp, self.direct_gain(&site, &ue)?, self.noise.direct_link)
    }

    pub fn bridge_budget(&self, ue_along_m: f64) -> Result<LinkBudgetResult> {
        link_budget::evaluate(&self.best_bridge_path(ue_along_m)?.hops(), &self.budget)
    }

    pub fn direct_budget(&self, ue_along_m: f64) -> Result<LinkBudgetResult> {
        link_budget::evaluate(&[self.direct_hop(ue_along_m)?], &self.budget)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Donor,
    Access,
    Direct,
}

fn check_round_trip(up: &RfChain, down: &RfChain, carrier: FrequencyHz, planned: FrequencyHz) -> Result<()> {
    let rf = up.trace_frequency(carrier)?;
    if rf != planned {
        return Err(config_err(format!("up-conversion chain produces {rf}, plan expects {planned}")));
    }
    let back = down.trace_frequency(rf)?;
    if back != carrier {
        return Err(config_err(format!("down-conversion chain recovers {back}, expected {carrier}")));
    }
    Ok(())
}
