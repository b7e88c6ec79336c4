//! On-disk scenario schema. Key names carry their unit.

use serde::Deserialize;

use crate::rf_chain::{DuplexConfig, Sideband, StageLibrary, StageName};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub carrier: CarrierSection,
    pub mmwave: MmwaveSection,
    pub duplex: DuplexConfig,
    #[serde(default)]
    pub stage_library: StageLibrary,
    #[serde(default)]
    pub chains: ChainsSection,
    pub donor: DonorSection,
    pub service: ServiceSection,
    pub ue: UeSection,
    pub direct: DirectSection,
    #[serde(default)]
    pub track: TrackSection,
    pub noise: NoiseSection,
    pub throughput: ThroughputSection,
    #[serde(default)]
    pub budget: BudgetSection,
    #[serde(default)]
    pub beam_control: BeamControlSection,
    #[serde(default)]
    pub shadowing: ShadowingSection,
    #[serde(default)]
    pub smoothing: SmoothingSection,
    pub sweep: SweepSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierSection {
    pub downlink_frequency_hz: f64,
    pub uplink_frequency_hz: f64,
    pub bandwidth_hz: f64,
    #[serde(default = "default_subcarriers")]
    pub subcarriers: u32,
    /// Half width of the sub-6 GHz filters around each carrier.
    #[serde(default = "default_if_half_width")]
    pub if_filter_half_width_hz: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MmwaveSection {
    pub passband_lo_hz: f64,
    pub passband_hi_hz: f64,
    #[serde(default = "default_sideband")]
    pub sideband: Sideband,
    pub lo_up: LoSection,
    pub lo_down: LoSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoSection {
    pub nominal_hz: f64,
    #[serde(default)]
    pub ppm_error: f64,
    #[serde(default = "yes")]
    pub disciplined: bool,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainsSection {
    pub donor_tx: Option<Vec<StageName>>,
    pub service_rx: Option<Vec<StageName>>,
    pub service_tx: Option<Vec<StageName>>,
    pub donor_rx: Option<Vec<StageName>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DonorSection {
    #[serde(default)]
    pub x_m: f64,
    #[serde(default)]
    pub y_m: f64,
    pub antenna_height_m: f64,
    pub eirp_dbm: f64,
    pub beams: BeamsSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamsSection {
    pub count: u32,
    pub span_deg: f64,
    #[serde(default)]
    pub center_deg: f64,
    pub boresight_gain_dbi: f64,
    pub beamwidth_3db_deg: f64,
    pub front_to_back_db: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AccessKind {
    Cabled,
    Radiated,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ServiceSection {
    pub antenna_height_m: f64,
    pub mmwave_gain_dbi: f64,
    pub mmwave_beamwidth_3db_deg: f64,
    pub mmwave_front_to_back_db: f64,
    #[serde(default = "default_pilot_eirp")]
    pub pilot_eirp_dbm: f64,
    pub access: AccessKind,
    /// Cabled access: total power delivered to the UE port.
    pub output_power_dbm: Option<f64>,
    /// Radiated access: EIRP of the serving antenna.
    pub access_eirp_dbm: Option<f64>,
    #[serde(default)]
    pub access_indoor: bool,
    pub access_antenna_height_m: Option<f64>,
    /// Fixed nodes along the track; absent means the node follows the sweep.
    pub fixed: Option<FixedNodesSection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedNodesSection {
    pub first_m: f64,
    pub spacing_m: f64,
    pub count: u32,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UeSection {
    #[serde(default)]
    pub indoor: bool,
    #[serde(default)]
    pub entry_loss_db: f64,
    pub noise_figure_db: f64,
    #[serde(default)]
    pub antenna_gain_dbi: f64,
    pub antenna_height_m: f64,
    #[serde(default)]
    pub lateral_offset_m: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectSection {
    pub eirp_dbm: f64,
    pub antenna_height_m: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrackSection {
    #[serde(default)]
    pub azimuth_deg: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseSection {
    pub donor_link: NoiseSpec,
    #[serde(default = "ue_noise")]
    pub access_link: NoiseSpec,
    #[serde(default = "ue_noise")]
    pub direct_link: NoiseSpec,
}

/// How a receiver noise floor is obtained.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case", deny_unknown_fields)]
pub enum NoiseSpec {
    /// Thermal floor plus the cascade noise figure of the receive chain.
    Chain,
    /// Thermal floor plus an explicit noise figure; omitted means the UE's.
    NoiseFigure { noise_figure_db: Option<f64> },
    Fixed { noise_floor_dbm: f64 },
    /// Floor that puts the hop SNR exactly at `target_snr_db` (default:
    /// the throughput cap threshold) with the far end `knee_m` down the track.
    Calibrated { knee_m: f64, target_snr_db: Option<f64> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThroughputSection {
    pub thr_max_bps: f64,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_snir_min")]
    pub snir_min_db: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BudgetSection {
    pub residual_evm_percent: f64,
    pub report_cap_db: f64,
}

impl Default for BudgetSection {
    fn default() -> Self {
        Self {
            residual_evm_percent: crate::link_budget::DEFAULT_RESIDUAL_EVM_PERCENT,
            report_cap_db: crate::link_budget::DEFAULT_REPORT_CAP_DB,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BeamControlSection {
    pub dwell_per_beam_s: f64,
    pub rescan_period_s: f64,
    pub reestablish_budget_s: f64,
    pub min_rssi_dbm: f64,
    pub rssi_noise_sigma_db: f64,
}

impl Default for BeamControlSection {
    fn default() -> Self {
        let d = crate::beam_control::SweepConfig::default();
        Self {
            dwell_per_beam_s: d.dwell_per_beam_s,
            rescan_period_s: d.rescan_period_s,
            reestablish_budget_s: d.reestablish_budget_s,
            min_rssi_dbm: d.min_rssi.value(),
            rssi_noise_sigma_db: 0.0,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShadowingSection {
    /// Zero disables shadowing.
    #[serde(default)]
    pub sigma_db: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SmoothingSection {
    pub window_m: f64,
}

impl Default for SmoothingSection {
    fn default() -> Self {
        Self { window_m: 5.0 }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub start_m: f64,
    pub end_m: f64,
    pub step_m: f64,
}

fn default_subcarriers() -> u32 {
    crate::link_budget::LTE_20MHZ_SUBCARRIERS
}

fn default_if_half_width() -> f64 {
    100e6
}

fn default_sideband() -> Sideband {
    Sideband::Upper
}

fn yes() -> bool {
    true
}

fn default_pilot_eirp() -> f64 {
    30.0
}

fn ue_noise() -> NoiseSpec {
    NoiseSpec::NoiseFigure { noise_figure_db: None }
}

fn default_alpha() -> f64 {
    crate::throughput::DEFAULT_ALPHA
}

fn default_snir_min() -> f64 {
    crate::throughput::DEFAULT_SNIR_MIN_DB
}
