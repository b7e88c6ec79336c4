//! Donor-node beam selection.
//!
//! On link start the donor asks the service node for a pilot, dwells on each
//! configured beam once, then points both its receive and transmit antennas
//! at the strongest one. The scan is repeated every `rescan_period`, which
//! costs one sub-6 GHz interruption of `scan_duration`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{ensure_finite, Error, Result};
use crate::propagation::{BeamId, Shadowing};
use crate::units::{GainDb, PowerDbm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Idle,
    AwaitPilot,
    Scanning(usize),
    Selected(BeamId),
    LinkDown,
}

impl Phase {
    pub fn name(&self) -> &'static str {
        match self {
            Phase::Idle => "idle",
            Phase::AwaitPilot => "await_pilot",
            Phase::Scanning(_) => "scanning",
            Phase::Selected(_) => "selected",
            Phase::LinkDown => "link_down",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Event {
    Init,
    PilotConfirmed,
    RssiSample(PowerDbm),
    RescanTimer,
    RetryTimer,
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Event::Init => "init",
            Event::PilotConfirmed => "pilot_confirmed",
            Event::RssiSample(_) => "rssi_sample",
            Event::RescanTimer => "rescan_timer",
            Event::RetryTimer => "retry_timer",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Action {
    RequestPilot,
    /// Point the receive antenna at a beam for one dwell.
    SteerScanBeam(BeamId),
    /// Point both receive and transmit antennas at the chosen beam.
    ConfigureBeam(BeamId),
    Interruption { duration_s: f64 },
    ReportLinkDown,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub dwell_per_beam_s: f64,
    pub rescan_period_s: f64,
    pub reestablish_budget_s: f64,
    pub min_rssi: PowerDbm,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            dwell_per_beam_s: 0.005,
            rescan_period_s: 10.0,
            reestablish_budget_s: 0.200,
            min_rssi: PowerDbm::new(-90.0),
        }
    }
}

impl SweepConfig {
    /// Validate for a set of `n_beams`; the scan must fit both the
    /// reestablishment budget and the rescan period.
    pub fn accept(self, n_beams: usize) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidSweepConfig(m));
        if !(self.dwell_per_beam_s > 0.0 && self.dwell_per_beam_s.is_finite()) {
            return bad(format!("dwell {} s must be positive", self.dwell_per_beam_s));
        }
        if !(self.reestablish_budget_s > 0.0 && self.reestablish_budget_s.is_finite()) {
            return bad(format!("budget {} s must be positive", self.reestablish_budget_s));
        }
        ensure_finite("min rssi", self.min_rssi.value())?;
        let scan = scan_duration(n_beams, &self)?;
        if !(self.rescan_period_s > scan) {
            return bad(format!("rescan period {} s not longer than scan {} s", self.rescan_period_s, scan));
        }
        Ok(self)
    }
}

/// Argmax with ties resolved toward the lowest index.
pub fn select_beam(rssi_per_beam: &[PowerDbm]) -> Result<usize> {
    let (first, rest) = rssi_per_beam.split_first().ok_or(Error::EmptyRssiList)?;
    let mut best = (0, *first);
    for (i, r) in rest.iter().enumerate() {
        if r.value() > best.1.value() {
            best = (i + 1, *r);
        }
    }
    Ok(best.0)
}

pub fn scan_duration(n_beams: usize, cfg: &SweepConfig) -> Result<f64> {
    if n_beams == 0 {
        return Err(Error::InvalidSweepConfig("at least one beam is required".into()));
    }
    let scan_s = n_beams as f64 * cfg.dwell_per_beam_s;
    if scan_s > cfg.reestablish_budget_s {
        return Err(Error::BudgetExceeded { scan_s, budget_s: cfg.reestablish_budget_s });
    }
    Ok(scan_s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeamControlState {
    pub phase: Phase,
    pub best: Option<(BeamId, PowerDbm)>,
    /// Time spent in the current scan.
    pub scan_clock_s: f64,
    samples: Vec<PowerDbm>,
    beam_ids: Vec<BeamId>,
}

impl BeamControlState {
    pub fn new(beam_ids: Vec<BeamId>) -> Result<Self> {
        if beam_ids.is_empty() {
            return Err(Error::InvalidBeamSet("no beams configured".into()));
        }
        Ok(Self { phase: Phase::Idle, best: None, scan_clock_s: 0.0, samples: Vec::new(), beam_ids })
    }

    pub fn samples(&self) -> &[PowerDbm] {
        &self.samples
    }

    pub fn beam_ids(&self) -> &[BeamId] {
        &self.beam_ids
    }

    /// Beam currently addressed by the phase, if any.
    pub fn current_beam(&self) -> Option<BeamId> {
        match self.phase {
            Phase::Scanning(i) => self.beam_ids.get(i).copied(),
            Phase::Selected(id) => Some(id),
            _ => None,
        }
    }

    fn start_scan(&mut self) {
        self.samples.clear();
        self.best = None;
        self.scan_clock_s = 0.0;
    }
}

/// Apply one event. Invalid events leave `state` untouched.
pub fn step(state: &BeamControlState, event: Event, cfg: &SweepConfig) -> Result<(BeamControlState, Vec<Action>)> {
    let mut next = state.clone();
    let mut actions = Vec::new();
    match (state.phase, event) {
        (Phase::Idle, Event::Init) => {
            next.phase = Phase::AwaitPilot;
            actions.push(Action::RequestPilot);
        }
        (Phase::AwaitPilot, Event::PilotConfirmed) => {
            next.start_scan();
            next.phase = Phase::Scanning(0);
            actions.push(Action::SteerScanBeam(next.beam_ids[0]));
        }
        (Phase::Scanning(i), Event::RssiSample(rssi)) => {
            ensure_finite("rssi sample", rssi.value())?;
            next.samples.push(rssi);
            next.scan_clock_s += cfg.dwell_per_beam_s;
            let id = next.beam_ids[i];
            if next.best.is_none_or(|(_, b)| rssi.value() > b.value()) {
                next.best = Some((id, rssi));
            }
            if i + 1 < next.beam_ids.len() {
                next.phase = Phase::Scanning(i + 1);
                actions.push(Action::SteerScanBeam(next.beam_ids[i + 1]));
            } else {
                let idx = select_beam(&next.samples)?;
                let chosen = next.beam_ids[idx];
                next.best = Some((chosen, next.samples[idx]));
                if next.samples[idx].value() >= cfg.min_rssi.value() {
                    next.phase = Phase::Selected(chosen);
                    actions.push(Action::ConfigureBeam(chosen));
                } else {
                    next.phase = Phase::LinkDown;
                    actions.push(Action::ReportLinkDown);
                }
            }
        }
        (Phase::Selected(_), Event::RescanTimer) => {
            next.phase = Phase::AwaitPilot;
            actions.push(Action::Interruption { duration_s: next.beam_ids.len() as f64 * cfg.dwell_per_beam_s });
            actions.push(Action::RequestPilot);
        }
        (Phase::LinkDown, Event::RetryTimer) => {
            next.phase = Phase::AwaitPilot;
            actions.push(Action::RequestPilot);
        }
        (phase, event) => {
            return Err(Error::MalformedEvent { phase: format!("{phase:?}"), event: event.to_string() });
        }
    }
    Ok((next, actions))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogEntry {
    pub timestamp_s: f64,
    pub phase: Phase,
    pub beam_id: Option<BeamId>,
    pub rssi: Option<PowerDbm>,
}

impl LogEntry {
    pub const HEADER: &'static str = "timestamp_s,phase,beam_id,rssi_dbm";

    /// Empty fields where the phase has no beam or sample.
    pub fn to_csv(entries: &[LogEntry]) -> String {
        let mut out = String::from(Self::HEADER);
        out.push('\n');
        for e in entries {
            let beam = e.beam_id.map(|b| b.0.to_string()).unwrap_or_default();
            let rssi = e.rssi.map(|r| format!("{:.3}", r.value())).unwrap_or_default();
            out.push_str(&format!("{:.3},{},{},{}\n", e.timestamp_s, e.phase.name(), beam, rssi));
        }
        out
    }
}

/// Single-owner wrapper that applies events in order and keeps an event log.
#[derive(Debug, Clone)]
pub struct BeamController {
    state: BeamControlState,
    cfg: SweepConfig,
    log: Vec<LogEntry>,
    interruptions: Vec<f64>,
}

impl BeamController {
    pub fn new(beam_ids: Vec<BeamId>, cfg: SweepConfig) -> Result<Self> {
        let cfg = cfg.accept(beam_ids.len())?;
        Ok(Self { state: BeamControlState::new(beam_ids)?, cfg, log: Vec::new(), interruptions: Vec::new() })
    }

    pub fn state(&self) -> &BeamControlState {
        &self.state
    }

    pub fn config(&self) -> &SweepConfig {
        &self.cfg
    }

    pub fn log(&self) -> &[LogEntry] {
        &self.log
    }

    pub fn interruptions(&self) -> &[f64] {
        &self.interruptions
    }

    pub fn apply(&mut self, event: Event, timestamp_s: f64) -> Result<Vec<Action>> {
        let (next, actions) = step(&self.state, event, &self.cfg)?;
        let rssi = match event {
            Event::RssiSample(r) => Some(r),
            _ => match next.phase {
                Phase::Selected(_) | Phase::LinkDown => next.best.map(|(_, r)| r),
                _ => None,
            },
        };
        let beam_id = match (event, self.state.phase) {
            (Event::RssiSample(_), Phase::Scanning(i)) => Some(self.state.beam_ids[i]),
            _ => next.current_beam(),
        };
        self.state = next;
        for a in &actions {
            if let Action::Interruption { duration_s } = a {
                self.interruptions.push(*duration_s);
            }
        }
        self.log.push(LogEntry { timestamp_s, phase: self.state.phase, beam_id, rssi });
        Ok(actions)
    }
}

/// Drive a controller for `duration_s` with fixed per-beam RSSI.
///
/// The pilot request is answered instantly over an out-of-band control
/// channel. Optional Gaussian noise (sigma in dB) perturbs every sample.
pub fn run_trace(
    beam_ids: Vec<BeamId>,
    rssi_per_beam: &[PowerDbm],
    cfg: SweepConfig,
    duration_s: f64,
    noise_sigma_db: f64,
    seed: u64,
) -> Result<BeamController> {
    if rssi_per_beam.len() != beam_ids.len() {
        return Err(Error::InvalidBeamSet(format!(
            "{} rssi values for {} beams",
            rssi_per_beam.len(),
            beam_ids.len()
        )));
    }
    let mut ctl = BeamController::new(beam_ids, cfg)?;
    let noise = if noise_sigma_db > 0.0 { Some(Shadowing::new(noise_sigma_db)?) } else { None };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dwell = ctl.cfg.dwell_per_beam_s;
    let period = ctl.cfg.rescan_period_s;

    let mut t = 0.0;
    ctl.apply(Event::Init, t)?;
    loop {
        ctl.apply(Event::PilotConfirmed, t)?;
        for r in rssi_per_beam {
            t += dwell;
            let sample = match &noise {
                Some(n) => *r + n.sample(&mut rng),
                None => *r,
            };
            ctl.apply(Event::RssiSample(sample), t)?;
        }
        t += period;
        if t > duration_s {
            break;
        }
        match ctl.state.phase {
            Phase::Selected(_) => ctl.apply(Event::RescanTimer, t)?,
            _ => ctl.apply(Event::RetryTimer, t)?,
        };
    }
    Ok(ctl)
}

/// Uniform offset helper used by the invariance checks.
pub fn offset_all(rssi: &[PowerDbm], by: GainDb) -> Vec<PowerDbm> {
    rssi.iter().map(|r| *r + by).collect()
}
