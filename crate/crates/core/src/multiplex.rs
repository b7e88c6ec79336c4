//! Donor-link multiplexing of several sub-6 GHz cells.
//!
//! Cells get frequency slots inside the mmWave passband (FDMA). Two cells
//! may share a slot (SDMA) when their service directions, seen from the
//! donor, are at least `min_sep_deg` apart. Minimising the number of slots
//! is a minimum colouring of the conflict graph whose edges join cells that
//! are too close in angle.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{ensure_finite, Error, Result};
use crate::propagation::fold_angle;
use crate::units::{BandwidthHz, FrequencyHz, Passband};

/// Instances up to this size are coloured exactly.
pub const EXACT_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct CellRequest {
    pub cell_id: String,
    pub sub6_bandwidth: BandwidthHz,
    pub azimuth_deg: f64,
}

impl CellRequest {
    pub fn new(cell_id: impl Into<String>, sub6_bandwidth: BandwidthHz, azimuth_deg: f64) -> Result<Self> {
        let az = ensure_finite("azimuth", azimuth_deg)?;
        if !(0.0..360.0).contains(&az) {
            return Err(Error::OutOfRange { what: "azimuth", value: az });
        }
        Ok(Self { cell_id: cell_id.into(), sub6_bandwidth, azimuth_deg: az })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slot {
    pub index: usize,
    pub center: FrequencyHz,
    pub width: BandwidthHz,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub cell_id: String,
    pub slot_index: usize,
    pub slot_center: FrequencyHz,
    pub azimuth_deg: f64,
}

/// Assignments are listed in request order.
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationPlan {
    pub assignments: Vec<Assignment>,
    pub slots: Vec<Slot>,
}

impl AllocationPlan {
    pub fn slots_used(&self) -> usize {
        self.slots.len()
    }

    /// `cell_id,slot_index,center_hz,azimuth_deg`
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cell_id,slot_index,center_hz,azimuth_deg\n");
        for a in &self.assignments {
            let _ = writeln!(out, "{},{},{:.3},{:.3}", a.cell_id, a.slot_index, a.slot_center.value(), a.azimuth_deg);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Allocation {
    Feasible(AllocationPlan),
    Infeasible { slots_needed: usize, capacity: usize },
}

pub fn fdma_capacity(band: &Passband, cell_bw: BandwidthHz, guard_hz: f64) -> usize {
    let guard = guard_hz.max(0.0);
    let n = (band.width_hz() + guard) / (cell_bw.value() + guard);
    // absorb rounding on exact fits
    (n + 1e-9).floor() as usize
}

pub fn angular_separation(a_deg: f64, b_deg: f64) -> f64 {
    fold_angle(a_deg - b_deg)
}

pub fn default_min_separation(beamwidth_3db_deg: f64) -> f64 {
    1.5 * beamwidth_3db_deg
}

pub fn slot_center(band: &Passband, width_hz: f64, guard_hz: f64, index: usize) -> f64 {
    band.lo().value() + width_hz / 2.0 + index as f64 * (width_hz + guard_hz)
}

struct ConflictGraph {
    adj: Vec<Vec<bool>>,
}

impl ConflictGraph {
    fn new(requests: &[CellRequest], order: &[usize], min_sep_deg: f64) -> Self {
        let n = order.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let sep = angular_separation(requests[order[i]].azimuth_deg, requests[order[j]].azimuth_deg);
                if sep < min_sep_deg {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
        }
        Self { adj }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn first_fit(&self) -> Vec<usize> {
        let mut colors: Vec<usize> = Vec::with_capacity(self.len());
        for v in 0..self.len() {
            let taken: HashSet<usize> = (0..v).filter(|&u| self.adj[v][u]).map(|u| colors[u]).collect();
            colors.push((0..).find(|c| !taken.contains(c)).unwrap_or(0));
        }
        colors
    }

    /// Backtracking search for a colouring with at most `k` colours.
    /// A vertex never opens more than one new colour, so the first solution
    /// found is canonical.
    fn color_with(&self, k: usize) -> Option<Vec<usize>> {
        let mut colors = vec![usize::MAX; self.len()];
        if self.extend(0, k, 0, &mut colors) {
            Some(colors)
        } else {
            None
        }
    }

    fn extend(&self, v: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
        if v == self.len() {
            return true;
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if (0..v).any(|u| self.adj[v][u] && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if self.extend(v + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    fn min_coloring(&self) -> Vec<usize> {
        let greedy = self.first_fit();
        let upper = greedy.iter().max().map_or(0, |m| m + 1);
        if self.len() > EXACT_LIMIT {
            return greedy;
        }
        for k in 1..upper {
            if let Some(c) = self.color_with(k) {
                return c;
            }
        }
        greedy
    }
}

/// Plan slots for `requests`. Cells are visited in azimuth order; slots are
/// packed upward from the low band edge with a common width equal to the
/// widest requested cell.
pub fn allocate(requests: &[CellRequest], band: &Passband, guard_hz: f64, min_sep_deg: f64) -> Result<Allocation> {
    if requests.is_empty() {
        return Err(Error::NoCellRequests);
    }
    let guard = ensure_finite("guard band", guard_hz)?;
    if guard < 0.0 {
        return Err(Error::OutOfRange { what: "guard band", value: guard });
    }
    ensure_finite("minimum angular separation", min_sep_deg)?;
    let mut seen = HashSet::new();
    for r in requests {
        if !seen.insert(r.cell_id.as_str()) {
            return Err(Error::DuplicateCellId(r.cell_id.clone()));
        }
    }

    let width = requests.iter().map(|r| r.sub6_bandwidth.value()).fold(0.0, f64::max);
    let width_bw = BandwidthHz::new(width)?;
    let capacity = fdma_capacity(band, width_bw, guard);

    let mut order: Vec<usize> = (0..requests.len()).collect();
    order.sort_by(|&a, &b| requests[a].azimuth_deg.total_cmp(&requests[b].azimuth_deg).then(a.cmp(&b)));
    let graph = ConflictGraph::new(requests, &order, min_sep_deg);
    let colors = graph.min_coloring();
    let needed = colors.iter().max().map_or(0, |m| m + 1);
    if needed > capacity {
        return Ok(Allocation::Infeasible { slots_needed: needed, capacity });
    }

    let slots = (0..needed)
        .map(|index| {
            Ok(Slot {
                index,
                center: FrequencyHz::new(slot_center(band, width, guard, index))?,
                width: width_bw,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut slot_of = vec![0usize; requests.len()];
    for (pos, &req) in order.iter().enumerate() {
        slot_of[req] = colors[pos];
    }
    let assignments = requests
        .iter()
        .zip(&slot_of)
        .map(|(r, &s)| Assignment {
            cell_id: r.cell_id.clone(),
            slot_index: s,
            slot_center: slots[s].center,
            azimuth_deg: r.azimuth_deg,
        })
        .collect();
    Ok(Allocation::Feasible(AllocationPlan { assignments, slots }))
}
