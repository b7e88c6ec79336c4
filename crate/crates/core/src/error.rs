use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("rf chain has no stages")]
    EmptyChain,

    #[error("invalid stage: {0}")]
    InvalidStage(String),

    #[error("image at {image_hz} Hz falls inside the passband")]
    ImageNotRejected { image_hz: f64 },

    #[error("conversion product at {frequency_hz} Hz falls outside the passband")]
    OutOfPassband { frequency_hz: f64 },

    #[error("invalid duplex configuration: {0}")]
    InvalidDuplexConfig(String),

    #[error("transmitter and receiver positions coincide")]
    CoincidentPositions,

    #[error("invalid beam set: {0}")]
    InvalidBeamSet(String),

    #[error("at least one hop is required")]
    EmptyHopList,

    #[error("invalid throughput parameters: {0}")]
    InvalidThroughputParams(String),

    #[error("rssi list is empty")]
    EmptyRssiList,

    #[error("event {event} is not valid in phase {phase}")]
    MalformedEvent { phase: String, event: String },

    #[error("scan of {scan_s} s exceeds reestablishment budget of {budget_s} s")]
    BudgetExceeded { scan_s: f64, budget_s: f64 },

    #[error("invalid sweep config: {0}")]
    InvalidSweepConfig(String),

    #[error("duplicate cell id {0:?}")]
    DuplicateCellId(String),

    #[error("no cell requests")]
    NoCellRequests,

    #[error("series is not sorted by distance")]
    UnsortedSeries,

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("config: {0}")]
    Config(String),
}

pub(crate) fn ensure_finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}
