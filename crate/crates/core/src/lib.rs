//! Simulator for an out-of-band mmWave repeater that carries a sub-6 GHz
//! cell over a 38-40 GHz fronthaul hop and re-radiates it at the far end.
//!
//! Signals are power and SNR scalars throughout. The building blocks are:
//!
//! - [`units`]: dB arithmetic and unit-checked scalars
//! - [`rf_chain`]: Friis cascade, LO frequency plan, duplex rules
//! - [`propagation`]: free-space loss, antenna patterns, beam sets
//! - [`link_budget`]: per-hop and amplify-and-forward SNR, EVM, RSRP
//! - [`throughput`]: capped Shannon SNIR-to-rate mapping
//! - [`beam_control`]: donor beam sweep state machine
//! - [`multiplex`]: FDMA/SDMA slot planning for several cells
//! - [`scenario`]: presets, noise calibration and the distance sweep
//!
//! Runnable walkthroughs of each piece live in `examples/`.

pub mod beam_control;
pub mod cli;
pub mod error;
pub mod link_budget;
pub mod manifest;
pub mod multiplex;
pub mod propagation;
pub mod rf_chain;
pub mod scenario;
pub mod throughput;
pub mod units;

pub use error::{Error, Result};
