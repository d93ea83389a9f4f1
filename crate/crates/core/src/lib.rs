//! EEG brain-age pipeline core.
//!
//! Everything needed to go from raw multichannel recordings to cross-model
//! feature-importance agreement: preprocessing ([`signal`]), the measure
//! catalogue and training-set assembly ([`features`]), a ten-family
//! regression model zoo ([`models`]), Shapley-value attribution ([`explain`]),
//! rank-correlation agreement and hypothesis replication ([`agreement`]),
//! a synthetic corpus generator with planted ground truth ([`synth`]) and
//! deterministic SVG reports ([`report`]).
//!
//! All randomized operations take explicit seeds and are bit-reproducible;
//! see the workspace README for the CLI that wires these modules into a
//! pipeline.

pub mod agreement;
pub mod dsp;
pub mod error;
pub mod explain;
pub mod features;
pub mod io;
pub mod linalg;
pub mod models;
pub mod report;
pub mod seed;
pub mod signal;
pub mod synth;

pub use error::{Error, Result};
