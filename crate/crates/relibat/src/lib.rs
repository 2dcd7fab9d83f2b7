//! Two-terminal reliability of binary-state networks whose arc
//! reliabilities decay over time.
//!
//! The crate provides, end to end:
//!
//! * exhaustive state enumeration by binary addition ([`bat`]) with layered
//!   connectivity search ([`plsa`]) for exact reliability;
//! * crude and stratified Monte Carlo estimators ([`mcs`], [`batmcs`]) with
//!   reproducible per-stream randomness ([`rng`]);
//! * arc-degradation laws and the labeled, normalized, windowed time-series
//!   datasets built from them ([`decay`], [`dataset`]);
//! * a self-contained single-layer LSTM regressor trained with Adam to
//!   forecast next-step reliability ([`lstm`]).
//!
//! The numeric core is generic over [`Scalar`] (`f32` or `f64`); type
//! defaults and the CLI use `f64`.

pub mod bat;
pub mod batmcs;
pub mod dataset;
pub mod decay;
pub mod error;
pub mod lstm;
pub mod mcs;
pub mod network;
pub mod plsa;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use batmcs::{
    allocate_simulations, bat_mcs_estimate, exact_reliability, lower_extension, multi_run_average,
    upper_extension, BatMcsConfig, BatMcsRun, MultiRunResult, StratumReport, StratumStatus,
};
pub use bat::BatCursor;
pub use dataset::{
    label_dataset, mean_normalize, window_split, ColumnStats, NormalizedDataset,
    ReliabilityDataset, WindowBlock,
};
pub use decay::{build_distribution, DecayLaw, DecaySpec, InitialReliability};
pub use lstm::{
    adam_step, gradients, load_model, loss, param_count, save_model, train, AdamHyper, AdamState,
    CellState, EpochRecord, Gate, GateTrace, LstmDims, LstmParams, SavedModel, TrainConfig,
    TrainOutcome,
};
pub use mcs::{mcs_estimate, required_simulations, sample_state, McsConfig, McsResult};
pub use network::{
    parse_network, supervector_probability, vector_probability, Network, ParsedNetwork,
    StateVector, Supervector, TimeDistribution,
};
pub use plsa::{LayerTrace, Verdict};
