//! Secure integrated sensing and semantic communication beamforming.
//!
//! A transmitter with an `N`-element uniform linear array serves `K`
//! single-antenna communication users with semantically compressed downlink
//! messages while probing `L` point targets that double as potential
//! eavesdroppers. This crate provides everything needed to design and audit
//! transmit covariances for that setting:
//!
//! - [`scenario`]: experiment configuration files, unit conversion, and
//!   deterministic channel synthesis.
//! - [`sensing`]: steering vectors, Fisher information, Cramér-Rao bounds,
//!   echo simulation, and a maximum-likelihood angle estimation oracle.
//! - [`semantics`]: semantic transmission rate, BLEU-derived extraction-ratio
//!   bounds, worst-case semantic secrecy rate, and the power model.
//! - [`sdpcore`]: a small solver-agnostic semidefinite-program modeling layer
//!   with Hermitian matrix variables and a conic backend.
//! - [`optimizer`]: the alternating robust design loop — SCA-linearized
//!   beamforming SDP, certified eavesdropper-SINR bounds via the S-procedure,
//!   extraction-ratio bisection, and Gaussian randomization.
//! - [`report`]: persisted run reports, sweep tables, and re-verification.
//! - [`validate`]: the independent numerical oracle suite.

pub mod metrics;
pub mod optimizer;
pub mod report;
pub mod scenario;
pub mod sdpcore;
pub mod semantics;
pub mod sensing;
pub mod validate;

pub use metrics::SolutionMetrics;
pub use optimizer::{run_algorithm1, run_benchmark, BeamformingSolution, DesignMode};
pub use report::{RunReport, RunStatus, SweepRow, SweepTable};
pub use scenario::{dbm_to_watts, load_scenario, synthesize_channels, watts_to_dbm};
pub use scenario::{ChannelSet, ScenarioConfig};
pub use sdpcore::{check_psd, check_psd_complex, embed_hermitian, SdpProblem, SolveOutcome};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;
/// Dense complex vector.
pub type CVector = nalgebra::DVector<C64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense real matrix.
pub type RMatrix = nalgebra::DMatrix<f64>;
