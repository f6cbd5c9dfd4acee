//! Experiment configuration and channel synthesis.
//!
//! A scenario file is a TOML document whose keys mirror [`ScenarioConfig`]
//! field names one-to-one. Angles are given in degrees in the file and
//! converted to radians wherever geometry is evaluated; powers are given in
//! dBm and converted to watts. Complex values are `[re, im]` pairs.
//!
//! ```toml
//! n_antennas = 8
//! cu_angles = [-30.0, 20.0]
//! target_angles = [-35.0, 5.0, 40.0]
//! noise_comm_dbm = -30.0
//! noise_sense_dbm = -30.0
//! power_budget_dbm = 20.0
//! iota = 1.1
//! kappa = 0.5
//! qos_threshold = 1.0
//! error_radius = [0.01, 0.01, 0.01]
//!
//! [[bleu_params]]
//! rho_lower = 0.4            # direct lower bound for CU 1
//!
//! [[bleu_params]]            # or derived from BLEU targets for CU 2
//! global_bound = 0.6
//! weights = [0.25, 0.25, 0.25, 0.25]
//! precisions = [0.9, 0.85, 0.8, 0.75]
//! ```
//!
//! Channel synthesis is fully deterministic given `(config, seed)`: target
//! channels are `alpha_l * a(theta_l)` by construction, CU channels default to
//! unit-gain line-of-sight steering at the configured CU angles, with an
//! optional seeded Rician mode for Monte Carlo studies.

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

use crate::semantics::{self, SemanticsError};
use crate::sensing::steering_vector;
use crate::{C64, CVector};

/// Errors raised while loading or validating a scenario.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("failed to read scenario file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse scenario file: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid field `{field}`: {reason}")]
    Invariant { field: &'static str, reason: String },
}

impl ScenarioError {
    fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Self::Invariant {
            field,
            reason: reason.into(),
        }
    }
}

/// Per-CU semantic compression limits: either a direct lower bound on the
/// extraction ratio, or BLEU targets it is derived from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BleuParams {
    /// Direct override of the extraction-ratio lower bound.
    Bound { rho_lower: f64 },
    /// BLEU target: global bound `Q`, n-gram weights and precisions.
    Bleu {
        global_bound: f64,
        weights: Vec<f64>,
        precisions: Vec<f64>,
    },
}

impl BleuParams {
    /// Resolve the extraction-ratio lower bound for this CU.
    pub fn rho_lower(&self) -> Result<f64, SemanticsError> {
        match self {
            BleuParams::Bound { rho_lower } => Ok(*rho_lower),
            BleuParams::Bleu {
                global_bound,
                weights,
                precisions,
            } => semantics::rho_lower_bound(*global_bound, weights, precisions),
        }
    }
}

/// CU channel model used by [`synthesize_channels`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CuChannelModel {
    /// Unit-gain line-of-sight steering at the configured CU angle.
    Los,
    /// Rician: LoS component plus seeded complex-Gaussian scatter.
    Rician,
}

fn default_spacing() -> f64 {
    0.5
}
fn default_f_coeff() -> f64 {
    0.01
}
fn default_snapshots() -> usize {
    1
}
fn default_solver_tol() -> f64 {
    1e-8
}
fn default_outer_tol() -> f64 {
    1e-4
}
fn default_max_outer_iters() -> usize {
    50
}
fn default_randomization_count() -> usize {
    100
}
fn default_inner_tol() -> f64 {
    1e-4
}
fn default_max_inner_iters() -> usize {
    20
}
fn default_cu_channel_model() -> CuChannelModel {
    CuChannelModel::Los
}
fn default_rician_k_factor() -> f64 {
    10.0
}
fn default_pathloss() -> C64 {
    C64::new(0.1, 0.0)
}

/// Full experiment description. See the module docs for the file schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    /// Number of transmit antennas `N`.
    pub n_antennas: usize,
    /// Element spacing over wavelength `d / lambda`.
    #[serde(default = "default_spacing")]
    pub spacing_ratio: f64,
    /// CU angles in degrees, each within [-90, 90].
    pub cu_angles: Vec<f64>,
    /// Target (eavesdropper) angles in degrees, each within [-90, 90].
    pub target_angles: Vec<f64>,
    /// Communication noise power in dBm.
    pub noise_comm_dbm: f64,
    /// Sensing noise power in dBm.
    pub noise_sense_dbm: f64,
    /// Post-matched-filter echo noise power in dBm; defaults to the
    /// sensing noise power when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise_echo_dbm: Option<f64>,
    /// Total power budget in dBm.
    pub power_budget_dbm: f64,
    /// Word-to-bit conversion scalar.
    pub iota: f64,
    /// Trade-off weight shared by the secrecy and sensing objective parts.
    pub kappa: f64,
    /// Per-CU semantic-rate floor (bits).
    pub qos_threshold: f64,
    /// Channel-error ball radius per target.
    pub error_radius: Vec<f64>,
    /// Computational-power coefficient (watts per unit magnitude).
    #[serde(default = "default_f_coeff")]
    pub f_coeff: f64,
    /// Number of sensing snapshots.
    #[serde(default = "default_snapshots")]
    pub snapshots: usize,
    /// One-way path-loss coefficient per target; defaults to 0.1 each.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pathloss_oneway: Option<Vec<C64>>,
    /// Round-trip path-loss coefficient per target; defaults to 0.1 each.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pathloss_roundtrip: Option<Vec<C64>>,
    /// Per-CU BLEU targets or direct extraction-ratio lower bounds.
    pub bleu_params: Vec<BleuParams>,
    /// Base RNG seed for channel synthesis and randomization.
    #[serde(default)]
    pub seed: u64,
    /// Conic solver tolerance.
    #[serde(default = "default_solver_tol")]
    pub solver_tol: f64,
    /// Outer-loop objective-change stopping threshold.
    #[serde(default = "default_outer_tol")]
    pub outer_tol: f64,
    /// Inner step thresholds (Frobenius on beam updates, absolute on the
    /// certified eavesdropper bounds).
    #[serde(default = "default_inner_tol")]
    pub inner_tol: f64,
    /// Maximum outer iterations.
    #[serde(default = "default_max_outer_iters")]
    pub max_outer_iters: usize,
    /// Maximum inner SCA iterations per outer pass.
    #[serde(default = "default_max_inner_iters")]
    pub max_inner_iters: usize,
    /// Gaussian randomization sample count.
    #[serde(default = "default_randomization_count")]
    pub randomization_count: usize,
    /// CU channel model.
    #[serde(default = "default_cu_channel_model")]
    pub cu_channel_model: CuChannelModel,
    /// Rician K-factor (linear) used when `cu_channel_model = "rician"`.
    #[serde(default = "default_rician_k_factor")]
    pub rician_k_factor: f64,
    /// Rescale the two objective parts by their magnitudes at the initial
    /// iterate instead of using the raw trade-off weights.
    #[serde(default)]
    pub normalize_objective: bool,
}

impl ScenarioConfig {
    /// Number of communication users.
    pub fn n_cus(&self) -> usize {
        self.cu_angles.len()
    }

    /// Number of targets.
    pub fn n_targets(&self) -> usize {
        self.target_angles.len()
    }

    /// CU angles in radians.
    pub fn cu_angles_rad(&self) -> Vec<f64> {
        self.cu_angles.iter().map(|a| a.to_radians()).collect()
    }

    /// Target angles in radians.
    pub fn target_angles_rad(&self) -> Vec<f64> {
        self.target_angles.iter().map(|a| a.to_radians()).collect()
    }

    /// Communication noise power in watts.
    pub fn noise_comm_w(&self) -> f64 {
        dbm_to_watts(self.noise_comm_dbm)
    }

    /// Sensing noise power in watts.
    pub fn noise_sense_w(&self) -> f64 {
        dbm_to_watts(self.noise_sense_dbm)
    }

    /// Echo noise power in watts (defaults to the sensing noise power).
    pub fn noise_echo_w(&self) -> f64 {
        dbm_to_watts(self.noise_echo_dbm.unwrap_or(self.noise_sense_dbm))
    }

    /// Power budget in watts.
    pub fn power_budget_w(&self) -> f64 {
        dbm_to_watts(self.power_budget_dbm)
    }

    /// One-way path-loss coefficients, with defaults filled in.
    pub fn alpha(&self) -> Vec<C64> {
        self.pathloss_oneway
            .clone()
            .unwrap_or_else(|| vec![default_pathloss(); self.n_targets()])
    }

    /// Round-trip path-loss coefficients, with defaults filled in.
    pub fn beta(&self) -> Vec<C64> {
        self.pathloss_roundtrip
            .clone()
            .unwrap_or_else(|| vec![default_pathloss(); self.n_targets()])
    }

    /// Resolved per-CU extraction-ratio lower bounds.
    pub fn rho_lower_bounds(&self) -> Result<Vec<f64>, ScenarioError> {
        self.bleu_params
            .iter()
            .map(|b| {
                b.rho_lower().map_err(|e| {
                    ScenarioError::invalid("bleu_params", format!("unusable BLEU target: {e}"))
                })
            })
            .collect()
    }

    /// Check every structural invariant, naming the offending field.
    pub fn validate(&self) -> Result<(), ScenarioError> {
        let k = self.n_cus();
        let l = self.n_targets();
        if k == 0 {
            return Err(ScenarioError::invalid("cu_angles", "at least one CU required"));
        }
        if l == 0 {
            return Err(ScenarioError::invalid(
                "target_angles",
                "at least one target required",
            ));
        }
        if self.n_antennas < k + l {
            return Err(ScenarioError::invalid(
                "n_antennas",
                format!(
                    "need N >= K + L spatial degrees of freedom (N={}, K={k}, L={l})",
                    self.n_antennas
                ),
            ));
        }
        if !(self.spacing_ratio > 0.0) {
            return Err(ScenarioError::invalid("spacing_ratio", "must be > 0"));
        }
        for (field, angles) in [("cu_angles", &self.cu_angles), ("target_angles", &self.target_angles)] {
            if let Some(a) = angles.iter().find(|a| !a.is_finite() || a.abs() > 90.0) {
                return Err(ScenarioError::invalid(
                    field,
                    format!("angle {a} deg outside [-90, 90]"),
                ));
            }
        }
        if !(self.iota > 0.0) {
            return Err(ScenarioError::invalid("iota", "must be > 0"));
        }
        if !(0.0..=1.0).contains(&self.kappa) {
            return Err(ScenarioError::invalid("kappa", "must be in [0, 1]"));
        }
        if !(self.qos_threshold >= 0.0) {
            return Err(ScenarioError::invalid("qos_threshold", "must be >= 0"));
        }
        if !(self.f_coeff > 0.0) {
            return Err(ScenarioError::invalid("f_coeff", "must be > 0"));
        }
        if self.snapshots == 0 {
            return Err(ScenarioError::invalid("snapshots", "must be >= 1"));
        }
        if !(self.power_budget_w() > 0.0) || !self.power_budget_dbm.is_finite() {
            return Err(ScenarioError::invalid(
                "power_budget_dbm",
                "must convert to strictly positive watts",
            ));
        }
        if self.error_radius.len() != l {
            return Err(ScenarioError::invalid(
                "error_radius",
                format!("expected {l} entries, got {}", self.error_radius.len()),
            ));
        }
        if let Some(e) = self.error_radius.iter().find(|e| !(**e >= 0.0)) {
            return Err(ScenarioError::invalid("error_radius", format!("radius {e} < 0")));
        }
        for (field, pl) in [
            ("pathloss_oneway", &self.pathloss_oneway),
            ("pathloss_roundtrip", &self.pathloss_roundtrip),
        ] {
            if let Some(v) = pl {
                if v.len() != l {
                    return Err(ScenarioError::invalid(
                        field,
                        format!("expected {l} entries, got {}", v.len()),
                    ));
                }
            }
        }
        if self.bleu_params.len() != k {
            return Err(ScenarioError::invalid(
                "bleu_params",
                format!("expected {k} per-CU entries, got {}", self.bleu_params.len()),
            ));
        }
        for (idx, b) in self.bleu_params.iter().enumerate() {
            match b {
                BleuParams::Bound { rho_lower } => {
                    if !(*rho_lower > 0.0 && *rho_lower <= 1.0) {
                        return Err(ScenarioError::invalid(
                            "bleu_params",
                            format!("CU {idx}: rho_lower {rho_lower} outside (0, 1]"),
                        ));
                    }
                }
                BleuParams::Bleu {
                    global_bound,
                    weights,
                    precisions,
                } => {
                    if !(*global_bound > 0.0 && *global_bound <= 1.0) {
                        return Err(ScenarioError::invalid(
                            "bleu_params",
                            format!("CU {idx}: global_bound {global_bound} outside (0, 1]"),
                        ));
                    }
                    if weights.len() != precisions.len() || weights.is_empty() {
                        return Err(ScenarioError::invalid(
                            "bleu_params",
                            format!("CU {idx}: weights/precisions length mismatch"),
                        ));
                    }
                    let wsum: f64 = weights.iter().sum();
                    if (wsum - 1.0).abs() > 1e-9 {
                        return Err(ScenarioError::invalid(
                            "bleu_params",
                            format!("CU {idx}: weights sum to {wsum}, expected 1 within 1e-9"),
                        ));
                    }
                    if let Some(p) = precisions.iter().find(|p| !(**p > 0.0 && **p <= 1.0)) {
                        return Err(ScenarioError::invalid(
                            "bleu_params",
                            format!("CU {idx}: precision {p} outside (0, 1]"),
                        ));
                    }
                    // Fail early if the BLEU target is unreachable.
                    b.rho_lower().map_err(|e| {
                        ScenarioError::invalid("bleu_params", format!("CU {idx}: {e}"))
                    })?;
                }
            }
        }
        for (field, v) in [
            ("solver_tol", self.solver_tol),
            ("outer_tol", self.outer_tol),
            ("inner_tol", self.inner_tol),
        ] {
            if !(v > 0.0) {
                return Err(ScenarioError::invalid(field, "must be > 0"));
            }
        }
        if self.max_outer_iters == 0 || self.max_inner_iters == 0 {
            return Err(ScenarioError::invalid("max_outer_iters", "must be >= 1"));
        }
        if !(self.rician_k_factor >= 0.0) {
            return Err(ScenarioError::invalid("rician_k_factor", "must be >= 0"));
        }
        Ok(())
    }
}

/// Synthesized channels for one scenario realization.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSet {
    /// CU channels `h_k`, each of length `N`.
    pub cu_channels: Vec<CVector>,
    /// Estimated target channels `alpha_l * a(theta_l)`.
    pub target_channels_est: Vec<CVector>,
    /// Target angles in radians.
    pub target_angles_rad: Vec<f64>,
    /// One-way path-loss coefficients.
    pub alpha: Vec<C64>,
    /// Round-trip path-loss coefficients.
    pub beta: Vec<C64>,
    /// Channel-error ball radius per target.
    pub error_radius: Vec<f64>,
    /// Communication noise power (watts).
    pub noise_comm_w: f64,
    /// Sensing noise power (watts).
    pub noise_sense_w: f64,
}

impl ChannelSet {
    pub fn n_cus(&self) -> usize {
        self.cu_channels.len()
    }

    pub fn n_targets(&self) -> usize {
        self.target_channels_est.len()
    }
}

/// Convert a dBm power level to watts.
pub fn dbm_to_watts(p_dbm: f64) -> f64 {
    10f64.powf((p_dbm - 30.0) / 10.0)
}

/// Convert watts to dBm.
pub fn watts_to_dbm(p_w: f64) -> f64 {
    10.0 * p_w.log10() + 30.0
}

/// Load and validate a scenario file.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<ScenarioConfig, ScenarioError> {
    let text = std::fs::read_to_string(path)?;
    let cfg: ScenarioConfig = toml::from_str(&text)?;
    cfg.validate()?;
    Ok(cfg)
}

/// Synthesize the channel set for a validated configuration.
///
/// Deterministic in `(cfg, seed)`; the seed only matters in Rician mode.
pub fn synthesize_channels(cfg: &ScenarioConfig, seed: u64) -> ChannelSet {
    let n = cfg.n_antennas;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, 1.0).expect("unit normal");

    let cu_channels = cfg
        .cu_angles_rad()
        .iter()
        .map(|&theta| {
            let los = steering_vector(theta, n, cfg.spacing_ratio)
                .expect("validated angle within range");
            match cfg.cu_channel_model {
                CuChannelModel::Los => los,
                CuChannelModel::Rician => {
                    let kf = cfg.rician_k_factor;
                    let scatter = DVector::from_iterator(
                        n,
                        (0..n).map(|_| {
                            // CN(0, 1) per element.
                            C64::new(normal.sample(&mut rng), normal.sample(&mut rng))
                                * std::f64::consts::FRAC_1_SQRT_2
                        }),
                    );
                    los * C64::new((kf / (kf + 1.0)).sqrt(), 0.0)
                        + scatter * C64::new((1.0 / (kf + 1.0)).sqrt(), 0.0)
                }
            }
        })
        .collect();

    let target_angles_rad = cfg.target_angles_rad();
    let alpha = cfg.alpha();
    let target_channels_est = target_angles_rad
        .iter()
        .zip(&alpha)
        .map(|(&theta, &a)| {
            steering_vector(theta, n, cfg.spacing_ratio).expect("validated angle within range") * a
        })
        .collect();

    ChannelSet {
        cu_channels,
        target_channels_est,
        target_angles_rad,
        alpha,
        beta: cfg.beta(),
        error_radius: cfg.error_radius.clone(),
        noise_comm_w: cfg.noise_comm_w(),
        noise_sense_w: cfg.noise_sense_w(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) fn demo_config() -> ScenarioConfig {
        ScenarioConfig {
            n_antennas: 8,
            spacing_ratio: 0.5,
            cu_angles: vec![-30.0, 20.0],
            target_angles: vec![-35.0, 5.0, 40.0],
            noise_comm_dbm: -30.0,
            noise_sense_dbm: -30.0,
            noise_echo_dbm: None,
            power_budget_dbm: 20.0,
            iota: 1.1,
            kappa: 0.5,
            qos_threshold: 1.0,
            error_radius: vec![0.01; 3],
            f_coeff: 0.01,
            snapshots: 1,
            pathloss_oneway: None,
            pathloss_roundtrip: None,
            bleu_params: vec![
                BleuParams::Bound { rho_lower: 0.4 },
                BleuParams::Bound { rho_lower: 0.33 },
            ],
            seed: 7,
            solver_tol: 1e-8,
            outer_tol: 1e-4,
            inner_tol: 1e-4,
            max_outer_iters: 50,
            max_inner_iters: 20,
            randomization_count: 100,
            cu_channel_model: CuChannelModel::Los,
            rician_k_factor: 10.0,
            normalize_objective: false,
        }
    }

    #[test]
    fn dbm_conversion_reference_points() {
        assert_relative_eq!(dbm_to_watts(30.0), 1.0, max_relative = 1e-12);
        assert_relative_eq!(dbm_to_watts(0.0), 0.001, max_relative = 1e-12);
        assert_relative_eq!(dbm_to_watts(20.0), 0.1, max_relative = 1e-12);
    }

    #[test]
    fn dbm_watts_round_trip() {
        for p in [-45.0, -30.0, 0.0, 17.3, 35.0] {
            let w = dbm_to_watts(p);
            assert_relative_eq!(dbm_to_watts(watts_to_dbm(w)), w, max_relative = 1e-12);
        }
    }

    #[test]
    fn parses_reference_scenario_file() {
        let text = r#"
            n_antennas = 20
            cu_angles = [-30.0, 20.0]
            target_angles = [-35.0, 5.0, 40.0]
            noise_comm_dbm = -30.0
            noise_sense_dbm = -30.0
            power_budget_dbm = 20.0
            iota = 1.1
            kappa = 0.5
            qos_threshold = 1.0
            error_radius = [0.01, 0.01, 0.01]

            [[bleu_params]]
            rho_lower = 0.4

            [[bleu_params]]
            rho_lower = 0.33
        "#;
        let cfg: ScenarioConfig = toml::from_str(text).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.n_antennas, 20);
        assert_eq!(cfg.n_cus(), 2);
        assert_eq!(cfg.n_targets(), 3);
        assert_relative_eq!(cfg.power_budget_w(), 0.1, max_relative = 1e-12);
        assert_eq!(cfg.rho_lower_bounds().unwrap(), vec![0.4, 0.33]);
        assert_eq!(cfg.spacing_ratio, 0.5);
        assert_eq!(cfg.snapshots, 1);
    }

    #[test]
    fn rejects_bad_bleu_weights() {
        let mut cfg = demo_config();
        cfg.bleu_params[0] = BleuParams::Bleu {
            global_bound: 0.8,
            weights: vec![0.5, 0.4],
            precisions: vec![0.9, 0.9],
        };
        let err = cfg.validate().unwrap_err();
        match err {
            ScenarioError::Invariant { field, .. } => assert_eq!(field, "bleu_params"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn rejects_insufficient_antennas() {
        let mut cfg = demo_config();
        cfg.n_antennas = 2;
        cfg.target_angles = vec![10.0];
        cfg.error_radius = vec![0.01];
        let err = cfg.validate().unwrap_err();
        match err {
            ScenarioError::Invariant { field, .. } => assert_eq!(field, "n_antennas"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn toml_round_trip_is_identity() {
        let cfg = demo_config();
        let text = toml::to_string(&cfg).unwrap();
        let again: ScenarioConfig = toml::from_str(&text).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn channel_synthesis_is_deterministic() {
        let mut cfg = demo_config();
        cfg.cu_channel_model = CuChannelModel::Rician;
        let a = synthesize_channels(&cfg, 42);
        let b = synthesize_channels(&cfg, 42);
        assert_eq!(a, b);
        let c = synthesize_channels(&cfg, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn broadside_target_channel_is_all_ones() {
        let mut cfg = demo_config();
        cfg.target_angles = vec![0.0];
        cfg.error_radius = vec![0.0];
        cfg.pathloss_oneway = Some(vec![C64::new(1.0, 0.0)]);
        let ch = synthesize_channels(&cfg, 0);
        for e in ch.target_channels_est[0].iter() {
            assert_relative_eq!(e.re, 1.0, epsilon = 1e-14);
            assert_relative_eq!(e.im, 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn target_channel_norm_matches_pathloss() {
        let cfg = demo_config();
        let ch = synthesize_channels(&cfg, 0);
        let n = cfg.n_antennas as f64;
        for (h, a) in ch.target_channels_est.iter().zip(&ch.alpha) {
            assert_relative_eq!(h.norm(), a.norm() * n.sqrt(), max_relative = 1e-12);
        }
    }

    #[test]
    fn target_channel_reconstructs_from_steering() {
        let cfg = demo_config();
        let ch = synthesize_channels(&cfg, 0);
        for l in 0..ch.n_targets() {
            let rebuilt = steering_vector(ch.target_angles_rad[l], cfg.n_antennas, cfg.spacing_ratio)
                .unwrap()
                * ch.alpha[l];
            assert!((rebuilt - &ch.target_channels_est[l]).norm() < 1e-12);
        }
    }
}
