//! Domain types, unit conventions, and validation shared by all other modules.
//!
//! Every quantity is expressed in natural units (hbar = c = 1) scaled to the
//! reference qubit gap Omega_0 = 1: frequencies and wavenumbers in units of
//! Omega_0, lengths and times in units of 1/Omega_0. Conversions to laboratory
//! units live in [`crate::units`] and never enter the math here.

use serde::Serialize;

use crate::error::Error;

/// Which transition probability is being computed.
///
/// Emission is realized internally as the substitution Omega -> -Omega in the
/// time-kernel argument; no other code path differs between the two processes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Process {
    /// Ground state -> excited state with the field starting in vacuum.
    Excitation,
    /// Excited state -> ground state, emitting into the line.
    Emission,
}

impl Process {
    /// Sign s applied to the gap in the kernel argument k + s*Omega.
    pub fn gap_sign(self) -> f64 {
        match self {
            Process::Excitation => 1.0,
            Process::Emission => -1.0,
        }
    }
}

/// Qubit gap, coupling strength, and the process under study.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QubitConfig {
    /// Energy gap Omega in units of Omega_0. Must be positive.
    pub omega: f64,
    /// Dimensionless coupling strength lambda. Must be nonnegative.
    pub lambda: f64,
    pub process: Process,
}

impl QubitConfig {
    /// The signed gap entering the kernel argument: +Omega for excitation,
    /// -Omega for emission.
    pub fn signed_gap(&self) -> f64 {
        self.process.gap_sign() * self.omega
    }
}

/// Spatial profile family of the qubit-field coupling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmearingShape {
    Gaussian,
    Lorentzian,
    Quartic,
    Sharp,
}

impl SmearingShape {
    pub const ALL: [SmearingShape; 4] = [
        SmearingShape::Gaussian,
        SmearingShape::Lorentzian,
        SmearingShape::Quartic,
        SmearingShape::Sharp,
    ];

    /// One-letter tag used in comparison-pair identifiers.
    pub fn letter(self) -> char {
        match self {
            SmearingShape::Gaussian => 'G',
            SmearingShape::Lorentzian => 'L',
            SmearingShape::Quartic => 'Q',
            SmearingShape::Sharp => 'S',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SmearingShape::Gaussian => "gaussian",
            SmearingShape::Lorentzian => "lorentzian",
            SmearingShape::Quartic => "quartic",
            SmearingShape::Sharp => "sharp",
        }
    }
}

/// Smearing shape plus its size sigma (units of 1/Omega_0).
///
/// All four position-space densities integrate to 1 over the real line and
/// are even in x, so their Fourier transforms are real and symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmearingSpec {
    pub shape: SmearingShape,
    pub sigma: f64,
}

/// UV cutoff family applied to the mode expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutoffModel {
    Gaussian,
    Lorentzian,
    Exponential,
    Sharp,
}

impl CutoffModel {
    pub const ALL: [CutoffModel; 4] = [
        CutoffModel::Gaussian,
        CutoffModel::Lorentzian,
        CutoffModel::Exponential,
        CutoffModel::Sharp,
    ];

    /// One-letter tag used in comparison-pair identifiers.
    pub fn letter(self) -> char {
        match self {
            CutoffModel::Gaussian => 'G',
            CutoffModel::Lorentzian => 'L',
            CutoffModel::Exponential => 'E',
            CutoffModel::Sharp => 'S',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CutoffModel::Gaussian => "gaussian",
            CutoffModel::Lorentzian => "lorentzian",
            CutoffModel::Exponential => "exponential",
            CutoffModel::Sharp => "sharp",
        }
    }
}

/// Cutoff model plus its frequency scale epsilon (units of Omega_0).
///
/// Every model passes frequencies below the qubit gap untouched
/// (C = 1 for |k| < Omega), stays within [0, 1], is even in k, and is
/// non-increasing in |k| above the gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CutoffSpec {
    pub model: CutoffModel,
    pub epsilon: f64,
}

/// Cosine-trapezoid switching: ramp up over `ramp`, hold for `plateau`,
/// ramp down over `ramp`, with half-cosine ramps.
///
/// The envelope has compact support [-plateau/2 - ramp, plateau/2 + ramp],
/// takes values in [0, 1], is even in t, and is C^1 everywhere (the cosine
/// ramps meet both the plateau and zero with vanishing slope).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SwitchingProfile {
    /// Ramp-up/down duration r (units of 1/Omega_0). Must be positive.
    pub ramp: f64,
    /// Plateau duration T (units of 1/Omega_0). Zero is allowed: the
    /// plateau then degenerates to a point.
    pub plateau: f64,
}

impl SwitchingProfile {
    /// Half-width of the support, plateau/2 + ramp.
    pub fn support_halfwidth(&self) -> f64 {
        0.5 * self.plateau + self.ramp
    }

    /// Area under the envelope, plateau + ramp (each ramp contributes r/2).
    pub fn area(&self) -> f64 {
        self.plateau + self.ramp
    }
}

/// Reference scales: the shipped defaults for the problem.
///
/// epsilon0 = 5 Omega_0 and sigma0 = 1e-4 / Omega_0 reflect a 10 GHz qubit
/// gap, a 50 GHz transmission-line cutoff, and a 10 um qubit. The switching
/// scales r0 and t0 have no canonical value; 1/Omega_0 is the only natural
/// time scale in the problem, so both default to 1 and every emitted dataset
/// records the values actually used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaleDefaults {
    pub omega0: f64,
    pub epsilon0: f64,
    pub sigma0: f64,
    pub r0: f64,
    pub t0: f64,
}

impl Default for ScaleDefaults {
    fn default() -> Self {
        ScaleDefaults {
            omega0: 1.0,
            epsilon0: 5.0,
            sigma0: 1e-4,
            r0: 1.0,
            t0: 1.0,
        }
    }
}

/// Outcome of a transition-probability evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilityResult {
    /// The coupling-independent quantity P / lambda^2.
    pub p_over_lambda_sq: f64,
    /// P = lambda^2 * p_over_lambda_sq, exactly (single multiplication).
    pub p: f64,
    /// Quadrature error estimate for `p_over_lambda_sq`.
    pub abs_error_estimate: f64,
    /// Number of leaf panels the adaptive quadrature ended with.
    pub panels_used: usize,
    /// Certified bound on the truncated semi-infinite tail.
    pub tail_bound: f64,
}

/// A validated parameter bundle. Construction goes through [`validate`],
/// so holding a `Bundle` certifies every type invariant. All fields are
/// immutable values; bundles are freely shareable across threads.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bundle {
    config: QubitConfig,
    smearing: SmearingSpec,
    cutoff: CutoffSpec,
    switching: SwitchingProfile,
}

impl Bundle {
    pub fn config(&self) -> &QubitConfig {
        &self.config
    }

    pub fn smearing(&self) -> &SmearingSpec {
        &self.smearing
    }

    pub fn cutoff(&self) -> &CutoffSpec {
        &self.cutoff
    }

    pub fn switching(&self) -> &SwitchingProfile {
        &self.switching
    }
}

fn positive(value: f64, message: &str) -> Result<(), Error> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message.to_string()))
    }
}

fn nonnegative(value: f64, message: &str) -> Result<(), Error> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message.to_string()))
    }
}

/// Check every type invariant and return a validated bundle.
///
/// Reports the first violated invariant by name.
pub fn validate(
    config: QubitConfig,
    smearing: SmearingSpec,
    cutoff: CutoffSpec,
    switching: SwitchingProfile,
) -> Result<Bundle, Error> {
    positive(config.omega, "omega must be positive")?;
    nonnegative(config.lambda, "lambda must be nonnegative")?;
    positive(smearing.sigma, "sigma must be positive")?;
    positive(cutoff.epsilon, "epsilon must be positive")?;
    positive(switching.ramp, "ramp must be positive")?;
    nonnegative(switching.plateau, "plateau must be nonnegative")?;
    Ok(Bundle {
        config,
        smearing,
        cutoff,
        switching,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_defaults() -> (QubitConfig, SmearingSpec, CutoffSpec, SwitchingProfile) {
        (
            QubitConfig {
                omega: 1.0,
                lambda: 1.0,
                process: Process::Excitation,
            },
            SmearingSpec {
                shape: SmearingShape::Gaussian,
                sigma: 1e-4,
            },
            CutoffSpec {
                model: CutoffModel::Exponential,
                epsilon: 5.0,
            },
            SwitchingProfile {
                ramp: 1.0,
                plateau: 1.0,
            },
        )
    }

    #[test]
    fn default_scales_accept() {
        let (q, s, c, w) = table_defaults();
        assert!(validate(q, s, c, w).is_ok());
    }

    #[test]
    fn zero_sigma_rejected_by_name() {
        let (q, mut s, c, w) = table_defaults();
        s.sigma = 0.0;
        let err = validate(q, s, c, w).unwrap_err();
        assert_eq!(err.to_string(), "sigma must be positive");
    }

    #[test]
    fn negative_ramp_rejected_by_name() {
        let (q, s, c, mut w) = table_defaults();
        w.ramp = -1.0;
        let err = validate(q, s, c, w).unwrap_err();
        assert_eq!(err.to_string(), "ramp must be positive");
    }

    #[test]
    fn zero_plateau_allowed() {
        let (q, s, c, mut w) = table_defaults();
        w.plateau = 0.0;
        assert!(validate(q, s, c, w).is_ok());
    }

    #[test]
    fn zero_lambda_allowed() {
        let (mut q, s, c, w) = table_defaults();
        q.lambda = 0.0;
        assert!(validate(q, s, c, w).is_ok());
    }

    #[test]
    fn emission_flips_gap_sign() {
        let (mut q, ..) = table_defaults();
        q.process = Process::Emission;
        assert_eq!(q.signed_gap(), -1.0);
        q.process = Process::Excitation;
        assert_eq!(q.signed_gap(), 1.0);
    }

    #[test]
    fn first_violation_wins() {
        let (mut q, mut s, c, w) = table_defaults();
        q.omega = -1.0;
        s.sigma = -1.0;
        let err = validate(q, s, c, w).unwrap_err();
        assert_eq!(err.to_string(), "omega must be positive");
    }

    #[test]
    fn non_finite_rejected() {
        let (q, mut s, c, w) = table_defaults();
        s.sigma = f64::NAN;
        assert!(validate(q, s, c, w).is_err());
        s.sigma = f64::INFINITY;
        assert!(validate(q, s, c, w).is_err());
    }
}
