//! Smearing shapes, their Fourier transforms, the cutoff models, and the
//! combined effective form factor F^2(k) * C^2(k).
//!
//! Position-space densities F_sigma(x):
//!
//! | shape      | F_sigma(x)                                          |
//! |------------|-----------------------------------------------------|
//! | Gaussian   | exp(-x^2/sigma^2) / (sigma sqrt(pi))                |
//! | Lorentzian | (sigma/2pi) / (x^2 + (sigma/2)^2)                   |
//! | Quartic    | sqrt(2)(sigma/2)^3/pi / (x^4 + (sigma/2)^4)         |
//! | Sharp      | 1/sigma on (-sigma/2, sigma/2), else 0              |
//!
//! All are normalized to unit integral and even in x, so the transforms
//! F~(k) below are real, even, and equal to 1 at k = 0. The closed forms are
//! derived, not quoted, and the oracle module's numeric transform gates them.
//!
//! Cutoff weights C_eps(k) equal 1 for |k| <= Omega and decay beyond:
//! Gaussian exp(-(|k|-Omega)^2/(2 eps^2)), Lorentzian eps^2/((|k|-Omega)^2
//! + eps^2), exponential exp(-(|k|-Omega)/(sqrt(2) eps)), and sharp the
//! indicator of |k| < Omega + eps. The two-argument step in the sharp rows
//! is read as "both arguments positive", the only reading under which the
//! sharp density normalizes.

use std::f64::consts::{FRAC_2_SQRT_PI, PI};

use crate::math::sinc;
use crate::params::{CutoffModel, CutoffSpec, SmearingShape, SmearingSpec};

/// Form-factor evaluation at a single wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormFactorPoint {
    /// Wavenumber (units of Omega_0).
    pub k: f64,
    /// Smearing transform F~(k).
    pub smearing_ft: f64,
    /// Cutoff weight C(k), in [0, 1].
    pub cutoff_weight: f64,
    /// F~(k)^2 * C(k)^2.
    pub effective_weight: f64,
}

/// Position-space density F_sigma(x).
pub fn smearing_value(spec: &SmearingSpec, x: f64) -> f64 {
    let sigma = spec.sigma;
    match spec.shape {
        SmearingShape::Gaussian => {
            let u = x / sigma;
            // 1/sqrt(pi) = FRAC_2_SQRT_PI / 2
            (-u * u).exp() * (0.5 * FRAC_2_SQRT_PI) / sigma
        }
        SmearingShape::Lorentzian => {
            let c = 0.5 * sigma;
            sigma / (2.0 * PI) / (x * x + c * c)
        }
        SmearingShape::Quartic => {
            let c = 0.5 * sigma;
            let x2 = x * x;
            std::f64::consts::SQRT_2 * c * c * c / PI / (x2 * x2 + c * c * c * c)
        }
        SmearingShape::Sharp => {
            // Theta(x + sigma/2, -x + sigma/2): both arguments strictly positive.
            if x > -0.5 * sigma && x < 0.5 * sigma {
                1.0 / sigma
            } else {
                0.0
            }
        }
    }
}

/// Fourier transform F~(k) = integral of F_sigma(x) e^{ikx} dx.
///
/// Real and even in k; the |k| reduction below makes the evenness exact to
/// the bit.
pub fn smearing_ft(spec: &SmearingSpec, k: f64) -> f64 {
    let kappa = k.abs();
    let sigma = spec.sigma;
    match spec.shape {
        SmearingShape::Gaussian => {
            let u = 0.5 * sigma * kappa;
            (-u * u).exp()
        }
        SmearingShape::Lorentzian => (-0.5 * sigma * kappa).exp(),
        SmearingShape::Quartic => {
            // y = (sigma/2) |k| / sqrt(2)
            let y = 0.5 * sigma * kappa / std::f64::consts::SQRT_2;
            (-y).exp() * (y.cos() + y.sin())
        }
        SmearingShape::Sharp => sinc(0.5 * sigma * kappa),
    }
}

/// Cutoff weight C_eps(k) for a qubit gap `omega`. Even in k; 1 below the
/// gap in every model.
pub fn cutoff_value(spec: &CutoffSpec, omega: f64, k: f64) -> f64 {
    let kappa = k.abs();
    if kappa <= omega {
        return 1.0;
    }
    let u = kappa - omega;
    let eps = spec.epsilon;
    match spec.model {
        CutoffModel::Gaussian => (-u * u / (2.0 * eps * eps)).exp(),
        CutoffModel::Lorentzian => eps * eps / (u * u + eps * eps),
        CutoffModel::Exponential => (-u / (std::f64::consts::SQRT_2 * eps)).exp(),
        CutoffModel::Sharp => {
            if kappa < omega + eps {
                1.0
            } else {
                0.0
            }
        }
    }
}

/// Compose smearing transform and cutoff weight into the effective form
/// factor F~^2(k) C^2(k).
pub fn effective_form_factor(
    smearing: &SmearingSpec,
    cutoff: &CutoffSpec,
    omega: f64,
    k: f64,
) -> FormFactorPoint {
    let ft = smearing_ft(smearing, k);
    let cw = cutoff_value(cutoff, omega, k);
    FormFactorPoint {
        k,
        smearing_ft: ft,
        cutoff_weight: cw,
        effective_weight: ft * ft * cw * cw,
    }
}
