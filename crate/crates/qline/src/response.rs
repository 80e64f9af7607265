//! The transition probability
//!
//!   P = (lambda^2 / 4 pi) int dk  F~^2(k) C^2(k) |k| K(|k| + s Omega),
//!
//! with s = +1 for vacuum excitation and s = -1 for spontaneous emission.
//! The integrand is even in k, so the evaluation doubles the half line:
//! P / lambda^2 = int_0^inf (1/2pi) F~^2(k) C^2(k) k K(k + s Omega) dk.
//!
//! Quadrature is oscillation-aware: known kinks (the cutoff at k = Omega,
//! the sharp-cutoff edge) and the preimages of the kernel's removable
//! singularities are declared as panel boundaries, panel widths are capped
//! at half the kernel's fastest oscillation period, and the semi-infinite
//! tail is truncated only once a closed-form envelope bound certifies the
//! remainder. The kernel envelope K(w) <= min((T+r)^2, 16 a^4 / w^6) with
//! a = pi/r follows from |chi_hat| <= area and two integrations by parts
//! against the bounded variation of chi'', so it holds for the numeric
//! kernel as well as the analytic one.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::Error;
use crate::formfactor;
use crate::params::{Bundle, CutoffModel, ProbabilityResult};
use crate::quad::{self, QuadOptions};
use crate::switching;

/// Tolerances and budgets for a probability evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSettings {
    /// Relative tolerance on P / lambda^2.
    pub rel_tol: f64,
    /// Absolute floor for the error test.
    pub abs_tol: f64,
    /// Leaf-panel budget.
    pub max_panels: usize,
    /// The tail is truncated where its bound drops below
    /// rel_tol * estimate / tail_safety.
    pub tail_safety: f64,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            rel_tol: 1e-9,
            abs_tol: 1e-30,
            max_panels: 1_000_000,
            tail_safety: 1e2,
        }
    }
}

impl QuadratureSettings {
    fn check(&self) -> Result<(), Error> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter("rel_tol must be positive".into()));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidParameter("abs_tol must be positive".into()));
        }
        if self.max_panels == 0 {
            return Err(Error::InvalidParameter(
                "max_panels must be at least 1".into(),
            ));
        }
        if !(self.tail_safety >= 1.0) {
            return Err(Error::InvalidParameter(
                "tail_safety must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Half-line integrand (evenness factor of 2 included):
/// 2 * (1/4pi) * F~^2(k) * C^2(k) * k * K(k + s Omega), k >= 0.
pub fn integrand(bundle: &Bundle, k: f64) -> f64 {
    integrand_with(bundle, k, &|w| {
        switching::spectral_kernel(bundle.switching(), w).value
    })
}

fn integrand_with<K: Fn(f64) -> f64 + ?Sized>(bundle: &Bundle, k: f64, kernel: &K) -> f64 {
    debug_assert!(k >= 0.0);
    let omega = bundle.config().omega;
    let ft = formfactor::smearing_ft(bundle.smearing(), k);
    let cw = formfactor::cutoff_value(bundle.cutoff(), omega, k);
    if cw == 0.0 {
        return 0.0;
    }
    let kernel_value = kernel(k + bundle.config().signed_gap());
    0.5 / PI * ft * ft * cw * cw * k * kernel_value
}

/// Interior panel boundaries for the half-line integral: the cutoff kink at
/// k = Omega, the sharp-cutoff edge at k = Omega + eps, and the preimages
/// k + s Omega in {0, +-pi/r} of the kernel's removable singularities.
/// Strictly increasing, all > 0.
pub fn integration_breakpoints(bundle: &Bundle) -> Vec<f64> {
    let omega = bundle.config().omega;
    let signed = bundle.config().signed_gap();
    let a = PI / bundle.switching().ramp;

    let mut points = vec![omega];
    if bundle.cutoff().model == CutoffModel::Sharp {
        points.push(omega + bundle.cutoff().epsilon);
    }
    for target in [0.0, a, -a] {
        let k = target - signed;
        if k > 0.0 && k.is_finite() {
            points.push(k);
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();
    points
}

/// Panel-width cap: half the period of the kernel's fastest oscillation.
pub(crate) fn oscillation_width_cap(profile: &crate::params::SwitchingProfile) -> f64 {
    2.0 * PI / (profile.plateau + 2.0 * profile.ramp)
}

/// Closed-form bound on the integral of the envelope beyond k = omega + u.
///
/// Uses |F~| <= 1, the kernel envelope min((T+r)^2, 16 a^4 / (k - Omega)^6)
/// (the kernel argument satisfies |k + s Omega| >= k - Omega for either
/// process), and per-model cutoff envelopes integrated in closed form.
fn tail_bound(bundle: &Bundle, u: f64) -> f64 {
    let omega = bundle.config().omega;
    let eps = bundle.cutoff().epsilon;
    let profile = bundle.switching();
    let flat = profile.area() * profile.area();
    let a = PI / profile.ramp;
    let c6 = 16.0 * a.powi(4);

    // int_u^inf (v + Omega) g(v) dv for g = 1 and g = v^-6, times the
    // model's separable decay factor.
    let (decay, poly_flat, poly_six) = match bundle.cutoff().model {
        CutoffModel::Sharp => return 0.0,
        CutoffModel::Gaussian => {
            let d = (-u * u / (eps * eps)).exp();
            // int (v+Omega) e^{-v^2/eps^2} <= e^{-u^2/eps^2} (eps^2/2)(1 + Omega/u)
            (d, 0.5 * eps * eps * (1.0 + omega / u), poly_inv_six(u, omega))
        }
        CutoffModel::Exponential => {
            let beta = std::f64::consts::SQRT_2 / eps;
            let d = (-beta * u).exp();
            (d, (u + omega) / beta + 1.0 / (beta * beta), poly_inv_six(u, omega))
        }
        CutoffModel::Lorentzian => {
            // C^2 <= eps^4 / (k - Omega)^4 above the gap.
            let e4 = eps.powi(4);
            let u2 = u * u;
            let flat_poly = e4 * (0.5 / u2 + omega / (3.0 * u2 * u));
            let u8 = u2 * u2 * u2 * u2;
            let six_poly = e4 * (0.125 / u8 + omega / (9.0 * u8 * u));
            (1.0, flat_poly, six_poly)
        }
    };

    let bound = decay * (flat * poly_flat).min(c6 * poly_six);
    0.5 / PI * bound
}

// int_u^inf (v + Omega) / v^6 dv = 1/(4 u^4) + Omega/(5 u^5)
fn poly_inv_six(u: f64, omega: f64) -> f64 {
    let u2 = u * u;
    let u4 = u2 * u2;
    0.25 / u4 + omega / (5.0 * u4 * u)
}

/// Starting point for the truncation search, beyond every declared
/// breakpoint and a few cutoff scales out.
fn initial_tail_offset(bundle: &Bundle, breakpoints: &[f64]) -> f64 {
    let omega = bundle.config().omega;
    let eps = bundle.cutoff().epsilon;
    let a = PI / bundle.switching().ramp;
    let model_guess = match bundle.cutoff().model {
        CutoffModel::Gaussian => 6.0 * eps,
        CutoffModel::Lorentzian => 10.0 * eps,
        CutoffModel::Exponential => 15.0 * eps,
        CutoffModel::Sharp => unreachable!("sharp truncates exactly"),
    };
    let past_breakpoints = breakpoints
        .last()
        .map(|&b| (b - omega) * 1.5)
        .unwrap_or(0.0);
    model_guess.max(2.0 * a).max(past_breakpoints).max(4.0)
}

/// Evaluate the transition probability with the analytic spectral kernel.
pub fn transition_probability(
    bundle: &Bundle,
    settings: &QuadratureSettings,
) -> Result<ProbabilityResult, Error> {
    let profile = *bundle.switching();
    probability_with_kernel(bundle, settings, move |w| {
        switching::spectral_kernel(&profile, w).value
    })
}

/// Shared driver: identical breakpoints, panel caps, truncation policy, and
/// summation order for any kernel implementation. The oracle swaps in its
/// numeric kernel here, so analytic-vs-numeric comparisons differ in the
/// kernel alone.
pub(crate) fn probability_with_kernel<K>(
    bundle: &Bundle,
    settings: &QuadratureSettings,
    kernel: K,
) -> Result<ProbabilityResult, Error>
where
    K: Fn(f64) -> f64,
{
    settings.check()?;
    let omega = bundle.config().omega;
    let sharp = bundle.cutoff().model == CutoffModel::Sharp;
    let breakpoints = integration_breakpoints(bundle);
    let cap = oscillation_width_cap(bundle.switching());
    let f = |k: f64| integrand_with(bundle, k, &kernel);

    let mut k_max = if sharp {
        omega + bundle.cutoff().epsilon
    } else {
        omega + initial_tail_offset(bundle, &breakpoints)
    };

    let segment_points = |lo: f64, hi: f64| -> Vec<f64> {
        let mut pts = vec![lo];
        pts.extend(breakpoints.iter().copied().filter(|&b| b > lo && b < hi));
        pts.push(hi);
        pts
    };

    let mut value = 0.0;
    let mut abs_error = 0.0;
    let mut panels_used = 0usize;

    let run_piece = |lo: f64,
                         hi: f64,
                         abs_floor: f64,
                         panels_used: &mut usize,
                         value: &mut f64,
                         abs_error: &mut f64|
     -> Result<(), Error> {
        let remaining = settings.max_panels.saturating_sub(*panels_used);
        if remaining == 0 {
            return Err(Error::MaxPanelsExceeded {
                estimate: *value,
                error_bound: *abs_error,
                panels: *panels_used,
            });
        }
        let opts = QuadOptions {
            rel_tol: 0.5 * settings.rel_tol,
            abs_tol: abs_floor,
            max_panels: remaining,
            width_cap: Some(cap),
        };
        match quad::integrate_segmented(&f, &segment_points(lo, hi), &opts) {
            Ok(out) => {
                *value += out.value;
                *abs_error += out.abs_error;
                *panels_used += out.panels;
                Ok(())
            }
            Err(Error::MaxPanelsExceeded {
                estimate,
                error_bound,
                panels,
            }) => Err(Error::MaxPanelsExceeded {
                estimate: *value + estimate,
                error_bound: *abs_error + error_bound,
                panels: *panels_used + panels,
            }),
            Err(e) => Err(e),
        }
    };

    run_piece(
        0.0,
        k_max,
        settings.abs_tol,
        &mut panels_used,
        &mut value,
        &mut abs_error,
    )?;

    let mut tail = 0.0;
    if !sharp {
        // Double the truncation distance until the envelope bound is an
        // agreed factor below the requested accuracy.
        for _ in 0..200 {
            let u = k_max - omega;
            tail = tail_bound(bundle, u);
            let threshold =
                (settings.rel_tol * value.abs() / settings.tail_safety).max(settings.abs_tol);
            if tail <= threshold {
                break;
            }
            let next = omega + 2.0 * u;
            let floor = (0.25 * settings.rel_tol * value.abs()).max(settings.abs_tol);
            run_piece(
                k_max,
                next,
                floor,
                &mut panels_used,
                &mut value,
                &mut abs_error,
            )?;
            k_max = next;
        }
    }

    let lambda = bundle.config().lambda;
    let lambda_sq = lambda * lambda;
    Ok(ProbabilityResult {
        p_over_lambda_sq: value,
        p: lambda_sq * value,
        abs_error_estimate: abs_error,
        panels_used,
        tail_bound: tail,
    })
}

/// Convert a spin-boson coupling alpha_SB to this model's lambda:
/// lambda = sqrt(2 pi alpha_SB).
pub fn coupling_from_spin_boson(alpha_sb: f64) -> Result<f64, Error> {
    if !(alpha_sb >= 0.0) || !alpha_sb.is_finite() {
        return Err(Error::InvalidParameter(
            "alpha_sb must be nonnegative".into(),
        ));
    }
    Ok((2.0 * PI * alpha_sb).sqrt())
}
