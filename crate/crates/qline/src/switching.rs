//! The cosine-trapezoid switching envelope chi(t) and its spectral kernel
//! K(omega) = |chi_hat(omega)|^2.
//!
//! The double time integral weighting each field mode,
//! int dt int dt' chi(t) chi(t') e^{i omega (t - t')},
//! factorizes over the full real line into |chi_hat(omega)|^2, so the kernel
//! is the only switching-dependent object the rest of the crate needs.
//!
//! chi_hat is derived here rather than transcribed: with a = pi/r,
//!
//!   chi_hat(omega) = 2 a^2 sin(omega (T+r)/2) cos(omega r/2)
//!                    / (omega (a^2 - omega^2))
//!
//! which regroups into the numerically robust product
//!
//!   chi_hat(omega) = pi^2 (T+r) / (2 r) * sinc(omega (T+r)/2)
//!                    * sinc((a - omega) r/2) / (a + omega),
//!
//! where both removable singularities (omega = 0 and omega = a) are absorbed
//! into sinc evaluations and handled by the series branch of [`crate::math`].
//! Limits: chi_hat(0) = T + r and chi_hat(a) = (r/2) cos(pi T / (2r)).
//! The closed form is gated on agreement with the oracle module's numeric
//! double integral.

use std::f64::consts::PI;

use crate::math::sinc_flagged;
use crate::params::SwitchingProfile;

/// Which evaluation path produced a kernel value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelBranch {
    Regular,
    /// The frequency fell inside the guarded window around a removable
    /// singularity (omega near 0 or near +-pi/r) and a series expansion
    /// was used.
    RemovableLimit,
}

/// Spectral kernel evaluation K(omega) = |chi_hat(omega)|^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub omega: f64,
    /// K(omega), in units of time^2. Nonnegative, even in omega, bounded by
    /// (T + r)^2, and decaying like omega^-6.
    pub value: f64,
    pub branch: KernelBranch,
}

/// The switching envelope: half-cosine ramp up over `ramp`, unit plateau of
/// length `plateau`, half-cosine ramp down. Even in t, zero outside
/// [-T/2 - r, T/2 + r].
pub fn chi(profile: &SwitchingProfile, t: f64) -> f64 {
    let half_plateau = 0.5 * profile.plateau;
    let r = profile.ramp;
    let at = t.abs();
    if at <= half_plateau {
        1.0
    } else if at < half_plateau + r {
        0.5 + 0.5 * (PI / r * (at - half_plateau)).cos()
    } else {
        0.0
    }
}

/// Real Fourier transform chi_hat(omega) = int chi(t) e^{i omega t} dt.
///
/// chi is real and even, so chi_hat is real and even; the |omega| reduction
/// makes the evenness bit-exact.
pub fn chi_hat(profile: &SwitchingProfile, omega: f64) -> f64 {
    chi_hat_flagged(profile, omega).0
}

fn chi_hat_flagged(profile: &SwitchingProfile, omega: f64) -> (f64, bool) {
    let r = profile.ramp;
    let total = profile.area(); // T + r
    let a = PI / r;
    let w = omega.abs();
    let (s1, series1) = sinc_flagged(0.5 * w * total);
    let (s2, series2) = sinc_flagged(0.5 * (a - w) * r);
    let value = PI * PI * total / (2.0 * r) * s1 * s2 / (a + w);
    (value, series1 || series2)
}

/// K(omega) = chi_hat(omega)^2.
pub fn spectral_kernel(profile: &SwitchingProfile, omega: f64) -> KernelValue {
    let (amplitude, series) = chi_hat_flagged(profile, omega);
    KernelValue {
        omega,
        value: amplitude * amplitude,
        branch: if series {
            KernelBranch::RemovableLimit
        } else {
            KernelBranch::Regular
        },
    }
}

/// Frequencies the quadrature engine should treat as panel boundaries:
/// the removable singularities {0, pi/r} plus the half-period scale
/// 2 pi / (T + 2r) of the kernel's fastest oscillation (which also serves
/// as the panel-width cap). Strictly increasing.
pub fn kernel_breakpoints(profile: &SwitchingProfile) -> Vec<f64> {
    let mut points = vec![
        0.0,
        PI / profile.ramp,
        2.0 * PI / (profile.plateau + 2.0 * profile.ramp),
    ];
    points.sort_by(f64::total_cmp);
    points.dedup();
    points
}
