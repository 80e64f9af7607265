//! Brute-force reference implementations that gate every analytic shortcut:
//! a numeric Fourier transform of each smearing shape, a numeric evaluation
//! of the switching kernel (both as |1-D transform|^2 and as a literal 2-D
//! integral), and a probability evaluation that uses the numeric kernel
//! inside the exact same k-quadrature as the production path.
//!
//! The derivation order matters: these routines are trusted first, and the
//! closed forms in [`crate::switching`] and [`crate::formfactor`] are only
//! used once they agree with the numbers produced here.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::Error;
use crate::math::{cos_product, sin_product, CompensatedSum};
use crate::params::{Bundle, ProbabilityResult, SmearingShape, SmearingSpec, SwitchingProfile};
use crate::response::{self, QuadratureSettings};
use crate::switching::chi;

/// Resolution knobs for the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSettings {
    /// Sample budget per ramp/plateau segment of the switching envelope
    /// (16 samples per Gauss-Legendre panel). An oscillation-aware floor
    /// raises the panel count further when omega is large.
    pub time_grid_points: usize,
    /// Truncation of the smearing transform, as a multiple of sigma.
    pub ft_truncation: f64,
    /// Tolerance the oracle must certify for its own truncation errors.
    pub rel_tol: f64,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings {
            time_grid_points: 4096,
            ft_truncation: 40.0,
            rel_tol: 1e-8,
        }
    }
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes
// ---------------------------------------------------------------------------

const GL_ORDER: usize = 16;

/// Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1],
/// computed once by Newton iteration on P_16 (no transcribed constants).
fn gauss_legendre_16() -> &'static [(f64, f64); GL_ORDER] {
    static TABLE: OnceLock<[(f64, f64); GL_ORDER]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = GL_ORDER;
        let mut table = [(0.0f64, 0.0f64); GL_ORDER];
        for (i, slot) in table.iter_mut().enumerate() {
            // Chebyshev-like initial guess, then Newton on P_n.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        table
    })
}

/// (P_n(x), P_n'(x)) via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for j in 2..=n {
        let jf = j as f64;
        let p_next = ((2.0 * jf - 1.0) * x * p - (jf - 1.0) * p_prev) / jf;
        p_prev = p;
        p = p_next;
    }
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Composite 16-point Gauss-Legendre rule with `panels` equal panels.
/// Compensated summation keeps accumulation error at one rounding of the
/// result even when millions of oscillating panel values cancel.
fn composite_gl<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let table = gauss_legendre_16();
    let width = (b - a) / panels as f64;
    let mut sum = CompensatedSum::default();
    for i in 0..panels {
        let lo = a + width * i as f64;
        let center = lo + 0.5 * width;
        let half = 0.5 * width;
        let mut panel = CompensatedSum::default();
        for &(x, w) in table.iter() {
            panel.add(w * f(center + half * x));
        }
        sum.add(panel.value() * half);
    }
    sum.value()
}

// ---------------------------------------------------------------------------
// Numeric switching kernel
// ---------------------------------------------------------------------------

fn envelope_segments(profile: &SwitchingProfile) -> Vec<(f64, f64)> {
    let half_plateau = 0.5 * profile.plateau;
    let r = profile.ramp;
    let mut segments = vec![(-half_plateau - r, -half_plateau)];
    if profile.plateau > 0.0 {
        segments.push((-half_plateau, half_plateau));
    }
    segments.push((half_plateau, half_plateau + r));
    segments
}

// Three panels per oscillation: the 16-point rule's truncation error at
// phase pi per panel (~1e-13 of the panel value) would otherwise cap the
// achievable cancellation accuracy; at 2pi/3 it drops below rounding.
fn panels_for(width: f64, omega: f64, settings: &OracleSettings) -> usize {
    let base = (settings.time_grid_points / GL_ORDER).max(8);
    let oscillation = (width * omega.abs() / (2.0 * PI)).ceil() as usize;
    base.max(3 * oscillation).max(1)
}

/// int dt int dt' chi(t) chi(t') e^{i omega (t - t')} evaluated as the
/// squared modulus of the 1-D transform, itself computed by composite
/// high-order panel quadrature over the compact support. Real, nonnegative,
/// even in omega.
///
/// The phase omega*t is formed with an exact two-product so its rounding
/// residual (which at omega*t ~ 1e4 would otherwise dominate the cancelled
/// result) is corrected to first order.
pub fn kernel_numeric(profile: &SwitchingProfile, omega: f64, settings: &OracleSettings) -> f64 {
    let mut re = 0.0;
    let mut im = 0.0;
    for (a, b) in envelope_segments(profile) {
        let panels = panels_for(b - a, omega, settings);
        re += composite_gl(&|t: f64| chi(profile, t) * cos_product(omega, t), a, b, panels);
        im += composite_gl(&|t: f64| chi(profile, t) * sin_product(omega, t), a, b, panels);
    }
    re * re + im * im
}

/// The same double integral evaluated literally in two dimensions (nested
/// composite rule over the support square), as an independent cross-check
/// of the factorized route on spot-check points.
pub fn kernel_numeric_2d(profile: &SwitchingProfile, omega: f64, settings: &OracleSettings) -> f64 {
    // Precompute per-axis nodes once; the integrand does not separate, so
    // the double loop is genuine.
    let table = gauss_legendre_16();
    let mut nodes: Vec<(f64, f64)> = Vec::new();
    for (a, b) in envelope_segments(profile) {
        let panels = panels_for(b - a, omega, settings).min(64);
        let width = (b - a) / panels as f64;
        for i in 0..panels {
            let center = a + width * (i as f64 + 0.5);
            let half = 0.5 * width;
            for &(x, w) in table.iter() {
                let t = center + half * x;
                nodes.push((t, w * half * chi(profile, t)));
            }
        }
    }
    let mut sum = CompensatedSum::default();
    for &(t, wt) in &nodes {
        let mut inner = CompensatedSum::default();
        for &(tp, wtp) in &nodes {
            inner.add(wtp * cos_product(omega, t - tp));
        }
        sum.add(wt * inner.value());
    }
    sum.value()
}

// ---------------------------------------------------------------------------
// Numeric smearing transform
// ---------------------------------------------------------------------------

/// Position-space density tail envelope: a decreasing bound on
/// 2 * int_x^inf F(y) dy, used to certify truncations.
fn density_tail_bound(spec: &SmearingSpec, x: f64) -> f64 {
    let sigma = spec.sigma;
    match spec.shape {
        SmearingShape::Sharp => 0.0,
        SmearingShape::Gaussian => {
            // 2 int_x^inf e^{-y^2/s^2}/(s sqrt(pi)) dy <= e^{-(x/s)^2} / ((x/s) sqrt(pi))
            let u = x / sigma;
            (-u * u).exp() / (u * PI.sqrt())
        }
        SmearingShape::Lorentzian => {
            // F < (sigma/2pi)/y^2  =>  2 int < sigma / (pi x)
            sigma / (PI * x)
        }
        SmearingShape::Quartic => {
            // F < sqrt(2)(sigma/2)^3/pi / y^4  =>  2 int < 2 sqrt(2) c^3 / (3 pi x^3)
            let c = 0.5 * sigma;
            2.0 * std::f64::consts::SQRT_2 * c * c * c / (3.0 * PI * x * x * x)
        }
    }
}

/// Integrate g over [a, b] with geometric (octave) subdivision so power-law
/// decay is resolved, plus an oscillation-aware floor per octave.
fn integrate_geometric<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, k: f64) -> f64 {
    debug_assert!(a > 0.0 && b > a);
    let mut sum = 0.0;
    let mut lo = a;
    while lo < b {
        let hi = (2.0 * lo).min(b);
        let panels = ((hi - lo) * k.abs() / (2.0 * PI)).ceil() as usize;
        sum += composite_gl(f, lo, hi, panels.clamp(2, 4096).max(2));
        lo = hi;
    }
    sum
}

/// Alternating-series tail: sum int over successive half-periods of
/// cos(k x) g(x) beyond `start`, accelerated by repeated averaging of the
/// partial sums (Euler transformation). Returns (value, remainder bound).
fn oscillatory_tail<F: Fn(f64) -> f64>(g: &F, start: f64, k: f64) -> (f64, f64) {
    debug_assert!(k > 0.0);
    // First zero of cos(k x) at or beyond start.
    let m = (k * start / PI - 0.5).ceil().max(0.0);
    let x0 = (m + 0.5) * PI / k;

    let f = |x: f64| g(x) * cos_product(k, x);
    let mut value = 0.0;
    if x0 > start {
        value += integrate_geometric(&f, start, x0, k);
    }

    const CHUNKS: usize = 32;
    let mut partial = [0.0f64; CHUNKS];
    let mut acc = 0.0;
    let half_period = PI / k;
    for (j, slot) in partial.iter_mut().enumerate() {
        let lo = x0 + half_period * j as f64;
        let hi = lo + half_period;
        acc += integrate_geometric(&f, lo, hi, k);
        *slot = acc;
    }
    // Euler transform: repeated averaging of partial sums. For alternating
    // chunk series with smoothly decaying magnitudes the error shrinks
    // geometrically with each pass.
    let mut row = partial.to_vec();
    let mut last_delta = f64::INFINITY;
    while row.len() > 1 {
        let next: Vec<f64> = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        last_delta = (next[0] - row[0]).abs();
        row = next;
    }
    (value + row[0], last_delta)
}

/// Numeric cosine transform of F_sigma, with the tail beyond the truncation
/// either certified negligible (Gaussian), absent (sharp), or summed as an
/// Euler-accelerated alternating series over half-periods with its analytic
/// density-tail bound at k = 0 (power-law shapes).
pub fn smearing_ft_numeric(
    spec: &SmearingSpec,
    k: f64,
    settings: &OracleSettings,
) -> Result<f64, Error> {
    let sigma = spec.sigma;
    let kappa = k.abs();
    let f = |x: f64| crate::formfactor::smearing_value(spec, x) * cos_product(kappa, x);
    let base_panels = (settings.time_grid_points / GL_ORDER).max(16);

    let finite = |upper: f64| -> f64 {
        let panels = base_panels.max(3 * ((upper * kappa / (2.0 * PI)).ceil() as usize));
        2.0 * composite_gl(&f, 0.0, upper, panels)
    };

    match spec.shape {
        SmearingShape::Sharp => Ok(finite(0.5 * sigma)),
        SmearingShape::Gaussian => {
            let upper = settings.ft_truncation.max(9.0) * sigma;
            let bound = density_tail_bound(spec, upper);
            if bound > settings.rel_tol {
                return Err(Error::TailNotCertified {
                    bound,
                    requested: settings.rel_tol,
                });
            }
            Ok(finite(upper))
        }
        SmearingShape::Lorentzian | SmearingShape::Quartic => {
            let upper = settings.ft_truncation * sigma;
            let body = finite(upper);
            let g = |x: f64| crate::formfactor::smearing_value(spec, x);
            if kappa == 0.0 {
                // No oscillation to exploit: march out geometrically until
                // the density tail bound is negligible.
                let mut far = upper;
                let mut bound = density_tail_bound(spec, far);
                let target = 0.1 * settings.rel_tol;
                while bound > target && far < sigma * 1e18 {
                    far *= 2.0;
                    bound = density_tail_bound(spec, far);
                }
                if bound > settings.rel_tol {
                    return Err(Error::TailNotCertified {
                        bound,
                        requested: settings.rel_tol,
                    });
                }
                let tail = 2.0 * integrate_geometric(&g, upper, far, 0.0);
                Ok(body + tail)
            } else {
                let (tail, remainder) = oscillatory_tail(&g, upper, kappa);
                if remainder > settings.rel_tol {
                    return Err(Error::TailNotCertified {
                        bound: remainder,
                        requested: settings.rel_tol,
                    });
                }
                Ok(body + 2.0 * tail)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Numeric probability
// ---------------------------------------------------------------------------

/// The production k-quadrature with the analytic kernel replaced by
/// [`kernel_numeric`]: same breakpoints, same panel caps, same truncation
/// policy, same summation order.
pub fn probability_numeric(
    bundle: &Bundle,
    settings: &QuadratureSettings,
    oracle: &OracleSettings,
) -> Result<ProbabilityResult, Error> {
    let profile = *bundle.switching();
    let osettings = *oracle;
    response::probability_with_kernel(bundle, settings, move |w| {
        kernel_numeric(&profile, w, &osettings)
    })
}
