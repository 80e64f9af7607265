//! Oracle-vs-analytic cross checks, runnable from tests and from the CLI.
//!
//! Three suites: the switching kernel against the numeric double integral,
//! the four smearing transforms against the numeric cosine transform (plus
//! normalization), and end-to-end probabilities with the analytic kernel
//! against probabilities with the numeric kernel.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::{self, OracleSettings};
use crate::params::{
    validate, CutoffModel, CutoffSpec, Process, QubitConfig, SmearingShape, SmearingSpec,
    SwitchingProfile,
};
use crate::response::{transition_probability, QuadratureSettings};
use crate::{formfactor, switching};

/// Configuration for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Number of randomized cases per suite.
    pub points: usize,
    /// RNG seed; fixed seed makes runs reproducible.
    pub seed: u64,
    /// Test hook: the analytic kernel is multiplied by this factor before
    /// comparison. 1.0 in normal operation; a value like 1 + 1e-4 must make
    /// the kernel suite fail.
    pub kernel_scale: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            points: 20,
            seed: 0x51_1e_a5,
            kernel_scale: 1.0,
        }
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Parameter tuple at the worst deviation.
    pub worst_case: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The failing check with the largest deviation, if any.
    pub fn worst_failure(&self) -> Option<&CheckResult> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .max_by(|a, b| a.max_deviation.total_cmp(&b.max_deviation))
    }
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.random::<f64>() * (hi.ln() - lo.ln()) + lo.ln()).exp()
}

/// Absolute noise bound on the numeric transform amplitude: per-node trig
/// rounding accumulates coherently to at most a few epsilon times the
/// envelope area (compensated summation removes the accumulation term).
/// The kernel comparison cannot resolve differences below the matching
/// K-level budget, so that budget is subtracted before the relative test.
pub fn kernel_noise_budget(profile: &SwitchingProfile, numeric_k: f64) -> f64 {
    let amplitude_noise = 8.0 * f64::EPSILON * profile.area();
    2.0 * numeric_k.abs().sqrt() * amplitude_noise + amplitude_noise * amplitude_noise
}

fn kernel_suite(cfg: &VerifyConfig) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let oracle_settings = OracleSettings::default();
    let tolerance = 1e-6;
    let mut max_dev = 0.0f64;
    let mut worst = String::new();

    let n_profiles = cfg.points.max(1);
    for _ in 0..n_profiles {
        let r = log_uniform(&mut rng, 0.05, 50.0);
        let t = log_uniform(&mut rng, 0.05, 50.0);
        let profile = SwitchingProfile { ramp: r, plateau: t };
        let floor = 1e-30 * profile.area() * profile.area();
        // Log-spaced frequencies plus the removable points themselves.
        let mut omegas: Vec<f64> = (0..40)
            .map(|i| 1e-3 * (1e6f64).powf(i as f64 / 39.0))
            .collect();
        omegas.push(0.0);
        omegas.push(std::f64::consts::PI / r);
        for &w in &omegas {
            let analytic = switching::spectral_kernel(&profile, w).value * cfg.kernel_scale;
            let numeric = oracle::kernel_numeric(&profile, w, &oracle_settings);
            let excess =
                ((analytic - numeric).abs() - kernel_noise_budget(&profile, numeric)).max(0.0);
            let dev = excess / numeric.max(floor);
            if dev > max_dev {
                max_dev = dev;
                worst = format!("r={r:.6e},T={t:.6e},omega={w:.6e}");
            }
        }
    }

    CheckResult {
        name: "kernel: analytic vs numeric double integral",
        max_deviation: max_dev,
        tolerance,
        worst_case: worst,
        pass: max_dev < tolerance,
    }
}

fn transform_suite(cfg: &VerifyConfig) -> CheckResult {
    let oracle_settings = OracleSettings::default();
    let tolerance = 1e-8;
    let mut max_dev = 0.0f64;
    let mut worst = String::new();
    let n_k = (cfg.points * 2).clamp(11, 51);

    for shape in SmearingShape::ALL {
        for &sigma in &[1e-4, 1.0, 2.0] {
            let spec = SmearingSpec { shape, sigma };
            for i in 0..n_k {
                let k = 50.0 / sigma * (i as f64) / (n_k as f64 - 1.0);
                let closed = formfactor::smearing_ft(&spec, k);
                let numeric = match oracle::smearing_ft_numeric(&spec, k, &oracle_settings) {
                    Ok(v) => v,
                    Err(_) => {
                        max_dev = f64::INFINITY;
                        worst = format!("shape={shape:?},sigma={sigma:e},k={k:e} (tail)");
                        continue;
                    }
                };
                let dev = (closed - numeric).abs();
                if dev > max_dev {
                    max_dev = dev;
                    worst = format!("shape={shape:?},sigma={sigma:e},k={k:.6e}");
                }
            }
        }
    }

    CheckResult {
        name: "transform: closed form vs numeric (absolute)",
        max_deviation: max_dev,
        tolerance,
        worst_case: worst,
        pass: max_dev < tolerance,
    }
}

fn normalization_suite() -> CheckResult {
    let oracle_settings = OracleSettings::default();
    let tolerance = 1e-9;
    let mut max_dev = 0.0f64;
    let mut worst = String::new();
    for shape in SmearingShape::ALL {
        for &sigma in &[1e-4, 0.3, 1.0, 7.0] {
            let spec = SmearingSpec { shape, sigma };
            let dev = match oracle::smearing_ft_numeric(&spec, 0.0, &oracle_settings) {
                Ok(v) => (v - 1.0).abs(),
                Err(_) => f64::INFINITY,
            };
            if dev > max_dev {
                max_dev = dev;
                worst = format!("shape={shape:?},sigma={sigma:e}");
            }
        }
    }
    CheckResult {
        name: "normalization: numeric integral of F_sigma vs 1",
        max_deviation: max_dev,
        tolerance,
        worst_case: worst,
        pass: max_dev < tolerance,
    }
}

/// Deterministic pseudo-random bundles spanning both processes and all
/// 16 shape x cutoff combinations.
pub fn random_bundles(points: usize, seed: u64) -> Vec<crate::params::Bundle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..points)
        .map(|i| {
            let shape = SmearingShape::ALL[i % 4];
            let model = CutoffModel::ALL[(i / 4) % 4];
            let process = if i % 2 == 0 {
                Process::Excitation
            } else {
                Process::Emission
            };
            validate(
                QubitConfig {
                    omega: 1.0,
                    lambda: 1.0,
                    process,
                },
                SmearingSpec {
                    shape,
                    sigma: log_uniform(&mut rng, 1e-5, 1e-3),
                },
                CutoffSpec {
                    model,
                    epsilon: log_uniform(&mut rng, 0.5, 10.0),
                },
                SwitchingProfile {
                    ramp: log_uniform(&mut rng, 0.1, 10.0),
                    plateau: log_uniform(&mut rng, 0.1, 10.0),
                },
            )
            .expect("generated parameters satisfy all invariants")
        })
        .collect()
}

fn end_to_end_suite(cfg: &VerifyConfig) -> CheckResult {
    let tolerance = 1e-6;
    let settings = QuadratureSettings::default();
    // The numeric kernel sits inside every integrand evaluation; a reduced
    // grid keeps verify interactive while staying far below the tolerance.
    let oracle_settings = OracleSettings {
        time_grid_points: 2048,
        ..OracleSettings::default()
    };
    let mut max_dev = 0.0f64;
    let mut worst = String::new();

    for (i, bundle) in random_bundles(cfg.points, cfg.seed ^ 0x5eed).iter().enumerate() {
        let analytic = transition_probability(bundle, &settings);
        let numeric = oracle::probability_numeric(bundle, &settings, &oracle_settings);
        let dev = match (analytic, numeric) {
            (Ok(a), Ok(n)) => {
                (a.p_over_lambda_sq - n.p_over_lambda_sq).abs()
                    / n.p_over_lambda_sq.abs().max(1e-300)
            }
            _ => f64::INFINITY,
        };
        if dev > max_dev {
            max_dev = dev;
            worst = format!(
                "bundle#{i}: shape={:?},cutoff={:?},process={:?},sigma={:e},eps={:e},r={:e},T={:e}",
                bundle.smearing().shape,
                bundle.cutoff().model,
                bundle.config().process,
                bundle.smearing().sigma,
                bundle.cutoff().epsilon,
                bundle.switching().ramp,
                bundle.switching().plateau,
            );
        }
    }

    CheckResult {
        name: "end-to-end: analytic kernel vs numeric kernel probabilities",
        max_deviation: max_dev,
        tolerance,
        worst_case: worst,
        pass: max_dev < tolerance,
    }
}

/// Run all suites.
pub fn run_verification(cfg: &VerifyConfig) -> VerifyReport {
    VerifyReport {
        checks: vec![
            kernel_suite(cfg),
            transform_suite(cfg),
            normalization_suite(),
            end_to_end_suite(cfg),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_verification_passes() {
        let report = run_verification(&VerifyConfig {
            points: 3,
            ..VerifyConfig::default()
        });
        for check in &report.checks {
            assert!(
                check.pass,
                "{} failed: {} at {}",
                check.name, check.max_deviation, check.worst_case
            );
        }
    }

    #[test]
    fn injected_kernel_fault_is_detected() {
        let report = run_verification(&VerifyConfig {
            points: 2,
            kernel_scale: 1.0 + 1e-4,
            ..VerifyConfig::default()
        });
        assert!(!report.all_pass());
        let worst = report.worst_failure().unwrap();
        assert!(worst.worst_case.contains("omega="), "no tuple reported");
    }

    #[test]
    fn bundles_cover_all_combinations() {
        let bundles = random_bundles(20, 7);
        let mut combos = std::collections::HashSet::new();
        for b in &bundles {
            combos.insert((b.smearing().shape, b.cutoff().model));
        }
        assert_eq!(combos.len(), 16);
        assert!(bundles.iter().any(|b| b.config().process == Process::Emission));
        assert!(bundles.iter().any(|b| b.config().process == Process::Excitation));
    }
}
