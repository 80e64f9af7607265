//! Comparative studies: relative differences between smearing shapes or
//! cutoff models over 1-D and 2-D parameter grids, emitted as plot-ready
//! tabular datasets.
//!
//! Grid points are independent work items; with the `parallel` feature they
//! are evaluated on a rayon pool. Output ordering is always by sort key
//! (lexicographic in the axis grids, then pair id), never by completion
//! order, and the relative difference is computed from the
//! coupling-independent P/lambda^2 values, so rescaling lambda leaves every
//! delta bit-identical.

use std::io::{self, Write};

use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::params::{
    validate, Bundle, CutoffModel, CutoffSpec, Process, ProbabilityResult, QubitConfig,
    SmearingShape, SmearingSpec, SwitchingProfile,
};
use crate::response::{transition_probability, QuadratureSettings};

/// Relative difference |p_a - p_b| / max(p_a, p_b), the model-discrepancy
/// metric. Symmetric, in [0, 1], and independent of any common factor.
/// Both inputs zero is defined as 0; use [`relative_difference_flagged`]
/// to observe that case.
pub fn relative_difference(p_a: f64, p_b: f64) -> f64 {
    relative_difference_flagged(p_a, p_b).0
}

/// As [`relative_difference`], plus a flag marking the degenerate
/// both-zero input.
pub fn relative_difference_flagged(p_a: f64, p_b: f64) -> (f64, bool) {
    debug_assert!(p_a >= 0.0 && p_b >= 0.0);
    let max = p_a.max(p_b);
    if max == 0.0 {
        (0.0, true)
    } else {
        ((p_a - p_b).abs() / max, false)
    }
}

/// Which parameter an axis varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisName {
    Sigma,
    Epsilon,
    Ramp,
    Plateau,
}

impl AxisName {
    /// Column header; also the CLI flag spelling.
    pub fn column(self) -> &'static str {
        match self {
            AxisName::Sigma => "sigma",
            AxisName::Epsilon => "eps",
            AxisName::Ramp => "r",
            AxisName::Plateau => "T",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridScale {
    Linear,
    Log,
}

/// One varying axis with its grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxisSpec {
    pub name: AxisName,
    pub scale: GridScale,
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl AxisSpec {
    /// Materialize the grid. Strictly increasing by construction.
    pub fn grid(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.min];
        }
        let n = self.points as f64 - 1.0;
        (0..self.points)
            .map(|i| {
                let t = i as f64 / n;
                match self.scale {
                    GridScale::Linear => self.min + t * (self.max - self.min),
                    GridScale::Log => (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp(),
                }
            })
            .collect()
    }

    fn check(&self) -> Result<(), Error> {
        if self.points == 0 {
            return Err(Error::InvalidSweep(format!(
                "axis {} has an empty grid",
                self.name.column()
            )));
        }
        if self.points > 1 && !(self.min < self.max) {
            return Err(Error::InvalidSweep(format!(
                "axis {} bounds must be strictly increasing",
                self.name.column()
            )));
        }
        if self.scale == GridScale::Log && !(self.min > 0.0) {
            return Err(Error::InvalidSweep(format!(
                "axis {} uses a log grid and needs positive bounds",
                self.name.column()
            )));
        }
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::InvalidSweep(format!(
                "axis {} bounds must be finite",
                self.name.column()
            )));
        }
        Ok(())
    }
}

/// Which family of models a sweep compares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ModelSet {
    Shapes(Vec<SmearingShape>),
    Cutoffs(Vec<CutoffModel>),
}

impl ModelSet {
    fn len(&self) -> usize {
        match self {
            ModelSet::Shapes(v) => v.len(),
            ModelSet::Cutoffs(v) => v.len(),
        }
    }

    fn letter(&self, index: usize) -> char {
        match self {
            ModelSet::Shapes(v) => v[index].letter(),
            ModelSet::Cutoffs(v) => v[index].letter(),
        }
    }
}

/// Baseline parameters a sweep starts from; axis values and the model set
/// override the relevant members per evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedParams {
    pub omega: f64,
    pub lambda: f64,
    pub shape: SmearingShape,
    pub sigma: f64,
    pub cutoff: CutoffModel,
    pub epsilon: f64,
    pub ramp: f64,
    pub plateau: f64,
}

impl FixedParams {
    /// Table-of-scales defaults: Omega = 1, Gaussian sigma0 = 1e-4,
    /// exponential eps0 = 5, r = T = 1.
    pub fn reference() -> Self {
        FixedParams {
            omega: 1.0,
            lambda: 1.0,
            shape: SmearingShape::Gaussian,
            sigma: 1e-4,
            cutoff: CutoffModel::Exponential,
            epsilon: 5.0,
            ramp: 1.0,
            plateau: 1.0,
        }
    }
}

/// Full description of a comparative sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub fixed: FixedParams,
    pub process: Process,
    /// One or two varying axes; the first axis is the outer (slowest) one.
    pub axes: Vec<AxisSpec>,
    pub models: ModelSet,
    /// Keep going when a point fails, marking its rows, instead of aborting.
    pub continue_on_error: bool,
    /// Destination hint for front ends; the library never touches it.
    pub output: Option<String>,
}

impl SweepSpec {
    pub fn check(&self) -> Result<(), Error> {
        if self.axes.is_empty() {
            return Err(Error::InvalidSweep("axes must be non-empty".into()));
        }
        if self.axes.len() > 2 {
            return Err(Error::InvalidSweep("at most two axes are supported".into()));
        }
        for axis in &self.axes {
            axis.check()?;
        }
        if self.models.len() < 2 {
            return Err(Error::InvalidSweep(
                "model set needs at least two members".into(),
            ));
        }
        Ok(())
    }

    fn bundle_at(&self, axis_values: &[f64], model_index: usize) -> Result<Bundle, Error> {
        let mut sigma = self.fixed.sigma;
        let mut epsilon = self.fixed.epsilon;
        let mut ramp = self.fixed.ramp;
        let mut plateau = self.fixed.plateau;
        for (axis, &v) in self.axes.iter().zip(axis_values) {
            match axis.name {
                AxisName::Sigma => sigma = v,
                AxisName::Epsilon => epsilon = v,
                AxisName::Ramp => ramp = v,
                AxisName::Plateau => plateau = v,
            }
        }
        let mut shape = self.fixed.shape;
        let mut cutoff = self.fixed.cutoff;
        match &self.models {
            ModelSet::Shapes(v) => shape = v[model_index],
            ModelSet::Cutoffs(v) => cutoff = v[model_index],
        }
        validate(
            QubitConfig {
                omega: self.fixed.omega,
                lambda: self.fixed.lambda,
                process: self.process,
            },
            SmearingSpec { shape, sigma },
            CutoffSpec {
                model: cutoff,
                epsilon,
            },
            SwitchingProfile { ramp, plateau },
        )
    }

    fn describe_point(&self, axis_values: &[f64], model_index: usize) -> String {
        let mut parts: Vec<String> = self
            .axes
            .iter()
            .zip(axis_values)
            .map(|(a, v)| format!("{}={v:e}", a.name.column()))
            .collect();
        parts.push(format!("model={}", self.models.letter(model_index)));
        parts.join(",")
    }
}

/// One emitted comparison row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRecord {
    /// Axis values, aligned with `SweepSpec::axes`.
    pub axis_values: Vec<f64>,
    /// Two-letter pair id, e.g. "ES" for exponential vs sharp.
    pub pair: String,
    pub p_a: f64,
    pub p_b: f64,
    pub delta: f64,
    pub err_a: f64,
    pub err_b: f64,
    /// Both probabilities were exactly zero; delta is 0 by convention.
    pub both_zero: bool,
    /// The point failed and this row carries NaNs (continue-on-error mode).
    pub failed: bool,
}

fn cartesian(grids: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut points: Vec<Vec<f64>> = vec![vec![]];
    for grid in grids {
        let mut next = Vec::with_capacity(points.len() * grid.len());
        for p in &points {
            for &v in grid {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        points = next;
    }
    points
}

fn canonical_pairs(set: &ModelSet) -> Vec<(usize, usize, String)> {
    let n = set.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j, format!("{}{}", set.letter(i), set.letter(j))));
        }
    }
    pairs.sort_by(|a, b| a.2.cmp(&b.2));
    pairs
}

type PointOutcome = Result<ProbabilityResult, Error>;

fn evaluate_all<E>(spec: &SweepSpec, points: &[Vec<f64>], eval: &E, parallel: bool) -> Vec<PointOutcome>
where
    E: Fn(&Bundle, usize) -> PointOutcome + Sync,
{
    let n_models = spec.models.len();
    let tasks: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|p| (0..n_models).map(move |m| (p, m)))
        .collect();

    let run = |&(p, m): &(usize, usize)| -> PointOutcome {
        let bundle = spec.bundle_at(&points[p], m)?;
        eval(&bundle, m)
    };

    #[cfg(feature = "parallel")]
    if parallel {
        return tasks.par_iter().map(run).collect();
    }
    let _ = parallel;
    tasks.iter().map(run).collect()
}

fn assemble(
    spec: &SweepSpec,
    points: &[Vec<f64>],
    outcomes: &[PointOutcome],
) -> Result<Vec<ComparisonRecord>, Error> {
    let n_models = spec.models.len();
    let pairs = canonical_pairs(&spec.models);
    let mut records = Vec::with_capacity(points.len() * pairs.len());

    for (p, axis_values) in points.iter().enumerate() {
        // Error policy: deterministic first failure in task order.
        let mut point_failed = false;
        for m in 0..n_models {
            if let Err(e) = &outcomes[p * n_models + m] {
                if !spec.continue_on_error {
                    return Err(Error::SweepPoint {
                        params: spec.describe_point(axis_values, m),
                        source: Box::new(e.clone()),
                    });
                }
                point_failed = true;
            }
        }
        for (i, j, id) in &pairs {
            if point_failed {
                records.push(ComparisonRecord {
                    axis_values: axis_values.clone(),
                    pair: id.clone(),
                    p_a: f64::NAN,
                    p_b: f64::NAN,
                    delta: f64::NAN,
                    err_a: f64::NAN,
                    err_b: f64::NAN,
                    both_zero: false,
                    failed: true,
                });
                continue;
            }
            let a = outcomes[p * n_models + i].as_ref().expect("checked above");
            let b = outcomes[p * n_models + j].as_ref().expect("checked above");
            // Delta from the lambda-free quantities: bitwise invariant
            // under coupling rescales.
            let (delta, both_zero) =
                relative_difference_flagged(a.p_over_lambda_sq, b.p_over_lambda_sq);
            let lambda_sq = spec.fixed.lambda * spec.fixed.lambda;
            records.push(ComparisonRecord {
                axis_values: axis_values.clone(),
                pair: id.clone(),
                p_a: a.p,
                p_b: b.p,
                delta,
                err_a: lambda_sq * a.abs_error_estimate,
                err_b: lambda_sq * b.abs_error_estimate,
                both_zero,
                failed: false,
            });
        }
    }
    Ok(records)
}

/// Run a sweep with a custom probability evaluator (front ends inject
/// caching here). Parallel when the `parallel` feature is enabled.
pub fn run_sweep_with<E>(
    spec: &SweepSpec,
    eval: E,
) -> Result<Vec<ComparisonRecord>, Error>
where
    E: Fn(&Bundle) -> PointOutcome + Sync,
{
    spec.check()?;
    let grids: Vec<Vec<f64>> = spec.axes.iter().map(|a| a.grid()).collect();
    let points = cartesian(&grids);
    let outcomes = evaluate_all(spec, &points, &|b: &Bundle, _| eval(b), cfg!(feature = "parallel"));
    assemble(spec, &points, &outcomes)
}

/// Evaluate every requested probability and form all pairwise relative
/// differences, in deterministic row order.
pub fn run_sweep(
    spec: &SweepSpec,
    settings: &QuadratureSettings,
) -> Result<Vec<ComparisonRecord>, Error> {
    run_sweep_with(spec, |bundle| transition_probability(bundle, settings))
}

/// Sequential fallback with identical semantics and output; also what the
/// crate uses when built without the `parallel` feature.
pub fn run_sweep_sequential(
    spec: &SweepSpec,
    settings: &QuadratureSettings,
) -> Result<Vec<ComparisonRecord>, Error> {
    spec.check()?;
    let grids: Vec<Vec<f64>> = spec.axes.iter().map(|a| a.grid()).collect();
    let points = cartesian(&grids);
    let outcomes = evaluate_all(
        spec,
        &points,
        &|b: &Bundle, _| transition_probability(b, settings),
        false,
    );
    assemble(spec, &points, &outcomes)
}

// ---------------------------------------------------------------------------
// Figure presets
// ---------------------------------------------------------------------------

/// The pre-configured comparison datasets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FigureId {
    /// Shape pairs over sizes (exponential cutoff at eps0), emission.
    Fig2a,
    /// Shape pairs over cutoff scales (sigma0), emission.
    Fig2b,
    /// Cutoff pairs over cutoff scales (Gaussian shape, sigma0), emission.
    Fig2c,
    /// Cutoff pairs over sizes (eps0), emission.
    Fig2d,
    /// Cutoff pairs over plateau time at fast ramp (r = 0.1), excitation.
    Fig3,
    /// Cutoff pairs over the (r, T) plane, excitation.
    Fig4,
    /// Cutoff pairs over the (r, T) plane, emission.
    Fig5,
}

impl FigureId {
    pub const ALL: [FigureId; 7] = [
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig2c,
        FigureId::Fig2d,
        FigureId::Fig3,
        FigureId::Fig4,
        FigureId::Fig5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig2c => "fig2c",
            FigureId::Fig2d => "fig2d",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        }
    }

    pub fn parse(s: &str) -> Option<FigureId> {
        FigureId::ALL.iter().copied().find(|f| f.name() == s)
    }
}

const ONE_D_POINTS: usize = 25;
const TWO_D_POINTS: usize = 20;

fn log_axis(name: AxisName, min: f64, max: f64, points: usize) -> AxisSpec {
    AxisSpec {
        name,
        scale: GridScale::Log,
        min,
        max,
        points,
    }
}

/// The sweep configuration behind each figure dataset. Grids default to
/// logarithmic (every compared quantity spans decades); point counts are
/// 25 for 1-D figures and 20 x 20 for the (r, T) planes.
pub fn figure_spec(id: FigureId) -> SweepSpec {
    let scales = crate::params::ScaleDefaults::default();
    let fixed = FixedParams {
        ramp: scales.r0,
        plateau: scales.t0,
        ..FixedParams::reference()
    };
    let all_shapes = ModelSet::Shapes(SmearingShape::ALL.to_vec());
    let all_cutoffs = ModelSet::Cutoffs(CutoffModel::ALL.to_vec());
    match id {
        FigureId::Fig2a => SweepSpec {
            fixed,
            process: Process::Emission,
            axes: vec![log_axis(
                AxisName::Sigma,
                0.1 * scales.sigma0,
                10.0 * scales.sigma0,
                ONE_D_POINTS,
            )],
            models: all_shapes,
            continue_on_error: false,
            output: None,
        },
        FigureId::Fig2b => SweepSpec {
            fixed,
            process: Process::Emission,
            axes: vec![log_axis(
                AxisName::Epsilon,
                0.1 * scales.epsilon0,
                20.0 * scales.epsilon0,
                ONE_D_POINTS,
            )],
            models: all_shapes,
            continue_on_error: false,
            output: None,
        },
        FigureId::Fig2c => SweepSpec {
            fixed,
            process: Process::Emission,
            axes: vec![log_axis(
                AxisName::Epsilon,
                0.1 * scales.epsilon0,
                20.0 * scales.epsilon0,
                ONE_D_POINTS,
            )],
            models: all_cutoffs,
            continue_on_error: false,
            output: None,
        },
        FigureId::Fig2d => SweepSpec {
            fixed,
            process: Process::Emission,
            axes: vec![log_axis(
                AxisName::Sigma,
                0.1 * scales.sigma0,
                10.0 * scales.sigma0,
                ONE_D_POINTS,
            )],
            models: all_cutoffs,
            continue_on_error: false,
            output: None,
        },
        FigureId::Fig3 => SweepSpec {
            fixed: FixedParams {
                ramp: 0.1 * scales.r0,
                ..fixed
            },
            process: Process::Excitation,
            axes: vec![log_axis(AxisName::Plateau, 0.01, 100.0, ONE_D_POINTS)],
            models: all_cutoffs,
            continue_on_error: false,
            output: None,
        },
        FigureId::Fig4 | FigureId::Fig5 => SweepSpec {
            fixed,
            process: if id == FigureId::Fig4 {
                Process::Excitation
            } else {
                Process::Emission
            },
            axes: vec![
                log_axis(AxisName::Ramp, 0.01, 100.0, TWO_D_POINTS),
                log_axis(AxisName::Plateau, 0.01, 100.0, TWO_D_POINTS),
            ],
            models: all_cutoffs,
            continue_on_error: false,
            output: None,
        },
    }
}

/// Run the pre-configured sweep for a figure.
pub fn figure_dataset(
    id: FigureId,
    settings: &QuadratureSettings,
) -> Result<Vec<ComparisonRecord>, Error> {
    run_sweep(&figure_spec(id), settings)
}

// ---------------------------------------------------------------------------
// Dataset format
// ---------------------------------------------------------------------------

/// Scientific notation with 13 significant digits (">= 12" contract).
pub fn format_value(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.12e}")
    }
}

/// Write the dataset: one header line naming the columns (axes, then pair
/// id, then p_a, p_b, delta, err_a, err_b), comma-separated, "." decimal,
/// scientific notation, LF line endings, rows already in deterministic
/// order.
pub fn write_dataset<W: Write>(
    spec: &SweepSpec,
    records: &[ComparisonRecord],
    out: &mut W,
) -> io::Result<()> {
    let mut header: Vec<&str> = spec.axes.iter().map(|a| a.name.column()).collect();
    header.extend_from_slice(&["pair", "p_a", "p_b", "delta", "err_a", "err_b"]);
    out.write_all(header.join(",").as_bytes())?;
    out.write_all(b"\n")?;
    for rec in records {
        let mut fields: Vec<String> = rec.axis_values.iter().map(|&v| format_value(v)).collect();
        fields.push(rec.pair.clone());
        fields.push(format_value(rec.p_a));
        fields.push(format_value(rec.p_b));
        fields.push(format_value(rec.delta));
        fields.push(format_value(rec.err_a));
        fields.push(format_value(rec.err_b));
        out.write_all(fields.join(",").as_bytes())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
