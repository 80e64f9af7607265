//! Adaptive panel quadrature on finite unions of intervals.
//!
//! A 15-point Gauss-Kronrod rule supplies per-panel values with an embedded
//! 7-point Gauss error estimate. The driver seeds one panel per declared
//! breakpoint interval (further split to respect an optional width cap for
//! oscillatory integrands), then repeatedly bisects the worst panel until
//! the summed error estimate meets the tolerance.
//!
//! Determinism: panel selection breaks ties on interval endpoints, and the
//! final value re-sums all leaf panels in left-to-right order, so the result
//! depends only on the inputs, never on evaluation scheduling.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::Error;

// 15-point Kronrod abscissae (positive half), embedding the 7-point Gauss
// rule at the odd indices. Standard QUADPACK constants.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One Gauss-Kronrod panel evaluation.
#[derive(Debug, Clone, Copy)]
pub struct PanelEval {
    pub value: f64,
    pub abs_error: f64,
    pub resabs: f64,
    pub resasc: f64,
}

fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut scaled = err.abs();
    if resasc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / resasc).powf(1.5);
        scaled = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * resabs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// Apply the 15-point Gauss-Kronrod rule to `f` on [a, b].
pub fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> PanelEval {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let abs_half = half.abs();

    let f_center = f(center);
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();

    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];

    for (j, wg) in WG.iter().enumerate().take(3) {
        let jtw = 2 * j + 1;
        let abscissa = half * XGK[jtw];
        let f1 = f(center - abscissa);
        let f2 = f(center + abscissa);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        res_gauss += wg * (f1 + f2);
        res_kronrod += WGK[jtw] * (f1 + f2);
        res_abs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    res_gauss += WG[3] * f_center;

    for j in 0..4 {
        let jtwm1 = 2 * j;
        if jtwm1 >= 7 {
            break;
        }
        let abscissa = half * XGK[jtwm1];
        let f1 = f(center - abscissa);
        let f2 = f(center + abscissa);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        res_kronrod += WGK[jtwm1] * (f1 + f2);
        res_abs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let err = (res_kronrod - res_gauss) * half;
    let value = res_kronrod * half;
    let resabs = res_abs * abs_half;
    let resasc = res_asc * abs_half;

    PanelEval {
        value,
        abs_error: rescale_error(err, resabs, resasc),
        resabs,
        resasc,
    }
}

/// Options for [`integrate_segmented`].
#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Budget of leaf panels across the whole call.
    pub max_panels: usize,
    /// Upper bound on initial panel width; `None` seeds one panel per
    /// breakpoint interval.
    pub width_cap: Option<f64>,
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome {
    pub value: f64,
    pub abs_error: f64,
    /// Leaf panel count.
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

// Max-heap on error, with endpoint tie-breaks so the pop order is total.
impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
            .then_with(|| other.b.total_cmp(&self.b))
    }
}

/// Integrate `f` over [points[0], points[last]] treating every interior
/// point as a panel boundary (kinks, removable singularities, support
/// edges). `points` must be strictly increasing with at least two entries.
pub fn integrate_segmented<F: Fn(f64) -> f64>(
    f: &F,
    points: &[f64],
    opts: &QuadOptions,
) -> Result<QuadOutcome, Error> {
    assert!(points.len() >= 2, "need at least two breakpoints");
    debug_assert!(points.windows(2).all(|w| w[0] < w[1]));

    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let mut panels = 0usize;
    let mut sum = 0.0;
    let mut errsum = 0.0;

    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let width = b - a;
        let splits = match opts.width_cap {
            Some(cap) if cap > 0.0 && width > cap => (width / cap).ceil() as usize,
            _ => 1,
        };
        for i in 0..splits {
            let lo = a + width * (i as f64) / (splits as f64);
            let hi = if i + 1 == splits {
                b
            } else {
                a + width * ((i + 1) as f64) / (splits as f64)
            };
            let eval = gk15(f, lo, hi);
            sum += eval.value;
            errsum += eval.abs_error;
            heap.push(Panel {
                a: lo,
                b: hi,
                value: eval.value,
                error: eval.abs_error,
            });
            panels += 1;
            if panels > opts.max_panels {
                return Err(Error::MaxPanelsExceeded {
                    estimate: sum,
                    error_bound: errsum,
                    panels,
                });
            }
        }
    }

    loop {
        let tolerance = (opts.rel_tol * sum.abs()).max(opts.abs_tol);
        if errsum <= tolerance {
            break;
        }
        let Some(worst) = heap.pop() else {
            // Every panel is frozen at roundoff width; report what we have.
            break;
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // Panel too narrow to bisect in f64; its error is irreducible.
            frozen.push(worst);
            continue;
        }
        if panels + 1 > opts.max_panels {
            heap.push(worst);
            return Err(Error::MaxPanelsExceeded {
                estimate: sum,
                error_bound: errsum,
                panels,
            });
        }
        let left = gk15(f, worst.a, mid);
        let right = gk15(f, mid, worst.b);
        sum += left.value + right.value - worst.value;
        errsum += left.abs_error + right.abs_error - worst.error;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: left.value,
            error: left.abs_error,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: right.value,
            error: right.abs_error,
        });
        panels += 1;
    }

    // Deterministic final summation: left-to-right over all leaves.
    let mut leaves: Vec<Panel> = heap.into_vec();
    leaves.extend(frozen);
    leaves.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = 0.0;
    let mut abs_error = 0.0;
    for leaf in &leaves {
        value += leaf.value;
        abs_error += leaf.error;
    }

    Ok(QuadOutcome {
        value,
        abs_error,
        panels,
    })
}
