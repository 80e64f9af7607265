//! Small numeric helpers shared across modules.

/// sin(x)/x, with the removable singularity at x = 0 handled by a 4th-order
/// series. The series branch engages for |x| < 1e-3, where its truncation
/// error (x^6/5040) is below 2e-22 and therefore invisible in f64.
pub(crate) fn sinc(x: f64) -> f64 {
    sinc_flagged(x).0
}

/// Like [`sinc`], but also reports whether the series branch was taken.
pub(crate) fn sinc_flagged(x: f64) -> (f64, bool) {
    if x.abs() < 1e-3 {
        let x2 = x * x;
        (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0), true)
    } else {
        (x.sin() / x, false)
    }
}

/// Exact product a*b = h + l with h = fl(a*b), via Veltkamp splitting.
/// Valid away from overflow/underflow extremes.
fn two_product(a: f64, b: f64) -> (f64, f64) {
    const SPLIT: f64 = 134_217_729.0; // 2^27 + 1
    let h = a * b;
    let a1 = a * SPLIT;
    let ah = a1 - (a1 - a);
    let al = a - ah;
    let b1 = b * SPLIT;
    let bh = b1 - (b1 - b);
    let bl = b - bh;
    let l = ((ah * bh - h) + ah * bl + al * bh) + al * bl;
    (h, l)
}

/// cos(a*b) with the product formed exactly: the rounding residual of a*b
/// (up to half an ulp, which for large phases dwarfs the final cancellation
/// level of oscillatory integrals) is folded back in to first order.
pub(crate) fn cos_product(a: f64, b: f64) -> f64 {
    let (h, l) = two_product(a, b);
    h.cos() - l * h.sin()
}

/// sin(a*b) with the product formed exactly; see [`cos_product`].
pub(crate) fn sin_product(a: f64, b: f64) -> f64 {
    let (h, l) = two_product(a, b);
    h.sin() + l * h.cos()
}

/// Compensated (Kahan-Babuska-Neumaier) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
