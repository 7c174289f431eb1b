//! Shape-preserving piecewise cubic Hermite interpolation
//! (Fritsch-Carlson slope limiting).
//!
//! The interpolant is C¹, reproduces the data exactly, and on every
//! interval stays within the range of its two endpoint values. Monotone
//! data therefore yield a monotone interpolant and non-negative data a
//! non-negative one.

/// Monotone piecewise cubic through strictly increasing abscissae.
#[derive(Debug, Clone)]
pub struct Pchip {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
    /// (x0, step) when the grid is uniform; enables O(1) segment lookup.
    uniform: Option<(f64, f64)>,
}

impl Pchip {
    /// Build the interpolant. `x` must be strictly increasing with
    /// `x.len() == y.len() >= 2`; all values finite.
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Option<Self> {
        let n = x.len();
        if n < 2 || y.len() != n {
            return None;
        }
        if x.windows(2).any(|w| !(w[1] > w[0])) {
            return None;
        }
        if x.iter().chain(y.iter()).any(|v| !v.is_finite()) {
            return None;
        }

        let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
        let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();

        let mut d = vec![0.0; n];
        if n == 2 {
            d[0] = delta[0];
            d[1] = delta[0];
        } else {
            for i in 1..n - 1 {
                if delta[i - 1] * delta[i] <= 0.0 {
                    d[i] = 0.0;
                } else {
                    // weighted harmonic mean keeps slopes in the
                    // Fritsch-Carlson monotonicity region
                    let w1 = 2.0 * h[i] + h[i - 1];
                    let w2 = h[i] + 2.0 * h[i - 1];
                    d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
                }
            }
            d[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
            d[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
        }

        let span = x[n - 1] - x[0];
        let step = span / (n - 1) as f64;
        let uniform = x
            .iter()
            .enumerate()
            .all(|(i, &xi)| (xi - (x[0] + i as f64 * step)).abs() <= 1e-9 * span)
            .then_some((x[0], step));

        Some(Self { x, y, d, uniform })
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    #[inline]
    fn segment(&self, x: f64) -> usize {
        if let Some((x0, step)) = self.uniform {
            let i = ((x - x0) / step).floor();
            return (i.max(0.0) as usize).min(self.x.len() - 2);
        }
        match self.x.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.x.len() - 2),
            Err(0) => 0,
            Err(i) => (i - 1).min(self.x.len() - 2),
        }
    }

    /// Evaluate inside the grid; outside, continues the boundary cubic.
    /// Callers wanting clamped or linear extrapolation handle it above.
    pub fn eval(&self, xq: f64) -> f64 {
        let i = self.segment(xq);
        let h = self.x[i + 1] - self.x[i];
        let t = (xq - self.x[i]) / h;
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        let (d0, d1) = (self.d[i], self.d[i + 1]);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + h * d0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + h * d1 * (t3 - t2)
    }

    /// First derivative of the interpolant.
    pub fn eval_deriv(&self, xq: f64) -> f64 {
        let i = self.segment(xq);
        let h = self.x[i + 1] - self.x[i];
        let t = (xq - self.x[i]) / h;
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        let (d0, d1) = (self.d[i], self.d[i + 1]);
        let t2 = t * t;
        (y0 * (6.0 * t2 - 6.0 * t) / h)
            + d0 * (3.0 * t2 - 4.0 * t + 1.0)
            + (y1 * (6.0 * t - 6.0 * t2) / h)
            + d1 * (3.0 * t2 - 2.0 * t)
    }
}

// One-sided three-point slope estimate, limited as in Fritsch-Carlson.
fn edge_slope(h0: f64, h1: f64, delta0: f64, delta1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * delta0 - h0 * delta1) / (h0 + h1);
    if d * delta0 <= 0.0 {
        0.0
    } else if delta0 * delta1 < 0.0 && d.abs() > 3.0 * delta0.abs() {
        3.0 * delta0
    } else {
        d
    }
}
