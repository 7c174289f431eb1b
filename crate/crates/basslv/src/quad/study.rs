//! Empirical convergence study of the convolution schemes.
//!
//! Integrates a family of test functions against the Gaussian weight with
//! both schemes over a range of point counts and reports absolute errors
//! together with successive log-log slopes. Reference values come from a
//! 10⁶-point composite trapezoid on [−12σ, 12σ].

use serde::Serialize;

use crate::error::Result;
use crate::math::cubic_spline::CubicSpline;
use crate::math::fit::{line_fit, LineFit};
use crate::quad::{heat_kernel, integrate_against_kernel, QuadratureScheme, SchemeKind};

/// Test integrand family for the study.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrandFamily {
    /// Natural cubic-spline interpolants of smooth bumps on a fixed knot
    /// grid: C² piecewise polynomials with third-derivative jumps at
    /// every knot, the same class the calibration iterates live in.
    CubicSpline,
    /// The analytic bump `exp(−x²/4)` (effectively unlimited smoothness).
    Gaussian,
}

impl IntegrandFamily {
    /// Smoothness order fed to the trapezoid parameter rule.
    pub fn smoothness(&self) -> u32 {
        match self {
            IntegrandFamily::CubicSpline => 2,
            IntegrandFamily::Gaussian => 4,
        }
    }

    fn members(&self) -> Vec<Box<dyn Fn(f64) -> f64>> {
        match self {
            IntegrandFamily::CubicSpline => {
                let params =
                    [(-0.95, 0.8), (-0.45, 0.7), (0.2, 0.9), (0.75, 1.1), (1.3, 1.0)];
                params
                    .iter()
                    .map(|&(c, s): &(f64, f64)| {
                        // knots every 0.35 over [-6, 6]
                        let n_knots = (12.0 / 0.35_f64).round() as usize;
                        let knots: Vec<f64> =
                            (0..=n_knots).map(|i| -6.0 + 0.35 * i as f64).collect();
                        let vals: Vec<f64> = knots
                            .iter()
                            .map(|&x| (-(x - c) * (x - c) / (2.0 * s * s)).exp())
                            .collect();
                        let hi = knots[n_knots];
                        let spline = CubicSpline::new(knots, vals).expect("valid knots");
                        Box::new(move |x: f64| {
                            if (-6.0..=hi).contains(&x) {
                                spline.eval(x)
                            } else {
                                0.0
                            }
                        }) as Box<dyn Fn(f64) -> f64>
                    })
                    .collect()
            }
            IntegrandFamily::Gaussian => {
                vec![Box::new(|x: f64| (-x * x / 4.0).exp())]
            }
        }
    }
}

/// One measured point of the study.
#[derive(Debug, Clone, Serialize)]
pub struct StudyRow {
    pub scheme: SchemeKind,
    pub n: usize,
    pub abs_error: f64,
    /// Log-log slope against the previous point count of the same scheme.
    pub slope: Option<f64>,
}

/// Run the study: family-averaged absolute quadrature errors per scheme
/// and point count, with successive log-log slopes attached.
pub fn convergence_study(
    family: IntegrandFamily,
    n_list: &[usize],
    kinds: &[SchemeKind],
    t: f64,
) -> Result<Vec<StudyRow>> {
    let members = family.members();
    let m = family.smoothness();

    let references: Vec<f64> =
        members.iter().map(|f| reference_integral(f.as_ref(), t)).collect::<Result<_>>()?;

    let mut rows = Vec::new();
    for &kind in kinds {
        let mut prev: Option<(usize, f64)> = None;
        for &n in n_list {
            let scheme = QuadratureScheme::new(kind, n, m, None)?;
            let mut err_sum = 0.0;
            for (f, reference) in members.iter().zip(&references) {
                let approx = integrate_against_kernel(&|x| f(x), t, &scheme)?;
                err_sum += (approx - reference).abs();
            }
            let abs_error = err_sum / members.len() as f64;
            let slope = prev.map(|(n0, e0)| {
                ((abs_error.max(1e-300)).ln() - (e0.max(1e-300)).ln())
                    / ((n as f64).ln() - (n0 as f64).ln())
            });
            rows.push(StudyRow { scheme: kind, n, abs_error, slope });
            prev = Some((n, abs_error));
        }
    }
    Ok(rows)
}

/// Least-squares log-log slope over all rows of one scheme.
pub fn fitted_slope(rows: &[StudyRow], kind: SchemeKind) -> Option<LineFit> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.scheme == kind && r.abs_error > 0.0)
        .map(|r| ((r.n as f64).ln(), r.abs_error.ln()))
        .collect();
    let (x, y): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
    line_fit(&x, &y)
}

fn reference_integral(f: &dyn Fn(f64) -> f64, t: f64) -> Result<f64> {
    let sigma = t.sqrt();
    let lim = 12.0 * sigma;
    let n = 1_000_000usize;
    let h = 2.0 * lim / n as f64;
    let g = |x: f64| f(x) * heat_kernel(x, t).unwrap_or(0.0);
    let mut acc = 0.5 * (g(-lim) + g(lim));
    for i in 1..n {
        acc += g(-lim + i as f64 * h);
    }
    Ok(acc * h)
}
