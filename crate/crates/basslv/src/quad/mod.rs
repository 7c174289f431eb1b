//! Numerical convolution against the heat kernel.
//!
//! The fixed-point operator of the Bass construction repeatedly evaluates
//! `(K_t ⋆ f)(w) = ∫ f(w − x) ρ_t(x) dx` with `ρ_t` the centered Gaussian
//! density of variance `t`. Two schemes are provided:
//!
//! * a truncated trapezoidal rule whose step `h` and truncation level
//!   `Nh` follow the optimal rule
//!   `Nh = √(2·t/(1−ε) · m · ln(2N+1))`, `h = Nh/N`,
//!   giving an error of order `(ln n)^{m/2+1/4} / n^m` for integrands of
//!   smoothness order `m`;
//! * Gauss-Hermite quadrature with nodes from the Golub-Welsch
//!   eigenproblem, converging like `n^{−m/2}` for the same class.
//!
//! Spline-represented distribution functions have small finite `m`, which
//! is what makes the trapezoidal scheme the faster route to a given
//! accuracy in the calibration loop.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::pchip::Pchip;

pub mod hermite;
pub mod study;

/// Largest supported Gauss-Hermite order.
pub const MAX_GH_ORDER: usize = 200;

/// Which convolution scheme to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeKind {
    Trapezoid,
    GaussHermite,
}

impl std::fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchemeKind::Trapezoid => write!(f, "trapezoid"),
            SchemeKind::GaussHermite => write!(f, "gauss_hermite"),
        }
    }
}

/// Convolution scheme configuration.
///
/// `n` is the total point count (`2N+1` for the trapezoid, the node count
/// for Gauss-Hermite). `m` is the smoothness order assumed for the
/// integrand; `epsilon` the trapezoid truncation parameter, which must lie
/// in `(max{1−t, 0}, 1)` for interval variance `t` and defaults to the
/// midpoint of that interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureScheme {
    pub kind: SchemeKind,
    pub n: usize,
    pub m: u32,
    pub epsilon: Option<f64>,
}

impl QuadratureScheme {
    pub fn new(kind: SchemeKind, n: usize, m: u32, epsilon: Option<f64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("scheme needs n >= 3, got {n}")));
        }
        if kind == SchemeKind::Trapezoid && n % 2 == 0 {
            return Err(Error::invalid(format!(
                "trapezoid scheme needs an odd point count 2N+1, got {n}"
            )));
        }
        if kind == SchemeKind::GaussHermite && n > MAX_GH_ORDER {
            return Err(Error::UnsupportedOrder { n, max: MAX_GH_ORDER });
        }
        if m < 1 {
            return Err(Error::invalid("smoothness order m must be >= 1"));
        }
        if let Some(e) = epsilon {
            if !(0.0 < e && e < 1.0) {
                return Err(Error::EpsilonOutOfRange { epsilon: e, lo: 0.0, hi: 1.0 });
            }
        }
        Ok(Self { kind, n, m, epsilon })
    }

    /// Default trapezoid scheme: 101 points, smoothness order 2.
    pub fn trapezoid_default() -> Self {
        Self { kind: SchemeKind::Trapezoid, n: 101, m: 2, epsilon: None }
    }

    /// Default Gauss-Hermite scheme: 101 nodes, smoothness order 2.
    pub fn gauss_hermite_default() -> Self {
        Self { kind: SchemeKind::GaussHermite, n: 101, m: 2, epsilon: None }
    }

    /// A copy with a different point count.
    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    /// Truncation parameter for interval variance `dt`: the configured
    /// value if admissible, otherwise the midpoint of the admissible
    /// interval.
    pub fn resolve_epsilon(&self, dt: f64) -> Result<f64> {
        let lo = (1.0 - dt).max(0.0);
        match self.epsilon {
            Some(e) => {
                if e > lo && e < 1.0 {
                    Ok(e)
                } else {
                    Err(Error::EpsilonOutOfRange { epsilon: e, lo, hi: 1.0 })
                }
            }
            None => Ok(0.5 * (lo + 1.0)),
        }
    }
}

/// Gaussian heat kernel `K_t(x) = exp(−x²/2t)/√(2πt)`.
pub fn heat_kernel(x: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::invalid(format!("heat kernel needs t > 0, got {t}")));
    }
    Ok((-x * x / (2.0 * t)).exp() / (2.0 * std::f64::consts::PI * t).sqrt())
}

/// Optimal trapezoid step and truncation for smoothness `m`, half-count
/// `n_half` (the rule uses `2·n_half + 1` points), interval length `dt`
/// and truncation parameter `epsilon`.
///
/// Returns `(h, nh)` with `nh = √(2·dt/(1−ε)·m·ln(2N+1))` and `h = nh/N`,
/// so `h·N == nh` exactly.
pub fn trapezoid_params(m: u32, n_half: usize, dt: f64, epsilon: f64) -> Result<(f64, f64)> {
    if !(dt > 0.0) {
        return Err(Error::InvalidVariance { variance: dt });
    }
    if n_half < 1 {
        return Err(Error::invalid("trapezoid needs N >= 1"));
    }
    if m < 1 {
        return Err(Error::invalid("smoothness order m must be >= 1"));
    }
    let lo = (1.0 - dt).max(0.0);
    if !(epsilon > lo && epsilon < 1.0) {
        return Err(Error::EpsilonOutOfRange { epsilon, lo, hi: 1.0 });
    }
    let n_points = 2.0 * n_half as f64 + 1.0;
    let nh = (2.0 * dt / (1.0 - epsilon) * m as f64 * n_points.ln()).sqrt();
    let h = nh / n_half as f64;
    // report the truncation as h*N so the pair is exactly consistent
    Ok((h, h * n_half as f64))
}

/// Gauss-Hermite nodes and weights transformed to the Gaussian weight of
/// variance `t`: `Σ wᵢ f(xᵢ) ≈ ∫ f(x) ρ_t(x) dx`.
///
/// Nodes come from the Golub-Welsch symmetric tridiagonal eigenproblem of
/// the physicists' Hermite recurrence, then are scaled by `√(2t)`; weights
/// are normalized so they sum to one.
pub fn gh_nodes(n: usize, t: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n < 1 || n > MAX_GH_ORDER {
        return Err(Error::UnsupportedOrder { n, max: MAX_GH_ORDER });
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidVariance { variance: t });
    }
    if n == 1 {
        return Ok((vec![0.0], vec![1.0]));
    }

    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let beta = (k as f64 / 2.0).sqrt();
        jacobi[(k - 1, k)] = beta;
        jacobi[(k, k - 1)] = beta;
    }
    let eig = jacobi.symmetric_eigen();

    let scale = (2.0 * t).sqrt();
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let q0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i] * scale, q0 * q0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let wsum: f64 = pairs.iter().map(|p| p.1).sum();
    Ok(pairs.into_iter().map(|(x, w)| (x, w / wsum)).unzip())
}

/// How a [`GridFunction`] behaves outside its grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extrapolation {
    /// Constant continuation of the endpoint values (CDF-like functions).
    ConstantClamp,
    /// Linear continuation with the boundary slope (map-like functions).
    Linear,
}

/// A function tabulated on a strictly ascending grid with a
/// shape-preserving piecewise-cubic interpolant.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "GridFunctionRaw", into = "GridFunctionRaw")]
pub struct GridFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
    extrapolation: Extrapolation,
    #[serde(skip)]
    interp: Pchip,
}

#[derive(Serialize, Deserialize)]
struct GridFunctionRaw {
    grid: Vec<f64>,
    values: Vec<f64>,
    extrapolation: Extrapolation,
}

impl TryFrom<GridFunctionRaw> for GridFunction {
    type Error = Error;
    fn try_from(raw: GridFunctionRaw) -> Result<Self> {
        GridFunction::new(raw.grid, raw.values, raw.extrapolation)
    }
}

impl From<GridFunction> for GridFunctionRaw {
    fn from(g: GridFunction) -> Self {
        Self { grid: g.grid, values: g.values, extrapolation: g.extrapolation }
    }
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, extrapolation: Extrapolation) -> Result<Self> {
        let interp = Pchip::new(grid.clone(), values.clone()).ok_or_else(|| {
            Error::invalid("grid function needs >= 2 strictly ascending finite abscissae")
        })?;
        Ok(Self { grid, values, extrapolation, interp })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn extrapolation(&self) -> Extrapolation {
        self.extrapolation
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        let (lo, hi) = (self.grid[0], self.grid[self.grid.len() - 1]);
        if x < lo {
            match self.extrapolation {
                Extrapolation::ConstantClamp => self.values[0],
                Extrapolation::Linear => {
                    self.values[0] + self.interp.eval_deriv(lo) * (x - lo)
                }
            }
        } else if x > hi {
            match self.extrapolation {
                Extrapolation::ConstantClamp => self.values[self.values.len() - 1],
                Extrapolation::Linear => {
                    self.values[self.values.len() - 1] + self.interp.eval_deriv(hi) * (x - hi)
                }
            }
        } else {
            self.interp.eval(x)
        }
    }

    /// Sup-norm distance to another grid function on this grid.
    pub fn sup_distance(&self, other: &GridFunction) -> f64 {
        self.grid
            .iter()
            .zip(&self.values)
            .map(|(&x, &v)| (v - other.eval(x)).abs())
            .fold(0.0, f64::max)
    }
}

/// Convolve `f` with the heat kernel of variance `t`, evaluated on
/// `out_grid`, using the given scheme.
pub fn convolve(
    f: &GridFunction,
    t: f64,
    out_grid: &[f64],
    scheme: &QuadratureScheme,
) -> Result<Vec<f64>> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidVariance { variance: t });
    }
    match scheme.kind {
        SchemeKind::Trapezoid => {
            let n_half = (scheme.n - 1) / 2;
            let epsilon = scheme.resolve_epsilon(t)?;
            let (h, _nh) = trapezoid_params(scheme.m, n_half, t, epsilon)?;
            // kernel weights are symmetric; fold the ±j terms together
            let weights: Vec<f64> = (0..=n_half)
                .map(|j| heat_kernel(j as f64 * h, t).map(|k| k * h))
                .collect::<Result<_>>()?;
            Ok(out_grid
                .iter()
                .map(|&w| {
                    let mut acc = weights[0] * f.eval(w);
                    for (j, &kj) in weights.iter().enumerate().skip(1) {
                        let off = j as f64 * h;
                        acc += kj * (f.eval(w - off) + f.eval(w + off));
                    }
                    acc
                })
                .collect())
        }
        SchemeKind::GaussHermite => {
            let (nodes, weights) = gh_nodes(scheme.n, t)?;
            Ok(out_grid
                .iter()
                .map(|&w| {
                    nodes
                        .iter()
                        .zip(&weights)
                        .map(|(&x, &wi)| wi * f.eval(w - x))
                        .sum()
                })
                .collect())
        }
    }
}

/// Integrate `f(x)·ρ_t(x)` over the real line with the given scheme
/// (single quadrature, used by the convergence study).
pub fn integrate_against_kernel<F: Fn(f64) -> f64>(
    f: &F,
    t: f64,
    scheme: &QuadratureScheme,
) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidVariance { variance: t });
    }
    match scheme.kind {
        SchemeKind::Trapezoid => {
            let n_half = (scheme.n - 1) / 2;
            let epsilon = scheme.resolve_epsilon(t)?;
            let (h, _) = trapezoid_params(scheme.m, n_half, t, epsilon)?;
            let mut acc = heat_kernel(0.0, t)? * h * f(0.0);
            for j in 1..=n_half {
                let x = j as f64 * h;
                acc += heat_kernel(x, t)? * h * (f(x) + f(-x));
            }
            Ok(acc)
        }
        SchemeKind::GaussHermite => {
            let (nodes, weights) = gh_nodes(scheme.n, t)?;
            Ok(nodes.iter().zip(&weights).map(|(&x, &w)| w * f(x)).sum())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::norm;
    use approx::assert_abs_diff_eq;

    #[test]
    fn heat_kernel_peak() {
        // K_1(0) = 1/sqrt(2*pi)
        assert_abs_diff_eq!(heat_kernel(0.0, 1.0).unwrap(), 0.398_942_280_401_432_7, epsilon = 1e-15);
    }

    #[test]
    fn heat_kernel_scaling_identity() {
        // K_t(x) = K_1(x/sqrt(t)) / sqrt(t)
        for &(x, t) in &[(0.3, 0.2), (-1.7, 2.5), (4.0, 0.7)] {
            let lhs = heat_kernel(x, t).unwrap();
            let rhs = heat_kernel(x / t.sqrt(), 1.0).unwrap() / t.sqrt();
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-15);
        }
    }

    #[test]
    fn heat_kernel_mass() {
        // fine trapezoid over [-10 sqrt(t), 10 sqrt(t)]
        let t = 0.37_f64;
        let lim = 10.0 * t.sqrt();
        let n = 200_000;
        let h = 2.0 * lim / n as f64;
        let mut s = 0.5 * (heat_kernel(-lim, t).unwrap() + heat_kernel(lim, t).unwrap());
        for i in 1..n {
            s += heat_kernel(-lim + i as f64 * h, t).unwrap();
        }
        assert_abs_diff_eq!(s * h, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn heat_kernel_rejects_bad_t() {
        assert!(heat_kernel(0.0, 0.0).is_err());
        assert!(heat_kernel(0.0, -1.0).is_err());
    }

    #[test]
    fn trapezoid_params_examples() {
        // direct evaluation of the optimal rule
        let (h, nh) = trapezoid_params(3, 50, 0.2, 0.9).unwrap();
        assert_abs_diff_eq!(nh, 7.441_9, epsilon = 5e-4);
        assert_abs_diff_eq!(h, 0.148_84, epsilon = 1e-5);

        let (_, nh) = trapezoid_params(1, 1, 1.0, 0.5).unwrap();
        assert_abs_diff_eq!(nh, (4.0 * 3.0_f64.ln()).sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(nh, 2.0963, epsilon = 1e-4);
    }

    #[test]
    fn trapezoid_params_product_exact() {
        for &(m, n, dt) in &[(1u32, 5usize, 0.5_f64), (2, 50, 0.2), (4, 100, 1.3)] {
            let eps = 0.5 * ((1.0 - dt).max(0.0) + 1.0);
            let (h, nh) = trapezoid_params(m, n, dt, eps).unwrap();
            assert_eq!(h * n as f64, nh);
        }
    }

    #[test]
    fn trapezoid_params_epsilon_bounds() {
        assert!(matches!(
            trapezoid_params(2, 10, 0.2, 1.0),
            Err(Error::EpsilonOutOfRange { .. })
        ));
        // for dt = 0.2 the admissible interval is (0.8, 1)
        assert!(matches!(
            trapezoid_params(2, 10, 0.2, 0.5),
            Err(Error::EpsilonOutOfRange { .. })
        ));
        assert!(trapezoid_params(2, 10, 0.2, 0.81).is_ok());
    }

    #[test]
    fn gh_two_point_rule() {
        // transform of the classical nodes +-1/sqrt(2), weights sqrt(pi)/2
        let (nodes, weights) = gh_nodes(2, 1.0).unwrap();
        assert_abs_diff_eq!(nodes[0], -1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(nodes[1], 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(weights[0], 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(weights[1], 0.5, epsilon = 1e-14);
    }

    #[test]
    fn gh_single_point_rule() {
        let (nodes, weights) = gh_nodes(1, 0.7).unwrap();
        assert_eq!(nodes, vec![0.0]);
        assert_eq!(weights, vec![1.0]);
    }

    #[test]
    fn gh_moment_conditions() {
        for &(n, t) in &[(2usize, 1.0), (10, 0.2), (50, 2.0), (200, 0.5)] {
            let (nodes, weights) = gh_nodes(n, t).unwrap();
            let m0: f64 = weights.iter().sum();
            let m1: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x).sum();
            let m2: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x * x).sum();
            assert_abs_diff_eq!(m0, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(m1, 0.0, epsilon = 1e-10);
            assert_abs_diff_eq!(m2, t, epsilon = 1e-10);
        }
    }

    #[test]
    fn gh_exact_for_polynomials() {
        // n = 10 integrates monomials up to degree 19 exactly; Gaussian
        // moments are mu_{2k} = t^k (2k-1)!!
        let t = 0.2;
        let (nodes, weights) = gh_nodes(10, t).unwrap();
        let mut double_fact = 1.0;
        for k in 1..=9usize {
            double_fact *= (2 * k - 1) as f64;
            let exact = t.powi(k as i32) * double_fact;
            let quad: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(2 * k as i32))
                .sum();
            assert_abs_diff_eq!(quad / exact, 1.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn gh_rejects_out_of_range_order() {
        assert!(matches!(gh_nodes(0, 1.0), Err(Error::UnsupportedOrder { .. })));
        assert!(matches!(gh_nodes(201, 1.0), Err(Error::UnsupportedOrder { .. })));
    }

    fn cdf_grid(s: f64, lo: f64, hi: f64, n: usize) -> GridFunction {
        let grid: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&x| norm::cdf(x / s)).collect();
        GridFunction::new(grid, values, Extrapolation::ConstantClamp).unwrap()
    }

    #[test]
    fn convolve_constant_preserves_mass() {
        let grid: Vec<f64> = (0..201).map(|i| -10.0 + 0.1 * i as f64).collect();
        let ones = vec![1.0; 201];
        let f = GridFunction::new(grid.clone(), ones, Extrapolation::ConstantClamp).unwrap();
        let scheme = QuadratureScheme::trapezoid_default();
        let out = convolve(&f, 0.2, &[-1.0, 0.0, 2.5], &scheme).unwrap();
        for v in out {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
        let gh = QuadratureScheme::gauss_hermite_default();
        let out = convolve(&f, 0.2, &[-1.0, 0.0, 2.5], &gh).unwrap();
        for v in out {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn convolve_identity_preserves_mean() {
        // f(x) = x has zero-mean kernel: (K_t * f)(w) = w
        let grid: Vec<f64> = (0..401).map(|i| -20.0 + 0.1 * i as f64).collect();
        let values = grid.clone();
        let f = GridFunction::new(grid, values, Extrapolation::Linear).unwrap();
        let scheme = QuadratureScheme::trapezoid_default();
        let out = convolve(&f, 0.4, &[-2.0, 0.0, 1.5], &scheme).unwrap();
        assert_abs_diff_eq!(out[0], -2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(out[1], 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(out[2], 1.5, epsilon = 1e-10);
    }

    #[test]
    fn convolve_gaussian_cdf_identity_trapezoid() {
        // Phi(x/s) * K_t = Phi(w / sqrt(s^2 + t))
        let (s, t) = (1.0, 0.2);
        let f = cdf_grid(s, -16.0, 16.0, 6401);
        let out_grid: Vec<f64> = (0..=100).map(|i| -5.0 + 0.1 * i as f64).collect();
        let scheme = QuadratureScheme::trapezoid_default();
        let out = convolve(&f, t, &out_grid, &scheme).unwrap();
        let sd = (s * s + t).sqrt();
        for (w, v) in out_grid.iter().zip(&out) {
            assert_abs_diff_eq!(*v, norm::cdf(w / sd), epsilon = 1e-8);
        }
    }

    #[test]
    fn convolve_gaussian_cdf_identity_gauss_hermite() {
        let (s, t) = (1.0, 0.2);
        let f = cdf_grid(s, -16.0, 16.0, 6401);
        let out_grid: Vec<f64> = (0..=100).map(|i| -5.0 + 0.1 * i as f64).collect();
        let scheme = QuadratureScheme::gauss_hermite_default().with_n(150);
        let out = convolve(&f, t, &out_grid, &scheme).unwrap();
        let sd = (s * s + t).sqrt();
        for (w, v) in out_grid.iter().zip(&out) {
            // GH on a spline iterate converges at the slower n^{-m/2} rate
            assert_abs_diff_eq!(*v, norm::cdf(w / sd), epsilon = 1e-5);
        }
    }

    #[test]
    fn convolve_rejects_bad_variance() {
        let f = cdf_grid(1.0, -5.0, 5.0, 11);
        let scheme = QuadratureScheme::trapezoid_default();
        assert!(matches!(
            convolve(&f, 0.0, &[0.0], &scheme),
            Err(Error::InvalidVariance { .. })
        ));
    }

    #[test]
    fn grid_function_extrapolation_modes() {
        let g = GridFunction::new(
            vec![0.0, 1.0, 2.0],
            vec![0.0, 1.0, 2.0],
            Extrapolation::ConstantClamp,
        )
        .unwrap();
        assert_eq!(g.eval(-5.0), 0.0);
        assert_eq!(g.eval(9.0), 2.0);

        let g = GridFunction::new(
            vec![0.0, 1.0, 2.0],
            vec![0.0, 1.0, 2.0],
            Extrapolation::Linear,
        )
        .unwrap();
        assert_abs_diff_eq!(g.eval(-5.0), -5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(g.eval(9.0), 9.0, epsilon = 1e-12);
    }

    #[test]
    fn grid_function_serde_round_trip() {
        let g = cdf_grid(1.0, -3.0, 3.0, 31);
        let json = serde_json::to_string(&g).unwrap();
        let g2: GridFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(g.eval(0.37), g2.eval(0.37));
        assert_eq!(g.eval(-10.0), g2.eval(-10.0));
    }

    #[test]
    fn scheme_validation() {
        assert!(QuadratureScheme::new(SchemeKind::Trapezoid, 2, 2, None).is_err());
        assert!(QuadratureScheme::new(SchemeKind::Trapezoid, 100, 2, None).is_err());
        assert!(QuadratureScheme::new(SchemeKind::Trapezoid, 101, 2, None).is_ok());
        assert!(QuadratureScheme::new(SchemeKind::GaussHermite, 201, 2, None).is_err());
        assert!(QuadratureScheme::new(SchemeKind::GaussHermite, 100, 2, None).is_ok());
    }
}
