//! Bass local volatility calibration from European option quotes.
//!
//! The pipeline has four stages:
//!
//! 1. [`marketdata`] — parse option chains, convert between prices and
//!    implied volatilities, normalize to zero-rate coordinates.
//! 2. [`density`] — build arbitrage-free risk-neutral densities: a
//!    constrained local quadratic regression of the implied-volatility
//!    smile on the observed strike range, lognormal-mixture tails outside
//!    it, and monotone CDF / quantile construction.
//! 3. [`bass`] — calibrate the Bass construction per maturity interval by
//!    fixed-point iteration of the operator
//!    `A F = F_mu_i ∘ (K_dt ⋆ (F_mu_{i+1}^{-1} ∘ (K_dt ⋆ F)))`,
//!    with the heat-kernel convolutions evaluated by the schemes in
//!    [`quad`] (truncated trapezoid or Gauss-Hermite).
//! 4. [`mc`] — simulate the calibrated spot process and report pricing
//!    / calibration errors.
//!
//! [`synth`] provides closed-form ground truth (Black-Scholes lognormal
//! marginals and a Heston-like SSVI surface) for testing and benchmarks.

pub mod bass;
pub mod density;
pub mod error;
pub mod marketdata;
pub mod math;
pub mod mc;
pub mod quad;
pub mod synth;

pub use error::{Error, Result};
