//! Shared numerical building blocks: normal distribution functions,
//! bracketed root finding, shape-preserving cubic interpolation,
//! adaptive quadrature and small-scale optimization.

pub mod brent;
pub mod cubic_spline;
pub mod fit;
pub mod nelder_mead;
pub mod norm;
pub mod pchip;
pub mod simpson;
