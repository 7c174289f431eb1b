//! Crate-wide error type.

use thiserror::Error;

/// All failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar input violated a precondition.
    #[error("invalid input: {message}")]
    InvalidInput { message: String },

    /// Quote table row could not be parsed.
    #[error("malformed row at line {line}: {message}")]
    MalformedRow { line: usize, message: String },

    /// Two quotes share (maturity, strike, side).
    #[error("duplicate quote at maturity {maturity}, strike {strike}")]
    DuplicateQuote { maturity: f64, strike: f64 },

    /// The chain contains no usable quotes.
    #[error("no quotes in input")]
    NoQuotes,

    /// A price, strike or maturity that must be positive was not.
    #[error("negative or zero value for {field} at line {line}: {value}")]
    NegativeValue { field: &'static str, line: usize, value: f64 },

    /// Option price sits at or outside the static no-arbitrage band.
    #[error("price {price} outside no-arbitrage band ({lower}, {upper})")]
    PriceOutOfBand { price: f64, lower: f64, upper: f64 },

    /// Iterative scheme exhausted its iteration budget.
    #[error("no convergence after {iterations} iterations (residual {residual})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// Two curves do not share the domain required for blending.
    #[error("curve domains do not cover [{k_min}, {k_max}]")]
    DomainMismatch { k_min: f64, k_max: f64 },

    /// Fewer quotes than the regression needs.
    #[error("need at least {needed} quotes, got {got}")]
    TooFewQuotes { needed: usize, got: usize },

    /// Weighted design matrix is singular even after widening the window.
    #[error("singular design at strike {strike}: fewer than 3 distinct strikes in any window")]
    SingularDesign { strike: f64 },

    /// Query point outside the fitted strike range.
    #[error("strike {strike} outside fitted range [{lo}, {hi}]")]
    OutOfRange { strike: f64, lo: f64, hi: f64 },

    /// Tail root search exhausted its bracket.
    #[error(
        "no admissible tail root in [{lo}, {hi}]: residual {f_lo:+.3e} at lower end, {f_hi:+.3e} at upper end"
    )]
    NoRoot { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Candidate mixture parameters violate λ ∈ [0,1] or v > 0.
    #[error("invalid mixture candidate: lambda {lambda}, v1 {v1}, v2 {v2}")]
    InvalidMixture { lambda: f64, v1: f64, v2: f64 },

    /// Density or derivative jumps across a pasting strike.
    #[error("pasting mismatch at strike {strike}: jump {jump:e}")]
    PastingMismatch { strike: f64, jump: f64 },

    /// Numerically integrated CDF decreased.
    #[error("cdf not monotone near x = {x}")]
    NonMonotone { x: f64 },

    /// Too few strikes for a finite-difference density.
    #[error("need at least {needed} strikes, got {got}")]
    TooFewStrikes { needed: usize, got: usize },

    /// Trapezoid truncation parameter outside its admissible interval.
    #[error("epsilon {epsilon} outside admissible interval ({lo}, {hi})")]
    EpsilonOutOfRange { epsilon: f64, lo: f64, hi: f64 },

    /// Convolution requested with non-positive variance.
    #[error("invalid variance {variance}: must be positive")]
    InvalidVariance { variance: f64 },

    /// Gauss-Hermite order outside the supported range.
    #[error("unsupported quadrature order {n}: must be in [1, {max}]")]
    UnsupportedOrder { n: usize, max: usize },

    /// Inner convolution escaped (0, 1) despite clamping; grid too narrow.
    #[error("quantile argument {value} outside (0,1) at grid point {w}")]
    QuantileOverflow { value: f64, w: f64 },

    /// Fixed-point iteration hit the cap; history attached for diagnosis.
    #[error("fixed point not converged after {max_iter} iterations, last delta {last}")]
    MaxIterExceeded { max_iter: usize, last: f64, history: Vec<f64> },

    /// Transport map queried outside its interval.
    #[error("time {t} outside interval [{t_start}, {t_end}]")]
    TimeOutOfInterval { t: f64, t_start: f64, t_end: f64 },

    /// Marginals fail the calendar no-arbitrage admission test.
    #[error("calendar arbitrage between maturities {t_early} and {t_late}: worst violation {worst:e}")]
    CalendarArbitrage { t_early: f64, t_late: f64, worst: f64 },

    /// Every Monte Carlo price fell outside the invertible band.
    #[error("all {count} model prices outside the implied-vol band at maturity {maturity}")]
    AllPricesOutOfBand { maturity: f64, count: usize },

    /// Error in an interval solve, tagged with the interval index.
    #[error("interval {index} ([{t_start}, {t_end}]): {source}")]
    Interval { index: usize, t_start: f64, t_end: f64, source: Box<Error> },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput { message: message.into() }
    }
}
