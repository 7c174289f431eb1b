//! Option-chain handling: parsing, Black-Scholes pricing, implied
//! volatility inversion, put/call blending and zero-rate normalization.
//!
//! Downstream modules work in normalized coordinates: zero rate, every
//! forward equal to the spot. [`normalize_chain`] maps a raw chain into
//! that frame by shifting strikes to `K·S₀/F(τ)` and repricing quotes at
//! their unchanged implied volatilities, so the spot scale (and with it
//! absolute price tolerances) is preserved.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{brent, norm, pchip::Pchip};

/// Which side of the book a quote belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OptionSide {
    Call,
    Put,
}

impl std::fmt::Display for OptionSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OptionSide::Call => write!(f, "call"),
            OptionSide::Put => write!(f, "put"),
        }
    }
}

/// One European option quote. At least one of `price`/`iv` is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptionQuote {
    pub maturity: f64,
    pub strike: f64,
    pub side: OptionSide,
    pub price: Option<f64>,
    pub iv: Option<f64>,
}

/// Quotes grouped by maturity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptionChain {
    spot: f64,
    rate: f64,
    maturities: Vec<f64>,
    quotes: Vec<Vec<OptionQuote>>,
    /// Quotes discarded at parse time for sitting outside the static
    /// no-arbitrage band (real chains contain them).
    dropped_out_of_band: usize,
}

impl OptionChain {
    /// Group loose quotes by maturity and sort by (maturity, strike).
    pub fn new(spot: f64, rate: f64, quotes: Vec<OptionQuote>) -> Result<Self> {
        if !(spot > 0.0) || !spot.is_finite() {
            return Err(Error::invalid(format!("spot must be positive, got {spot}")));
        }
        if !rate.is_finite() {
            return Err(Error::invalid(format!("rate must be finite, got {rate}")));
        }
        if quotes.is_empty() {
            return Err(Error::NoQuotes);
        }
        let mut maturities: Vec<f64> = quotes.iter().map(|q| q.maturity).collect();
        maturities.sort_by(|a, b| a.partial_cmp(b).unwrap());
        maturities.dedup();

        let mut grouped: Vec<Vec<OptionQuote>> = vec![Vec::new(); maturities.len()];
        for q in quotes {
            let idx = maturities.iter().position(|&m| m == q.maturity).unwrap();
            grouped[idx].push(q);
        }
        for g in &mut grouped {
            g.sort_by(|a, b| {
                a.strike
                    .partial_cmp(&b.strike)
                    .unwrap()
                    .then_with(|| (a.side == OptionSide::Put).cmp(&(b.side == OptionSide::Put)))
            });
        }
        Ok(Self { spot, rate, maturities, quotes: grouped, dropped_out_of_band: 0 })
    }

    pub fn spot(&self) -> f64 {
        self.spot
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn maturities(&self) -> &[f64] {
        &self.maturities
    }

    pub fn quotes(&self, maturity_index: usize) -> &[OptionQuote] {
        &self.quotes[maturity_index]
    }

    /// Forward price `S₀·e^{rτ}`.
    pub fn forward(&self, maturity: f64) -> f64 {
        self.spot * (self.rate * maturity).exp()
    }

    /// Count of quotes dropped at parse time for violating static bounds.
    pub fn dropped_out_of_band(&self) -> usize {
        self.dropped_out_of_band
    }

    /// Per-maturity (strike, implied vol) pairs. Quotes carrying only a
    /// price are inverted; call and put IVs at the same strike are
    /// averaged.
    pub fn iv_smile(&self, maturity_index: usize) -> Result<Vec<(f64, f64)>> {
        let tau = self.maturities[maturity_index];
        let mut by_strike: Vec<(f64, f64, usize)> = Vec::new();
        for q in &self.quotes[maturity_index] {
            let iv = match q.iv {
                Some(v) => v,
                None => implied_vol(
                    q.price.expect("quote has price or iv"),
                    self.spot,
                    q.strike,
                    self.rate,
                    tau,
                    q.side,
                )?,
            };
            match by_strike.iter_mut().find(|(k, _, _)| *k == q.strike) {
                Some((_, sum, count)) => {
                    *sum += iv;
                    *count += 1;
                }
                None => by_strike.push((q.strike, iv, 1)),
            }
        }
        Ok(by_strike.into_iter().map(|(k, sum, c)| (k, sum / c as f64)).collect())
    }
}

/// Black-Scholes price of a European option.
///
/// `C = S·Φ(d₁) − K·e^{−rτ}·Φ(d₂)` with
/// `d₁ = (ln(S/K) + (r + σ²/2)τ)/(σ√τ)`, `d₂ = d₁ − σ√τ`; puts by parity.
pub fn bs_price(s: f64, k: f64, r: f64, tau: f64, sigma: f64, side: OptionSide) -> Result<f64> {
    for (name, v) in [("spot", s), ("strike", k), ("maturity", tau), ("sigma", sigma)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::invalid(format!("{name} must be positive, got {v}")));
        }
    }
    let sqrt_tau = tau.sqrt();
    let d1 = ((s / k).ln() + (r + 0.5 * sigma * sigma) * tau) / (sigma * sqrt_tau);
    let d2 = d1 - sigma * sqrt_tau;
    let df = (-r * tau).exp();
    match side {
        OptionSide::Call => Ok(s * norm::cdf(d1) - k * df * norm::cdf(d2)),
        OptionSide::Put => Ok(k * df * norm::cdf(-d2) - s * norm::cdf(-d1)),
    }
}

/// Static no-arbitrage band (lower, upper) for a European price.
pub fn price_band(s: f64, k: f64, r: f64, tau: f64, side: OptionSide) -> (f64, f64) {
    let df = (-r * tau).exp();
    match side {
        OptionSide::Call => ((s - k * df).max(0.0), s),
        OptionSide::Put => ((k * df - s).max(0.0), k * df),
    }
}

/// Volatility bracket searched by [`implied_vol`].
pub const IV_BRACKET: (f64, f64) = (1e-6, 10.0);

/// Iteration cap for the implied-vol search.
pub const IV_MAX_ITER: usize = 200;

/// Invert [`bs_price`] for the implied volatility.
///
/// Bracketed Brent search on σ ∈ [1e-6, 10]; the returned vol reprices
/// the input within 1e-10 absolute. Prices at or outside the static
/// bounds are rejected with [`Error::PriceOutOfBand`].
pub fn implied_vol(
    price: f64,
    s: f64,
    k: f64,
    r: f64,
    tau: f64,
    side: OptionSide,
) -> Result<f64> {
    for (name, v) in [("spot", s), ("strike", k), ("maturity", tau)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::invalid(format!("{name} must be positive, got {v}")));
        }
    }
    let (lower, upper) = price_band(s, k, r, tau, side);
    if !(price > lower && price < upper) {
        return Err(Error::PriceOutOfBand { price, lower, upper });
    }
    let f = |sigma: f64| bs_price(s, k, r, tau, sigma, side).unwrap_or(f64::NAN) - price;
    let f_lo = f(IV_BRACKET.0);
    let f_hi = f(IV_BRACKET.1);
    if f_lo * f_hi > 0.0 {
        // inside the static band but outside the searchable vol range
        return Err(Error::PriceOutOfBand { price, lower: price - f_lo, upper: price + f_hi });
    }
    // xtol keeps deep out-of-the-money vols accurate even where vega is
    // tiny and the price residual alone would stop early
    let tol = 1e-12 * s.max(1.0);
    match brent::brent(f, IV_BRACKET.0, IV_BRACKET.1, 1e-10, tol, IV_MAX_ITER) {
        Some(root) => Ok(root.x),
        None => Err(Error::NoConvergence { iterations: IV_MAX_ITER, residual: f64::NAN }),
    }
}

/// An implied-volatility curve in strike with a shape-preserving
/// interpolant; evaluation outside the quoted range is constant.
#[derive(Debug, Clone)]
pub struct IvCurve {
    strikes: Vec<f64>,
    vols: Vec<f64>,
    interp: Pchip,
}

impl IvCurve {
    pub fn new(points: &[(f64, f64)]) -> Result<Self> {
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let strikes: Vec<f64> = pts.iter().map(|p| p.0).collect();
        let vols: Vec<f64> = pts.iter().map(|p| p.1).collect();
        let interp = Pchip::new(strikes.clone(), vols.clone())
            .ok_or_else(|| Error::invalid("iv curve needs >= 2 distinct strikes"))?;
        Ok(Self { strikes, vols, interp })
    }

    pub fn strikes(&self) -> &[f64] {
        &self.strikes
    }

    pub fn vols(&self) -> &[f64] {
        &self.vols
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.strikes[0], self.strikes[self.strikes.len() - 1])
    }

    pub fn eval(&self, k: f64) -> f64 {
        let (lo, hi) = self.domain();
        self.interp.eval(k.clamp(lo, hi))
    }
}

/// Affine put/call blend on [k_min, k_max]:
/// `σ̂(K) = w·IV_put(K) + (1−w)·IV_call(K)` with
/// `w = (K_max − K)/(K_max − K_min)`. Below the band the put curve is
/// used, above it the call curve.
pub fn blend_put_call(
    iv_call: &IvCurve,
    iv_put: &IvCurve,
    k_min: f64,
    k_max: f64,
) -> Result<IvCurve> {
    if !(k_min < k_max) {
        return Err(Error::invalid(format!("need k_min < k_max, got {k_min} >= {k_max}")));
    }
    let (c_lo, c_hi) = iv_call.domain();
    let (p_lo, p_hi) = iv_put.domain();
    if c_lo > k_min || c_hi < k_max || p_lo > k_min || p_hi < k_max {
        return Err(Error::DomainMismatch { k_min, k_max });
    }

    // refine inside the band: the affine weight is not representable on
    // the coarse union of quote strikes alone
    let refinement = (0..=128).map(|i| k_min + (k_max - k_min) * i as f64 / 128.0);
    let mut grid: Vec<f64> = iv_call
        .strikes()
        .iter()
        .chain(iv_put.strikes().iter())
        .copied()
        .chain(refinement)
        .collect();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * (1.0 + b.abs()));

    let points: Vec<(f64, f64)> = grid
        .into_iter()
        .map(|k| {
            let v = if k <= k_min {
                iv_put.eval(k)
            } else if k >= k_max {
                iv_call.eval(k)
            } else {
                let w = (k_max - k) / (k_max - k_min);
                w * iv_put.eval(k) + (1.0 - w) * iv_call.eval(k)
            };
            (k, v)
        })
        .collect();
    IvCurve::new(&points)
}

/// Rewrite a chain in zero-rate coordinates.
///
/// Strikes move to the same moneyness against a forward of `S₀`
/// (`K' = K·S₀/F(τ) = K·e^{−rτ}`) and priced quotes are re-priced at
/// their unchanged implied volatility, so the normalized chain carries
/// identical smiles with `rate = 0` and every forward equal to spot.
pub fn normalize_chain(chain: &OptionChain) -> Result<OptionChain> {
    if chain.rate == 0.0 {
        return Ok(chain.clone());
    }
    let s0 = chain.spot;
    let mut quotes = Vec::new();
    for (idx, &tau) in chain.maturities.iter().enumerate() {
        let scale = s0 / chain.forward(tau); // e^{-r tau}
        for q in chain.quotes(idx) {
            let strike = q.strike * scale;
            let iv = match q.iv {
                Some(v) => v,
                None => implied_vol(
                    q.price.expect("quote has price or iv"),
                    s0,
                    q.strike,
                    chain.rate,
                    tau,
                    q.side,
                )?,
            };
            let price = match q.price {
                Some(_) => Some(bs_price(s0, strike, 0.0, tau, iv, q.side)?),
                None => None,
            };
            quotes.push(OptionQuote { maturity: tau, strike, side: q.side, price, iv: Some(iv) });
        }
    }
    let mut out = OptionChain::new(s0, 0.0, quotes)?;
    out.dropped_out_of_band = chain.dropped_out_of_band;
    Ok(out)
}

/// Parse a delimited chain table.
///
/// Expected header: `maturity,strike,side,price,iv` (order free; `price`
/// or `iv` may be empty per row, not both). Quotes with prices outside
/// the static no-arbitrage band are dropped and counted on the chain
/// rather than rejected.
pub fn parse_chain(text: &str, spot: f64, rate: f64) -> Result<OptionChain> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .has_headers(true)
        .from_reader(text.as_bytes());

    let headers = reader
        .headers()
        .map_err(|e| Error::MalformedRow { line: 1, message: e.to_string() })?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let (c_mat, c_strike, c_side) = match (col("maturity"), col("strike"), col("side")) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => {
            return Err(Error::MalformedRow {
                line: 1,
                message: "header must name maturity, strike and side columns".into(),
            })
        }
    };
    let c_price = col("price");
    let c_iv = col("iv");
    if c_price.is_none() && c_iv.is_none() {
        return Err(Error::MalformedRow {
            line: 1,
            message: "header must name a price or iv column".into(),
        });
    }

    let mut quotes: Vec<OptionQuote> = Vec::new();
    let mut seen: Vec<(f64, f64, OptionSide)> = Vec::new();
    let mut dropped = 0usize;

    for record in reader.records() {
        let record = record.map_err(|e| Error::MalformedRow { line: 0, message: e.to_string() })?;
        let line = record.position().map_or(0, |p| p.line() as usize);

        let field = |i: usize| record.get(i).unwrap_or("");
        let parse_num = |i: usize, name: &'static str| -> Result<f64> {
            field(i).parse::<f64>().map_err(|_| Error::MalformedRow {
                line,
                message: format!("cannot parse {name} from {:?}", field(i)),
            })
        };
        let parse_opt = |i: Option<usize>, name: &'static str| -> Result<Option<f64>> {
            match i {
                Some(i) if !field(i).is_empty() => {
                    field(i).parse::<f64>().map(Some).map_err(|_| Error::MalformedRow {
                        line,
                        message: format!("cannot parse {name} from {:?}", field(i)),
                    })
                }
                _ => Ok(None),
            }
        };

        let maturity = parse_num(c_mat, "maturity")?;
        let strike = parse_num(c_strike, "strike")?;
        let side = match field(c_side).to_ascii_lowercase().as_str() {
            "call" | "c" => OptionSide::Call,
            "put" | "p" => OptionSide::Put,
            other => {
                return Err(Error::MalformedRow {
                    line,
                    message: format!("side must be call or put, got {other:?}"),
                })
            }
        };
        let price = parse_opt(c_price, "price")?;
        let iv = parse_opt(c_iv, "iv")?;

        if !maturity.is_finite() || maturity <= 0.0 {
            return Err(Error::NegativeValue { field: "maturity", line, value: maturity });
        }
        if !strike.is_finite() || strike <= 0.0 {
            return Err(Error::NegativeValue { field: "strike", line, value: strike });
        }
        if let Some(p) = price {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::NegativeValue { field: "price", line, value: p });
            }
        }
        if let Some(v) = iv {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::NegativeValue { field: "iv", line, value: v });
            }
        }
        if price.is_none() && iv.is_none() {
            return Err(Error::MalformedRow {
                line,
                message: "row carries neither price nor iv".into(),
            });
        }

        if seen.iter().any(|&(m, k, s)| m == maturity && k == strike && s == side) {
            return Err(Error::DuplicateQuote { maturity, strike });
        }
        seen.push((maturity, strike, side));

        // intrinsic-bound filter applies only to priced quotes
        if iv.is_none() {
            let p = price.unwrap();
            let (lower, upper) = price_band(spot, strike, rate, maturity, side);
            if p < lower + 1e-10 || p >= upper {
                dropped += 1;
                continue;
            }
        }

        quotes.push(OptionQuote { maturity, strike, side, price, iv });
    }

    if quotes.is_empty() {
        return Err(Error::NoQuotes);
    }
    let mut chain = OptionChain::new(spot, rate, quotes)?;
    chain.dropped_out_of_band = dropped;
    Ok(chain)
}
