//! Hermite polynomials normalized against the Gaussian weight of
//! standard deviation σ.
//!
//! `H_n^σ(x) = He_n(x/σ)/√(n!)` is orthonormal in `L²(ρ)` with
//! `ρ = N(0, σ²)` and satisfies `(H_n^σ)' = (√n/σ)·H_{n−1}^σ`. These are
//! used as analytic test material for the convolution schemes.

/// Normalized Hermite polynomial `H_n^σ(x)`.
///
/// Evaluated through the probabilists' three-term recurrence carried in
/// normalized form, which stays stable up to large orders.
pub fn hermite_sigma(n: u32, sigma: f64, x: f64) -> f64 {
    let u = x / sigma;
    // g_k = He_k(u)/sqrt(k!):  g_{k+1} = (u g_k - sqrt(k) g_{k-1})/sqrt(k+1)
    let mut g_prev = 1.0; // g_0
    if n == 0 {
        return g_prev;
    }
    let mut g = u; // g_1
    for k in 1..n {
        let kf = k as f64;
        let g_next = (u * g - kf.sqrt() * g_prev) / (kf + 1.0).sqrt();
        g_prev = g;
        g = g_next;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::gh_nodes;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zeroth_is_one() {
        for &x in &[-3.0, 0.0, 1.7] {
            assert_eq!(hermite_sigma(0, 0.8, x), 1.0);
        }
    }

    #[test]
    fn first_is_x_over_sigma() {
        for &(sigma, x) in &[(1.0, 0.5), (0.447, -2.0), (2.0, 3.0)] {
            assert_abs_diff_eq!(hermite_sigma(1, sigma, x), x / sigma, epsilon = 1e-14);
        }
    }

    #[test]
    fn second_matches_expansion() {
        // He_2(u) = u^2 - 1, normalized by sqrt(2!)
        let (sigma, x) = (0.7, 1.3);
        let u = x / sigma;
        assert_abs_diff_eq!(
            hermite_sigma(2, sigma, x),
            (u * u - 1.0) / 2.0_f64.sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn derivative_recurrence() {
        // (H_n^sigma)'(x) = sqrt(n)/sigma * H_{n-1}^sigma(x), checked by
        // central finite differences
        for &sigma in &[0.2_f64.sqrt(), 1.0] {
            for n in 1..=8u32 {
                for &x in &[-1.3, -0.2, 0.0, 0.7, 2.1] {
                    let h = 1e-6 * sigma;
                    let fd =
                        (hermite_sigma(n, sigma, x + h) - hermite_sigma(n, sigma, x - h)) / (2.0 * h);
                    let exact = (n as f64).sqrt() / sigma * hermite_sigma(n - 1, sigma, x);
                    assert_abs_diff_eq!(fd, exact, epsilon = 1e-6 * (1.0 + exact.abs()));
                }
            }
        }
    }

    #[test]
    fn orthonormal_under_gaussian_weight() {
        // 200-point rule integrates degree <= 399 exactly, far above n+m = 16
        for &var in &[0.2_f64, 1.0] {
            let sigma = var.sqrt();
            let (nodes, weights) = gh_nodes(200, var).unwrap();
            for n in 0..=8u32 {
                for m in 0..=8u32 {
                    let inner: f64 = nodes
                        .iter()
                        .zip(&weights)
                        .map(|(&x, &w)| w * hermite_sigma(n, sigma, x) * hermite_sigma(m, sigma, x))
                        .sum();
                    let expected = if n == m { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(inner, expected, epsilon = 1e-8);
                }
            }
        }
    }
}
