//! Bracketed scalar root finding (Brent's method).

/// Outcome of a bracketed root search.
#[derive(Debug, Clone, Copy)]
pub struct Root {
    pub x: f64,
    pub f: f64,
    pub iterations: usize,
}

/// Brent's method on [a, b]. Requires f(a)·f(b) ≤ 0.
///
/// Stops when the bracket width falls below `xtol` or |f| below `ftol`.
/// Returns `None` if the bracket is invalid or the iteration cap is hit
/// without meeting either tolerance.
pub fn brent<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    xtol: f64,
    ftol: f64,
    max_iter: usize,
) -> Option<Root> {
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Some(Root { x: a, f: 0.0, iterations: 0 });
    }
    if fb == 0.0 {
        return Some(Root { x: b, f: 0.0, iterations: 0 });
    }
    if fa * fb > 0.0 || !fa.is_finite() || !fb.is_finite() {
        return None;
    }
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut mflag = true;

    for it in 1..=max_iter {
        let s = if fa != fc && fb != fc {
            // inverse quadratic interpolation
            a * fb * fc / ((fa - fb) * (fa - fc))
                + b * fa * fc / ((fb - fa) * (fb - fc))
                + c * fa * fb / ((fc - fa) * (fc - fb))
        } else {
            b - fb * (b - a) / (fb - fa)
        };

        let cond_range = {
            let lo = (3.0 * a + b) / 4.0;
            !((lo.min(b) < s) && (s < lo.max(b)))
        };
        let cond_slow = if mflag {
            (s - b).abs() >= (b - c).abs() / 2.0
        } else {
            (s - b).abs() >= (c - d).abs() / 2.0
        };
        let cond_tol = if mflag {
            (b - c).abs() < xtol
        } else {
            (c - d).abs() < xtol
        };

        let s = if cond_range || cond_slow || cond_tol {
            mflag = true;
            0.5 * (a + b)
        } else {
            mflag = false;
            s
        };

        let fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if fa * fs < 0.0 {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if fa.abs() < fb.abs() {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut fa, &mut fb);
        }
        if fb.abs() <= ftol || (b - a).abs() <= xtol {
            return Some(Root { x: b, f: fb, iterations: it });
        }
    }
    None
}
