//! Two-dimensional Nelder-Mead simplex minimization.
//!
//! Used for the occasional small nonlinear subproblem (constrained local
//! quadratic fits); deliberately minimal.

#[derive(Debug, Clone, Copy)]
pub struct NelderMead2d {
    pub max_iter: usize,
    pub xtol: f64,
    pub ftol: f64,
}

impl Default for NelderMead2d {
    fn default() -> Self {
        Self { max_iter: 400, xtol: 1e-12, ftol: 1e-15 }
    }
}

impl NelderMead2d {
    /// Minimize `f` from `x0` with initial steps `step`. Returns (argmin, min).
    pub fn minimize<F: FnMut(f64, f64) -> f64>(
        &self,
        mut f: F,
        x0: (f64, f64),
        step: (f64, f64),
    ) -> ((f64, f64), f64) {
        let mut pts = [
            x0,
            (x0.0 + step.0, x0.1),
            (x0.0, x0.1 + step.1),
        ];
        let mut vals = [f(pts[0].0, pts[0].1), f(pts[1].0, pts[1].1), f(pts[2].0, pts[2].1)];

        for _ in 0..self.max_iter {
            // order best..worst
            let mut idx = [0usize, 1, 2];
            idx.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
            let (b, m, w) = (idx[0], idx[1], idx[2]);

            let diam = dist(pts[b], pts[m]).max(dist(pts[b], pts[w]));
            if diam < self.xtol || (vals[w] - vals[b]).abs() < self.ftol {
                break;
            }

            let centroid = (
                0.5 * (pts[b].0 + pts[m].0),
                0.5 * (pts[b].1 + pts[m].1),
            );
            let refl = (
                centroid.0 + (centroid.0 - pts[w].0),
                centroid.1 + (centroid.1 - pts[w].1),
            );
            let fr = f(refl.0, refl.1);

            if fr < vals[b] {
                let exp = (
                    centroid.0 + 2.0 * (centroid.0 - pts[w].0),
                    centroid.1 + 2.0 * (centroid.1 - pts[w].1),
                );
                let fe = f(exp.0, exp.1);
                if fe < fr {
                    pts[w] = exp;
                    vals[w] = fe;
                } else {
                    pts[w] = refl;
                    vals[w] = fr;
                }
            } else if fr < vals[m] {
                pts[w] = refl;
                vals[w] = fr;
            } else {
                let con = (
                    centroid.0 + 0.5 * (pts[w].0 - centroid.0),
                    centroid.1 + 0.5 * (pts[w].1 - centroid.1),
                );
                let fc = f(con.0, con.1);
                if fc < vals[w] {
                    pts[w] = con;
                    vals[w] = fc;
                } else {
                    // shrink toward best
                    for i in 0..3 {
                        if i != b {
                            pts[i] = (
                                pts[b].0 + 0.5 * (pts[i].0 - pts[b].0),
                                pts[b].1 + 0.5 * (pts[i].1 - pts[b].1),
                            );
                            vals[i] = f(pts[i].0, pts[i].1);
                        }
                    }
                }
            }
        }

        let mut best = 0;
        for i in 1..3 {
            if vals[i] < vals[best] {
                best = i;
            }
        }
        (pts[best], vals[best])
    }
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
}
