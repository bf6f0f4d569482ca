//! Evaluation of |Delta_k| over a coefficient torus with fixed moduli and
//! the two end phases pinned to zero: an expanded-monomial route while the
//! symbolic discriminant is available (k <= 5) and a complex Sylvester
//! determinant beyond that.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::discriminant::{symbolic_discriminant_cached, sylvester_matrix};
use crate::error::{Error, Result};

/// One monomial of a trigonometric sum over the free phases:
/// `weight * exp(i <exponents, theta>)`. The weight already carries the
/// integer coefficient and the fixed moduli powers.
#[derive(Debug, Clone)]
pub(crate) struct TorusTerm {
    pub weight: f64,
    /// Exponents over the free phase axes only.
    pub exponents: Vec<u32>,
}

enum Route {
    Terms(Vec<TorusTerm>),
    Sylvester { moduli: Vec<f64> },
}

pub(crate) struct DeltaField {
    k: usize,
    route: Route,
    /// Upper bound for |Delta| over the whole torus: the weight 1-norm on
    /// the term route, a Hadamard bound on the determinant route. Dividing
    /// by it makes the membership tolerances scale-free.
    normalizer: f64,
}

impl DeltaField {
    pub fn new(k: usize, moduli: &[f64]) -> Result<Self> {
        if k < 2 {
            return Err(Error::DegreeTooLow { degree: k });
        }
        if moduli.len() != k + 1 {
            return Err(Error::LengthMismatch { expected: k + 1, got: moduli.len() });
        }
        if moduli.iter().any(|r| !r.is_finite() || *r <= 0.0) {
            return Err(Error::BadParameter("moduli must be finite and positive"));
        }
        if k <= 5 {
            Ok(Self::from_terms(k, moduli))
        } else {
            Ok(Self::from_sylvester(k, moduli))
        }
    }

    fn from_terms(k: usize, moduli: &[f64]) -> Self {
        let sym = symbolic_discriminant_cached(k).expect("2 <= k <= 5 is expandable");
        let mut terms = Vec::with_capacity(sym.num_terms());
        let mut normalizer = 0.0f64;
        for (exps, coef) in sym.terms() {
            let mut weight = coef.to_f64().expect("expansion coefficients fit in f64");
            for (j, &e) in exps.iter().enumerate() {
                if e != 0 {
                    weight *= moduli[j].powi(e as i32);
                }
            }
            normalizer += weight.abs();
            terms.push(TorusTerm { weight, exponents: exps[1..k].to_vec() });
        }
        DeltaField { k, route: Route::Terms(terms), normalizer }
    }

    fn from_sylvester(k: usize, moduli: &[f64]) -> Self {
        // Row norms of the Sylvester matrix of p and p' are phase-free, so
        // the Hadamard bound |det| <= prod ||row|| holds on the whole torus.
        let p_row: f64 = moduli.iter().map(|r| r * r).sum::<f64>().sqrt();
        let dp_row: f64 = moduli
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, r)| (j as f64 * r).powi(2))
            .sum::<f64>()
            .sqrt();
        let bound = p_row.powi((k - 1) as i32) * dp_row.powi(k as i32);
        DeltaField {
            k,
            route: Route::Sylvester { moduli: moduli.to_vec() },
            normalizer: bound / moduli[k],
        }
    }

    #[cfg(test)]
    pub(crate) fn terms_route(k: usize, moduli: &[f64]) -> Self {
        Self::from_terms(k, moduli)
    }

    #[cfg(test)]
    pub(crate) fn sylvester_route(k: usize, moduli: &[f64]) -> Self {
        Self::from_sylvester(k, moduli)
    }

    #[cfg(test)]
    pub(crate) fn from_raw_terms(k: usize, terms: Vec<TorusTerm>) -> Self {
        let normalizer = terms.iter().map(|t| t.weight.abs()).sum();
        DeltaField { k, route: Route::Terms(terms), normalizer }
    }

    /// Number of free phase axes.
    pub fn dims(&self) -> usize {
        self.k - 1
    }

    pub fn eval(&self, theta: &[f64]) -> Complex64 {
        match &self.route {
            Route::Terms(terms) => eval_terms(terms, theta),
            Route::Sylvester { moduli } => eval_sylvester(moduli, theta),
        }
    }

    pub fn norm_eval(&self, theta: &[f64]) -> f64 {
        self.eval(theta).norm() / self.normalizer
    }

    /// Value and per-axis phase derivatives; term route only.
    fn eval_with_grad(&self, theta: &[f64]) -> Option<(Complex64, Vec<Complex64>)> {
        let Route::Terms(terms) = &self.route else { return None };
        let mut acc = Complex64::new(0.0, 0.0);
        let mut grad = vec![Complex64::new(0.0, 0.0); theta.len()];
        for t in terms {
            let angle: f64 =
                t.exponents.iter().zip(theta).map(|(&e, th)| e as f64 * th).sum();
            let w = Complex64::from_polar(t.weight, angle);
            acc += w;
            for (a, &e) in t.exponents.iter().enumerate() {
                if e != 0 {
                    grad[a] += w * Complex64::new(0.0, e as f64);
                }
            }
        }
        Some((acc, grad))
    }

    /// Up to `want` of the smallest normalized |Delta| grid values, with
    /// their phase vectors, kept pairwise at least two cells apart on the
    /// phase torus so subsequent local searches start in distinct basins.
    /// Ties resolve to the smallest flat index, so the result does not
    /// depend on thread scheduling.
    pub fn grid_min_multi(&self, grid: usize, want: usize) -> Vec<(f64, Vec<f64>)> {
        // Candidates kept per first-axis row before the global merge.
        const ROW_KEEP: usize = 4;
        let dims = self.dims();
        let g = grid;
        let h = std::f64::consts::TAU / g as f64;
        let inner: usize = g.pow((dims - 1) as u32);
        let rows: Vec<Vec<(f64, u64)>> = (0..g)
            .into_par_iter()
            .map(|m0| {
                let mut keep: Vec<(f64, u64)> = Vec::with_capacity(ROW_KEEP + 1);
                let mut theta = vec![0.0f64; dims];
                theta[0] = m0 as f64 * h;
                for flat in 0..inner {
                    let mut rem = flat;
                    for a in (1..dims).rev() {
                        theta[a] = (rem % g) as f64 * h;
                        rem /= g;
                    }
                    let v = self.norm_eval(&theta);
                    let cand = (v, (m0 * inner + flat) as u64);
                    if keep.len() < ROW_KEEP || v < keep[keep.len() - 1].0 {
                        let pos = keep
                            .partition_point(|c| c.0.total_cmp(&cand.0).is_lt());
                        keep.insert(pos, cand);
                        keep.truncate(ROW_KEEP);
                    }
                }
                keep
            })
            .collect();
        let mut pool: Vec<(f64, u64)> = rows.into_iter().flatten().collect();
        pool.sort_unstable_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));

        let decode = |key: u64| -> Vec<usize> {
            let mut cell = vec![0usize; dims];
            let mut rem = key as usize;
            for a in (0..dims).rev() {
                cell[a] = rem % g;
                rem /= g;
            }
            cell
        };
        let mut picked: Vec<Vec<usize>> = Vec::new();
        let mut starts = Vec::new();
        for (v, key) in pool {
            let cell = decode(key);
            let separated = picked.iter().all(|p| {
                p.iter().zip(&cell).any(|(&a, &b)| {
                    let d = a.abs_diff(b);
                    d.min(g - d) >= 2
                })
            });
            if separated {
                starts.push((v, cell.iter().map(|&c| c as f64 * h).collect()));
                picked.push(cell);
                if starts.len() == want {
                    break;
                }
            }
        }
        starts
    }

    /// Compass (coordinate-descent) search from `theta`: steps along each
    /// axis, halving the step when no direction improves.
    pub fn refine(
        &self,
        mut theta: Vec<f64>,
        step0: f64,
        max_iters: usize,
    ) -> (f64, Vec<f64>, usize) {
        let mut best = self.norm_eval(&theta);
        let mut step = step0;
        let mut iters = 0;
        while iters < max_iters && step > 1e-16 && best > 0.0 {
            iters += 1;
            let mut improved = false;
            for a in 0..theta.len() {
                for dir in [1.0f64, -1.0] {
                    let saved = theta[a];
                    theta[a] = saved + dir * step;
                    let v = self.norm_eval(&theta);
                    if v < best {
                        best = v;
                        improved = true;
                    } else {
                        theta[a] = saved;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        (best, theta, iters)
    }

    /// Newton iteration on the two phase axes with the largest derivative,
    /// driving the complex value itself to zero. Quadratic near simple zeros,
    /// which coordinate descent alone approaches too slowly for the inside
    /// tolerance. Accepts a step only when the normalized value drops.
    pub fn newton_polish(&self, theta: &mut [f64], best: &mut f64, max_iters: usize) -> usize {
        if theta.len() < 2 {
            return 0;
        }
        let mut used = 0;
        for _ in 0..max_iters {
            if *best == 0.0 {
                break;
            }
            let Some((v, grad)) = self.eval_with_grad(theta) else { break };
            let (mut a, mut b) = (0, 1);
            for i in 0..grad.len() {
                if grad[i].norm_sqr() > grad[a].norm_sqr() {
                    b = a;
                    a = i;
                } else if i != a && grad[i].norm_sqr() > grad[b].norm_sqr() {
                    b = i;
                }
            }
            let (ga, gb) = (grad[a], grad[b]);
            let det = ga.re * gb.im - gb.re * ga.im;
            if det.abs() < 1e-300 {
                break;
            }
            let da = (-v.re * gb.im + gb.re * v.im) / det;
            let db = (-ga.re * v.im + ga.im * v.re) / det;
            let mut scale = 1.0f64;
            let mut accepted = false;
            for _ in 0..6 {
                let (sa, sb) = (theta[a], theta[b]);
                theta[a] = sa + scale * da;
                theta[b] = sb + scale * db;
                let nv = self.norm_eval(theta);
                if nv < *best {
                    *best = nv;
                    accepted = true;
                    used += 1;
                    break;
                }
                theta[a] = sa;
                theta[b] = sb;
                scale *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        used
    }

    /// Mean of log|Delta| over the uniform phase grid: the trapezoidal rule
    /// on the torus, which converges exponentially when the point lies
    /// outside the amoeba.
    pub fn log_abs_mean(&self, grid: usize) -> f64 {
        let dims = self.dims();
        let g = grid;
        let h = std::f64::consts::TAU / g as f64;
        let inner: usize = g.pow((dims - 1) as u32);
        let rows: Vec<f64> = (0..g)
            .into_par_iter()
            .map(|m0| {
                let mut sum = 0.0f64;
                let mut theta = vec![0.0f64; dims];
                theta[0] = m0 as f64 * h;
                for flat in 0..inner {
                    let mut rem = flat;
                    for a in (1..dims).rev() {
                        theta[a] = (rem % g) as f64 * h;
                        rem /= g;
                    }
                    sum += self.eval(&theta).norm().ln();
                }
                sum
            })
            .collect();
        rows.iter().sum::<f64>() / (g.pow(dims as u32)) as f64
    }
}

fn eval_terms(terms: &[TorusTerm], theta: &[f64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for t in terms {
        let angle: f64 = t.exponents.iter().zip(theta).map(|(&e, th)| e as f64 * th).sum();
        let (s, c) = angle.sin_cos();
        acc += Complex64::new(t.weight * c, t.weight * s);
    }
    acc
}

fn eval_sylvester(moduli: &[f64], theta: &[f64]) -> Complex64 {
    let k = moduli.len() - 1;
    let a: Vec<Complex64> = (0..=k)
        .map(|j| {
            let phase = if j == 0 || j == k { 0.0 } else { theta[j - 1] };
            Complex64::from_polar(moduli[j], phase)
        })
        .collect();
    let da: Vec<Complex64> = (1..=k).map(|j| a[j] * j as f64).collect();
    let m = sylvester_matrix(&a, &da, &Complex64::new(0.0, 0.0));
    let det = lu_det(m);
    let signed = if (k * (k - 1) / 2) % 2 == 1 { -det } else { det };
    signed / a[k]
}

/// Determinant by LU with partial pivoting.
fn lu_det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for r in 0..n {
        let mut pivot = r;
        for i in (r + 1)..n {
            if m[i][r].norm_sqr() > m[pivot][r].norm_sqr() {
                pivot = i;
            }
        }
        if m[pivot][r].norm_sqr() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != r {
            m.swap(r, pivot);
            det = -det;
        }
        det *= m[r][r];
        for i in (r + 1)..n {
            let f = m[i][r] / m[r][r];
            for j in (r + 1)..n {
                let sub = f * m[r][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}
