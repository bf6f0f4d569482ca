//! Point-cloud sampling of the discriminant amoeba through the double-root
//! factorization: every polynomial `(x - t)^2 h(x)` lies on the discriminant
//! locus, so the log moduli of its coefficients lie in the amoeba exactly.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{log_abs_complex, LogPoint};
use crate::error::{Error, Result};

const RESAMPLE_LIMIT: usize = 100;

/// Draws `n` amoeba points for degree `k`, deterministically in `seed`.
/// Root moduli are log-uniform in [e^-2, e^2] with uniform phases; the
/// double root contributes twice, the cofactor supplies the remaining k - 2
/// roots.
pub fn sample_amoeba(k: usize, n: usize, seed: u64) -> Result<Vec<LogPoint>> {
    if k < 2 {
        return Err(Error::DegreeTooLow { degree: k });
    }
    if n == 0 {
        return Err(Error::BadParameter("sample count must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sample_one(k, &mut rng)).collect()
}

fn random_root(rng: &mut ChaCha8Rng) -> Complex64 {
    let modulus = rng.random_range(-2.0f64..2.0).exp();
    let phase = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(modulus, phase)
}

fn sample_one(k: usize, rng: &mut ChaCha8Rng) -> Result<LogPoint> {
    for _ in 0..RESAMPLE_LIMIT {
        let t = random_root(rng);
        let mut roots = vec![t, t];
        roots.extend((2..k).map(|_| random_root(rng)));
        let coeffs = expand_monic(&roots);
        // Cancellation can zero an interior coefficient, and the log map
        // needs every modulus positive; redraw in that case.
        if coeffs.iter().all(|c| c.norm() > 0.0) {
            return log_abs_complex(&coeffs);
        }
    }
    Err(Error::DegenerateSample)
}

/// Ascending coefficients of the monic polynomial with the given roots.
fn expand_monic(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (j, &cj) in c.iter().enumerate() {
            next[j + 1] += cj;
            next[j] -= r * cj;
        }
        c = next;
    }
    c
}
