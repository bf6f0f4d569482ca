//! Ronkin-function estimates for the discriminant: the phase-torus average
//! of log|Delta_k|, computed by the trapezoidal rule. Outside the amoeba the
//! integrand is smooth and the rule converges exponentially; inside, the
//! logarithmic singularities degrade the estimate, which the error hint
//! makes visible rather than hiding.

use serde::Serialize;

use super::{field_at, LogPoint};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RonkinEstimate {
    /// Quadrature value of the torus average of log|Delta_k|.
    pub value: f64,
    /// Grid resolution per free phase axis.
    pub grid: usize,
    /// Difference against the half-resolution estimate.
    pub error_hint: f64,
}

/// Estimates the Ronkin function of the degree-k discriminant at `x`. The
/// two homogeneities reduce the torus average to the k - 1 free phases of
/// the slice projection.
pub fn ronkin_estimate(k: usize, x: &LogPoint, grid: usize) -> Result<RonkinEstimate> {
    if grid < 4 {
        return Err(Error::BadParameter("quadrature grid needs at least 4 points per axis"));
    }
    let field = field_at(k, x)?;
    let value = field.log_abs_mean(grid);
    let coarse = field.log_abs_mean(grid / 2);
    Ok(RonkinEstimate { value, grid, error_hint: (value - coarse).abs() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::log_abs;

    fn lp(interior: &[f64]) -> LogPoint {
        LogPoint::from_slice_interior(interior)
    }

    #[test]
    fn deep_outside_point_matches_the_dominant_monomial() {
        // Far in the component of concave coefficient vectors the Ronkin
        // function is the affine form 2 x_1 + 2 x_2 of the dominant vertex.
        let t = 20.0f64.ln();
        let est = ronkin_estimate(3, &lp(&[t, t]), 128).unwrap();
        assert!((est.value - 4.0 * t).abs() < 1e-2, "value {}", est.value);
        assert!(est.error_hint < 1e-3);
    }

    #[test]
    fn estimate_is_affine_along_a_deep_ray() {
        let e = |s: f64| ronkin_estimate(3, &lp(&[s, s]), 96).unwrap().value;
        let (a, b, c) = (e(3.0), e(3.5), e(4.0));
        assert!((a + c - 2.0 * b).abs() < 1e-2, "{a} {b} {c}");
    }

    #[test]
    fn estimate_is_slice_invariant() {
        // (1, 9, 9, 1) rescaled by c q^j shifts the log point along the
        // pinned directions only.
        let x = log_abs(&[1.0, 9.0, 9.0, 1.0]).unwrap();
        let y = log_abs(&[5.0, 90.0, 180.0, 40.0]).unwrap();
        let ex = ronkin_estimate(3, &x, 64).unwrap().value;
        let ey = ronkin_estimate(3, &y, 64).unwrap().value;
        assert!((ex - ey).abs() < 1e-9);
    }

    #[test]
    fn quadratic_estimate_has_a_closed_form() {
        // For k = 2 the discriminant is a binomial: at moduli (1, r, 1) the
        // average of log|r^2 e^{2 i t} - 4| is max(2 log r, log 4).
        let deep = ronkin_estimate(2, &lp(&[3.0]), 256).unwrap();
        assert!((deep.value - 6.0).abs() < 1e-6, "value {}", deep.value);
        let shallow = ronkin_estimate(2, &lp(&[-3.0]), 256).unwrap();
        assert!((shallow.value - 4.0f64.ln()).abs() < 1e-6, "value {}", shallow.value);
    }

    #[test]
    fn grid_must_be_reasonable() {
        assert!(matches!(
            ronkin_estimate(3, &lp(&[0.0, 0.0]), 2),
            Err(Error::BadParameter(_))
        ));
    }
}
