//! Floating-point amoeba experiments for the discriminant hypersurface: the
//! coordinatewise log-modulus map, numerical membership with an honest
//! uncertain band, point-cloud sampling through the double-root
//! factorization, Ronkin-function quadrature, complement-component labeling
//! by vertex dominance, and reflected-component counting.
//!
//! Everything here is `f64`; the exact modules never depend on this one.

pub mod components;
mod field;
pub mod label;
pub mod ronkin;
pub mod sample;
pub mod svg;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use field::DeltaField;

pub use components::{count_reflected_components, ComponentRep, ComponentReport};
pub use label::{component_label, ComponentLabel};
pub use ronkin::{ronkin_estimate, RonkinEstimate};
pub use sample::sample_amoeba;
pub use svg::render_cubic_slice;

/// Default phase-grid resolution per free axis for membership queries.
pub const DEFAULT_PHASE_GRID: usize = 256;
/// Membership threshold on the normalized |Delta| below which a point is
/// declared inside.
pub const DEFAULT_TOL_INSIDE: f64 = 1e-10;
/// Threshold above which a refined minimum is declared outside.
pub const DEFAULT_TOL_OUTSIDE: f64 = 1e-6;
/// Budget for the local descent after the grid sweep.
const MAX_REFINE_ITERS: usize = 50;

/// A point in the log-modulus space of coefficient vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogPoint {
    /// Full coordinates (x_0, ..., x_k).
    pub coords: Vec<f64>,
    /// Interior coordinates (x_1', ..., x_{k-1}') after projecting to
    /// x_0 = x_k = 0 along the two homogeneity directions.
    pub slice_form: Option<Vec<f64>>,
}

impl LogPoint {
    /// Wraps full coordinates and populates the slice form.
    pub fn new(coords: Vec<f64>) -> Self {
        let projected = slice_project(&coords);
        let slice_form = Some(projected[1..projected.len() - 1].to_vec());
        LogPoint { coords, slice_form }
    }

    /// Builds the point with the given interior slice coordinates and
    /// x_0 = x_k = 0.
    pub fn from_slice_interior(interior: &[f64]) -> Self {
        let mut coords = Vec::with_capacity(interior.len() + 2);
        coords.push(0.0);
        coords.extend_from_slice(interior);
        coords.push(0.0);
        LogPoint::new(coords)
    }

    pub fn degree(&self) -> usize {
        self.coords.len().saturating_sub(1)
    }

    /// Full-length slice projection of the coordinates.
    pub fn slice(&self) -> Vec<f64> {
        slice_project(&self.coords)
    }
}

/// Projects along the two homogeneity directions onto the slice
/// x_0 = x_k = 0: `x_j' = x_j - x_0 + (j/k)(x_0 - x_k)`. Idempotent.
pub fn slice_project(coords: &[f64]) -> Vec<f64> {
    let k = coords.len() - 1;
    if k == 0 {
        return vec![0.0];
    }
    let d = coords[0] - coords[k];
    coords
        .iter()
        .enumerate()
        .map(|(j, x)| x - coords[0] + (j as f64 / k as f64) * d)
        .collect()
}

/// The coordinatewise log-modulus map on real coefficient vectors.
pub fn log_abs(a: &[f64]) -> Result<LogPoint> {
    if a.len() < 2 {
        return Err(Error::DegreeTooLow { degree: a.len().saturating_sub(1) });
    }
    let mut coords = Vec::with_capacity(a.len());
    for (index, &c) in a.iter().enumerate() {
        if c == 0.0 || !c.is_finite() {
            return Err(Error::ZeroCoordinate { index });
        }
        coords.push(c.abs().ln());
    }
    Ok(LogPoint::new(coords))
}

/// [`log_abs`] for exact rational coefficients.
pub fn log_abs_rational(a: &[BigRational]) -> Result<LogPoint> {
    let floats: Vec<f64> =
        a.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
    log_abs(&floats)
}

/// [`log_abs`] for complex coefficients, as produced by the sampler.
pub fn log_abs_complex(a: &[Complex64]) -> Result<LogPoint> {
    let moduli: Vec<f64> = a.iter().map(|c| c.norm()).collect();
    log_abs(&moduli)
}

/// Three-way verdict of the numerical membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MemberStatus {
    Inside,
    Outside,
    Uncertain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipVerdict {
    pub status: MemberStatus,
    /// Smallest normalized |Delta_k| found over the sampled phases.
    pub min_abs_delta: f64,
    pub refine_iters: usize,
}

/// Builds the torus evaluator for the slice projection of `x`.
pub(crate) fn field_at(k: usize, x: &LogPoint) -> Result<DeltaField> {
    if x.coords.len() != k + 1 {
        return Err(Error::LengthMismatch { expected: k + 1, got: x.coords.len() });
    }
    let slice = slice_project(&x.coords);
    let moduli: Vec<f64> = slice.iter().map(|v| v.exp()).collect();
    DeltaField::new(k, &moduli)
}

/// Decides whether the log point lies in the amoeba of the degree-k
/// discriminant: sweeps |Delta_k| over a phase grid of the k-1 free phases
/// (the two homogeneities pin the ends), then locally refines the best few
/// well-separated cells by coordinate descent with a Newton polish. Several
/// starting basins guard against a narrow zero basin losing the grid
/// minimum to a broad shallow one. |Delta| is normalized by an upper bound
/// over the torus, so the tolerances are scale-free; minima in the band
/// between them yield an honest `uncertain`.
///
/// The verdicts are asymmetric: `inside` is backed by a numerical witness
/// phase, while `outside` only says the search found no small value, so a
/// grid too coarse for the basin around a zero can misreport it.
pub fn amoeba_member(
    k: usize,
    x: &LogPoint,
    grid: usize,
    tol_inside: f64,
    tol_outside: f64,
) -> Result<MembershipVerdict> {
    if !(tol_inside > 0.0) || !(tol_outside > tol_inside) {
        return Err(Error::BadTolerances);
    }
    if grid < 2 {
        return Err(Error::BadParameter("phase grid needs at least 2 points per axis"));
    }
    let field = field_at(k, x)?;
    let step = std::f64::consts::TAU / grid as f64;
    let mut best = f64::NAN;
    let mut spent = 0;
    for (_, start) in field.grid_min_multi(grid, 4) {
        let (mut v, mut theta, iters) = field.refine(start, step, MAX_REFINE_ITERS);
        spent += iters + field.newton_polish(&mut theta, &mut v, 8);
        if best.is_nan() || v.total_cmp(&best).is_lt() {
            best = v;
        }
        if best <= tol_inside {
            break;
        }
    }
    let status = if best <= tol_inside {
        MemberStatus::Inside
    } else if best >= tol_outside {
        MemberStatus::Outside
    } else {
        MemberStatus::Uncertain
    };
    Ok(MembershipVerdict { status, min_abs_delta: best, refine_iters: spent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn lp(interior: &[f64]) -> LogPoint {
        LogPoint::from_slice_interior(interior)
    }

    fn member_default(k: usize, x: &LogPoint) -> MembershipVerdict {
        amoeba_member(k, x, DEFAULT_PHASE_GRID, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)
            .unwrap()
    }

    #[test]
    fn log_abs_of_all_ones_is_origin() {
        let p = log_abs(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(p.coords, vec![0.0; 4]);
        assert_eq!(p.slice_form, Some(vec![0.0, 0.0]));
    }

    #[test]
    fn log_abs_keeps_symmetric_moduli() {
        let p = log_abs(&[1.0, 9.0, -9.0, 1.0]).unwrap();
        let l9 = 9.0f64.ln();
        assert_eq!(p.coords, vec![0.0, l9, l9, 0.0]);
        assert_eq!(p.slice_form, Some(vec![l9, l9]));
    }

    #[test]
    fn log_abs_rejects_zero_coordinates() {
        assert!(matches!(
            log_abs(&[1.0, 0.0, 1.0]),
            Err(Error::ZeroCoordinate { index: 1 })
        ));
    }

    #[test]
    fn geometric_sequences_project_to_the_origin() {
        let a: Vec<f64> = (0..=3).map(|j| 2.0 * 3.0f64.powi(j)).collect();
        let p = log_abs(&a).unwrap();
        for v in p.slice_form.unwrap() {
            assert!(v.abs() < 1e-12, "got {v}");
        }
    }

    #[test]
    fn slice_projection_is_idempotent() {
        let x = vec![0.3, -1.2, 2.5, 0.9, -0.4];
        let once = slice_project(&x);
        let twice = slice_project(&once);
        assert_eq!(once, twice);
        assert_eq!(once[0], 0.0);
        assert_eq!(once[4], 0.0);
    }

    #[test]
    fn real_discriminant_point_is_inside() {
        // (1, 3, 3, 1) sits on the discriminant at zero phases.
        let x = log_abs(&[1.0, 3.0, 3.0, 1.0]).unwrap();
        let v = member_default(3, &x);
        assert_eq!(v.status, MemberStatus::Inside);
        assert!(v.min_abs_delta <= DEFAULT_TOL_INSIDE);
    }

    #[test]
    fn concave_cubic_point_is_outside() {
        let v = member_default(3, &lp(&[9.0f64.ln(), 9.0f64.ln()]));
        assert_eq!(v.status, MemberStatus::Outside);
        assert!(v.min_abs_delta >= DEFAULT_TOL_OUTSIDE);
    }

    #[test]
    fn complex_double_root_point_is_inside() {
        // (x + i)^2 (x + 2) = -2 + (-1 + 4i) x + (2 + 2i) x^2 + x^3: the
        // discriminant vanishes at phases the grid does not contain, so the
        // refinement has to find them.
        let coeffs = [
            Complex64::new(-2.0, 0.0),
            Complex64::new(-1.0, 4.0),
            Complex64::new(2.0, 2.0),
            Complex64::new(1.0, 0.0),
        ];
        let x = log_abs_complex(&coeffs).unwrap();
        let v = member_default(3, &x);
        assert_eq!(v.status, MemberStatus::Inside);
    }

    #[test]
    fn quadratic_membership_reduces_to_modulus_comparison() {
        // |Delta_2| on the torus is minimized at real phases, so the verdict
        // matches the sign structure of a_1^2 - 4 a_0 a_2 over flips.
        let on = log_abs(&[1.0, 2.0, 1.0]).unwrap();
        assert_eq!(member_default(2, &on).status, MemberStatus::Inside);
        let off = log_abs(&[1.0, 5.0, 1.0]).unwrap();
        assert_eq!(member_default(2, &off).status, MemberStatus::Outside);
    }

    #[test]
    fn member_validates_inputs() {
        let x = lp(&[0.0, 0.0]);
        assert!(matches!(
            amoeba_member(3, &x, 64, 1e-6, 1e-10),
            Err(Error::BadTolerances)
        ));
        assert!(matches!(
            amoeba_member(4, &x, 64, 1e-10, 1e-6),
            Err(Error::LengthMismatch { expected: 5, got: 4 })
        ));
        let tiny = LogPoint::new(vec![0.0, 0.0]);
        assert!(matches!(
            amoeba_member(1, &tiny, 64, 1e-10, 1e-6),
            Err(Error::DegreeTooLow { degree: 1 })
        ));
    }

    #[test]
    fn membership_is_invariant_under_the_homogeneities() {
        // Rescaling a_j by c * q^j translates the log point along the two
        // pinned directions; the slice projection removes the shift.
        let p = crate::poly::Poly::from_str("1,9,9,1").unwrap();
        let q = crate::poly::Poly::from_str("5,90,180,40").unwrap(); // c = 5, q = 2
        let vp = member_default(3, &log_abs_rational(p.coeffs()).unwrap());
        let vq = member_default(3, &log_abs_rational(q.coeffs()).unwrap());
        assert_eq!(vp.status, vq.status);
        assert!((vp.min_abs_delta - vq.min_abs_delta).abs() < 1e-12);
    }

    #[test]
    fn high_degree_route_returns_a_verdict() {
        let x = LogPoint::from_slice_interior(&[2.0, 2.0, 2.0, 2.0, 2.0]);
        let v = amoeba_member(6, &x, 6, 1e-10, 1e-6).unwrap();
        assert!(v.min_abs_delta.is_finite());
    }
}
