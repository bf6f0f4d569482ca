//! Archimedean coefficient geometry: lower hulls of the points
//! `(i, -log|a_i|)`, the subdivisions they induce, sequence log-concavity,
//! and the three recession cones that bound complement components of the
//! discriminant amoeba.
//!
//! No logarithms are ever taken: every slope or cone comparison is an exact
//! power-product inequality over the rationals.

use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{GammaSeq, Poly};

/// A subdivision of an integer interval, stored as its strictly increasing
/// breakpoint list (at least two entries).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Subdivision {
    breakpoints: Vec<usize>,
}

impl Subdivision {
    pub fn new(breakpoints: Vec<usize>) -> Result<Self> {
        if breakpoints.len() < 2 || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadParameter("breakpoints must strictly increase, length >= 2"));
        }
        Ok(Subdivision { breakpoints })
    }

    /// Subdivision of `[0, k]` whose interior breakpoints are the set bits of
    /// `mask` (bit `j - 1` marks breakpoint `j`).
    pub fn from_bitmask(k: usize, mask: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParameter("k must be at least 1"));
        }
        let mut breakpoints = vec![0];
        for j in 1..k {
            if mask & (1 << (j - 1)) != 0 {
                breakpoints.push(j);
            }
        }
        breakpoints.push(k);
        Ok(Subdivision { breakpoints })
    }

    pub fn breakpoints(&self) -> &[usize] {
        &self.breakpoints
    }

    pub fn first(&self) -> usize {
        self.breakpoints[0]
    }

    pub fn last(&self) -> usize {
        *self.breakpoints.last().unwrap()
    }

    /// Interior breakpoints encoded as bits (bit `j - 1` for breakpoint `j`).
    pub fn bitmask(&self) -> u64 {
        let mut mask = 0u64;
        for &b in &self.breakpoints[1..self.breakpoints.len() - 1] {
            mask |= 1 << (b - 1);
        }
        mask
    }

    pub fn segments(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.breakpoints.windows(2).map(|w| (w[0], w[1]))
    }

    /// Finest subdivision: every integer of the range is a breakpoint.
    pub fn is_finest(&self) -> bool {
        self.breakpoints.len() == self.last() - self.first() + 1
    }

    /// Trivial subdivision: the undivided interval.
    pub fn is_trivial(&self) -> bool {
        self.breakpoints.len() == 2
    }
}

/// All `2^(k-1)` subdivisions of `[0, k]`, ordered by interior bitmask.
pub fn enumerate_subdivisions(k: usize) -> Result<Vec<Subdivision>> {
    if k == 0 || k > 20 {
        return Err(Error::Unsupported { what: "subdivision enumeration needs 1 <= k <= 20" });
    }
    (0..(1u64 << (k - 1))).map(|mask| Subdivision::from_bitmask(k, mask)).collect()
}

/// Lower hull of the Archimedean coefficient heights of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArchNewton {
    pub degree: usize,
    /// Indices with nonzero coefficient.
    pub support: Vec<usize>,
    /// Support indices that are vertices of the lower hull.
    pub vertices: Vec<usize>,
    /// Consecutive vertex pairs forming the lower edges.
    pub lower_edges: Vec<(usize, usize)>,
    /// The induced subdivision of the support range.
    pub subdivision: Subdivision,
}

/// Compares the height at `j` against the chord from `i` to `l` (all support
/// indices, `i < j < l`) for heights `-log|a|`: returns `Less` when the point
/// lies strictly below the chord, `Equal` when collinear, `Greater` above.
fn height_vs_chord(
    ai: &BigRational,
    aj: &BigRational,
    al: &BigRational,
    i: usize,
    j: usize,
    l: usize,
) -> std::cmp::Ordering {
    // Below the chord <=> |a_i|^(l-j) |a_l|^(j-i) < |a_j|^(l-i).
    let chord = ai.abs().pow((l - j) as u32) * al.abs().pow((j - i) as u32);
    let point = aj.abs().pow((l - i) as u32);
    chord.cmp(&point)
}

/// Computes the lower hull of `(i, -log|a_i|)` over the support of `p`,
/// merging collinear points into single edges.
pub fn arch_newton(p: &Poly) -> Result<ArchNewton> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support: Vec<usize> =
        (0..=p.degree()).filter(|&i| !p.coeff(i).is_zero()).collect();
    let mut stack: Vec<usize> = Vec::new();
    for &l in &support {
        while stack.len() >= 2 {
            let j = stack[stack.len() - 1];
            let i = stack[stack.len() - 2];
            let below = height_vs_chord(
                &p.coeff(i),
                &p.coeff(j),
                &p.coeff(l),
                i,
                j,
                l,
            );
            if below == std::cmp::Ordering::Less {
                break;
            }
            // On or above the chord: j is not a hull vertex.
            stack.pop();
        }
        stack.push(l);
    }
    let lower_edges = stack.windows(2).map(|w| (w[0], w[1])).collect();
    let subdivision = Subdivision::new(stack.clone())
        .expect("hull vertices strictly increase");
    Ok(ArchNewton {
        degree: p.degree(),
        support,
        vertices: stack,
        lower_edges,
        subdivision,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strictness {
    Weak,
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogConcavityReport {
    pub holds: bool,
    /// Center index of the first failing inequality, if any.
    pub first_violation: Option<usize>,
}

/// Checks `gamma_j^2 >= gamma_{j-1} gamma_{j+1}` (or strict) for all interior
/// indices of a nonnegative sequence.
pub fn log_concavity(gamma: &GammaSeq, strictness: Strictness) -> Result<LogConcavityReport> {
    for (i, g) in gamma.entries().iter().enumerate() {
        if g.is_negative() {
            return Err(Error::NegativeEntry { index: i });
        }
    }
    let e = gamma.entries();
    for j in 1..e.len().saturating_sub(1) {
        let lhs = &e[j] * &e[j];
        let rhs = &e[j - 1] * &e[j + 1];
        let ok = match strictness {
            Strictness::Weak => lhs >= rhs,
            Strictness::Strict => lhs > rhs,
        };
        if !ok {
            return Ok(LogConcavityReport { holds: false, first_violation: Some(j) });
        }
    }
    Ok(LogConcavityReport { holds: true, first_violation: None })
}

/// The three recession cones of complement components, in log coordinates
/// `x_i = log a_i` over strictly positive vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cone {
    /// `2 x_l >= x_{l-1} + x_{l+1}`: log-concave coefficient vectors.
    LogConcave,
    /// `2 x_l >= x_{l-1} + x_{l+1} + log 4`: the supporting translate that
    /// contains the component of sign-independently real-rooted vectors.
    Strengthened,
    /// `k x_j <= (k-j) x_0 + j x_k`: end coefficients dominate; contains the
    /// component of maximally-imaginary vectors.
    EndpointDominance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConeSpec {
    pub cone: Cone,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    Interior,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeVerdict {
    pub region: Region,
    /// Indices where the inequality holds with equality.
    pub tight: Vec<usize>,
    /// Indices where the inequality fails.
    pub violated: Vec<usize>,
}

/// Exact cone membership for a strictly positive coefficient vector of
/// length `k + 1`. Each inequality is evaluated as a power product: no logs.
pub fn cone_member(spec: ConeSpec, a: &[BigRational]) -> Result<ConeVerdict> {
    let k = spec.k;
    if k == 0 {
        return Err(Error::Unsupported { what: "cones need k >= 1" });
    }
    if a.len() != k + 1 {
        return Err(Error::LengthMismatch { expected: k + 1, got: a.len() });
    }
    for (i, x) in a.iter().enumerate() {
        if !x.is_positive() {
            return Err(Error::NonPositiveEntry { index: i });
        }
    }
    let four = BigRational::from_integer(4.into());
    let mut tight = Vec::new();
    let mut violated = Vec::new();
    for idx in 1..k {
        // (lhs, rhs) encode an inequality lhs >= rhs; equality is boundary.
        let (lhs, rhs) = match spec.cone {
            Cone::LogConcave => (&a[idx] * &a[idx], &a[idx - 1] * &a[idx + 1]),
            Cone::Strengthened => (&a[idx] * &a[idx], &four * &(&a[idx - 1] * &a[idx + 1])),
            Cone::EndpointDominance => (
                a[0].clone().pow((k - idx) as u32) * a[k].clone().pow(idx as u32),
                a[idx].clone().pow(k as u32),
            ),
        };
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => {}
            std::cmp::Ordering::Equal => tight.push(idx),
            std::cmp::Ordering::Less => violated.push(idx),
        }
    }
    let region = if !violated.is_empty() {
        Region::Outside
    } else if !tight.is_empty() {
        Region::Boundary
    } else {
        Region::Interior
    };
    Ok(ConeVerdict { region, tight, violated })
}
