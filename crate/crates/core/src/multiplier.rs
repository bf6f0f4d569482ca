//! Multiplier-sequence checks for diagonal operators `T_gamma` acting on
//! coefficient vectors, with certificates and counterexample witnesses, plus
//! generators for the witness polynomial families used throughout the test
//! suites.
//!
//! `kind1_finite` asks whether the image of `(1+x)^k` has one-sided real
//! roots, `kind2_finite` whether it is real-rooted at all, `kind3` whether
//! the sequence is weakly log-concave (the criterion for preserving
//! sign-independent real-rootedness), and the two `thm2` variants test the
//! power-dominance inequality that governs preservation of the
//! maximally-imaginary class, in its literal and scale-invariant readings.

use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::archgeo::{log_concavity, Strictness};
use crate::error::{Error, Result};
use crate::poly::{binomial_poly, GammaSeq, Poly};
use crate::realroots::{classify, ii_defeating_flip, nonzero_root_signs, si_defeating_flip};

/// The exponent vector (s_1, ..., s_{k-1}) used to build the spread-out
/// witness polynomial `1 + lambda^{s_1} x + ... + x^k`: symmetric, strictly
/// concave against the convention s_0 = s_k = 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SVector {
    entries: Vec<u32>,
}

impl SVector {
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Closed form, split by parity: for even k, s_j counts down from the
/// triangular number of k/2; for odd k it is the sum of the integers from
/// j - (k-1)/2 through (k-1)/2.
pub fn s_vector(k: usize) -> Result<SVector> {
    if k < 2 {
        return Err(Error::DegreeTooLow { degree: k });
    }
    let entries = (1..k)
        .map(|j| {
            if k % 2 == 0 {
                let h = (k / 2) as i64;
                let d = (h - j as i64).abs();
                ((h * (h + 1) - d * (d + 1)) / 2) as u32
            } else {
                let h = ((k - 1) / 2) as i64;
                let lo = j as i64 - h;
                // Sum of the integers in [lo, h].
                (((h + lo) * (h - lo + 1)) / 2) as u32
            }
        })
        .collect();
    Ok(SVector { entries })
}

/// Builds `1 + lambda^{s_1} x + ... + lambda^{s_{k-1}} x^{k-1} + x^k` and
/// certifies sign-independent real-rootedness, or reports the defeating
/// pattern so the caller can retry with a larger lambda.
pub fn witness_si(k: usize, lambda: &BigRational) -> Result<Poly> {
    if !lambda.is_positive() {
        return Err(Error::BadParameter("lambda must be positive"));
    }
    let s = s_vector(k)?;
    let mut coeffs = Vec::with_capacity(k + 1);
    coeffs.push(BigRational::one());
    for &e in s.entries() {
        coeffs.push(lambda.clone().pow(e));
    }
    coeffs.push(BigRational::one());
    let p = Poly::new(coeffs);
    match si_defeating_flip(&p)? {
        None => Ok(p),
        Some(pattern) => Err(Error::LambdaTooSmall { lambda: lambda.clone(), pattern }),
    }
}

/// Doubles lambda from `start` until the spread-out witness becomes
/// sign-independently real-rooted; returns the first success.
pub fn witness_si_search(k: usize, start: &BigRational) -> Result<(BigRational, Poly)> {
    let mut lambda = start.clone();
    let mut last = Error::BadParameter("lambda search did not run");
    for _ in 0..64 {
        match witness_si(k, &lambda) {
            Ok(p) => return Ok((lambda, p)),
            Err(e @ Error::LambdaTooSmall { .. }) => last = e,
            Err(e) => return Err(e),
        }
        lambda = lambda * BigRational::from_integer(2.into());
    }
    Err(last)
}

/// Builds `1 + lambda^{-1}(x + ... + x^{k-1}) + x^k` and certifies membership
/// in the maximally-imaginary class (roots approach those of `x^k + 1` as
/// lambda grows).
pub fn witness_ii(k: usize, lambda: &BigRational) -> Result<Poly> {
    if k < 2 {
        return Err(Error::DegreeTooLow { degree: k });
    }
    if lambda <= &BigRational::one() {
        return Err(Error::BadParameter("lambda must exceed 1"));
    }
    let inv = lambda.recip();
    let mut coeffs = vec![inv; k + 1];
    coeffs[0] = BigRational::one();
    coeffs[k] = BigRational::one();
    let p = Poly::new(coeffs);
    match ii_defeating_flip(&p)? {
        None => Ok(p),
        Some(pattern) => Err(Error::LambdaTooSmall { lambda: lambda.clone(), pattern }),
    }
}

/// Doubling search version of [`witness_ii`].
pub fn witness_ii_search(k: usize, start: &BigRational) -> Result<(BigRational, Poly)> {
    let mut lambda = start.clone();
    let mut last = Error::BadParameter("lambda search did not run");
    for _ in 0..64 {
        match witness_ii(k, &lambda) {
            Ok(p) => return Ok((lambda, p)),
            Err(e @ Error::LambdaTooSmall { .. }) => last = e,
            Err(e) => return Err(e),
        }
        lambda = lambda * BigRational::from_integer(2.into());
    }
    Err(last)
}

/// Which member of the boundary trinomial family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TrinomialSide {
    /// `(k-j) - k x^j + j x^k`: degenerate double root at x = 1.
    Unperturbed,
    /// Middle coefficient shrunk by (1 - eps): inside the
    /// maximally-imaginary class up to interior sign flips.
    Minus,
    /// Middle coefficient grown by (1 + eps): outside it.
    Plus,
}

/// The trinomial family `(k-j) - k(1 -/+ eps) x^j + j x^k` that straddles the
/// discriminant-zero boundary. `eps` is ignored for the unperturbed member.
pub fn trinomial_pj(k: usize, j: usize, eps: &BigRational, side: TrinomialSide) -> Result<Poly> {
    if k < 2 || j == 0 || j >= k {
        return Err(Error::BadIndex { index: j });
    }
    let middle = match side {
        TrinomialSide::Unperturbed => BigRational::from_integer(k.into()),
        TrinomialSide::Minus => {
            if !eps.is_positive() || eps > &BigRational::one() {
                return Err(Error::BadParameter("eps must lie in (0, 1] for the minus side"));
            }
            BigRational::from_integer(k.into()) * (BigRational::one() - eps)
        }
        TrinomialSide::Plus => {
            if !eps.is_positive() {
                return Err(Error::BadParameter("eps must be positive for the plus side"));
            }
            BigRational::from_integer(k.into()) * (BigRational::one() + eps)
        }
    };
    let mut coeffs = vec![BigRational::zero(); k + 1];
    coeffs[0] = BigRational::from_integer((k - j).into());
    coeffs[j] = -middle;
    coeffs[k] = BigRational::from_integer(j.into());
    Ok(Poly::new(coeffs))
}

/// The five decidable multiplier-sequence conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MsKind {
    #[serde(rename = "kind1_finite")]
    Kind1Finite,
    #[serde(rename = "kind2_finite")]
    Kind2Finite,
    #[serde(rename = "kind3")]
    Kind3,
    #[serde(rename = "thm2_literal")]
    Thm2Literal,
    #[serde(rename = "thm2_normalized")]
    Thm2Normalized,
}

/// Outcome of a multiplier-sequence check. On failure, `witness` holds a
/// polynomial whose image under the sequence defeats the preservation claim
/// (checkable via `realroots::classify`), and `failing_index` points at the
/// violated inequality where one exists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MsVerdict {
    pub kind: MsKind,
    pub pass: bool,
    pub witness: Option<Poly>,
    pub failing_index: Option<usize>,
}

fn first_negative(gamma: &GammaSeq) -> Option<usize> {
    gamma.entries().iter().position(|g| g.is_negative())
}

fn first_nonpositive(gamma: &GammaSeq) -> Option<usize> {
    gamma.entries().iter().position(|g| !g.is_positive())
}

/// A zero entry with nonzero entries on both sides; such sequences are
/// rejected by the log-concavity kind because the inequality criterion no
/// longer matches preservation (the zero absorbs its whole middle block).
fn interior_zero(gamma: &GammaSeq) -> Option<usize> {
    let e = gamma.entries();
    let first = e.iter().position(|g| !g.is_zero())?;
    let last = e.iter().rposition(|g| !g.is_zero())?;
    (first..=last).find(|&i| e[i].is_zero())
}

/// Normalized power-dominance inequality at index j:
/// gamma_j^k <= gamma_0^(k-j) gamma_k^j.
fn normalized_holds(gamma: &GammaSeq, j: usize) -> bool {
    let e = gamma.entries();
    let k = e.len() - 1;
    let lhs = e[j].clone().pow(k as u32);
    let rhs = e[0].clone().pow((k - j) as u32) * e[k].clone().pow(j as u32);
    lhs <= rhs
}

/// Literal form: gamma_j^k <= (gamma_k / gamma_0)^j. Not invariant under
/// rescaling gamma, unlike the property it certifies.
fn literal_holds(gamma: &GammaSeq, j: usize) -> bool {
    let e = gamma.entries();
    let k = e.len() - 1;
    let lhs = e[j].clone().pow(k as u32);
    let rhs = (e[k].clone() / &e[0]).pow(j as u32);
    lhs <= rhs
}

/// Constructs a perturbed trinomial that certifies failure of preservation
/// of the maximally-imaginary class: the witness is inside the class up to
/// interior flips, while its image under `gamma` is not. Exists exactly when
/// the normalized inequality fails somewhere; eps = 2^-m is shrunk until the
/// strict inequality (1-eps)^k gamma_j^k > gamma_0^(k-j) gamma_k^j holds.
fn ii_defeat_witness(gamma: &GammaSeq) -> Option<Poly> {
    let e = gamma.entries();
    let k = e.len() - 1;
    let j = (1..k).find(|&j| !normalized_holds(gamma, j))?;
    let bound = e[0].clone().pow((k - j) as u32) * e[k].clone().pow(j as u32);
    let power = e[j].clone().pow(k as u32);
    let mut eps = BigRational::new(1.into(), 2.into());
    let half = eps.clone();
    for _ in 0..256 {
        let kept = (BigRational::one() - &eps).pow(k as u32);
        if kept * &power > bound {
            return trinomial_pj(k, j, &eps, TrinomialSide::Minus).ok();
        }
        eps *= &half;
    }
    None
}

/// Decides one multiplier-sequence condition for `gamma`, exactly.
///
/// The binomial-image kinds treat an identically zero image as a vacuous
/// pass. The literal thm2 variant can fail while no defeating polynomial
/// exists (its inequality is not scale-invariant); in that case the verdict
/// carries the failing index but no witness.
pub fn ms_check(gamma: &GammaSeq, kind: MsKind) -> Result<MsVerdict> {
    let k = gamma.len() - 1;
    match kind {
        MsKind::Kind1Finite | MsKind::Kind2Finite => {
            let image = gamma.apply(&binomial_poly(k))?;
            if image.is_zero() {
                return Ok(MsVerdict { kind, pass: true, witness: None, failing_index: None });
            }
            let flags = classify(&image)?;
            let pass = match kind {
                MsKind::Kind1Finite => flags.in_ss,
                _ => flags.in_rr,
            };
            Ok(MsVerdict {
                kind,
                pass,
                witness: (!pass).then(|| binomial_poly(k)),
                failing_index: None,
            })
        }
        MsKind::Kind3 => {
            if let Some(i) = first_negative(gamma) {
                return Err(Error::SignPrecondition { index: i });
            }
            if let Some(i) = interior_zero(gamma) {
                return Err(Error::InteriorZeroEntry { index: i });
            }
            let report = log_concavity(gamma, Strictness::Weak)?;
            match report.first_violation {
                None => Ok(MsVerdict { kind, pass: true, witness: None, failing_index: None }),
                Some(n) => {
                    // The image of x^(n-1) (1+x)^2 is a quadratic whose
                    // discriminant sign is exactly the violated inequality.
                    let witness = &Poly::monomial(n - 1, BigRational::one()) * &binomial_poly(2);
                    Ok(MsVerdict {
                        kind,
                        pass: false,
                        witness: Some(witness),
                        failing_index: Some(n),
                    })
                }
            }
        }
        MsKind::Thm2Literal | MsKind::Thm2Normalized => {
            if let Some(i) = first_nonpositive(gamma) {
                return Err(Error::SignPrecondition { index: i });
            }
            let holds: fn(&GammaSeq, usize) -> bool = match kind {
                MsKind::Thm2Literal => literal_holds,
                _ => normalized_holds,
            };
            match (1..k).find(|&j| !holds(gamma, j)) {
                None => Ok(MsVerdict { kind, pass: true, witness: None, failing_index: None }),
                Some(j) => Ok(MsVerdict {
                    kind,
                    pass: false,
                    witness: ii_defeat_witness(gamma),
                    failing_index: Some(j),
                }),
            }
        }
    }
}

/// One strengthened concavity inequality `a_v^2 >= 4 a_{v-1} a_{v+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TuranEntry {
    pub index: usize,
    pub holds: bool,
    pub tight: bool,
}

/// One truncation `a_m x^m + ... + a_n x^n` of the input, with its root
/// verdict. A truncation that is identically zero passes vacuously.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncationEntry {
    pub lo: usize,
    pub hi: usize,
    pub vacuous: bool,
    pub real_rooted: bool,
    pub positive_roots: usize,
    pub pass: bool,
}

/// Full structural report for a sign-independently real-rooted polynomial:
/// strengthened concavity at every interior index and root behavior of every
/// proper truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiStructureReport {
    pub turan: Vec<TuranEntry>,
    pub truncations: Vec<TruncationEntry>,
    pub pass: bool,
}

/// Verifies the structural consequences of sign-independent real-rootedness:
/// `a_v^2 >= 4 a_{v-1} a_{v+1}` at every interior index, and every proper
/// truncation real-rooted with all nonzero roots negative.
pub fn corollary1_check(p: &Poly) -> Result<SiStructureReport> {
    if !classify(p)?.in_si_geq {
        return Err(Error::NotSiGeq);
    }
    let k = p.degree();
    let four = BigRational::from_integer(4.into());
    let mut turan = Vec::new();
    for v in 1..k {
        let lhs = p.coeff(v) * p.coeff(v);
        let rhs = &four * &(p.coeff(v - 1) * p.coeff(v + 1));
        turan.push(TuranEntry { index: v, holds: lhs >= rhs, tight: lhs == rhs });
    }
    let mut truncations = Vec::new();
    for m in 0..k {
        for n in (m + 1)..=k {
            if (m, n) == (0, k) {
                continue;
            }
            let t = p.truncate(m, n)?;
            let entry = if t.is_zero() {
                TruncationEntry {
                    lo: m,
                    hi: n,
                    vacuous: true,
                    real_rooted: true,
                    positive_roots: 0,
                    pass: true,
                }
            } else {
                let flags = classify(&t)?;
                let positive = if flags.in_rr { nonzero_root_signs(&t)?.positive } else { 0 };
                TruncationEntry {
                    lo: m,
                    hi: n,
                    vacuous: false,
                    real_rooted: flags.in_rr,
                    positive_roots: positive,
                    pass: flags.in_rr && positive == 0,
                }
            };
            truncations.push(entry);
        }
    }
    let pass = turan.iter().all(|t| t.holds) && truncations.iter().all(|t| t.pass);
    Ok(SiStructureReport { turan, truncations, pass })
}

/// Result of walking the constant-coefficient deformation path.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiberPathReport {
    pub steps: usize,
    /// The degree-(k-1) quotient by x at the far end of the path.
    pub quotient: Poly,
}

/// Walks `p - a_0 tau` for tau = 0, 1/steps, ..., 1, checking that
/// sign-independent real-rootedness survives the whole path, and that the
/// endpoint (which has constant term zero) stays in the class one degree
/// down after dividing by x.
pub fn fiber_path_check(p: &Poly, steps: usize) -> Result<FiberPathReport> {
    if steps == 0 {
        return Err(Error::BadParameter("steps must be positive"));
    }
    if !classify(p)?.in_si_geq {
        return Err(Error::NotSiGeq);
    }
    if !p.coeff(0).is_positive() {
        return Err(Error::NonPositiveEntry { index: 0 });
    }
    let a0 = p.coeff(0);
    let steps_q = BigRational::from_integer(steps.into());
    for i in 1..=steps {
        let tau = BigRational::from_integer(i.into()) / &steps_q;
        let shifted = p - &Poly::new(vec![&a0 * &tau]);
        if !classify(&shifted)?.in_si_geq {
            return Err(Error::PathBroken { tau });
        }
    }
    let end = p - &Poly::new(vec![a0]);
    let (zeros, quotient) = end.strip_zero_roots();
    debug_assert!(zeros >= 1, "endpoint constant term vanishes");
    if !classify(&quotient)?.in_si_geq {
        return Err(Error::PathBroken { tau: BigRational::one() });
    }
    Ok(FiberPathReport { steps, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SignPattern;
    use crate::realroots::real_root_counts;
    use std::str::FromStr;

    fn poly(s: &str) -> Poly {
        Poly::from_str(s).unwrap()
    }

    fn rat(s: &str) -> BigRational {
        BigRational::from_str(s).unwrap()
    }

    fn gamma(s: &str) -> GammaSeq {
        GammaSeq::from_str(s).unwrap()
    }

    #[test]
    fn s_vector_matches_all_published_instances() {
        let instances: [(usize, &[u32]); 9] = [
            (2, &[1]),
            (3, &[1, 1]),
            (4, &[2, 3, 2]),
            (5, &[2, 3, 3, 2]),
            (6, &[3, 5, 6, 5, 3]),
            (7, &[3, 5, 6, 6, 5, 3]),
            (8, &[4, 7, 9, 10, 9, 7, 4]),
            (9, &[4, 7, 9, 10, 10, 9, 7, 4]),
            (10, &[5, 9, 12, 14, 15, 14, 12, 9, 5]),
        ];
        for (k, want) in instances {
            assert_eq!(s_vector(k).unwrap().entries(), want, "k = {k}");
        }
    }

    #[test]
    fn s_vector_is_symmetric_and_strictly_concave() {
        for k in 2..=40usize {
            let s = s_vector(k).unwrap();
            let e = s.entries();
            for j in 1..k {
                assert_eq!(e[j - 1], e[k - j - 1], "symmetry at k = {k}, j = {j}");
            }
            // 2 s_j > s_{j-1} + s_{j+1} with s_0 = s_k = 0.
            let at = |j: usize| if j == 0 || j == k { 0i64 } else { e[j - 1] as i64 };
            for j in 1..k {
                assert!(2 * at(j) > at(j - 1) + at(j + 1), "concavity at k = {k}, j = {j}");
            }
        }
    }

    #[test]
    fn s_vector_rejects_low_degree() {
        assert!(matches!(s_vector(1), Err(Error::DegreeTooLow { degree: 1 })));
    }

    #[test]
    fn si_witness_accepts_large_lambda() {
        let p = witness_si(3, &rat("9")).unwrap();
        assert_eq!(p, poly("1,9,9,1"));
        let q = witness_si(2, &rat("3")).unwrap();
        assert_eq!(q, poly("1,3,1"));
    }

    #[test]
    fn si_witness_reports_small_lambda_with_pattern() {
        match witness_si(3, &rat("4")) {
            Err(Error::LambdaTooSmall { lambda, pattern }) => {
                assert_eq!(lambda, rat("4"));
                assert_eq!(pattern, "+-++".parse::<SignPattern>().unwrap());
            }
            other => panic!("expected LambdaTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn si_search_doubles_until_membership() {
        let (lambda, p) = witness_si_search(3, &rat("2")).unwrap();
        assert_eq!(lambda, rat("8"));
        assert_eq!(p, poly("1,8,8,1"));
        assert!(classify(&p).unwrap().in_si_geq);
    }

    #[test]
    fn ii_witness_examples() {
        let p = witness_ii(3, &rat("10")).unwrap();
        assert_eq!(p, poly("1,1/10,1/10,1"));
        assert!(classify(&p).unwrap().in_ii_geq);
        let q = witness_ii(2, &rat("10")).unwrap();
        assert_eq!(q, poly("1,1/10,1"));
        assert_eq!(real_root_counts(&q).unwrap().with_multiplicity, 0);
    }

    #[test]
    fn ii_witness_rejects_lambda_near_one() {
        assert!(matches!(
            witness_ii(4, &rat("21/20")),
            Err(Error::LambdaTooSmall { .. })
        ));
        assert!(matches!(witness_ii(3, &rat("1")), Err(Error::BadParameter(_))));
        let (lambda, p) = witness_ii_search(4, &rat("21/20")).unwrap();
        assert!(lambda > rat("1"));
        assert!(classify(&p).unwrap().in_ii_geq);
    }

    #[test]
    fn unperturbed_trinomial_has_degenerate_unit_root() {
        let p = trinomial_pj(3, 1, &rat("0"), TrinomialSide::Unperturbed).unwrap();
        assert_eq!(p, poly("2,-3,0,1"));
        assert!(crate::discriminant::discriminant_value(&p).unwrap().is_zero());
        let report = crate::realroots::root_report(&p).unwrap();
        assert_eq!(report.distinct_real, 2);
        assert_eq!(report.total_real_with_mult, 3);
        let unit = report
            .intervals
            .iter()
            .find(|w| w.lo <= BigRational::one() && BigRational::one() <= w.hi)
            .unwrap();
        assert_eq!(unit.multiplicity, 2);
    }

    #[test]
    fn perturbed_trinomials_straddle_the_class_boundary() {
        let minus = trinomial_pj(3, 1, &rat("1/10"), TrinomialSide::Minus).unwrap();
        assert_eq!(minus, poly("2,-27/10,0,1"));
        assert_eq!(real_root_counts(&minus).unwrap().with_multiplicity, 1);
        let plus = trinomial_pj(3, 1, &rat("1/10"), TrinomialSide::Plus).unwrap();
        assert_eq!(plus, poly("2,-33/10,0,1"));
        assert_eq!(real_root_counts(&plus).unwrap().with_multiplicity, 3);
        // Up to interior flips: the shrunk trinomial is in the class, the
        // grown one is not.
        assert!(classify(&poly("2,27/10,0,1")).unwrap().in_ii_geq);
        assert!(!classify(&poly("2,33/10,0,1")).unwrap().in_ii_geq);
    }

    #[test]
    fn trinomial_validates_index_and_eps() {
        assert!(matches!(
            trinomial_pj(3, 3, &rat("0"), TrinomialSide::Unperturbed),
            Err(Error::BadIndex { index: 3 })
        ));
        assert!(matches!(
            trinomial_pj(3, 1, &rat("2"), TrinomialSide::Minus),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn identity_sequence_is_kind1() {
        let v = ms_check(&gamma("1,1,1,1"), MsKind::Kind1Finite).unwrap();
        assert!(v.pass);
        assert!(v.witness.is_none());
    }

    #[test]
    fn sign_mixing_sequence_fails_kind1_but_not_kind2() {
        // Image -1 + 2x + x^2 has roots of both signs.
        let g = gamma("-1,1,1");
        let v1 = ms_check(&g, MsKind::Kind1Finite).unwrap();
        assert!(!v1.pass);
        assert_eq!(v1.witness, Some(binomial_poly(2)));
        let v2 = ms_check(&g, MsKind::Kind2Finite).unwrap();
        assert!(v2.pass);
    }

    #[test]
    fn complexifying_sequence_fails_kind2() {
        // Image 1 + 3x + 3x^2 - x^3 has one real root only.
        let v = ms_check(&gamma("1,1,1,-1"), MsKind::Kind2Finite).unwrap();
        assert!(!v.pass);
        assert_eq!(v.witness, Some(binomial_poly(3)));
    }

    #[test]
    fn kind3_failure_attaches_the_quadratic_witness() {
        let v = ms_check(&gamma("2,1,2"), MsKind::Kind3).unwrap();
        assert!(!v.pass);
        assert_eq!(v.failing_index, Some(1));
        let w = v.witness.unwrap();
        assert_eq!(w, poly("1,2,1"));
        // The image 2 + 2x + 2x^2 is not real-rooted: 4 < 4*2*2.
        let image = gamma("2,1,2").apply(&w).unwrap();
        assert!(!classify(&image).unwrap().in_rr);
    }

    #[test]
    fn kind3_passes_on_log_concave_sequences() {
        let v = ms_check(&gamma("1,2,1"), MsKind::Kind3).unwrap();
        assert!(v.pass);
        let v = ms_check(&gamma("1,2,2,1"), MsKind::Kind3).unwrap();
        assert!(v.pass);
    }

    #[test]
    fn kind3_rejects_bad_signs_and_interior_zeros() {
        assert!(matches!(
            ms_check(&gamma("1,-1,1"), MsKind::Kind3),
            Err(Error::SignPrecondition { index: 1 })
        ));
        assert!(matches!(
            ms_check(&gamma("1,0,0,1"), MsKind::Kind3),
            Err(Error::InteriorZeroEntry { index: 1 })
        ));
        // Leading and trailing zeros are fine: shift semantics.
        assert!(ms_check(&gamma("0,1,2,1"), MsKind::Kind3).is_ok());
    }

    #[test]
    fn thm2_literal_and_normalized_agree_when_gamma0_is_one() {
        let g = gamma("1,1/9,1/9,1");
        assert!(ms_check(&g, MsKind::Thm2Literal).unwrap().pass);
        assert!(ms_check(&g, MsKind::Thm2Normalized).unwrap().pass);
    }

    #[test]
    fn thm2_modes_diverge_under_rescaling() {
        // (2,2,2) is twice the identity: preservation is untouched, but the
        // literal inequality 2^2 <= (2/2)^1 fails.
        let g = gamma("2,2,2");
        let literal = ms_check(&g, MsKind::Thm2Literal).unwrap();
        assert!(!literal.pass);
        assert_eq!(literal.failing_index, Some(1));
        assert!(literal.witness.is_none());
        let normalized = ms_check(&g, MsKind::Thm2Normalized).unwrap();
        assert!(normalized.pass);
    }

    #[test]
    fn thm2_normalized_failure_carries_a_defeating_trinomial() {
        let g = gamma("1,2,1,1");
        let v = ms_check(&g, MsKind::Thm2Normalized).unwrap();
        assert!(!v.pass);
        assert_eq!(v.failing_index, Some(1));
        let w = v.witness.unwrap();
        // Inside the class up to flips; image outside.
        let abs_w = Poly::new(w.coeffs().iter().map(|c| c.abs()).collect());
        assert!(classify(&abs_w).unwrap().in_ii_geq);
        let image = g.apply(&w).unwrap();
        let abs_image = Poly::new(image.coeffs().iter().map(|c| c.abs()).collect());
        assert!(!classify(&abs_image).unwrap().in_ii_geq);
    }

    #[test]
    fn thm2_requires_positive_entries() {
        assert!(matches!(
            ms_check(&gamma("1,0,1"), MsKind::Thm2Literal),
            Err(Error::SignPrecondition { index: 1 })
        ));
    }

    #[test]
    fn structure_report_for_the_concave_cubic() {
        let r = corollary1_check(&poly("1,9,9,1")).unwrap();
        assert!(r.pass);
        assert_eq!(r.turan.len(), 2);
        assert!(r.turan.iter().all(|t| t.holds && !t.tight));
        assert_eq!(r.truncations.len(), 5);
        assert!(r.truncations.iter().all(|t| t.pass && !t.vacuous));
    }

    #[test]
    fn structure_report_boundary_cases() {
        // x (1+x)^2: equality at the middle index.
        let r = corollary1_check(&poly("0,1,2,1")).unwrap();
        assert!(r.pass);
        assert!(r.turan[1].holds && r.turan[1].tight);
        // (1+x)^2: equality, truncations 1+2x and 2x+x^2.
        let r = corollary1_check(&poly("1,2,1")).unwrap();
        assert!(r.pass);
        assert_eq!(r.turan, vec![TuranEntry { index: 1, holds: true, tight: true }]);
        assert_eq!(r.truncations.len(), 2);
    }

    #[test]
    fn structure_report_requires_si_membership() {
        assert!(matches!(corollary1_check(&poly("1,4,4,1")), Err(Error::NotSiGeq)));
    }

    #[test]
    fn fiber_path_descends_one_degree() {
        let r = fiber_path_check(&poly("1,9,9,1"), 10).unwrap();
        assert_eq!(r.quotient, poly("9,9,1"));
        assert!(classify(&r.quotient).unwrap().in_si_geq);
        let r = fiber_path_check(&poly("1,2,1"), 4).unwrap();
        assert_eq!(r.quotient, poly("2,1"));
    }

    #[test]
    fn fiber_path_rejects_non_members() {
        assert!(matches!(fiber_path_check(&poly("1,4,4,1"), 4), Err(Error::NotSiGeq)));
        assert!(matches!(
            fiber_path_check(&poly("0,1,2,1"), 4),
            Err(Error::NonPositiveEntry { index: 0 })
        ));
    }

    #[test]
    fn hadamard_product_preserves_kind3() {
        let a = gamma("1,2,2,1");
        let b = gamma("4,6,8,6");
        assert!(ms_check(&a, MsKind::Kind3).unwrap().pass);
        assert!(ms_check(&b, MsKind::Kind3).unwrap().pass);
        let h = a.hadamard(&b).unwrap();
        assert!(ms_check(&h, MsKind::Kind3).unwrap().pass);
    }
}
