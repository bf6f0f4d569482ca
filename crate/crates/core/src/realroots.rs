//! Exact real-root counting, isolation, and membership tests for the nested
//! polynomial classes: real-rooted (RR), nonzero roots of one sign (SS),
//! sign-independently real-rooted with nonnegative coefficients (SI>=), and
//! maximally-imaginary under interior flips (II>=).
//!
//! Everything here is exact: root counts come from Sturm chains over big
//! integers, never from floating approximations.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, SignPattern};
use crate::zpoly::{
    self, cauchy_bound, count_roots, squarefree_decomposition, squarefree_part, sturm_chain,
    SturmPoint, ZPoly,
};

/// One isolated real root: either an exact rational point (`lo == hi`) or an
/// open interval containing exactly one root of the polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsolatedRoot {
    #[serde(with = "rational_string")]
    pub lo: BigRational,
    #[serde(with = "rational_string")]
    pub hi: BigRational,
    pub multiplicity: usize,
}

mod rational_string {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(
        v: &BigRational,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

/// Exact real-root census of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub distinct_real: usize,
    pub total_real_with_mult: usize,
    pub zero_root_multiplicity: usize,
    pub intervals: Vec<IsolatedRoot>,
}

impl RootReport {
    pub fn has_zero_root(&self) -> bool {
        self.zero_root_multiplicity > 0
    }

    pub fn is_real_rooted(&self) -> bool {
        self.total_real_with_mult == self.degree
    }
}

/// Counts of nonzero real roots by sign, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignCounts {
    pub positive: usize,
    pub negative: usize,
}

/// Membership flags for the nested classes, with the first sign flip that
/// defeated SI>= (or II>=) membership when one exists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassFlags {
    #[serde(rename = "in_RR")]
    pub in_rr: bool,
    #[serde(rename = "in_SS")]
    pub in_ss: bool,
    #[serde(rename = "in_SIgeq")]
    pub in_si_geq: bool,
    #[serde(rename = "in_IIgeq")]
    pub in_ii_geq: bool,
    pub witness: Option<SignPattern>,
}

/// Distinct and multiplicity-weighted real root counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCounts {
    pub distinct: usize,
    pub with_multiplicity: usize,
}

fn ensure_nonzero(p: &Poly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// Distinct real roots and the gcd chain tail of an integer polynomial.
fn distinct_and_gcd(zp: &ZPoly) -> (usize, ZPoly) {
    if zpoly::deg(zp).map_or(true, |d| d == 0) {
        return (0, Vec::new());
    }
    let chain = sturm_chain(zp);
    let distinct = count_roots(&chain, SturmPoint::NegInf, SturmPoint::PosInf);
    let tail = chain.last().cloned().unwrap_or_default();
    (distinct, tail)
}

/// Exact real-root counts. The multiplicity-weighted count accumulates
/// distinct counts down the chain `p, gcd(p, p'), gcd(gcd, gcd'), ...`:
/// a root of multiplicity m appears in exactly m of those polynomials.
pub fn real_root_counts(p: &Poly) -> Result<RootCounts> {
    ensure_nonzero(p)?;
    let mut cur = zpoly::from_poly(p);
    let mut distinct_top = None;
    let mut total = 0usize;
    while zpoly::deg(&cur).map_or(false, |d| d >= 1) {
        let (distinct, tail) = distinct_and_gcd(&cur);
        if distinct_top.is_none() {
            distinct_top = Some(distinct);
        }
        total += distinct;
        cur = tail;
    }
    Ok(RootCounts { distinct: distinct_top.unwrap_or(0), with_multiplicity: total })
}

/// True when every complex root of `p` is real (counted with multiplicity).
pub fn is_real_rooted(p: &Poly) -> Result<bool> {
    ensure_nonzero(p)?;
    if p.degree() == 0 {
        return Ok(true);
    }
    let zp = zpoly::from_poly(p);
    let (distinct, tail) = distinct_and_gcd(&zp);
    // Distinct complex roots = deg p - deg gcd(p, p'); real-rooted iff all
    // of them are real.
    let gcd_deg = zpoly::deg(&tail).unwrap_or(0);
    Ok(distinct == p.degree() - gcd_deg)
}

/// Signs of the nonzero real roots, with multiplicity. Requires `p` to be
/// real-rooted.
pub fn nonzero_root_signs(p: &Poly) -> Result<SignCounts> {
    ensure_nonzero(p)?;
    if !is_real_rooted(p)? {
        return Err(Error::NotRealRooted);
    }
    Ok(nonzero_root_signs_unchecked(p))
}

fn nonzero_root_signs_unchecked(p: &Poly) -> SignCounts {
    let (_, q) = p.strip_zero_roots();
    let zero = BigRational::zero();
    let mut cur = zpoly::from_poly(&q);
    let mut positive = 0usize;
    let mut negative = 0usize;
    while zpoly::deg(&cur).map_or(false, |d| d >= 1) {
        let chain = sturm_chain(&cur);
        negative += count_roots(&chain, SturmPoint::NegInf, SturmPoint::At(&zero));
        positive += count_roots(&chain, SturmPoint::At(&zero), SturmPoint::PosInf);
        cur = chain.last().cloned().unwrap_or_default();
    }
    SignCounts { positive, negative }
}

struct Isolator {
    chain: Vec<ZPoly>,
    poly: ZPoly,
}

enum Found {
    Exact(BigRational),
    Open(BigRational, BigRational),
}

impl Isolator {
    fn new(squarefree: &Poly) -> Self {
        let zp = zpoly::from_poly(squarefree);
        let chain = sturm_chain(&zp);
        Isolator { poly: zp, chain }
    }

    fn var_at(&self, x: &BigRational) -> usize {
        zpoly::variations(&self.chain, SturmPoint::At(x))
    }

    fn is_root(&self, x: &BigRational) -> bool {
        zpoly::sign_at_rational(&self.poly, x) == 0
    }

    /// A point near `x` (within `radius`, on side `dir`) that is not a root.
    fn non_root_near(&self, x: &BigRational, radius: &BigRational, dir: i32) -> BigRational {
        let mut step = radius.clone();
        loop {
            let cand = if dir < 0 { x - &step } else { x + &step };
            if !self.is_root(&cand) {
                return cand;
            }
            step /= BigRational::from_integer(2.into());
        }
    }

    /// Splits `(lo, hi]` (endpoints non-roots, containing `count` roots) into
    /// isolating pieces.
    fn isolate(&self, lo: &BigRational, hi: &BigRational, count: usize, out: &mut Vec<Found>) {
        if count == 0 {
            return;
        }
        if count == 1 {
            out.push(Found::Open(lo.clone(), hi.clone()));
            return;
        }
        let two = BigRational::from_integer(2.into());
        let mid = (lo + hi) / &two;
        if self.is_root(&mid) {
            // Exact rational root at the midpoint: bracket it away from the
            // rest, then recurse on both sides.
            let radius = (hi - lo) / BigRational::from_integer(8.into());
            let mut left = self.non_root_near(&mid, &radius, -1);
            let mut right = self.non_root_near(&mid, &radius, 1);
            loop {
                let inner = self.var_at(&left) - self.var_at(&right);
                if inner == 1 {
                    break;
                }
                // Other roots crowd the bracket; shrink it.
                let new_radius = (&right - &left) / BigRational::from_integer(8.into());
                left = self.non_root_near(&mid, &new_radius, -1);
                right = self.non_root_near(&mid, &new_radius, 1);
            }
            out.push(Found::Exact(mid));
            let left_count = self.var_at(lo) - self.var_at(&left);
            let right_count = self.var_at(&right) - self.var_at(hi);
            self.isolate(lo, &left, left_count, out);
            self.isolate(&right, hi, right_count, out);
        } else {
            let left_count = self.var_at(lo) - self.var_at(&mid);
            self.isolate(lo, &mid, left_count, out);
            self.isolate(&mid, hi, count - left_count, out);
        }
    }

    /// Shrinks an open isolating interval until `point` (never a root of the
    /// square-free part) lies strictly outside its closure.
    fn exclude_point(&self, lo: &mut BigRational, hi: &mut BigRational, point: &BigRational) {
        let two = BigRational::from_integer(2.into());
        while &*lo <= point && point <= &*hi {
            let mut mid = (&*lo + &*hi) / &two;
            if self.is_root(&mid) {
                let radius = (&*hi - &*lo) / BigRational::from_integer(8.into());
                mid = self.non_root_near(&mid, &radius, 1);
            }
            if self.var_at(lo) - self.var_at(&mid) == 1 {
                *hi = mid;
            } else {
                *lo = mid;
            }
        }
    }
}

/// Full real-root census: counts, zero-root multiplicity, and pairwise
/// disjoint isolating intervals tagged with multiplicities. When the
/// polynomial has a zero root, every interval excludes zero.
pub fn root_report(p: &Poly) -> Result<RootReport> {
    ensure_nonzero(p)?;
    let degree = p.degree();
    let (zero_mult, q) = p.strip_zero_roots();
    if q.degree() == 0 {
        return Ok(RootReport {
            degree,
            distinct_real: usize::from(zero_mult > 0),
            total_real_with_mult: zero_mult,
            zero_root_multiplicity: zero_mult,
            intervals: Vec::new(),
        });
    }

    let decomposition = squarefree_decomposition(&q);
    let sf = squarefree_part(&q);
    let iso = Isolator::new(&sf);

    let bound = cauchy_bound(&zpoly::from_poly(&sf));
    let lo = -bound.clone();
    let total_distinct = iso.var_at(&lo) - iso.var_at(&bound);
    let mut found = Vec::new();
    iso.isolate(&lo, &bound, total_distinct, &mut found);

    // Tag each isolated root with its multiplicity via the square-free factor
    // it belongs to (factors are pairwise coprime, so exactly one matches).
    let factor_chains: Vec<(Vec<ZPoly>, &Poly, usize)> = decomposition
        .iter()
        .map(|(f, m)| (sturm_chain(&zpoly::from_poly(f)), f, *m))
        .collect();
    let zero = BigRational::zero();
    let mut intervals = Vec::new();
    let mut total = zero_mult;
    for item in found {
        let (mut ilo, mut ihi, exact) = match item {
            Found::Exact(x) => (x.clone(), x, true),
            Found::Open(a, b) => (a, b, false),
        };
        if zero_mult > 0 && !exact {
            iso.exclude_point(&mut ilo, &mut ihi, &zero);
        }
        let mult = factor_chains
            .iter()
            .find_map(|(chain, f, m)| {
                if exact {
                    if f.eval(&ilo).is_zero() {
                        Some(*m)
                    } else {
                        None
                    }
                } else if count_roots(chain, SturmPoint::At(&ilo), SturmPoint::At(&ihi)) == 1 {
                    Some(*m)
                } else {
                    None
                }
            })
            .expect("every isolated root belongs to one square-free factor");
        total += mult;
        intervals.push(IsolatedRoot { lo: ilo, hi: ihi, multiplicity: mult });
    }
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));

    Ok(RootReport {
        degree,
        distinct_real: intervals.len() + usize::from(zero_mult > 0),
        total_real_with_mult: total,
        zero_root_multiplicity: zero_mult,
        intervals,
    })
}

/// One representative per orbit of the sign symmetries `p -> -p` and
/// `p(x) -> p(-x)`: 2^(k-1) patterns for degree k. A transversal must respect
/// parity: the alternating flip negates the last sign only for odd k, so odd
/// degrees fix both end signs to `+` and even degrees fix the first two.
pub(crate) fn essential_sign_patterns(k: usize) -> Vec<SignPattern> {
    let len = k + 1;
    (0..(1u64 << k.saturating_sub(1)))
        .map(|mask| {
            if k % 2 == 1 {
                SignPattern::interior_from_mask(len, mask)
            } else {
                SignPattern::from_tail_mask(len, mask)
            }
        })
        .collect()
}

/// First essential flip (if any) whose image is not real-rooted.
pub(crate) fn si_defeating_flip(p: &Poly) -> Result<Option<SignPattern>> {
    for pattern in essential_sign_patterns(p.degree()) {
        let flipped = p.flip_signs(&pattern)?;
        if !is_real_rooted(&flipped)? {
            return Ok(Some(pattern));
        }
    }
    Ok(None)
}

/// First interior flip (if any) whose image does not have the maximal number
/// of imaginary roots (1 real root for odd degree, 0 for even, counted with
/// multiplicity).
pub(crate) fn ii_defeating_flip(p: &Poly) -> Result<Option<SignPattern>> {
    let k = p.degree();
    let len = k + 1;
    let target = k % 2;
    let masks = 1u64 << k.saturating_sub(1);
    for mask in 0..masks {
        let pattern = SignPattern::interior_from_mask(len, mask);
        let flipped = p.flip_signs(&pattern)?;
        if real_root_counts(&flipped)?.with_multiplicity != target {
            return Ok(Some(pattern));
        }
    }
    Ok(None)
}

/// Exhaustive SI check over all `2^(k+1)` sign patterns; quadratic-cost
/// reference for validating the essential-pattern quotient.
pub fn si_check_exhaustive(p: &Poly) -> Result<bool> {
    ensure_nonzero(p)?;
    if !p.coeffs_nonnegative() {
        return Ok(false);
    }
    let len = p.degree() + 1;
    for mask in 0..(1u64 << len) {
        let signs = (0..len).map(|j| if mask & (1 << j) == 0 { 1 } else { -1 }).collect();
        let pattern = SignPattern::new(signs)?;
        if !is_real_rooted(&p.flip_signs(&pattern)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classifies `p` into the nested classes. SI>= and II>= additionally require
/// nonnegative coefficients (and strictly positive ends for II>=); when those
/// sign preconditions fail the flag is false without a witness. A witness is
/// attached only when the polynomial lies in neither flip class: membership in
/// one of them already explains the failure of the other.
pub fn classify(p: &Poly) -> Result<ClassFlags> {
    ensure_nonzero(p)?;
    let in_rr = is_real_rooted(p)?;
    let in_ss = in_rr && {
        let sc = nonzero_root_signs_unchecked(p);
        sc.positive == 0 || sc.negative == 0
    };

    let nonneg = p.coeffs_nonnegative();
    let ends_positive = p.coeff(0).is_positive() && p.leading().is_positive();

    let si_flip = if nonneg { si_defeating_flip(p)? } else { None };
    let in_si_geq = nonneg && si_flip.is_none();
    let ii_flip = if nonneg && ends_positive { ii_defeating_flip(p)? } else { None };
    let in_ii_geq = nonneg && ends_positive && ii_flip.is_none();

    let witness = if in_si_geq || in_ii_geq { None } else { si_flip.or(ii_flip) };
    Ok(ClassFlags { in_rr, in_ss, in_si_geq, in_ii_geq, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn poly(s: &str) -> Poly {
        Poly::from_str(s).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn bowed_cubic_has_one_real_root() {
        // 1 + 2.9x + 2.9x^2 + x^3: coefficient dip below the root-forcing
        // threshold leaves a single real root.
        let counts = real_root_counts(&poly("1,29/10,29/10,1")).unwrap();
        assert_eq!(counts.distinct, 1);
        assert_eq!(counts.with_multiplicity, 1);
    }

    #[test]
    fn concave_cubic_has_three_real_roots() {
        let counts = real_root_counts(&poly("1,9,9,1")).unwrap();
        assert_eq!(counts.distinct, 3);
        assert_eq!(counts.with_multiplicity, 3);
    }

    #[test]
    fn multiplicities_counted_through_gcd_chain() {
        // (1+x)^4: one distinct root, four with multiplicity.
        let p = Poly::from_roots(&vec![q(-1, 1); 4]);
        let counts = real_root_counts(&p).unwrap();
        assert_eq!(counts.distinct, 1);
        assert_eq!(counts.with_multiplicity, 4);
        assert!(is_real_rooted(&p).unwrap());
    }

    #[test]
    fn sign_counts_of_shifted_cubic() {
        // 9x + 9x^2 + x^3 = x (9 + 9x + x^2): both nonzero roots negative.
        let sc = nonzero_root_signs(&poly("0,9,9,1")).unwrap();
        assert_eq!(sc, SignCounts { positive: 0, negative: 2 });
    }

    #[test]
    fn sign_counts_require_real_rootedness() {
        assert_eq!(
            nonzero_root_signs(&poly("1,0,0,1")).unwrap_err(),
            Error::NotRealRooted
        );
    }

    #[test]
    fn mixed_sign_roots_are_counted_with_multiplicity() {
        // x^2 (x-2)^2 (x+1)
        let p = Poly::from_roots(&[q(0, 1), q(0, 1), q(2, 1), q(2, 1), q(-1, 1)]);
        let sc = nonzero_root_signs(&p).unwrap();
        assert_eq!(sc, SignCounts { positive: 2, negative: 1 });
    }

    #[test]
    fn report_isolates_disjoint_intervals_with_multiplicities() {
        // x (x+1)^2 (x-2)
        let p = Poly::from_roots(&[q(0, 1), q(-1, 1), q(-1, 1), q(2, 1)]);
        let r = root_report(&p).unwrap();
        assert_eq!(r.degree, 4);
        assert_eq!(r.zero_root_multiplicity, 1);
        assert_eq!(r.distinct_real, 3);
        assert_eq!(r.total_real_with_mult, 4);
        assert_eq!(r.intervals.len(), 2);
        // Intervals exclude zero and are pairwise disjoint.
        for w in &r.intervals {
            assert!(w.hi < BigRational::zero() || w.lo > BigRational::zero());
        }
        for pair in r.intervals.windows(2) {
            assert!(pair[0].hi <= pair[1].lo);
        }
        let mults: Vec<usize> = r.intervals.iter().map(|w| w.multiplicity).collect();
        assert_eq!(mults, vec![2, 1]);
    }

    #[test]
    fn report_handles_exact_rational_roots() {
        // Roots at -1/2 and 3/2 with a bound making midpoint hits likely.
        let p = Poly::from_roots(&[q(-1, 2), q(3, 2), q(1, 2)]);
        let r = root_report(&p).unwrap();
        assert_eq!(r.distinct_real, 3);
        assert_eq!(r.total_real_with_mult, 3);
    }

    #[test]
    fn report_of_pure_power_of_x() {
        let r = root_report(&poly("0,0,0,1")).unwrap();
        assert_eq!(r.zero_root_multiplicity, 3);
        assert_eq!(r.distinct_real, 1);
        assert_eq!(r.total_real_with_mult, 3);
        assert!(r.intervals.is_empty());
        assert!(r.is_real_rooted());
    }

    #[test]
    fn classify_concave_cubic_is_si() {
        let flags = classify(&poly("1,9,9,1")).unwrap();
        assert!(flags.in_rr && flags.in_ss && flags.in_si_geq);
        assert!(!flags.in_ii_geq);
        assert!(flags.witness.is_none());
    }

    #[test]
    fn classify_borderline_cubic_fails_si_with_witness() {
        // 1 + 4x + 4x^2 + x^3 is real-rooted, but the flip +-++ gives
        // 1 - 4x + 4x^2 + x^3 whose discriminant 4^4 - 18*4^2 - 27 = -59 < 0.
        let flags = classify(&poly("1,4,4,1")).unwrap();
        assert!(flags.in_rr && flags.in_ss);
        assert!(!flags.in_si_geq);
        assert_eq!(flags.witness, Some("+-++".parse().unwrap()));
    }

    #[test]
    fn classify_shifted_square_is_si() {
        // x (1+x)^2: a zero root does not break sign-independence.
        let flags = classify(&poly("0,1,2,1")).unwrap();
        assert!(flags.in_si_geq);
        assert!(flags.in_ss);
    }

    #[test]
    fn classify_quadratic_without_real_roots_is_ii() {
        let flags = classify(&poly("1,1,1")).unwrap();
        assert!(!flags.in_rr && !flags.in_ss && !flags.in_si_geq);
        assert!(flags.in_ii_geq);
    }

    #[test]
    fn classify_bowed_cubic_is_ii() {
        let flags = classify(&poly("1,1/10,1/10,1")).unwrap();
        assert!(flags.in_ii_geq);
        assert!(!flags.in_si_geq);
    }

    #[test]
    fn classify_triple_root_is_neither_si_nor_ii() {
        // (1+x)^3 fails SI (a flip loses real-rootedness) and fails II
        // (three real roots where one is required).
        let flags = classify(&poly("1,3,3,1")).unwrap();
        assert!(flags.in_rr && flags.in_ss);
        assert!(!flags.in_si_geq);
        assert!(!flags.in_ii_geq);
        assert!(flags.witness.is_some());
    }

    #[test]
    fn classify_rejects_zero() {
        assert_eq!(classify(&Poly::zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn si_and_ii_are_exclusive_for_positive_quadratics() {
        let si = classify(&poly("1,2,1")).unwrap();
        assert!(si.in_si_geq && !si.in_ii_geq);
        let ii = classify(&poly("1,1,1")).unwrap();
        assert!(ii.in_ii_geq && !ii.in_si_geq);
    }

    #[test]
    fn essential_quotient_matches_exhaustive_enumeration() {
        let cases =
            ["1,9,9,1", "1,4,4,1", "0,1,2,1", "1,3,3,1", "2,27/10,0,1", "1,5,8,5,1"];
        for s in cases {
            let p = poly(s);
            let quotient = classify(&p).unwrap().in_si_geq;
            let full = si_check_exhaustive(&p).unwrap();
            assert_eq!(quotient, full, "quotient disagrees on {s}");
        }
    }
}
