//! Integer polynomial kernels backing the exact real-root machinery.
//!
//! Polynomials here are primitive integer coefficient vectors (ascending,
//! trimmed, empty = zero). Sturm chains use pseudo-remainders scaled by a
//! positive factor only, so every chain element keeps the sign of the exact
//! rational remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn deg(p: &ZPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Clears denominators and strips the integer content; the result spans the
/// same roots with the same leading sign.
pub(crate) fn from_poly(p: &Poly) -> ZPoly {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: ZPoly =
        trim(p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect());
    primitive(ints)
}

fn content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content, keeping the sign of the leading coefficient.
pub(crate) fn primitive(p: ZPoly) -> ZPoly {
    if p.is_empty() {
        return p;
    }
    let c = content(&p);
    if c.is_zero() || c.is_one() {
        return p;
    }
    p.into_iter().map(|x| x / &c).collect()
}

pub(crate) fn derivative(p: &ZPoly) -> ZPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    p.iter().enumerate().skip(1).map(|(j, c)| c * BigInt::from(j)).collect()
}

/// Remainder of a positive multiple of `f` modulo `g`: each elimination step
/// rescales by `|lc(g)|`, so the result has the sign of the exact rational
/// remainder.
fn pseudo_rem_pos(f: &ZPoly, g: &ZPoly) -> ZPoly {
    let dg = deg(g).expect("nonzero divisor");
    let lc_abs = g[dg].abs();
    let neg_lead = g[dg].is_negative();
    let mut r = trim(f.clone());
    while let Some(dr) = deg(&r) {
        if dr < dg {
            break;
        }
        // r <- |lc(g)| * r - sign(lc(g)) * lc(r) * x^(dr - dg) * g
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lc_abs;
        }
        let factor = if neg_lead { -lead } else { lead };
        for j in 0..=dg {
            let sub = &factor * &g[j];
            r[dr - dg + j] -= sub;
        }
        r = trim(r);
    }
    r
}

/// Sturm chain of `p`: starts `(p, p')`, each next element is the negated
/// remainder, normalized to primitive with positive scaling only. The last
/// element is `gcd(p, p')` up to a positive constant.
pub(crate) fn sturm_chain(p: &ZPoly) -> Vec<ZPoly> {
    let p = primitive(trim(p.clone()));
    let mut chain = vec![p.clone()];
    if deg(&p).map_or(true, |d| d == 0) {
        return chain;
    }
    chain.push(primitive(derivative(&p)));
    loop {
        let n = chain.len();
        let r = pseudo_rem_pos(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(primitive(r.into_iter().map(|c| -c).collect()));
        if deg(chain.last().unwrap()) == Some(0) {
            break;
        }
    }
    chain
}

fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Sign of `p(n/d)` for `d > 0`, via the homogenized integer value.
pub(crate) fn sign_at(p: &ZPoly, num: &BigInt, den: &BigInt) -> i8 {
    debug_assert!(den.is_positive());
    let d = match deg(p) {
        None => return 0,
        Some(d) => d,
    };
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    // sum_i c_i num^i den^(d-i), Horner in num.
    for i in (0..=d).rev() {
        acc = acc * num;
        acc += &p[i] * &den_pow;
        if i > 0 {
            den_pow *= den;
        }
    }
    sign(&acc)
}

pub(crate) fn sign_at_rational(p: &ZPoly, x: &BigRational) -> i8 {
    sign_at(p, x.numer(), x.denom())
}

/// Evaluation point for Sturm sign counting: a finite rational or an end of
/// the real line.
#[derive(Clone, Copy)]
pub(crate) enum SturmPoint<'a> {
    NegInf,
    At(&'a BigRational),
    PosInf,
}

fn sign_at_point(p: &ZPoly, at: SturmPoint<'_>) -> i8 {
    match at {
        SturmPoint::At(x) => sign_at_rational(p, x),
        SturmPoint::NegInf => {
            let d = match deg(p) {
                None => return 0,
                Some(d) => d,
            };
            let s = sign(&p[d]);
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
        SturmPoint::PosInf => match deg(p) {
            None => 0,
            Some(d) => sign(&p[d]),
        },
    }
}

/// Number of sign variations of the chain at a point, skipping zeros.
pub(crate) fn variations(chain: &[ZPoly], at: SturmPoint<'_>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign_at_point(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct real roots of the chain's polynomial in the half-open interval
/// `(a, b]`; `a` and `b` must not be roots when finite.
pub(crate) fn count_roots(chain: &[ZPoly], a: SturmPoint<'_>, b: SturmPoint<'_>) -> usize {
    variations(chain, a) - variations(chain, b)
}

/// Strict Cauchy bound: every root has absolute value below the result.
pub(crate) fn cauchy_bound(p: &ZPoly) -> BigRational {
    let d = deg(p).expect("nonzero polynomial");
    let lead = p[d].abs();
    let mut max = BigRational::zero();
    for c in &p[..d] {
        let r = BigRational::new(c.abs(), lead.clone());
        if r > max {
            max = r;
        }
    }
    max + BigRational::one()
}

/// Exact quotient of `p` by `g` over the rationals (panics if not exact);
/// used to split off the square-free part.
pub(crate) fn exact_div_rational(p: &Poly, g: &Poly) -> Poly {
    let (q, r) = div_rem(p, g);
    debug_assert!(r.is_zero(), "division must be exact");
    q
}

pub(crate) fn div_rem(p: &Poly, g: &Poly) -> (Poly, Poly) {
    assert!(!g.is_zero(), "division by zero polynomial");
    let mut rem: Vec<BigRational> = p.coeffs().to_vec();
    let dg = g.degree();
    if p.degree() < dg || p.is_zero() {
        return (Poly::zero(), p.clone());
    }
    let mut quot = vec![BigRational::zero(); p.degree() - dg + 1];
    let lead = g.leading().clone();
    for i in (dg..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let f = &rem[i] / &lead;
        quot[i - dg] = f.clone();
        rem[i] = BigRational::zero();
        for j in 0..dg {
            let sub = &f * &g.coeffs()[j];
            rem[i - dg + j] = &rem[i - dg + j] - &sub;
        }
    }
    (Poly::new(quot), Poly::new(rem))
}

/// Monic gcd over the rationals.
pub(crate) fn gcd_rational(p: &Poly, g: &Poly) -> Poly {
    let mut a = p.clone();
    let mut b = g.clone();
    if a.is_zero() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        let lead = a.leading().clone();
        a.scale(&lead.recip())
    }
}

/// Square-free part `p / gcd(p, p')`, monic up to the original leading sign.
pub(crate) fn squarefree_part(p: &Poly) -> Poly {
    let g = gcd_rational(p, &p.derivative());
    if g.degree() == 0 {
        p.clone()
    } else {
        exact_div_rational(p, &g)
    }
}

/// Yun's square-free decomposition: returns `(factor, multiplicity)` pairs
/// with pairwise coprime square-free factors of degree >= 1.
pub(crate) fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.is_zero() || p.degree() == 0 {
        return out;
    }
    let dp = p.derivative();
    let g = gcd_rational(p, &dp);
    if g.degree() == 0 {
        out.push((p.clone(), 1));
        return out;
    }
    let mut w = exact_div_rational(p, &g);
    let mut y = exact_div_rational(&dp, &g);
    let mut z = &y - &w.derivative();
    let mut i = 1usize;
    while w.degree() > 0 {
        let f = gcd_rational(&w, &z);
        if f.degree() > 0 {
            out.push((f.clone(), i));
        }
        w = exact_div_rational(&w, &f);
        y = exact_div_rational(&z, &f);
        z = &y - &w.derivative();
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn zp(coeffs: &[i64]) -> ZPoly {
        trim(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn chain_of_distinct_root_cubic() {
        // (x-1)(x-2)(x-3) = -6 + 11x - 6x^2 + x^3: three distinct real roots.
        let chain = sturm_chain(&zp(&[-6, 11, -6, 1]));
        assert_eq!(count_roots(&chain, SturmPoint::NegInf, SturmPoint::PosInf), 3);
        let z = BigRational::from_integer(0.into());
        let b = BigRational::from_integer(10.into());
        assert_eq!(count_roots(&chain, SturmPoint::At(&z), SturmPoint::At(&b)), 3);
    }

    #[test]
    fn chain_counts_distinct_roots_of_non_squarefree_input() {
        // x (x-1)^2: two distinct real roots.
        let chain = sturm_chain(&zp(&[0, 1, -2, 1]));
        assert_eq!(count_roots(&chain, SturmPoint::NegInf, SturmPoint::PosInf), 2);
        // Last chain element is gcd(p, p') up to constant: degree 1.
        assert_eq!(deg(chain.last().unwrap()), Some(1));
    }

    #[test]
    fn no_real_roots_counts_zero() {
        let chain = sturm_chain(&zp(&[1, 0, 1])); // x^2 + 1
        assert_eq!(count_roots(&chain, SturmPoint::NegInf, SturmPoint::PosInf), 0);
    }

    #[test]
    fn sign_at_rational_points() {
        let p = zp(&[-2, 0, 1]); // x^2 - 2
        let x = BigRational::from_str("3/2").unwrap();
        assert_eq!(sign_at_rational(&p, &x), 1);
        let x = BigRational::from_str("7/5").unwrap();
        assert_eq!(sign_at_rational(&p, &x), -1);
    }

    #[test]
    fn cauchy_bound_dominates_roots() {
        let p = zp(&[-6, 11, -6, 1]);
        assert!(cauchy_bound(&p) > BigRational::from_integer(3.into()));
    }

    #[test]
    fn yun_decomposition_recovers_multiplicities() {
        // x (x+1)^2 (x-2)^3
        let x = Poly::from_integers(&[0, 1]);
        let a = Poly::from_integers(&[1, 1]);
        let b = Poly::from_integers(&[-2, 1]);
        let p = &(&(&x * &a) * &a) * &(&(&b * &b) * &b);
        let dec = squarefree_decomposition(&p);
        let mut mults: Vec<usize> = dec.iter().map(|(_, m)| *m).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 2, 3]);
        for (f, m) in &dec {
            match m {
                1 => assert!(f.eval(&BigRational::from_integer(0.into())).is_zero()),
                2 => assert!(f.eval(&BigRational::from_integer((-1).into())).is_zero()),
                3 => assert!(f.eval(&BigRational::from_integer(2.into())).is_zero()),
                _ => panic!("unexpected multiplicity"),
            }
        }
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        let a = Poly::from_integers(&[1, 1]);
        let p = &(&a * &a) * &Poly::from_integers(&[-3, 1]);
        let sf = squarefree_part(&p);
        assert_eq!(sf.degree(), 2);
        assert!(sf.eval(&BigRational::from_integer((-1).into())).is_zero());
        assert!(sf.eval(&BigRational::from_integer(3.into())).is_zero());
    }
}
