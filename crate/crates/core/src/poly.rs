//! Dense univariate polynomials over exact rationals, diagonal coefficient
//! sequences, and sign patterns.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the single coefficient `0`. All arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A univariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![BigRational::one()] }
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    /// The monic product `(x - r_0) ... (x - r_{n-1})`.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            let factor = Poly::new(vec![-r.clone(), BigRational::one()]);
            p = &p * &factor;
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree, with the convention that the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^j`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("coeffs nonempty")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * BigRational::from_integer(BigInt::from(j)))
            .collect();
        Poly::new(coeffs)
    }

    /// `p(q * x)`: every root is divided by `q`.
    pub fn dilate(&self, q: &BigRational) -> Poly {
        let mut pow = BigRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &pow;
                pow = &pow * q;
                out
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides out the largest power of `x`; returns `(m, p / x^m)`.
    pub fn strip_zero_roots(&self) -> (usize, Poly) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let m = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        (m, Poly::new(self.coeffs[m..].to_vec()))
    }

    /// True when every coefficient is `>= 0`.
    pub fn coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Applies a sign pattern coefficientwise. The pattern length must be
    /// exactly `degree + 1`.
    pub fn flip_signs(&self, pattern: &SignPattern) -> Result<Poly> {
        if pattern.len() != self.coeffs.len() {
            return Err(Error::LengthMismatch { expected: self.coeffs.len(), got: pattern.len() });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(pattern.signs())
            .map(|(c, &s)| if s < 0 { -c.clone() } else { c.clone() })
            .collect();
        // The leading sign never zeroes a coefficient, so the degree is kept.
        Ok(Poly::new(coeffs))
    }

    /// Keeps coefficients `a_m ..= a_n` at their original indices and zeroes
    /// the rest. Requires `0 <= m < n <= degree`.
    pub fn truncate(&self, m: usize, n: usize) -> Result<Poly> {
        if m >= n || n > self.degree() {
            return Err(Error::BadRange { lo: m, hi: n, degree: self.degree() });
        }
        let coeffs = (0..=n)
            .map(|j| if j >= m { self.coeffs[j].clone() } else { BigRational::zero() })
            .collect();
        Ok(Poly::new(coeffs))
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        Poly::new(coeffs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect();
        Poly::new(coeffs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    /// Coefficient text format: ascending, comma-separated, `n` or `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Poly> {
        Ok(Poly::new(parse_rational_list(s)?))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A diagonal coefficient sequence `gamma`, acting on polynomials by
/// `x^j -> gamma_j x^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSeq {
    entries: Vec<BigRational>,
}

impl GammaSeq {
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        Ok(GammaSeq { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        GammaSeq {
            entries: entries.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> &BigRational {
        &self.entries[j]
    }

    /// Applies the diagonal operator to `p`. The sequence must cover every
    /// coefficient of `p`.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        if self.entries.len() < p.degree() + 1 {
            return Err(Error::LengthMismatch { expected: p.degree() + 1, got: self.entries.len() });
        }
        let coeffs =
            p.coeffs().iter().zip(&self.entries).map(|(a, g)| a * g).collect();
        Ok(Poly::new(coeffs))
    }

    /// Entrywise product; composing the two diagonal operators.
    pub fn hadamard(&self, other: &GammaSeq) -> Result<GammaSeq> {
        if self.entries.len() != other.entries.len() {
            return Err(Error::LengthMismatch {
                expected: self.entries.len(),
                got: other.entries.len(),
            });
        }
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).collect();
        Ok(GammaSeq { entries })
    }
}

impl fmt::Display for GammaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.entries.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for GammaSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<GammaSeq> {
        GammaSeq::new(parse_rational_list(s)?)
    }
}

impl Serialize for GammaSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A vector of signs in `{+1, -1}`, one per coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    signs: Vec<i8>,
}

impl SignPattern {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse("sign pattern entries must be +1 or -1".into()));
        }
        Ok(SignPattern { signs })
    }

    pub fn all_plus(len: usize) -> Self {
        SignPattern { signs: vec![1; len] }
    }

    /// Pattern of length `len` whose signs at positions `>= 2` are read from
    /// the bits of `mask` (bit 0 controls position 2). Positions 0 and 1 stay
    /// `+`; this enumerates one representative per orbit of the symmetries
    /// `p -> -p` and `p(x) -> p(-x)`.
    pub fn from_tail_mask(len: usize, mask: u64) -> Self {
        let signs = (0..len)
            .map(|j| {
                if j < 2 || mask & (1 << (j - 2)) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        SignPattern { signs }
    }

    /// Pattern of length `len` flipping only interior positions `1..len-1`,
    /// read from the bits of `mask` (bit 0 controls position 1).
    pub fn interior_from_mask(len: usize, mask: u64) -> Self {
        let signs = (0..len)
            .map(|j| {
                if j == 0 || j + 1 == len || mask & (1 << (j - 1)) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        SignPattern { signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Composition of two patterns of equal length (entrywise product).
    pub fn compose(&self, other: &SignPattern) -> Result<SignPattern> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        let signs = self.signs.iter().zip(&other.signs).map(|(a, b)| a * b).collect();
        Ok(SignPattern { signs })
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<SignPattern> {
        let signs: Vec<i8> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Parse(format!("bad sign character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        SignPattern::new(signs)
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(1 + x)^k` with exact integer coefficients.
pub fn binomial_poly(k: usize) -> Poly {
    let coeffs =
        (0..=k).map(|j| BigRational::from_integer(binomial(k, j))).collect();
    Poly::new(coeffs)
}

fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            BigRational::from_str(tok)
                .map_err(|e| Error::Parse(format!("bad rational {tok:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn new_trims_trailing_zeros() {
        let p = Poly::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeffs().len(), 2);
        assert!(Poly::from_integers(&[0, 0]).is_zero());
    }

    #[test]
    fn diagonal_action_on_binomial_cube() {
        // gamma_j = 2^j applied to (1+x)^3 rescales the root to -1/2.
        let gamma = GammaSeq::from_integers(&[1, 2, 4, 8]);
        let image = gamma.apply(&binomial_poly(3)).unwrap();
        assert_eq!(image, Poly::from_integers(&[1, 6, 12, 8]));
    }

    #[test]
    fn diagonal_action_requires_enough_entries() {
        let gamma = GammaSeq::from_integers(&[1, 2]);
        let err = gamma.apply(&binomial_poly(3)).unwrap_err();
        assert_eq!(err, Error::LengthMismatch { expected: 4, got: 2 });
    }

    #[test]
    fn diagonal_action_is_linear() {
        let gamma = GammaSeq::from_integers(&[3, -1, 2, 5]);
        let p = Poly::from_integers(&[1, 4, 4, 1]);
        let r = Poly::from_integers(&[2, 0, -3]);
        let lhs = gamma.apply(&(&p + &r)).unwrap();
        let rhs = &gamma.apply(&p).unwrap() + &gamma.apply(&r).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hadamard_composes_diagonal_operators() {
        let gamma = GammaSeq::from_integers(&[1, 2, 3, 4]);
        let delta = GammaSeq::from_integers(&[5, 0, -1, 2]);
        let p = Poly::from_integers(&[7, 1, -2, 3]);
        let composed = gamma.hadamard(&delta).unwrap().apply(&p).unwrap();
        let nested = gamma.apply(&delta.apply(&p).unwrap()).unwrap();
        assert_eq!(composed, nested);
    }

    #[test]
    fn flip_signs_matches_pattern_and_is_involutive() {
        let p = Poly::from_integers(&[1, 4, 4, 1]);
        let s: SignPattern = "+-++".parse().unwrap();
        let flipped = p.flip_signs(&s).unwrap();
        assert_eq!(flipped, Poly::from_integers(&[1, -4, 4, 1]));
        assert_eq!(flipped.flip_signs(&s).unwrap(), p);
    }

    #[test]
    fn flip_signs_needs_exact_length() {
        let p = Poly::from_integers(&[1, 4, 4, 1]);
        let s: SignPattern = "+-".parse().unwrap();
        assert_eq!(
            p.flip_signs(&s).unwrap_err(),
            Error::LengthMismatch { expected: 4, got: 2 }
        );
    }

    #[test]
    fn truncate_keeps_original_indices() {
        let p = Poly::from_integers(&[1, 3, 3, 1]);
        let t = p.truncate(1, 2).unwrap();
        assert_eq!(t, Poly::from_integers(&[0, 3, 3]));
        assert_eq!(
            p.truncate(2, 2).unwrap_err(),
            Error::BadRange { lo: 2, hi: 2, degree: 3 }
        );
        assert_eq!(
            p.truncate(1, 4).unwrap_err(),
            Error::BadRange { lo: 1, hi: 4, degree: 3 }
        );
    }

    #[test]
    fn truncate_of_sparse_poly_may_be_zero() {
        let p = Poly::from_integers(&[0, 0, 1, 1]); // x^2 (1 + x)
        assert!(p.truncate(0, 1).unwrap().is_zero());
    }

    #[test]
    fn dilate_rescales_roots() {
        // p(x) = (x - 2)(x - 3); p(2x) has roots 1 and 3/2.
        let p = Poly::from_roots(&[q(2, 1), q(3, 1)]);
        let d = p.dilate(&q(2, 1));
        assert!(d.eval(&q(1, 1)).is_zero());
        assert!(d.eval(&q(3, 2)).is_zero());
    }

    #[test]
    fn parse_display_round_trip() {
        let p: Poly = "1,29/10,-4,0,2".parse().unwrap();
        assert_eq!(p.to_string(), "1,29/10,-4,0,2");
        assert_eq!(p.coeff(1), q(29, 10));
        assert!("1,,2".parse::<Poly>().is_err());
        assert!("".parse::<Poly>().is_err());
    }

    #[test]
    fn strip_zero_roots_splits_off_monomial_factor() {
        let p = Poly::from_integers(&[0, 0, 9, 9, 1]);
        let (m, q) = p.strip_zero_roots();
        assert_eq!(m, 2);
        assert_eq!(q, Poly::from_integers(&[9, 9, 1]));
    }

    #[test]
    fn binomial_poly_is_symmetric() {
        let p = binomial_poly(5);
        for j in 0..=5 {
            assert_eq!(p.coeff(j), p.coeff(5 - j));
        }
    }
}
