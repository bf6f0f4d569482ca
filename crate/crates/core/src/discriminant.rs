//! Resultants and discriminants of dense univariate polynomials, full
//! symbolic expansion of the discriminant in the coefficients for small
//! degrees, and exact extraction of the Newton-polytope vertices of that
//! expansion.
//!
//! The discriminant of `a_0 + a_1 x + ... + a_k x^k` is normalized as
//! `(-1)^(k(k-1)/2) * Res(p, p') / a_k`, so for k = 3 it expands to
//! `-27 a_0^2 a_3^2 + 18 a_0 a_1 a_2 a_3 + a_1^2 a_2^2 - 4 a_0 a_2^3
//! - 4 a_1^3 a_3`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::archgeo::{enumerate_subdivisions, Subdivision};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A multivariate polynomial with integer coefficients, used for the
/// coefficient-space expansion of discriminants. Terms are keyed by their
/// exponent vectors; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymbolicPoly {
    pub fn zero(nvars: usize) -> Self {
        SymbolicPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, coefficient: BigInt) -> Self {
        let mut s = SymbolicPoly::zero(nvars);
        s.add_term(exponents, coefficient);
        s
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        SymbolicPoly::monomial(nvars, e, BigInt::one())
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut s = SymbolicPoly::zero(nvars);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exponents: Vec<u32>, coefficient: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        SymbolicPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = SymbolicPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Termwise division by the variable at `index`; every term must
    /// contain it.
    pub fn divide_by_variable(&self, index: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[index] == 0 {
                return Err(Error::BadParameter("term not divisible by requested variable"));
            }
            let mut e2 = e.clone();
            e2[index] -= 1;
            terms.insert(e2, c.clone());
        }
        Ok(SymbolicPoly { nvars: self.nvars, terms })
    }

    /// Exact quotient by `divisor` under lexicographic leading-term
    /// elimination. Exactness is a structural invariant of the callers
    /// (fraction-free elimination), not an input condition.
    fn exact_div(&self, divisor: &Self) -> Self {
        assert_eq!(self.nvars, divisor.nvars);
        let (dexp, dcoef) = divisor
            .terms
            .last_key_value()
            .expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = SymbolicPoly::zero(self.nvars);
        while let Some((rexp, rcoef)) = rem.terms.last_key_value() {
            let qexp: Vec<u32> = rexp
                .iter()
                .zip(dexp)
                .map(|(a, b)| a.checked_sub(*b).expect("non-exact symbolic division"))
                .collect();
            let (qcoef, r) = rcoef.div_rem(dcoef);
            assert!(r.is_zero(), "non-exact symbolic division");
            for (e, c) in &divisor.terms {
                let shifted: Vec<u32> = e.iter().zip(&qexp).map(|(a, b)| a + b).collect();
                rem.add_term(shifted, -(c * &qcoef));
            }
            quot.add_term(qexp, qcoef);
        }
        quot
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &p) in point.iter().zip(e) {
                if p > 0 {
                    term *= x.clone().pow(p);
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl Serialize for SymbolicPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [u32],
            coefficient: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&Term { exponents: e, coefficient: c.to_string() })?;
        }
        seq.end()
    }
}

/// Ring surface needed by fraction-free Gaussian elimination.
pub(crate) trait Elim: Clone {
    fn is_zero_elem(&self) -> bool;
    fn neg_elem(&self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    /// Division by a previous pivot; always exact inside the elimination.
    fn div_exact(&self, other: &Self) -> Self;
}

impl Elim for BigInt {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        assert!(r.is_zero(), "fraction-free elimination produced a non-exact division");
        q
    }
}

impl Elim for SymbolicPoly {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other)
    }
}

/// Sylvester matrix of two coefficient slices in ascending order (leading
/// entries nonzero): deg(q) staggered rows of p's coefficients in
/// descending order, then deg(p) rows of q's.
pub(crate) fn sylvester_matrix<R: Clone>(p: &[R], q: &[R], zero: &R) -> Vec<Vec<R>> {
    let dp = p.len() - 1;
    let dq = q.len() - 1;
    let n = dp + dq;
    let mut m = vec![vec![zero.clone(); n]; n];
    for r in 0..dq {
        for (j, c) in p.iter().rev().enumerate() {
            m[r][r + j] = c.clone();
        }
    }
    for r in 0..dp {
        for (j, c) in q.iter().rev().enumerate() {
            m[dq + r][r + j] = c.clone();
        }
    }
    m
}

/// Fraction-free determinant (Bareiss). Every intermediate entry is a minor
/// of the input matrix, so all divisions are exact; `None` means the matrix
/// is singular over the fraction field.
pub(crate) fn bareiss_det<R: Elim>(mut m: Vec<Vec<R>>) -> Option<R> {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n), "square nonempty matrix");
    let mut negate = false;
    let mut prev: Option<R> = None;
    for r in 0..n {
        let pivot = ((r)..n).find(|&i| !m[i][r].is_zero_elem())?;
        if pivot != r {
            m.swap(r, pivot);
            negate = !negate;
        }
        for i in (r + 1)..n {
            for j in (r + 1)..n {
                let num = m[r][r].mul_elem(&m[i][j]).sub_elem(&m[i][r].mul_elem(&m[r][j]));
                m[i][j] = match &prev {
                    Some(p) => num.div_exact(p),
                    None => num,
                };
            }
        }
        prev = Some(m[r][r].clone());
    }
    let det = m[n - 1][n - 1].clone();
    Some(if negate { det.neg_elem() } else { det })
}

/// Scales rational coefficients to integers: returns the common multiplier
/// (lcm of denominators) and the integer coefficient vector.
fn clear_denominators(p: &Poly) -> (BigInt, Vec<BigInt>) {
    let mut mult = BigInt::one();
    for c in p.coeffs() {
        mult = mult.lcm(c.denom());
    }
    let scale = BigRational::from_integer(mult.clone());
    let ints = p.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
    (mult, ints)
}

/// Resultant of two nonzero polynomials: the determinant of their Sylvester
/// matrix. Zero exactly when they share a complex root.
pub fn resultant(p: &Poly, q: &Poly) -> Result<BigRational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mp, pz) = clear_denominators(p);
    let (mq, qz) = clear_denominators(q);
    let dp = pz.len() - 1;
    let dq = qz.len() - 1;
    if dp + dq == 0 {
        return Ok(BigRational::one());
    }
    let det = bareiss_det(sylvester_matrix(&pz, &qz, &BigInt::zero()))
        .unwrap_or_else(BigInt::zero);
    // Res(c_p p, c_q q) = c_p^dq c_q^dp Res(p, q): undo the integer scaling.
    let scale = Pow::pow(&mp, dq as u32) * Pow::pow(&mq, dp as u32);
    Ok(BigRational::new(det, scale))
}

/// Discriminant of a polynomial of degree at least 2, normalized as
/// `(-1)^(k(k-1)/2) Res(p, p') / a_k`. Zero exactly when p has a repeated
/// complex root.
pub fn discriminant_value(p: &Poly) -> Result<BigRational> {
    let k = if p.is_zero() { 0 } else { p.degree() };
    if k < 2 {
        return Err(Error::DegreeTooLow { degree: k });
    }
    let res = resultant(p, &p.derivative())?;
    let signed = if (k * (k - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / p.leading())
}

/// Full monomial expansion of the degree-k discriminant in the coefficient
/// variables a_0, ..., a_k. Capped at k = 5, where the Sylvester matrix is
/// 9 x 9.
pub fn symbolic_discriminant(k: usize) -> Result<SymbolicPoly> {
    if k < 2 {
        return Err(Error::DegreeTooLow { degree: k });
    }
    if k > 5 {
        return Err(Error::Unsupported { what: "symbolic discriminant expansion beyond k = 5" });
    }
    let nvars = k + 1;
    let p: Vec<SymbolicPoly> = (0..=k).map(|j| SymbolicPoly::variable(nvars, j)).collect();
    let dp: Vec<SymbolicPoly> = (1..=k)
        .map(|j| {
            let mut e = vec![0; nvars];
            e[j] = 1;
            SymbolicPoly::monomial(nvars, e, BigInt::from(j))
        })
        .collect();
    let res = bareiss_det(sylvester_matrix(&p, &dp, &SymbolicPoly::zero(nvars)))
        .expect("generic Sylvester matrix is nonsingular");
    let disc = res
        .divide_by_variable(k)
        .expect("Res(p, p') is divisible by the leading coefficient");
    Ok(if (k * (k - 1) / 2) % 2 == 1 { disc.neg() } else { disc })
}

const SYM_CACHE_SLOT: OnceLock<SymbolicPoly> = OnceLock::new();
static SYM_CACHE: [OnceLock<SymbolicPoly>; 4] =
    [SYM_CACHE_SLOT, SYM_CACHE_SLOT, SYM_CACHE_SLOT, SYM_CACHE_SLOT];

/// Cached symbolic discriminant for repeated evaluation.
pub fn symbolic_discriminant_cached(k: usize) -> Result<&'static SymbolicPoly> {
    if !(2..=5).contains(&k) {
        return symbolic_discriminant(k).map(|_| unreachable!("validation rejects this k"));
    }
    Ok(SYM_CACHE[k - 2].get_or_init(|| {
        symbolic_discriminant(k).expect("k already validated")
    }))
}

/// Exponent vectors of a symbolic polynomial together with the subset that
/// are vertices of their convex hull.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePolytope {
    pub points: Vec<Vec<u32>>,
    pub vertices: Vec<Vec<u32>>,
}

/// Extracts the convex-hull vertices of the exponent vectors of `s`. A point
/// is a vertex exactly when it is not a convex combination of the others,
/// which is decided by an exact rational feasibility LP.
pub fn newton_polytope_vertices(s: &SymbolicPoly) -> Result<LatticePolytope> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let points: Vec<Vec<u32>> = s.terms().map(|(e, _)| e.clone()).collect();
    let mut vertices = Vec::new();
    for (i, v) in points.iter().enumerate() {
        let others: Vec<&Vec<u32>> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p)
            .collect();
        if !in_convex_hull(v, &others) {
            vertices.push(v.clone());
        }
    }
    Ok(LatticePolytope { points, vertices })
}

/// Phase-1 simplex with exact rational arithmetic and Bland's rule: decides
/// whether `target` is a convex combination of `others`.
fn in_convex_hull(target: &[u32], others: &[&Vec<u32>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let dim = target.len();
    let rows = dim + 1;
    let n = others.len();
    let width = n + rows + 1;
    let zero = BigRational::zero();
    let one = BigRational::one();

    // Equality rows: coordinate matching plus the affine row, RHS in the
    // last column, artificial basis in columns n..n+rows.
    let mut t = vec![vec![zero.clone(); width]; rows];
    for (r, row) in t.iter_mut().enumerate() {
        for (c, pt) in others.iter().enumerate() {
            row[c] = if r < dim {
                BigRational::from_integer(BigInt::from(pt[r]))
            } else {
                one.clone()
            };
        }
        row[n + r] = one.clone();
        row[width - 1] = if r < dim {
            BigRational::from_integer(BigInt::from(target[r]))
        } else {
            one.clone()
        };
    }

    // Reduced costs for minimizing the artificial sum; the last slot holds
    // the negated objective value.
    let mut cost = vec![zero.clone(); width];
    for c in 0..n {
        let mut s = zero.clone();
        for row in &t {
            s += &row[c];
        }
        cost[c] = -s;
    }
    let mut obj = zero.clone();
    for row in &t {
        obj += &row[width - 1];
    }
    cost[width - 1] = -obj;

    let mut basis: Vec<usize> = (n..n + rows).collect();
    loop {
        let Some(enter) = (0..width - 1).find(|&c| cost[c] < zero) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][enter] > zero {
                let ratio = &t[r][width - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lv)) => ratio < *lv || (ratio == *lv && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pr, _) = leave.expect("phase-1 objective is bounded below");
        let pivot = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &pivot;
        }
        let prow = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    // Feasible (and hence in the hull) exactly when all artificials reach 0.
    cost[width - 1].is_zero()
}

/// One vertex of the discriminant's Newton polytope together with the
/// subdivision it encodes and its expansion coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMonomial {
    pub subdivision: Subdivision,
    pub exponents: Vec<u32>,
    #[serde(serialize_with = "bigint_string")]
    pub coefficient: BigInt,
}

fn bigint_string<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Exponent vector of the discriminant vertex monomial encoded by a
/// subdivision of [0, k] with segment lengths l_1, ..., l_m: the ends get
/// l_1 - 1 and l_m - 1, each interior breakpoint b_t gets l_t + l_{t+1},
/// and all other indices get 0.
pub fn subdivision_vertex_exponents(sub: &Subdivision) -> Result<Vec<u32>> {
    if sub.first() != 0 {
        return Err(Error::BadParameter("subdivision must start at 0"));
    }
    let k = sub.last();
    let b = sub.breakpoints();
    let m = b.len() - 1;
    let mut e = vec![0u32; k + 1];
    e[0] = (b[1] - b[0] - 1) as u32;
    e[k] = (b[m] - b[m - 1] - 1) as u32;
    for t in 1..m {
        e[b[t]] = ((b[t] - b[t - 1]) + (b[t + 1] - b[t])) as u32;
    }
    Ok(e)
}

const VM_CACHE_SLOT: OnceLock<Vec<VertexMonomial>> = OnceLock::new();
static VM_CACHE: [OnceLock<Vec<VertexMonomial>>; 4] =
    [VM_CACHE_SLOT, VM_CACHE_SLOT, VM_CACHE_SLOT, VM_CACHE_SLOT];

/// All 2^(k-1) vertex monomials of the degree-k discriminant, in subdivision
/// bitmask order, with coefficients read off the symbolic expansion.
pub fn vertex_monomials(k: usize) -> Result<&'static [VertexMonomial]> {
    if !(2..=5).contains(&k) {
        return Err(Error::Unsupported { what: "vertex monomials are tabulated for 2 <= k <= 5" });
    }
    Ok(VM_CACHE[k - 2].get_or_init(|| {
        let sym = symbolic_discriminant_cached(k).expect("k already validated");
        enumerate_subdivisions(k)
            .expect("k already validated")
            .into_iter()
            .map(|sub| {
                let exponents =
                    subdivision_vertex_exponents(&sub).expect("subdivisions span [0, k]");
                let coefficient = sym.coefficient(&exponents);
                assert!(
                    !coefficient.is_zero(),
                    "every subdivision names a monomial of the expansion"
                );
                VertexMonomial { subdivision: sub, exponents, coefficient }
            })
            .collect()
    }))
}
