//! Seeded random instance generators backing the verification suites.
//! Everything flows from one 64-bit seed so reruns are byte-identical.

use num_bigint::BigInt;
use num_rational::BigRational;
use polyclass::{GammaSeq, Poly};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn bool(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    fn ratio(&mut self, num_lo: i64, num_hi: i64, den_hi: i64) -> BigRational {
        let n = self.rng.random_range(num_lo..=num_hi);
        let d = self.rng.random_range(1..=den_hi);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn positive_rational(&mut self) -> BigRational {
        self.ratio(1, 12, 6)
    }

    /// Strictly positive sequence; one third are geometric so that the
    /// multiplier tests see passing instances alongside the generic failures.
    pub fn gamma(&mut self, len: usize) -> GammaSeq {
        if self.rng.random_range(0..3u8) == 0 {
            return self.geometric_gamma(len);
        }
        let entries = (0..len).map(|_| self.ratio(1, 40, 6)).collect();
        GammaSeq::new(entries).expect("nonempty by construction")
    }

    /// Geometric sequences c*r^j: the binomial image is c(1+rx)^k, so these
    /// pass every binomial-image multiplier test.
    pub fn geometric_gamma(&mut self, len: usize) -> GammaSeq {
        let c = self.positive_rational();
        let r = self.ratio(1, 6, 3);
        let mut entries = Vec::with_capacity(len);
        let mut cur = c;
        for _ in 0..len {
            entries.push(cur.clone());
            cur *= &r;
        }
        GammaSeq::new(entries).expect("nonempty by construction")
    }

    /// Log-concave positive sequence, built from nonincreasing ratios so the
    /// defining inequalities hold exactly by construction.
    pub fn log_concave_gamma(&mut self, len: usize) -> GammaSeq {
        let mut ratios: Vec<BigRational> =
            (1..len).map(|_| self.ratio(1, 9, 4)).collect();
        ratios.sort_by(|x, y| y.cmp(x));
        let mut entries = vec![self.positive_rational()];
        for r in &ratios {
            let next = entries.last().expect("seeded above") * r;
            entries.push(next);
        }
        GammaSeq::new(entries).expect("nonempty by construction")
    }

    /// Positive sequence with a certified interior log-concavity violation:
    /// one interior entry of a log-concave draw is halved until its squared
    /// value drops strictly below the neighbor product.
    pub fn non_log_concave_gamma(&mut self, len: usize) -> GammaSeq {
        assert!(len >= 3, "a violation needs an interior index");
        let base = self.log_concave_gamma(len);
        let mut entries = base.entries().to_vec();
        let i = self.usize_in(1, len - 2);
        let bound = &entries[i - 1] * &entries[i + 1];
        while &entries[i] * &entries[i] >= bound {
            entries[i] = &entries[i] / BigInt::from(2);
        }
        GammaSeq::new(entries).expect("nonempty by construction")
    }

    /// Monic-times-sign polynomial with the given degree range and all roots
    /// rational, hence real-rooted by construction.
    pub fn real_rooted_poly(&mut self, max_deg: usize) -> Poly {
        let deg = self.usize_in(1, max_deg);
        let roots: Vec<BigRational> = (0..deg).map(|_| self.ratio(-9, 9, 4)).collect();
        let p = Poly::from_roots(&roots);
        if self.bool() {
            p.scale(&BigRational::from_integer(BigInt::from(-1)))
        } else {
            p
        }
    }

    /// Real-rooted with all roots strictly negative or all strictly positive.
    pub fn same_sign_poly(&mut self, max_deg: usize) -> Poly {
        let deg = self.usize_in(1, max_deg);
        let negate = self.bool();
        let roots: Vec<BigRational> = (0..deg)
            .map(|_| {
                let r = self.ratio(1, 9, 4);
                if negate {
                    -r
                } else {
                    r
                }
            })
            .collect();
        Poly::from_roots(&roots)
    }

    pub fn positive_vector(&mut self, len: usize) -> Vec<BigRational> {
        (0..len).map(|_| self.positive_rational()).collect()
    }
}
