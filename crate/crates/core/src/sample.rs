//! Seeded generation of small rational test points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::Rational;

/// Largest numerator magnitude and denominator drawn.
pub const SAMPLE_BOUND: i64 = 7;

/// Deterministic source of nonzero rationals `p/q` with `|p|, q <= 7`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        loop {
            let p = self.rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
            if p != 0 {
                let q = self.rng.random_range(1..=SAMPLE_BOUND);
                return Rational::new(p, q);
            }
        }
    }

    /// A rational accepted by `admissible`.
    pub fn rational_where(&mut self, admissible: impl Fn(&Rational) -> bool) -> Rational {
        loop {
            let r = self.rational();
            if admissible(&r) {
                return r;
            }
        }
    }

    /// `n` nonzero points whose squares are pairwise distinct and
    /// satisfy `admissible`.
    pub fn points(&mut self, n: usize, admissible: impl Fn(&Rational) -> bool) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        while out.len() < n {
            let r = self.rational();
            let sq = &r * &r;
            if admissible(&r) && out.iter().all(|s| s * s != sq) {
                out.push(r);
            }
        }
        out
    }

    /// Spectral pair `(u, v)` with `u² ≠ v²` and `uv ≠ 1`.
    pub fn spectral_pair(&mut self) -> (Rational, Rational) {
        loop {
            let u = self.rational();
            let v = self.rational();
            if &u * &u != &v * &v && !(&u * &v).is_one() {
                return (u, v);
            }
        }
    }
}
