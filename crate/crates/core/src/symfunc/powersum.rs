//! Polynomials in commuting graded generators `g_1, g_2, …`, used to compare
//! power-sum and complete-homogeneous expansions.

use std::collections::BTreeMap;
use std::fmt;

use crate::partitions::Partition;
use crate::ring::Rational;

/// A polynomial in generators `g_k` of weight `k`. The monomial
/// `g_{λ_1} g_{λ_2} ⋯` is keyed by the partition `λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GeneratorPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl GeneratorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    pub fn generator(k: usize) -> Self {
        Self::monomial(Partition::of(&[k]), Rational::one())
    }

    pub fn monomial(lambda: Partition, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(lambda, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&lambda) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(lambda, merged);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, by: &Rational) -> Self {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), by * c);
        }
        out
    }

    /// Product, dropping monomials of weight above `max_weight` when given.
    pub fn mul_truncated(&self, rhs: &Self, max_weight: Option<usize>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                if max_weight.is_some_and(|w| a.size() + b.size() > w) {
                    continue;
                }
                let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                out.add_term(Partition::of(&parts), ca * cb);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_truncated(rhs, None)
    }

    /// Weight-`d` part.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            if l.size() == d {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }

    /// Replaces each `g_k` by `images[k]` (index 0 is unused).
    pub fn substitute(&self, images: &[GeneratorPoly]) -> Self {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            let mut term = Self::monomial(Partition::empty(), c.clone());
            for &k in l.parts() {
                term = term.mul(&images[k]);
            }
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for GeneratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*g{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficients of `z^0, …, z^D` in `exp(Σ_{k≥1} p_k z^k / k)`, as
/// polynomials in the power sums `p_k`, computed as `Σ_n S^n / n!`.
pub fn powersum_expand_h(max_degree: usize) -> Vec<GeneratorPoly> {
    let mut s = GeneratorPoly::zero();
    for k in 1..=max_degree {
        s.add_term(Partition::of(&[k]), Rational::new(1, k as i64));
    }
    let mut total = GeneratorPoly::one();
    let mut power = GeneratorPoly::one();
    // Every monomial of S^n has weight >= n, so n <= D suffices.
    for n in 1..=max_degree {
        power = power
            .mul_truncated(&s, Some(max_degree))
            .scale(&Rational::new(1, n as i64));
        total = total.add(&power);
    }
    (0..=max_degree)
        .map(|d| total.homogeneous_part(d))
        .collect()
}

/// `p_0, …, p_K` in terms of the `h_k` via the Newton recursion
/// `p_k = k h_k - Σ_{i=1}^{k-1} p_i h_{k-i}`. Entry 0 is zero.
pub fn newton_power_sums_in_h(max_degree: usize) -> Vec<GeneratorPoly> {
    let mut p = vec![GeneratorPoly::zero()];
    for k in 1..=max_degree {
        let mut pk = GeneratorPoly::generator(k).scale(&Rational::from_int(k as i64));
        for (i, pi) in p.iter().enumerate().take(k).skip(1) {
            pk = pk.sub(&pi.mul(&GeneratorPoly::generator(k - i)));
        }
        p.push(pk);
    }
    p
}
