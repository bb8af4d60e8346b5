use std::collections::BTreeMap;
use std::fmt;

use super::{Coefficient, Rational, Ring};
use crate::Error;

/// Laurent polynomial in `u` with coefficients in `C`. Zero coefficients are
/// never stored.
///
/// `C` only needs to be a [`Coefficient`], so the coefficients may be
/// operators (whose products do not commute); the product keeps the order
/// `self * rhs` on coefficients.
#[derive(Clone, PartialEq)]
pub struct Laurent<C> {
    terms: BTreeMap<i32, C>,
}

impl<C> Default for Laurent<C> {
    fn default() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * u^exp`.
    pub fn monomial(exp: i32, c: C) -> Self {
        let mut out = Self::default();
        out.add_term(exp, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut out = Self::default();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: i32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old.add_ref(&c);
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> Option<&C> {
        self.terms.get(&exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest and largest exponent present.
    pub fn exponent_range(&self) -> Option<(i32, i32)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitution `u -> u^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    /// Exact substitution `u <- u0`. Returns `None` for the zero polynomial,
    /// since a bare coefficient type need not have a zero element.
    pub fn eval_coefficient(&self, u0: &Rational) -> Result<Option<C>, Error> {
        if u0.is_zero() && self.terms.keys().any(|&e| e < 0) {
            return Err(Error::Domain(
                "u = 0 with negative exponents present".into(),
            ));
        }
        let mut acc: Option<C> = None;
        for (&e, c) in &self.terms {
            let term = c.scale(&u0.pow(e)?);
            acc = Some(match acc {
                Some(a) => a.add_ref(&term),
                None => term,
            });
        }
        Ok(acc)
    }
}

impl<R: Ring> Laurent<R> {
    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `u` itself.
    pub fn u() -> Self {
        Self::monomial(1, R::one())
    }

    pub fn eval(&self, u0: &Rational) -> Result<R, Error> {
        Ok(self.eval_coefficient(u0)?.unwrap_or_else(R::zero))
    }
}

impl<C: Coefficient> Coefficient for Laurent<C> {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    fn neg_ref(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg_ref())).collect(),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.mul_ref(c2));
            }
        }
        out
    }

    fn scale(&self, by: &Rational) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(&e, c)| (e, c.scale(by))))
    }
}

impl<R: Ring> Ring for Laurent<R> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(R::from_rational(r))
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(&e, c)| {
            let var = match e {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{e}"),
            };
            (c.to_string(), var)
        });
        super::poly::write_terms(f, terms)
    }
}

impl<C: fmt::Debug> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Poly;

    fn lr(terms: &[(i32, i64)]) -> Laurent<Rational> {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    #[test]
    fn examples() {
        let a = lr(&[(-1, 1)]);
        let b = lr(&[(1, 1)]);
        assert_eq!(a.add_ref(&b), lr(&[(-1, 1), (1, 1)]));
        assert_eq!(a.mul_ref(&b), Laurent::one());
        assert_eq!(
            lr(&[(-1, 1), (1, 1)]).eval(&Rational::from_int(2)).unwrap(),
            Rational::new(5, 2)
        );
        assert_eq!(
            Laurent::<Rational>::one()
                .eval(&Rational::from_int(7))
                .unwrap(),
            Rational::one()
        );
        assert_eq!(
            lr(&[(2, 1)]).eval(&Rational::new(3, 2)).unwrap(),
            Rational::new(9, 4)
        );
    }

    #[test]
    fn eval_at_zero() {
        assert!(lr(&[(-1, 1)]).eval(&Rational::zero()).is_err());
        assert_eq!(
            lr(&[(0, 3), (2, 1)]).eval(&Rational::zero()).unwrap(),
            Rational::from_int(3)
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = lr(&[(1, 2), (3, 1)]);
        let sum = a.add_ref(&lr(&[(1, -2)]));
        assert_eq!(sum.exponent_range(), Some((3, 3)));
    }

    #[test]
    fn rendering() {
        assert_eq!(lr(&[(-1, 1), (1, 1)]).to_string(), "u^-1 + u");
        let p: Laurent<Poly> =
            Laurent::from_terms([(0, Poly::one()), (2, Poly::from_ints(&[1, -1]))]);
        assert_eq!(p.to_string(), "1 + (1 - t)*u^2");
        assert_eq!(lr(&[(2, -3)]).to_string(), "-3*u^2");
    }
}
