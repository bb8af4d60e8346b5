//! Exact scalar arithmetic: rationals, polynomials in the Hall–Littlewood
//! parameter `t`, and Laurent polynomials in the spectral parameter `u`.
//!
//! Two traits tie the scalar types together. [`Coefficient`] is what a
//! Laurent polynomial needs from its coefficients (addition and a possibly
//! non-commutative product); operator-valued coefficients implement only
//! this. [`Ring`] adds the constants `0` and `1` and is implemented by the
//! genuine scalar rings [`Rational`], [`Poly`] and `Laurent<R>`.

mod elem;
mod laurent;
mod poly;
mod rational;

pub use elem::RingElem;
pub use laurent::Laurent;
pub use poly::Poly;
pub use rational::Rational;

use std::fmt;

pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Product `self * rhs`, in that order.
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn scale(&self, by: &Rational) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
}

pub trait Ring: Coefficient + fmt::Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Text used for the `t` field of JSON output; `Poly` reports the bare
    /// indeterminate as `"symbolic"`.
    fn parameter_label(&self) -> String {
        self.to_string()
    }
}

impl Coefficient for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, by: &Rational) -> Self {
        self * by
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

/// `[n] = 1 + t + … + t^{n-1}`; equals `(1 - t^n)/(1 - t)` away from `t = 1`
/// and `n` at `t = 1`.
pub fn q_integer<R: Ring>(n: u32, t: &R) -> R {
    let mut acc = R::zero();
    let mut power = R::one();
    for _ in 0..n {
        acc = acc.add_ref(&power);
        power = power.mul_ref(t);
    }
    acc
}

/// `[n]! = [1][2]…[n]`.
pub fn q_factorial<R: Ring>(n: u32, t: &R) -> R {
    (1..=n).fold(R::one(), |acc, k| acc.mul_ref(&q_integer(k, t)))
}
