use std::fmt;

use super::{Coefficient, Laurent, Poly, Rational};
use crate::Error;

/// Dynamically typed scalar, for callers (JSON, CLI) that do not know the
/// ring statically. Arithmetic between different rings is a type error;
/// there are no implicit coercions.
#[derive(Clone, Debug, PartialEq)]
pub enum RingElem {
    Rational(Rational),
    Poly(Poly),
    Laurent(Laurent<Rational>),
    LaurentPoly(Laurent<Poly>),
}

impl RingElem {
    fn kind(&self) -> &'static str {
        match self {
            RingElem::Rational(_) => "rational",
            RingElem::Poly(_) => "poly",
            RingElem::Laurent(_) => "laurent",
            RingElem::LaurentPoly(_) => "laurent over poly",
        }
    }

    fn mismatch(&self, rhs: &RingElem) -> Error {
        Error::TypeMismatch {
            left: self.kind(),
            right: rhs.kind(),
        }
    }

    pub fn try_add(&self, rhs: &RingElem) -> Result<RingElem, Error> {
        use RingElem::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Poly(a), Poly(b)) => Poly(a.add_ref(b)),
            (Laurent(a), Laurent(b)) => Laurent(a.add_ref(b)),
            (LaurentPoly(a), LaurentPoly(b)) => LaurentPoly(a.add_ref(b)),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn try_mul(&self, rhs: &RingElem) -> Result<RingElem, Error> {
        use RingElem::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Poly(a), Poly(b)) => Poly(a.mul_ref(b)),
            (Laurent(a), Laurent(b)) => Laurent(a.mul_ref(b)),
            (LaurentPoly(a), LaurentPoly(b)) => LaurentPoly(a.mul_ref(b)),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    /// Substitutes `u <- u0` in a Laurent element.
    pub fn laurent_eval(&self, u0: &Rational) -> Result<RingElem, Error> {
        match self {
            RingElem::Laurent(p) => Ok(RingElem::Rational(p.eval(u0)?)),
            RingElem::LaurentPoly(p) => Ok(RingElem::Poly(p.eval(u0)?)),
            other => Err(Error::TypeMismatch {
                left: other.kind(),
                right: "laurent",
            }),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Rational(x) => x.fmt(f),
            RingElem::Poly(x) => x.fmt(f),
            RingElem::Laurent(x) => x.fmt(f),
            RingElem::LaurentPoly(x) => x.fmt(f),
        }
    }
}

impl From<Rational> for RingElem {
    fn from(x: Rational) -> Self {
        RingElem::Rational(x)
    }
}

impl From<Poly> for RingElem {
    fn from(x: Poly) -> Self {
        RingElem::Poly(x)
    }
}

impl From<Laurent<Rational>> for RingElem {
    fn from(x: Laurent<Rational>) -> Self {
        RingElem::Laurent(x)
    }
}

impl From<Laurent<Poly>> for RingElem {
    fn from(x: Laurent<Poly>) -> Self {
        RingElem::LaurentPoly(x)
    }
}
