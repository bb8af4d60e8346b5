//! Symmetric functions in the Schur and Hall–Littlewood `P` bases, with the
//! column truncation to `Λ_M` (diagrams of width at most `M`).

mod eval;
mod gram;
mod pieri;
mod powersum;

pub use eval::{
    complete_homogeneous, hl_eval, hl_eval_branching, hl_eval_symmetrized, hl_q_eval,
    monomial_eval, q_eval, schur_eval, SYMMETRIZE_LIMIT,
};
pub use gram::{adjoint_op, gram_matrix};
pub use pieri::{
    mul_big_h, mul_big_q, mul_h, mul_q, operator_matrix, pieri_h_matrix, pieri_q_matrix,
};
pub use powersum::{newton_power_sums_in_h, powersum_expand_h, GeneratorPoly};

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use crate::partitions::{partitions_in_box, partitions_of, Partition};
use crate::ring::{Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    Schur,
    HallLittlewoodP,
}

impl Basis {
    pub fn label(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::HallLittlewoodP => "hl_P",
        }
    }
}

/// Finite linear combination of basis functions. For `HallLittlewoodP` the
/// parameter `t` is carried along; for `Schur` it is `0`.
#[derive(Clone, PartialEq, Debug)]
pub struct SymFunc<R> {
    basis: Basis,
    t: R,
    terms: BTreeMap<Partition, R>,
}

impl<R: Ring> SymFunc<R> {
    pub fn zero(basis: Basis, t: R) -> Self {
        let t = if basis == Basis::Schur { R::zero() } else { t };
        SymFunc {
            basis,
            t,
            terms: BTreeMap::new(),
        }
    }

    pub fn schur_zero() -> Self {
        Self::zero(Basis::Schur, R::zero())
    }

    /// The single basis element `s_λ` or `P_λ`.
    pub fn basis_element(basis: Basis, t: R, lambda: Partition) -> Self {
        let mut f = Self::zero(basis, t);
        f.add_term(lambda, R::one());
        f
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, R::zero(), lambda)
    }

    pub fn hl_p(lambda: Partition, t: R) -> Self {
        Self::basis_element(Basis::HallLittlewoodP, t, lambda)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn t(&self) -> &R {
        &self.t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> R {
        self.terms.get(lambda).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: R) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&lambda) {
            Some(old) => old.add_ref(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(lambda, merged);
        }
    }

    fn same_space(&self, rhs: &Self) -> Result<()> {
        if self.basis != rhs.basis || self.t != rhs.t {
            return Err(Error::Domain(format!(
                "cannot combine {}(t={}) with {}(t={})",
                self.basis.label(),
                self.t,
                rhs.basis.label(),
                rhs.t
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_space(rhs)?;
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, by: &R) -> Self {
        let mut out = Self::zero(self.basis, self.t.clone());
        for (l, c) in &self.terms {
            out.add_term(l.clone(), by.mul_ref(c));
        }
        out
    }

    /// Largest width `λ_1` among the terms.
    pub fn max_width(&self) -> usize {
        self.terms.keys().map(Partition::width).max().unwrap_or(0)
    }

    /// At `t = 0` the two bases coincide; relabels `hl_P` as `schur`.
    pub fn into_schur_if_degenerate(self) -> Self {
        if self.basis == Basis::HallLittlewoodP && self.t.is_zero() {
            SymFunc {
                basis: Basis::Schur,
                ..self
            }
        } else {
            self
        }
    }
}

impl SymFunc<Rational> {
    /// Evaluates at finitely many variables through the basis evaluators.
    pub fn eval_at(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(l, c)| {
                let v = match self.basis {
                    Basis::Schur => schur_eval(l, x),
                    Basis::HallLittlewoodP => hl_eval(l, x, &self.t),
                };
                c * v
            })
            .sum()
    }
}

impl<R: Ring> Serialize for SymFunc<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a, R>(&'a BTreeMap<Partition, R>);
        struct Term<'a, R>(&'a Partition, &'a R);

        impl<R: Ring> Serialize for Term<'_, R> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("partition", self.0)?;
                m.serialize_entry("coeff", &self.1.to_string())?;
                m.end()
            }
        }
        impl<R: Ring> Serialize for Terms<'_, R> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (l, c) in self.0 {
                    seq.serialize_element(&Term(l, c))?;
                }
                seq.end()
            }
        }

        let mut m = serializer.serialize_map(Some(3))?;
        m.serialize_entry("basis", self.basis.label())?;
        m.serialize_entry("t", &self.t.parameter_label())?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}

/// Degree-`d` piece of `Λ_M`: partitions of `d` with at most `M` columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSector {
    column_bound: usize,
    degree: usize,
    basis: Vec<Partition>,
}

impl GradedSector {
    pub fn new(column_bound: usize, degree: usize) -> Self {
        GradedSector {
            column_bound,
            degree,
            basis: partitions_of(degree, column_bound, None),
        }
    }

    pub fn column_bound(&self) -> usize {
        self.column_bound
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.basis.binary_search(lambda).ok()
    }
}

/// Basis of `Λ_M^N`, the image of the `N`-particle Fock sector: diagrams in
/// the `N × M` box, in the crate-wide partition order.
pub fn box_sector(max_width: usize, particles: usize) -> Vec<Partition> {
    partitions_in_box(particles, max_width)
}
