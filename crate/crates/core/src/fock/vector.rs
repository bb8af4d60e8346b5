use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use super::lattice::{monodromy, LVariant, Model};
use super::operator::GradedOp;
use crate::partitions::{OccupationVector, Partition};
use crate::ring::{q_factorial, Rational, Ring};
use crate::symfunc::{Basis, SymFunc};
use crate::{Error, Result};

/// Finite combination of occupation-number states on sites `0..=M`.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector<R> {
    max_site: usize,
    t: R,
    /// Keyed by particle number and diagram, which fixes the output order.
    terms: BTreeMap<(usize, Partition), R>,
}

impl<R: Ring> FockVector<R> {
    pub fn zero(max_site: usize, t: R) -> Self {
        FockVector {
            max_site,
            t,
            terms: BTreeMap::new(),
        }
    }

    /// The total vacuum `|0⟩`.
    pub fn vacuum(max_site: usize, t: R) -> Self {
        let mut v = Self::zero(max_site, t);
        v.add_term(&OccupationVector::new(vec![0; max_site + 1]), R::one());
        v
    }

    pub fn max_site(&self) -> usize {
        self.max_site
    }

    pub fn t(&self) -> &R {
        &self.t
    }

    pub fn add_term(&mut self, occ: &OccupationVector, c: R) {
        assert_eq!(
            occ.max_site(),
            self.max_site,
            "state on a different lattice"
        );
        if c.is_zero() {
            return;
        }
        let key = (occ.particles(), occ.to_partition());
        let merged = match self.terms.remove(&key) {
            Some(old) => old.add_ref(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    fn occupation(&self, n: usize, lambda: &Partition) -> OccupationVector {
        OccupationVector::from_partition(lambda, self.max_site, n)
            .expect("stored states fit the lattice")
    }

    pub fn terms(&self) -> impl Iterator<Item = (OccupationVector, &R)> + '_ {
        self.terms
            .iter()
            .map(|((n, l), c)| (self.occupation(*n, l), c))
    }

    pub fn coeff(&self, occ: &OccupationVector) -> R {
        self.terms
            .get(&(occ.particles(), occ.to_partition()))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common particle number, if the vector is nonzero and homogeneous.
    pub fn particles(&self) -> Option<usize> {
        let mut ns = self.terms.keys().map(|(n, _)| *n);
        let first = ns.next()?;
        ns.all(|n| n == first).then_some(first)
    }

    /// `op · self`.
    pub fn apply(&self, op: &GradedOp<R>) -> Result<Self> {
        let space = op.space();
        if space.max_site() != self.max_site {
            return Err(Error::Domain(
                "operator and vector live on different lattices".into(),
            ));
        }
        let mut out = Self::zero(self.max_site, self.t.clone());
        let mut by_sector: BTreeMap<usize, Vec<R>> = BTreeMap::new();
        for ((n, lambda), c) in &self.terms {
            let block = op
                .block(*n)
                .ok_or_else(|| Error::Resource(format!("operator undefined on sector {n}")))?;
            let dense = by_sector
                .entry(*n)
                .or_insert_with(|| vec![R::zero(); block.cols()]);
            dense[space.index_of(*n, lambda).expect("state in space")] = c.clone();
        }
        for (n, dense) in by_sector {
            let target = n as i64 + op.shift() as i64;
            if target < 0 {
                continue;
            }
            let image = op.block(n).expect("checked above").apply(&dense);
            for (i, c) in image.into_iter().enumerate() {
                out.add_term(&space.occupation(target as usize, i), c);
            }
        }
        Ok(out)
    }

    /// Transports the coefficients to `s_λ` (at `t = 0`) or `P_λ`.
    pub fn to_symfunc(&self) -> Result<SymFunc<R>> {
        if !self.is_empty() && self.particles().is_none() {
            return Err(Error::Domain(
                "vector mixes different particle numbers".into(),
            ));
        }
        let basis = if self.t.is_zero() {
            Basis::Schur
        } else {
            Basis::HallLittlewoodP
        };
        let mut f = SymFunc::zero(basis, self.t.clone());
        for ((_, lambda), c) in &self.terms {
            f.add_term(lambda.clone(), c.clone());
        }
        Ok(f)
    }

    /// Inverse of [`to_symfunc`](Self::to_symfunc) on the `N`-particle sector.
    pub fn from_symfunc(f: &SymFunc<R>, max_site: usize, particles: usize) -> Result<Self> {
        let mut v = Self::zero(max_site, f.t().clone());
        for (lambda, c) in f.terms() {
            v.add_term(
                &OccupationVector::from_partition(lambda, max_site, particles)?,
                c.clone(),
            );
        }
        Ok(v)
    }
}

impl<R: Ring> Serialize for FockVector<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term(OccupationVector, String);
        impl Serialize for Term {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("occ", &self.0)?;
                m.serialize_entry("coeff", &self.1)?;
                m.end()
            }
        }
        struct Terms<'a, R>(&'a FockVector<R>);
        impl<R: Ring> Serialize for Terms<'_, R> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (occ, c) in self.0.terms() {
                    seq.serialize_element(&Term(occ, c.to_string()))?;
                }
                seq.end()
            }
        }
        let mut m = serializer.serialize_map(Some(3))?;
        m.serialize_entry("M", &self.max_site)?;
        m.serialize_entry("t", &self.t.parameter_label())?;
        m.serialize_entry("terms", &Terms(self))?;
        m.end()
    }
}

/// `B(u_1) ⋯ B(u_N)|0⟩`, evaluated at the given points.
pub fn wavefunction<R: Ring>(
    model: Model,
    max_site: usize,
    t: &R,
    u_points: &[Rational],
) -> Result<FockVector<R>> {
    if u_points.iter().any(Rational::is_zero) {
        return Err(Error::Domain("spectral parameters must be nonzero".into()));
    }
    let t = match model {
        Model::Phase => R::zero(),
        Model::QBoson => t.clone(),
    };
    let (space, m) = monodromy(model, max_site, &t, u_points.len(), LVariant::Standard)?;
    let mut psi = FockVector::vacuum(max_site, t);
    for u in u_points.iter().rev() {
        let b = m
            .b()
            .eval_coefficient(u)?
            .unwrap_or_else(|| GradedOp::zero(&space, 1));
        psi = psi.apply(&b)?;
    }
    Ok(psi)
}

/// Squared norm of a basis state: `[n_0]! / ∏_{j≥1} [n_j]!` for the
/// q-boson model, `1` for the phase model.
pub fn fock_norm(model: Model, t: &Rational, occ: &OccupationVector) -> Result<Rational> {
    if model == Model::Phase {
        return Ok(Rational::one());
    }
    let counts = occ.counts();
    let denom: Rational = counts[1..]
        .iter()
        .map(|&n| q_factorial(n as u32, t))
        .product();
    q_factorial(counts[0] as u32, t).checked_div(&denom)
}

/// The variant of [`fock_norm`] with `[n_0]` in place of `[n_0]!`.
pub fn fock_norm_linear_vacuum(t: &Rational, occ: &OccupationVector) -> Result<Rational> {
    let counts = occ.counts();
    let denom: Rational = counts[1..]
        .iter()
        .map(|&n| q_factorial(n as u32, t))
        .product();
    crate::ring::q_integer(counts[0] as u32, t).checked_div(&denom)
}
