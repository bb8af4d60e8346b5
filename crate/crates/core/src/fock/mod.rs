//! The lattice side: Fock space of sites `0..=M`, site operators of the phase
//! and q-boson models, L-matrices, the monodromy matrix and its entries
//! `A, B, C, D`, and the R-matrix.
//!
//! The infinite Fock space is never built. Every operator is stored as one
//! exact matrix per particle-number sector below a cap.

mod lattice;
mod operator;
mod vector;

pub use lattice::{
    check_rtt, l_matrix, laurent_mismatch, monodromy, monodromy_on, r_matrix, rtt_mismatch,
    site_ops, total_number, LVariant, LaurentOpMatrix, Mat2, Model, SiteOps,
};
pub use operator::{FockSpace, GradedOp, Mismatch};
pub use vector::{fock_norm, fock_norm_linear_vacuum, wavefunction, FockVector};

use std::sync::Arc;

use crate::linalg::Matrix;
use crate::partitions::b_lambda;
use crate::ring::{Coefficient, Laurent, Rational, Ring};
use crate::{Error, Result};

/// `N̂B = B(N̂+1)`, `N̂C = C(N̂-1)`, `[N̂, A] = [N̂, D] = 0`, checked on every
/// `u`-coefficient of the monodromy entries over sectors `<= max_n`.
pub fn number_shift_check<R: Ring>(
    model: Model,
    max_site: usize,
    t: &R,
    max_n: usize,
) -> Result<Option<Mismatch>> {
    let (space, m) = monodromy(model, max_site, t, max_n + 2, LVariant::Standard)?;
    let n_hat = total_number::<R>(&space);
    let id = GradedOp::identity(&space);
    let entries = [
        ("A", m.a(), 0i64),
        ("B", m.b(), 1),
        ("C", m.c(), -1),
        ("D", m.d(), 0),
    ];
    for (name, entry, delta) in entries {
        let shifted = n_hat.add_ref(&id.scale(&Rational::from_int(delta)));
        for (e, x) in entry.terms() {
            let lhs = n_hat.compose(x);
            let rhs = x.compose(&shifted);
            if let Some(w) = lhs.first_mismatch(&rhs, max_n, &format!("N̂{name} at u^{e}"))? {
                return Ok(Some(w));
            }
        }
    }
    let vac = FockVector::vacuum(max_site, t.clone()).apply(&n_hat)?;
    if !vac.is_empty() {
        return Err(Error::Domain(
            "number operator does not annihilate the vacuum".into(),
        ));
    }
    Ok(None)
}

/// Phase-model relations between the monodromy entries at `u0`:
/// `B(u) = u A(u) φ†_0`, `C(u) = u^{-1} φ_0 A(u^{-1})ᵀ`,
/// `D(u) = φ_0 A(u^{-1})ᵀ φ†_0`, and `C(u) = B(u^{-1})ᵀ`.
pub fn lemma_abcd_check(max_site: usize, u0: &Rational, max_n: usize) -> Result<Option<Mismatch>> {
    if u0.is_zero() {
        return Err(Error::Domain("u must be nonzero".into()));
    }
    let zero = Rational::zero();
    let (space, m) =
        monodromy::<Rational>(Model::Phase, max_site, &zero, max_n + 3, LVariant::Standard)?;
    let ops = site_ops::<Rational>(Model::Phase, &space, 0, &zero)?;
    let inv = u0.recip()?;
    let at =
        |x: &Laurent<GradedOp<Rational>>, u: &Rational, shift: i32| -> Result<GradedOp<Rational>> {
            Ok(x.eval_coefficient(u)?
                .unwrap_or_else(|| GradedOp::zero(&space, shift)))
        };
    let (a, b, c, d) = (
        at(m.a(), u0, 0)?,
        at(m.b(), u0, 1)?,
        at(m.c(), u0, -1)?,
        at(m.d(), u0, 0)?,
    );
    let a_dag = at(m.a(), &inv, 0)?.transpose();
    let b_dag = at(m.b(), &inv, 1)?.transpose();

    let checks = [
        ("B = uAφ†₀", b, a.compose(&ops.create).scale(u0)),
        (
            "C = u⁻¹φ₀A†(u⁻¹)",
            c.clone(),
            ops.annihilate.compose(&a_dag).scale(&inv),
        ),
        (
            "D = φ₀A†(u⁻¹)φ†₀",
            d,
            ops.annihilate.compose(&a_dag).compose(&ops.create),
        ),
        ("C(u) = B†(u⁻¹)", c, b_dag),
    ];
    for (name, lhs, rhs) in checks {
        if let Some(w) = lhs.first_mismatch(&rhs, max_n, name)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Adjoint of `op` for the diagonal pairing with the given weights on basis
/// states: `G_N^{-1} opᵀ G_{N+s}` blockwise.
pub fn weighted_adjoint(
    op: &GradedOp<Rational>,
    weight: impl Fn(usize, usize) -> Result<Rational>,
) -> Result<GradedOp<Rational>> {
    let space = op.space().clone();
    let t = op.transpose();
    let gram = |n: usize| -> Result<Matrix<Rational>> {
        Ok(Matrix::diagonal(
            (0..space.dim(n))
                .map(|i| weight(n, i))
                .collect::<Result<_>>()?,
        ))
    };
    let gram_inv = |n: usize| -> Result<Matrix<Rational>> {
        Ok(Matrix::diagonal(
            (0..space.dim(n))
                .map(|i| weight(n, i)?.recip())
                .collect::<Result<_>>()?,
        ))
    };
    // `t` maps sector n to n - s; its adjoint block is G_{n-s}^{-1} tᵀ G_n.
    GradedOp::from_blocks(&space, t.shift(), |n| {
        let block = t.block(n)?;
        let target = n as i64 + t.shift() as i64;
        if target < 0 {
            return Some(Ok(block.clone()));
        }
        Some(gram_inv(target as usize).and_then(|g| Ok(g.mul(block).mul(&gram(n)?))))
    })
}

/// Squared norms of the occupation basis, for [`weighted_adjoint`].
pub fn fock_weights(
    model: Model,
    space: &Arc<FockSpace>,
    t: &Rational,
) -> impl Fn(usize, usize) -> Result<Rational> {
    let space = space.clone();
    let t = t.clone();
    move |n, i| fock_norm(model, &t, &space.occupation(n, i))
}

/// Hall–Littlewood weights `1/b_λ(t)` of the states' diagrams.
pub fn hall_littlewood_weights(
    space: &Arc<FockSpace>,
    t: &Rational,
) -> impl Fn(usize, usize) -> Result<Rational> {
    let space = space.clone();
    let t = t.clone();
    move |n, i| b_lambda(&space.sector(n)[i], &t).recip()
}

/// `B` and `B†` (or `φ`, `φ†`) are mutually adjoint for the squared norms of
/// [`fock_norm`] at every site.
pub fn norm_adjointness(
    model: Model,
    max_site: usize,
    t: &Rational,
    max_n: usize,
) -> Result<Option<Mismatch>> {
    let space = FockSpace::new(max_site, max_n + 1);
    for site in 0..=max_site {
        let ops = site_ops(model, &space, site, t)?;
        let adj = weighted_adjoint(&ops.create, fock_weights(model, &space, t))?;
        if let Some(w) = adj.first_mismatch(
            &ops.annihilate,
            max_n + 1,
            &format!("(B†_{site})* = B_{site}"),
        )? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Whether `C(u0)` is the adjoint of `B(1/u0)` for the pairing with the
/// given weights, on sectors `<= max_n`.
pub fn c_as_adjoint_of_b(
    model: Model,
    max_site: usize,
    t: &Rational,
    u0: &Rational,
    max_n: usize,
    weights: impl Fn(&Arc<FockSpace>) -> Box<dyn Fn(usize, usize) -> Result<Rational>>,
) -> Result<Option<Mismatch>> {
    let (space, m) = monodromy(model, max_site, t, max_n + 2, LVariant::Standard)?;
    let c = m
        .c()
        .eval_coefficient(u0)?
        .unwrap_or_else(|| GradedOp::zero(&space, -1));
    let b = m
        .b()
        .eval_coefficient(&u0.recip()?)?
        .unwrap_or_else(|| GradedOp::zero(&space, 1));
    let adj = weighted_adjoint(&b, weights(&space))?;
    c.first_mismatch(&adj, max_n, "C(u) = B(1/u)*")
}
