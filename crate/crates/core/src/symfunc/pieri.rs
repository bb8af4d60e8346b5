use std::collections::HashMap;

use super::{Basis, SymFunc};
use crate::linalg::Matrix;
use crate::partitions::{phi_strip, strips_above, Partition};
use crate::ring::Ring;
use crate::{Error, Result};

fn require_basis<R: Ring>(f: &SymFunc<R>, basis: Basis, max_width: usize) -> Result<()> {
    if f.basis() != basis {
        return Err(Error::Domain(format!(
            "expected a {} expansion, got {}",
            basis.label(),
            f.basis().label()
        )));
    }
    if f.max_width() > max_width {
        return Err(Error::Domain(format!(
            "diagram wider than the column bound {max_width}"
        )));
    }
    Ok(())
}

/// `f · h_k` projected to `Λ_M`: each `s_μ` goes to the sum of `s_λ` over
/// horizontal `k`-strips `λ/μ` with `λ_1 <= M`.
pub fn mul_h<R: Ring>(f: &SymFunc<R>, k: usize, max_width: usize) -> Result<SymFunc<R>> {
    require_basis(f, Basis::Schur, max_width)?;
    let mut out = SymFunc::schur_zero();
    for (mu, c) in f.terms() {
        for lambda in strips_above(mu, k, max_width) {
            out.add_term(lambda, c.clone());
        }
    }
    Ok(out)
}

/// Multiplication by the truncated generating function
/// `H_M(z) = Σ_{k=0}^M z^k h_k`; entry `k` is the coefficient of `z^k`.
pub fn mul_big_h<R: Ring>(f: &SymFunc<R>, max_width: usize) -> Result<Vec<SymFunc<R>>> {
    (0..=max_width).map(|k| mul_h(f, k, max_width)).collect()
}

/// Hall–Littlewood Pieri rule `P_μ q_r = Σ φ_{λ/μ}(t) P_λ`, truncated to
/// `λ_1 <= M`.
pub fn mul_q<R: Ring>(f: &SymFunc<R>, r: usize, max_width: usize) -> Result<SymFunc<R>> {
    require_basis(f, Basis::HallLittlewoodP, max_width)?;
    let t = f.t().clone();
    let mut out = SymFunc::zero(Basis::HallLittlewoodP, t.clone());
    for (mu, c) in f.terms() {
        for lambda in strips_above(mu, r, max_width) {
            let phi = phi_strip(&lambda, mu, &t)?;
            out.add_term(lambda, c.mul_ref(&phi));
        }
    }
    Ok(out)
}

/// Multiplication by `Q_M(z) = Σ_{k=0}^M z^k q_k`.
pub fn mul_big_q<R: Ring>(f: &SymFunc<R>, max_width: usize) -> Result<Vec<SymFunc<R>>> {
    (0..=max_width).map(|k| mul_q(f, k, max_width)).collect()
}

/// Matrix of a linear map given by its action on basis elements; column `j`
/// holds the expansion of `image(src[j])` in the `dst` basis.
pub fn operator_matrix<R: Ring>(
    src: &[Partition],
    dst: &[Partition],
    image: impl Fn(&Partition) -> Result<SymFunc<R>>,
) -> Result<Matrix<R>> {
    let index: HashMap<&Partition, usize> = dst.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (j, mu) in src.iter().enumerate() {
        for (lambda, c) in image(mu)?.terms() {
            let &i = index.get(lambda).ok_or_else(|| {
                Error::Domain(format!("image term {lambda} lies outside the target basis"))
            })?;
            m.add_at(i, j, c.clone());
        }
    }
    Ok(m)
}

/// Matrix of multiplication by `h_k` from the span of `src` to that of `dst`
/// (Schur bases, width bound `max_width`).
pub fn pieri_h_matrix<R: Ring>(
    src: &[Partition],
    dst: &[Partition],
    k: usize,
    max_width: usize,
) -> Result<Matrix<R>> {
    operator_matrix(src, dst, |mu| {
        mul_h(&SymFunc::<R>::schur(mu.clone()), k, max_width)
    })
}

/// Matrix of multiplication by `q_r` in the `P` basis.
pub fn pieri_q_matrix<R: Ring>(
    src: &[Partition],
    dst: &[Partition],
    r: usize,
    t: &R,
    max_width: usize,
) -> Result<Matrix<R>> {
    operator_matrix(src, dst, |mu| {
        mul_q(&SymFunc::hl_p(mu.clone(), t.clone()), r, max_width)
    })
}
