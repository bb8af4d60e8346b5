use std::collections::HashMap;

use serde_json::{json, Value};

use super::{rationals, CheckReport};
use crate::linalg::Matrix;
use crate::partitions::{b_lambda, partitions_of, Partition};
use crate::ring::Rational;
use crate::symfunc::{
    adjoint_op, complete_homogeneous, hl_eval, newton_power_sums_in_h, pieri_h_matrix,
    powersum_expand_h, q_eval, schur_eval, GeneratorPoly, GradedSector,
};
use crate::{Error, Result};

/// `h_k` and `h_k^⊥` on `⊕_{d <= top} Λ_M^d`, assembled from the graded
/// Pieri matrices and their Gram adjoints.
struct Window {
    max_width: usize,
    basis: Vec<Partition>,
    h: Vec<Matrix<Rational>>,
    h_perp: Vec<Matrix<Rational>>,
}

impl Window {
    fn new(max_width: usize, top: usize) -> Result<Self> {
        let sectors: Vec<GradedSector> =
            (0..=top).map(|d| GradedSector::new(max_width, d)).collect();
        let mut offsets = Vec::with_capacity(top + 1);
        let mut basis = Vec::new();
        for s in &sectors {
            offsets.push(basis.len());
            basis.extend_from_slice(s.basis());
        }
        let dim = basis.len();
        let zero = Rational::zero();
        let mut h = Vec::with_capacity(max_width + 1);
        let mut h_perp = Vec::with_capacity(max_width + 1);
        for k in 0..=max_width {
            let mut up = Matrix::zeros(dim, dim);
            let mut down = Matrix::zeros(dim, dim);
            for d in 0..=top.saturating_sub(k) {
                let (src, dst) = (&sectors[d], &sectors[d + k]);
                let block = pieri_h_matrix::<Rational>(src.basis(), dst.basis(), k, max_width)?;
                let adj = adjoint_op(&block, src, dst, &zero)?;
                for (r, c, x) in block.entries() {
                    up.add_at(offsets[d + k] + r, offsets[d] + c, x.clone());
                }
                for (r, c, x) in adj.entries() {
                    down.add_at(offsets[d] + r, offsets[d + k] + c, x.clone());
                }
            }
            h.push(up);
            h_perp.push(down);
        }
        Ok(Window {
            max_width,
            basis,
            h,
            h_perp,
        })
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn zero(&self) -> Matrix<Rational> {
        Matrix::zeros(self.dim(), self.dim())
    }

    fn identity(&self) -> Matrix<Rational> {
        Matrix::identity(self.dim())
    }

    /// `h_k`, zero for `k > M`.
    fn h(&self, k: usize) -> Matrix<Rational> {
        self.h.get(k).cloned().unwrap_or_else(|| self.zero())
    }

    fn h_perp(&self, k: usize) -> Matrix<Rational> {
        self.h_perp.get(k).cloned().unwrap_or_else(|| self.zero())
    }

    /// `Σ_{k=0}^M z^k h_k`.
    fn big_h(&self, z: &Rational) -> Matrix<Rational> {
        self.generating(z, &self.h)
    }

    fn big_h_perp(&self, z: &Rational) -> Matrix<Rational> {
        self.generating(z, &self.h_perp)
    }

    fn generating(&self, z: &Rational, ops: &[Matrix<Rational>]) -> Matrix<Rational> {
        let mut acc = self.zero();
        for (k, op) in ops.iter().enumerate() {
            acc = acc.add(&op.scale(&z.pow_u(k as u32)));
        }
        acc
    }

    /// First difference in columns of degree `<= max_degree`.
    fn first_difference(
        &self,
        lhs: &Matrix<Rational>,
        rhs: &Matrix<Rational>,
        max_degree: usize,
    ) -> Option<Value> {
        let diff = lhs.sub(rhs);
        let (r, c, _) = diff
            .entries()
            .find(|(_, c, _)| self.basis[*c].size() <= max_degree)?;
        Some(json!({
            "from": self.basis[c].to_string(),
            "to": self.basis[r].to_string(),
            "lhs": lhs.get(r, c).to_string(),
            "rhs": rhs.get(r, c).to_string(),
        }))
    }
}

/// `(1 - uv) H^⊥_M(u) H_M(v) = H_M(v) H^⊥_M(u) - (uv)^{M+1} H_M(1/u) H^⊥_M(1/v)`
/// on `Λ_M` in degrees `<= max_degree`. With `drop_correction` the last term
/// is omitted, which must make the identity fail.
pub fn verify_commfin(
    max_width: usize,
    max_degree: usize,
    u: &Rational,
    v: &Rational,
    drop_correction: bool,
) -> Result<CheckReport> {
    let uv = u * v;
    if uv.is_one() {
        return Err(Error::Domain(format!("uv = 1 at u = {u}, v = {v}")));
    }
    if u.is_zero() || v.is_zero() {
        return Err(Error::Domain("u and v must be nonzero".into()));
    }
    let mut params =
        json!({ "M": max_width, "D": max_degree, "u": u.to_string(), "v": v.to_string() });
    if drop_correction {
        params["variant"] = json!("no_correction");
    }
    let w = Window::new(max_width, max_degree + max_width)?;
    let lhs = w
        .big_h_perp(u)
        .mul(&w.big_h(v))
        .scale(&(Rational::one() - &uv));
    let mut rhs = w.big_h(v).mul(&w.big_h_perp(u));
    if !drop_correction {
        let correction = w.big_h(&u.recip()?).mul(&w.big_h_perp(&v.recip()?));
        rhs = rhs.sub(&correction.scale(&uv.pow_u(max_width as u32 + 1)));
    }
    Ok(CheckReport::new(
        "commfin",
        params,
        w.first_difference(&lhs, &rhs, max_degree),
    ))
}

/// `Σ_i h_{n-i} h^⊥_{m-i}` and `Σ_i h_{M+1-m+i} h^⊥_{M+1-n+i}`.
fn hperp_sides(w: &Window, m: usize, n: usize) -> (Matrix<Rational>, Matrix<Rational>) {
    let big_m = w.max_width;
    let mut main = w.zero();
    for i in 0..=m.min(n) {
        main = main.add(&w.h(n - i).mul(&w.h_perp(m - i)));
    }
    let mut correction = w.zero();
    for i in 0..m.min(n) {
        correction = correction.add(&w.h(big_m + 1 - m + i).mul(&w.h_perp(big_m + 1 - n + i)));
    }
    (main, correction)
}

/// `h^⊥_m h_n = Σ_i h_{n-i} h^⊥_{m-i} - Σ_i h_{M+1-m+i} h^⊥_{M+1-n+i}` in
/// `Λ_M`, for all `0 <= m, n <= M`, in degrees `<= max_degree`.
pub fn verify_hperp_coefficients(max_width: usize, max_degree: usize) -> Result<CheckReport> {
    let params = json!({ "M": max_width, "D": max_degree });
    let w = Window::new(max_width, max_degree + max_width)?;
    for m in 0..=max_width {
        for n in 0..=max_width {
            let lhs = w.h_perp(m).mul(&w.h(n));
            let (main, correction) = hperp_sides(&w, m, n);
            if let Some(mut diff) = w.first_difference(&lhs, &main.sub(&correction), max_degree) {
                diff["m"] = json!(m);
                diff["n"] = json!(n);
                return Ok(CheckReport::new("hperp_coefficients", params, Some(diff)));
            }
        }
    }
    Ok(CheckReport::new("hperp_coefficients", params, None))
}

/// The worked cases in `Λ_1` and `Λ_2`:
/// `h^⊥_1 h_1 = 1` (M = 1); `h^⊥_1 h_2 = h_1`, `h^⊥_2 h_1 = h^⊥_1`,
/// `h^⊥_2 h_2 = 1`, `h^⊥_1 h_1 = h_1 h^⊥_1 + 1 - h_2 h^⊥_2` (M = 2).
pub fn verify_hperp_examples(max_degree: usize) -> Result<CheckReport> {
    let params = json!({ "D": max_degree });
    let w1 = Window::new(1, max_degree + 1)?;
    let w2 = Window::new(2, max_degree + 2)?;
    let cases: Vec<(&str, &Window, Matrix<Rational>, Matrix<Rational>)> = vec![
        (
            "M=1: h1perp h1 = 1",
            &w1,
            w1.h_perp(1).mul(&w1.h(1)),
            w1.identity(),
        ),
        (
            "M=2: h1perp h2 = h1",
            &w2,
            w2.h_perp(1).mul(&w2.h(2)),
            w2.h(1),
        ),
        (
            "M=2: h2perp h1 = h1perp",
            &w2,
            w2.h_perp(2).mul(&w2.h(1)),
            w2.h_perp(1),
        ),
        (
            "M=2: h2perp h2 = 1",
            &w2,
            w2.h_perp(2).mul(&w2.h(2)),
            w2.identity(),
        ),
        (
            "M=2: h1perp h1 = h1 h1perp + 1 - h2 h2perp",
            &w2,
            w2.h_perp(1).mul(&w2.h(1)),
            w2.h(1)
                .mul(&w2.h_perp(1))
                .add(&w2.identity())
                .sub(&w2.h(2).mul(&w2.h_perp(2))),
        ),
    ];
    for (name, w, lhs, rhs) in cases {
        if let Some(mut diff) = w.first_difference(&lhs, &rhs, max_degree) {
            diff["relation"] = json!(name);
            return Ok(CheckReport::new("hperp_examples", params, Some(diff)));
        }
    }
    Ok(CheckReport::new("hperp_examples", params, None))
}

/// For `M = D + n > D + n - 1` the correction terms vanish in degrees
/// `<= D`, leaving `h^⊥_m h_n = Σ_i h_{n-i} h^⊥_{m-i}`; checked for
/// `0 <= m, n <= max_index`.
pub fn verify_hperp_stabilization(max_degree: usize, max_index: usize) -> Result<CheckReport> {
    let params = json!({ "D": max_degree, "index_max": max_index });
    for n in 0..=max_index {
        let big_m = max_degree + n;
        let w = Window::new(big_m, max_degree + big_m)?;
        for m in 0..=max_index.min(big_m) {
            let (main, correction) = hperp_sides(&w, m, n);
            let lhs = w.h_perp(m).mul(&w.h(n));
            let failure = w
                .first_difference(&correction, &w.zero(), max_degree)
                .map(|d| (d, "correction vanishes"))
                .or_else(|| {
                    w.first_difference(&lhs, &main, max_degree)
                        .map(|d| (d, "untruncated relation"))
                });
            if let Some((mut diff, what)) = failure {
                diff["relation"] = json!(what);
                diff["M"] = json!(big_m);
                diff["m"] = json!(m);
                diff["n"] = json!(n);
                return Ok(CheckReport::new("hperp_stabilization", params, Some(diff)));
            }
        }
    }
    Ok(CheckReport::new("hperp_stabilization", params, None))
}

/// Coefficients of `exp(Σ p_k z^k / k)`, rewritten in the `h_k` by Newton's
/// identities, equal `h_k` for `k <= max_degree`.
pub fn verify_vertex_exp(max_degree: usize) -> Result<CheckReport> {
    let params = json!({ "D": max_degree });
    let expansion = powersum_expand_h(max_degree);
    let p_in_h = newton_power_sums_in_h(max_degree);
    for (k, coeff) in expansion.iter().enumerate() {
        let in_h = coeff.substitute(&p_in_h);
        let expected = if k == 0 {
            GeneratorPoly::one()
        } else {
            GeneratorPoly::generator(k)
        };
        if in_h != expected {
            let w = json!({ "k": k, "lhs": in_h.to_string(), "rhs": expected.to_string() });
            return Ok(CheckReport::new("vertex_exp", params, Some(w)));
        }
    }
    Ok(CheckReport::new("vertex_exp", params, None))
}

fn products(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter()
        .flat_map(|a| y.iter().map(move |b| a * b))
        .collect()
}

/// `Σ_{|λ| = d} s_λ(x) s_λ(y) = h_d(x_i y_j)` for every `d <= max_degree`.
pub fn verify_cauchy(max_degree: usize, x: &[Rational], y: &[Rational]) -> Result<CheckReport> {
    let params = json!({ "D": max_degree, "x": rationals(x), "y": rationals(y) });
    let h = complete_homogeneous(&products(x, y), max_degree);
    let rows = x.len().min(y.len());
    for (d, rhs) in h.iter().enumerate() {
        let lhs: Rational = partitions_of(d, d, Some(rows))
            .iter()
            .map(|l| schur_eval(l, x) * schur_eval(l, y))
            .sum();
        if &lhs != rhs {
            let w = json!({ "degree": d, "lhs": lhs.to_string(), "rhs": rhs.to_string() });
            return Ok(CheckReport::new("cauchy", params, Some(w)));
        }
    }
    Ok(CheckReport::new("cauchy", params, None))
}

/// `Σ_{|λ| = d} b_λ(t) P_λ(x; t) P_λ(y; t) = q_d(x_i y_j; t)` for every
/// `d <= max_degree`.
pub fn verify_cauchy_hl(
    max_degree: usize,
    t: &Rational,
    x: &[Rational],
    y: &[Rational],
) -> Result<CheckReport> {
    let params =
        json!({ "D": max_degree, "t": t.to_string(), "x": rationals(x), "y": rationals(y) });
    let xy = products(x, y);
    let rows = x.len().min(y.len());
    let mut cache: HashMap<(Partition, bool), Rational> = HashMap::new();
    let mut p = |l: &Partition, first: bool| {
        cache
            .entry((l.clone(), first))
            .or_insert_with(|| hl_eval(l, if first { x } else { y }, t))
            .clone()
    };
    for d in 0..=max_degree {
        let lhs: Rational = partitions_of(d, d, Some(rows))
            .iter()
            .map(|l| b_lambda(l, t) * p(l, true) * p(l, false))
            .sum();
        let rhs = q_eval(d, &xy, t);
        if lhs != rhs {
            let w = json!({ "degree": d, "lhs": lhs.to_string(), "rhs": rhs.to_string() });
            return Ok(CheckReport::new("cauchy_hl", params, Some(w)));
        }
    }
    Ok(CheckReport::new("cauchy_hl", params, None))
}
