//! Evaluation of symmetric functions at finitely many rational variables.

use std::collections::HashMap;

use itertools::Itertools;

use crate::linalg::{determinant, interpolate_at_zero};
use crate::partitions::{b_lambda, psi_strip, strips_below, v_lambda, Partition};
use crate::ring::Rational;

/// Largest variable count for which `hl_eval` sums over the symmetric group;
/// beyond it the branching rule is used.
pub const SYMMETRIZE_LIMIT: usize = 8;

/// `h_0(x), …, h_{k_max}(x)`.
pub fn complete_homogeneous(x: &[Rational], k_max: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); k_max + 1];
    h[0] = Rational::one();
    // Multiply the series by 1/(1 - x_i z) one variable at a time.
    for xi in x {
        for k in 1..=k_max {
            let add = xi * &h[k - 1];
            h[k] += &add;
        }
    }
    h
}

/// `s_λ(x)` from the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur_eval(lambda: &Partition, x: &[Rational]) -> Rational {
    if lambda.len() > x.len() {
        return Rational::zero();
    }
    let n = lambda.len();
    let h = complete_homogeneous(x, lambda.width() + n);
    let entry = |i: usize, j: usize| {
        // λ_i - i + j with 1-based i, j
        let idx = lambda.part(i) as isize - i as isize + j as isize;
        if idx < 0 {
            Rational::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    let m = (1..=n)
        .map(|i| (1..=n).map(|j| entry(i, j)).collect())
        .collect();
    determinant(m)
}

/// Monomial symmetric polynomial `m_λ(x)`: the sum of `x^α` over distinct
/// rearrangements `α` of `λ` padded with zeros.
pub fn monomial_eval(lambda: &Partition, x: &[Rational]) -> Rational {
    if lambda.len() > x.len() {
        return Rational::zero();
    }
    let mut exps = lambda.parts().to_vec();
    exps.resize(x.len(), 0);
    exps.iter()
        .permutations(x.len())
        .unique()
        .map(|alpha| {
            x.iter()
                .zip(alpha)
                .map(|(xi, &a)| xi.pow_u(a as u32))
                .product::<Rational>()
        })
        .sum()
}

/// Hall–Littlewood `P_λ(x; t)`.
///
/// Up to [`SYMMETRIZE_LIMIT`] variables this is the symmetric-group formula
/// (with coincident variables resolved by perturbation and interpolation);
/// above it, or when `v_λ(t) = 0`, the branching rule is used.
pub fn hl_eval(lambda: &Partition, x: &[Rational], t: &Rational) -> Rational {
    if lambda.len() > x.len() {
        return Rational::zero();
    }
    let v = v_lambda(lambda, x.len(), t).expect("row count checked above");
    if x.len() > SYMMETRIZE_LIMIT || v.is_zero() {
        return hl_eval_branching(lambda, x, t);
    }
    if x.iter().all_unique() {
        return hl_eval_symmetrized(lambda, x, t).expect("distinct variables");
    }
    // P_λ(x + εc) is a polynomial of degree |λ| in ε; sample it at shifts
    // that keep the variables distinct and interpolate back to ε = 0.
    let needed = lambda.size() + 1;
    let mut samples = Vec::with_capacity(needed);
    let mut eps = 1i64;
    while samples.len() < needed {
        let e = Rational::from_int(eps);
        let shifted: Vec<Rational> = x
            .iter()
            .enumerate()
            .map(|(i, xi)| xi + &(&e * &Rational::from_int(i as i64)))
            .collect();
        if shifted.iter().all_unique() {
            let value = hl_eval_symmetrized(lambda, &shifted, t).expect("distinct variables");
            samples.push((e, value));
        }
        eps += 1;
    }
    interpolate_at_zero(&samples)
}

/// `(1/v_λ(t)) Σ_{w∈S_n} w(x^λ ∏_{i<j} (x_i - t x_j)/(x_i - x_j))`.
///
/// Returns `None` if two variables coincide or `v_λ(t) = 0`.
pub fn hl_eval_symmetrized(lambda: &Partition, x: &[Rational], t: &Rational) -> Option<Rational> {
    let n = x.len();
    if lambda.len() > n {
        return Some(Rational::zero());
    }
    let v = v_lambda(lambda, n, t).ok()?;
    if v.is_zero() || !x.iter().all_unique() {
        return None;
    }
    let mut exps = lambda.parts().to_vec();
    exps.resize(n, 0);
    let mut total = Rational::zero();
    for w in (0..n).permutations(n) {
        let mut term = Rational::one();
        for (i, &wi) in w.iter().enumerate() {
            term *= &x[wi].pow_u(exps[i] as u32);
        }
        if term.is_zero() {
            continue;
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&x[w[i]], &x[w[j]]);
                term = term * (a - &(t * b)) / (a - b);
            }
        }
        total += &term;
    }
    Some(total / v)
}

/// Branching rule: `P_λ(x_1..x_n) = Σ_μ ψ_{λ/μ}(t) x_n^{|λ/μ|} P_μ(x_1..x_{n-1})`
/// over horizontal strips `λ/μ`.
pub fn hl_eval_branching(lambda: &Partition, x: &[Rational], t: &Rational) -> Rational {
    fn go(
        lambda: &Partition,
        n: usize,
        x: &[Rational],
        t: &Rational,
        memo: &mut HashMap<(Partition, usize), Rational>,
    ) -> Rational {
        if lambda.len() > n {
            return Rational::zero();
        }
        if n == 0 {
            return Rational::one();
        }
        if let Some(v) = memo.get(&(lambda.clone(), n)) {
            return v.clone();
        }
        let xn = &x[n - 1];
        let mut acc = Rational::zero();
        for k in 0..=lambda.width() {
            for mu in strips_below(lambda, k) {
                if mu.len() > n - 1 {
                    continue;
                }
                let psi = psi_strip(lambda, &mu, t).expect("strips_below yields strips");
                if psi.is_zero() {
                    continue;
                }
                acc += &(psi * xn.pow_u(k as u32) * go(&mu, n - 1, x, t, memo));
            }
        }
        memo.insert((lambda.clone(), n), acc.clone());
        acc
    }
    go(lambda, x.len(), x, t, &mut HashMap::new())
}

/// `q_r(x; t)`: coefficient of `z^r` in `∏_i (1 - t x_i z)/(1 - x_i z)`.
pub fn q_eval(r: usize, x: &[Rational], t: &Rational) -> Rational {
    let mut c = vec![Rational::zero(); r + 1];
    c[0] = Rational::one();
    for xi in x {
        for k in 1..=r {
            let add = xi * &c[k - 1];
            c[k] += &add;
        }
        let txi = t * xi;
        for k in (1..=r).rev() {
            let sub = &txi * &c[k - 1];
            c[k] -= &sub;
        }
    }
    c.swap_remove(r)
}

/// `Q_λ(x; t) = b_λ(t) P_λ(x; t)`.
pub fn hl_q_eval(lambda: &Partition, x: &[Rational], t: &Rational) -> Rational {
    b_lambda(lambda, t) * hl_eval(lambda, x, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| Rational::from_int(n)).collect()
    }

    /// Semistandard tableaux of shape `λ` with entries `<= n`, counted by
    /// filling cells row by row.
    fn count_ssyt(lambda: &Partition, n: usize) -> usize {
        let cells: Vec<(usize, usize)> = (0..lambda.len())
            .flat_map(|r| (0..lambda.parts()[r]).map(move |c| (r, c)))
            .collect();
        fn fill(
            idx: usize,
            cells: &[(usize, usize)],
            grid: &mut HashMap<(usize, usize), usize>,
            n: usize,
        ) -> usize {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let lo_row = if c > 0 { grid[&(r, c - 1)] } else { 1 };
            let lo_col = if r > 0 { grid[&(r - 1, c)] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=n {
                grid.insert((r, c), v);
                total += fill(idx + 1, cells, grid, n);
            }
            grid.remove(&(r, c));
            total
        }
        fill(0, &cells, &mut HashMap::new(), n)
    }

    #[test]
    fn schur_examples() {
        let x = vec![q(2, 3), q(-5, 7)];
        assert_eq!(schur_eval(&Partition::of(&[1]), &x), &x[0] + &x[1]);
        let ones = ints(&[1, 1, 1]);
        let lambda = Partition::of(&[2, 2]);
        assert_eq!(count_ssyt(&lambda, 3), 6);
        assert_eq!(schur_eval(&lambda, &ones), Rational::from_int(6));
        assert_eq!(
            schur_eval(&Partition::of(&[1, 1]), &ints(&[4])),
            Rational::zero()
        );
    }

    #[test]
    fn schur_at_ones_counts_tableaux() {
        for lambda in crate::partitions::partitions_in_box(3, 3) {
            for n in 1..=4 {
                assert_eq!(
                    schur_eval(&lambda, &vec![Rational::one(); n]),
                    Rational::from_int(count_ssyt(&lambda, n) as i64),
                    "{lambda} in {n} variables"
                );
            }
        }
    }

    #[test]
    fn hl_single_box_is_power_sum() {
        let x = vec![q(1, 2), q(3, 1), q(-2, 5)];
        let t = q(2, 7);
        let sum: Rational = x.iter().cloned().sum();
        assert_eq!(hl_eval(&Partition::of(&[1]), &x, &t), sum);
    }

    #[test]
    fn hl_degenerations() {
        let x = vec![q(1, 2), q(3, 1), q(-2, 5)];
        for lambda in crate::partitions::partitions_in_box(3, 3) {
            assert_eq!(
                hl_eval(&lambda, &x, &Rational::zero()),
                schur_eval(&lambda, &x),
                "{lambda}"
            );
            assert_eq!(
                hl_eval(&lambda, &x, &Rational::one()),
                monomial_eval(&lambda, &x),
                "{lambda}"
            );
        }
    }

    #[test]
    fn two_routes_agree() {
        let x = vec![q(1, 2), q(3, 1), q(-2, 5), q(4, 3)];
        let t = q(1, 3);
        for lambda in crate::partitions::partitions_in_box(4, 3) {
            assert_eq!(
                hl_eval_symmetrized(&lambda, &x, &t).unwrap(),
                hl_eval_branching(&lambda, &x, &t),
                "{lambda}"
            );
        }
    }

    #[test]
    fn coincident_variables_by_interpolation() {
        let x = ints(&[1, 1, 2]);
        let t = q(1, 2);
        for lambda in crate::partitions::partitions_in_box(3, 2) {
            assert_eq!(
                hl_eval(&lambda, &x, &t),
                hl_eval_branching(&lambda, &x, &t),
                "{lambda}"
            );
        }
    }

    #[test]
    fn stability_under_zero_variable() {
        let x = vec![q(1, 2), q(3, 1)];
        let mut x0 = x.clone();
        x0.push(Rational::zero());
        let t = q(1, 2);
        for lambda in crate::partitions::partitions_in_box(2, 3) {
            assert_eq!(hl_eval(&lambda, &x0, &t), hl_eval(&lambda, &x, &t));
        }
    }

    #[test]
    fn large_variable_count_uses_branching() {
        let x: Vec<Rational> = (1..=10).map(|i| q(i, 10)).collect();
        let lambda = Partition::of(&[2, 1]);
        let t = Rational::zero();
        assert_eq!(hl_eval(&lambda, &x, &t), schur_eval(&lambda, &x));
    }

    #[test]
    fn q_function_examples() {
        let x = vec![q(1, 2), q(3, 1), q(-2, 5)];
        let t = q(1, 3);
        let sum: Rational = x.iter().cloned().sum();
        assert_eq!(q_eval(1, &x, &t), (Rational::one() - &t) * sum);
        assert_eq!(q_eval(0, &x, &t), Rational::one());
        for r in 1..5 {
            assert_eq!(q_eval(r, &x, &Rational::one()), Rational::zero());
            assert_eq!(
                q_eval(r, &x, &Rational::zero()),
                complete_homogeneous(&x, r)[r]
            );
            // q_r = Q_(r) = (1 - t) P_(r)
            assert_eq!(q_eval(r, &x, &t), hl_q_eval(&Partition::of(&[r]), &x, &t));
        }
    }
}
