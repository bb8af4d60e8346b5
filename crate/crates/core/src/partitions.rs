//! Young diagrams, occupation-number vectors, horizontal strips and the
//! combinatorial coefficients `b_λ`, `v_λ`, `φ_{λ/μ}`, `ψ_{λ/μ}` of the
//! Hall–Littlewood theory.
//!
//! Partitions are ordered by size first and then reverse-lexicographically
//! on their parts, so `(2)` precedes `(1,1)`. Every enumeration in this
//! module returns its output in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::Ring;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zero parts are dropped; anything increasing is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parts given as a non-increasing list; panics otherwise. For literals
    /// in code and tests.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }

    /// The diagram with `mult[i-1]` rows of length `i`.
    pub fn from_multiplicities(mult: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in mult.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, m));
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the longest row, `λ_1` (zero for the empty diagram).
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length `λ'_i` of the `i`-th column, 1-based.
    pub fn column(&self, i: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= i).count()
    }

    /// `n_i(λ)`, the number of rows of length exactly `i` (for `i >= 1`).
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (1..=self.width()).map(|i| self.column(i)).collect(),
        }
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `2,2`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Particle counts `(n_0, …, n_M)` on the sites `0..=M`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OccupationVector {
    counts: Vec<usize>,
}

impl OccupationVector {
    /// `counts` must have one entry per site, so at least one.
    pub fn new(counts: Vec<usize>) -> Self {
        assert!(!counts.is_empty(), "an occupation vector needs site 0");
        OccupationVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Largest site index `M`.
    pub fn max_site(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn particles(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The diagram with `n_j` rows of length `j`; `n_0` does not contribute.
    pub fn to_partition(&self) -> Partition {
        Partition::from_multiplicities(&self.counts[1..])
    }

    /// Inverse of [`to_partition`](Self::to_partition) on `N`-particle
    /// states, with `n_0 = N - l(λ)`.
    pub fn from_partition(lambda: &Partition, max_site: usize, particles: usize) -> Result<Self> {
        if lambda.width() > max_site || lambda.len() > particles {
            return Err(Error::Domain(format!(
                "{lambda} does not fit in {particles} rows and {max_site} columns"
            )));
        }
        let mut counts = vec![0; max_site + 1];
        counts[0] = particles - lambda.len();
        for (j, c) in counts.iter_mut().enumerate().skip(1) {
            *c = lambda.multiplicity(j);
        }
        Ok(OccupationVector { counts })
    }
}

/// `λ/μ` is a horizontal strip: `μ ⊆ λ` and every column of the skew shape
/// holds at most one cell.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (1..=lambda.width()).all(|i| lambda.column(i) - mu.column(i) <= 1)
}

/// All `λ ⊇ μ` with `λ_1 <= max_width` such that `λ/μ` is a horizontal
/// strip of exactly `k` cells. Rows are chosen between the interlacing
/// bounds `μ_{i-1} >= λ_i >= μ_i`.
pub fn strips_above(mu: &Partition, k: usize, max_width: usize) -> Vec<Partition> {
    if mu.width() > max_width {
        return Vec::new();
    }
    let rows = mu.len() + 1;
    let bounds: Vec<(usize, usize)> = (1..=rows)
        .map(|i| {
            let hi = if i == 1 { max_width } else { mu.part(i - 1) };
            (mu.part(i), hi)
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    fill_rows(&bounds, k, &mut current, &mut out);
    out.sort();
    out
}

/// All `μ ⊆ λ` such that `λ/μ` is a horizontal strip of exactly `k` cells:
/// `λ_{i+1} <= μ_i <= λ_i`.
pub fn strips_below(lambda: &Partition, k: usize) -> Vec<Partition> {
    let bounds: Vec<(usize, usize)> = (1..=lambda.len())
        .map(|i| (lambda.part(i + 1), lambda.part(i)))
        .collect();
    // Fill with removed-cell counts, then translate back.
    let removal: Vec<(usize, usize)> = bounds.iter().map(|&(lo, hi)| (0, hi - lo)).collect();
    let mut picks: Vec<RowChoice> = Vec::new();
    let mut current = Vec::new();
    fill_rows(&removal, k, &mut current, &mut picks);
    let mut out: Vec<Partition> = picks
        .into_iter()
        .map(|removed| {
            let parts = removed.parts_padded(lambda.len());
            let rows = (1..=lambda.len())
                .map(|i| lambda.part(i) - parts[i - 1])
                .collect();
            Partition::new(rows).expect("interlacing keeps rows ordered")
        })
        .collect();
    out.sort();
    out
}

// `fill_rows` also serves `strips_below`, where the "rows" it produces are
// removal counts and need not be decreasing; a private carrier keeps that
// out of `Partition`.
struct RowChoice(Vec<usize>);

impl RowChoice {
    fn parts_padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }
}

trait FromRows: Sized {
    fn from_rows(rows: &[usize]) -> Self;
}

impl FromRows for Partition {
    fn from_rows(rows: &[usize]) -> Self {
        Partition::new(rows.to_vec()).expect("interlacing keeps rows ordered")
    }
}

impl FromRows for RowChoice {
    fn from_rows(rows: &[usize]) -> Self {
        RowChoice(rows.to_vec())
    }
}

/// Chooses row `i` in `bounds[i]` (largest first) with the row increments
/// over the lower bounds summing to `remaining`.
fn fill_rows<T: FromRows>(
    bounds: &[(usize, usize)],
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<T>,
) {
    let i = current.len();
    if i == bounds.len() {
        if remaining == 0 {
            out.push(T::from_rows(current));
        }
        return;
    }
    let capacity: usize = bounds[i..].iter().map(|(lo, hi)| hi - lo).sum();
    if capacity < remaining {
        return;
    }
    let (lo, hi) = bounds[i];
    let top = hi.min(lo + remaining);
    for row in (lo..=top).rev() {
        current.push(row);
        fill_rows(bounds, remaining - (row - lo), current, out);
        current.pop();
    }
}

/// Column lengths of the skew shape `λ/μ` for columns `1..=λ_1 + 1`.
fn skew_columns(lambda: &Partition, mu: &Partition) -> Vec<usize> {
    (1..=lambda.width() + 1)
        .map(|i| lambda.column(i) - mu.column(i))
        .collect()
}

fn require_strip(lambda: &Partition, mu: &Partition) -> Result<()> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(Error::Domain(format!(
            "{lambda}/{mu} is not a horizontal strip"
        )));
    }
    Ok(())
}

/// Pieri coefficient of `P_λ` in `P_μ q_r`:
/// `∏_{i∈I} (1 - t^{n_i(λ)})` with `I = {i : θ'_i = 1, θ'_{i+1} = 0}`.
pub fn phi_strip<R: Ring>(lambda: &Partition, mu: &Partition, t: &R) -> Result<R> {
    require_strip(lambda, mu)?;
    let theta = skew_columns(lambda, mu);
    let mut acc = R::one();
    for i in 1..=lambda.width() {
        if theta[i - 1] == 1 && theta[i] == 0 {
            acc = acc.mul_ref(&one_minus_power(t, lambda.multiplicity(i)));
        }
    }
    Ok(acc)
}

/// Branching coefficient `ψ_{λ/μ}(t) = ∏_{j∈J} (1 - t^{n_j(μ)})` with
/// `J = {j : θ'_j = 0, θ'_{j+1} = 1}`, used when a variable is removed from
/// `P_λ(x_1, …, x_n; t)`.
pub fn psi_strip<R: Ring>(lambda: &Partition, mu: &Partition, t: &R) -> Result<R> {
    require_strip(lambda, mu)?;
    let theta = skew_columns(lambda, mu);
    let mut acc = R::one();
    for j in 1..lambda.width() {
        if theta[j - 1] == 0 && theta[j] == 1 {
            acc = acc.mul_ref(&one_minus_power(t, mu.multiplicity(j)));
        }
    }
    Ok(acc)
}

fn one_minus_power<R: Ring>(t: &R, n: usize) -> R {
    R::one().sub_ref(&t.pow(n as u32))
}

/// `φ_n(t) = (1 - t)(1 - t^2)…(1 - t^n)`.
pub fn phi_n<R: Ring>(n: usize, t: &R) -> R {
    (1..=n).fold(R::one(), |acc, i| acc.mul_ref(&one_minus_power(t, i)))
}

/// `v_n(t) = ∏_{i=1}^n (1 - t^i)/(1 - t) = [1][2]…[n]`, kept polynomial.
pub fn v_n<R: Ring>(n: usize, t: &R) -> R {
    crate::ring::q_factorial(n as u32, t)
}

/// `b_λ(t) = ∏_{i≥1} φ_{n_i(λ)}(t)`.
pub fn b_lambda<R: Ring>(lambda: &Partition, t: &R) -> R {
    (1..=lambda.width()).fold(R::one(), |acc, i| {
        acc.mul_ref(&phi_n(lambda.multiplicity(i), t))
    })
}

/// `v_λ(t) = ∏_{i≥0} v_{n_i(λ)}(t)` for `λ` viewed in `n_vars` variables, so
/// that `n_0 = n_vars - l(λ)` zero parts count too.
pub fn v_lambda<R: Ring>(lambda: &Partition, n_vars: usize, t: &R) -> Result<R> {
    let zeros = n_vars
        .checked_sub(lambda.len())
        .ok_or_else(|| Error::Domain(format!("{lambda} has more than {n_vars} rows")))?;
    let mut acc = v_n(zeros, t);
    for i in 1..=lambda.width() {
        acc = acc.mul_ref(&v_n(lambda.multiplicity(i), t));
    }
    Ok(acc)
}

/// Partitions of `d` with parts `<= max_part` and at most `max_len` rows.
pub fn partitions_of(d: usize, max_part: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn go(
        rest: usize,
        cap: usize,
        rows_left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        d,
        max_part,
        max_len.unwrap_or(usize::MAX),
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// All diagrams with at most `rows` rows and at most `cols` columns,
/// including `∅`; there are `binomial(rows + cols, cols)` of them.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|d| partitions_of(d, cols, Some(rows)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Coefficient, Poly, Rational};

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn construction_rules() {
        assert_eq!(Partition::new(vec![2, 0, 0]).unwrap(), p(&[2]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn occupation_round_trip_examples() {
        let occ = OccupationVector::new(vec![5, 2, 0, 1]);
        assert_eq!(occ.to_partition(), p(&[3, 1, 1]));
        assert_eq!(
            OccupationVector::new(vec![0, 0, 0]).to_partition(),
            Partition::empty()
        );
        assert_eq!(
            OccupationVector::new(vec![0, 0, 3]).to_partition(),
            p(&[2, 2, 2])
        );

        assert_eq!(
            OccupationVector::from_partition(&p(&[3, 1, 1]), 3, 8).unwrap(),
            occ
        );
        assert_eq!(
            OccupationVector::from_partition(&Partition::empty(), 2, 3)
                .unwrap()
                .counts(),
            &[3, 0, 0]
        );
        assert_eq!(
            OccupationVector::from_partition(&p(&[2, 2]), 2, 2)
                .unwrap()
                .counts(),
            &[0, 0, 2]
        );
        assert!(OccupationVector::from_partition(&p(&[3]), 2, 2).is_err());
        assert!(OccupationVector::from_partition(&p(&[1, 1, 1]), 2, 2).is_err());
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[1])));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &Partition::empty()));
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[3, 1])));
        assert!(!is_horizontal_strip(&p(&[1]), &p(&[2])));
    }

    #[test]
    fn strip_enumeration_examples() {
        assert_eq!(strips_above(&p(&[1]), 1, 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            strips_above(&Partition::empty(), 3, 2),
            Vec::<Partition>::new()
        );
        assert_eq!(strips_above(&p(&[2]), 0, 2), vec![p(&[2])]);
        assert_eq!(strips_above(&p(&[1]), 2, 2), vec![p(&[2, 1])]);
        assert_eq!(strips_below(&p(&[2, 1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(strips_below(&p(&[2, 2]), 2), vec![p(&[2])]);
    }

    #[test]
    fn strip_enumeration_from_empty_k3() {
        // The only horizontal 3-strip over ∅ is the single row (3).
        assert_eq!(strips_above(&Partition::empty(), 3, 3), vec![p(&[3])]);
        // Under a two-column bound no 3-strip fits: (3) is too wide and
        // (2,1), (1,1,1) stack cells in a column.
        let brute: Vec<Partition> = partitions_of(3, 2, None)
            .into_iter()
            .filter(|l| is_horizontal_strip(l, &Partition::empty()))
            .collect();
        assert_eq!(strips_above(&Partition::empty(), 3, 2), brute);
    }

    #[test]
    fn phi_examples() {
        let t = Poly::t();
        assert_eq!(
            phi_strip(&p(&[2, 1]), &p(&[1]), &t).unwrap(),
            Poly::from_ints(&[1, -1])
        );
        assert_eq!(
            phi_strip(&p(&[3, 1]), &p(&[3, 1]), &t).unwrap(),
            Poly::from_ints(&[1])
        );
        assert_eq!(
            phi_strip(&p(&[1, 1]), &p(&[1]), &t).unwrap(),
            Poly::from_ints(&[1, 0, -1])
        );
        assert!(phi_strip(&p(&[2, 2]), &Partition::empty(), &t).is_err());
    }

    #[test]
    fn psi_examples() {
        let t = Poly::t();
        assert_eq!(
            psi_strip(&p(&[2]), &p(&[1]), &t).unwrap(),
            Poly::from_ints(&[1, -1])
        );
        assert_eq!(
            psi_strip(&p(&[1]), &Partition::empty(), &t).unwrap(),
            Poly::one()
        );
    }

    #[test]
    fn b_and_v() {
        let t = Poly::t();
        assert_eq!(b_lambda(&p(&[1]), &t), Poly::from_ints(&[1, -1]));
        assert_eq!(b_lambda(&Partition::empty(), &t), Poly::one());
        let expected = Poly::from_ints(&[1, -1]).mul_ref(&Poly::from_ints(&[1, 0, -1]));
        assert_eq!(b_lambda(&p(&[2, 2]), &t), expected);
        // v for (1) in two variables: v_1 * v_1 = 1.
        assert_eq!(v_lambda(&p(&[1]), 2, &t).unwrap(), Poly::one());
        assert_eq!(
            v_lambda(&Partition::empty(), 2, &t).unwrap(),
            Poly::from_ints(&[1, 1])
        );
        assert!(v_lambda(&p(&[1, 1, 1]), 2, &t).is_err());
        assert_eq!(phi_n(2, &Rational::new(1, 2)), Rational::new(3, 8));
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(partitions_in_box(1, 1), vec![Partition::empty(), p(&[1])]);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(0, 5), vec![Partition::empty()]);
    }

    #[test]
    fn ordering_is_graded_reverse_lex() {
        let mut v = vec![
            p(&[1, 1]),
            p(&[1]),
            p(&[2]),
            Partition::empty(),
            p(&[2, 1]),
            p(&[3]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Partition::empty(),
                p(&[1]),
                p(&[2]),
                p(&[1, 1]),
                p(&[3]),
                p(&[2, 1])
            ]
        );
    }
}
