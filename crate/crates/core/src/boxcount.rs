//! Plane partitions in an `a × b × c` box, counted three ways: a transfer
//! matrix over diagonal slices, exhaustive enumeration, and a Schur
//! function evaluated at ones.
//!
//! The transfer step multiplies by `H` in `Λ_c`: each slice is a partition
//! with at most `c` columns, and neighbouring slices differ by a horizontal
//! strip. Weighting slice `λ` by `q^{|λ|}` makes the total weight
//! `q^{volume}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::partitions::{strips_above, strips_below, Partition};
use crate::ring::{Coefficient, Poly, Rational, Ring};
use crate::symfunc::schur_eval;
use crate::{Error, Result};

/// Largest `a·b·c` accepted by the brute-force route.
pub const BRUTE_FORCE_BUDGET: usize = 36;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoxSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl BoxSpec {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Domain(format!(
                "box sides must be positive, got {a}x{b}x{c}"
            )));
        }
        Ok(BoxSpec { a, b, c })
    }

    /// Maximum number of cells on the diagonal `j - i = k`.
    fn diagonal_length(&self, k: i64) -> usize {
        let (a, b) = (self.a as i64, self.b as i64);
        let len = if k >= 0 { a.min(b - k) } else { b.min(a + k) };
        len.max(0) as usize
    }
}

impl fmt::Display for BoxSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.a, self.b, self.c)
    }
}

/// An `a × b` array of nonnegative integers, weakly decreasing along rows
/// and down columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanePartition {
    rows: Vec<Vec<usize>>,
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::Domain(
                "plane partition must be a nonempty rectangular array".into(),
            ));
        }
        for i in 0..rows.len() {
            for j in 0..width {
                let right = j + 1 < width && rows[i][j + 1] > rows[i][j];
                let down = i + 1 < rows.len() && rows[i + 1][j] > rows[i][j];
                if right || down {
                    return Err(Error::Domain(format!("entries increase at ({i}, {j})")));
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn volume(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn height(&self) -> usize {
        self.rows[0][0]
    }

    pub fn fits(&self, spec: &BoxSpec) -> bool {
        self.rows.len() == spec.a && self.rows[0].len() == spec.b && self.height() <= spec.c
    }
}

/// The `a + b - 1` diagonals `(π_{i, i+k})_i` for `k = 1-a, …, b-1`.
pub fn diagonal_slices(pi: &PlanePartition) -> Vec<Partition> {
    let a = pi.rows.len() as i64;
    let b = pi.rows[0].len() as i64;
    (1 - a..b)
        .map(|k| {
            let parts = (0..a)
                .filter(|&i| (0..b).contains(&(i + k)))
                .map(|i| pi.rows[i as usize][(i + k) as usize])
                .collect();
            Partition::new(parts).expect("diagonals of a plane partition are weakly decreasing")
        })
        .collect()
}

/// `Σ q^{|π|}` over plane partitions in the box, by transfer over slices.
pub fn genfun_box_transfer(spec: &BoxSpec) -> Poly {
    let (a, b, c) = (spec.a as i64, spec.b as i64, spec.c);
    let mut states: BTreeMap<Partition, Poly> = BTreeMap::from([(Partition::empty(), Poly::one())]);
    for k in 1 - a..b {
        let cap = spec.diagonal_length(k);
        let mut next: BTreeMap<Partition, Poly> = BTreeMap::new();
        for (mu, weight) in &states {
            let steps: Vec<Partition> = if k <= 0 {
                (0..=c).flat_map(|j| strips_above(mu, j, c)).collect()
            } else {
                (0..=mu.width()).flat_map(|j| strips_below(mu, j)).collect()
            };
            for lambda in steps.into_iter().filter(|l| l.len() <= cap) {
                let w = weight.mul_ref(&Poly::monomial(lambda.size(), Rational::one()));
                let slot = next.entry(lambda).or_insert_with(Poly::zero);
                *slot = slot.add_ref(&w);
            }
        }
        states = next;
    }
    // The last slice has at most one cell, so it always steps down to ∅.
    states.values().fold(Poly::zero(), |acc, w| acc.add_ref(w))
}

pub fn count_box_transfer(spec: &BoxSpec) -> Rational {
    genfun_box_transfer(spec).coefficient_sum()
}

fn check_budget(spec: &BoxSpec) -> Result<()> {
    let cells = spec.a * spec.b * spec.c;
    if cells > BRUTE_FORCE_BUDGET {
        return Err(Error::Resource(format!(
            "brute force over {spec} exceeds the budget a*b*c <= {BRUTE_FORCE_BUDGET}"
        )));
    }
    Ok(())
}

/// Calls `visit` on every plane partition in the box, row by row.
pub fn for_each_plane_partition(
    spec: &BoxSpec,
    mut visit: impl FnMut(&[Vec<usize>]),
) -> Result<()> {
    check_budget(spec)?;
    let mut rows = vec![vec![0; spec.b]; spec.a];
    fill(spec, 0, &mut rows, &mut visit);
    Ok(())
}

fn fill(
    spec: &BoxSpec,
    cell: usize,
    rows: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if cell == spec.a * spec.b {
        visit(rows);
        return;
    }
    let (i, j) = (cell / spec.b, cell % spec.b);
    let above = if i > 0 { rows[i - 1][j] } else { spec.c };
    let left = if j > 0 { rows[i][j - 1] } else { spec.c };
    for v in 0..=above.min(left) {
        rows[i][j] = v;
        fill(spec, cell + 1, rows, visit);
    }
}

/// `Σ q^{|π|}` by exhaustive enumeration.
pub fn genfun_box_bruteforce(spec: &BoxSpec) -> Result<Poly> {
    let mut by_volume: Vec<i64> = vec![0; spec.a * spec.b * spec.c + 1];
    for_each_plane_partition(spec, |rows| {
        by_volume[rows.iter().flatten().sum::<usize>()] += 1;
    })?;
    Ok(Poly::from_ints(&by_volume))
}

pub fn count_box_bruteforce(spec: &BoxSpec) -> Result<Rational> {
    Ok(genfun_box_bruteforce(spec)?.coefficient_sum())
}

/// `s_{(c^a)}(1^{a+b})`.
pub fn count_box_schur(spec: &BoxSpec) -> Rational {
    let rectangle = Partition::new(vec![spec.c; spec.a]).expect("constant parts");
    schur_eval(&rectangle, &vec![Rational::one(); spec.a + spec.b])
}

/// All routes for one box. The brute-force fields are `None` when the box
/// exceeds [`BRUTE_FORCE_BUDGET`].
#[derive(Clone, PartialEq, Debug)]
pub struct BoxReport {
    pub spec: BoxSpec,
    pub count: Rational,
    pub genfun: Poly,
    pub schur_count: Rational,
    pub brute_genfun: Option<Poly>,
}

impl BoxReport {
    pub fn compute(spec: BoxSpec) -> Self {
        let genfun = genfun_box_transfer(&spec);
        BoxReport {
            spec,
            count: genfun.coefficient_sum(),
            genfun,
            schur_count: count_box_schur(&spec),
            brute_genfun: genfun_box_bruteforce(&spec).ok(),
        }
    }

    pub fn routes_agree(&self) -> bool {
        self.count == self.schur_count
            && self.brute_genfun.as_ref().is_none_or(|g| g == &self.genfun)
    }
}

impl Serialize for BoxReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(4))?;
        m.serialize_entry("box", &[self.spec.a, self.spec.b, self.spec.c])?;
        m.serialize_entry("count", &self.count.to_string())?;
        m.serialize_entry("genfun", &self.genfun.in_variable("q").to_string())?;
        m.serialize_entry("routes_agree", &self.routes_agree())?;
        m.end()
    }
}
