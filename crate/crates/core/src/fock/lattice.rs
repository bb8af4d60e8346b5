use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::operator::{FockSpace, GradedOp, Mismatch};
use crate::partitions::OccupationVector;
use crate::ring::{q_integer, Coefficient, Laurent, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Model {
    Phase,
    QBoson,
}

impl Model {
    pub fn label(self) -> &'static str {
        match self {
            Model::Phase => "phase",
            Model::QBoson => "qboson",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phase" => Ok(Model::Phase),
            "qboson" => Ok(Model::QBoson),
            other => Err(Error::Parse(format!("unknown model {other:?}"))),
        }
    }
}

/// Creation, annihilation and number operators of one site.
#[derive(Clone)]
pub struct SiteOps<R> {
    pub create: GradedOp<R>,
    pub annihilate: GradedOp<R>,
    pub number: GradedOp<R>,
}

fn bump(occ: &OccupationVector, site: usize, delta: i64) -> OccupationVector {
    let mut counts = occ.counts().to_vec();
    counts[site] = (counts[site] as i64 + delta) as usize;
    OccupationVector::new(counts)
}

/// Site operators. The phase model uses `φ†|n⟩ = |n+1⟩`, `φ|n⟩ = |n-1⟩`.
/// The q-boson model uses `B†|n⟩ = |n+1⟩`, `B|n⟩ = [n]|n-1⟩` at site 0 and
/// `B†|n⟩ = [n+1]|n+1⟩`, `B|n⟩ = |n-1⟩` at the other sites.
pub fn site_ops<R: Ring>(
    model: Model,
    space: &Arc<FockSpace>,
    site: usize,
    t: &R,
) -> Result<SiteOps<R>> {
    if site > space.max_site() {
        return Err(Error::Domain(format!(
            "site {site} is outside 0..={}",
            space.max_site()
        )));
    }
    let t = match model {
        Model::Phase => R::zero(),
        Model::QBoson => t.clone(),
    };
    let weight = |n: usize| q_integer(n as u32, &t);
    let create = GradedOp::from_action(space, 1, |occ| {
        let n = occ.counts()[site];
        let c = if site == 0 { R::one() } else { weight(n + 1) };
        vec![(bump(occ, site, 1), c)]
    });
    let annihilate = GradedOp::from_action(space, -1, |occ| {
        let n = occ.counts()[site];
        if n == 0 {
            return Vec::new();
        }
        let c = if site == 0 { weight(n) } else { R::one() };
        vec![(bump(occ, site, -1), c)]
    });
    let number = GradedOp::diagonal(space, |occ| R::from_int(occ.counts()[site] as i64));
    Ok(SiteOps {
        create,
        annihilate,
        number,
    })
}

/// Total particle number `N_0 + … + N_M`.
pub fn total_number<R: Ring>(space: &Arc<FockSpace>) -> GradedOp<R> {
    GradedOp::diagonal(space, |occ| R::from_int(occ.particles() as i64))
}

/// A 2×2 matrix with entries in a possibly non-commutative coefficient type.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<C> {
    pub entries: [[C; 2]; 2],
}

impl<C: Coefficient> Mat2<C> {
    pub fn new(a: C, b: C, c: C, d: C) -> Self {
        Mat2 {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn a(&self) -> &C {
        &self.entries[0][0]
    }

    pub fn b(&self) -> &C {
        &self.entries[0][1]
    }

    pub fn c(&self) -> &C {
        &self.entries[1][0]
    }

    pub fn d(&self) -> &C {
        &self.entries[1][1]
    }

    /// Matrix product `self · rhs`, keeping the coefficient order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.entries[i][0]
                .mul_ref(&rhs.entries[0][j])
                .add_ref(&self.entries[i][1].mul_ref(&rhs.entries[1][j]))
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Mat2<D> {
        let [[a, b], [c, d]] = &self.entries;
        Mat2::new(f(a), f(b), f(c), f(d))
    }
}

/// 2×2 matrix of Laurent polynomials in `u` with operator coefficients.
pub type LaurentOpMatrix<R> = Mat2<Laurent<GradedOp<R>>>;

impl<R: Ring> LaurentOpMatrix<R> {
    /// Substitutes `u <- u0` in every entry.
    pub fn eval(&self, u0: &Rational, space: &Arc<FockSpace>) -> Result<Mat2<GradedOp<R>>> {
        let shifts = [0, 1, -1, 0];
        let mut out = Vec::with_capacity(4);
        for (entry, shift) in self.entries.iter().flatten().zip(shifts) {
            let v = entry.eval_coefficient(u0)?;
            out.push(v.unwrap_or_else(|| GradedOp::zero(space, shift)));
        }
        let mut it = out.into_iter();
        let mut next = || it.next().expect("four entries");
        Ok(Mat2::new(next(), next(), next(), next()))
    }
}

/// Variants of the L-matrix used by negative controls.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LVariant {
    Standard,
    /// Upper-left entry `u^{-2}` instead of `u^{-1}`.
    Perturbed,
}

/// `L_n(u)`: `(u^{-1}, φ†_n; φ_n, u)` for the phase model. The q-boson model
/// carries the factor `1 - t` on `B_0` at site 0 and on `B†_n` elsewhere.
pub fn l_matrix<R: Ring>(
    model: Model,
    space: &Arc<FockSpace>,
    site: usize,
    t: &R,
    variant: LVariant,
) -> Result<LaurentOpMatrix<R>> {
    let ops = site_ops(model, space, site, t)?;
    let dressing = match model {
        Model::Phase => R::one(),
        Model::QBoson => R::one().sub_ref(t),
    };
    let (create, annihilate) = if site == 0 {
        (ops.create, ops.annihilate.scale_ring(&dressing))
    } else {
        (ops.create.scale_ring(&dressing), ops.annihilate)
    };
    let id = GradedOp::identity(space);
    let corner = match variant {
        LVariant::Standard => -1,
        LVariant::Perturbed => -2,
    };
    Ok(Mat2::new(
        Laurent::monomial(corner, id.clone()),
        Laurent::monomial(0, create),
        Laurent::monomial(0, annihilate),
        Laurent::monomial(1, id),
    ))
}

/// `T(u) = L_M(u) ⋯ L_0(u)` on the space with sectors up to `cap`.
pub fn monodromy<R: Ring>(
    model: Model,
    max_site: usize,
    t: &R,
    cap: usize,
    variant: LVariant,
) -> Result<(Arc<FockSpace>, LaurentOpMatrix<R>)> {
    let space = FockSpace::new(max_site, cap);
    let t_matrix = monodromy_on(model, &space, t, variant)?;
    Ok((space, t_matrix))
}

pub fn monodromy_on<R: Ring>(
    model: Model,
    space: &Arc<FockSpace>,
    t: &R,
    variant: LVariant,
) -> Result<LaurentOpMatrix<R>> {
    let mut acc = l_matrix(model, space, 0, t, variant)?;
    for site in 1..=space.max_site() {
        acc = l_matrix(model, space, site, t, variant)?.mul(&acc);
    }
    Ok(acc)
}

/// The R-matrix at `(u0, v0)` in the basis `e_1⊗e_1, e_1⊗e_2, e_2⊗e_1,
/// e_2⊗e_2`. For the q-boson model this is `q·R`, which depends on `t = q²`
/// only; at `t = 0` both models agree.
pub fn r_matrix<R: Ring>(model: Model, u0: &Rational, v0: &Rational, t: &R) -> Result<[[R; 4]; 4]> {
    let (u2, v2) = (u0 * u0, v0 * v0);
    let denom = &u2 - &v2;
    if denom.is_zero() {
        return Err(Error::Domain(format!(
            "R-matrix is singular at u = {u0}, v = {v0} (u² = v²)"
        )));
    }
    let inv = denom.recip()?;
    let t = match model {
        Model::Phase => R::zero(),
        Model::QBoson => t.clone(),
    };
    let one = R::one();
    // f = (u² - t v²)/(u² - v²), g = uv(1 - t)/(u² - v²)
    let f = R::from_rational(&u2).sub_ref(&t.scale(&v2)).scale(&inv);
    let g = one.sub_ref(&t).scale(&(u0 * v0 * &inv));
    let z = R::zero();
    Ok([
        [f.clone(), z.clone(), z.clone(), z.clone()],
        [z.clone(), g.clone(), one, z.clone()],
        [z.clone(), t, g, z.clone()],
        [z.clone(), z.clone(), z, f],
    ])
}

/// `(X⊗Y)_{(i,k),(j,l)} = X_ij Y_kl` on the same Fock space, on source
/// sectors `<= max_n`.
fn tensor<R: Ring>(
    x: &Mat2<GradedOp<R>>,
    y: &Mat2<GradedOp<R>>,
    max_n: usize,
) -> Vec<Vec<GradedOp<R>>> {
    let y = y.map(|op| op.restrict_sources(max_n));
    let mut out: Vec<Vec<GradedOp<R>>> = (0..4).map(|_| Vec::with_capacity(4)).collect();
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out[2 * i + k].push(x.entries[i][j].compose(&y.entries[k][l]));
                }
            }
        }
    }
    out
}

fn scalar_times<R: Ring>(
    r: &[[R; 4]; 4],
    m: &[Vec<GradedOp<R>>],
    left: bool,
) -> Vec<Vec<GradedOp<R>>> {
    (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let mut acc: Option<GradedOp<R>> = None;
                    for c in 0..4 {
                        let (coef, op) = if left {
                            (&r[a][c], &m[c][b])
                        } else {
                            (&r[c][b], &m[a][c])
                        };
                        if coef.is_zero() {
                            continue;
                        }
                        let term = op.scale_ring(coef);
                        acc = Some(match acc {
                            Some(s) => s.add_ref(&term),
                            None => term,
                        });
                    }
                    acc.unwrap_or_else(|| m[a][b].scale_ring(&R::zero()))
                })
                .collect()
        })
        .collect()
}

/// `R(X(u)⊗X(v)) = (X(v)⊗X(u))R` on sectors `<= max_n`.
pub fn rtt_mismatch<R: Ring>(
    r: &[[R; 4]; 4],
    at_u: &Mat2<GradedOp<R>>,
    at_v: &Mat2<GradedOp<R>>,
    max_n: usize,
    relation: &str,
) -> Result<Option<Mismatch>> {
    let lhs = scalar_times(r, &tensor(at_u, at_v, max_n), true);
    let rhs = scalar_times(r, &tensor(at_v, at_u, max_n), false);
    for a in 0..4 {
        for b in 0..4 {
            if let Some(m) = lhs[a][b].first_mismatch(
                &rhs[a][b],
                max_n,
                &format!("{relation} entry ({a},{b})"),
            )? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

/// Per-site and monodromy RTT relations at each `(u, v)` pair on sectors
/// `<= max_n`. Returns the index of the first failing pair with its first
/// failing entry.
pub fn check_rtt<R: Ring>(
    model: Model,
    max_site: usize,
    t: &R,
    pairs: &[(Rational, Rational)],
    max_n: usize,
) -> Result<Option<(usize, Mismatch)>> {
    let rs = pairs
        .iter()
        .map(|(u, v)| r_matrix(model, u, v, t))
        .collect::<Result<Vec<_>>>()?;
    let space = FockSpace::new(max_site, max_n + 2);
    let sites = (0..=max_site)
        .map(|site| l_matrix(model, &space, site, t, LVariant::Standard))
        .collect::<Result<Vec<_>>>()?;
    let t_matrix = monodromy_on(model, &space, t, LVariant::Standard)?;
    for (i, ((u0, v0), r)) in pairs.iter().zip(&rs).enumerate() {
        for (site, l) in sites.iter().enumerate() {
            let (lu, lv) = (l.eval(u0, &space)?, l.eval(v0, &space)?);
            if let Some(m) = rtt_mismatch(r, &lu, &lv, max_n, &format!("RLL site {site}"))? {
                return Ok(Some((i, m)));
            }
        }
        let (tu, tv) = (t_matrix.eval(u0, &space)?, t_matrix.eval(v0, &space)?);
        if let Some(m) = rtt_mismatch(r, &tu, &tv, max_n, "RTT")? {
            return Ok(Some((i, m)));
        }
    }
    Ok(None)
}

/// First disagreement between two operator-valued Laurent polynomials on
/// sectors `<= max_n`, compared coefficientwise in `u`.
pub fn laurent_mismatch<R: Ring>(
    lhs: &Laurent<GradedOp<R>>,
    rhs: &Laurent<GradedOp<R>>,
    space: &Arc<FockSpace>,
    max_n: usize,
    relation: &str,
) -> Result<Option<Mismatch>> {
    let mut exps: Vec<i32> = lhs
        .terms()
        .map(|(e, _)| e)
        .chain(rhs.terms().map(|(e, _)| e))
        .collect();
    exps.sort_unstable();
    exps.dedup();
    for e in exps {
        let zero =
            |other: Option<&GradedOp<R>>| GradedOp::zero(space, other.map_or(0, GradedOp::shift));
        let a = lhs.coeff(e).cloned().unwrap_or_else(|| zero(rhs.coeff(e)));
        let b = rhs.coeff(e).cloned().unwrap_or_else(|| zero(lhs.coeff(e)));
        if let Some(m) = a.first_mismatch(&b, max_n, &format!("{relation} at u^{e}"))? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
