use serde_json::json;

use super::*;
use crate::boxcount::{BoxReport, BoxSpec};
use crate::fock::{LVariant, Model};
use crate::ring::{Poly, Rational};
use crate::sample::Sampler;
use crate::Result;

/// Parameter ranges for [`suite`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grid {
    /// `M <= 2`, `N <= 2`, `D <= 4`, `t ∈ {0, 1/2}`.
    Quick,
    Full,
}

struct Sizes {
    sites: Vec<usize>,
    max_n: usize,
    degree: usize,
    pairs: usize,
    ts: Vec<Rational>,
    wave_shapes: Vec<(usize, usize)>,
    box_side: usize,
}

impl Grid {
    fn sizes(self) -> Sizes {
        match self {
            Grid::Quick => Sizes {
                sites: vec![1, 2],
                max_n: 2,
                degree: 4,
                pairs: 2,
                ts: vec![Rational::zero(), Rational::new(1, 2)],
                wave_shapes: vec![(1, 1), (2, 2)],
                box_side: 2,
            },
            Grid::Full => Sizes {
                sites: vec![1, 2, 3],
                max_n: 3,
                degree: 6,
                pairs: 5,
                ts: vec![Rational::zero(), Rational::new(1, 4), Rational::new(1, 2)],
                wave_shapes: vec![(1, 1), (2, 2), (3, 2), (2, 3)],
                box_side: 3,
            },
        }
    }
}

/// One deferred check.
pub struct Job {
    pub identity: String,
    pub run: Box<dyn Fn() -> Result<CheckReport> + Send + Sync>,
}

impl Job {
    fn new(identity: &str, run: impl Fn() -> Result<CheckReport> + Send + Sync + 'static) -> Self {
        Job {
            identity: identity.to_string(),
            run: Box::new(run),
        }
    }
}

/// Every identity over the grid, with sample points drawn from `seed`.
/// Jobs are sorted by identity name; jobs sharing a name keep their
/// construction order.
pub fn suite(grid: Grid, seed: u64) -> Vec<Job> {
    let s = grid.sizes();
    let mut rng = Sampler::new(seed);
    let mut jobs = Vec::new();
    let half = Rational::new(1, 2);

    for &m in &s.sites {
        let pairs: Vec<(Rational, Rational)> = (0..s.pairs).map(|_| rng.spectral_pair()).collect();
        let p = pairs.clone();
        jobs.push(Job::new("rtt", move || {
            verify_rtt(Model::Phase, m, &Rational::zero(), &p, s_max(m))
        }));
        for t in s.ts.iter().filter(|t| !t.is_zero()) {
            let (p, t) = (pairs.clone(), t.clone());
            let n = s.max_n;
            jobs.push(Job::new("rtt", move || {
                verify_rtt(Model::QBoson, m, &t, &p, n)
            }));
        }

        let n = s.max_n;
        jobs.push(Job::new("prop_B", move || {
            verify_prop_b(m, n, LVariant::Standard)
        }));
        jobs.push(Job::new("prop_B_perturbed", move || {
            Ok(CheckReport::negative_control(
                "prop_B_perturbed",
                verify_prop_b(m, n, LVariant::Perturbed)?,
            ))
        }));
        for t in s.ts.iter().filter(|t| !t.is_zero()) {
            let t = t.clone();
            jobs.push(Job::new("prop_qB", move || verify_prop_qb(m, n, &t)));
        }
        jobs.push(Job::new("prop_qB", move || {
            verify_prop_qb(m, n, &Poly::t())
        }));

        let points = rng.points(3, |_| true);
        jobs.push(Job::new("lemma_abcd", move || {
            verify_lemma_abcd(m, &points, n)
        }));
        let (u, v) = rng.spectral_pair();
        jobs.push(Job::new("db_exchange", move || {
            verify_db_exchange(m, &u, &v, n)
        }));
        let x = rng.points(3, |_| true);
        jobs.push(Job::new("degenerations", move || {
            verify_degenerations(m, n, &x)
        }));
        jobs.push(Job::new("number_shift", move || {
            verify_number_shift(Model::Phase, m, &Rational::zero(), n)
        }));
        jobs.push(Job::new("number_shift", move || {
            verify_number_shift(Model::QBoson, m, &Poly::t(), n)
        }));
        for t in &s.ts {
            let model = if t.is_zero() {
                Model::Phase
            } else {
                Model::QBoson
            };
            let t = t.clone();
            jobs.push(Job::new("site_adjointness", move || {
                verify_site_adjointness(model, m, &t, n)
            }));
        }

        let d = s.degree;
        for _ in 0..s.pairs {
            let (u, v) = rng.spectral_pair();
            jobs.push(Job::new("commfin", move || {
                verify_commfin(m, d, &u, &v, false)
            }));
        }
        let (u, v) = rng.spectral_pair();
        jobs.push(Job::new("commfin_no_correction", move || {
            Ok(CheckReport::negative_control(
                "commfin_no_correction",
                verify_commfin(m, d, &u, &v, true)?,
            ))
        }));
        jobs.push(Job::new("hperp_coefficients", move || {
            verify_hperp_coefficients(m, d)
        }));
    }

    for &(m, n) in &s.wave_shapes {
        let u = rng.points(n, |_| true);
        for t in &s.ts {
            let model = if t.is_zero() {
                Model::Phase
            } else {
                Model::QBoson
            };
            let (t, u) = (t.clone(), u.clone());
            jobs.push(Job::new("wavefunction", move || {
                verify_wavefunction(model, m, &t, &u)
            }));
        }
        let u = u.clone();
        let t = half.clone();
        jobs.push(Job::new("wavefunction", move || {
            verify_wavefunction(Model::QBoson, m, &t, &u)
        }));
    }

    let d = s.degree;
    jobs.push(Job::new("hperp_examples", move || verify_hperp_examples(d)));
    let stab_degree = d.min(4);
    jobs.push(Job::new("hperp_stabilization", move || {
        verify_hperp_stabilization(stab_degree, 2)
    }));
    let vertex_degree = if grid == Grid::Full { 8 } else { d };
    jobs.push(Job::new("vertex_exp", move || {
        verify_vertex_exp(vertex_degree)
    }));

    let cauchy_degree = if grid == Grid::Full { 8 } else { d };
    let (x, y) = (rng.points(3, |_| true), rng.points(3, |_| true));
    jobs.push(Job::new("cauchy", move || {
        verify_cauchy(cauchy_degree, &x, &y)
    }));
    for t in s.ts.iter().filter(|t| !t.is_zero()) {
        let t = t.clone();
        let (x, y) = (rng.points(2, |_| true), rng.points(3, |_| true));
        jobs.push(Job::new("cauchy_hl", move || {
            verify_cauchy_hl(d, &t, &x, &y)
        }));
    }

    for a in 1..=s.box_side {
        for b in 1..=s.box_side {
            for c in 1..=s.box_side {
                jobs.push(Job::new("boxcount", move || boxcount_report(a, b, c)));
            }
        }
    }

    jobs.sort_by(|x, y| x.identity.cmp(&y.identity));
    jobs
}

/// Phase-model RTT sectors grow quickly; the grid caps `N` by `M`.
fn s_max(max_site: usize) -> usize {
    if max_site >= 3 {
        3
    } else {
        2
    }
}

/// Transfer, brute-force and Schur routes as a check.
pub fn boxcount_report(a: usize, b: usize, c: usize) -> Result<CheckReport> {
    let r = BoxReport::compute(BoxSpec::new(a, b, c)?);
    let params = json!({ "box": [a, b, c], "count": r.count.to_string() });
    let witness = (!r.routes_agree()).then(|| {
        json!({
            "transfer": r.genfun.in_variable("q").to_string(),
            "bruteforce": r.brute_genfun.as_ref().map(|g| g.in_variable("q").to_string()),
            "schur": r.schur_count.to_string(),
        })
    });
    Ok(CheckReport::new("boxcount", params, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deterministic() {
        let a = suite(Grid::Quick, 7);
        let names: Vec<&str> = a.iter().map(|j| j.identity.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        let b = suite(Grid::Quick, 7);
        let ra: Vec<CheckReport> = a.iter().take(5).map(|j| (j.run)().unwrap()).collect();
        let rb: Vec<CheckReport> = b.iter().take(5).map(|j| (j.run)().unwrap()).collect();
        assert_eq!(ra, rb);
    }

    #[test]
    fn box_report() {
        let r = boxcount_report(2, 2, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.params["count"], "20");
    }
}
