//! The ten acceptance criteria, each run at its stated parameters. Prints
//! one line per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use qboson_core::boxcount::{
    count_box_bruteforce, count_box_schur, count_box_transfer, genfun_box_bruteforce,
    genfun_box_transfer, BoxSpec,
};
use qboson_core::fock::{LVariant, Model};
use qboson_core::sample::Sampler;
use qboson_core::symfunc::{box_sector, pieri_h_matrix, pieri_q_matrix, q_eval};
use qboson_core::verify::*;
use qboson_core::{Rational, Result};

const SEED: u64 = 7;

type Criterion = (&'static str, fn(&mut Tally, &mut Sampler));

/// Collects failures for one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn report(&mut self, r: Result<CheckReport>) {
        self.checks += 1;
        match r {
            Ok(r) if r.passed() => {}
            Ok(r) => self
                .failures
                .push(serde_json::to_string(&r).expect("reports serialize")),
            Err(e) => self.failures.push(format!("error: {e}")),
        }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn c1_rtt(t: &mut Tally, rng: &mut Sampler) {
    for m in 1..=4 {
        let pairs: Vec<_> = (0..5).map(|_| rng.spectral_pair()).collect();
        t.report(verify_rtt(Model::Phase, m, &Rational::zero(), &pairs, 4));
    }
    for tv in [q(1, 4), q(1, 2)] {
        for m in 1..=3 {
            let pairs: Vec<_> = (0..5).map(|_| rng.spectral_pair()).collect();
            t.report(verify_rtt(Model::QBoson, m, &tv, &pairs, 3));
        }
    }
}

fn c2_propositions(t: &mut Tally, _: &mut Sampler) {
    for m in 1..=3 {
        t.report(verify_prop_b(m, 3, LVariant::Standard));
        for tv in [q(1, 4), q(1, 2)] {
            t.report(verify_prop_qb(m, 3, &tv));
        }
        let control = verify_prop_b(m, 3, LVariant::Perturbed)
            .map(|r| CheckReport::negative_control("prop_B", r));
        t.report(control);
        let zero = Rational::zero();
        t.report(verify_prop_qb(m, 3, &zero));
        for n in 0..=3 {
            let (src, dst) = (box_sector(m, n), box_sector(m, n + 1));
            for k in 0..=m {
                let same = pieri_q_matrix(&src, &dst, k, &zero, m).unwrap()
                    == pieri_h_matrix(&src, &dst, k, m).unwrap();
                t.expect(same, format!("t=0 Pieri differs at M={m}, N={n}, k={k}"));
            }
        }
    }
}

fn c3_wavefunctions(t: &mut Tally, rng: &mut Sampler) {
    for (m, n) in [(1, 1), (2, 2), (3, 2), (2, 3)] {
        let u = rng.points(n, |_| true);
        t.report(verify_wavefunction(Model::Phase, m, &Rational::zero(), &u));
        for tv in [q(1, 4), q(1, 2)] {
            t.report(verify_wavefunction(Model::QBoson, m, &tv, &u));
        }
    }
}

fn c4_lemma(t: &mut Tally, rng: &mut Sampler) {
    for m in 1..=3 {
        let u = rng.points(3, |_| true);
        t.report(verify_lemma_abcd(m, &u, 3));
    }
}

fn c5_commutation(t: &mut Tally, rng: &mut Sampler) {
    for m in 1..=3 {
        for _ in 0..5 {
            let (u, v) = rng.spectral_pair();
            t.report(verify_commfin(m, 6, &u, &v, false));
        }
        t.report(verify_hperp_coefficients(m, 6));
        let (u, v) = rng.spectral_pair();
        t.report(
            verify_commfin(m, 6, &u, &v, true).map(|r| CheckReport::negative_control("commfin", r)),
        );
    }
    t.report(verify_hperp_examples(6));
    t.report(verify_hperp_stabilization(4, 3));
}

fn c6_vertex(t: &mut Tally, _: &mut Sampler) {
    t.report(verify_vertex_exp(8));
}

fn c7_cauchy(t: &mut Tally, rng: &mut Sampler) {
    for (nx, ny) in [(2, 2), (2, 3), (3, 3)] {
        let (x, y) = (rng.points(nx, |_| true), rng.points(ny, |_| true));
        t.report(verify_cauchy(8, &x, &y));
        t.report(verify_cauchy_hl(6, &q(1, 2), &x, &y));
    }
}

fn c8_degenerations(t: &mut Tally, rng: &mut Sampler) {
    for m in 1..=3 {
        let x = rng.points(3, |_| true);
        t.report(verify_degenerations(m, 3, &x));
    }
    let x = rng.points(3, |_| true);
    for r in 1..=6 {
        t.expect(
            q_eval(r, &x, &Rational::one()).is_zero(),
            format!("q_{r}(x; 1) is nonzero"),
        );
    }
}

fn c9_boxes(t: &mut Tally, _: &mut Sampler) {
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                let s = BoxSpec::new(a, b, c).unwrap();
                let genfun = genfun_box_transfer(&s);
                let brute = genfun_box_bruteforce(&s).unwrap();
                t.expect(
                    genfun == brute,
                    format!("{s}: transfer {genfun} vs brute force {brute}"),
                );
                let counts = [
                    count_box_transfer(&s),
                    count_box_bruteforce(&s).unwrap(),
                    count_box_schur(&s),
                ];
                t.expect(
                    counts.iter().all(|x| x == &counts[0]),
                    format!("{s}: counts {counts:?}"),
                );
            }
        }
    }
    let two = BoxSpec::new(2, 2, 2).unwrap();
    t.expect(
        count_box_transfer(&two) == Rational::from_int(20),
        "2x2x2 is not 20",
    );
    let three = BoxSpec::new(3, 3, 3).unwrap();
    t.expect(
        count_box_transfer(&three) == Rational::from_int(980),
        "3x3x3 is not 980",
    );
}

fn c10_cli(t: &mut Tally, _: &mut Sampler) {
    let exe = env!("CARGO_BIN_EXE_qboson");
    let run = || {
        Command::new(exe)
            .args(["verify", "--all", "--quick", "--seed", "11"])
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    t.expect(
        first.status.code() == Some(0),
        format!("exit status {:?}", first.status.code()),
    );
    t.expect(
        !first.stdout.is_empty() && first.stdout == second.stdout,
        "quick report differs between runs",
    );
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("RTT relations, phase and q-boson", c1_rtt),
        ("B(u) as H and Q multiplication", c2_propositions),
        ("wave-function expansions", c3_wavefunctions),
        ("phase-model operator identities", c4_lemma),
        ("truncated commutation relation", c5_commutation),
        ("vertex formula", c6_vertex),
        ("Cauchy identities", c7_cauchy),
        ("degenerations t = 0 and t = 1", c8_degenerations),
        ("plane partitions in a box", c9_boxes),
        ("quick suite exit code and stability", c10_cli),
    ];
    let mut rng = Sampler::new(SEED);
    let mut all_ok = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut tally = Tally::default();
        check(&mut tally, &mut rng);
        let ok = tally.failures.is_empty();
        all_ok &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}: {name} ({} checks, {:.2?})",
            i + 1,
            tally.checks,
            start.elapsed()
        );
        for f in &tally.failures {
            println!("    {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
