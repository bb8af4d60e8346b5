//! Argument handling and dispatch for the `qboson` binary. [`run`] does all
//! the work and returns the exit code with the text for each stream, so
//! tests can drive it without spawning a process.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use qboson_core::boxcount::{BoxReport, BoxSpec};
use qboson_core::fock::{wavefunction, LVariant, Model};
use qboson_core::sample::Sampler;
use qboson_core::symfunc::{hl_eval, hl_q_eval, monomial_eval, schur_eval};
use qboson_core::verify::{self, CheckReport, Grid};
use qboson_core::{Error, Partition, Rational};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const IDENTITIES: &[&str] = &[
    "boxcount",
    "cauchy",
    "cauchy_hl",
    "commfin",
    "db_exchange",
    "degenerations",
    "hperp_coefficients",
    "hperp_examples",
    "hperp_stabilization",
    "lemma_abcd",
    "number_shift",
    "prop_B",
    "prop_qB",
    "rtt",
    "site_adjointness",
    "vertex_exp",
    "wavefunction",
];

#[derive(Parser, Debug)]
#[command(
    name = "qboson",
    version,
    about = "Exact checks of the phase and q-boson models against symmetric functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one identity check, or the whole suite with --all.
    Verify(VerifyArgs),
    /// Evaluate a symmetric function at rational points.
    Eval(EvalArgs),
    /// Expand B(u_1)...B(u_N)|0> in occupation states.
    Wavefunction(WaveArgs),
    /// Count plane partitions in an a x b x c box.
    Boxcount(BoxArgs),
    /// Print the norm and adjointness diagnostics.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Phase,
    Qboson,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Phase => Model::Phase,
            ModelArg::Qboson => Model::QBoson,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "phase")]
    model: ModelArg,
    /// Hall–Littlewood parameter, `p` or `p/q`.
    #[arg(long, value_parser = parse_rational)]
    t: Option<Rational>,
    /// Largest site index.
    #[arg(long = "M")]
    m: Option<usize>,
    /// Particle number, or the largest sector checked.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Largest symmetric-function degree.
    #[arg(long = "D")]
    d: Option<usize>,
    /// Spectral parameters, comma separated.
    #[arg(long, value_parser = parse_rational, value_delimiter = ',', allow_hyphen_values = true)]
    u: Vec<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    v: Option<Rational>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON (always on).
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    identity: Option<String>,
    #[arg(long)]
    all: bool,
    /// Small grid for --all.
    #[arg(long, requires = "all")]
    quick: bool,
    #[arg(long = "box", num_args = 3, value_names = ["A", "B", "C"])]
    box_dims: Vec<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EvalKind {
    Schur,
    Monomial,
    #[value(name = "hl_p")]
    HlP,
    #[value(name = "hl_q")]
    HlQ,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(value_enum)]
    kind: EvalKind,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    #[arg(long, value_parser = parse_rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    at: Vec<Rational>,
    #[arg(long, value_parser = parse_rational)]
    t: Option<Rational>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct WaveArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct BoxArgs {
    #[arg(long = "box", num_args = 3, required = true, value_names = ["A", "B", "C"])]
    box_dims: Vec<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[command(flatten)]
    common: Common,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::from_str(s).map_err(|e| e.to_string())
}

/// Exit code and the text written to each stream.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: i32, body: &Value) -> Self {
        let mut stdout = serde_json::to_string_pretty(body).expect("JSON values serialize");
        stdout.push('\n');
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Domain(_) | Error::TypeMismatch { .. } => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Eval(a) => run_eval(a),
        Command::Wavefunction(a) => run_wavefunction(a),
        Command::Boxcount(a) => run_boxcount(&a.box_dims),
        Command::Report(a) => run_report(a),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn check_outcome(report: &CheckReport) -> Outcome {
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Outcome::json(
        code,
        &serde_json::to_value(report).expect("reports serialize"),
    )
}

fn run_verify(a: VerifyArgs) -> Result<Outcome, Error> {
    if a.all {
        return Ok(run_suite(
            if a.quick { Grid::Quick } else { Grid::Full },
            a.common.seed,
        ));
    }
    let name = a.identity.expect("clap requires --identity without --all");
    if !IDENTITIES.contains(&name.as_str()) {
        return Ok(Outcome::usage(format!(
            "unknown identity {name:?}; expected one of {}",
            IDENTITIES.join(", ")
        )));
    }
    if name == "boxcount" {
        let [x, y, z] = box_dims(&a.box_dims)
            .ok_or_else(|| Error::Domain("boxcount needs --box A B C".into()))?;
        return Ok(check_outcome(&verify::boxcount_report(x, y, z)?));
    }
    Ok(check_outcome(&single_check(&name, &a.common)?))
}

fn box_dims(v: &[usize]) -> Option<[usize; 3]> {
    v.try_into().ok()
}

fn single_check(name: &str, c: &Common) -> Result<CheckReport, Error> {
    let mut rng = Sampler::new(c.seed);
    let m = c.m.unwrap_or(2);
    let n = c.n.unwrap_or(2);
    let d = c.d.unwrap_or(4);
    let model = Model::from(c.model);
    let t = c.t.clone().unwrap_or_else(|| Rational::new(1, 2));
    let model_t = if model == Model::Phase {
        Rational::zero()
    } else {
        t.clone()
    };
    let mut points = |k: usize| {
        if c.u.is_empty() {
            rng.points(k, |_| true)
        } else {
            c.u.clone()
        }
    };
    let pair = |rng: &mut Sampler| match (c.u.first(), &c.v) {
        (Some(u), Some(v)) => (u.clone(), v.clone()),
        _ => rng.spectral_pair(),
    };
    match name {
        "rtt" => {
            let pairs: Vec<_> = match (c.u.first(), &c.v) {
                (Some(u), Some(v)) => vec![(u.clone(), v.clone())],
                _ => (0..5).map(|_| rng.spectral_pair()).collect(),
            };
            verify::verify_rtt(model, m, &model_t, &pairs, n)
        }
        "prop_B" => verify::verify_prop_b(m, n, LVariant::Standard),
        "prop_qB" => verify::verify_prop_qb(m, n, &t),
        "wavefunction" => {
            let u = points(n);
            verify::verify_wavefunction(model, m, &model_t, &u)
        }
        "lemma_abcd" => {
            let u = points(3);
            verify::verify_lemma_abcd(m, &u, n)
        }
        "db_exchange" => {
            let (u, v) = pair(&mut rng);
            verify::verify_db_exchange(m, &u, &v, n)
        }
        "degenerations" => {
            let x = points(3);
            verify::verify_degenerations(m, n, &x)
        }
        "number_shift" => verify::verify_number_shift(model, m, &model_t, n),
        "site_adjointness" => verify::verify_site_adjointness(model, m, &model_t, n),
        "commfin" => {
            let (u, v) = pair(&mut rng);
            verify::verify_commfin(m, d, &u, &v, false)
        }
        "hperp_coefficients" => verify::verify_hperp_coefficients(m, d),
        "hperp_examples" => verify::verify_hperp_examples(d),
        "hperp_stabilization" => verify::verify_hperp_stabilization(d, n),
        "vertex_exp" => verify::verify_vertex_exp(d),
        "cauchy" | "cauchy_hl" => {
            let x = points(3);
            let y = rng.points(3, |_| true);
            if name == "cauchy" {
                verify::verify_cauchy(d, &x, &y)
            } else {
                verify::verify_cauchy_hl(d, &t, &x, &y)
            }
        }
        _ => unreachable!("identity names are validated against IDENTITIES"),
    }
}

/// Runs the suite in parallel; reports keep the suite's order.
pub fn suite_json(grid: Grid, seed: u64) -> (bool, Value) {
    let jobs = verify::suite(grid, seed);
    let reports: Vec<CheckReport> = jobs
        .par_iter()
        .map(|job| {
            (job.run)().unwrap_or_else(|e| {
                CheckReport::new(
                    job.identity.clone(),
                    json!({}),
                    Some(json!({ "error": e.to_string() })),
                )
            })
        })
        .collect();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let body = json!({
        "grid": if grid == Grid::Quick { "quick" } else { "full" },
        "seed": seed,
        "checks": reports.len(),
        "failed": failed,
        "reports": reports,
    });
    (failed == 0, body)
}

fn run_suite(grid: Grid, seed: u64) -> Outcome {
    let (ok, body) = suite_json(grid, seed);
    Outcome::json(if ok { EXIT_OK } else { EXIT_CHECK_FAILED }, &body)
}

fn run_eval(a: EvalArgs) -> Result<Outcome, Error> {
    let t = || {
        a.t.clone()
            .ok_or_else(|| Error::Domain("Hall–Littlewood evaluation needs --t".into()))
    };
    let value = match a.kind {
        EvalKind::Schur => schur_eval(&a.partition, &a.at),
        EvalKind::Monomial => monomial_eval(&a.partition, &a.at),
        EvalKind::HlP => hl_eval(&a.partition, &a.at, &t()?),
        EvalKind::HlQ => hl_q_eval(&a.partition, &a.at, &t()?),
    };
    Ok(Outcome::json(EXIT_OK, &json!(value.to_string())))
}

fn run_wavefunction(a: WaveArgs) -> Result<Outcome, Error> {
    let c = &a.common;
    let model = Model::from(c.model);
    let m = c.m.unwrap_or(2);
    let u = if c.u.is_empty() {
        Sampler::new(c.seed).points(c.n.unwrap_or(2), |_| true)
    } else {
        c.u.clone()
    };
    let t = match model {
        Model::Phase => Rational::zero(),
        Model::QBoson => {
            c.t.clone()
                .ok_or_else(|| Error::Domain("the q-boson model needs --t".into()))?
        }
    };
    let psi = wavefunction(model, m, &t, &u)?;
    let body = json!({
        "model": model.label(),
        "u": u.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "state": serde_json::to_value(&psi).expect("vectors serialize"),
    });
    Ok(Outcome::json(EXIT_OK, &body))
}

fn run_boxcount(dims: &[usize]) -> Result<Outcome, Error> {
    let [a, b, c] =
        box_dims(dims).ok_or_else(|| Error::Domain("--box takes three sides".into()))?;
    let report = BoxReport::compute(BoxSpec::new(a, b, c)?);
    let code = if report.routes_agree() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok(Outcome::json(
        code,
        &serde_json::to_value(&report).expect("reports serialize"),
    ))
}

fn run_report(a: ReportArgs) -> Result<Outcome, Error> {
    let c = &a.common;
    let m = c.m.unwrap_or(2);
    let n = c.n.unwrap_or(2);
    let t = c.t.clone().unwrap_or_else(|| Rational::new(1, 2));
    let u =
        c.u.first()
            .cloned()
            .unwrap_or_else(|| Sampler::new(c.seed).rational_where(|x| !x.abs().is_one()));
    let body = json!({
        "norms": verify::norm_discrepancy(m, n, &t)?,
        "qboson_c_adjoint": verify::qboson_adjoint_probe(m, n, &t, &u)?,
    });
    Ok(Outcome::json(EXIT_OK, &body))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_exits_one() {
        let fail = CheckReport::new("prop_B", json!({}), Some(json!("witness")));
        assert_eq!(check_outcome(&fail).code, EXIT_CHECK_FAILED);
        let pass = CheckReport::new("prop_B", json!({}), None);
        assert_eq!(check_outcome(&pass).code, EXIT_OK);
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(Outcome::error(&Error::Domain("x".into())).code, EXIT_USAGE);
        assert_eq!(
            Outcome::error(&Error::Resource("x".into())).code,
            EXIT_CHECK_FAILED
        );
    }
}
