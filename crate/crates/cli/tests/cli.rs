use qboson_cli::{run, Outcome, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn qboson(args: &str) -> Outcome {
    run(std::iter::once("qboson").chain(args.split_whitespace()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out.stdout))
}

#[test]
fn eval_schur() {
    let out = qboson("eval schur --partition 2,2 --at 1,1,1");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "\"6\"\n");
    let out = qboson("eval hl_p --partition 1 --at 1/2,-1/3 --t 1/2");
    assert_eq!(json(&out), "1/6");
    assert_eq!(qboson("eval hl_q --partition 1 --at 1").code, EXIT_USAGE);
}

#[test]
fn boxcount() {
    let out = qboson("boxcount --box 2 2 2");
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["count"], "20");
    assert_eq!(v["box"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["routes_agree"], true);
    assert_eq!(qboson("boxcount --box 2 0 2").code, EXIT_USAGE);
    assert_eq!(qboson("boxcount --box 2 2").code, EXIT_USAGE);
}

#[test]
fn single_identity() {
    let out = qboson("verify --identity prop_B --M 2 --N 3");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        serde_json::to_string(&json(&out)).unwrap(),
        r#"{"identity":"prop_B","params":{"M":2,"N_max":3},"verdict":"pass","witness":null}"#
    );
    for id in [
        "rtt",
        "commfin",
        "cauchy_hl",
        "hperp_examples",
        "lemma_abcd",
        "wavefunction",
    ] {
        assert_eq!(
            qboson(&format!("verify --identity {id}")).code,
            EXIT_OK,
            "{id}"
        );
    }
    let out = qboson("verify --identity rtt --model qboson --t 1/3 --M 1 --N 2 --u 2 --v -3");
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(
        qboson("verify --identity boxcount --box 1 2 3").code,
        EXIT_OK
    );
}

#[test]
fn usage_errors() {
    let out = qboson("verify --identity rtt --t 1/x");
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("malformed rational"));
    assert_eq!(qboson("verify --identity rtt --t 1/0").code, EXIT_USAGE);
    assert_eq!(qboson("verify --identity nonsense").code, EXIT_USAGE);
    assert_eq!(qboson("verify").code, EXIT_USAGE);
    assert_eq!(qboson("frobnicate").code, EXIT_USAGE);
    // The exchange relation excludes u² = v².
    assert_eq!(
        qboson("verify --identity db_exchange --u 2 --v -2").code,
        EXIT_USAGE
    );
    assert_eq!(qboson("--help").code, EXIT_OK);
}

#[test]
fn repeated_points_and_small_grids() {
    let out = qboson("verify --identity wavefunction --model qboson --t 1/2 --M 1 --u 2,2");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        qboson("verify --identity hperp_stabilization --D 2 --N 1").code,
        EXIT_OK
    );
}

#[test]
fn wavefunction_output() {
    let out = qboson("wavefunction --model phase --M 1 --u 2");
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["state"]["terms"][0]["coeff"], "1/2");
    assert_eq!(v["state"]["terms"][1]["coeff"], "2");
    assert_eq!(
        qboson("wavefunction --model qboson --M 1 --u 2").code,
        EXIT_USAGE
    );
}

#[test]
fn report_flags_findings() {
    let out = qboson("report --M 1 --N 2 --t 1/2 --u 3/2");
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["norms"]["differing"], 3);
    assert_eq!(v["qboson_c_adjoint"]["hall_littlewood"]["holds"], false);
}

#[test]
fn quick_suite_is_deterministic() {
    let a = qboson("verify --all --quick --seed 3");
    let b = qboson("verify --all --quick --seed 3");
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a, b);
    let v = json(&a);
    let names: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["identity"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(v["failed"], 0);
}
