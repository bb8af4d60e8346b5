//! Exact, finitely parameterized checks of the identities relating the
//! lattice models to symmetric functions. Every check returns a
//! [`CheckReport`], passing or failing, with a witness on failure.

mod diagnostics;
mod lattice;
mod suite;
mod symmetric;

pub use diagnostics::{norm_discrepancy, qboson_adjoint_probe};
pub use lattice::{
    verify_db_exchange, verify_degenerations, verify_lemma_abcd, verify_number_shift,
    verify_prop_b, verify_prop_qb, verify_rtt, verify_site_adjointness, verify_wavefunction,
};
pub use suite::{boxcount_report, suite, Grid, Job};
pub use symmetric::{
    verify_cauchy, verify_cauchy_hl, verify_commfin, verify_hperp_coefficients,
    verify_hperp_examples, verify_hperp_stabilization, verify_vertex_exp,
};

use serde::Serialize;
use serde_json::Value;

use crate::fock::Mismatch;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one check. `params` is a JSON object, serialized with sorted
/// keys; `witness` is present exactly when the verdict is `Fail`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub params: Value,
    pub verdict: Verdict,
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn new(identity: impl Into<String>, params: Value, witness: Option<Value>) -> Self {
        let verdict = if witness.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        CheckReport {
            identity: identity.into(),
            params,
            verdict,
            witness,
        }
    }

    pub fn from_mismatch(identity: impl Into<String>, params: Value, m: Option<Mismatch>) -> Self {
        Self::new(
            identity,
            params,
            m.map(|m| serde_json::to_value(m).expect("mismatch serializes")),
        )
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Wraps a check that is expected to fail: passes when `inner` fails
    /// with a witness, which is recorded under `params.observed`.
    pub fn negative_control(identity: impl Into<String>, inner: CheckReport) -> Self {
        let mut params = inner.params.clone();
        let observed = inner.witness.clone();
        if let Value::Object(map) = &mut params {
            map.insert("observed".into(), observed.clone().unwrap_or(Value::Null));
        }
        let witness = match observed {
            Some(_) => None,
            None => Some(Value::String(
                "the perturbed identity unexpectedly holds".into(),
            )),
        };
        Self::new(identity, params, witness)
    }
}

fn rationals(v: &[crate::Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(r.to_string())).collect())
}
