//! Findings that are reported rather than asserted.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::fock::{
    c_as_adjoint_of_b, fock_norm, fock_norm_linear_vacuum, fock_weights, hall_littlewood_weights,
    site_ops, weighted_adjoint, FockSpace, Model,
};
use crate::ring::Rational;
use crate::{Error, Result};

type Weights = Box<dyn Fn(usize, usize) -> Result<Rational>>;

/// Compares the state norms built from the site normalizations,
/// `[n_0]! / ∏_{j≥1} [n_j]!`, with `[n_0] / ∏_{j≥1} [n_j]!`, over all
/// states with at most `max_n` particles. Also records whether each makes
/// the vacuum-site operators mutually adjoint; the second vanishes when
/// `n_0 = 0`, which leaves the adjoint undefined.
pub fn norm_discrepancy(max_site: usize, max_n: usize, t: &Rational) -> Result<Value> {
    let space = FockSpace::new(max_site, max_n + 1);
    let mut compared = 0usize;
    let mut differing = Vec::new();
    for n in 0..=max_n {
        for i in 0..space.dim(n) {
            let occ = space.occupation(n, i);
            let site = fock_norm(Model::QBoson, t, &occ)?;
            let linear = fock_norm_linear_vacuum(t, &occ)?;
            compared += 1;
            if site != linear {
                differing.push(json!({
                    "occ": occ.counts(),
                    "from_sites": site.to_string(),
                    "linear_vacuum": linear.to_string(),
                }));
            }
        }
    }
    let ops = site_ops::<Rational>(Model::QBoson, &space, 0, t)?;
    let adjoint_under = |weights: Weights| -> Result<Value> {
        match weighted_adjoint(&ops.create, weights) {
            Ok(adj) => Ok(json!(adj
                .first_mismatch(&ops.annihilate, max_n, "vacuum site")?
                .is_none())),
            Err(Error::DivisionByZero) => Ok(json!("undefined: a state has zero norm")),
            Err(e) => Err(e),
        }
    };
    let sp = space.clone();
    let tt = t.clone();
    let linear_weights: Weights =
        Box::new(move |n, i| fock_norm_linear_vacuum(&tt, &sp.occupation(n, i)));
    Ok(json!({
        "M": max_site,
        "N_max": max_n,
        "t": t.to_string(),
        "states": compared,
        "differing": differing.len(),
        "examples": differing.into_iter().take(3).collect::<Vec<_>>(),
        "vacuum_site_adjoint": {
            "from_sites": adjoint_under(Box::new(fock_weights(Model::QBoson, &space, t)))?,
            "linear_vacuum": adjoint_under(linear_weights)?,
        },
    }))
}

/// Tests whether the q-boson `C(u)` is the adjoint of `B(1/u)` for the
/// Fock-state norms and for the Hall–Littlewood pairing `⟨P_λ, P_λ⟩ = 1/b_λ`.
pub fn qboson_adjoint_probe(
    max_site: usize,
    max_n: usize,
    t: &Rational,
    u: &Rational,
) -> Result<Value> {
    let probe = |weights: fn(&Arc<FockSpace>, &Rational) -> Weights| {
        let w = c_as_adjoint_of_b(Model::QBoson, max_site, t, u, max_n, |s| weights(s, t))?;
        Ok::<Value, crate::Error>(match w {
            None => json!({ "holds": true }),
            Some(m) => {
                json!({ "holds": false, "witness": serde_json::to_value(m).expect("serializable") })
            }
        })
    };
    Ok(json!({
        "M": max_site,
        "N_max": max_n,
        "t": t.to_string(),
        "u": u.to_string(),
        "fock_norms": probe(|s, t| Box::new(fock_weights(Model::QBoson, s, t)))?,
        "hall_littlewood": probe(|s, t| Box::new(hall_littlewood_weights(s, t)))?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_norms_differ_from_site_norms() {
        let t = Rational::new(1, 2);
        let r = norm_discrepancy(1, 2, &t).unwrap();
        assert_eq!(r["states"], 6);
        // n_0 = 0 gives [0] = 0; n_0 = 1, 2 agree since [1] = [1]! and [2] = [2]!.
        assert_eq!(r["differing"], 3);
        assert_eq!(r["examples"][0]["occ"], json!([0, 0]));
        assert_eq!(r["examples"][0]["linear_vacuum"], "0");
        assert_eq!(r["vacuum_site_adjoint"]["from_sites"], true);
        assert_eq!(
            r["vacuum_site_adjoint"]["linear_vacuum"],
            "undefined: a state has zero norm"
        );
        let r = norm_discrepancy(1, 3, &t).unwrap();
        assert_eq!(r["differing"], 5);
    }

    #[test]
    fn qboson_c_is_not_a_plain_adjoint() {
        let r = qboson_adjoint_probe(1, 1, &Rational::new(1, 2), &Rational::new(3, 2)).unwrap();
        assert_eq!(r["fock_norms"]["holds"], false);
        assert_eq!(r["hall_littlewood"]["holds"], false);
        let phase = qboson_adjoint_probe(1, 1, &Rational::zero(), &Rational::new(3, 2)).unwrap();
        assert_eq!(phase["fock_norms"]["holds"], true);
    }
}
