use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::pattern::Pattern;
use crate::graph::{VertexSet, View};
use crate::oracle::{self, ClassParams, HittingCertificate};
use crate::ramsey::{ramsey_extract, RamseyKind};

use super::bounds::psi_star_bound;
use super::{diagnose, gate, CheckMode};

/// `N[v]` for a vertex `v` of minimum degree in a `K_{1,s}`-free graph.
/// Every degree is below `ω^s`, so `|N[v]| ≤ ω^s`.
pub fn star_free_hitting(view: &View<'_>, s: usize, mode: CheckMode) -> Result<HittingCertificate> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let pattern = Pattern::Star(s);
    gate(view, &pattern, mode)?;
    let w = star_set(view, s)?;
    let omega = oracle::omega_number(view);
    let params = ClassParams { c: omega, s: Some(s), t: None };
    diagnose(view, &pattern, HittingCertificate::certify(view, w, "star", params, psi_star_bound(omega, s)))
}

pub(crate) fn star_set(view: &View<'_>, s: usize) -> Result<VertexSet> {
    let omega = oracle::omega_number(view);
    let limit = psi_star_bound(omega, s);
    if let Some(v) = view.vertices().iter().find(|&v| BigUint::from(view.degree(v)) >= limit) {
        return Err(star_witness(view, v, omega, s));
    }
    let v = view
        .vertices()
        .iter()
        .min_by_key(|&v| view.degree(v))
        .ok_or(Error::EmptyGraph)?;
    Ok(view.closed_neighbours(v))
}

/// `v` has at least `ω^s` neighbours and no `ω`-clique among them, so a
/// stable `s`-set exists there and completes a `K_{1,s}` with `v`.
fn star_witness(view: &View<'_>, v: usize, omega: usize, s: usize) -> Error {
    let nbhd = view.restrict(view.neighbours(v));
    match ramsey_extract(&nbhd, omega, s) {
        Ok(out) if out.kind == RamseyKind::Stable => {
            let mut witness = vec![v];
            witness.extend(out.witness.iter().take(s));
            Error::NotInClass {
                class: Pattern::Star(s).to_string(),
                witness,
            }
        }
        _ => Error::Assertion {
            step: "degree bound",
            detail: format!("vertex {v} has degree {} but omega^s = {omega}^{s}", view.degree(v)),
            witness: view.closed_neighbours(v),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pattern::is_induced_embedding;
    use crate::graph::Graph;

    #[test]
    fn star_examples() {
        let k4 = Graph::complete(4).unwrap();
        let cert = star_free_hitting(&k4.view(), 2, CheckMode::Auto).unwrap();
        assert_eq!(cert.hitting_set, k4.vertices());
        assert_eq!(cert.claimed_bound, BigUint::from(16u32));

        let c5 = Graph::cycle(5).unwrap();
        let cert = star_free_hitting(&c5.view(), 3, CheckMode::Auto).unwrap();
        assert_eq!(cert.size(), 3);
        assert!(oracle::verify_hitting_set(&c5.view(), cert.hitting_set).unwrap());
    }

    #[test]
    fn star_violation_has_witness() {
        let claw = Pattern::Star(3).graph();
        match star_free_hitting(&claw.view(), 3, CheckMode::Strict) {
            Err(Error::NotInClass { witness, .. }) => assert!(is_induced_embedding(&claw, &claw, &witness)),
            other => panic!("{other:?}"),
        }
        // Lazily, the claw slips through the degree test but the set still hits.
        let cert = star_free_hitting(&claw.view(), 3, CheckMode::Lazy).unwrap();
        assert!(oracle::verify_hitting_set(&claw.view(), cert.hitting_set).unwrap());

        // K_{1,4} with s = 2: the centre's degree reaches 2^2.
        let big = Pattern::Star(4).graph();
        match star_free_hitting(&big.view(), 2, CheckMode::Lazy) {
            Err(Error::NotInClass { witness, .. }) => {
                assert!(is_induced_embedding(&big, &Pattern::Star(2).graph(), &witness));
            }
            other => panic!("{other:?}"),
        }
    }
}
