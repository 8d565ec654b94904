use num_bigint::BigUint;

use crate::cradle::HittingProvider;
use crate::error::{Error, Result};
use crate::graph::pattern::Pattern;
use crate::graph::{VertexSet, View};
use crate::oracle::{self, ClassParams, HittingCertificate};

use super::bounds::psi_sst_bound;
use super::lemmas::{hit_many_times, Part};
use super::star::star_set;
use super::{diagnose, gate, CheckMode};

/// Hitting set of size at most `Ψ(ω, s, t)` for an `S_(s,t)`-free graph.
pub fn sst_hitting_set(view: &View<'_>, s: usize, t: usize, mode: CheckMode) -> Result<HittingCertificate> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let pattern = Pattern::Sst(s, t);
    gate(view, &pattern, mode)?;
    let omega = oracle::omega_number(view);
    let w = diagnose(view, &pattern, sst_set(view, omega, s, t))?;
    let params = ClassParams { c: omega, s: Some(s), t: Some(t) };
    diagnose(view, &pattern, HittingCertificate::certify(view, w, "sst", params, psi_sst_bound(omega, s, t)))
}

pub(crate) fn sst_set(view: &View<'_>, c: usize, s: usize, t: usize) -> Result<VertexSet> {
    let (omega, clique) = oracle::omega(view)?;
    if omega > c {
        return Err(Error::Assertion {
            step: "clique bound",
            detail: format!("omega = {omega} where at most {c} was promised"),
            witness: clique,
        });
    }
    let x = view.vertices().first().ok_or(Error::EmptyGraph)?;
    if omega <= 1 {
        return Ok(VertexSet::singleton(x));
    }
    if t == 0 {
        return star_set(view, s);
    }
    // A clique is its own hitting set, and it has at most c ≤ Ψ vertices.
    // The split below would need two vertices of one maximum stable set.
    if clique.len() == view.len() {
        return Ok(clique);
    }
    let all = view.vertices();
    let nx = view.neighbours(x);
    let closed = view.closed_neighbours(x);
    let smaller_clique = Recurse::new(omega - 1, s, t);
    let fewer_isolated = Recurse::new(omega, s, t - 1);
    let parts = [
        Part { a: nx, a_prime: all - nx, d: t, provider: &smaller_clique },
        Part { a: all - closed, a_prime: closed, d: s + 1, provider: &fewer_isolated },
    ];
    hit_many_times(view, &parts)
}

struct Recurse {
    c: usize,
    s: usize,
    t: usize,
    budget: BigUint,
}

impl Recurse {
    fn new(c: usize, s: usize, t: usize) -> Self {
        Recurse { c, s, t, budget: psi_sst_bound(c, s, t) }
    }
}

impl HittingProvider for Recurse {
    fn budget(&self) -> &BigUint {
        &self.budget
    }

    fn hit(&self, view: &View<'_>) -> Result<VertexSet> {
        sst_set(view, self.c, self.s, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounders::star_free_hitting;
    use crate::graph::Graph;

    #[test]
    fn sst_examples() {
        let k3 = Graph::complete(3).unwrap();
        let cert = sst_hitting_set(&k3.view(), 1, 1, CheckMode::Auto).unwrap();
        assert!(oracle::verify_hitting_set(&k3.view(), cert.hitting_set).unwrap());
        assert_eq!(cert.claimed_bound, psi_sst_bound(3, 1, 1));

        let c5 = Graph::cycle(5).unwrap();
        let a = sst_hitting_set(&c5.view(), 3, 0, CheckMode::Auto).unwrap();
        let b = star_free_hitting(&c5.view(), 3, CheckMode::Auto).unwrap();
        assert_eq!(a.hitting_set, b.hitting_set);

        // C5 is S_(2,1)-free: a P3 in it leaves two adjacent vertices.
        let cert = sst_hitting_set(&c5.view(), 2, 1, CheckMode::Auto).unwrap();
        assert!(oracle::verify_hitting_set(&c5.view(), cert.hitting_set).unwrap());
    }

    #[test]
    fn sst_rejects_members_of_the_pattern() {
        let g = Pattern::Sst(2, 1).graph();
        assert!(matches!(sst_hitting_set(&g.view(), 2, 1, CheckMode::Strict), Err(Error::NotInClass { .. })));
    }
}
