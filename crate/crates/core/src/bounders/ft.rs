use num_bigint::BigUint;
use num_traits::Pow;

use crate::cradle::HittingProvider;
use crate::error::{Error, Result};
use crate::graph::pattern::Pattern;
use crate::graph::{VertexSet, View};
use crate::oracle::{self, ClassParams, HittingCertificate};

use super::bounds::psi_ft_bound;
use super::lemmas::{cutset_reduce, hit_many_times, Part};
use super::{diagnose, gate, CheckMode};

/// Hitting set of size at most `Ψ(ω, t)` for an `F_t`-free graph.
pub fn ft_hitting_set(view: &View<'_>, t: usize, mode: CheckMode) -> Result<HittingCertificate> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let pattern = Pattern::Ft(t);
    gate(view, &pattern, mode)?;
    let omega = oracle::omega_number(view);
    let w = diagnose(view, &pattern, ft_set(view, omega, t))?;
    let params = ClassParams { c: omega, s: None, t: Some(t) };
    diagnose(view, &pattern, HittingCertificate::certify(view, w, "ft", params, psi_ft_bound(omega, t)))
}

fn ft_set(view: &View<'_>, c: usize, t: usize) -> Result<VertexSet> {
    let (omega, clique) = oracle::omega(view)?;
    if omega > c {
        return Err(Error::Assertion {
            step: "clique bound",
            detail: format!("omega = {omega} where at most {c} was promised"),
            witness: clique,
        });
    }
    let all = view.vertices();
    if omega <= 1 {
        return Ok(VertexSet::singleton(all.first().ok_or(Error::EmptyGraph)?));
    }
    let x1 = all.iter().find(|&v| view.degree(v) > 0).expect("omega >= 2 gives an edge");
    let n = view.neighbours(x1);
    let m = all - view.closed_neighbours(x1);
    let x2 = n
        .iter()
        .max_by_key(|&v| ((view.neighbours(v) & m).len(), std::cmp::Reverse(v)))
        .expect("x1 has a neighbour");
    let p = view.neighbours(x2) & m;
    let q = m - p;
    let from_p = view.open_neighbourhood(p) & q;
    let from_n = view.open_neighbourhood(n) & q;

    let unit: BigUint = Pow::pow(BigUint::from(omega + 1), 2 * t + 1);
    if BigUint::from(from_p.len()) >= unit {
        return Err(Error::Assertion {
            step: "few Q-neighbours of P",
            detail: format!("|N_Q(P)| = {} is not below (omega+1)^(2t+1) = {unit}", from_p.len()),
            witness: from_p,
        });
    }
    if BigUint::from(from_n.len()) >= BigUint::from(2u32) * &unit {
        return Err(Error::Assertion {
            step: "few Q-neighbours of N",
            detail: format!("|N_Q(N)| = {} is not below 2(omega+1)^(2t+1)", from_n.len()),
            witness: from_n,
        });
    }
    let cut = from_p | from_n;
    let core = view.closed_neighbours(x1) | p;
    if view.grow_component(x1, all - cut) != core {
        return Err(Error::Assertion {
            step: "core component",
            detail: format!("N[{x1}] together with P is not a component once the cutset is removed"),
            witness: core,
        });
    }

    let n2 = view.neighbours(x2);
    let provider = Recurse {
        c: omega - 1,
        t,
        budget: psi_ft_bound(omega - 1, t),
    };
    let inner = |h: &View<'_>| {
        let parts = [
            Part { a: n, a_prime: n2 - n, d: t, provider: &provider },
            Part { a: n2, a_prime: n - n2, d: t, provider: &provider },
        ];
        hit_many_times(h, &parts)
    };
    cutset_reduce(view, cut, Some(core), &inner)
}

struct Recurse {
    c: usize,
    t: usize,
    budget: BigUint,
}

impl HittingProvider for Recurse {
    fn budget(&self) -> &BigUint {
        &self.budget
    }

    fn hit(&self, view: &View<'_>) -> Result<VertexSet> {
        ft_set(view, self.c, self.t)
    }
}
