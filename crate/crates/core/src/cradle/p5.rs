use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::pattern::{require_free, Pattern};
use crate::graph::{VertexSet, View};
use crate::oracle::{self, ClassParams, HittingCertificate};

use super::bounds::psi_p5_bound;
use super::provider::HittingProvider;
use super::restricted::restricted_unchecked;
use super::violation;

/// Order up to which the eager P5-freeness check runs by default.
pub const STRICT_ORDER_LIMIT: usize = 60;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct P5Options {
    /// Check P5-freeness up front. `None` checks when `n ≤ 60`.
    pub strict: Option<bool>,
}

impl P5Options {
    pub fn strict(strict: bool) -> Self {
        P5Options { strict: Some(strict) }
    }

    fn checks(&self, n: usize) -> bool {
        self.strict.unwrap_or(n <= STRICT_ORDER_LIMIT)
    }
}

/// A certified hitting set of size at most `Ψ(ω)` for a P5-free graph.
pub fn p5_hitting_set(view: &View<'_>, opts: P5Options) -> Result<HittingCertificate> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if opts.checks(view.len()) {
        require_free(view, &Pattern::Path(5))?;
    }
    let w = p5_set(view)?;
    let omega = oracle::omega_number(view);
    HittingCertificate::certify(view, w, "p5", ClassParams::c(omega), psi_p5_bound(omega))
}

fn p5_set(view: &View<'_>) -> Result<VertexSet> {
    let first = view.vertices().first().ok_or(Error::EmptyGraph)?;
    let comp = view.grow_component(first, view.vertices());
    let g = view.restrict(comp);
    let (k, clique) = oracle::omega(&g)?;
    if k <= 1 {
        return Ok(VertexSet::singleton(first));
    }
    let ks = clique.to_vec();
    let rest = comp - clique;
    // parts[0] is anticomplete to K; parts[i] holds vertices whose
    // highest-indexed neighbour in K is ks[i - 1].
    let mut parts = vec![VertexSet::new(); k + 1];
    for v in rest.iter() {
        let top = ks.iter().rposition(|&u| g.has_edge(u, v)).map_or(0, |i| i + 1);
        parts[top].insert(v);
    }
    let provider = Recurse {
        budget: psi_p5_bound(k - 1),
        limit: k - 1,
    };
    let mut w = clique;
    for i in 0..=k {
        let x = parts[i];
        if x.is_empty() {
            continue;
        }
        let z = parts[i + 1..].iter().fold(VertexSet::new(), |a, p| a | *p);
        if let Some(v) = violation(&g, x, z) {
            return Err(Error::Assertion {
                step: "packing cradle",
                detail: format!("(X_{i}, Z_{i}) is not a cradle: {v}"),
                witness: x,
            });
        }
        w |= restricted_unchecked(&g, x, z, &provider, k, k)?;
    }
    let bound = psi_p5_bound(k);
    if BigUint::from(w.len()) > bound {
        return Err(Error::BudgetExceeded { size: w.len(), budget: bound });
    }
    Ok(w)
}

/// Recursive calls on subsets of a packing part, whose cliques are smaller.
struct Recurse {
    budget: BigUint,
    limit: usize,
}

impl HittingProvider for Recurse {
    fn budget(&self) -> &BigUint {
        &self.budget
    }

    fn hit(&self, view: &View<'_>) -> Result<VertexSet> {
        let (w, clique) = oracle::omega(view)?;
        if w > self.limit {
            return Err(Error::Assertion {
                step: "component clique",
                detail: format!("omega = {w} inside a packing part, expected at most {}", self.limit),
                witness: clique,
            });
        }
        p5_set(view)
    }
}
