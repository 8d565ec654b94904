use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cradle::minimal_covering_subset;
use crate::error::{Error, Result};
use crate::graph::pattern::Pattern;
use crate::graph::{VertexSet, View};
use crate::oracle::{self, exact_colouring, ClassParams, HittingCertificate};

use super::bounds::psi_lt_bound;
use super::{diagnose, gate, CheckMode};

/// One colour class and what it contributes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtPart {
    pub class: VertexSet,
    /// Vertices outside the class missing at least a `1/k` share of it.
    /// Only computed for large classes.
    pub z: VertexSet,
    /// The small subset of a large class every `z` has a non-neighbour in.
    pub d: Option<VertexSet>,
    pub w: VertexSet,
}

/// The colouring-based construction for `L_t`-free graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtDecomposition {
    /// Number of colour classes.
    pub k: usize,
    /// Classes of at least `4k²t` vertices are large.
    pub threshold: usize,
    pub colouring_optimal: bool,
    pub parts: Vec<LtPart>,
}

impl LtDecomposition {
    pub fn hitting_set(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::new(), |a, p| a | p.w)
    }
}

/// Colours with at most `ω^(2t+2)` colours and replaces every large class
/// by a subset of fewer than `2k²` vertices.
pub fn lt_decomposition(view: &View<'_>, t: usize) -> Result<LtDecomposition> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let omega = oracle::omega_number(view);
    let limit = u32::try_from(2 * t + 2)
        .ok()
        .and_then(|e| omega.checked_pow(e))
        .unwrap_or(usize::MAX);
    let colouring = exact_colouring(view, Some(limit))?;
    let k = colouring.len();
    let threshold = (4 * k).saturating_mul(k).saturating_mul(t);
    let all = view.vertices();
    let mut parts = Vec::with_capacity(k);
    for &class in &colouring.classes {
        if class.len() < threshold {
            parts.push(LtPart { class, z: VertexSet::new(), d: None, w: class });
            continue;
        }
        let z: VertexSet = (all - class)
            .iter()
            .filter(|&v| k * (class - view.neighbours(v)).len() >= class.len())
            .collect();
        let members = class.to_vec();
        let chosen = minimal_covering_subset(&members, &z.to_vec(), |&v, &u| !view.has_edge(v, u))?;
        // With nothing to cover, every maximum stable set in this part is
        // the class itself, and one vertex of it suffices.
        let d: VertexSet = if chosen.is_empty() {
            VertexSet::singleton(members[0])
        } else {
            chosen.into_iter().collect()
        };
        if d.len() >= 2 * k * k {
            return Err(Error::Assertion {
                step: "small D",
                detail: format!("|D| = {} is not below 2k^2 = {}", d.len(), 2 * k * k),
                witness: d,
            });
        }
        parts.push(LtPart { class, z, d: Some(d), w: d });
    }
    Ok(LtDecomposition {
        k,
        threshold,
        colouring_optimal: colouring.optimal,
        parts,
    })
}

/// Hitting set of size at most `ω^(7t+7)` for an `L_t`-free graph.
pub fn lt_hitting_set(view: &View<'_>, t: usize, mode: CheckMode) -> Result<HittingCertificate> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let pattern = Pattern::Lt(t);
    gate(view, &pattern, mode)?;
    let omega = oracle::omega_number(view);
    let w = diagnose(view, &pattern, lt_set(view, t))?;
    let params = ClassParams { c: omega, s: None, t: Some(t) };
    diagnose(view, &pattern, HittingCertificate::certify(view, w, "lt", params, psi_lt_bound(omega, t)))
}

pub(crate) fn lt_set(view: &View<'_>, t: usize) -> Result<VertexSet> {
    let omega = oracle::omega_number(view);
    if omega <= 1 {
        return Ok(VertexSet::singleton(view.vertices().first().ok_or(Error::EmptyGraph)?));
    }
    let w = lt_decomposition(view, t)?.hitting_set();
    let bound = psi_lt_bound(omega, t);
    if BigUint::from(w.len()) > bound {
        return Err(Error::BudgetExceeded { size: w.len(), budget: bound });
    }
    Ok(w)
}
