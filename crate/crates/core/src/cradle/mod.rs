//! Cradles, rockers, the restricted hitting-set recursion and the top-level
//! algorithm for P5-free graphs.
//!
//! A cradle `(X, Z)` is a pair of disjoint vertex sets such that `|X| ≤ 1`,
//! or every vertex of `N_Z(X)` has a neighbour outside `N[X]` and every two
//! vertices of `N_Z(X)` are joined by an induced path whose interior avoids
//! `N[X]`. A set `S` is `(X, Z)`-restricted when `S ⊆ X ∪ Z` and `S` meets `X`.

mod bounds;
mod p5;
mod provider;
mod restricted;
mod rocker;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

pub use bounds::{gamma_bound, phi_bound, psi_p5_bound};
pub use p5::{p5_hitting_set, P5Options};
pub use provider::{provide, Checked, ExactProvider, FnProvider, HittingProvider};
pub use restricted::{enumerate_restricted_maximum_stable_sets, packing_hitting_set, restricted_hitting_set};
pub use rocker::{build_rocker, minimal_covering_subset, Rocker};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cradle {
    pub x: VertexSet,
    pub z: VertexSet,
}

/// Why a pair fails to be a cradle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CradleViolation {
    /// `X` and `Z` share these vertices.
    Overlap(VertexSet),
    /// A vertex of `N_Z(X)` with no neighbour outside `N[X]`.
    NoOutsideNeighbour(usize),
    /// Two vertices of `N_Z(X)` not linked through `G \ N[X]`.
    NoInducedPath(usize, usize),
}

impl fmt::Display for CradleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CradleViolation::Overlap(s) => write!(f, "X and Z overlap in {{{s}}}"),
            CradleViolation::NoOutsideNeighbour(z) => write!(f, "vertex {z} of N_Z(X) has no neighbour outside N[X]"),
            CradleViolation::NoInducedPath(a, b) => {
                write!(f, "no induced path from {a} to {b} with interior outside N[X]")
            }
        }
    }
}

impl Cradle {
    /// Validates the pair against `view`.
    pub fn new(view: &View<'_>, x: VertexSet, z: VertexSet) -> Result<Self> {
        match cradle_violation(view, x, z)? {
            None => Ok(Cradle { x, z }),
            Some(v) => Err(Error::InvalidCradle(v)),
        }
    }

    /// The singleton cradle `({v}, V \ {v})`.
    pub fn singleton(view: &View<'_>, v: usize) -> Self {
        let mut z = view.vertices();
        z.remove(v);
        Cradle {
            x: VertexSet::singleton(v),
            z,
        }
    }

    /// Whether `s` is restricted to this cradle.
    pub fn restricts(&self, s: VertexSet) -> bool {
        s.is_subset(&(self.x | self.z)) && s.intersects(&self.x)
    }
}

/// The first violated cradle condition, scanning vertices in ascending order.
pub fn cradle_violation(view: &View<'_>, x: VertexSet, z: VertexSet) -> Result<Option<CradleViolation>> {
    view.check(&x)?;
    view.check(&z)?;
    Ok(violation(view, x, z))
}

pub fn is_cradle(view: &View<'_>, x: VertexSet, z: VertexSet) -> Result<bool> {
    Ok(cradle_violation(view, x, z)?.is_none())
}

pub(crate) fn violation(view: &View<'_>, x: VertexSet, z: VertexSet) -> Option<CradleViolation> {
    let overlap = x & z;
    if !overlap.is_empty() {
        return Some(CradleViolation::Overlap(overlap));
    }
    if x.len() <= 1 {
        return None;
    }
    let outside = view.vertices() - view.closed_neighbourhood(x);
    let nz = view.open_neighbourhood(x) & z;
    // Components of G \ N[X], each named by its smallest vertex.
    let mut label = vec![usize::MAX; view.graph().n()];
    for comp in view.components_of(outside) {
        let name = comp.first().expect("components are non-empty");
        for v in comp.iter() {
            label[v] = name;
        }
    }
    let reach: Vec<(usize, VertexSet)> = nz
        .iter()
        .map(|v| (v, view.neighbours(v).iter().filter(|&u| outside.contains(u)).map(|u| label[u]).collect()))
        .collect();
    for &(v, r) in &reach {
        if r.is_empty() {
            return Some(CradleViolation::NoOutsideNeighbour(v));
        }
    }
    for (i, &(a, ra)) in reach.iter().enumerate() {
        for &(b, rb) in &reach[i + 1..] {
            if !view.has_edge(a, b) && ra.is_disjoint(&rb) {
                return Some(CradleViolation::NoInducedPath(a, b));
            }
        }
    }
    None
}

/// A configuration ruled out in every cradle of a P5-free graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairViolation {
    /// `G[{x, x2, z, z2}]` has exactly the edges `xz` and `x2z2`.
    Matching { x: usize, x2: usize, z: usize, z2: usize },
    /// `z` has both a neighbour and a non-neighbour in two components of `G[X]`.
    SplitComponents { z: usize, first: VertexSet, second: VertexSet },
}

/// Every matching configuration and every doubly split vertex of a cradle.
/// Both lists are empty for any cradle of a P5-free graph.
pub fn cradle_pair_violations(view: &View<'_>, cradle: &Cradle) -> Result<Vec<PairViolation>> {
    view.check(&cradle.x)?;
    view.check(&cradle.z)?;
    let (x, z) = (cradle.x, cradle.z);
    let mut out = Vec::new();
    let zs = z.to_vec();
    for (i, &a) in zs.iter().enumerate() {
        for &b in &zs[i + 1..] {
            if view.has_edge(a, b) {
                continue;
            }
            let only_a = view.neighbours(a) & (x - view.neighbours(b));
            let only_b = view.neighbours(b) & (x - view.neighbours(a));
            for xa in only_a.iter() {
                for xb in (only_b - view.neighbours(xa)).iter() {
                    if xa != xb {
                        out.push(PairViolation::Matching { x: xa, x2: xb, z: a, z2: b });
                    }
                }
            }
        }
    }
    let comps = view.components_of(x);
    for v in z.iter() {
        let nv = view.neighbours(v);
        let split: Vec<VertexSet> = comps
            .iter()
            .filter(|c| c.intersects(&nv) && !c.is_subset(&nv))
            .copied()
            .collect();
        if split.len() >= 2 {
            out.push(PairViolation::SplitComponents {
                z: v,
                first: split[0],
                second: split[1],
            });
        }
    }
    Ok(out)
}
