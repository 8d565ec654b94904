//! Exact, exponential-time ground truth: α, ω, maximum stable sets, η,
//! hitting-set verification, colouring and perfection.
//!
//! Every oracle rejects the null graph. Witnesses are the lexicographically
//! least among the optimal candidates.

mod certificate;
pub(crate) mod clique;
mod colouring;
mod transversal;

pub use certificate::{ClassParams, HittingCertificate};
pub use colouring::{exact_colouring, exact_colouring_with_budget, Colouring, DEFAULT_NODE_BUDGET};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

use clique::Rows;

/// Default ceiling on the number of maximum stable sets enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Default ceiling on the order of graphs checked for perfection.
pub const DEFAULT_PERFECTION_CAP: usize = 16;

/// Stability number with the lexicographically least maximum stable set.
pub fn alpha(view: &View<'_>) -> Result<(usize, VertexSet)> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (size, witness) = clique::least_max_clique(&Rows::stable(view), view.vertices());
    debug_assert!(view.is_stable(witness));
    Ok((size, witness))
}

/// Clique number with the lexicographically least maximum clique.
pub fn omega(view: &View<'_>) -> Result<(usize, VertexSet)> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (size, witness) = clique::least_max_clique(&Rows::clique(view), view.vertices());
    debug_assert!(view.is_clique(witness));
    Ok((size, witness))
}

/// Stability number, zero on the null graph.
pub fn alpha_number(view: &View<'_>) -> usize {
    clique::alpha_size(view)
}

/// Clique number, zero on the null graph.
pub fn omega_number(view: &View<'_>) -> usize {
    clique::omega_size(view)
}

/// All maximum stable sets of a graph, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetFamily {
    pub alpha: usize,
    pub members: Vec<VertexSet>,
}

impl StableSetFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `w` meets every member.
    pub fn is_hit_by(&self, w: VertexSet) -> bool {
        self.members.iter().all(|s| s.intersects(&w))
    }
}

pub fn enumerate_maximum_stable_sets(view: &View<'_>, cap: usize) -> Result<StableSetFamily> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let rows = Rows::stable(view);
    let alpha = clique::max_clique(&rows, view.vertices()).len();
    let members = clique::cliques_of_size(&rows, view.vertices(), alpha, cap)?;
    Ok(StableSetFamily { alpha, members })
}

/// Stable sets of exactly `size` vertices inside `within`, lexicographically.
pub fn enumerate_stable_sets_of_size(view: &View<'_>, within: VertexSet, size: usize, cap: usize) -> Result<Vec<VertexSet>> {
    view.check(&within)?;
    clique::cliques_of_size(&Rows::stable(view), within, size, cap)
}

/// η with the lexicographically least minimum hitting set.
pub fn eta_exact(view: &View<'_>, cap: usize) -> Result<(usize, VertexSet)> {
    let family = enumerate_maximum_stable_sets(view, cap)?;
    let (size, witness) = transversal::minimum_transversal(&family.members, view.vertices());
    debug_assert!(family.is_hit_by(witness));
    Ok((size, witness))
}

/// `α(G \ W) < α(G)`.
pub fn verify_hitting_set(view: &View<'_>, w: VertexSet) -> Result<bool> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    view.check(&w)?;
    let before = clique::alpha_size(view);
    let after = clique::alpha_size(&view.without(w));
    Ok(after < before)
}

/// Result of the exhaustive Lovász product check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Perfection {
    Perfect,
    /// A smallest vertex set inducing `H` with `α(H)·ω(H) < |V(H)|`.
    Imperfect(VertexSet),
}

impl Perfection {
    pub fn is_perfect(&self) -> bool {
        matches!(self, Perfection::Perfect)
    }
}

/// Checks `α(H)·ω(H) ≥ |V(H)|` on every induced subgraph, by increasing
/// order and then lexicographically, so a violation found is a smallest one.
pub fn is_perfect_lovasz(view: &View<'_>, cap: usize) -> Result<Perfection> {
    if view.len() > cap {
        return Err(Error::OrderCapExceeded { n: view.len(), cap });
    }
    let verts = view.vertices().to_vec();
    let n = verts.len();
    // Subsets of order < 5 are never violators: the smallest imperfect graphs are C5.
    for size in 5.min(n + 1)..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set: VertexSet = idx.iter().map(|&i| verts[i]).collect();
            let h = view.restrict(set);
            let a = clique::alpha_size(&h);
            if a * clique::omega_size(&h) < size {
                return Ok(Perfection::Imperfect(set));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(Perfection::Perfect)
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// `Σ|X_i| − Σ_{i<i'} |X_i ∩ X_i'|`, a lower bound on `|⋃ X_i|`.
///
/// `pairwise[i][j]` holds `|X_i ∩ X_j|`; only entries with `i < j` are read.
///
/// # Panics
/// If `pairwise` has fewer rows or columns than `sizes` has entries.
pub fn union_lower_bound(sizes: &[usize], pairwise: &[Vec<usize>]) -> i64 {
    let total: i64 = sizes.iter().map(|&s| s as i64).sum();
    let mut overlap = 0i64;
    for i in 0..sizes.len() {
        for j in i + 1..sizes.len() {
            overlap += pairwise[i][j] as i64;
        }
    }
    total - overlap
}
