//! Minimum transversals of a uniform set family, by bounded branching on the
//! first unhit member.

use crate::graph::VertexSet;

/// Greedy count of pairwise disjoint members of `edges`: a lower bound on
/// the number of extra vertices any transversal needs.
fn disjoint_packing(edges: &[VertexSet]) -> usize {
    let mut used = VertexSet::new();
    let mut count = 0;
    for e in edges {
        if e.is_disjoint(&used) {
            used |= *e;
            count += 1;
        }
    }
    count
}

/// Whether `budget` more vertices drawn from `allowed` can hit every member
/// of `edges`.
fn feasible(edges: &[VertexSet], budget: usize, allowed: VertexSet) -> bool {
    let Some(first) = edges.first() else {
        return true;
    };
    if budget == 0 || disjoint_packing(edges) > budget {
        return false;
    }
    let branch = *first & allowed;
    for v in branch.iter() {
        let rest: Vec<VertexSet> = edges.iter().filter(|e| !e.contains(v)).copied().collect();
        if feasible(&rest, budget - 1, allowed) {
            return true;
        }
    }
    false
}

/// The size of a minimum transversal of `edges` over `universe`, and the
/// lexicographically least transversal of that size.
pub(crate) fn minimum_transversal(edges: &[VertexSet], universe: VertexSet) -> (usize, VertexSet) {
    if edges.is_empty() {
        return (0, VertexSet::new());
    }
    let mut size = disjoint_packing(edges).max(1);
    while !feasible(edges, size, universe) {
        size += 1;
    }
    // Fix members one at a time, smallest first, keeping the rest feasible
    // with vertices above the last choice.
    let mut chosen = VertexSet::new();
    let mut remaining: Vec<VertexSet> = edges.to_vec();
    let mut allowed = universe;
    while !remaining.is_empty() {
        let left = size - chosen.len();
        let v = allowed
            .iter()
            .find(|&v| {
                let rest: Vec<VertexSet> = remaining.iter().filter(|e| !e.contains(v)).copied().collect();
                feasible(&rest, left - 1, allowed.above(v))
            })
            .expect("a minimum transversal extends the chosen prefix");
        chosen.insert(v);
        remaining.retain(|e| !e.contains(v));
        allowed = allowed.above(v);
    }
    (chosen.len(), chosen)
}
