//! Brute-force reference oracles used only by the integration tests. They
//! share nothing with the library beyond the `Graph` adjacency queries.

#![allow(dead_code)]

use etabound::Graph;

/// Vertex subsets as bitmasks over `0..n`; `n ≤ 20`.
pub type Mask = u32;

pub fn members(mask: Mask) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn is_stable_mask(g: &Graph, mask: Mask) -> bool {
    let vs = members(mask);
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

pub fn is_clique_mask(g: &Graph, mask: Mask) -> bool {
    let vs = members(mask);
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn subsets_of(within: Mask) -> impl Iterator<Item = Mask> {
    // Standard sub-mask walk, including the empty set.
    let mut sub = within;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & within;
        }
        Some(out)
    })
}

pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (32 - n)
    }
}

pub fn alpha_within(g: &Graph, within: Mask) -> usize {
    subsets_of(within)
        .filter(|&s| is_stable_mask(g, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn omega_within(g: &Graph, within: Mask) -> usize {
    subsets_of(within)
        .filter(|&s| is_clique_mask(g, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, full(g.n()))
}

pub fn omega(g: &Graph) -> usize {
    omega_within(g, full(g.n()))
}

/// Every maximum stable set of `g[within]`.
pub fn maximum_stable_sets_within(g: &Graph, within: Mask) -> Vec<Mask> {
    let a = alpha_within(g, within);
    subsets_of(within)
        .filter(|&s| s.count_ones() as usize == a && is_stable_mask(g, s))
        .collect()
}

pub fn maximum_stable_sets(g: &Graph) -> Vec<Mask> {
    maximum_stable_sets_within(g, full(g.n()))
}

/// Whether `w` meets every maximum stable set of `g`.
pub fn hits_all(g: &Graph, w: Mask) -> bool {
    maximum_stable_sets(g).iter().all(|&s| s & w != 0)
}

/// `η` by trying every vertex subset in order of size.
pub fn eta(g: &Graph) -> usize {
    eta_within(g, full(g.n()))
}

pub fn eta_within(g: &Graph, within: Mask) -> usize {
    let family = maximum_stable_sets_within(g, within);
    let mut best = within.count_ones() as usize;
    for w in subsets_of(within) {
        let size = w.count_ones() as usize;
        if size < best && family.iter().all(|&s| s & w != 0) {
            best = size;
        }
    }
    best
}

/// Whether `h` occurs as an induced subgraph of `g`, by trying every
/// injective placement.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    fn place(g: &Graph, h: &Graph, emb: &mut Vec<usize>) -> bool {
        let k = emb.len();
        if k == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if emb.contains(&v) {
                continue;
            }
            if (0..k).all(|i| h.has_edge(i, k) == g.has_edge(emb[i], v)) {
                emb.push(v);
                if place(g, h, emb) {
                    return true;
                }
                emb.pop();
            }
        }
        false
    }
    place(g, h, &mut Vec::new())
}

pub fn mask_of(set: etabound::VertexSet) -> Mask {
    set.iter().fold(0, |m, v| m | 1 << v)
}

/// Graphs by bitmask over the `n(n-1)/2` pairs in graph6 order.
pub fn labelled_graph(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
