use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::pattern::{is_free, Pattern};
use crate::graph::{Graph, VertexSet};

use super::Probability;

/// The bit generator behind every seeded generator: ChaCha8 seeded with
/// `seed_from_u64`, consumed one `u64` per decision.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn draw_gnp(n: usize, p: Probability, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let edges: Vec<_> = pairs(n).filter(|_| p.sample(rng)).collect();
    Graph::from_edges(n, edges)
}

/// Relabels by a uniformly random permutation (Fisher-Yates).
pub(crate) fn shuffle(g: &Graph, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for i in (1..perm.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    g.relabel(&perm)
}

/// `G(n, p)`. Pairs are decided in graph6 order, `(0,1), (0,2), (1,2), (0,3), …`.
pub fn gnp(n: usize, p: Probability, seed: u64) -> Result<Graph> {
    draw_gnp(n, p, &mut rng(seed))
}

/// Rejection-samples `G(n, p)` from one stream until a draw has no induced
/// copy of `pattern`.
pub fn random_h_free(n: usize, p: Probability, seed: u64, pattern: &Pattern, max_tries: usize) -> Result<Graph> {
    if max_tries == 0 {
        return Err(Error::InvalidParameter("max_tries must be at least 1".into()));
    }
    let mut rng = rng(seed);
    for _ in 0..max_tries {
        let g = draw_gnp(n, p, &mut rng)?;
        if is_free(&g.view(), pattern) {
            return Ok(g);
        }
    }
    Err(Error::TriesExhausted {
        pattern: pattern.to_string(),
        tries: max_tries,
    })
}

/// A clique on `clique` vertices, a stable set on `stable` vertices and
/// independent cross edges, randomly relabelled. Split graphs have no
/// induced `2K2`, so no induced P5.
pub fn split_graph(clique: usize, stable: usize, p: Probability, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let n = clique + stable;
    let mut edges: Vec<_> = pairs(clique).collect();
    for u in 0..clique {
        for v in clique..n {
            if p.sample(&mut rng) {
                edges.push((u, v));
            }
        }
    }
    shuffle(&Graph::from_edges(n, edges)?, &mut rng)
}

/// Two cliques with independent cross edges: the complement of a random
/// bipartite graph. Stability number at most 2.
pub fn co_bipartite(a: usize, b: usize, p: Probability, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let n = a + b;
    let mut edges: Vec<_> = pairs(a).collect();
    edges.extend(pairs(b).map(|(u, v)| (u + a, v + a)));
    for u in 0..a {
        for v in a..n {
            if p.sample(&mut rng) {
                edges.push((u, v));
            }
        }
    }
    shuffle(&Graph::from_edges(n, edges)?, &mut rng)
}

/// The line graph: one vertex per edge, adjacent when the edges meet.
/// Line graphs are claw-free.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident = vec![VertexSet::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].insert(i);
        incident[v].insert(i);
    }
    let mut out = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for j in (incident[u] | incident[v]).above(i).iter() {
            out.push((i, j));
        }
    }
    Graph::from_edges(edges.len(), out)
}

/// The line graph of `G(n, p)`.
pub fn random_line_graph(n: usize, p: Probability, seed: u64) -> Result<Graph> {
    line_graph(&gnp(n, p, seed)?)
}
