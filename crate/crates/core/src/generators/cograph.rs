use rand_chacha::rand_core::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::random::{rng, shuffle};

/// A cotree: leaves are vertices, inner nodes take the disjoint union or
/// the join of their children. Every cograph arises this way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf,
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn order(&self) -> usize {
        match self {
            Cotree::Leaf => 1,
            Cotree::Union(c) | Cotree::Join(c) => c.iter().map(Cotree::order).sum(),
        }
    }

    /// The graph with leaves numbered left to right.
    pub fn evaluate(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        self.collect(0, &mut edges);
        Graph::from_edges(self.order(), edges)
    }

    fn collect(&self, start: usize, edges: &mut Vec<(usize, usize)>) {
        let children = match self {
            Cotree::Leaf => return,
            Cotree::Union(c) | Cotree::Join(c) => c,
        };
        let mut ranges = Vec::with_capacity(children.len());
        let mut at = start;
        for child in children {
            child.collect(at, edges);
            ranges.push(at..at + child.order());
            at += child.order();
        }
        if let Cotree::Join(_) = self {
            for (i, a) in ranges.iter().enumerate() {
                for b in &ranges[i + 1..] {
                    for u in a.clone() {
                        edges.extend(b.clone().map(|v| (u, v)));
                    }
                }
            }
        }
    }

    /// A random binary cotree on `n` leaves.
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        if n <= 1 {
            return Cotree::Leaf;
        }
        let left = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
        let children = vec![Cotree::random(left, rng), Cotree::random(n - left, rng)];
        if rng.next_u64() & 1 == 0 {
            Cotree::Union(children)
        } else {
            Cotree::Join(children)
        }
    }
}

/// A random cograph (P4-free graph) on `n ≥ 1` vertices, randomly relabelled.
pub fn cograph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a cograph needs at least one vertex".into()));
    }
    let mut rng = rng(seed);
    let tree = Cotree::random(n, &mut rng);
    shuffle(&tree.evaluate()?, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pattern::{is_free, Pattern};

    #[test]
    fn cotree_examples() {
        assert_eq!(Cotree::Leaf.evaluate().unwrap(), Graph::complete(1).unwrap());
        let join = Cotree::Join(vec![Cotree::Leaf; 5]);
        assert_eq!(join.evaluate().unwrap(), Graph::complete(5).unwrap());
        let union = Cotree::Union(vec![Cotree::Leaf; 3]);
        assert_eq!(union.evaluate().unwrap().edge_count(), 0);
        // K_{2,2} = join of two 2-vertex unions.
        let c4 = Cotree::Join(vec![Cotree::Union(vec![Cotree::Leaf; 2]), Cotree::Union(vec![Cotree::Leaf; 2])]);
        assert_eq!(c4.evaluate().unwrap().edge_count(), 4);
    }

    #[test]
    fn cographs_are_p4_free() {
        assert!(cograph(0, 1).is_err());
        for seed in 0..50 {
            let g = cograph(10, seed).unwrap();
            assert_eq!(g.n(), 10);
            assert!(is_free(&g.view(), &Pattern::Path(4)));
        }
    }
}
