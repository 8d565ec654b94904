use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

/// Largest order [`enumerate_small_graphs`] accepts.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

/// Upper-triangle bit string in graph6 order: column `j`, rows `0..j`.
struct Bits {
    n: usize,
    bits: Vec<bool>,
    /// `index[i][j]` is the position of the pair `{i, j}`.
    index: Vec<Vec<usize>>,
}

impl Bits {
    fn new(n: usize) -> Self {
        let mut index = vec![vec![usize::MAX; n]; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                index[i][j] = k;
                index[j][i] = k;
                k += 1;
            }
        }
        Bits { n, bits: vec![false; k], index }
    }

    fn adj(&self, u: usize, v: usize) -> bool {
        u != v && self.bits[self.index[u][v]]
    }

    /// Whether no relabelling gives a lexicographically larger string.
    /// Permutations are built one column at a time and abandoned as soon as
    /// their prefix falls below the original.
    fn is_max_canonical(&self) -> bool {
        let mut perm = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.extend(&mut perm, &mut used)
    }

    /// `false` iff some completion of `perm` beats the original.
    fn extend(&self, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let j = perm.len();
        if j == self.n {
            return true;
        }
        for v in 0..self.n {
            if used[v] {
                continue;
            }
            let mut order = std::cmp::Ordering::Equal;
            for (i, &u) in perm.iter().enumerate() {
                let mine = self.bits[self.index[i][j]];
                let theirs = self.adj(u, v);
                if mine != theirs {
                    order = theirs.cmp(&mine);
                    break;
                }
            }
            match order {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => {
                    perm.push(v);
                    used[v] = true;
                    let ok = self.extend(perm, used);
                    perm.pop();
                    used[v] = false;
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn graph(&self, complement: bool) -> Result<Graph> {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[self.index[i][j]] != complement {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, edges)
    }
}

/// One graph per isomorphism class on `n ≤ 8` vertices, each in its
/// canonical form (the lexicographically least graph6 bit string among its
/// relabellings), sorted by graph6 string.
///
/// Orderly generation: the lexicographically greatest relabelling of a
/// graph stays greatest when its last 1 bit is cleared, so every greatest
/// string is reached exactly once by setting bits past the last 1 of its
/// parent. Complements of the greatest strings are the least ones.
pub fn enumerate_small_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration is limited to {MAX_EXHAUSTIVE_ORDER} vertices, got {n}"
        )));
    }
    let mut bits = Bits::new(n);
    let mut out = vec![bits.graph(true)?];
    grow(&mut bits, 0, &mut out)?;
    out.sort_by_cached_key(graph6::encode);
    Ok(out)
}

fn grow(bits: &mut Bits, from: usize, out: &mut Vec<Graph>) -> Result<()> {
    for q in from..bits.bits.len() {
        bits.bits[q] = true;
        if bits.is_max_canonical() {
            out.push(bits.graph(true)?);
            grow(bits, q + 1, out)?;
        }
        bits.bits[q] = false;
    }
    Ok(())
}
