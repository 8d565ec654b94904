//! Maximum cliques by branch and bound over bitset rows, with greedy colour
//! classes as the upper bound. Stable sets use the same search on the
//! complement rows.

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

/// Adjacency rows indexed by ambient vertex id, already restricted to the
/// view. `rows[v]` never contains `v`.
pub(crate) struct Rows {
    rows: Vec<VertexSet>,
}

impl Rows {
    pub(crate) fn clique(view: &View<'_>) -> Self {
        let n = view.graph().n();
        let mut rows = vec![VertexSet::new(); n];
        for v in view.vertices().iter() {
            rows[v] = view.neighbours(v);
        }
        Rows { rows }
    }

    pub(crate) fn stable(view: &View<'_>) -> Self {
        let n = view.graph().n();
        let all = view.vertices();
        let mut rows = vec![VertexSet::new(); n];
        for v in all.iter() {
            let mut r = all - view.neighbours(v);
            r.remove(v);
            rows[v] = r;
        }
        Rows { rows }
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> VertexSet {
        self.rows[v]
    }
}

/// Greedy sequential colouring of `p`. Returns vertices in colour order with
/// their colour numbers (1-based, non-decreasing).
fn colour_sort(rows: &Rows, p: VertexSet, order: &mut Vec<usize>, colours: &mut Vec<usize>) {
    order.clear();
    colours.clear();
    let mut uncoloured = p;
    let mut k = 0;
    while !uncoloured.is_empty() {
        k += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            q.remove(v);
            q -= rows.row(v);
            uncoloured.remove(v);
            order.push(v);
            colours.push(k);
        }
    }
}

struct Search<'a> {
    rows: &'a Rows,
    best: VertexSet,
    /// Stop as soon as a clique of this size is found.
    target: usize,
}

impl Search<'_> {
    fn expand(&mut self, current: VertexSet, mut p: VertexSet) {
        let mut order = Vec::with_capacity(p.len());
        let mut colours = Vec::with_capacity(p.len());
        colour_sort(self.rows, p, &mut order, &mut colours);
        let size = current.len();
        for idx in (0..order.len()).rev() {
            if size + colours[idx] <= self.best.len() || self.best.len() >= self.target {
                return;
            }
            let v = order[idx];
            let mut next = current;
            next.insert(v);
            let np = p & self.rows.row(v);
            if np.is_empty() {
                if next.len() > self.best.len() {
                    self.best = next;
                }
            } else {
                self.expand(next, np);
            }
            p.remove(v);
        }
    }
}

/// Some maximum clique of `rows` inside `p`.
pub(crate) fn max_clique(rows: &Rows, p: VertexSet) -> VertexSet {
    let mut s = Search {
        rows,
        best: VertexSet::new(),
        target: usize::MAX,
    };
    s.expand(VertexSet::new(), p);
    s.best
}

/// Whether `p` holds a clique with at least `k` vertices.
pub(crate) fn has_clique_of_size(rows: &Rows, p: VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if p.len() < k {
        return false;
    }
    let mut s = Search {
        rows,
        best: VertexSet::new(),
        target: k,
    };
    s.expand(VertexSet::new(), p);
    s.best.len() >= k
}

/// The lexicographically least maximum clique in `p`, with its size.
pub(crate) fn least_max_clique(rows: &Rows, p: VertexSet) -> (usize, VertexSet) {
    let size = max_clique(rows, p).len();
    let mut chosen = VertexSet::new();
    let mut cand = p;
    while chosen.len() < size {
        let need = size - chosen.len() - 1;
        let v = cand
            .iter()
            .find(|&v| has_clique_of_size(rows, cand.above(v) & rows.row(v), need))
            .expect("a maximum clique extends the chosen prefix");
        chosen.insert(v);
        cand = cand.above(v) & rows.row(v);
    }
    (size, chosen)
}

/// Every clique of exactly `k` vertices inside `p`, in lexicographic order.
pub(crate) fn cliques_of_size(rows: &Rows, p: VertexSet, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    collect(rows, VertexSet::new(), p, k, cap, &mut out)?;
    Ok(out)
}

fn collect(rows: &Rows, current: VertexSet, p: VertexSet, k: usize, cap: usize, out: &mut Vec<VertexSet>) -> Result<()> {
    if k == 0 {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(current);
        return Ok(());
    }
    if p.len() < k {
        return Ok(());
    }
    if p.len() > k + 1 {
        let mut order = Vec::new();
        let mut colours = Vec::new();
        colour_sort(rows, p, &mut order, &mut colours);
        if colours.last().copied().unwrap_or(0) < k {
            return Ok(());
        }
    }
    for v in p.iter() {
        let rest = p.above(v);
        if rest.len() + 1 < k {
            break;
        }
        let mut next = current;
        next.insert(v);
        collect(rows, next, rest & rows.row(v), k - 1, cap, out)?;
    }
    Ok(())
}

/// Stability number of a view, zero for the empty view.
pub(crate) fn alpha_size(view: &View<'_>) -> usize {
    if view.is_empty() {
        return 0;
    }
    max_clique(&Rows::stable(view), view.vertices()).len()
}

pub(crate) fn omega_size(view: &View<'_>) -> usize {
    if view.is_empty() {
        return 0;
    }
    max_clique(&Rows::clique(view), view.vertices()).len()
}
