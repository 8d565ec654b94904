//! Exact colouring by DSATUR branch and bound, with a node budget after
//! which the best colouring found so far is returned unproven.

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

use super::clique::omega_size;

/// Search nodes explored before giving up on a proof of optimality.
pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

/// A proper colouring as stable classes sorted by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    pub classes: Vec<VertexSet>,
    /// False when the node budget ran out before optimality was proven.
    pub optimal: bool,
}

impl Colouring {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_proper(&self, view: &View<'_>) -> bool {
        let union = self.classes.iter().fold(VertexSet::new(), |a, c| a | *c);
        let total: usize = self.classes.iter().map(VertexSet::len).sum();
        union == view.vertices() && total == view.len() && self.classes.iter().all(|c| view.is_stable(*c))
    }
}

fn normalise(mut classes: Vec<VertexSet>) -> Vec<VertexSet> {
    classes.retain(|c| !c.is_empty());
    classes.sort_by_key(|c| c.first());
    classes
}

/// Greedy DSATUR colouring.
fn dsatur(view: &View<'_>) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncoloured = view.vertices();
    while !uncoloured.is_empty() {
        let v = pick(view, &classes, uncoloured);
        let nv = view.neighbours(v);
        match classes.iter_mut().find(|c| c.is_disjoint(&nv)) {
            Some(c) => {
                c.insert(v);
            }
            None => classes.push(VertexSet::singleton(v)),
        }
        uncoloured.remove(v);
    }
    classes
}

/// Most saturated uncoloured vertex; ties by uncoloured degree, then index.
fn pick(view: &View<'_>, classes: &[VertexSet], uncoloured: VertexSet) -> usize {
    let mut best = (0, 0, usize::MAX);
    let mut best_v = usize::MAX;
    for v in uncoloured.iter() {
        let nv = view.neighbours(v);
        let sat = classes.iter().filter(|c| c.intersects(&nv)).count();
        let deg = (nv & uncoloured).len();
        let key = (sat, deg, usize::MAX - v);
        if best_v == usize::MAX || key > best {
            best = key;
            best_v = v;
        }
    }
    best_v
}

struct Bnb<'a, 'g> {
    view: &'a View<'g>,
    best: Vec<VertexSet>,
    lower: usize,
    nodes: u64,
    budget: u64,
}

impl Bnb<'_, '_> {
    /// Returns true once the search should stop (optimum reached or budget spent).
    fn search(&mut self, classes: &mut Vec<VertexSet>, uncoloured: VertexSet) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return true;
        }
        if uncoloured.is_empty() {
            if classes.len() < self.best.len() {
                self.best = classes.clone();
            }
            return self.best.len() <= self.lower;
        }
        let v = pick(self.view, classes, uncoloured);
        let nv = self.view.neighbours(v);
        let mut rest = uncoloured;
        rest.remove(v);
        for i in 0..classes.len() {
            if classes[i].is_disjoint(&nv) {
                classes[i].insert(v);
                let stop = self.search(classes, rest);
                classes[i].remove(v);
                if stop {
                    return true;
                }
            }
        }
        if classes.len() + 1 < self.best.len() {
            classes.push(VertexSet::singleton(v));
            let stop = self.search(classes, rest);
            classes.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// A minimum colouring of the view, or `ColourLimitExceeded` as soon as the
/// chromatic number is known to exceed `limit`.
pub fn exact_colouring(view: &View<'_>, limit: Option<usize>) -> Result<Colouring> {
    exact_colouring_with_budget(view, limit, DEFAULT_NODE_BUDGET)
}

pub fn exact_colouring_with_budget(view: &View<'_>, limit: Option<usize>, budget: u64) -> Result<Colouring> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let lower = omega_size(view);
    if let Some(limit) = limit {
        if lower > limit {
            return Err(Error::ColourLimitExceeded { limit });
        }
    }
    let greedy = dsatur(view);
    let mut bnb = Bnb {
        view,
        lower,
        best: greedy,
        nodes: 0,
        budget,
    };
    if bnb.best.len() > lower {
        bnb.search(&mut Vec::new(), view.vertices());
    }
    let optimal = bnb.best.len() <= lower || bnb.nodes <= budget;
    let classes = normalise(bnb.best);
    if let Some(limit) = limit {
        if classes.len() > limit {
            return Err(Error::ColourLimitExceeded { limit });
        }
    }
    Ok(Colouring { classes, optimal })
}
