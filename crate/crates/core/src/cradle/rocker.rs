use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};
use crate::oracle;

use super::{violation, Cradle};

/// An inclusion-minimal sublist of `candidates` that still satisfies every
/// demander. Candidates are tried for removal once each, in order.
pub fn minimal_covering_subset<C, D, F>(candidates: &[C], demanders: &[D], satisfies: F) -> Result<Vec<C>>
where
    C: Copy,
    F: Fn(&D, &C) -> bool,
{
    // For each demander, which candidates satisfy it.
    let table: Vec<Vec<usize>> = demanders
        .iter()
        .map(|d| (0..candidates.len()).filter(|&i| satisfies(d, &candidates[i])).collect())
        .collect();
    if let Some(demander) = table.iter().position(Vec::is_empty) {
        return Err(Error::UncoverableDemander { demander });
    }
    let mut keep = vec![true; candidates.len()];
    let mut support: Vec<usize> = table.iter().map(Vec::len).collect();
    for i in 0..candidates.len() {
        let needed = table.iter().zip(&support).any(|(sat, &n)| n == 1 && sat.contains(&i));
        if !needed {
            keep[i] = false;
            for (sat, n) in table.iter().zip(support.iter_mut()) {
                if sat.contains(&i) {
                    *n -= 1;
                }
            }
        }
    }
    Ok(candidates.iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| *c).collect())
}

/// A rocker `(I, J)` for a cradle: `I` minimally represents the components
/// of `G[X]` anticomplete to some `Z`-vertex, and `J` holds the components
/// in which some `Z`-vertex meeting every component has a non-neighbour.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rocker {
    pub i: Vec<VertexSet>,
    pub j: Vec<VertexSet>,
}

impl Rocker {
    /// `I ∪ J` without repeats, ordered by smallest member.
    pub fn union(&self) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> = self.i.iter().chain(&self.j).copied().collect();
        all.sort_by_key(|c| c.first());
        all.dedup();
        all
    }
}

/// Builds the rocker of a cradle and checks `|I|, |J| ≤ ω(G)`.
pub fn build_rocker(view: &View<'_>, cradle: &Cradle) -> Result<Rocker> {
    view.check(&cradle.x)?;
    view.check(&cradle.z)?;
    if let Some(v) = violation(view, cradle.x, cradle.z) {
        return Err(Error::InvalidCradle(v));
    }
    rocker_within(view, cradle.x, cradle.z, None)
}

/// Rocker construction without the cradle check. The size assertion uses
/// `omega` when supplied, otherwise computes `ω(view)` if it could matter.
pub(crate) fn rocker_within(view: &View<'_>, x: VertexSet, z: VertexSet, omega: Option<usize>) -> Result<Rocker> {
    let comps = view.components_of(x);
    let zs = z.to_vec();
    let demanders: Vec<usize> = zs
        .iter()
        .copied()
        .filter(|&v| comps.iter().any(|c| view.is_anticomplete_to(v, *c)))
        .collect();
    let i = minimal_covering_subset(&comps, &demanders, |&v, c| view.is_anticomplete_to(v, *c))?;
    let seers: Vec<usize> = zs
        .iter()
        .copied()
        .filter(|&v| comps.iter().all(|c| !view.is_anticomplete_to(v, *c)))
        .collect();
    let j: Vec<VertexSet> = comps
        .iter()
        .copied()
        .filter(|c| seers.iter().any(|&v| !c.is_subset(&view.neighbours(v))))
        .collect();
    let largest = i.len().max(j.len());
    if largest >= 2 {
        let w = omega.unwrap_or_else(|| oracle::omega_number(view));
        if largest > w {
            let (which, list) = if i.len() > w { ("I", &i) } else { ("J", &j) };
            return Err(Error::Assertion {
                step: "rocker size",
                detail: format!("|{which}| = {} exceeds omega = {w}", list.len()),
                witness: list.iter().fold(VertexSet::new(), |a, c| a | *c),
            });
        }
    }
    Ok(Rocker { i, j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn set(xs: &[usize]) -> VertexSet {
        VertexSet::from(xs)
    }

    #[test]
    fn covering_examples() {
        let all = |_: &usize, _: &char| true;
        let none: [usize; 0] = [];
        assert_eq!(minimal_covering_subset(&['a', 'b'], &none, all).unwrap(), vec![]);
        let exact = minimal_covering_subset(&['a', 'b', 'c'], &[0usize, 1, 2], |d, c| (*c as usize - 'a' as usize) == *d);
        assert_eq!(exact.unwrap(), vec!['a', 'b', 'c']);
        let demands = [vec!['a', 'b'], vec!['b', 'c']];
        let got = minimal_covering_subset(&['a', 'b', 'c'], &demands, |d, c| d.contains(c)).unwrap();
        assert_eq!(got, vec!['b']);
        let bad = minimal_covering_subset(&['a'], &[vec!['z']], |d, c| d.contains(c));
        assert_eq!(bad, Err(Error::UncoverableDemander { demander: 0 }));
    }

    #[test]
    fn rocker_examples() {
        // Z complete to X.
        let k3 = Graph::complete(3).unwrap();
        let r = build_rocker(&k3.view(), &Cradle { x: set(&[0]), z: set(&[1, 2]) }).unwrap();
        assert_eq!(r, Rocker::default());

        // X = {a, b} non-adjacent, z adjacent to a only, z reaches 3 outside N[X].
        let g = Graph::from_edges(4, [(0, 2), (2, 3)]).unwrap();
        let cradle = Cradle::new(&g.view(), set(&[0, 1]), set(&[2])).unwrap();
        let r = build_rocker(&g.view(), &cradle).unwrap();
        assert_eq!(r.i, vec![set(&[1])]);
        assert!(r.j.is_empty());

        // X an edge {a, b}, z adjacent to a only.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (2, 3)]).unwrap();
        let cradle = Cradle::new(&g.view(), set(&[0, 1]), set(&[2])).unwrap();
        let r = build_rocker(&g.view(), &cradle).unwrap();
        assert!(r.i.is_empty());
        assert_eq!(r.j, vec![set(&[0, 1])]);
    }
}
