use num_bigint::BigUint;

use crate::cradle::{provide, HittingProvider};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

/// `N[v]`: every maximum stable set contains `v` or one of its neighbours.
pub fn closed_neighbourhood_hitting(view: &View<'_>, v: usize) -> Result<VertexSet> {
    view.check(&VertexSet::singleton(v))?;
    Ok(view.closed_neighbours(v))
}

/// Up to `d` rounds of "hit what is left and delete it" inside `region`.
///
/// Each round lowers `α` of the remainder by at least one, so the result has
/// at most `d·h` vertices and `α(region \ D) ≤ α(region) − d`. If the region
/// runs out first, the remainder is empty and the loop stops.
pub fn iterated_alpha_reduction(
    view: &View<'_>,
    region: VertexSet,
    d: usize,
    provider: &dyn HittingProvider,
) -> Result<VertexSet> {
    view.check(&region)?;
    let mut current = region;
    let mut removed = VertexSet::new();
    for _ in 0..d {
        if current.is_empty() {
            break;
        }
        let w = provide(provider, &view.restrict(current))?;
        removed |= w;
        current -= w;
    }
    Ok(removed)
}

/// One `(A, A', d, provider)` term of [`hit_many_times`].
pub struct Part<'p> {
    pub a: VertexSet,
    pub a_prime: VertexSet,
    pub d: usize,
    pub provider: &'p dyn HittingProvider,
}

/// The union of the reductions of every part.
///
/// This hits every maximum stable set `S` for which some part has
/// `|S ∩ A'| < d`; the caller is responsible for that condition.
pub fn hit_many_times(view: &View<'_>, parts: &[Part<'_>]) -> Result<VertexSet> {
    let all = view.vertices();
    for (i, part) in parts.iter().enumerate() {
        view.check(&part.a)?;
        view.check(&part.a_prime)?;
        if part.a | part.a_prime != all {
            return Err(Error::CoverViolation { part: i });
        }
    }
    let mut out = VertexSet::new();
    let mut budget = BigUint::default();
    for part in parts {
        out |= iterated_alpha_reduction(view, part.a, part.d, part.provider)?;
        budget += BigUint::from(part.d) * part.provider.budget();
    }
    if BigUint::from(out.len()) > budget {
        return Err(Error::BudgetExceeded { size: out.len(), budget });
    }
    Ok(out)
}

/// `C ∪ inner(G')` for a component `G'` of `G \ C`; defaults to the
/// component of the lowest remaining vertex.
pub fn cutset_reduce(
    view: &View<'_>,
    cutset: VertexSet,
    component: Option<VertexSet>,
    inner: &dyn Fn(&View<'_>) -> Result<VertexSet>,
) -> Result<VertexSet> {
    view.check(&cutset)?;
    let rest = view.vertices() - cutset;
    let comp = match component {
        Some(comp) => {
            let Some(v) = comp.first() else {
                return Err(Error::EmptyComponent);
            };
            if !comp.is_subset(&rest) || view.grow_component(v, rest) != comp {
                return Err(Error::NotAComponent { set: comp });
            }
            comp
        }
        None => {
            let v = rest.first().ok_or(Error::EmptyComponent)?;
            view.grow_component(v, rest)
        }
    };
    let sub = view.restrict(comp);
    let w = inner(&sub)?;
    if !w.is_subset(&comp) {
        return Err(Error::OutsideSubgraph { set: w });
    }
    Ok(cutset | w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cradle::ExactProvider;
    use crate::graph::Graph;
    use crate::oracle;

    #[test]
    fn closed_neighbourhoods() {
        let c5 = Graph::cycle(5).unwrap();
        let w = closed_neighbourhood_hitting(&c5.view(), 0).unwrap();
        assert_eq!(w, VertexSet::from([0, 1, 4]));
        assert!(oracle::verify_hitting_set(&c5.view(), w).unwrap());
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(closed_neighbourhood_hitting(&g.view(), 2).unwrap(), VertexSet::singleton(2));
        assert!(closed_neighbourhood_hitting(&g.view(), 5).is_err());
    }

    #[test]
    fn reduction_rounds() {
        let c5 = Graph::cycle(5).unwrap();
        let v = c5.view();
        let exact = ExactProvider::new(3u32);
        let once = iterated_alpha_reduction(&v, v.vertices(), 1, &exact).unwrap();
        assert_eq!(once, oracle::eta_exact(&v, 100).unwrap().1);
        let twice = iterated_alpha_reduction(&v, v.vertices(), 2, &exact).unwrap();
        assert!(twice.len() <= 6);
        assert_eq!(oracle::alpha_number(&v.without(twice)), 0);

        // A clique empties after one round; further rounds are skipped.
        let k4 = Graph::complete(4).unwrap();
        let kv = k4.view();
        let w = iterated_alpha_reduction(&kv, kv.vertices(), 3, &ExactProvider::new(4u32)).unwrap();
        assert_eq!(w, kv.vertices());
    }

    #[test]
    fn many_times_cover_check() {
        let c5 = Graph::cycle(5).unwrap();
        let v = c5.view();
        let exact = ExactProvider::new(3u32);
        let bad = [Part { a: VertexSet::from([0, 1]), a_prime: VertexSet::from([2, 3]), d: 1, provider: &exact }];
        assert_eq!(hit_many_times(&v, &bad), Err(Error::CoverViolation { part: 0 }));
        let all = v.vertices();
        let ok = [Part { a: all, a_prime: all, d: 2, provider: &exact }];
        let w = hit_many_times(&v, &ok).unwrap();
        assert!(oracle::verify_hitting_set(&v, w).unwrap());
    }

    #[test]
    fn cutsets() {
        let p4 = Graph::path(4).unwrap();
        let v = p4.view();
        let first = |h: &View<'_>| Ok(VertexSet::singleton(h.vertices().first().unwrap()));
        assert_eq!(cutset_reduce(&v, VertexSet::new(), None, &first).unwrap(), VertexSet::singleton(0));
        let c = VertexSet::from([0, 1, 2]);
        assert_eq!(cutset_reduce(&v, c, None, &first).unwrap(), v.vertices());
        assert_eq!(cutset_reduce(&v, v.vertices(), None, &first), Err(Error::EmptyComponent));
        let not_comp = VertexSet::from([2]);
        assert_eq!(
            cutset_reduce(&v, VertexSet::from([0]), Some(not_comp), &first),
            Err(Error::NotAComponent { set: not_comp })
        );
        let comp = VertexSet::from([2, 3]);
        assert_eq!(
            cutset_reduce(&v, VertexSet::from([1]), Some(comp), &first).unwrap(),
            VertexSet::from([1, 2])
        );
    }
}
