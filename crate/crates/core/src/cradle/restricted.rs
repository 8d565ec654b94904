use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};
use crate::oracle::{self, StableSetFamily};

use super::bounds::gamma_bound;
use super::provider::{provide, HittingProvider};
use super::rocker::{minimal_covering_subset, rocker_within};
use super::{violation, Cradle};

/// The maximum stable sets of the view that are restricted to the cradle.
pub fn enumerate_restricted_maximum_stable_sets(view: &View<'_>, cradle: &Cradle, cap: usize) -> Result<StableSetFamily> {
    view.check(&cradle.x)?;
    view.check(&cradle.z)?;
    let (alpha, _) = oracle::alpha(view)?;
    let members = oracle::enumerate_stable_sets_of_size(view, cradle.x | cradle.z, alpha, cap)?
        .into_iter()
        .filter(|s| s.intersects(&cradle.x))
        .collect();
    Ok(StableSetFamily { alpha, members })
}

/// A set meeting every cradle-restricted maximum stable set of a P5-free
/// graph with `ω ≤ c`, given `ω(G[X]) ≤ d` and a provider for subsets of `X`.
/// The result has at most `Γ(c, d, h)` vertices, `h` the provider budget.
pub fn restricted_hitting_set(
    view: &View<'_>,
    cradle: &Cradle,
    provider: &dyn HittingProvider,
    c: usize,
    d: usize,
) -> Result<VertexSet> {
    view.check(&cradle.x)?;
    view.check(&cradle.z)?;
    if c == 0 || d == 0 {
        return Err(Error::InvalidParameter("c and d must be at least 1".into()));
    }
    if let Some(v) = violation(view, cradle.x, cradle.z) {
        return Err(Error::InvalidCradle(v));
    }
    let omega = oracle::omega_number(view);
    if omega > c {
        return Err(Error::InvalidParameter(format!("omega = {omega} exceeds c = {c}")));
    }
    let omega_x = oracle::omega_number(&view.restrict(cradle.x));
    if omega_x > d {
        return Err(Error::InvalidParameter(format!("omega(X) = {omega_x} exceeds d = {d}")));
    }
    let w = restricted_unchecked(view, cradle.x, cradle.z, provider, c, d)?;
    let bound = gamma_bound(c, d, provider.budget());
    if BigUint::from(w.len()) > bound {
        return Err(Error::BudgetExceeded { size: w.len(), budget: bound });
    }
    Ok(w)
}

/// The recursion itself; the caller vouches for the cradle and for `ω(G[X]) ≤ d`.
pub(crate) fn restricted_unchecked(
    view: &View<'_>,
    x: VertexSet,
    z: VertexSet,
    provider: &dyn HittingProvider,
    c: usize,
    d: usize,
) -> Result<VertexSet> {
    Engine { view, provider, c }.run(x, z, d)
}

struct Engine<'a, 'g> {
    view: &'a View<'g>,
    provider: &'a dyn HittingProvider,
    c: usize,
}

impl Engine<'_, '_> {
    fn run(&self, x: VertexSet, z: VertexSet, d: usize) -> Result<VertexSet> {
        let view = self.view;
        if x.len() <= 1 {
            return Ok(x);
        }
        let z_complete = z.iter().all(|v| x.is_subset(&view.neighbours(v)));
        if z_complete {
            // Restricted sets lie inside X. For d = 1, X is stable and is
            // itself the only one, so any vertex of it will do.
            if d == 1 {
                return Ok(VertexSet::singleton(x.first().expect("|X| >= 2")));
            }
            return provide(self.provider, &view.restrict(x));
        }
        let rocker = rocker_within(view, x, z, Some(self.c))?;
        let parts = rocker.union();
        if parts.is_empty() {
            return Err(Error::Assertion {
                step: "non-empty rocker",
                detail: "some Z-vertex is incomplete to X but I and J are both empty".into(),
                witness: x,
            });
        }
        if d == 1 {
            return Ok(parts.iter().fold(VertexSet::new(), |a, q| a | *q));
        }
        let y_limit = y_limit(self.c);
        let mut w = VertexSet::new();
        for q in parts {
            w |= provide(self.provider, &view.restrict(q))?;
            let nzq = view.open_neighbourhood(q) & z;
            let demanders: Vec<usize> = q.iter().filter(|&v| !(nzq - view.neighbours(v)).is_empty()).collect();
            let y = minimal_covering_subset(&nzq.to_vec(), &demanders, |&v, &u| !view.has_edge(v, u))?;
            if y_limit.as_ref().is_some_and(|&lim| y.len() as u128 >= lim) {
                return Err(Error::Assertion {
                    step: "small Y",
                    detail: format!("|Y| = {} is not below (c+1)^(c+1) for c = {}", y.len(), self.c),
                    witness: y.iter().collect(),
                });
            }
            for u in y {
                let xy = q - view.neighbours(u);
                let zy = (x - xy) | z;
                if let Some(v) = violation(view, xy, zy) {
                    return Err(Error::Assertion {
                        step: "derived cradle",
                        detail: format!("(X_y, Z_y) for y = {u} is not a cradle: {v}"),
                        witness: xy,
                    });
                }
                let omega_xy = oracle::omega_number(&view.restrict(xy));
                if omega_xy > d - 1 {
                    return Err(Error::Assertion {
                        step: "clique drop",
                        detail: format!("omega(X_y) = {omega_xy} for y = {u}, expected at most {}", d - 1),
                        witness: xy,
                    });
                }
                w |= self.run(xy, zy, d - 1)?;
            }
        }
        Ok(w)
    }
}

/// `(c+1)^(c+1)` when it fits in 128 bits; beyond that no `|Y|` can reach it.
fn y_limit(c: usize) -> Option<u128> {
    (c as u128 + 1).checked_pow(u32::try_from(c + 1).ok()?)
}

/// Union of restricted hitting sets over a cradle packing, with `d = c`.
/// At most `|packing| · Γ(c, c, h)` vertices.
pub fn packing_hitting_set(
    view: &View<'_>,
    packing: &[Cradle],
    provider: &dyn HittingProvider,
    c: usize,
) -> Result<VertexSet> {
    let mut w = VertexSet::new();
    for cradle in packing {
        w |= restricted_hitting_set(view, cradle, provider, c, c)?;
    }
    let bound = BigUint::from(packing.len()) * gamma_bound(c.max(1), c.max(1), provider.budget());
    if BigUint::from(w.len()) > bound {
        return Err(Error::BudgetExceeded { size: w.len(), budget: bound });
    }
    Ok(w)
}
