use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};
use crate::oracle;

/// Something that hits every maximum stable set of the induced subgraphs it
/// is handed, within a declared budget.
pub trait HittingProvider: Sync {
    fn budget(&self) -> &BigUint;

    /// A hitting set for the non-empty `view`. Callers go through [`provide`],
    /// which enforces the budget.
    fn hit(&self, view: &View<'_>) -> Result<VertexSet>;
}

/// Calls the provider and checks containment and budget.
pub fn provide(provider: &dyn HittingProvider, view: &View<'_>) -> Result<VertexSet> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let w = provider.hit(view)?;
    if !w.is_subset(&view.vertices()) {
        return Err(Error::OutsideSubgraph { set: w });
    }
    if BigUint::from(w.len()) > *provider.budget() {
        return Err(Error::BudgetExceeded {
            size: w.len(),
            budget: provider.budget().clone(),
        });
    }
    Ok(w)
}

/// A provider backed by a closure.
pub struct FnProvider<F> {
    budget: BigUint,
    f: F,
}

impl<F> FnProvider<F>
where
    F: Fn(&View<'_>) -> Result<VertexSet> + Sync,
{
    pub fn new(budget: impl Into<BigUint>, f: F) -> Self {
        FnProvider { budget: budget.into(), f }
    }
}

impl<F> HittingProvider for FnProvider<F>
where
    F: Fn(&View<'_>) -> Result<VertexSet> + Sync,
{
    fn budget(&self) -> &BigUint {
        &self.budget
    }

    fn hit(&self, view: &View<'_>) -> Result<VertexSet> {
        (self.f)(view)
    }
}

/// Minimum hitting sets from the exact oracle.
pub struct ExactProvider {
    budget: BigUint,
    cap: usize,
}

impl ExactProvider {
    pub fn new(budget: impl Into<BigUint>) -> Self {
        ExactProvider {
            budget: budget.into(),
            cap: oracle::DEFAULT_ENUMERATION_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

impl HittingProvider for ExactProvider {
    fn budget(&self) -> &BigUint {
        &self.budget
    }

    fn hit(&self, view: &View<'_>) -> Result<VertexSet> {
        Ok(oracle::eta_exact(view, self.cap)?.1)
    }
}

/// Wraps a provider and verifies each returned set with the oracle.
pub struct Checked<P>(pub P);

impl<P: HittingProvider> HittingProvider for Checked<P> {
    fn budget(&self) -> &BigUint {
        self.0.budget()
    }

    fn hit(&self, view: &View<'_>) -> Result<VertexSet> {
        let w = self.0.hit(view)?;
        if !w.is_subset(&view.vertices()) {
            return Err(Error::OutsideSubgraph { set: w });
        }
        if !oracle::verify_hitting_set(view, w)? {
            return Err(Error::NotHitting {
                set: w,
                alpha: oracle::alpha_number(view),
            });
        }
        Ok(w)
    }
}
