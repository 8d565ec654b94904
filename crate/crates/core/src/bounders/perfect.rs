use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};
use crate::oracle::{self, exact_colouring, ClassParams, HittingCertificate, DEFAULT_PERFECTION_CAP};

use super::{imperfection, CheckMode};

/// The smallest clique of a cover by `α` cliques; at most `ω` vertices.
///
/// Every maximum stable set takes exactly one vertex from each clique of
/// such a cover, so any one clique hits them all.
pub fn perfect_hitting_set(view: &View<'_>, mode: CheckMode) -> Result<HittingCertificate> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if mode.eager(view.len(), DEFAULT_PERFECTION_CAP) {
        imperfection(view, usize::MAX)?;
    }
    let w = perfect_set(view)?;
    let omega = oracle::omega_number(view);
    HittingCertificate::certify(view, w, "perfect", ClassParams::c(omega), BigUint::from(omega))
}

pub(crate) fn perfect_set(view: &View<'_>) -> Result<VertexSet> {
    let alpha = oracle::alpha_number(view);
    let (g, map) = view.materialize();
    let co = g.complement();
    let cover = match exact_colouring(&co.view(), Some(alpha)) {
        Ok(c) => c,
        Err(Error::ColourLimitExceeded { .. }) => {
            return Err(Error::Imperfect {
                evidence: format!("no cover by alpha = {alpha} cliques exists"),
                witness: view.vertices(),
            })
        }
        Err(e) => return Err(e),
    };
    let smallest = cover
        .classes
        .iter()
        .min_by_key(|c| c.len())
        .expect("non-empty graph has a class");
    Ok(smallest.iter().map(|i| map[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn perfect_examples() {
        let k4 = Graph::complete(4).unwrap();
        let cert = perfect_hitting_set(&k4.view(), CheckMode::Auto).unwrap();
        assert_eq!(cert.hitting_set, k4.vertices());

        let p4 = Graph::path(4).unwrap();
        let cert = perfect_hitting_set(&p4.view(), CheckMode::Auto).unwrap();
        assert_eq!(cert.size(), oracle::eta_exact(&p4.view(), 100).unwrap().0);

        let c6 = Graph::cycle(6).unwrap();
        let cert = perfect_hitting_set(&c6.view(), CheckMode::Auto).unwrap();
        assert!(cert.size() <= 2);
    }

    #[test]
    fn imperfect_inputs() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(perfect_hitting_set(&c5.view(), CheckMode::Strict), Err(Error::Imperfect { .. })));
        // Lazily, C5 still fails: its complement needs 3 > alpha colours.
        assert!(matches!(perfect_hitting_set(&c5.view(), CheckMode::Lazy), Err(Error::Imperfect { .. })));
    }
}
