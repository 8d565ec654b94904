//! Constructive extraction of a `c`-clique or an `s`-stable set from any
//! graph on at least `c^s` vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyKind {
    Clique,
    Stable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyOutcome {
    pub kind: RamseyKind,
    pub witness: VertexSet,
}

impl RamseyOutcome {
    /// Checks the witness has the promised kind and size.
    pub fn is_valid(&self, view: &View<'_>, c: usize, s: usize) -> bool {
        self.witness.is_subset(&view.vertices())
            && match self.kind {
                RamseyKind::Clique => self.witness.len() >= c && view.is_clique(self.witness),
                RamseyKind::Stable => self.witness.len() >= s && view.is_stable(self.witness),
            }
    }
}

/// Returns a clique of exactly `c` vertices or a stable set of exactly `s`.
///
/// Takes a maximal clique `K` greedily. If it is too small, the
/// non-neighbourhoods `M_x` of its members cover the rest of the graph, so
/// one of them has at least `c^(s-1)` vertices; recurse there and add `x`
/// to any stable set found.
pub fn ramsey_extract(view: &View<'_>, c: usize, s: usize) -> Result<RamseyOutcome> {
    if c == 0 || s == 0 {
        return Err(Error::InvalidParameter("ramsey parameters must be at least 1".into()));
    }
    let needed = threshold(c, s)
        .ok_or_else(|| Error::InvalidParameter(format!("{c}^{s} exceeds the supported graph order")))?;
    if view.len() < needed {
        return Err(Error::InvalidParameter(format!(
            "ramsey extraction needs at least {c}^{s} = {needed} vertices, got {}",
            view.len()
        )));
    }
    extract(view, c, s)
}

fn threshold(c: usize, s: usize) -> Option<usize> {
    c.checked_pow(u32::try_from(s).ok()?)
}

fn extract(view: &View<'_>, c: usize, s: usize) -> Result<RamseyOutcome> {
    let first = view.vertices().first().expect("precondition gives a vertex");
    if c == 1 {
        return Ok(RamseyOutcome {
            kind: RamseyKind::Clique,
            witness: VertexSet::singleton(first),
        });
    }
    if s == 1 {
        return Ok(RamseyOutcome {
            kind: RamseyKind::Stable,
            witness: VertexSet::singleton(first),
        });
    }
    let mut clique = VertexSet::new();
    for v in view.vertices().iter() {
        if clique.is_subset(&view.neighbours(v)) {
            clique.insert(v);
            if clique.len() == c {
                return Ok(RamseyOutcome {
                    kind: RamseyKind::Clique,
                    witness: clique,
                });
            }
        }
    }
    let needed = threshold(c, s - 1).expect("smaller than the checked threshold");
    for x in clique.iter() {
        let mut m = view.non_neighbours(x);
        m.remove(x);
        if m.len() >= needed {
            let inner = extract(&view.restrict(m), c, s - 1)?;
            return Ok(match inner.kind {
                RamseyKind::Clique => inner,
                RamseyKind::Stable => {
                    let mut witness = inner.witness;
                    witness.insert(x);
                    RamseyOutcome {
                        kind: RamseyKind::Stable,
                        witness,
                    }
                }
            });
        }
    }
    Err(Error::Assertion {
        step: "ramsey pigeonhole",
        detail: format!("no member of a maximal {}-clique has {needed} non-neighbours", clique.len()),
        witness: clique,
    })
}
