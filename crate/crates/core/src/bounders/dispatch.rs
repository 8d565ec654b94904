use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::pattern::{find_induced_subgraph, Pattern};
use crate::graph::{Graph, View};
use crate::oracle::{self, ClassParams, HittingCertificate};

use super::bounds::proper_p5_bound;
use super::lt::lt_set;
use super::perfect::perfect_set;
use super::sst::sst_set;
use super::{diagnose, gate, CheckMode};

/// Which construction handles `H`-free graphs for a proper induced subgraph
/// `H` of P5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProperP5Route {
    /// `H ⊆ P4`: `H`-free graphs are perfect.
    Perfect,
    /// `H ⊆ S_(2,1)`.
    Sst21,
    /// `H ⊆ L_1`.
    L1,
}

impl fmt::Display for ProperP5Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProperP5Route::Perfect => "perfect",
            ProperP5Route::Sst21 => "sst:2,1",
            ProperP5Route::L1 => "lt:1",
        })
    }
}

fn contains(host: &Graph, h: &Graph) -> bool {
    find_induced_subgraph(&host.view(), h).is_some()
}

/// The route for `h`, or an error if `h` is not a proper induced subgraph of P5.
pub fn proper_p5_route(h: &Graph) -> Result<ProperP5Route> {
    let p5 = Pattern::Path(5).graph();
    if h.n() == 0 || h.n() >= 5 || !contains(&p5, h) {
        return Err(Error::NotProperP5Subgraph(Pattern::Explicit(h.clone()).to_string()));
    }
    if contains(&Pattern::Path(4).graph(), h) {
        Ok(ProperP5Route::Perfect)
    } else if contains(&Pattern::Sst(2, 1).graph(), h) {
        Ok(ProperP5Route::Sst21)
    } else if contains(&Pattern::Lt(1).graph(), h) {
        Ok(ProperP5Route::L1)
    } else {
        Err(Error::Assertion {
            step: "dispatch table",
            detail: format!("{} is in P5 but in none of P4, S2,1, L1", Pattern::Explicit(h.clone())),
            witness: h.vertices(),
        })
    }
}

/// Hitting set of size at most `ω^14` for an `H`-free graph.
pub fn proper_p5_dispatch(view: &View<'_>, h: &Pattern, mode: CheckMode) -> Result<HittingCertificate> {
    let route = proper_p5_route(&h.graph())?;
    gate(view, h, mode)?;
    let w = diagnose(
        view,
        h,
        match route {
            ProperP5Route::Perfect => perfect_set(view),
            ProperP5Route::Sst21 => sst_set(view, oracle::omega_number(view), 2, 1),
            ProperP5Route::L1 => lt_set(view, 1),
        },
    )?;
    let omega = oracle::omega_number(view);
    let result = HittingCertificate::certify(view, w, format!("proper-p5/{route}"), ClassParams::c(omega), proper_p5_bound(omega));
    diagnose(view, h, result)
}
