//! A cradle, its rocker, and a set hitting every maximum stable set
//! restricted to it.

use etabound::cradle::{build_rocker, enumerate_restricted_maximum_stable_sets, restricted_hitting_set, Cradle, ExactProvider};
use etabound::oracle::{self, DEFAULT_ENUMERATION_CAP};
use etabound::{Graph, VertexSet};

fn main() -> etabound::Result<()> {
    // Two triangles {0,1,2} and {3,4,5} joined through 6, plus a pendant 7 on 6.
    let g = Graph::from_edges(8, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 6), (5, 6), (6, 7)])?;
    let v = g.view();
    let x = VertexSet::from([0, 1, 3, 4]);
    let z = VertexSet::from([2, 5, 7]);
    let cradle = Cradle::new(&v, x, z)?;
    let rocker = build_rocker(&v, &cradle)?;
    println!("rocker: I = {:?}, J = {:?}", rocker.i, rocker.j);

    let restricted = enumerate_restricted_maximum_stable_sets(&v, &cradle, DEFAULT_ENUMERATION_CAP)?;
    let omega = oracle::omega_number(&v);
    let w = restricted_hitting_set(&v, &cradle, &ExactProvider::new(g.n()), omega, 2)?;
    println!("{} restricted maximum stable sets, all hit by {{{w}}}", restricted.len());
    assert!(restricted.is_hit_by(w));
    Ok(())
}
