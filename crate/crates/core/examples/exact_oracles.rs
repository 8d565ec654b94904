//! Stability number, clique number and a minimum hitting set for a few
//! small graphs.

use etabound::oracle::{self, DEFAULT_ENUMERATION_CAP};
use etabound::Graph;

fn main() -> etabound::Result<()> {
    let graphs = [
        ("K5", Graph::complete(5)?),
        ("C5", Graph::cycle(5)?),
        ("P4", Graph::path(4)?),
        ("C7", Graph::cycle(7)?),
    ];
    for (name, g) in &graphs {
        let v = g.view();
        let (alpha, stable) = oracle::alpha(&v)?;
        let (omega, clique) = oracle::omega(&v)?;
        let family = oracle::enumerate_maximum_stable_sets(&v, DEFAULT_ENUMERATION_CAP)?;
        let (eta, w) = oracle::eta_exact(&v, DEFAULT_ENUMERATION_CAP)?;
        println!("{name}: alpha={alpha} ({stable}) omega={omega} ({clique})");
        println!("    {} maximum stable sets, eta={eta}, minimum hitting set {{{w}}}", family.len());
    }
    Ok(())
}
