//! Certified hitting sets for P5-free graphs.

use etabound::cradle::{p5_hitting_set, P5Options};
use etabound::generators::{split_graph, Probability};
use etabound::oracle;
use etabound::Graph;

fn main() -> etabound::Result<()> {
    let mut graphs = vec![Graph::cycle(5)?, Graph::complete(4)?];
    for seed in 0..4 {
        graphs.push(split_graph(6, 10, Probability::new(1, 2)?, seed)?);
    }
    for g in &graphs {
        let v = g.view();
        let cert = p5_hitting_set(&v, P5Options::strict(true))?;
        let (eta, _) = oracle::eta_exact(&v, oracle::DEFAULT_ENUMERATION_CAP)?;
        println!(
            "n={:2} omega={} eta={} |W|={:2} bound={} alpha {} -> {}",
            g.n(),
            cert.params.c,
            eta,
            cert.size(),
            cert.claimed_bound,
            cert.alpha_before,
            cert.alpha_after
        );
    }
    println!("P5 itself: {}", p5_hitting_set(&Graph::path(5)?.view(), P5Options::strict(true)).unwrap_err());
    Ok(())
}
