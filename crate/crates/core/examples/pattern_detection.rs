//! Induced-subgraph detection for the named patterns.

use etabound::graph::pattern::{find_induced_pattern, Pattern};
use etabound::Graph;

fn main() -> etabound::Result<()> {
    let c6 = Graph::cycle(6)?;
    for name in ["P5", "P6", "K1,3", "S2,1", "F1", "L1", "2K2", "C5"] {
        let pattern: Pattern = name.parse()?;
        match find_induced_pattern(&c6.view(), &pattern) {
            Some(w) => println!("C6 contains {pattern} on {w:?}"),
            None => println!("C6 is {pattern}-free"),
        }
    }
    Ok(())
}
