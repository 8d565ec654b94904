//! Reading and writing graph6 and edge lists.

use etabound::graph::{edgelist, graph6};
use etabound::Graph;

fn main() -> etabound::Result<()> {
    let petersen = Graph::from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )?;
    let code = graph6::encode(&petersen);
    println!("Petersen graph: {code}");
    assert_eq!(graph6::decode(&code)?, petersen);

    let text = edgelist::write(&petersen);
    println!("as an edge list:\n{text}");
    assert_eq!(edgelist::parse(&text)?, petersen);

    for bad in ["", "D~", "D~{x"] {
        println!("{bad:?}: {}", graph6::decode(bad).unwrap_err());
    }
    Ok(())
}
