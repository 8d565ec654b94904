//! Seeded graph families, printed as graph6.

use etabound::generators::{enumerate_small_graphs, GenSpec};
use etabound::graph::graph6;

fn main() -> etabound::Result<()> {
    let specs: Vec<GenSpec> = serde_json::from_str(
        r#"[
            {"kind": "gnp", "n": 10, "p": "1/2", "seed": 42},
            {"kind": "h_free", "n": 9, "p": 0.2, "seed": 1, "pattern": "P5"},
            {"kind": "split", "clique": 3, "stable": 4, "p": 0.5, "seed": 1, "count": 2},
            {"kind": "cograph", "n": 8, "seed": 5},
            {"kind": "line_graph", "n": 6, "p": 0.5, "seed": 2},
            {"kind": "co_bipartite", "a": 3, "b": 3, "p": 0.5, "seed": 3}
        ]"#,
    )
    .expect("valid specs");
    for spec in &specs {
        for g in spec.generate()? {
            println!("{:<40} {}", serde_json::to_string(spec).expect("serialisable"), graph6::encode(&g));
        }
    }
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_small_graphs(n).map(|v| v.len())).collect::<Result<_, _>>()?;
    println!("graphs on 1..=7 vertices: {counts:?}");
    Ok(())
}
