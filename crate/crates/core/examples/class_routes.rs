//! Every class route on one graph, and which ones accept it.

use etabound::bounders::{proper_p5_route, CheckMode, ClassSpec};
use etabound::graph::pattern::Pattern;
use etabound::Graph;

fn main() -> etabound::Result<()> {
    let c5 = Graph::cycle(5)?;
    for route in ["p5", "star:3", "sst:2,1", "ft:1", "ft:2", "lt:1", "perfect", "proper-p5:2K2"] {
        let spec: ClassSpec = route.parse()?;
        match spec.run(&c5.view(), CheckMode::Strict) {
            Ok(cert) => println!("{route:14} |W|={} bound={} W={{{}}}", cert.size(), cert.claimed_bound, cert.hitting_set),
            Err(e) => println!("{route:14} rejected: {e}"),
        }
    }
    for h in ["P4", "2K2", "S2,1", "K1,2", "L1"] {
        let pattern: Pattern = h.parse()?;
        match proper_p5_route(&pattern.graph()) {
            Ok(r) => println!("{h}-free graphs go through {r}"),
            Err(e) => println!("{h}: {e}"),
        }
    }
    Ok(())
}
