//! Perfection checks and the omega-sized hitting set of a perfect graph.

use etabound::bounders::{perfect_hitting_set, CheckMode};
use etabound::generators::cograph;
use etabound::oracle::{is_perfect_lovasz, Perfection, DEFAULT_PERFECTION_CAP};
use etabound::Graph;

fn main() -> etabound::Result<()> {
    for (name, g) in [("C5", Graph::cycle(5)?), ("C6", Graph::cycle(6)?), ("cograph", cograph(12, 3)?)] {
        match is_perfect_lovasz(&g.view(), DEFAULT_PERFECTION_CAP)? {
            Perfection::Perfect => {
                let cert = perfect_hitting_set(&g.view(), CheckMode::Strict)?;
                println!("{name}: perfect, omega={} W={{{}}}", cert.params.c, cert.hitting_set);
            }
            Perfection::Imperfect(w) => println!("{name}: imperfect on {{{w}}}"),
        }
    }
    Ok(())
}
