//! Every graph on c^s vertices has a c-clique or an s-stable set; this
//! finds one.

use etabound::generators::{gnp, Probability};
use etabound::ramsey::ramsey_extract;

fn main() -> etabound::Result<()> {
    for seed in 0..5 {
        let g = gnp(27, Probability::new(1, 2)?, seed)?;
        let out = ramsey_extract(&g.view(), 3, 3)?;
        println!("seed {seed}: {:?} on {{{}}}", out.kind, out.witness);
        assert!(out.is_valid(&g.view(), 3, 3));
    }
    Ok(())
}
