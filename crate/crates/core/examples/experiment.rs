//! A small batch experiment run in-process, printed as CSV.

use etabound::cli::{Manifest, RunOptions};

fn main() -> etabound::Result<()> {
    let manifest = Manifest::parse(
        r#"{
            "generators": [
                {"kind": "exhaustive", "n": 5},
                {"kind": "split", "clique": 4, "stable": 6, "p": 0.5, "seed": 7, "count": 5}
            ],
            "routes": ["p5", "lt:1", "perfect"]
        }"#,
    )?;
    let report = manifest.run(&RunOptions { reproducible: true, ..Default::default() })?;
    report.write_csv(&mut std::io::stdout())?;
    for s in &report.summary {
        println!("# {} omega={} rows={} max|W|={} max|W|/eta={:?}", s.route, s.omega, s.rows, s.max_size, s.max_ratio);
    }
    Ok(())
}
