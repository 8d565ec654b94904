//! Batch experiments: every route of a manifest on every generated graph,
//! one report row per (graph, route) pair.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounders::{CheckMode, ClassSpec};
use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::graph::{graph6, Graph};
use crate::oracle;

use super::{exit_for, Exit};

fn yes() -> bool {
    true
}

fn default_eta_max_order() -> usize {
    32
}

/// Which exact oracles run on each graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Oracles {
    /// Compute `η` exactly for the ratio column.
    #[serde(default = "yes")]
    pub eta: bool,
    /// Graphs above this order get no exact `η`.
    #[serde(default = "default_eta_max_order")]
    pub eta_max_order: usize,
    #[serde(default = "default_cap")]
    pub eta_cap: usize,
}

fn default_cap() -> usize {
    oracle::DEFAULT_ENUMERATION_CAP
}

impl Default for Oracles {
    fn default() -> Self {
        Oracles { eta: true, eta_max_order: default_eta_max_order(), eta_cap: default_cap() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub generators: Vec<GenSpec>,
    pub routes: Vec<ClassSpec>,
    #[serde(default)]
    pub oracles: Oracles,
    /// CSV destination; standard output when absent.
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// JSON destination; defaults to `output` with a `.json` extension.
    #[serde(default)]
    pub json_output: Option<PathBuf>,
    /// Worker threads; all available cores when absent.
    #[serde(default)]
    pub parallelism: Option<usize>,
    /// Leave out graphs outside a route's class instead of reporting them
    /// as failures.
    #[serde(default = "yes")]
    pub skip_non_members: bool,
    #[serde(default)]
    pub allow_unverified: bool,
    /// Membership checking inside routes when non-members are not skipped.
    #[serde(default)]
    pub check: CheckMode,
}

/// Run-time switches that are not part of the manifest.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub reproducible: bool,
    pub allow_unverified: bool,
    pub threads: Option<usize>,
}

/// One (graph, route) result. Column order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub graph: String,
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub eta: Option<usize>,
    pub route: String,
    pub size: Option<usize>,
    pub claimed_bound: Option<String>,
    pub verified: bool,
    pub wall_ms: Option<f64>,
    /// `kind: message` for failed rows.
    pub error: Option<String>,
    #[serde(skip)]
    pub exit: Exit,
}

/// Aggregate over the rows of one route with one clique number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub route: String,
    pub omega: usize,
    pub rows: usize,
    pub verified: usize,
    pub max_size: usize,
    /// Largest `|W| / η` among rows with an exact `η`.
    pub max_ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Unix seconds; absent in reproducible runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<u64>,
    pub rows: Vec<ReportRow>,
    pub summary: Vec<SummaryRow>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let manifest: Manifest =
            serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("manifest: {e}")))?;
        manifest.validate()?;
        Ok(manifest)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("manifest: {msg}")));
        if self.generators.is_empty() {
            return bad("at least one generator is required");
        }
        if self.routes.is_empty() {
            return bad("at least one route is required");
        }
        if self.parallelism == Some(0) {
            return bad("parallelism must be at least 1");
        }
        self.routes.iter().try_for_each(ClassSpec::validate)
    }

    pub fn json_path(&self) -> Option<PathBuf> {
        self.json_output.clone().or_else(|| self.output.as_ref().map(|p| p.with_extension("json")))
    }

    /// Generates every graph, then runs the routes over a worker pool. Rows
    /// come back in generator order whatever the thread count.
    pub fn run(&self, opts: &RunOptions) -> Result<Report> {
        self.validate()?;
        let threads = opts.threads.or(self.parallelism).unwrap_or(0);
        if opts.threads == Some(0) {
            return Err(Error::InvalidParameter("thread count must be at least 1".into()));
        }
        let mut graphs = Vec::new();
        for spec in &self.generators {
            graphs.extend(spec.generate()?);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        let rows: Vec<ReportRow> =
            pool.install(|| graphs.par_iter().flat_map_iter(|g| self.rows_for(g, opts)).collect());
        let generated = if opts.reproducible {
            None
        } else {
            SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
        };
        Ok(Report { generated, summary: summarise(&rows), rows })
    }

    fn rows_for(&self, g: &Graph, opts: &RunOptions) -> Vec<ReportRow> {
        let view = g.view();
        let code = graph6::encode(g);
        let alpha = oracle::alpha_number(&view);
        let omega = oracle::omega_number(&view);
        let eta = (self.oracles.eta && !view.is_empty() && g.n() <= self.oracles.eta_max_order)
            .then(|| oracle::eta_exact(&view, self.oracles.eta_cap).ok().map(|(e, _)| e))
            .flatten();
        let allow_unverified = opts.allow_unverified || self.allow_unverified;
        let mut rows = Vec::new();
        for route in &self.routes {
            let mut row = ReportRow {
                graph: code.clone(),
                n: g.n(),
                omega,
                alpha,
                eta,
                route: route.to_string(),
                size: None,
                claimed_bound: None,
                verified: false,
                wall_ms: None,
                error: None,
                exit: Exit::Ok,
            };
            let fail = |row: &mut ReportRow, e: &Error| {
                row.error = Some(format!("{}: {e}", e.kind()));
                row.exit = exit_for(e);
            };
            let start = Instant::now();
            let mode = if self.skip_non_members {
                match route.contains(&view) {
                    Ok(true) => CheckMode::Lazy,
                    Ok(false) => continue,
                    Err(e) => {
                        fail(&mut row, &e);
                        rows.push(row);
                        continue;
                    }
                }
            } else {
                self.check
            };
            match route.run(&view, mode) {
                Ok(cert) => {
                    row.size = Some(cert.size());
                    row.claimed_bound = Some(cert.claimed_bound.to_string());
                    if !allow_unverified {
                        match oracle::verify_hitting_set(&view, cert.hitting_set) {
                            Ok(true) => row.verified = true,
                            Ok(false) => {
                                row.error = Some("not_hitting: independent verification failed".into());
                                row.exit = Exit::Unverified;
                            }
                            Err(e) => fail(&mut row, &e),
                        }
                    }
                }
                Err(e) => fail(&mut row, &e),
            }
            if !opts.reproducible {
                row.wall_ms = Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
            }
            rows.push(row);
        }
        rows
    }
}

fn summarise(rows: &[ReportRow]) -> Vec<SummaryRow> {
    let mut buckets: BTreeMap<(String, usize), SummaryRow> = BTreeMap::new();
    for row in rows {
        let entry = buckets.entry((row.route.clone(), row.omega)).or_insert_with(|| SummaryRow {
            route: row.route.clone(),
            omega: row.omega,
            rows: 0,
            verified: 0,
            max_size: 0,
            max_ratio: None,
        });
        entry.rows += 1;
        entry.verified += usize::from(row.verified);
        if let Some(size) = row.size {
            entry.max_size = entry.max_size.max(size);
            if let Some(eta) = row.eta.filter(|&e| e > 0) {
                let ratio = size as f64 / eta as f64;
                entry.max_ratio = Some(entry.max_ratio.map_or(ratio, |r: f64| r.max(ratio)));
            }
        }
    }
    buckets.into_values().collect()
}

impl Report {
    /// The worst exit status over all rows.
    pub fn exit(&self) -> Exit {
        self.rows.iter().map(|r| r.exit).max().unwrap_or_default()
    }

    /// CSV with a fixed column order, preceded by a `# generated` line
    /// unless the run was reproducible.
    pub fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let io = |e: std::io::Error| Error::Io(e.to_string());
        if let Some(secs) = self.generated {
            writeln!(out, "# generated {secs}").map_err(io)?;
        }
        let mut w = csv::Writer::from_writer(out);
        if self.rows.is_empty() {
            w.write_record(COLUMNS).map_err(|e| Error::Io(e.to_string()))?;
        }
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush().map_err(io)
    }
}

/// CSV header, in order.
pub const COLUMNS: [&str; 11] =
    ["graph", "n", "omega", "alpha", "eta", "route", "size", "claimed_bound", "verified", "wall_ms", "error"];
