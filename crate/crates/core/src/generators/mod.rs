//! Seeded graph sources: random graphs, rejection sampling for `H`-free
//! graphs, structured families and exhaustive small-graph enumeration.
//!
//! Every random generator is driven by [`random::rng`], so a given
//! `(parameters, seed)` yields the same graph on every platform.

mod cograph;
mod exhaustive;
pub mod random;

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::RngCore;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::pattern::Pattern;
use crate::graph::Graph;

pub use cograph::{cograph, Cotree};
pub use exhaustive::{enumerate_small_graphs, MAX_EXHAUSTIVE_ORDER};
pub use random::{co_bipartite, gnp, line_graph, random_h_free, random_line_graph, split_graph};

/// An exact rational probability `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub const ZERO: Probability = Probability { num: 0, den: 1 };
    pub const ONE: Probability = Probability { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidParameter(format!("{num}/{den} is not a probability")));
        }
        Ok(Probability { num, den })
    }

    /// One Bernoulli trial from one 64-bit draw: true iff `r / 2^64 < num / den`.
    pub fn sample(&self, rng: &mut impl RngCore) -> bool {
        let r = rng.next_u64() as u128;
        r * (self.den as u128) < (self.num as u128) << 64
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Probability {
    type Err = Error;

    /// `a/b` or a decimal such as `0.25`, read exactly.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot read {s:?} as a probability"));
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            return Probability::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = whole.checked_mul(den).and_then(|w| w.checked_add(frac)).ok_or_else(bad)?;
        Probability::new(num, den)
    }
}

impl Serialize for Probability {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Probability {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        let text = match Raw::deserialize(d)? {
            Raw::Text(t) => t,
            Raw::Number(x) => x.to_string(),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

fn one() -> usize {
    1
}

fn default_tries() -> usize {
    1000
}

/// A serialisable description of a batch of graphs. Batches of `count`
/// random graphs use seeds `seed, seed + 1, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenSpec {
    Gnp {
        n: usize,
        p: Probability,
        seed: u64,
        #[serde(default = "one")]
        count: usize,
    },
    HFree {
        n: usize,
        p: Probability,
        seed: u64,
        pattern: String,
        #[serde(default = "default_tries")]
        max_tries: usize,
        #[serde(default = "one")]
        count: usize,
    },
    Split {
        clique: usize,
        stable: usize,
        p: Probability,
        seed: u64,
        #[serde(default = "one")]
        count: usize,
    },
    Cograph {
        n: usize,
        seed: u64,
        #[serde(default = "one")]
        count: usize,
    },
    /// Every graph with between `from` (default `n`) and `n` vertices.
    Exhaustive {
        n: usize,
        #[serde(default)]
        from: Option<usize>,
    },
    LineGraph {
        n: usize,
        p: Probability,
        seed: u64,
        #[serde(default = "one")]
        count: usize,
    },
    CoBipartite {
        a: usize,
        b: usize,
        p: Probability,
        seed: u64,
        #[serde(default = "one")]
        count: usize,
    },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Vec<Graph>> {
        let batch = |seed: u64, count: usize, f: &dyn Fn(u64) -> Result<Graph>| -> Result<Vec<Graph>> {
            (0..count as u64).map(|i| f(seed.wrapping_add(i))).collect()
        };
        match self {
            GenSpec::Gnp { n, p, seed, count } => batch(*seed, *count, &|s| gnp(*n, *p, s)),
            GenSpec::HFree { n, p, seed, pattern, max_tries, count } => {
                let pattern: Pattern = pattern.parse()?;
                batch(*seed, *count, &|s| random_h_free(*n, *p, s, &pattern, *max_tries))
            }
            GenSpec::Split { clique, stable, p, seed, count } => {
                batch(*seed, *count, &|s| split_graph(*clique, *stable, *p, s))
            }
            GenSpec::Cograph { n, seed, count } => batch(*seed, *count, &|s| cograph(*n, s)),
            GenSpec::Exhaustive { n, from } => {
                let mut out = Vec::new();
                for order in from.unwrap_or(*n)..=*n {
                    out.extend(enumerate_small_graphs(order)?);
                }
                Ok(out)
            }
            GenSpec::LineGraph { n, p, seed, count } => batch(*seed, *count, &|s| random_line_graph(*n, *p, s)),
            GenSpec::CoBipartite { a, b, p, seed, count } => batch(*seed, *count, &|s| co_bipartite(*a, *b, *p, s)),
        }
    }
}
