//! Hitting sets for further hereditary classes: `K_{1,s}`-free, `S_(s,t)`-free,
//! `F_t`-free, `L_t`-free and perfect graphs, and every class defined by a
//! proper induced subgraph of P5.
//!
//! Each bounder returns a [`HittingCertificate`] whose `claimed_bound` is the
//! class bound evaluated at `ω` of the input. Inputs outside the class are
//! caught either up front ([`CheckMode::Strict`]) or when one of the steps
//! that is guaranteed for members fails, in which case an induced copy of
//! the forbidden pattern is searched for and reported.

mod bounds;
mod dispatch;
mod ft;
mod lemmas;
mod lt;
mod perfect;
mod sst;
mod star;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cradle::{p5_hitting_set, P5Options};
use crate::error::{Error, Result};
use crate::graph::pattern::{find_induced_pattern, require_free, Pattern};
use crate::graph::View;
use crate::oracle::{self, HittingCertificate, Perfection};

pub use bounds::{proper_p5_bound, psi_ft_bound, psi_lt_bound, psi_sst_bound, psi_star_bound};
pub use dispatch::{proper_p5_dispatch, proper_p5_route, ProperP5Route};
pub use ft::ft_hitting_set;
pub use lemmas::{closed_neighbourhood_hitting, cutset_reduce, hit_many_times, iterated_alpha_reduction, Part};
pub use lt::{lt_decomposition, lt_hitting_set, LtDecomposition, LtPart};
pub use perfect::perfect_hitting_set;
pub use sst::sst_hitting_set;
pub use star::star_free_hitting;

/// Order up to which [`CheckMode::Auto`] runs the pattern search first.
pub const AUTO_CHECK_ORDER: usize = 60;

/// When class membership is checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    /// Search for the forbidden pattern before running.
    Strict,
    /// Trust the input; violations surface as failed steps.
    Lazy,
    /// Strict for small inputs, lazy beyond.
    #[default]
    Auto,
}

impl CheckMode {
    pub fn eager(self, n: usize, auto_limit: usize) -> bool {
        match self {
            CheckMode::Strict => true,
            CheckMode::Lazy => false,
            CheckMode::Auto => n <= auto_limit,
        }
    }
}

/// Turns the failure of a step that holds for every class member into a
/// membership error when the pattern can be found.
pub(crate) fn diagnose<T>(view: &View<'_>, pattern: &Pattern, result: Result<T>) -> Result<T> {
    match result {
        Err(
            e @ (Error::Assertion { .. }
            | Error::NotHitting { .. }
            | Error::BudgetExceeded { .. }
            | Error::ColourLimitExceeded { .. }
            | Error::UncoverableDemander { .. }),
        ) => match find_induced_pattern(view, pattern) {
            Some(witness) => Err(Error::NotInClass {
                class: pattern.to_string(),
                witness,
            }),
            None => Err(e),
        },
        other => other,
    }
}

/// Runs the up-front membership check if `mode` asks for it.
pub(crate) fn gate(view: &View<'_>, pattern: &Pattern, mode: CheckMode) -> Result<()> {
    if view.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if mode.eager(view.len(), AUTO_CHECK_ORDER) {
        require_free(view, pattern)?;
    }
    Ok(())
}

/// A graph class with a constructive hitting-set bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    P5Free,
    StarFree(usize),
    SstFree(usize, usize),
    FtFree(usize),
    LtFree(usize),
    Perfect,
    ProperP5(Pattern),
}

impl ClassSpec {
    /// Checks the parameter minima.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("{self}: {msg}")));
        match *self {
            ClassSpec::StarFree(0) | ClassSpec::SstFree(0, _) => bad("s must be at least 1"),
            ClassSpec::FtFree(0) | ClassSpec::LtFree(0) => bad("t must be at least 1"),
            ClassSpec::ProperP5(ref h) => proper_p5_route(&h.graph()).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// The forbidden induced subgraph, if the class has one.
    pub fn pattern(&self) -> Option<Pattern> {
        match *self {
            ClassSpec::P5Free => Some(Pattern::Path(5)),
            ClassSpec::StarFree(s) => Some(Pattern::Star(s)),
            ClassSpec::SstFree(s, t) => Some(Pattern::Sst(s, t)),
            ClassSpec::FtFree(t) => Some(Pattern::Ft(t)),
            ClassSpec::LtFree(t) => Some(Pattern::Lt(t)),
            ClassSpec::Perfect => None,
            ClassSpec::ProperP5(ref h) => Some(h.clone()),
        }
    }

    /// Exact membership test. Perfection is checked exhaustively and is
    /// capped at [`oracle::DEFAULT_PERFECTION_CAP`] vertices.
    pub fn contains(&self, view: &View<'_>) -> Result<bool> {
        match self.pattern() {
            Some(p) => Ok(find_induced_pattern(view, &p).is_none()),
            None => Ok(oracle::is_perfect_lovasz(view, oracle::DEFAULT_PERFECTION_CAP)?.is_perfect()),
        }
    }

    pub fn run(&self, view: &View<'_>, mode: CheckMode) -> Result<HittingCertificate> {
        self.validate()?;
        match *self {
            ClassSpec::P5Free => {
                let strict = match mode {
                    CheckMode::Strict => Some(true),
                    CheckMode::Lazy => Some(false),
                    CheckMode::Auto => None,
                };
                diagnose(view, &Pattern::Path(5), p5_hitting_set(view, P5Options { strict }))
            }
            ClassSpec::StarFree(s) => star_free_hitting(view, s, mode),
            ClassSpec::SstFree(s, t) => sst_hitting_set(view, s, t, mode),
            ClassSpec::FtFree(t) => ft_hitting_set(view, t, mode),
            ClassSpec::LtFree(t) => lt_hitting_set(view, t, mode),
            ClassSpec::Perfect => perfect_hitting_set(view, mode),
            ClassSpec::ProperP5(ref h) => proper_p5_dispatch(view, h, mode),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::P5Free => write!(f, "p5"),
            ClassSpec::StarFree(s) => write!(f, "star:{s}"),
            ClassSpec::SstFree(s, t) => write!(f, "sst:{s},{t}"),
            ClassSpec::FtFree(t) => write!(f, "ft:{t}"),
            ClassSpec::LtFree(t) => write!(f, "lt:{t}"),
            ClassSpec::Perfect => write!(f, "perfect"),
            ClassSpec::ProperP5(h) => write!(f, "proper-p5:{h}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    /// `p5`, `star:S`, `sst:S,T`, `ft:T`, `lt:T`, `perfect`, `proper-p5:PATTERN`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown class {text:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let lower = text.trim().to_ascii_lowercase();
        let (name, arg) = lower.split_once(':').unwrap_or((&lower, ""));
        let spec = match name {
            "p5" | "p5-free" => ClassSpec::P5Free,
            "perfect" => ClassSpec::Perfect,
            "star" => ClassSpec::StarFree(num(arg)?),
            "sst" => {
                let (s, t) = arg.split_once(',').ok_or_else(bad)?;
                ClassSpec::SstFree(num(s)?, num(t)?)
            }
            "ft" => ClassSpec::FtFree(num(arg)?),
            "lt" => ClassSpec::LtFree(num(arg)?),
            "proper-p5" => {
                // Patterns are case-sensitive, so reparse from the original text.
                let raw = text.trim().split_once(':').map(|(_, a)| a).ok_or_else(bad)?;
                ClassSpec::ProperP5(raw.parse()?)
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for ClassSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Membership evidence for the perfect class, as an error.
pub(crate) fn imperfection(view: &View<'_>, cap: usize) -> Result<()> {
    match oracle::is_perfect_lovasz(view, cap)? {
        Perfection::Perfect => Ok(()),
        Perfection::Imperfect(witness) => Err(Error::Imperfect {
            evidence: format!("the subgraph on {{{witness}}} has alpha * omega below its order"),
            witness,
        }),
    }
}
