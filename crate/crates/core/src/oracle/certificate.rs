use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, View};

use super::clique::alpha_size;

/// Class parameters a certificate was produced under.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassParams {
    /// Clique number the bound was evaluated at.
    pub c: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

impl ClassParams {
    pub fn c(c: usize) -> Self {
        ClassParams { c, s: None, t: None }
    }
}

/// A verified hitting set with the bound it was constructed against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingCertificate {
    pub hitting_set: VertexSet,
    pub algorithm: String,
    pub params: ClassParams,
    /// Serialised as a decimal string; the bounds outgrow every machine integer.
    #[serde(serialize_with = "big_to_str", deserialize_with = "big_from_str")]
    pub claimed_bound: BigUint,
    pub alpha_before: usize,
    pub alpha_after: usize,
}

fn big_to_str<S: Serializer>(b: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

fn big_from_str<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
    let text = String::deserialize(d)?;
    text.parse().map_err(serde::de::Error::custom)
}

impl HittingCertificate {
    /// Recomputes α on both sides and checks the size against the bound.
    pub fn certify(
        view: &View<'_>,
        hitting_set: VertexSet,
        algorithm: impl Into<String>,
        params: ClassParams,
        claimed_bound: BigUint,
    ) -> Result<Self> {
        if view.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if !hitting_set.is_subset(&view.vertices()) {
            return Err(Error::OutsideSubgraph { set: hitting_set });
        }
        let alpha_before = alpha_size(view);
        let alpha_after = alpha_size(&view.without(hitting_set));
        if alpha_after >= alpha_before {
            return Err(Error::NotHitting {
                set: hitting_set,
                alpha: alpha_before,
            });
        }
        if BigUint::from(hitting_set.len()) > claimed_bound {
            return Err(Error::BudgetExceeded {
                size: hitting_set.len(),
                budget: claimed_bound,
            });
        }
        Ok(HittingCertificate {
            hitting_set,
            algorithm: algorithm.into(),
            params,
            claimed_bound,
            alpha_before,
            alpha_after,
        })
    }

    pub fn size(&self) -> usize {
        self.hitting_set.len()
    }

    /// Independent re-check against a view, trusting nothing stored.
    pub fn recheck(&self, view: &View<'_>) -> Result<bool> {
        Ok(super::verify_hitting_set(view, self.hitting_set)?
            && BigUint::from(self.hitting_set.len()) <= self.claimed_bound)
    }
}
