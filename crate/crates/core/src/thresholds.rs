//! Minimal bridge and central-node counts for k-integration.
//!
//! For `r` disjoint complete communities of `n` nodes each (with `n >= r`), a
//! k-integrated supergraph needs at least `B_k` bridges and `C_k` central
//! nodes:
//!
//! | k                 | `B_k`                      | `C_k`         |
//! |-------------------|----------------------------|---------------|
//! | 1                 | `n^2 r(r-1)/2`             | `rn`          |
//! | 2                 | `(r-1)n`                   | `(r-1)n + 1`  |
//! | 3                 | `r(r-1)/2`                 | `r`           |
//! | `3 < k < r+1`     | in `[r-1, r(r-1)/2]`       | `r`           |
//! | `k >= r+1`        | `r-1`                      | `r`           |
//!
//! With a single community every count is zero. Only the intermediate rows
//! lack a closed form; they are reported as an interval.

use serde::Serialize;
use thiserror::Error;

use crate::graph::CommunityGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThresholdError {
    #[error("model requires n >= r (got r = {r}, n = {n})")]
    ModelViolation { r: u64, n: u64 },
    #[error("model requires equal community sizes (got {0:?})")]
    UnequalCommunities(Vec<usize>),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("arithmetic overflow computing threshold for r = {r}, n = {n}")]
    Overflow { r: u64, n: u64 },
}

/// A threshold value, exact or known only to lie in a closed interval.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Threshold {
    Exact(u64),
    Interval { lower: u64, upper: u64 },
}

impl Threshold {
    pub fn lower(self) -> u64 {
        match self {
            Threshold::Exact(v) => v,
            Threshold::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(self) -> u64 {
        match self {
            Threshold::Exact(v) => v,
            Threshold::Interval { upper, .. } => upper,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Threshold::Exact(_))
    }

    pub fn contains(self, value: u64) -> bool {
        (self.lower()..=self.upper()).contains(&value)
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Threshold::Exact(v) => write!(f, "{v}"),
            Threshold::Interval { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// One row of the threshold table.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdTable {
    pub r: u64,
    pub n: u64,
    pub k: u32,
    pub bridges: Threshold,
    pub central: u64,
}

fn check(r: u64, n: u64, k: u32) -> Result<(), ThresholdError> {
    if r == 0 || n == 0 {
        return Err(ThresholdError::InvalidParams(format!(
            "r and n must be at least 1 (got r = {r}, n = {n})"
        )));
    }
    if k == 0 {
        return Err(ThresholdError::InvalidParams("k must be at least 1".into()));
    }
    if n < r {
        return Err(ThresholdError::ModelViolation { r, n });
    }
    Ok(())
}

/// `r(r-1)/2`, the bridge count of a complete quotient.
fn pairs(r: u64) -> Option<u64> {
    r.checked_mul(r - 1).map(|x| x / 2)
}

/// Minimal number of bridges for k-integration.
pub fn bridge_threshold(r: u64, n: u64, k: u32) -> Result<Threshold, ThresholdError> {
    check(r, n, k)?;
    let overflow = ThresholdError::Overflow { r, n };
    let value = match k {
        1 => n
            .checked_mul(n)
            .and_then(|nn| pairs(r).and_then(|p| nn.checked_mul(p)))
            .ok_or(overflow)?,
        2 => (r - 1).checked_mul(n).ok_or(overflow)?,
        3 => pairs(r).ok_or(overflow)?,
        k if u64::from(k) > r => r - 1,
        _ => {
            return Ok(Threshold::Interval {
                lower: r - 1,
                upper: pairs(r).ok_or(overflow)?,
            })
        }
    };
    Ok(Threshold::Exact(value))
}

/// Minimal number of central nodes for k-integration.
pub fn central_threshold(r: u64, n: u64, k: u32) -> Result<u64, ThresholdError> {
    check(r, n, k)?;
    if r == 1 {
        return Ok(0);
    }
    let overflow = ThresholdError::Overflow { r, n };
    match k {
        1 => r.checked_mul(n).ok_or(overflow),
        2 => (r - 1)
            .checked_mul(n)
            .and_then(|x| x.checked_add(1))
            .ok_or(overflow),
        _ => Ok(r),
    }
}

pub fn threshold_table(r: u64, n: u64, k: u32) -> Result<ThresholdTable, ThresholdError> {
    Ok(ThresholdTable {
        r,
        n,
        k,
        bridges: bridge_threshold(r, n, k)?,
        central: central_threshold(r, n, k)?,
    })
}

/// Bridges needed for two disjoint complete graphs of sizes `n1`, `n2` to be
/// 2-integrated: every node of the smaller side must be central.
pub fn pair_bridge_lemma(n1: u64, n2: u64) -> Result<u64, ThresholdError> {
    if n1 == 0 || n2 == 0 {
        return Err(ThresholdError::InvalidParams(
            "both graphs need at least one node".into(),
        ));
    }
    Ok(n1.min(n2))
}

/// Bridges used by a 3-integrated graph in which exactly one pair of
/// communities has no direct bridge: `n + (r-1)(r-2)/2`.
pub fn one_missing_pair_bridges(r: u64, n: u64) -> Option<u64> {
    if r < 2 {
        return None;
    }
    pairs(r - 1).and_then(|p| p.checked_add(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SegregationReason {
    TooFewBridges { have: u64, need: u64 },
    TooFewCentral { have: u64, need: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SegregationVerdict {
    /// The counts alone rule out k-integration.
    ProvablySegregated { reasons: Vec<SegregationReason> },
    /// The counts meet the thresholds; only a distance computation can decide.
    NotDetermined,
}

/// Compares a graph's bridge and central-node counts against the thresholds.
///
/// Inexact rows use their lower bound, so a `ProvablySegregated` verdict is
/// always backed by a proven necessary condition.
pub fn segregation_verdict(g: &CommunityGraph, k: u32) -> Result<SegregationVerdict, ThresholdError> {
    let n = g
        .uniform_community_size()
        .ok_or_else(|| ThresholdError::UnequalCommunities(g.community_sizes().to_vec()))?;
    let r = g.community_count() as u64;
    let table = threshold_table(r, n as u64, k)?;
    let have_b = g.bridge_count() as u64;
    let have_c = g.central_nodes().len() as u64;
    let mut reasons = Vec::new();
    if have_b < table.bridges.lower() {
        reasons.push(SegregationReason::TooFewBridges {
            have: have_b,
            need: table.bridges.lower(),
        });
    }
    if have_c < table.central {
        reasons.push(SegregationReason::TooFewCentral {
            have: have_c,
            need: table.central,
        });
    }
    Ok(if reasons.is_empty() {
        SegregationVerdict::NotDetermined
    } else {
        SegregationVerdict::ProvablySegregated { reasons }
    })
}
