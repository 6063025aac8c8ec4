//! Generators for minimal k-integrated graphs.
//!
//! Every generator lays out `r` communities of `n` nodes each, community `c`
//! occupying node ids `c*n .. (c+1)*n`, and makes every community complete.
//! They differ only in how bridges are placed:
//!
//! * [`complete_join`] bridges every cross-community pair (k = 1);
//! * [`two_star`] bridges the first node of community 0 to every node outside
//!   it (k = 2);
//! * [`extended_star`] picks the first node of each community as its only
//!   central node and bridges those according to a [`QuotientGraph`]
//!   (k = diameter of the quotient + 2).

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{CommunityGraph, CommunityId, NodeId};
use crate::metrics::{self, Distance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("quotient graph is disconnected")]
    DisconnectedQuotient,
    #[error("figure1 quotients exist only for r = 8 (got r = {0})")]
    UnsupportedR(usize),
}

/// Named quotient shapes. `Custom` covers user-supplied edge lists.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QuotientShape {
    Complete,
    Star,
    Path,
    Cycle,
    Figure1 { k: u32 },
    Custom,
}

impl fmt::Display for QuotientShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientShape::Complete => f.write_str("complete"),
            QuotientShape::Star => f.write_str("star"),
            QuotientShape::Path => f.write_str("path"),
            QuotientShape::Cycle => f.write_str("cycle"),
            QuotientShape::Figure1 { k } => write!(f, "figure1:{k}"),
            QuotientShape::Custom => f.write_str("custom"),
        }
    }
}

impl Serialize for QuotientShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Bridge pattern between communities: one vertex per community.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    r: usize,
    edges: Vec<(u32, u32)>,
    shape: QuotientShape,
}

// Bridge patterns of the r = 8 example networks, on community ids 0..8.
// The k >= 9 pattern is the path 2-1-0-5-4-3-6-7; each denser pattern adds
// chords to the previous one.
const FIGURE1_PATH: [(u32, u32); 7] = [(0, 5), (6, 7), (1, 2), (3, 4), (0, 1), (3, 6), (4, 5)];
const FIGURE1_CYCLE_CHORD: (u32, u32) = (2, 7);
const FIGURE1_K5_CHORDS: [(u32, u32); 2] = [(0, 6), (2, 4)];
const FIGURE1_K4_CHORDS: [(u32, u32); 2] = [(5, 7), (1, 3)];

impl QuotientGraph {
    /// A quotient on `r` vertices with the given edges. Edges are normalized
    /// to `(low, high)`, sorted and deduplicated.
    pub fn new(r: usize, edges: &[(u32, u32)]) -> Result<Self, ConstructError> {
        Self::with_shape(r, edges, QuotientShape::Custom)
    }

    fn with_shape(r: usize, edges: &[(u32, u32)], shape: QuotientShape) -> Result<Self, ConstructError> {
        if r == 0 {
            return Err(ConstructError::InvalidParams("r must be at least 1".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b || a as usize >= r || b as usize >= r {
                return Err(ConstructError::InvalidParams(format!(
                    "bad quotient edge ({a}, {b}) for r = {r}"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(QuotientGraph {
            r,
            edges: normalized,
            shape,
        })
    }

    pub fn complete(r: usize) -> Result<Self, ConstructError> {
        let r32 = r as u32;
        let edges: Vec<_> = (0..r32)
            .flat_map(|a| (a + 1..r32).map(move |b| (a, b)))
            .collect();
        Self::with_shape(r, &edges, QuotientShape::Complete)
    }

    /// Star centred on community 0.
    pub fn star(r: usize) -> Result<Self, ConstructError> {
        let edges: Vec<_> = (1..r as u32).map(|b| (0, b)).collect();
        Self::with_shape(r, &edges, QuotientShape::Star)
    }

    pub fn path(r: usize) -> Result<Self, ConstructError> {
        let edges: Vec<_> = (1..r as u32).map(|b| (b - 1, b)).collect();
        Self::with_shape(r, &edges, QuotientShape::Path)
    }

    /// Cycle `0-1-...-(r-1)-0`; for `r < 3` this is the path.
    pub fn cycle(r: usize) -> Result<Self, ConstructError> {
        let mut edges: Vec<_> = (1..r as u32).map(|b| (b - 1, b)).collect();
        if r >= 3 {
            edges.push((0, r as u32 - 1));
        }
        Self::with_shape(r, &edges, QuotientShape::Cycle)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn shape(&self) -> QuotientShape {
        self.shape
    }

    /// The quotient as a graph with one community per vertex.
    pub fn as_graph(&self) -> CommunityGraph {
        let communities: Vec<CommunityId> = (0..self.r as u32).map(CommunityId).collect();
        CommunityGraph::build(
            self.edges.iter().map(|&(a, b)| (NodeId(a), NodeId(b))),
            &communities,
        )
        .expect("quotient edges are validated on construction")
    }

    pub fn diameter(&self) -> Distance {
        metrics::integration_level(&self.as_graph())
    }
}

/// The bridge patterns of the r = 8 example networks, indexed by the
/// integration bound they illustrate: 12 edges for k = 4, 10 for k = 5, an
/// 8-cycle for k = 6..=8 and a 7-edge path for k >= 9.
///
/// These reproduce drawn constructions; they are not certified minima.
pub fn figure1_quotient(r: usize, k: u32) -> Result<QuotientGraph, ConstructError> {
    if r != 8 {
        return Err(ConstructError::UnsupportedR(r));
    }
    if k < 4 {
        return Err(ConstructError::InvalidParams(format!(
            "figure1 quotients cover k >= 4 (got k = {k})"
        )));
    }
    let mut edges = FIGURE1_PATH.to_vec();
    if k < 9 {
        edges.push(FIGURE1_CYCLE_CHORD);
    }
    if k <= 5 {
        edges.extend(FIGURE1_K5_CHORDS);
    }
    if k == 4 {
        edges.extend(FIGURE1_K4_CHORDS);
    }
    QuotientGraph::with_shape(r, &edges, QuotientShape::Figure1 { k })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    CompleteJoin,
    TwoStar,
    ExtendedStar(QuotientShape),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CompleteJoin => f.write_str("complete-join"),
            Family::TwoStar => f.write_str("two-star"),
            Family::ExtendedStar(q) => write!(f, "extended-star/{q}"),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A generated graph with the counts and bound it is claimed to achieve.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: CommunityGraph,
    pub family: Family,
    pub claimed_k: u32,
    pub claimed_bridges: u64,
    pub claimed_central: u64,
}

impl Construction {
    /// Measures the graph and compares against the claims.
    pub fn verify(&self) -> ConstructionCheck {
        let bridges = self.graph.bridge_count() as u64;
        let central = self.graph.central_nodes().len() as u64;
        let integrated = metrics::is_k_integrated(&self.graph, self.claimed_k).integrated;
        ConstructionCheck {
            bridges_match: bridges == self.claimed_bridges,
            central_match: central == self.claimed_central,
            integrated,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ConstructionCheck {
    pub bridges_match: bool,
    pub central_match: bool,
    pub integrated: bool,
}

impl ConstructionCheck {
    pub fn holds(&self) -> bool {
        self.bridges_match && self.central_match && self.integrated
    }
}

fn check_sizes(r: usize, n: usize) -> Result<(), ConstructError> {
    if r == 0 || n == 0 {
        return Err(ConstructError::InvalidParams(format!(
            "r and n must be at least 1 (got r = {r}, n = {n})"
        )));
    }
    if r.checked_mul(n).is_none_or(|total| total > u32::MAX as usize) {
        return Err(ConstructError::InvalidParams("too many nodes".into()));
    }
    Ok(())
}

fn layout(r: usize, n: usize) -> Vec<u32> {
    (0..r * n).map(|v| (v / n) as u32).collect()
}

/// Sorted adjacency for `r` disjoint complete communities of size `n`.
fn local_cliques(r: usize, n: usize) -> Vec<Vec<u32>> {
    (0..r * n)
        .map(|v| {
            let base = (v / n) * n;
            (base..base + n)
                .filter(|&w| w != v)
                .map(|w| w as u32)
                .collect()
        })
        .collect()
}

fn insert_sorted(list: &mut Vec<u32>, x: u32) {
    if let Err(at) = list.binary_search(&x) {
        list.insert(at, x);
    }
}

/// Every cross-community pair bridged: the complete graph on `r*n` nodes.
pub fn complete_join(r: usize, n: usize) -> Result<Construction, ConstructError> {
    check_sizes(r, n)?;
    let total = r * n;
    let adjacency: Vec<Vec<u32>> = (0..total)
        .map(|v| (0..total).filter(|&w| w != v).map(|w| w as u32).collect())
        .collect();
    let (r64, n64) = (r as u64, n as u64);
    Ok(Construction {
        graph: CommunityGraph::from_sorted_adjacency(adjacency, layout(r, n)),
        family: Family::CompleteJoin,
        claimed_k: 1,
        claimed_bridges: n64 * n64 * r64 * (r64 - 1) / 2,
        claimed_central: if r > 1 { r64 * n64 } else { 0 },
    })
}

/// One hub (node 0, in community 0) bridged to every node of the other
/// communities.
pub fn two_star(r: usize, n: usize) -> Result<Construction, ConstructError> {
    check_sizes(r, n)?;
    let mut adjacency = local_cliques(r, n);
    for v in n..r * n {
        adjacency[v].insert(0, 0);
        adjacency[0].push(v as u32);
    }
    let outside = ((r - 1) * n) as u64;
    Ok(Construction {
        graph: CommunityGraph::from_sorted_adjacency(adjacency, layout(r, n)),
        family: Family::TwoStar,
        claimed_k: 2,
        claimed_bridges: outside,
        claimed_central: if r > 1 { outside + 1 } else { 0 },
    })
}

/// One central node per community (its first node), bridged along the
/// quotient's edges.
///
/// The claimed bound is the quotient diameter plus two: one hop into the
/// central node at each end. With `n = 1` there is nothing to hop from, so
/// the claim is the quotient diameter itself.
pub fn extended_star(
    r: usize,
    n: usize,
    quotient: &QuotientGraph,
) -> Result<Construction, ConstructError> {
    check_sizes(r, n)?;
    if quotient.r() != r {
        return Err(ConstructError::InvalidParams(format!(
            "quotient has {} vertices but r = {r}",
            quotient.r()
        )));
    }
    let d_q = quotient
        .diameter()
        .finite()
        .ok_or(ConstructError::DisconnectedQuotient)?;
    let mut adjacency = local_cliques(r, n);
    for &(a, b) in quotient.edges() {
        let (ca, cb) = (a as usize * n, b as usize * n);
        insert_sorted(&mut adjacency[ca], cb as u32);
        insert_sorted(&mut adjacency[cb], ca as u32);
    }
    Ok(Construction {
        graph: CommunityGraph::from_sorted_adjacency(adjacency, layout(r, n)),
        family: Family::ExtendedStar(quotient.shape()),
        claimed_k: if n == 1 { d_q } else { d_q + 2 },
        claimed_bridges: quotient.edges().len() as u64,
        claimed_central: if r > 1 { r as u64 } else { 0 },
    })
}
