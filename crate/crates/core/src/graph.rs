//! Community-structured undirected graphs.
//!
//! A [`CommunityGraph`] is a simple undirected graph whose nodes are
//! partitioned into communities. Edges inside a community are *local*; edges
//! between communities are *bridges*, and a node touching at least one bridge
//! is *central*.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Dense node index in `[0, node_count)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense community index in `[0, r)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CommunityId(pub u32);

impl CommunityId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Local,
    Bridge,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("node {0} is not in the community map")]
    UnknownNode(NodeId),
    #[error("community map is empty")]
    EmptyCommunityMap,
    #[error("community {0} has no nodes; community ids must be dense")]
    EmptyCommunity(u32),
    #[error("node {0} is out of range")]
    InvalidNode(NodeId),
}

/// Immutable community-labelled simple graph.
///
/// Adjacency lists are sorted and symmetric; there are no self-loops and no
/// parallel edges. Every node belongs to exactly one community and every
/// community is non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommunityGraph {
    adjacency: Vec<Vec<u32>>,
    community_of: Vec<u32>,
    community_sizes: Vec<usize>,
    edge_count: usize,
}

impl CommunityGraph {
    /// Validates and builds a graph. `communities[v]` is the community of
    /// node `v`, so the node count is `communities.len()`.
    ///
    /// Duplicate edges (in either orientation) collapse to one edge.
    pub fn build<I>(edges: I, communities: &[CommunityId]) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        if communities.is_empty() {
            return Err(GraphError::EmptyCommunityMap);
        }
        let node_count = communities.len();
        let r = communities.iter().map(|c| c.index()).max().unwrap_or(0) + 1;
        let mut community_sizes = vec![0usize; r];
        for c in communities {
            community_sizes[c.index()] += 1;
        }
        if let Some(empty) = community_sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::EmptyCommunity(empty as u32));
        }

        let mut adjacency = vec![Vec::new(); node_count];
        for (u, v) in edges {
            if u.index() >= node_count {
                return Err(GraphError::UnknownNode(u));
            }
            if v.index() >= node_count {
                return Err(GraphError::UnknownNode(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u.index()].push(v.0);
            adjacency[v.index()].push(u.0);
        }
        let mut listed = 0usize;
        for list in &mut adjacency {
            listed += list.len();
            list.sort_unstable();
            list.dedup();
        }
        let stored: usize = adjacency.iter().map(Vec::len).sum();
        if stored != listed {
            log::debug!("collapsed {} duplicate edge listings", (listed - stored) / 2);
        }

        Ok(CommunityGraph {
            adjacency,
            community_of: communities.iter().map(|c| c.0).collect(),
            community_sizes,
            edge_count: stored / 2,
        })
    }

    /// Builds directly from sorted, deduplicated, symmetric adjacency lists.
    /// Used by generators that produce canonical adjacency themselves.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<u32>>, community_of: Vec<u32>) -> Self {
        debug_assert_eq!(adjacency.len(), community_of.len());
        let r = community_of.iter().copied().max().map_or(0, |c| c as usize + 1);
        let mut community_sizes = vec![0usize; r];
        for &c in &community_of {
            community_sizes[c as usize] += 1;
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        CommunityGraph {
            adjacency,
            community_of,
            community_sizes,
            edge_count,
        }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of communities, `r`.
    #[inline]
    pub fn community_count(&self) -> usize {
        self.community_sizes.len()
    }

    pub fn community_sizes(&self) -> &[usize] {
        &self.community_sizes
    }

    #[inline]
    pub fn community_of(&self, v: NodeId) -> CommunityId {
        CommunityId(self.community_of[v.index()])
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[u32] {
        &self.adjacency[v.index()]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn contains_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency
            .get(u.index())
            .is_some_and(|list| list.binary_search(&v.0).is_ok())
    }

    pub fn check_node(&self, v: NodeId) -> Result<(), GraphError> {
        if v.index() < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidNode(v))
        }
    }

    /// Classifies the pair `(u, v)` by community membership, regardless of
    /// whether it is an edge.
    pub fn pair_kind(&self, u: NodeId, v: NodeId) -> EdgeKind {
        if self.community_of[u.index()] == self.community_of[v.index()] {
            EdgeKind::Local
        } else {
            EdgeKind::Bridge
        }
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| (v as usize) <= u);
            list[start..]
                .iter()
                .map(move |&v| (NodeId(u as u32), NodeId(v)))
        })
    }

    /// Edges whose endpoints lie in different communities, sorted.
    pub fn bridges(&self) -> Vec<(NodeId, NodeId)> {
        self.edges()
            .filter(|&(u, v)| self.pair_kind(u, v) == EdgeKind::Bridge)
            .collect()
    }

    pub fn bridge_count(&self) -> usize {
        self.adjacency
            .iter()
            .enumerate()
            .map(|(u, list)| {
                let cu = self.community_of[u];
                list.iter()
                    .filter(|&&v| self.community_of[v as usize] != cu)
                    .count()
            })
            .sum::<usize>()
            / 2
    }

    pub fn local_edge_count(&self) -> usize {
        self.edge_count - self.bridge_count()
    }

    /// Endpoints of bridges.
    pub fn central_nodes(&self) -> BTreeSet<NodeId> {
        (0..self.node_count())
            .filter(|&u| self.is_central(NodeId(u as u32)))
            .map(|u| NodeId(u as u32))
            .collect()
    }

    pub fn is_central(&self, v: NodeId) -> bool {
        let c = self.community_of[v.index()];
        self.adjacency[v.index()]
            .iter()
            .any(|&w| self.community_of[w as usize] != c)
    }

    /// Nodes with no incident edge at all.
    pub fn isolated_nodes(&self) -> Vec<NodeId> {
        (0..self.node_count())
            .filter(|&u| self.adjacency[u].is_empty())
            .map(|u| NodeId(u as u32))
            .collect()
    }

    /// Members of each community, ascending.
    pub fn members(&self) -> Vec<Vec<NodeId>> {
        let mut members = vec![Vec::new(); self.community_count()];
        for (v, &c) in self.community_of.iter().enumerate() {
            members[c as usize].push(NodeId(v as u32));
        }
        members
    }

    /// Checks that every community induces a complete graph. At most
    /// `max_witnesses` missing pairs are returned, in ascending order.
    pub fn local_completeness(&self, max_witnesses: usize) -> LocalCompleteness {
        let mut missing = Vec::new();
        let mut missing_count = 0u64;
        for group in self.members() {
            for (i, &u) in group.iter().enumerate() {
                for &v in &group[i + 1..] {
                    if !self.contains_edge(u, v) {
                        missing_count += 1;
                        if missing.len() < max_witnesses {
                            missing.push((u, v));
                        }
                    }
                }
            }
        }
        LocalCompleteness {
            complete: missing_count == 0,
            missing_count,
            missing,
        }
    }

    pub fn is_locally_complete(&self) -> bool {
        self.local_completeness(0).complete
    }

    /// Copy of the graph with every missing local edge added. Bridges are
    /// untouched.
    pub fn localize_complete(&self) -> CommunityGraph {
        let members = self.members();
        let mut adjacency = self.adjacency.clone();
        for (u, list) in adjacency.iter_mut().enumerate() {
            let group = &members[self.community_of[u] as usize];
            list.extend(group.iter().map(|v| v.0).filter(|&v| v as usize != u));
            list.sort_unstable();
            list.dedup();
        }
        CommunityGraph::from_sorted_adjacency(adjacency, self.community_of.clone())
    }

    /// Copy of the graph with one extra edge. Returns `None` if the edge is
    /// already present or is a self-loop.
    pub fn with_edge(&self, u: NodeId, v: NodeId) -> Option<CommunityGraph> {
        if u == v || self.contains_edge(u, v) {
            return None;
        }
        let mut adjacency = self.adjacency.clone();
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut adjacency[a.index()];
            let at = list.partition_point(|&x| x < b.0);
            list.insert(at, b.0);
        }
        Some(CommunityGraph::from_sorted_adjacency(
            adjacency,
            self.community_of.clone(),
        ))
    }

    /// Copy of the graph with one edge removed. Returns `None` if absent.
    pub fn without_edge(&self, u: NodeId, v: NodeId) -> Option<CommunityGraph> {
        if !self.contains_edge(u, v) {
            return None;
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u.index()].retain(|&x| x != v.0);
        adjacency[v.index()].retain(|&x| x != u.0);
        Some(CommunityGraph::from_sorted_adjacency(
            adjacency,
            self.community_of.clone(),
        ))
    }

    /// Common community size when all communities have the same size.
    pub fn uniform_community_size(&self) -> Option<usize> {
        let first = self.community_sizes[0];
        self.community_sizes
            .iter()
            .all(|&s| s == first)
            .then_some(first)
    }
}

/// Result of [`CommunityGraph::local_completeness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCompleteness {
    pub complete: bool,
    pub missing_count: u64,
    pub missing: Vec<(NodeId, NodeId)>,
}
