//! Exact distance computations and the k-integration predicate.
//!
//! A graph is *k-integrated* when every pair of nodes is joined by a path of
//! length at most `k`, i.e. when its diameter is at most `k`. The smallest
//! such `k` is the integration level `k*`.
//!
//! Whole-graph queries run breadth-first search on the quotient of the graph
//! by *true twins* (nodes with equal closed neighbourhoods). True twins are at
//! distance 1 from each other and at equal distance from every other node, so
//! the quotient preserves every distance exactly while collapsing the
//! non-central members of a complete community into a single vertex.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::graph::{CommunityGraph, GraphError, NodeId};

const UNSEEN: u32 = u32::MAX;

/// A hop count, or `Unreachable` for nodes in different components.
///
/// Orders every finite distance below `Unreachable`. Serializes as a number,
/// or `null` when unreachable.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    /// True if a path of length at most `k` exists.
    pub fn within(self, k: u32) -> bool {
        matches!(self, Distance::Finite(d) if d <= k)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => serializer.serialize_u32(*d),
            Distance::Unreachable => serializer.serialize_none(),
        }
    }
}

/// Distances from `source` to every node within `k` hops.
pub fn bounded_bfs(
    g: &CommunityGraph,
    source: NodeId,
    k: u32,
) -> Result<BTreeMap<NodeId, u32>, GraphError> {
    g.check_node(source)?;
    let dist = bfs(g.adjacency(), source.0, k);
    Ok(dist
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != UNSEEN)
        .map(|(v, &d)| (NodeId(v as u32), d))
        .collect())
}

/// Exact distance between two nodes.
pub fn distance(g: &CommunityGraph, a: NodeId, b: NodeId) -> Result<Distance, GraphError> {
    g.check_node(a)?;
    g.check_node(b)?;
    let dist = bfs(g.adjacency(), a.0, u32::MAX - 1);
    Ok(match dist[b.index()] {
        UNSEEN => Distance::Unreachable,
        d => Distance::Finite(d),
    })
}

/// Greatest distance from `source`, or `Unreachable` if some node cannot be
/// reached.
pub fn eccentricity(g: &CommunityGraph, source: NodeId) -> Result<Distance, GraphError> {
    g.check_node(source)?;
    let dist = bfs(g.adjacency(), source.0, u32::MAX - 1);
    Ok(dist
        .iter()
        .map(|&d| {
            if d == UNSEEN {
                Distance::Unreachable
            } else {
                Distance::Finite(d)
            }
        })
        .max()
        .unwrap_or(Distance::Finite(0)))
}

/// The diameter of `g`: the least `k` for which `g` is k-integrated.
pub fn integration_level(g: &CommunityGraph) -> Distance {
    let twins = TwinQuotient::new(g);
    (0..twins.class_count())
        .into_par_iter()
        .map(|c| twins.node_eccentricity(c))
        .max()
        .unwrap_or(Distance::Finite(0))
}

/// A pair of nodes that are further apart than the bound being checked.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: NodeId,
    pub b: NodeId,
    pub distance: Distance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub integrated: bool,
    pub witness: Option<Witness>,
}

/// Checks whether every pair of nodes is within `k` hops.
///
/// Sources are scanned in ascending id order; the witness is the first
/// violating pair `(a, b)` with the smallest `a`, then the smallest `b`.
pub fn is_k_integrated(g: &CommunityGraph, k: u32) -> Verdict {
    let twins = TwinQuotient::new(g);
    let mut class_ok: Vec<Option<bool>> = vec![None; twins.class_count()];
    for s in 0..g.node_count() {
        let c = twins.class_of[s] as usize;
        let ok = *class_ok[c].get_or_insert_with(|| twins.class_within(c, k));
        if ok {
            continue;
        }
        // The class violates the bound; find the smallest offending target.
        let dist = twins.class_distances(c, u32::MAX - 1);
        for t in 0..g.node_count() {
            if t == s {
                continue;
            }
            let d = twins.node_distance(&dist, s, t);
            if !d.within(k) {
                return Verdict {
                    integrated: false,
                    witness: Some(Witness {
                        a: NodeId(s as u32),
                        b: NodeId(t as u32),
                        distance: d,
                    }),
                };
            }
        }
        unreachable!("class {c} reported a violation but no target exceeds k");
    }
    Verdict {
        integrated: true,
        witness: None,
    }
}

/// For every node, the number of nodes (itself included) within `k` hops.
pub fn reach_profile(g: &CommunityGraph, k: u32) -> Vec<usize> {
    let twins = TwinQuotient::new(g);
    let per_class: Vec<usize> = (0..twins.class_count())
        .into_par_iter()
        .map(|c| {
            let dist = twins.class_distances(c, k);
            let own = if k >= 1 { twins.members[c].len() } else { 1 };
            own + dist
                .iter()
                .enumerate()
                .filter(|&(d, &x)| d != c && x != UNSEEN)
                .map(|(d, _)| twins.members[d].len())
                .sum::<usize>()
        })
        .collect();
    twins
        .class_of
        .iter()
        .map(|&c| per_class[c as usize])
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KVerdict {
    pub k: u32,
    pub integrated: bool,
    pub witness: Option<Witness>,
}

/// Summary of a graph's integration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegrationReport {
    pub communities: usize,
    pub node_count: usize,
    pub bridges: usize,
    pub central_nodes: usize,
    pub k_star: Distance,
    pub verdicts: Vec<KVerdict>,
    /// The bound used for `reach_profile`: the largest requested `k`.
    pub reach_k: Option<u32>,
    pub reach_profile: Vec<usize>,
}

impl IntegrationReport {
    pub fn certificate(&self) -> Certificate {
        Certificate {
            node_count: self.node_count,
            communities: self.communities,
            bridges: self.bridges,
            central_nodes: self.central_nodes,
            k_star: self.k_star,
        }
    }
}

/// The measured counts that identify a network up to what the thresholds
/// care about.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub node_count: usize,
    pub communities: usize,
    pub bridges: usize,
    pub central_nodes: usize,
    pub k_star: Distance,
}

impl Certificate {
    pub fn measure(g: &CommunityGraph) -> Self {
        Certificate {
            node_count: g.node_count(),
            communities: g.community_count(),
            bridges: g.bridge_count(),
            central_nodes: g.central_nodes().len(),
            k_star: integration_level(g),
        }
    }
}

pub fn build_report(g: &CommunityGraph, ks: &[u32]) -> IntegrationReport {
    let verdicts = ks
        .iter()
        .map(|&k| {
            let v = is_k_integrated(g, k);
            KVerdict {
                k,
                integrated: v.integrated,
                witness: v.witness,
            }
        })
        .collect();
    let reach_k = ks.iter().copied().max();
    IntegrationReport {
        communities: g.community_count(),
        node_count: g.node_count(),
        bridges: g.bridge_count(),
        central_nodes: g.central_nodes().len(),
        k_star: integration_level(g),
        verdicts,
        reach_k,
        reach_profile: reach_k.map(|k| reach_profile(g, k)).unwrap_or_default(),
    }
}

/// Plain BFS over adjacency lists, stopping at depth `bound`.
fn bfs(adjacency: &[Vec<u32>], source: u32, bound: u32) -> Vec<u32> {
    let mut dist = vec![UNSEEN; adjacency.len()];
    let mut queue = VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        if du >= bound {
            continue;
        }
        for &w in &adjacency[u as usize] {
            if dist[w as usize] == UNSEEN {
                dist[w as usize] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Quotient of a graph by the true-twin relation.
struct TwinQuotient {
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    adjacency: Vec<Vec<u32>>,
}

impl TwinQuotient {
    fn new(g: &CommunityGraph) -> Self {
        let n = g.node_count();
        let mut class_of = vec![0u32; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        for (v, slot) in class_of.iter_mut().enumerate() {
            let open = g.neighbors(NodeId(v as u32));
            let mut closed = Vec::with_capacity(open.len() + 1);
            let at = open.partition_point(|&w| (w as usize) < v);
            closed.extend_from_slice(&open[..at]);
            closed.push(v as u32);
            closed.extend_from_slice(&open[at..]);
            let next = members.len() as u32;
            let c = *index.entry(closed).or_insert(next);
            if c == next {
                members.push(Vec::new());
            }
            members[c as usize].push(v as u32);
            *slot = c;
        }
        let adjacency = members
            .iter()
            .enumerate()
            .map(|(c, group)| {
                let mut list: Vec<u32> = g
                    .neighbors(NodeId(group[0]))
                    .iter()
                    .map(|&w| class_of[w as usize])
                    .filter(|&d| d as usize != c)
                    .collect();
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        TwinQuotient {
            class_of,
            members,
            adjacency,
        }
    }

    fn class_count(&self) -> usize {
        self.members.len()
    }

    fn class_distances(&self, c: usize, bound: u32) -> Vec<u32> {
        bfs(&self.adjacency, c as u32, bound)
    }

    /// Eccentricity of any member of class `c`.
    fn node_eccentricity(&self, c: usize) -> Distance {
        let own = if self.members[c].len() > 1 { 1 } else { 0 };
        let far = self
            .class_distances(c, u32::MAX - 1)
            .iter()
            .map(|&d| {
                if d == UNSEEN {
                    Distance::Unreachable
                } else {
                    Distance::Finite(d)
                }
            })
            .max()
            .unwrap_or(Distance::Finite(0));
        far.max(Distance::Finite(own))
    }

    /// True if every node is within `k` hops of the members of class `c`.
    fn class_within(&self, c: usize, k: u32) -> bool {
        if k == 0 {
            return self.members.len() == 1 && self.members[0].len() == 1;
        }
        self.class_distances(c, k).iter().all(|&d| d != UNSEEN)
    }

    fn node_distance(&self, class_dist: &[u32], s: usize, t: usize) -> Distance {
        let (cs, ct) = (self.class_of[s], self.class_of[t]);
        if s == t {
            Distance::Finite(0)
        } else if cs == ct {
            Distance::Finite(1)
        } else {
            match class_dist[ct as usize] {
                UNSEEN => Distance::Unreachable,
                d => Distance::Finite(d),
            }
        }
    }
}
