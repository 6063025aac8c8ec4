use crate::graph::{CommunityGraph, CommunityId, NodeId};

/// Three K_4's; node `4c + i` is node `i` of community `c`. Bridges join
/// community 1 to community 0 and a second node of community 1 to
/// community 2, as in the two-bridge example graph.
pub(crate) fn sample() -> CommunityGraph {
    let mut edges = Vec::new();
    for c in 0..3u32 {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((NodeId(4 * c + i), NodeId(4 * c + j)));
            }
        }
    }
    edges.push((NodeId(4 + 1), NodeId(1)));
    edges.push((NodeId(4 + 2), NodeId(8 + 1)));
    let communities: Vec<CommunityId> = (0..12).map(|v| CommunityId(v / 4)).collect();
    CommunityGraph::build(edges, &communities).unwrap()
}

pub(crate) fn graph(edges: &[(u32, u32)], communities: &[u32]) -> CommunityGraph {
    CommunityGraph::build(
        edges.iter().map(|&(u, v)| (NodeId(u), NodeId(v))),
        &communities.iter().map(|&c| CommunityId(c)).collect::<Vec<_>>(),
    )
    .unwrap()
}
