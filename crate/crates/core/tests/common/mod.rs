#![allow(dead_code, clippy::needless_range_loop)]

use kinteg::{CommunityGraph, CommunityId, NodeId};
use proptest::prelude::*;

/// Relabels arbitrary community tags densely, in order of first appearance.
pub fn dense(tags: &[usize]) -> Vec<CommunityId> {
    let mut seen: Vec<usize> = Vec::new();
    tags.iter()
        .map(|t| {
            let id = seen.iter().position(|s| s == t).unwrap_or_else(|| {
                seen.push(*t);
                seen.len() - 1
            });
            CommunityId(id as u32)
        })
        .collect()
}

/// Random community graph with up to `max_nodes` nodes; `connected` adds a
/// random spanning tree first.
pub fn community_graph(max_nodes: usize, connected: bool) -> impl Strategy<Value = CommunityGraph> {
    (1..=max_nodes)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (
                prop::collection::vec(0..5usize, n),
                prop::collection::vec(prop::bool::weighted(0.12), pairs),
                prop::collection::vec(any::<prop::sample::Index>(), n),
            )
        })
        .prop_map(move |(tags, mask, parents)| {
            let n = tags.len();
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[i] {
                        edges.push((NodeId(u as u32), NodeId(v as u32)));
                    }
                    i += 1;
                }
            }
            if connected {
                for v in 1..n {
                    let p = parents[v].index(v);
                    edges.push((NodeId(p as u32), NodeId(v as u32)));
                }
            }
            CommunityGraph::build(edges, &dense(&tags)).unwrap()
        })
}

/// All-pairs distances by repeated edge relaxation, with no BFS involved.
pub fn relaxation_distances(g: &CommunityGraph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let mut dist = vec![vec![None; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.index(), v.index())).collect();
    loop {
        let mut changed = false;
        for row in dist.iter_mut() {
            for &(u, v) in &edges {
                for (a, b) in [(u, v), (v, u)] {
                    if let Some(d) = row[a] {
                        if row[b].is_none_or(|e| d + 1 < e) {
                            row[b] = Some(d + 1);
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return dist;
        }
    }
}

/// Largest pairwise distance, `None` if some pair is unreachable.
pub fn relaxation_diameter(g: &CommunityGraph) -> Option<u32> {
    let dist = relaxation_distances(g);
    let mut worst = 0;
    for row in dist {
        for d in row {
            worst = worst.max(d?);
        }
    }
    Some(worst)
}

/// `r` complete communities of `n` nodes in block layout, plus `bridges`.
pub fn islands(r: usize, n: usize, bridges: &[(u32, u32)]) -> CommunityGraph {
    let communities: Vec<CommunityId> = (0..r * n).map(|v| CommunityId((v / n) as u32)).collect();
    let mut edges: Vec<(NodeId, NodeId)> = bridges.iter().map(|&(u, v)| (NodeId(u), NodeId(v))).collect();
    for c in 0..r {
        for u in c * n..(c + 1) * n {
            for v in u + 1..(c + 1) * n {
                edges.push((NodeId(u as u32), NodeId(v as u32)));
            }
        }
    }
    CommunityGraph::build(edges, &communities).unwrap()
}
