mod common;

use common::{community_graph, islands, relaxation_diameter};
use kinteg::constructors::{complete_join, extended_star, two_star, Construction, QuotientGraph};
use kinteg::metrics::{self, Distance};
use kinteg::thresholds::{self, SegregationVerdict, Threshold};
use kinteg::NodeId;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn integration_is_monotone_in_k(g in community_graph(40, true)) {
        let mut previous = false;
        for k in 1..=g.node_count() as u32 {
            let now = metrics::is_k_integrated(&g, k).integrated;
            prop_assert!(!previous || now, "integrated at {} but not {}", k - 1, k);
            previous = now;
        }
        prop_assert!(previous || g.node_count() == 1);
    }

    #[test]
    fn adding_an_edge_never_raises_the_level(
        g in community_graph(40, true),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let n = g.node_count();
        let (u, v) = (NodeId(a.index(n) as u32), NodeId(b.index(n) as u32));
        if let Some(bigger) = g.with_edge(u, v) {
            prop_assert!(metrics::integration_level(&bigger) <= metrics::integration_level(&g));
        }
    }

    #[test]
    fn localizing_keeps_bridges(g in community_graph(30, false)) {
        let local = g.localize_complete();
        prop_assert_eq!(local.bridges(), g.bridges());
        prop_assert_eq!(local.central_nodes(), g.central_nodes());
        prop_assert!(local.is_locally_complete());
        prop_assert_eq!(local.localize_complete().edges().count(), local.edge_count());
        prop_assert!(metrics::integration_level(&local) <= metrics::integration_level(&g));
        prop_assert_eq!(g.local_edge_count() + g.bridge_count(), g.edge_count());
        prop_assert!(g.central_nodes().len() <= 2 * g.bridge_count());
    }
}

/// Random strict-model instance: `r` complete communities of `n >= r` nodes
/// and a random bridge set.
fn strict_instance() -> impl Strategy<Value = (usize, usize, Vec<(u32, u32)>)> {
    (1usize..=4)
        .prop_flat_map(|r| (Just(r), r..=5usize))
        .prop_flat_map(|(r, n)| {
            let total = r * n;
            let pairs: Vec<(u32, u32)> = (0..total)
                .flat_map(|u| (u + 1..total).map(move |v| (u, v)))
                .filter(|&(u, v)| u / n != v / n)
                .map(|(u, v)| (u as u32, v as u32))
                .collect();
            let density = prop_oneof![Just(0.05), Just(0.15), Just(0.4), Just(0.9)];
            (Just(r), Just(n), Just(pairs), density)
        })
        .prop_flat_map(|(r, n, pairs, p)| {
            let len = pairs.len();
            (
                Just(r),
                Just(n),
                prop::collection::vec(prop::bool::weighted(p), len)
                    .prop_map(move |keep| pairs.iter().zip(keep).filter(|x| x.1).map(|x| *x.0).collect()),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn segregation_verdicts_are_sound((r, n, bridges) in strict_instance()) {
        let g = islands(r, n, &bridges);
        if let Some(level) = relaxation_diameter(&g) {
            for k in level.max(1)..=level + 2 {
                let verdict = thresholds::segregation_verdict(&g, k).unwrap();
                prop_assert_eq!(verdict, SegregationVerdict::NotDetermined, "k = {}", k);
            }
        }
    }
}

fn quotients(r: usize) -> Vec<QuotientGraph> {
    vec![
        QuotientGraph::complete(r).unwrap(),
        QuotientGraph::path(r).unwrap(),
        QuotientGraph::star(r).unwrap(),
        QuotientGraph::cycle(r).unwrap(),
    ]
}

#[test]
fn constructions_match_their_rows() {
    for r in 2..=6usize {
        for n in r..=8usize {
            let (r64, n64) = (r as u64, n as u64);
            let rows = [
                (complete_join(r, n).unwrap(), 1),
                (two_star(r, n).unwrap(), 2),
                (extended_star(r, n, &QuotientGraph::complete(r).unwrap()).unwrap(), 3),
                (extended_star(r, n, &QuotientGraph::path(r).unwrap()).unwrap(), r as u32 + 1),
            ];
            for (c, k) in rows {
                let b = thresholds::bridge_threshold(r64, n64, k).unwrap();
                let central = thresholds::central_threshold(r64, n64, k).unwrap();
                assert_eq!(b, Threshold::Exact(c.graph.bridge_count() as u64), "{} r={r} n={n}", c.family);
                assert_eq!(central, c.graph.central_nodes().len() as u64, "{} r={r} n={n}", c.family);
                assert_eq!(metrics::integration_level(&c.graph), Distance::Finite(k), "{} r={r} n={n}", c.family);
                assert!(c.verify().holds());
            }
        }
    }
}

#[test]
fn extended_star_claims_hold_for_all_shapes() {
    for r in 1..=6usize {
        for n in 1..=4usize {
            for q in quotients(r) {
                let c = extended_star(r, n, &q).unwrap();
                assert!(c.verify().holds(), "{} r={r} n={n}", c.family);
            }
        }
    }
}

fn breaks_without_each_bridge(c: &Construction) -> bool {
    c.graph.bridges().into_iter().all(|(u, v)| {
        let smaller = c.graph.without_edge(u, v).unwrap();
        !metrics::is_k_integrated(&smaller, c.claimed_k).integrated
    })
}

#[test]
fn minimal_constructions_lose_integration_without_any_bridge() {
    for r in 2..=4usize {
        for n in 1..=4usize {
            let constructions = [
                complete_join(r, n).unwrap(),
                two_star(r, n).unwrap(),
                extended_star(r, n, &QuotientGraph::complete(r).unwrap()).unwrap(),
            ];
            for c in constructions {
                assert!(breaks_without_each_bridge(&c), "{} r={r} n={n}", c.family);
            }
        }
    }
}
