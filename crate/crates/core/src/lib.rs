//! k-integration of community networks.
//!
//! A network here is a set of communities, each a complete graph, joined by
//! bridges (edges between communities). It is *k-integrated* when every two
//! nodes are at distance at most `k`. This crate measures that, computes
//! the least bridge and central-node counts a k-integrated network can
//! have, builds networks that meet those counts, and checks small cases by
//! brute force.
//!
//! ```
//! use kinteg::constructors::two_star;
//! use kinteg::metrics::{integration_level, Distance};
//! use kinteg::thresholds::{bridge_threshold, Threshold};
//!
//! let c = two_star(8, 9).unwrap();
//! assert_eq!(integration_level(&c.graph), Distance::Finite(2));
//! assert_eq!(c.graph.bridge_count(), 63);
//! assert_eq!(bridge_threshold(8, 9, 2).unwrap(), Threshold::Exact(63));
//! ```

pub mod constructors;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod thresholds;

#[cfg(test)]
mod testutil;

pub use graph::{CommunityGraph, CommunityId, EdgeKind, GraphError, NodeId};
pub use io::LabeledGraph;
pub use metrics::Distance;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/model.md")]
    mod model {}
    #[doc = include_str!("../../../book/src/integration.md")]
    mod integration {}
    #[doc = include_str!("../../../book/src/thresholds.md")]
    mod thresholds {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
