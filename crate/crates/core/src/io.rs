//! Text formats: edge lists, community files, canonical serialization and DOT.
//!
//! An edge list has one edge per line, two whitespace-separated node tokens.
//! A community file has one line per node, `node_token community_token`.
//! In both, blank lines and lines starting with `#` are skipped.
//!
//! Tokens are interned in byte-wise sorted order, so the dense ids of a
//! [`LabeledGraph`] do not depend on line order in the input.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{CommunityGraph, CommunityId, EdgeKind, GraphError, NodeId};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: node `{token}` is not in the community file")]
    UnknownNode { line: usize, token: String },
    #[error("line {line}: self-loop on node `{token}`")]
    SelfLoop { line: usize, token: String },
    #[error("line {line}: node `{token}` assigned to communities `{first}` and `{second}`")]
    ConflictingCommunity {
        line: usize,
        token: String,
        first: String,
        second: String,
    },
    #[error("community file is empty")]
    EmptyCommunityMap,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Yields `(line_number, fields)` for every non-blank, non-comment line.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed.split_whitespace().collect()))
        }
    })
}

fn two_fields<'a>(line: usize, fields: &[&'a str], what: &str) -> Result<(&'a str, &'a str), ParseError> {
    match fields {
        [a, b] => Ok((a, b)),
        _ => Err(ParseError::Syntax {
            line,
            message: format!("expected {what}, found {} field(s)", fields.len()),
        }),
    }
}

/// Parses an edge list into `(line, token, token)` triples.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, String, String)>, ParseError> {
    records(text)
        .map(|(line, fields)| {
            let (a, b) = two_fields(line, &fields, "two node tokens")?;
            Ok((line, a.to_owned(), b.to_owned()))
        })
        .collect()
}

/// Parses a community file into a node → community map. Repeating a line
/// is harmless; assigning a node to two communities is an error.
pub fn parse_communities(text: &str) -> Result<BTreeMap<String, String>, ParseError> {
    let mut map = BTreeMap::new();
    for (line, fields) in records(text) {
        let (node, community) = two_fields(line, &fields, "`node community`")?;
        if let Some(previous) = map.insert(node.to_owned(), community.to_owned()) {
            if previous != community {
                return Err(ParseError::ConflictingCommunity {
                    line,
                    token: node.to_owned(),
                    first: previous,
                    second: community.to_owned(),
                });
            }
        }
    }
    if map.is_empty() {
        return Err(ParseError::EmptyCommunityMap);
    }
    Ok(map)
}

/// A graph together with the tokens its ids were interned from.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: CommunityGraph,
    node_tokens: Vec<String>,
    community_tokens: Vec<String>,
}

impl LabeledGraph {
    pub fn parse(edges: &str, communities: &str) -> Result<Self, ParseError> {
        let membership = parse_communities(communities)?;
        let community_tokens: Vec<String> = membership
            .values()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let community_index: BTreeMap<&str, u32> = community_tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_str(), i as u32))
            .collect();
        let node_tokens: Vec<String> = membership.keys().cloned().collect();
        let node_index: BTreeMap<&str, u32> = node_tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_str(), i as u32))
            .collect();
        let community_of: Vec<CommunityId> = membership
            .values()
            .map(|c| CommunityId(community_index[c.as_str()]))
            .collect();

        let lookup = |line: usize, token: &str| {
            node_index
                .get(token)
                .map(|&i| NodeId(i))
                .ok_or_else(|| ParseError::UnknownNode {
                    line,
                    token: token.to_owned(),
                })
        };
        let mut edges_out = Vec::new();
        for (line, a, b) in parse_edge_list(edges)? {
            if a == b {
                return Err(ParseError::SelfLoop { line, token: a });
            }
            edges_out.push((lookup(line, &a)?, lookup(line, &b)?));
        }
        let graph = CommunityGraph::build(edges_out, &community_of)?;
        Ok(LabeledGraph {
            graph,
            node_tokens,
            community_tokens,
        })
    }

    pub fn read(edges: &Path, communities: &Path) -> Result<Self, ParseError> {
        let load = |path: &Path| {
            fs::read_to_string(path).map_err(|source| ParseError::Io {
                path: path.display().to_string(),
                source,
            })
        };
        Self::parse(&load(edges)?, &load(communities)?)
    }

    /// Labels nodes `v<id>` and communities `c<id>`, zero-padded so that
    /// token order matches id order.
    pub fn with_generated_tokens(graph: CommunityGraph) -> Self {
        let pad = |count: usize, prefix: char| -> Vec<String> {
            let width = count.saturating_sub(1).to_string().len();
            (0..count).map(|i| format!("{prefix}{i:0width$}")).collect()
        };
        let node_tokens = pad(graph.node_count(), 'v');
        let community_tokens = pad(graph.community_count(), 'c');
        LabeledGraph {
            graph,
            node_tokens,
            community_tokens,
        }
    }

    pub fn node_token(&self, v: NodeId) -> &str {
        &self.node_tokens[v.index()]
    }

    pub fn community_token(&self, c: CommunityId) -> &str {
        &self.community_tokens[c.index()]
    }

    pub fn node_tokens(&self) -> &[String] {
        &self.node_tokens
    }

    pub fn community_tokens(&self) -> &[String] {
        &self.community_tokens
    }

    /// Same tokens, communities made complete.
    pub fn localized(&self) -> Self {
        LabeledGraph {
            graph: self.graph.localize_complete(),
            node_tokens: self.node_tokens.clone(),
            community_tokens: self.community_tokens.clone(),
        }
    }

    /// Canonical edge list: one `low high` line per edge, sorted, LF endings.
    pub fn edge_list_text(&self) -> String {
        // ids follow token order, so sorting by id sorts by token
        let mut out = String::new();
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "{} {}", self.node_token(u), self.node_token(v));
        }
        out
    }

    /// Canonical community file: one line per node, sorted by node token.
    pub fn communities_text(&self) -> String {
        let mut out = String::new();
        for (i, token) in self.node_tokens.iter().enumerate() {
            let c = self.graph.community_of(NodeId(i as u32));
            let _ = writeln!(out, "{} {}", token, self.community_token(c));
        }
        out
    }

    /// Graphviz rendering: one cluster per community, bridges drawn bold red.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n  node [shape=circle];\n");
        for (c, members) in self.graph.members().iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{c} {{");
            let _ = writeln!(out, "    label={};", dot_quote(&self.community_tokens[c]));
            for &v in members {
                let _ = writeln!(out, "    {};", dot_quote(self.node_token(v)));
            }
            out.push_str("  }\n");
        }
        for (u, v) in self.graph.edges() {
            let style = match self.graph.pair_kind(u, v) {
                EdgeKind::Bridge => " [color=red, penwidth=2]",
                EdgeKind::Local => "",
            };
            let _ = writeln!(
                out,
                "  {} -- {}{};",
                dot_quote(self.node_token(u)),
                dot_quote(self.node_token(v)),
                style
            );
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(token: &str) -> String {
    let mut quoted = String::with_capacity(token.len() + 2);
    quoted.push('"');
    for ch in token.chars() {
        if ch == '"' || ch == '\\' {
            quoted.push('\\');
        }
        quoted.push(ch);
    }
    quoted.push('"');
    quoted
}

#[cfg(test)]
mod tests {
    use super::*;

    const EDGES: &str = "# two triangles and a bridge\nb a\nc a\nb c\n\nx y\ny z\nz x\nc x\nc x\n";
    const COMMUNITIES: &str = "a left\nb left\nc left\nx right\ny right\nz right\n";

    #[test]
    fn parses_and_interns_in_token_order() {
        let g = LabeledGraph::parse(EDGES, COMMUNITIES).unwrap();
        assert_eq!(g.graph.node_count(), 6);
        assert_eq!(g.graph.edge_count(), 7);
        assert_eq!(g.graph.bridge_count(), 1);
        assert_eq!(g.node_token(NodeId(2)), "c");
        assert_eq!(g.community_token(CommunityId(1)), "right");
    }

    #[test]
    fn canonical_round_trip() {
        let g = LabeledGraph::parse(EDGES, COMMUNITIES).unwrap();
        let edges = g.edge_list_text();
        let communities = g.communities_text();
        assert_eq!(edges, "a b\na c\nb c\nc x\nx y\nx z\ny z\n");
        assert_eq!(communities, "a left\nb left\nc left\nx right\ny right\nz right\n");
        let again = LabeledGraph::parse(&edges, &communities).unwrap();
        assert_eq!(again.edge_list_text(), edges);
        assert_eq!(again.communities_text(), communities);
    }

    #[test]
    fn line_numbers_in_errors() {
        let err = LabeledGraph::parse("a b\na q\n", "a 1\nb 1\n").unwrap_err();
        assert!(matches!(err, ParseError::UnknownNode { line: 2, ref token } if token == "q"));

        let err = LabeledGraph::parse("a b c\n", "a 1\nb 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));

        let err = LabeledGraph::parse("# header\na a\n", "a 1\n").unwrap_err();
        assert!(matches!(err, ParseError::SelfLoop { line: 2, .. }));

        let err = LabeledGraph::parse("", "a 1\na 2\n").unwrap_err();
        assert!(matches!(err, ParseError::ConflictingCommunity { line: 2, .. }));

        let err = LabeledGraph::parse("", "# nothing\n").unwrap_err();
        assert!(matches!(err, ParseError::EmptyCommunityMap));
    }

    #[test]
    fn isolated_node_from_community_file() {
        let g = LabeledGraph::parse("a b\n", "a 0\nb 0\nlonely 1\n").unwrap();
        assert_eq!(g.graph.isolated_nodes(), vec![NodeId(2)]);
        assert_eq!(g.edge_list_text(), "a b\n");
    }

    #[test]
    fn generated_tokens_sort_like_ids() {
        let g = crate::constructors::two_star(3, 4).unwrap().graph;
        let labeled = LabeledGraph::with_generated_tokens(g);
        assert_eq!(labeled.node_token(NodeId(3)), "v03");
        assert_eq!(labeled.community_token(CommunityId(2)), "c2");
        let mut sorted = labeled.node_tokens().to_vec();
        sorted.sort();
        assert_eq!(sorted, labeled.node_tokens());
        let again = LabeledGraph::parse(&labeled.edge_list_text(), &labeled.communities_text()).unwrap();
        assert!(again.graph.edges().eq(labeled.graph.edges()));
    }

    #[test]
    fn dot_marks_bridges() {
        let g = LabeledGraph::parse("a b\nb \"q\n", "a 0\nb 0\n\"q 1\n").unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("subgraph cluster_1"));
        assert!(dot.contains("\"\\\"q\" -- \"b\" [color=red, penwidth=2];"));
        assert!(dot.contains("\"a\" -- \"b\";"));
    }
}
