//! Simple undirected graphs with dense vertex ids and sorted adjacency lists.
//!
//! The edge-list text format is the canonical interchange format: one `u v`
//! edge per line, `#` starts a comment, and an optional first line `n m`
//! (two integers) declares the vertex and edge counts. Tokens are opaque
//! labels mapped to dense ids in order of first appearance; isolated
//! vertices are only representable through the header.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::Error;

/// Immutable simple undirected graph.
///
/// Vertex ids are `0..n`. Adjacency lists are strictly increasing, symmetric,
/// and free of self-loops and duplicates. Every vertex carries a display
/// label; graphs built programmatically default to the id as label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Vec<String>,
}

/// Edge-list parse failure, carrying the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: self-loop on '{label}'")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge '{a} {b}'")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: expected 'u v', found {found} token(s)")]
    TokenCount { line: usize, found: usize },
    #[error("line {line}: vertex '{label}' exceeds header vertex count {n}")]
    HeaderOverflow { line: usize, label: String, n: usize },
    #[error("header declared {declared} edges, file contains {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

impl Graph {
    /// Builds a graph from an explicit edge list over ids `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { v: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidEdge(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge("duplicate edge".into()));
            }
        }
        let labels = (0..n).map(|v| v.to_string()).collect();
        Ok(Graph { adj, m: edges.len(), labels })
    }

    /// Same as [`from_edges`](Self::from_edges) with explicit vertex labels.
    pub fn with_labels(n: usize, edges: &[(usize, usize)], labels: &[&str]) -> Result<Self, Error> {
        let mut g = Self::from_edges(n, edges)?;
        assert_eq!(labels.len(), n, "one label per vertex");
        g.labels = labels.iter().map(|s| s.to_string()).collect();
        Ok(g)
    }

    /// Parses edge-list text. See the module docs for the format.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut first_content = true;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 2 {
                return Err(ParseError::TokenCount { line: line_no, found: tokens.len() });
            }
            if first_content {
                first_content = false;
                if let (Ok(n), Ok(m)) = (tokens[0].parse::<usize>(), tokens[1].parse::<usize>()) {
                    header = Some((n, m));
                    continue;
                }
            }
            let mut pair = [0usize; 2];
            for (slot, tok) in pair.iter_mut().zip(&tokens) {
                let next = labels.len();
                *slot = *ids.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    next
                });
            }
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                return Err(ParseError::SelfLoop { line: line_no, label: tokens[0].into() });
            }
            if let Some((n, _)) = header {
                if u >= n || v >= n {
                    let over = if u >= n { tokens[0] } else { tokens[1] };
                    return Err(ParseError::HeaderOverflow { line: line_no, label: over.into(), n });
                }
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(ParseError::DuplicateEdge {
                    line: line_no,
                    a: tokens[0].into(),
                    b: tokens[1].into(),
                });
            }
            edges.push((u, v));
        }

        let n = match header {
            Some((n, m)) => {
                if m != edges.len() {
                    return Err(ParseError::EdgeCountMismatch { declared: m, found: edges.len() });
                }
                n
            }
            None => labels.len(),
        };
        while labels.len() < n {
            labels.push(labels.len().to_string());
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, m: edges.len(), labels })
    }

    /// Canonical edge-list writer: `n m` header then `u v` label lines,
    /// normalized and sorted by label so the output depends only on the
    /// labeled edge set. Reparsing therefore reproduces the same text.
    pub fn to_edge_list(&self) -> String {
        let mut lines: Vec<(&str, &str)> = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if v > u {
                    let (a, b) = (self.labels[u].as_str(), self.labels[v].as_str());
                    if label_cmp(a, b).is_le() {
                        lines.push((a, b));
                    } else {
                        lines.push((b, a));
                    }
                }
            }
        }
        lines.sort_by(|x, y| label_cmp(x.0, y.0).then_with(|| label_cmp(x.1, y.1)));
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.m);
        for (a, b) in lines {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Vertex count (the order of the graph).
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edge count (the size of the graph).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of `v`, rejecting out-of-range ids.
    pub fn degree(&self, v: usize) -> Result<usize, Error> {
        self.adj
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange { v, n: self.n() })
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Resolves a display label back to its vertex id.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// True iff the graph has a single connected component.
    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        comps
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n < 2 || self.m == n * (n - 1) / 2
    }

    /// Edge set as `(label, label)` pairs, order-normalized inside each pair.
    /// This is the identity that survives a serialize/parse round trip even
    /// when dense ids get reassigned by first-appearance order.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if v > u {
                    let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                    if a <= b {
                        out.push((a, b));
                    } else {
                        out.push((b, a));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// Label ordering for display and canonical output: numeric labels sort
/// numerically and before everything else, the rest lexicographically.
pub fn label_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_edge_path() {
        let g = Graph::parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.label(2), "c");
    }

    #[test]
    fn rejects_self_loop_with_line() {
        let err = Graph::parse_edge_list("a b\na a").unwrap_err();
        assert_eq!(err, ParseError::SelfLoop { line: 2, label: "a".into() });
    }

    #[test]
    fn rejects_duplicate_edge_either_orientation() {
        let err = Graph::parse_edge_list("a b\nb a").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateEdge { line: 2, .. }));
    }

    #[test]
    fn rejects_garbage_tokens() {
        let err = Graph::parse_edge_list("a b c").unwrap_err();
        assert_eq!(err, ParseError::TokenCount { line: 1, found: 3 });
    }

    #[test]
    fn header_allows_isolated_vertices() {
        let g = Graph::parse_edge_list("3 1\na b").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 1);
        assert_eq!(g.degree(2).unwrap(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn header_edge_count_must_match() {
        let err = Graph::parse_edge_list("3 2\na b").unwrap_err();
        assert_eq!(err, ParseError::EdgeCountMismatch { declared: 2, found: 1 });
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let g = Graph::parse_edge_list("# a path\n\na b # edge\nb c").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn degree_checks_range() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for v in 0..4 {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
        assert!(matches!(g.degree(4), Err(Error::VertexOutOfRange { v: 4, n: 4 })));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::parse_edge_list("a b\nb c").unwrap().is_connected());
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.component_count(), 2);
        assert!(Graph::from_edges(0, &[]).unwrap().is_connected());
    }

    #[test]
    fn canonical_writer_round_trips() {
        let g = Graph::parse_edge_list("b a\nc a\nd b").unwrap();
        let text = g.to_edge_list();
        let g2 = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g.labeled_edges(), g2.labeled_edges());
        assert_eq!(g.n(), g2.n());
        assert_eq!(text, g2.to_edge_list());
    }
}
