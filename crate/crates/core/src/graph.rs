//! Simple undirected graphs on vertices `1..=n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::GraphError;

/// An edge `{a, b}` stored with `a < b`, 1-based.
pub type Edge = (u32, u32);

/// A simple undirected graph with vertices `1..=n`.
///
/// Edges are kept sorted and deduplicated, so two graphs with the same edge
/// set compare equal regardless of insertion order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u32,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range vertices.
    pub fn new(n: u32, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if e.0 == 0 || e.1 > n {
                return Err(GraphError::VertexOutOfRange { vertex: if e.0 == 0 { 0 } else { e.1 }, n });
            }
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { a: e.0, b: e.1 });
            }
        }
        Ok(Self { n, edges: seen.into_iter().collect() })
    }

    pub fn triangle() -> Self {
        Self::new(3, [(1, 2), (1, 3), (2, 3)]).expect("valid")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency as bitmasks over 0-based vertex indices. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "adjacency masks need n <= 64");
        let mut adj = vec![0u64; self.n as usize];
        for &(a, b) in &self.edges {
            adj[(a - 1) as usize] |= 1 << (b - 1);
            adj[(b - 1) as usize] |= 1 << (a - 1);
        }
        adj
    }

    /// Applies the vertex map `v -> perm[v - 1]` (1-based images).
    pub fn relabel(&self, perm: &[u32]) -> Self {
        assert_eq!(perm.len(), self.n as usize);
        let edges = self.edges.iter().map(|&(a, b)| (perm[(a - 1) as usize], perm[(b - 1) as usize]));
        Self::new(self.n, edges).expect("relabeling by a permutation keeps a graph valid")
    }

    /// Laman test via the (2,3)-pebble game.
    pub fn is_laman(&self) -> bool {
        crate::pebble::is_laman(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}{}{b}", if self.n > 9 { "-" } else { "" })?;
        }
        f.write_str("])")
    }
}

/// Input formats understood by [`parse_graphs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// Parses a single graph.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph, GraphError> {
    let mut graphs = parse_graphs(text, format)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(GraphError::Parse { line: 1, message: "no graph in input".into() }),
        k => Err(GraphError::Parse { line: 1, message: format!("expected one graph, found {k}") }),
    }
}

/// Parses every graph in `text`: consecutive edge-list blocks, or one graph6
/// string per line.
pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>, GraphError> {
    match format {
        Format::EdgeList => parse_edge_lists(text),
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let l = l.trim();
                let l = l.strip_prefix(">>graph6<<").unwrap_or(l);
                crate::graph6::decode(l).map_err(|e| match e {
                    GraphError::Parse { message, .. } => GraphError::Parse { line: i + 1, message },
                    other => other,
                })
            })
            .collect(),
    }
}

fn parse_edge_lists(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let mut out = Vec::new();
    while let Some((hline, header)) = lines.next() {
        let (n, m) = parse_pair(header, hline + 1)?;
        let mut edges = Vec::with_capacity(m as usize);
        let mut seen = BTreeSet::new();
        for k in 0..m {
            let Some((lno, line)) = lines.next() else {
                return Err(GraphError::Parse {
                    line: hline + 1,
                    message: format!("header announces {m} edges, input ended after {k}"),
                });
            };
            let (a, b) = parse_pair(line, lno + 1)?;
            let at = |e: GraphError| match e {
                GraphError::Parse { .. } => e,
                other => GraphError::Parse { line: lno + 1, message: other.to_string() },
            };
            if a == b {
                return Err(at(GraphError::Loop { vertex: a }));
            }
            let lo = a.min(b);
            let hi = a.max(b);
            if lo == 0 || hi > n {
                return Err(at(GraphError::VertexOutOfRange { vertex: if lo == 0 { 0 } else { hi }, n }));
            }
            if !seen.insert((lo, hi)) {
                return Err(at(GraphError::DuplicateEdge { a: lo, b: hi }));
            }
            edges.push((lo, hi));
        }
        out.push(Graph::new(n, edges).map_err(|e| GraphError::Parse { line: hline + 1, message: e.to_string() })?);
    }
    Ok(out)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(u32, u32), GraphError> {
    let mut it = line.split_ascii_whitespace();
    let bad = |msg: &str| GraphError::Parse { line: line_no, message: format!("{msg}: {line:?}") };
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse::<u32>().map_err(|_| bad("not a nonnegative integer"))?;
    let b = b.parse::<u32>().map_err(|_| bad("not a nonnegative integer"))?;
    Ok((a, b))
}

/// Serializes in the edge-list format: `n m` followed by one `a b` per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n, g.m());
    for (a, b) in &g.edges {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}
