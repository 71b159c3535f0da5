//! Laman graphs up to isomorphism, by closing the triangle under Henneberg
//! moves and deduplicating canonical forms level by level.

use std::collections::BTreeSet;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::GraphError;
use crate::graph::Graph;

/// Largest vertex count [`enumerate_laman`] accepts.
pub const MAX_ENUMERATION_N: u32 = 10;

/// Vertex addition: a new vertex `n+1` joined to `u` and `v`.
pub fn henneberg1(g: &Graph, u: u32, v: u32) -> Result<Graph, GraphError> {
    let n = g.n();
    for x in [u, v] {
        if x == 0 || x > n {
            return Err(GraphError::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(GraphError::Loop { vertex: u });
    }
    let edges = g.edges().iter().copied().chain([(u, n + 1), (v, n + 1)]);
    Graph::new(n + 1, edges)
}

/// Edge split: remove `{u,v}` and join a new vertex `n+1` to `u`, `v`, `w`.
pub fn henneberg2(g: &Graph, (u, v): (u32, u32), w: u32) -> Result<Graph, GraphError> {
    let n = g.n();
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge { a: u.min(v), b: u.max(v) });
    }
    if w == 0 || w > n {
        return Err(GraphError::VertexOutOfRange { vertex: w, n });
    }
    if w == u || w == v {
        return Err(GraphError::SplitVertexOnEdge { vertex: w });
    }
    let e = (u.min(v), u.max(v));
    let edges = g.edges().iter().copied().filter(|&x| x != e).chain([(u, n + 1), (v, n + 1), (w, n + 1)]);
    Graph::new(n + 1, edges)
}

/// Every one-step Henneberg extension of `g`.
pub fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            out.push(henneberg1(g, u, v).expect("valid vertex pair"));
        }
    }
    for &e in g.edges() {
        for w in (1..=n).filter(|&w| w != e.0 && w != e.1) {
            out.push(henneberg2(g, e, w).expect("valid edge split"));
        }
    }
    out
}

/// Laman graphs on `n` vertices, one canonical representative per
/// isomorphism class, sorted by canonical string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamanCorpus {
    pub n: u32,
    pub graphs: Vec<Graph>,
}

impl LamanCorpus {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Corpus file body: a metadata line, then one graph6 string per line.
    pub fn to_corpus_file(&self) -> String {
        let mut s = format!("n={} count={}\n", self.n, self.graphs.len());
        for g in &self.graphs {
            s.push_str(&crate::graph6::encode(g));
            s.push('\n');
        }
        s
    }

    pub fn from_corpus_file(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let meta = lines.next().ok_or_else(|| GraphError::Parse { line: 1, message: "empty corpus file".into() })?;
        let (n, count) = parse_meta(meta)?;
        let graphs = lines
            .enumerate()
            .map(|(i, l)| {
                crate::graph6::decode(l.trim()).map_err(|e| GraphError::Parse { line: i + 2, message: e.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if graphs.len() != count || graphs.iter().any(|g| g.n() != n) {
            return Err(GraphError::Parse {
                line: 1,
                message: format!("metadata says n={n} count={count}, body disagrees"),
            });
        }
        Ok(Self { n, graphs })
    }
}

fn parse_meta(line: &str) -> Result<(u32, usize), GraphError> {
    let bad = || GraphError::Parse { line: 1, message: format!("expected \"n=<n> count=<k>\", got {line:?}") };
    let mut n = None;
    let mut count = None;
    for tok in line.split_ascii_whitespace() {
        match tok.split_once('=') {
            Some(("n", v)) => n = v.parse().ok(),
            Some(("count", v)) => count = v.parse().ok(),
            _ => return Err(bad()),
        }
    }
    Ok((n.ok_or_else(bad)?, count.ok_or_else(bad)?))
}

fn next_level(level: &[Graph]) -> Vec<Graph> {
    #[cfg(feature = "parallel")]
    let forms: BTreeSet<Vec<u8>> = {
        use rayon::prelude::*;
        level.par_iter().map(|g| extensions(g).iter().map(canonical_graph).collect::<BTreeSet<_>>()).reduce(
            BTreeSet::new,
            |mut a, b| {
                a.extend(b);
                a
            },
        )
    };
    #[cfg(not(feature = "parallel"))]
    let forms: BTreeSet<Vec<u8>> =
        level.iter().flat_map(|g| extensions(g).iter().map(canonical_graph).collect::<Vec<_>>()).collect();

    forms
        .into_iter()
        .map(|s| crate::graph6::decode(std::str::from_utf8(&s).expect("ascii")).expect("own encoding"))
        .collect()
}

/// All Laman graphs on `n` vertices up to isomorphism.
pub fn enumerate_laman(n: u32) -> Result<LamanCorpus, GraphError> {
    enumerate_laman_bounded(n, MAX_ENUMERATION_N)
}

pub fn enumerate_laman_bounded(n: u32, max: u32) -> Result<LamanCorpus, GraphError> {
    if !(3..=max.min(MAX_ENUMERATION_N)).contains(&n) {
        return Err(GraphError::BoundExceeded { n, max: max.min(MAX_ENUMERATION_N) });
    }
    let mut level = vec![canonical_form(&Graph::triangle())];
    for _ in 3..n {
        level = next_level(&level);
    }
    Ok(LamanCorpus { n, graphs: level })
}
