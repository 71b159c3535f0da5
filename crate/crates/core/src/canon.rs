//! Canonical forms for graphs by color refinement and individualization.
//!
//! The search explores every leaf of the individualization tree, except that
//! within a cell only one vertex per twin class is tried: swapping two twins
//! is an automorphism fixing everything already individualized, so both
//! subtrees produce the same set of certificates.

use crate::graph::Graph;

/// Renumbers arbitrary sortable keys to dense ranks `0..k`, preserving order.
pub(crate) fn rank_by<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

pub(crate) fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |c| c as usize + 1)
}

/// Gives `v` its own color just below the rest of its cell.
pub(crate) fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<u64> = colors.iter().enumerate().map(|(x, &c)| 2 * c as u64 + u64::from(x != v)).collect();
    rank_by(&keys)
}

/// First smallest non-singleton cell (by color value), if any.
pub(crate) fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = cell_count(colors);
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let (c, _) = sizes.iter().enumerate().filter(|(_, &s)| s > 1).min_by_key(|&(c, &s)| (s, c))?;
    Some((0..colors.len()).filter(|&x| colors[x] as usize == c).collect())
}

fn refine(adj: &[u64], mut colors: Vec<u32>) -> Vec<u32> {
    let n = adj.len();
    loop {
        let before = cell_count(&colors);
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        colors = rank_by(&keys);
        if cell_count(&colors) == before {
            return colors;
        }
    }
}

fn certificate(adj: &[u64], colors: &[u32]) -> Vec<u64> {
    let n = adj.len();
    let mut rows = vec![0u64; n];
    for v in 0..n {
        for w in 0..n {
            if adj[v] >> w & 1 == 1 {
                rows[colors[v] as usize] |= 1 << colors[w];
            }
        }
    }
    rows
}

fn are_twins(adj: &[u64], u: usize, w: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << w));
    adj[u] & mask == adj[w] & mask
}

fn search(adj: &[u64], colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<u32>)>) {
    let colors = refine(adj, colors);
    let Some(cell) = target_cell(&colors) else {
        let cert = certificate(adj, &colors);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, colors));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| are_twins(adj, t, v)) {
            continue;
        }
        tried.push(v);
        search(adj, individualize(&colors, v), best);
    }
}

/// Canonical relabeling: `perm[v - 1]` is the new (1-based) label of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<u32> {
    let adj = g.adjacency_masks();
    let mut best = None;
    search(&adj, vec![0; adj.len()], &mut best);
    let (_, colors) = best.expect("search visits at least one leaf");
    colors.into_iter().map(|c| c + 1).collect()
}

/// The canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

/// Canonical byte string: the graph6 encoding of the canonical form. Equal
/// for two graphs iff they are isomorphic.
pub fn canonical_graph(g: &Graph) -> Vec<u8> {
    crate::graph6::encode(&canonical_form(g)).into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_vs_path() {
        let path = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let path2 = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
        assert_ne!(canonical_graph(&path), canonical_graph(&Graph::triangle()));
        assert_eq!(canonical_graph(&path), canonical_graph(&path2));
    }

    #[test]
    fn regular_graphs_need_individualization() {
        // C6 and two disjoint triangles are both 2-regular; refinement alone
        // cannot tell them apart.
        let c6 = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
        let tt = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_ne!(canonical_graph(&c6), canonical_graph(&tt));
        let c6b = c6.relabel(&[3, 6, 1, 5, 2, 4]);
        assert_eq!(canonical_graph(&c6), canonical_graph(&c6b));
    }

    #[test]
    fn edgeless_graph_is_fast() {
        let g = Graph::new(40, []).unwrap();
        assert_eq!(canonical_form(&g), g);
    }
}
