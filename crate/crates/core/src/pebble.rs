//! (2,3)-pebble game for Laman tightness.

use crate::graph::Graph;

const K: u8 = 2;
const L: usize = 3;

struct PebbleGame {
    pebbles: Vec<u8>,
    // out[v] lists heads of edges whose pebble sits on v.
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    fn new(n: usize) -> Self {
        Self { pebbles: vec![K; n], out: vec![Vec::new(); n] }
    }

    /// Moves one free pebble onto `root` along a reversed directed path,
    /// never drawing from `keep` (paths may pass through it). Returns false if no pebble is reachable.
    fn fetch(&mut self, root: usize, keep: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        let mut visited = vec![false; n];
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for idx in 0..self.out[x].len() {
                let y = self.out[x][idx];
                if visited[y] {
                    continue;
                }
                visited[y] = true;
                parent[y] = x;
                if y != keep && self.pebbles[y] > 0 {
                    // Reverse the path root -> ... -> y.
                    self.pebbles[y] -= 1;
                    let mut cur = y;
                    while cur != root {
                        let p = parent[cur];
                        let pos = self.out[p].iter().position(|&h| h == cur).expect("path edge");
                        self.out[p].swap_remove(pos);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    self.pebbles[root] += 1;
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    /// Tries to insert edge `{u, v}` as independent.
    fn insert(&mut self, u: usize, v: usize) -> bool {
        while (self.pebbles[u] + self.pebbles[v]) as usize <= L {
            if self.pebbles[u] < K {
                if !self.fetch(u, v) {
                    return false;
                }
            } else if !self.fetch(v, u) {
                return false;
            }
        }
        let tail = if self.pebbles[u] > 0 { u } else { v };
        let head = if tail == u { v } else { u };
        self.pebbles[tail] -= 1;
        self.out[tail].push(head);
        true
    }
}

/// True iff `|E| = 2n - 3` and every edge is independent in the (2,3) sense.
pub fn is_laman(g: &Graph) -> bool {
    let n = g.n() as usize;
    if n < 2 || g.m() != 2 * n - 3 {
        return false;
    }
    independent_edge_count(g) == g.m()
}

/// Size of a maximal (2,3)-sparse subset of the edges, picked greedily in
/// edge order.
pub fn independent_edge_count(g: &Graph) -> usize {
    let mut game = PebbleGame::new(g.n() as usize);
    g.edges().iter().filter(|&&(a, b)| game.insert(a as usize - 1, b as usize - 1)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn small_cases() {
        assert!(is_laman(&Graph::triangle()));
        let k4 = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!is_laman(&k4));
        assert_eq!(independent_edge_count(&k4), 5);
        assert!(is_laman(&Graph::new(2, [(1, 2)]).unwrap()));
        assert!(!is_laman(&Graph::new(1, []).unwrap()));
    }

    #[test]
    fn n9_table_graph() {
        let edges = [16, 18, 19, 25, 28, 29, 34, 37, 39, 47, 48, 57, 58, 67, 69].map(|e| (e / 10, e % 10));
        assert!(is_laman(&Graph::new(9, edges).unwrap()));
    }

    #[test]
    fn right_count_but_overbraced() {
        // K4 plus a pendant path: 7 edges on 5 vertices, but K4 violates sparsity.
        let g = Graph::new(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        assert_eq!(g.m(), 7);
        assert!(!is_laman(&g));
    }
}
