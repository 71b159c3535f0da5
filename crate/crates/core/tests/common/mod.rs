//! Brute-force reference implementations and random inputs shared by the
//! integration suites. Nothing here reuses the library's fast paths.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sphere_laman_core::generator::{henneberg1, henneberg2};
use sphere_laman_core::Graph;

/// Laman by definition: `m = 2n − 3` and every vertex subset `S` with
/// `|S| ≥ 2` spans at most `2|S| − 3` edges.
pub fn brute_is_laman(g: &Graph) -> bool {
    let n = g.n() as usize;
    if g.m() + 3 != 2 * n {
        return false;
    }
    (0u32..1 << n).filter(|s| s.count_ones() >= 2).all(|s| {
        let inside = g.edges().iter().filter(|&&(a, b)| s >> (a - 1) & 1 == 1 && s >> (b - 1) & 1 == 1).count();
        inside + 3 <= 2 * s.count_ones() as usize
    })
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Isomorphism by trying every vertex bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    perms.iter().any(|p| {
        let img: Vec<u32> = p.iter().map(|&i| i as u32 + 1).collect();
        g.relabel(&img) == *h
    })
}

/// Smallest edge bitmask over all relabelings; edges are indexed in the
/// order of `pairs`. Equal forms iff isomorphic.
pub fn brute_form(edges: u64, pairs: &[(u32, u32)], perms: &[Vec<usize>]) -> u64 {
    let index = |a: u32, b: u32| pairs.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    perms
        .iter()
        .map(|p| {
            (0..pairs.len()).filter(|i| edges >> i & 1 == 1).fold(0u64, |acc, i| {
                let (a, b) = pairs[i];
                acc | 1 << index(p[a as usize - 1] as u32 + 1, p[b as usize - 1] as u32 + 1)
            })
        })
        .min()
        .unwrap()
}

/// A Laman graph on `n` vertices built by random Henneberg moves, then
/// randomly relabeled.
pub fn random_laman(n: u32, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::triangle();
    while g.n() < n {
        let k = g.n();
        g = if rng.gen_bool(0.5) {
            let mut vs: Vec<u32> = (1..=k).collect();
            vs.shuffle(rng);
            henneberg1(&g, vs[0], vs[1]).unwrap()
        } else {
            let e = g.edges()[rng.gen_range(0..g.m())];
            let others: Vec<u32> = (1..=k).filter(|&w| w != e.0 && w != e.1).collect();
            henneberg2(&g, e, *others.choose(rng).unwrap()).unwrap()
        };
    }
    random_relabel(&g, rng)
}

pub fn random_relabel(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<u32> = (1..=g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// All `k`-subsets of `0..n` as index vectors.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
