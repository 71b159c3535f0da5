//! Canonical keys of quad systems modulo label bijection.
//!
//! Labels are colored by iterated refinement over their quad incidences
//! (partner in the same pair, colors of the opposite pair), then ties are
//! broken by individualization with backtracking. The lexicographically
//! smallest relabeled quad list over all leaves is the key. Within a cell
//! only one label per twin class is individualized, where twins are labels
//! whose transposition preserves the quad multiset.

use std::fmt;

use super::compact::{compact, CQuad, Compact};
use super::problem::CountProblem;
use crate::canon::{individualize, rank_by, target_cell};
use crate::error::CountError;

/// Memoization identity of a counting problem.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey(Vec<u8>);

impl MemoKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for MemoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MemoKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_key(p: &CountProblem) -> Result<MemoKey, CountError> {
    Ok(compact_key(&compact(p)?))
}

/// Colour of the partner label and the sorted colours of the opposite pair.
type Slot = (u32, u32, u32);

struct Incidence {
    /// Per label: (partner, other pair) for every quad containing it.
    slots: Vec<Vec<(u8, [u8; 2])>>,
}

impl Incidence {
    fn new(c: &Compact) -> Self {
        let mut slots = vec![Vec::new(); c.m as usize];
        for q in &c.quads {
            let [a, b, x, y] = q.l;
            slots[a as usize].push((b, [x, y]));
            slots[b as usize].push((a, [x, y]));
            slots[x as usize].push((y, [a, b]));
            slots[y as usize].push((x, [a, b]));
        }
        Self { slots }
    }

    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut cells = crate::canon::cell_count(&colors);
        loop {
            let keys: Vec<(u32, Vec<Slot>)> = self
                .slots
                .iter()
                .enumerate()
                .map(|(x, slot)| {
                    let mut sig: Vec<Slot> = slot
                        .iter()
                        .map(|&(partner, [u, v])| {
                            let (cu, cv) = (colors[u as usize], colors[v as usize]);
                            (colors[partner as usize], cu.min(cv), cu.max(cv))
                        })
                        .collect();
                    sig.sort_unstable();
                    (colors[x], sig)
                })
                .collect();
            colors = rank_by(&keys);
            let now = crate::canon::cell_count(&colors);
            if now == cells {
                return colors;
            }
            cells = now;
        }
    }
}

fn sorted_quads(quads: &[CQuad]) -> Vec<CQuad> {
    let mut v = quads.to_vec();
    v.sort_unstable();
    v
}

fn transposition_is_automorphism(sorted: &[CQuad], x: u8, y: u8) -> bool {
    let swap = |z: u8| {
        if z == x {
            y
        } else if z == y {
            x
        } else {
            z
        }
    };
    let mut image: Vec<CQuad> = sorted.iter().map(|q| q.map(swap)).collect();
    image.sort_unstable();
    image == sorted
}

struct Search<'a> {
    inc: Incidence,
    quads: &'a [CQuad],
    sorted: Vec<CQuad>,
    best: Option<Vec<CQuad>>,
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<u32>) {
        let colors = self.inc.refine(colors);
        let Some(cell) = target_cell(&colors) else {
            let cert =
                sorted_quads(&self.quads.iter().map(|q| q.map(|z| colors[z as usize] as u8)).collect::<Vec<_>>());
            if self.best.as_ref().is_none_or(|b| cert < *b) {
                self.best = Some(cert);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&t| transposition_is_automorphism(&self.sorted, t as u8, v as u8)) {
                continue;
            }
            tried.push(v);
            self.run(individualize(&colors, v));
        }
    }
}

pub(crate) fn compact_key(c: &Compact) -> MemoKey {
    let mut search = Search { inc: Incidence::new(c), quads: &c.quads, sorted: sorted_quads(&c.quads), best: None };
    search.run(vec![0; c.m as usize]);
    let best = search.best.expect("at least one leaf");
    let mut bytes = Vec::with_capacity(1 + 4 * best.len());
    bytes.push(c.m);
    for q in best {
        bytes.extend_from_slice(&q.l);
    }
    MemoKey(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::problem::{to_count_problem, Quad};
    use crate::graph::Graph;

    #[test]
    fn relabeling_invariant() {
        let p = to_count_problem(&Graph::triangle()).unwrap();
        let q = p.relabel(|x| (x * 5) % 7 + 10);
        assert_eq!(canonical_key(&p).unwrap(), canonical_key(&q).unwrap());
    }

    #[test]
    fn sizes_differ() {
        let tri = to_count_problem(&Graph::triangle()).unwrap();
        let four = CountProblem::new(1..=4, vec![Quad::new(1, 2, 3, 4).unwrap()]).unwrap();
        assert_ne!(canonical_key(&tri).unwrap(), canonical_key(&four).unwrap());
    }

    #[test]
    fn pairing_matters() {
        let a = CountProblem::new(1..=6, vec![Quad::new(1, 2, 3, 4).unwrap(), Quad::new(1, 2, 5, 6).unwrap()]).unwrap();
        let b = CountProblem::new(1..=6, vec![Quad::new(1, 2, 3, 4).unwrap(), Quad::new(1, 5, 2, 6).unwrap()]).unwrap();
        assert_ne!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
    }

    #[test]
    fn isolated_labels_do_not_explode() {
        let p = CountProblem::new(1..=40, vec![Quad::new(1, 2, 3, 4).unwrap()]).unwrap();
        let q = CountProblem::new(1..=40, vec![Quad::new(37, 12, 5, 40).unwrap()]).unwrap();
        assert_eq!(canonical_key(&p).unwrap(), canonical_key(&q).unwrap());
    }
}
