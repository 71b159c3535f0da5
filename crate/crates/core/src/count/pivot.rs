use std::hash::{Hash, Hasher};

use super::compact::{compact, CQuad};
use super::problem::{CountProblem, Quad};

/// How the recursion picks the quad to split on. The count does not depend
/// on the choice; only the amount of pruning does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Quad with the most other quads sharing at least three labels with it.
    #[default]
    MaxOverlap,
    /// First quad in list order.
    First,
    /// Pseudo-random but deterministic for a given problem and seed.
    Seeded(u64),
}

pub(crate) fn select_compact(quads: &[CQuad], rule: PivotRule) -> usize {
    assert!(!quads.is_empty(), "pivot selection on an empty quad list");
    match rule {
        PivotRule::First => 0,
        PivotRule::MaxOverlap => {
            let masks: Vec<u64> = quads.iter().map(CQuad::mask).collect();
            let mut best: Option<(usize, usize)> = None;
            for (i, &mi) in masks.iter().enumerate() {
                let score = masks.iter().enumerate().filter(|&(j, &mj)| j != i && (mi & mj).count_ones() >= 3).count();
                if best.is_none_or(|(_, s)| score > s) {
                    best = Some((i, score));
                }
            }
            best.map(|(i, _)| i).unwrap_or(0)
        }
        PivotRule::Seeded(seed) => {
            let mut h = std::collections::hash_map::DefaultHasher::new();
            seed.hash(&mut h);
            quads.hash(&mut h);
            (h.finish() % quads.len() as u64) as usize
        }
    }
}

/// Returns the quad the recursion would split `p` on first.
///
/// # Panics
///
/// If `p` has no quads.
pub fn select_pivot(p: &CountProblem, rule: PivotRule) -> Quad {
    let c = compact(p).expect("problem fits in 64 labels");
    p.quads()[select_compact(&c.quads, rule)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: u32, b: u32, c: u32, d: u32) -> Quad {
        Quad::new(a, b, c, d).unwrap()
    }

    #[test]
    fn single_quad() {
        let p = CountProblem::new(1..=4, vec![q(1, 2, 3, 4)]).unwrap();
        for rule in [PivotRule::MaxOverlap, PivotRule::First, PivotRule::Seeded(9)] {
            assert_eq!(select_pivot(&p, rule), q(1, 2, 3, 4));
        }
    }

    #[test]
    fn prefers_overlap() {
        let p = CountProblem::new(
            1..=8,
            vec![q(5, 6, 7, 8), q(1, 2, 3, 4), q(1, 2, 3, 5), q(1, 2, 4, 6), q(1, 7, 8, 3), q(2, 6, 4, 8)],
        )
        .unwrap();
        assert_eq!(select_pivot(&p, PivotRule::MaxOverlap), q(1, 2, 3, 4));
        assert_eq!(select_pivot(&p, PivotRule::First), q(5, 6, 7, 8));
    }

    #[test]
    fn seeded_pivot_is_member() {
        let p = CountProblem::new(1..=7, vec![q(1, 2, 3, 4), q(1, 5, 6, 7), q(2, 3, 6, 7), q(4, 5, 6, 7)]).unwrap();
        for seed in 0..20 {
            assert!(p.quads().contains(&select_pivot(&p, PivotRule::Seeded(seed))));
        }
    }
}
