//! The degree recursion.
//!
//! `deg A(N,Q)` is computed by fixing a pivot quad `{{a,b},{c,d}}` and
//! summing, over every block `Ī = {a,b} ∪ L` with `L ⊆ N \ {a,b,c,d}`, the
//! product of the degrees of the two restricted problems on `Ī ∪ {★}` and
//! `J̄ ∪ {★}`. A block contributes nothing when some other quad meets it in
//! exactly two labels, or when either restricted problem has the wrong
//! number of quads for its dimension.

use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::canonical::{compact_key, MemoKey};
use super::compact::{compact, rank_table, CQuad};
use super::pivot::{select_compact, PivotRule};
use super::problem::CountProblem;
use crate::error::CountError;

/// Which pair of the pivot seeds the block `Ī`. Both give the same total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotSide {
    #[default]
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    pub memo: bool,
    /// Subproblems with fewer labels are never cached.
    pub memo_min_labels: u8,
    pub pivot: PivotRule,
    pub pivot_side: PivotSide,
    /// Fan the block loop out over rayon at shallow depth. Ignored when the
    /// `parallel` feature is off.
    pub parallel: bool,
    /// Recursion depths `< parallel_depth` run their block loop in parallel.
    pub parallel_depth: u32,
}

impl Default for CountOptions {
    fn default() -> Self {
        Self {
            memo: true,
            memo_min_labels: 10,
            pivot: PivotRule::MaxOverlap,
            pivot_side: PivotSide::First,
            parallel: cfg!(feature = "parallel"),
            parallel_depth: 2,
        }
    }
}

impl CountOptions {
    pub fn sequential() -> Self {
        Self { parallel: false, ..Self::default() }
    }

    pub fn without_memo(self) -> Self {
        Self { memo: false, ..self }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MemoStats {
    pub hits: u64,
    pub misses: u64,
    pub peak_entries: usize,
}

/// A counting context. The memo table is shared by every call made through
/// the same `Counter`, and may be shared across threads.
pub struct Counter {
    opts: CountOptions,
    memo: DashMap<MemoKey, BigUint>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl Default for Counter {
    fn default() -> Self {
        Self::new(CountOptions::default())
    }
}

impl Counter {
    pub fn new(opts: CountOptions) -> Self {
        Self { opts, memo: DashMap::new(), hits: AtomicU64::new(0), misses: AtomicU64::new(0) }
    }

    pub fn options(&self) -> &CountOptions {
        &self.opts
    }

    pub fn count(&self, p: &CountProblem) -> Result<BigUint, CountError> {
        if !p.is_well_posed() {
            return Err(CountError::IllPosed { quads: p.quads().len(), expected: p.labels().len() as isize - 3 });
        }
        let c = compact(p)?;
        Ok(self.degree(c.m, &c.quads, 0))
    }

    pub fn stats(&self) -> MemoStats {
        MemoStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            peak_entries: self.memo.len(),
        }
    }

    fn degree(&self, m: u8, quads: &[CQuad], depth: u32) -> BigUint {
        debug_assert_eq!(quads.len() + 3, m as usize);
        if (m == 4 && quads.len() == 1) || (m == 3 && quads.is_empty()) {
            return BigUint::one();
        }
        let key = if self.opts.memo && m >= self.opts.memo_min_labels {
            let key = compact_key(&super::compact::Compact { m, quads: quads.to_vec() });
            if let Some(v) = self.memo.get(&key) {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return v.clone();
            }
            self.misses.fetch_add(1, Ordering::Relaxed);
            Some(key)
        } else {
            None
        };
        let value = self.split_sum(m, quads, depth);
        if let Some(key) = key {
            let stored = self.memo.entry(key).or_insert_with(|| value.clone());
            assert_eq!(*stored, value, "memo collision with a different degree");
        }
        value
    }

    fn split_sum(&self, m: u8, quads: &[CQuad], depth: u32) -> BigUint {
        let p = select_compact(quads, self.opts.pivot);
        let rest: Vec<CQuad> = quads.iter().enumerate().filter(|&(i, _)| i != p).map(|(_, q)| *q).collect();
        let (first, second) = quads[p].pair_masks();
        let seed = match self.opts.pivot_side {
            PivotSide::First => first,
            PivotSide::Second => second,
        };
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let free = full & !(first | second);
        let split = Split { full, seed, masks: rest.iter().map(CQuad::mask).collect(), rest };

        #[cfg(feature = "parallel")]
        if self.opts.parallel && depth < self.opts.parallel_depth {
            use rayon::prelude::*;
            let blocks: Vec<u64> = subsets(free).map(|sub| seed | sub).filter(|&b| split.admissible(b)).collect();
            return blocks
                .par_iter()
                .map(|&block| self.block_term(&split, block, depth))
                .reduce(BigUint::zero, |a, b| a + b);
        }

        let mut sum = BigUint::zero();
        for sub in subsets(free) {
            let block = seed | sub;
            if split.admissible(block) {
                sum += self.block_term(&split, block, depth);
            }
        }
        sum
    }

    fn block_term(&self, split: &Split, block: u64, depth: u32) -> BigUint {
        let inner = split.restrict(block);
        let left = self.degree(block.count_ones() as u8 + 1, &inner, depth + 1);
        if left.is_zero() {
            return left;
        }
        let outer_set = split.full & !block;
        let outer = split.restrict(outer_set);
        left * self.degree(outer_set.count_ones() as u8 + 1, &outer, depth + 1)
    }
}

struct Split {
    full: u64,
    seed: u64,
    rest: Vec<CQuad>,
    masks: Vec<u64>,
}

impl Split {
    /// No quad meets the block in exactly two labels, and both sides have
    /// exactly `|side| - 2` quads (the dimension of `M(side ∪ ★)`).
    #[inline]
    fn admissible(&self, block: u64) -> bool {
        debug_assert_eq!(block & self.seed, self.seed);
        let outer = self.full & !block;
        let cap_in = block.count_ones() as usize - 2;
        let cap_out = outer.count_ones() as usize - 2;
        let (mut n_in, mut n_out) = (0usize, 0usize);
        for &qm in &self.masks {
            match (qm & block).count_ones() {
                2 => return false,
                3 | 4 => {
                    n_in += 1;
                    if n_in > cap_in {
                        return false;
                    }
                }
                _ => {
                    n_out += 1;
                    if n_out > cap_out {
                        return false;
                    }
                }
            }
        }
        // |Q'| = |N| - 4 = cap_in + cap_out, so neither bound was slack.
        debug_assert!(n_in == cap_in && n_out == cap_out);
        true
    }

    /// Quads living on `side` (at least three labels inside), compacted to
    /// `0..|side|` with the outside label, if any, replaced by the star
    /// `|side|`.
    fn restrict(&self, side: u64) -> Vec<CQuad> {
        let rank = rank_table(side);
        let star = side.count_ones() as u8;
        self.rest
            .iter()
            .zip(&self.masks)
            .filter(|&(_, &qm)| (qm & side).count_ones() >= 3)
            .map(|(q, _)| q.map(|x| if side >> x & 1 == 1 { rank[x as usize] } else { star }))
            .collect()
    }
}

/// All subsets of `set`, starting with the empty set.
pub(crate) fn subsets(set: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        let succ = cur.wrapping_sub(set) & set;
        next = if succ == 0 { None } else { Some(succ) };
        Some(cur)
    })
}

/// Degree of the class of `p` with default options.
pub fn count_realizations(p: &CountProblem) -> Result<BigUint, CountError> {
    Counter::default().count(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::problem::{to_count_problem, Quad};
    use crate::graph::Graph;

    fn q(a: u32, b: u32, c: u32, d: u32) -> Quad {
        Quad::new(a, b, c, d).unwrap()
    }

    #[test]
    fn subsets_enumerates_all() {
        let v: Vec<u64> = subsets(0b1010).collect();
        assert_eq!(v, vec![0, 0b10, 0b1000, 0b1010]);
        assert_eq!(subsets(0).count(), 1);
    }

    #[test]
    fn base_cases() {
        let three = CountProblem::new([1, 2, 3], vec![]).unwrap();
        assert_eq!(count_realizations(&three).unwrap(), BigUint::one());
        let four = CountProblem::new(1..=4, vec![q(1, 2, 3, 4)]).unwrap();
        assert_eq!(count_realizations(&four).unwrap(), BigUint::one());
    }

    #[test]
    fn ill_posed_rejected() {
        let p = CountProblem::new(1..=5, vec![q(1, 2, 3, 4)]).unwrap();
        assert_eq!(count_realizations(&p), Err(CountError::IllPosed { quads: 1, expected: 2 }));
    }

    #[test]
    fn pivot_side_does_not_matter() {
        let g = Graph::new(5, [14, 15, 23, 25, 34, 35, 45].map(|e| (e / 10, e % 10))).unwrap();
        let p = to_count_problem(&g).unwrap();
        let a = Counter::new(CountOptions::sequential().without_memo()).count(&p).unwrap();
        let b = Counter::new(CountOptions { pivot_side: PivotSide::Second, ..CountOptions::sequential() })
            .count(&p)
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a, BigUint::from(8u32));
    }

    #[test]
    fn memo_records_stats() {
        let g = Graph::new(6, [14, 15, 16, 23, 25, 26, 34, 36, 45].map(|e| (e / 10, e % 10))).unwrap();
        let c = Counter::new(CountOptions { memo_min_labels: 5, ..CountOptions::sequential() });
        assert_eq!(c.count(&to_count_problem(&g).unwrap()).unwrap(), BigUint::from(32u32));
        let s = c.stats();
        assert!(s.misses > 0);
        assert_eq!(s.peak_entries as u64, s.misses);
    }
}
