//! Labels compacted to `0..m` so that label sets fit in a `u64`.

use super::problem::{CountProblem, Quad};
use crate::error::CountError;

pub(crate) const MAX_LABELS: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct CQuad {
    /// `[a, b, c, d]` with `a < b`, `c < d`, `a < c`.
    pub l: [u8; 4],
}

impl CQuad {
    #[inline]
    pub fn new(a: u8, b: u8, c: u8, d: u8) -> Self {
        let p = [a.min(b), a.max(b)];
        let q = [c.min(d), c.max(d)];
        let l = if p[0] < q[0] { [p[0], p[1], q[0], q[1]] } else { [q[0], q[1], p[0], p[1]] };
        Self { l }
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.l.iter().fold(0u64, |m, &x| m | 1 << x)
    }

    #[inline]
    pub fn pair_masks(&self) -> (u64, u64) {
        ((1 << self.l[0]) | (1 << self.l[1]), (1 << self.l[2]) | (1 << self.l[3]))
    }

    #[inline]
    pub fn map(&self, f: impl Fn(u8) -> u8) -> Self {
        Self::new(f(self.l[0]), f(self.l[1]), f(self.l[2]), f(self.l[3]))
    }
}

/// Problem in compact form: labels are `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Compact {
    pub m: u8,
    pub quads: Vec<CQuad>,
}

pub(crate) fn compact(p: &CountProblem) -> Result<Compact, CountError> {
    let labels: Vec<u32> = p.labels().iter().copied().collect();
    if labels.len() > MAX_LABELS {
        return Err(CountError::TooManyLabels(labels.len()));
    }
    let idx = |x: u32| labels.binary_search(&x).expect("labels validated at construction") as u8;
    let quads = p.quads().iter().map(|q| {
        let [a, b, c, d] = q.labels();
        CQuad::new(idx(a), idx(b), idx(c), idx(d))
    });
    Ok(Compact { m: labels.len() as u8, quads: quads.collect() })
}

/// Inverse of [`compact`] up to renaming labels to `0..m`.
#[allow(dead_code)]
pub(crate) fn expand(c: &Compact) -> CountProblem {
    let quads =
        c.quads.iter().map(|q| Quad::normalized(q.l[0] as u32, q.l[1] as u32, q.l[2] as u32, q.l[3] as u32)).collect();
    CountProblem::new(0..c.m as u32, quads).expect("compact labels are in range")
}

/// Dense ranks of the set bits of `set`: `table[x]` is the position of `x`
/// among the members of `set`.
#[inline]
pub(crate) fn rank_table(set: u64) -> [u8; MAX_LABELS] {
    let mut table = [u8::MAX; MAX_LABELS];
    let mut s = set;
    let mut r = 0u8;
    while s != 0 {
        let x = s.trailing_zeros() as usize;
        table[x] = r;
        r += 1;
        s &= s - 1;
    }
    table
}
