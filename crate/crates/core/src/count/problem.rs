use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CountError, GraphError};
use crate::graph::Graph;

pub type Label = u32;

/// A cross-ratio constraint `{{a,b},{c,d}}`.
///
/// Only the split of the four labels into two pairs is meaningful, so the
/// stored form is normalized: each pair ascending, pairs ordered by their
/// smaller element.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quad {
    pairs: [[Label; 2]; 2],
}

impl Quad {
    pub fn new(a: Label, b: Label, c: Label, d: Label) -> Result<Self, CountError> {
        let all = [a, b, c, d];
        for i in 0..4 {
            for j in i + 1..4 {
                if all[i] == all[j] {
                    return Err(CountError::RepeatedLabel(a, b, c, d));
                }
            }
        }
        Ok(Self::normalized(a, b, c, d))
    }

    pub(crate) fn normalized(a: Label, b: Label, c: Label, d: Label) -> Self {
        let p = [a.min(b), a.max(b)];
        let q = [c.min(d), c.max(d)];
        Self { pairs: if p[0] < q[0] { [p, q] } else { [q, p] } }
    }

    pub fn pair1(&self) -> [Label; 2] {
        self.pairs[0]
    }

    pub fn pair2(&self) -> [Label; 2] {
        self.pairs[1]
    }

    pub fn labels(&self) -> [Label; 4] {
        let [[a, b], [c, d]] = self.pairs;
        [a, b, c, d]
    }

    pub fn contains(&self, x: Label) -> bool {
        self.labels().contains(&x)
    }

    /// Same quad with its two pairs exchanged. Normalization makes this the
    /// identity on the stored value; it exists for symmetry checks.
    pub fn swapped(&self) -> Self {
        let [[a, b], [c, d]] = self.pairs;
        Self::normalized(c, d, a, b)
    }

    pub fn map(&self, f: impl Fn(Label) -> Label) -> Self {
        let [a, b, c, d] = self.labels();
        Self::normalized(f(a), f(b), f(c), f(d))
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.pairs;
        write!(f, "{{{{{a},{b}}},{{{c},{d}}}}}")
    }
}

/// A label set `N` and a list of quads `Q` over it; the degree of the
/// associated class is what [`count_realizations`](super::count_realizations)
/// computes.
#[derive(Clone, PartialEq, Eq)]
pub struct CountProblem {
    labels: BTreeSet<Label>,
    quads: Vec<Quad>,
}

impl CountProblem {
    pub fn new(labels: impl IntoIterator<Item = Label>, quads: Vec<Quad>) -> Result<Self, CountError> {
        let labels: BTreeSet<Label> = labels.into_iter().collect();
        for q in &quads {
            if let Some(x) = q.labels().into_iter().find(|x| !labels.contains(x)) {
                return Err(CountError::UnknownLabel(x));
            }
        }
        Ok(Self { labels, quads })
    }

    pub fn labels(&self) -> &BTreeSet<Label> {
        &self.labels
    }

    pub fn quads(&self) -> &[Quad] {
        &self.quads
    }

    /// `|Q| = |N| - 3`, the dimension of the ambient moduli space.
    pub fn is_well_posed(&self) -> bool {
        self.quads.len() as isize == self.labels.len() as isize - 3
    }

    /// Image under a label map, which must be injective on `N`.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Self {
        let labels: BTreeSet<Label> = self.labels.iter().map(|&x| f(x)).collect();
        assert_eq!(labels.len(), self.labels.len(), "relabeling must be injective");
        Self { labels, quads: self.quads.iter().map(|q| q.map(&f)).collect() }
    }
}

impl fmt::Debug for CountProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CountProblem").field("labels", &self.labels).field("quads", &self.quads).finish()
    }
}

/// Translates a graph into its counting problem: labels `1..=2n`, one quad
/// `{{a,b},{a+n,b+n}}` per edge. Labels `v` and `v+n` stand for the two
/// lifts of vertex `v`.
pub fn to_count_problem(g: &Graph) -> Result<CountProblem, GraphError> {
    let n = g.n();
    if n < 3 {
        return Err(GraphError::TooFewVertices { n });
    }
    let quads = g.edges().iter().map(|&(a, b)| Quad::normalized(a, b, a + n, b + n)).collect();
    Ok(CountProblem { labels: (1..=2 * n).collect(), quads })
}
