use std::collections::BTreeSet;

use super::problem::{Label, Quad};

/// Quads of `Q'` bucketed by how many of their labels fall inside `Ī`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitClasses {
    pub q40: Vec<Quad>,
    pub q31: Vec<Quad>,
    pub q22: Vec<Quad>,
    pub q13: Vec<Quad>,
    pub q04: Vec<Quad>,
}

impl SplitClasses {
    pub fn total(&self) -> usize {
        self.q40.len() + self.q31.len() + self.q22.len() + self.q13.len() + self.q04.len()
    }
}

pub fn split_classes(qs: &[Quad], inside: &BTreeSet<Label>) -> SplitClasses {
    let mut out = SplitClasses::default();
    for q in qs {
        let k = q.labels().iter().filter(|x| inside.contains(x)).count();
        match k {
            4 => out.q40.push(*q),
            3 => out.q31.push(*q),
            2 => out.q22.push(*q),
            1 => out.q13.push(*q),
            _ => out.q04.push(*q),
        }
    }
    out
}

/// Replaces the single label of each quad lying outside `inside` by `star`.
///
/// # Panics
///
/// If some quad does not have exactly one label outside `inside`.
pub fn star_substitute(qs: &[Quad], inside: &BTreeSet<Label>, star: Label) -> Vec<Quad> {
    qs.iter()
        .map(|q| {
            let outside = q.labels().iter().filter(|x| !inside.contains(x)).count();
            assert_eq!(outside, 1, "{q:?} must have exactly one label outside the block");
            q.map(|x| if inside.contains(&x) { x } else { star })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: Label, b: Label, c: Label, d: Label) -> Quad {
        Quad::new(a, b, c, d).unwrap()
    }

    fn set(xs: &[Label]) -> BTreeSet<Label> {
        xs.iter().copied().collect()
    }

    #[test]
    fn classes() {
        let qs = [q(1, 2, 3, 4)];
        assert_eq!(split_classes(&qs, &set(&[1, 2, 3, 4])).q40, qs);
        assert_eq!(split_classes(&qs, &set(&[1, 2, 3])).q31, qs);
        assert_eq!(split_classes(&qs, &set(&[1, 3])).q22, qs);
        assert_eq!(split_classes(&qs, &set(&[4])).q13, qs);
        assert_eq!(split_classes(&qs, &set(&[7])).q04, qs);
    }

    #[test]
    fn classes_partition_input() {
        let qs = [q(1, 2, 3, 4), q(1, 5, 2, 6), q(3, 5, 4, 6), q(5, 6, 7, 8)];
        let s = split_classes(&qs, &set(&[1, 2, 5]));
        assert_eq!(s.total(), qs.len());
        assert_eq!(s.q22, vec![q(1, 2, 3, 4)]);
        assert_eq!(s.q31, vec![q(1, 5, 2, 6)]);
        assert_eq!(s.q13, vec![q(3, 5, 4, 6), q(5, 6, 7, 8)]);
        assert!(s.q04.is_empty());
    }

    #[test]
    fn substitution() {
        const STAR: Label = 100;
        let inside = set(&[1, 2, 3]);
        assert_eq!(star_substitute(&[q(1, 2, 3, 9)], &inside, STAR), vec![q(1, 2, 3, STAR)]);
        assert_eq!(star_substitute(&[q(1, 9, 2, 3)], &inside, STAR), vec![q(1, STAR, 2, 3)]);
        assert!(star_substitute(&[], &inside, STAR).is_empty());
    }

    #[test]
    #[should_panic]
    fn substitution_precondition() {
        star_substitute(&[q(1, 2, 8, 9)], &set(&[1, 2, 3]), 100);
    }
}
