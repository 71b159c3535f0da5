//! Exact solution count of the cross-ratio system of a tiny Laman graph.
//!
//! Unknowns are the chart coordinates `l_v`, `r_v` of the left and right
//! lifts of each vertex. The `PGL₂` gauge is fixed by `l₁ = 0`, `r₁ = ∞`,
//! `l₂ = 1` for an edge `{1,2}`. Every edge `{a,b}` imposes
//!
//! ```text
//! d(a,b) = (l_b − l_a)(r_a − r_b) / ((l_b − r_b)(r_a − l_a))
//! ```
//!
//! For the graphs handled here (every other vertex adjacent to exactly the
//! two gauge vertices) the system splits into one bivariate pair per vertex,
//! which is eliminated by a Sylvester resultant. Solutions are counted as
//! the degree of the squarefree eliminant after certifying that no solution
//! escapes to infinity and no root makes two marked points coincide.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{forms_share_zero, resultant_y, BiPoly, Rational, UniPoly};
use super::OracleError;
use crate::graph::{Edge, Graph};

/// Largest vertex count the oracle accepts.
pub const MAX_ORACLE_N: u32 = 4;

/// Spherical distances on the edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceAssignment {
    values: BTreeMap<Edge, Rational>,
}

impl DistanceAssignment {
    pub fn new(g: &Graph, values: impl IntoIterator<Item = (Edge, Rational)>) -> Result<Self, OracleError> {
        let values: BTreeMap<Edge, Rational> =
            values.into_iter().map(|((a, b), v)| ((a.min(b), a.max(b)), v)).collect();
        if values.len() != g.m() || g.edges().iter().any(|e| !values.contains_key(e)) {
            return Err(OracleError::DistanceDomain);
        }
        Ok(Self { values })
    }

    pub fn constant(g: &Graph, value: Rational) -> Self {
        Self { values: g.edges().iter().map(|&e| (e, value.clone())).collect() }
    }

    /// Random nonzero rationals `p/q` with `|p|, q <= 999`.
    pub fn random(g: &Graph, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = g
            .edges()
            .iter()
            .map(|&e| {
                let mut p: i64 = 0;
                while p == 0 {
                    p = rng.gen_range(-999..=999);
                }
                let q: i64 = rng.gen_range(1..=999);
                (e, Rational::new(BigInt::from(p), BigInt::from(q)))
            })
            .collect();
        Self { values }
    }

    pub fn get(&self, a: u32, b: u32) -> &Rational {
        &self.values[&(a.min(b), a.max(b))]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Edge, &Rational)> {
        self.values.iter()
    }
}

/// Finds `(g1, g2)` adjacent such that every other vertex is adjacent to
/// exactly `g1` and `g2`.
fn gauge_pair(g: &Graph) -> Option<(u32, u32)> {
    let n = g.n();
    g.edges().iter().copied().find(|&(u, v)| {
        (1..=n).filter(|&w| w != u && w != v).all(|w| g.has_edge(w, u) && g.has_edge(w, v) && g.degree(w) == 2)
    })
}

struct VertexSystem {
    /// Eliminant in `l_b`.
    eliminant: UniPoly,
    /// `r_b = kappa * l_b` on solutions.
    kappa: Rational,
}

/// Number of lift configurations compatible with `distances`, modulo `PGL₂`.
pub fn oracle_count(g: &Graph, distances: &DistanceAssignment) -> Result<BigUint, OracleError> {
    if g.n() > MAX_ORACLE_N || g.n() < 3 {
        return Err(OracleError::Unsupported(format!("oracle handles 3..={MAX_ORACLE_N} vertices, got {}", g.n())));
    }
    if !g.is_laman() {
        return Err(OracleError::Unsupported("graph is not Laman".into()));
    }
    let (g1, g2) = gauge_pair(g).ok_or_else(|| OracleError::Unsupported("no gauge edge".into()))?;
    if distances.iter().any(|(_, d)| d.is_zero()) {
        // Distance 0 forces two lifts to coincide.
        return Err(OracleError::Degenerate);
    }

    // Edge {g1, g2}: l2 = d (l2 - r2) with l2 = 1.
    let d12 = distances.get(g1, g2);
    let r2 = Rational::one() - d12.recip();
    if r2.is_zero() {
        return Err(OracleError::NonGeneric("r2 collides with l1"));
    }
    let fixed = [Rational::zero(), Rational::one(), r2.clone()];

    let others: Vec<u32> = (1..=g.n()).filter(|&w| w != g1 && w != g2).collect();
    let mut systems = Vec::new();
    for &b in &others {
        systems.push(vertex_system(distances.get(g1, b), distances.get(g2, b), &r2)?);
    }

    let mut total = BigUint::one();
    for sys in &systems {
        let f = &sys.eliminant;
        if !f.is_squarefree() {
            return Err(OracleError::NonGeneric("repeated root in eliminant"));
        }
        for c in &fixed {
            // l_b or r_b landing on a gauge-fixed point.
            if f.eval(c).is_zero() || f.eval(&(c / &sys.kappa)).is_zero() {
                return Err(OracleError::NonGeneric("lift coincides with a fixed point"));
            }
        }
        total *= BigUint::from(f.degree().unwrap_or(0));
    }
    for i in 0..systems.len() {
        for j in i + 1..systems.len() {
            let (a, b) = (&systems[i], &systems[j]);
            // l_j = k l_i for l_i = l_j, r_i = r_j, l_i = r_j, r_i = l_j.
            for k in [Rational::one(), &a.kappa / &b.kappa, b.kappa.recip(), a.kappa.clone()] {
                if a.eliminant.gcd(&b.eliminant.dilate(&k)).degree().unwrap_or(0) > 0 {
                    return Err(OracleError::NonGeneric("lifts of two vertices coincide"));
                }
            }
        }
    }
    Ok(total)
}

/// Equations of vertex `b` adjacent to the gauge vertices, in `x = l_b`,
/// `y = r_b`:
///
/// - `{1,b}`: `x − d₁(x − y) = 0`
/// - `{2,b}`: `(x − 1)(r₂ − y) − d₂(x − y)(r₂ − 1) = 0`
fn vertex_system(d1: &Rational, d2: &Rational, r2: &Rational) -> Result<VertexSystem, OracleError> {
    let one = Rational::one();
    let f = BiPoly::from_terms(&[(1, 0, &one - d1), (0, 1, d1.clone())]);
    let s = r2 - &one;
    let g =
        BiPoly::from_terms(&[(1, 0, r2 - d2 * &s), (0, 1, &one + d2 * &s), (1, 1, -one.clone()), (0, 0, -r2.clone())]);
    if forms_share_zero(&f.top_form(), &g.top_form()) {
        return Err(OracleError::NonGeneric("solution at infinity"));
    }
    let lc = f.coeff_y(1);
    if lc.degree() != Some(0) {
        return Err(OracleError::NonGeneric("vanishing leading coefficient"));
    }
    let eliminant = resultant_y(&f, &g);
    if eliminant.is_zero() {
        return Err(OracleError::NonGeneric("equations share a component"));
    }
    // Cross-check: eliminating x instead must see the same number of points,
    // since y = kappa x is a bijection when kappa != 0.
    let kappa = (d1 - &one) / d1;
    if kappa.is_zero() {
        return Err(OracleError::NonGeneric("r_b collides with l1"));
    }
    let other = resultant_y(&f.transpose(), &g.transpose());
    if other.degree() != eliminant.degree() {
        return Err(OracleError::NonGeneric("projections disagree"));
    }
    Ok(VertexSystem { eliminant, kappa })
}

/// Retries [`oracle_count`] on fresh random distances until a generic draw
/// is found. Returns the count and the seed that produced it.
pub fn oracle_count_random(g: &Graph, seed: u64, max_draws: u32) -> Result<(BigUint, u64), OracleError> {
    let mut last = OracleError::Degenerate;
    for k in 0..max_draws as u64 {
        let s = seed.wrapping_add(k.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        match oracle_count(g, &DistanceAssignment::random(g, s)) {
            Ok(c) => return Ok((c, s)),
            Err(e @ (OracleError::NonGeneric(_) | OracleError::Degenerate)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::poly::rat;

    fn k4_minus_edge() -> Graph {
        Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn triangle_count() {
        let g = Graph::triangle();
        let d = DistanceAssignment::new(&g, [((1, 2), rat(1, 3)), ((1, 3), rat(2, 7)), ((2, 3), rat(-5, 11))]).unwrap();
        assert_eq!(oracle_count(&g, &d).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn stable_across_draws() {
        for g in [Graph::triangle(), k4_minus_edge()] {
            let counts: Vec<BigUint> = (0..5).map(|s| oracle_count_random(&g, s, 10).unwrap().0).collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "{counts:?}");
        }
    }

    #[test]
    fn degenerate_distances_ask_for_redraw() {
        let g = Graph::triangle();
        assert_eq!(oracle_count(&g, &DistanceAssignment::constant(&g, rat(0, 1))), Err(OracleError::Degenerate));
        // d = 1 on every edge puts r_b onto l_1.
        assert!(matches!(
            oracle_count(&g, &DistanceAssignment::constant(&g, rat(1, 1))),
            Err(OracleError::NonGeneric(_))
        ));
    }

    #[test]
    fn relabeled_gauge() {
        // K4 minus {1,2}: the degree-3 vertices are 3 and 4.
        let g = Graph::new(4, [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(oracle_count_random(&g, 7, 10).unwrap().0, BigUint::from(4u32));
    }

    #[test]
    fn rejects_out_of_scope_graphs() {
        let g5 = Graph::new(5, [14, 15, 24, 25, 34, 35, 45].map(|e| (e / 10, e % 10))).unwrap();
        assert!(matches!(oracle_count_random(&g5, 0, 1), Err(OracleError::Unsupported(_))));
        let path = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert!(matches!(oracle_count_random(&path, 0, 1), Err(OracleError::Unsupported(_))));
        assert_eq!(DistanceAssignment::new(&path, [((1, 2), rat(1, 2))]), Err(OracleError::DistanceDomain));
    }
}
