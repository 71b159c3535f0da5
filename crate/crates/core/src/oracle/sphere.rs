//! Points on the complex sphere `x² + y² + z² = 1`, their lifts to the
//! absolute conic, and cross-ratios on the projective line.
//!
//! The conic `X² + Y² + Z² = 0` (in the plane at infinity) is identified with
//! `P¹` by projecting from `(i : 0 : 1)` onto the line `Z = 0`; the image of
//! a conic point `(X : Y : Z)` is `(X − iZ : Y)`. In that chart the left and
//! right lifts of `(x, y, z)` are `(i(y+1) : z − ix)` and `(i(y−1) : z − ix)`.

use num_complex::Complex64;
use rand::Rng;

use super::OracleError;

pub type C64 = Complex64;

const I: C64 = C64::new(0.0, 1.0);

/// Tolerance for quadric membership, relative to the point's squared norm.
pub const QUADRIC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint {
    pub x: C64,
    pub y: C64,
    pub z: C64,
}

impl SpherePoint {
    pub fn new(x: C64, y: C64, z: C64) -> Result<Self, OracleError> {
        let p = Self { x, y, z };
        let scale = 1.0 + x.norm_sqr() + y.norm_sqr() + z.norm_sqr();
        if (p.dot(&p) - 1.0).norm() > QUADRIC_TOL * scale {
            return Err(OracleError::NotOnQuadric);
        }
        Ok(p)
    }

    pub fn real(x: f64, y: f64, z: f64) -> Result<Self, OracleError> {
        Self::new(x.into(), y.into(), z.into())
    }

    /// Completes `(x, y)` with the principal square root for `z`.
    pub fn from_xy(x: C64, y: C64) -> Self {
        let z = (C64::new(1.0, 0.0) - x * x - y * y).sqrt();
        Self { x, y, z }
    }

    /// Random point with `x`, `y` having real and imaginary parts in `[-2, 2]`.
    pub fn random(rng: &mut impl Rng) -> Self {
        let mut c = || C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        Self::from_xy(c(), c())
    }

    /// Complex bilinear (not Hermitian) product.
    pub fn dot(&self, other: &Self) -> C64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn antipode(&self) -> Self {
        Self { x: -self.x, y: -self.y, z: -self.z }
    }
}

/// A point `(s : t)` of the projective line.
#[derive(Clone, Copy, Debug)]
pub struct ProjPoint {
    pub s: C64,
    pub t: C64,
}

impl ProjPoint {
    pub fn new(s: C64, t: C64) -> Result<Self, OracleError> {
        if s == C64::new(0.0, 0.0) && t == C64::new(0.0, 0.0) {
            return Err(OracleError::ZeroProjectivePoint);
        }
        Ok(Self { s, t })
    }

    pub fn real(s: f64, t: f64) -> Result<Self, OracleError> {
        Self::new(s.into(), t.into())
    }

    /// Representative with `t = 1`, or `(1 : 0)`.
    pub fn normalized(&self) -> Self {
        if self.t.norm() <= 1e-300 * self.s.norm().max(1.0) {
            Self { s: C64::new(1.0, 0.0), t: C64::new(0.0, 0.0) }
        } else {
            Self { s: self.s / self.t, t: C64::new(1.0, 0.0) }
        }
    }

    /// `s t' − t s'`; zero iff the points coincide.
    pub fn bracket(&self, other: &Self) -> C64 {
        self.s * other.t - self.t * other.s
    }

    /// Projective equality up to a relative tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = (self.s.norm() + self.t.norm()) * (other.s.norm() + other.t.norm());
        self.bracket(other).norm() <= tol * scale
    }

    /// Image under the Möbius map `[[a, b], [c, d]]`.
    pub fn mobius(&self, [a, b, c, d]: [C64; 4]) -> Self {
        Self { s: a * self.s + b * self.t, t: c * self.s + d * self.t }
    }
}

/// `(1 − ⟨P,Q⟩) / 2`
pub fn spherical_distance(p: &SpherePoint, q: &SpherePoint) -> C64 {
    (1.0 - p.dot(q)) / 2.0
}

/// Whether the lifts of `p` and `q` collide: `⟨p,q⟩ = 1`.
pub fn degenerate_pair(p: &SpherePoint, q: &SpherePoint) -> bool {
    (p.dot(q) - 1.0).norm() <= 1e-9 * (1.0 + p.dot(q).norm())
}

fn nonzero(p: (C64, C64)) -> bool {
    p.0.norm() + p.1.norm() > 1e-12
}

/// Left and right lifts of `p`, as points of `P¹` in the fixed chart of the
/// absolute conic.
pub fn lifts(p: &SpherePoint) -> Result<(ProjPoint, ProjPoint), OracleError> {
    let SpherePoint { x, y, z } = *p;
    // Two representatives each; on the quadric at most one of them vanishes.
    let left = [(I * (y + 1.0), z - I * x), (I * (z + I * x), 1.0 - y)];
    let right = [(I * (y - 1.0), z - I * x), (-I * (z + I * x), 1.0 + y)];
    let pick = |reps: [(C64, C64); 2]| {
        let best =
            if reps[0].0.norm() + reps[0].1.norm() >= reps[1].0.norm() + reps[1].1.norm() { reps[0] } else { reps[1] };
        if nonzero(best) {
            ProjPoint::new(best.0, best.1)
        } else {
            Err(OracleError::DegenerateLift)
        }
    };
    Ok((pick(left)?, pick(right)?))
}

/// The point of the absolute conic with chart coordinate `u`.
pub fn conic_point(u: &ProjPoint) -> [C64; 3] {
    let (a, b) = (u.s, u.t);
    [I * (b * b - a * a), -2.0 * I * a * b, a * a + b * b]
}

/// Left and right lifts as points `(X : Y : Z : 0)` of the absolute conic.
pub fn conic_lifts(p: &SpherePoint) -> Result<([C64; 3], [C64; 3]), OracleError> {
    let (l, r) = lifts(p)?;
    Ok((conic_point(&l), conic_point(&r)))
}

/// The `λ` for which `(p1, p2, p3, p4)` is projectively equivalent to
/// `((1:0), (0:1), (1:1), (1:λ))`.
pub fn cross_ratio(p1: &ProjPoint, p2: &ProjPoint, p3: &ProjPoint, p4: &ProjPoint) -> Result<C64, OracleError> {
    let pts = [p1, p2, p3, p4];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i].approx_eq(pts[j], 1e-12) {
                return Err(OracleError::CoincidentPoints);
            }
        }
    }
    Ok(p4.bracket(p1) * p3.bracket(p2) / (p4.bracket(p2) * p3.bracket(p1)))
}

/// Both forms of the distance/cross-ratio identity for `p`, `q`:
/// `(cr(Pˡ,Pʳ,Qʳ,Qˡ) / (cr − 1), cr(Pˡ,Qʳ,Pʳ,Qˡ))`, each equal to the
/// spherical distance.
pub fn distance_via_lifts(p: &SpherePoint, q: &SpherePoint) -> Result<(C64, C64), OracleError> {
    let (pl, pr) = lifts(p)?;
    let (ql, qr) = lifts(q)?;
    let cr = cross_ratio(&pl, &pr, &qr, &ql)?;
    Ok((cr / (cr - 1.0), cross_ratio(&pl, &qr, &pr, &ql)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn close(a: C64, b: C64) -> bool {
        (a - b).norm() <= 1e-9 * (1.0 + b.norm())
    }

    fn proj_eq3(a: [C64; 3], b: [C64; 3]) -> bool {
        // Rank-1 test on the 2x3 matrix.
        let m = |i: usize, j: usize| a[i] * b[j] - a[j] * b[i];
        m(0, 1).norm() + m(0, 2).norm() + m(1, 2).norm() < 1e-12
    }

    #[test]
    fn distances() {
        let p = SpherePoint::real(1.0, 0.0, 0.0).unwrap();
        let q = SpherePoint::real(0.0, 1.0, 0.0).unwrap();
        assert_eq!(spherical_distance(&p, &p), c(0.0, 0.0));
        assert_eq!(spherical_distance(&p, &p.antipode()), c(1.0, 0.0));
        assert_eq!(spherical_distance(&p, &q), c(0.5, 0.0));
    }

    #[test]
    fn off_quadric_rejected() {
        assert_eq!(SpherePoint::real(1.0, 1.0, 0.0), Err(OracleError::NotOnQuadric));
    }

    #[test]
    fn lifts_of_reference_points() {
        let p = SpherePoint::real(1.0, 0.0, 0.0).unwrap();
        let (l, r) = conic_lifts(&p).unwrap();
        assert!(proj_eq3(l, [c(0.0, 0.0), I, c(1.0, 0.0)]));
        assert!(proj_eq3(r, [c(0.0, 0.0), -I, c(1.0, 0.0)]));
        let (pl, pr) = lifts(&p).unwrap();
        assert!(pl.approx_eq(&ProjPoint::real(-1.0, 1.0).unwrap(), 1e-12));
        assert!(pr.approx_eq(&ProjPoint::real(1.0, 1.0).unwrap(), 1e-12));

        let (co, si) = (0.6, 0.8);
        let q = SpherePoint::real(co, si, 0.0).unwrap();
        let (l, r) = conic_lifts(&q).unwrap();
        assert!(proj_eq3(l, [-I * si, I * co, c(1.0, 0.0)]));
        assert!(proj_eq3(r, [I * si, -I * co, c(1.0, 0.0)]));
        let (ql, qr) = lifts(&q).unwrap();
        assert!(ql.approx_eq(&ProjPoint::real(-1.0 - si, co).unwrap(), 1e-12));
        assert!(qr.approx_eq(&ProjPoint::real(1.0 - si, co).unwrap(), 1e-12));
    }

    #[test]
    fn lifts_where_first_chart_vanishes() {
        // y = -1, z = ix: the first left representative is (0 : 0).
        let t = c(0.3, -0.7);
        let p = SpherePoint::new(t, c(-1.0, 0.0), I * t).unwrap();
        let (l, r) = lifts(&p).unwrap();
        assert!(!l.approx_eq(&r, 1e-9));
        // Lifts lie on the tangent plane at infinity: xX + yY + zZ = 0.
        for u in [l, r] {
            let [xx, yy, zz] = conic_point(&u);
            assert!((p.x * xx + p.y * yy + p.z * zz).norm() < 1e-12);
        }
    }

    #[test]
    fn cross_ratio_definition() {
        let lam = c(0.3, 2.0);
        let v = cross_ratio(
            &ProjPoint::real(1.0, 0.0).unwrap(),
            &ProjPoint::real(0.0, 1.0).unwrap(),
            &ProjPoint::real(1.0, 1.0).unwrap(),
            &ProjPoint::new(c(1.0, 0.0), lam).unwrap(),
        )
        .unwrap();
        assert!(close(v, lam));
    }

    #[test]
    fn cross_ratio_rejects_coincident() {
        let a = ProjPoint::real(1.0, 2.0).unwrap();
        let b = ProjPoint::real(2.0, 4.0).unwrap();
        let o = ProjPoint::real(0.0, 1.0).unwrap();
        let e = ProjPoint::real(1.0, 1.0).unwrap();
        assert_eq!(cross_ratio(&a, &b, &o, &e), Err(OracleError::CoincidentPoints));
    }

    #[test]
    fn degenerate_pairs() {
        let p = SpherePoint::real(1.0, 0.0, 0.0).unwrap();
        assert!(degenerate_pair(&p, &p));
        assert!(!degenerate_pair(&p, &p.antipode()));
        let t = c(0.4, 1.3);
        let q = SpherePoint::new(c(1.0, 0.0), t, I * t).unwrap();
        assert!(degenerate_pair(&p, &q));
    }

    #[test]
    fn identity_on_reference_pair() {
        let p = SpherePoint::real(1.0, 0.0, 0.0).unwrap();
        let q = SpherePoint::real(0.6, 0.8, 0.0).unwrap();
        let (a, b) = distance_via_lifts(&p, &q).unwrap();
        assert!(close(a, c(0.2, 0.0)));
        assert!(close(b, c(0.2, 0.0)));
    }
}
