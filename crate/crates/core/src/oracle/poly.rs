//! Dense univariate polynomials over `Q`, and bivariate ones as polynomials
//! in `y` with coefficients in `Q[x]`. Just enough for Sylvester resultants
//! and gcd-based root bookkeeping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients in ascending degree; never has a zero leading coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - c`
    pub fn linear_root(c: Rational) -> Self {
        Self::new(vec![-c, Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    /// `f(k x)`
    pub fn dilate(&self, k: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            out.push(c * &pow);
            pow *= k;
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        Self::new(self.0.iter().map(|c| c / &lc).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.0.len() - 1;
        let lc = d.leading();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*x")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `x` and `y`, stored as coefficients of `y^j` in `Q[x]`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly(Vec<UniPoly>);

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    /// From `(i, j, c)` terms meaning `c * x^i * y^j`.
    pub fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let dy = terms.iter().map(|t| t.1).max().map_or(0, |d| d + 1);
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); dy];
        for (i, j, c) in terms {
            let row = &mut rows[*j];
            if row.len() <= *i {
                row.resize(i + 1, Rational::zero());
            }
            row[*i] += c;
        }
        Self::new(rows.into_iter().map(UniPoly::new).collect())
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.0.iter().filter_map(UniPoly::degree).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.0.iter().enumerate().filter_map(|(j, c)| c.degree().map(|i| i + j)).max()
    }

    pub fn coeff_y(&self, j: usize) -> UniPoly {
        self.0.get(j).cloned().unwrap_or_default()
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        let mut terms = Vec::new();
        for (j, c) in self.0.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    terms.push((j, i, a.clone()));
                }
            }
        }
        Self::from_terms(&terms)
    }

    /// Coefficients of the top-degree homogeneous part, indexed by the power
    /// of `y`.
    pub fn top_form(&self) -> Vec<Rational> {
        let Some(d) = self.total_degree() else { return Vec::new() };
        (0..=d).map(|j| if d >= j { self.coeff_y(j).coeff(d - j) } else { Rational::zero() }).collect()
    }
}

/// `Res_y(f, g)` as a polynomial in `x`, via the Sylvester matrix.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> UniPoly {
    let (Some(m), Some(n)) = (f.degree_y(), g.degree_y()) else { return UniPoly::zero() };
    if m == 0 && n == 0 {
        return UniPoly::constant(Rational::one());
    }
    let size = m + n;
    let mut mat = vec![vec![UniPoly::zero(); size]; size];
    for r in 0..n {
        for j in 0..=m {
            mat[r][r + j] = f.coeff_y(m - j);
        }
    }
    for r in 0..m {
        for j in 0..=n {
            mat[n + r][r + j] = g.coeff_y(n - j);
        }
    }
    determinant(mat)
}

/// Fraction-free (Bareiss) determinant over `Q[x]`.
pub fn determinant(mut mat: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = mat.len();
    if n == 0 {
        return UniPoly::constant(Rational::one());
    }
    let mut sign = false;
    let mut prev = UniPoly::constant(Rational::one());
    for k in 0..n.saturating_sub(1) {
        if mat[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !mat[r][k].is_zero()) else { return UniPoly::zero() };
            mat.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.div_exact(&prev);
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// True if the binary forms with the given coefficient vectors (indexed by
/// the power of `y`) share a projective zero.
pub fn forms_share_zero(a: &[Rational], b: &[Rational]) -> bool {
    let at = |v: &[Rational], j: usize| v.get(j).cloned().unwrap_or_else(Rational::zero);
    // Zero at (x:y) = (1:0).
    if at(a, 0).is_zero() && at(b, 0).is_zero() {
        return true;
    }
    // Zeros with y = 1: the form is sum a_j x^(d-j).
    let dehomogenize = |v: &[Rational]| {
        let d = v.len().saturating_sub(1);
        UniPoly::new((0..=d).map(|i| at(v, d - i)).collect())
    };
    let (pa, pb) = (dehomogenize(a), dehomogenize(b));
    if pa.is_zero() || pb.is_zero() {
        return true;
    }
    pa.gcd(&pb).degree().unwrap_or(0) > 0
}
