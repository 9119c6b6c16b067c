//! Plane sections of a general threefold of degree `m` in `P^4`.
//!
//! `Y` is the Grassmannian of 2-planes in `P^4` with tautological quotient
//! `Q` of rank 3, `q1 = c_1(Q)`, `q2 = c_2(Q)`, and `F = P(Q)` the total
//! space of planes. With `f` the pullback of the hyperplane class of `P^4`:
//!
//! * `v = m f`, `w1 = q1 - 3f`, `w2 = q2 - 2 f q1 + 3 f^2`;
//! * `f^j = 0` for `j > 4`;
//! * `pi_* f^j` is `0, 0, 1, q1, q1^2 - q2` for `j = 0..=4`;
//! * `int q1^6 = 5`, `int q1^4 q2 = 3`, `int q1^2 q2^2 = 2`, `int q2^3 = 1`.
//!
//! Classes on `Y` are kept as free polynomials in `q1, q2`: only degree-6
//! monomials are ever integrated, and all four of them have known values.

use num_bigint::BigInt;

use crate::bell::bell_eval;
use crate::error::{Error, Result};
use crate::exactpoly::{factorial, CommutativeRing, ExactRational, SparsePolynomial};
use crate::nodegen::node_polynomials;

/// Number of smooth conics on a general quintic threefold.
pub const CONICS_ON_QUINTIC: u64 = 609250;

/// Number of lines on a general quintic threefold.
pub const LINES_ON_QUINTIC: u64 = 2875;

/// Top-degree integrals `(i, j, int q1^i q2^j)`.
pub const TOP_INTEGRALS: [(u32, u32, i64); 4] = [(6, 0, 5), (4, 1, 3), (2, 2, 2), (0, 3, 1)];

/// Dimension of the Grassmannian of 2-planes in `P^4`.
pub const GRASS_DIM: u32 = 6;

/// Largest surviving power of `f`.
pub const MAX_F_POWER: u32 = 4;

/// A class on `Y`: a polynomial in `q1, q2`, possibly with `m` in the
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannClass(pub SparsePolynomial);

impl GrassmannClass {
    pub fn q1() -> Self {
        Self(SparsePolynomial::var("q1"))
    }

    pub fn q2() -> Self {
        Self(SparsePolynomial::var("q2"))
    }

    pub fn polynomial(&self) -> &SparsePolynomial {
        &self.0
    }

    /// Degree in `(q1, q2)` with `q2` of weight 2, when homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for (mono, _) in self.0.terms() {
            let d = self.q_degree(mono.exponents());
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    fn q_degree(&self, exps: &[u32]) -> u32 {
        let e = |name: &str| self.0.index_of(name).map(|i| exps[i]).unwrap_or(0);
        e("q1") + 2 * e("q2")
    }
}

impl CommutativeRing for GrassmannClass {
    fn zero() -> Self {
        Self(SparsePolynomial::zero())
    }
    fn one() -> Self {
        Self(SparsePolynomial::one())
    }
    fn add(&self, other: &Self) -> Self {
        Self(self.0.add_poly(&other.0))
    }
    fn mul(&self, other: &Self) -> Self {
        Self(self.0.mul_poly(&other.0))
    }
    fn scale(&self, c: &ExactRational) -> Self {
        Self(self.0.scale_by(c))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// A class on `F`: a polynomial in `f, q1, q2` (and `m`), truncated above
/// `f^4` on every product.
#[derive(Debug, Clone, PartialEq)]
pub struct BundleFiberClass(SparsePolynomial);

impl BundleFiberClass {
    pub fn new(p: SparsePolynomial) -> Self {
        Self(truncate_f(p))
    }

    pub fn f() -> Self {
        Self::new(SparsePolynomial::var("f"))
    }

    pub fn base(c: &GrassmannClass) -> Self {
        Self::new(c.0.clone())
    }

    pub fn polynomial(&self) -> &SparsePolynomial {
        &self.0
    }
}

fn truncate_f(p: SparsePolynomial) -> SparsePolynomial {
    let Some(i) = p.index_of("f") else {
        return p;
    };
    if p.degree_in("f") <= MAX_F_POWER {
        return p;
    }
    let kept: Vec<(Vec<u32>, ExactRational)> = p
        .terms()
        .filter(|(mono, _)| mono.exponents()[i] <= MAX_F_POWER)
        .map(|(mono, c)| (mono.exponents().to_vec(), c.clone()))
        .collect();
    SparsePolynomial::from_terms(p.variables(), kept).expect("same context")
}

impl CommutativeRing for BundleFiberClass {
    fn zero() -> Self {
        Self(SparsePolynomial::zero())
    }
    fn one() -> Self {
        Self(SparsePolynomial::one())
    }
    fn add(&self, other: &Self) -> Self {
        Self(self.0.add_poly(&other.0))
    }
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.0.mul_poly(&other.0))
    }
    fn scale(&self, c: &ExactRational) -> Self {
        Self(self.0.scale_by(c))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `pi_*` along the plane fibres.
pub fn fiber_pushforward(c: &BundleFiberClass) -> GrassmannClass {
    let images = [
        SparsePolynomial::zero(),
        SparsePolynomial::zero(),
        SparsePolynomial::one(),
        SparsePolynomial::var("q1"),
        "q1^2 - q2".parse().expect("literal"),
    ];
    let mut acc = SparsePolynomial::zero();
    for (j, image) in images.iter().enumerate() {
        if image.is_zero() {
            continue;
        }
        let part = c.0.coefficient_of("f", j as u32);
        acc = acc.add_poly(&part.mul_poly(image));
    }
    GrassmannClass(acc)
}

/// Integral of a degree-6 class over `Y`.
pub fn grass_integrate(c: &GrassmannClass) -> Result<SparsePolynomial> {
    let p = &c.0;
    let i1 = p.index_of("q1");
    let i2 = p.index_of("q2");
    let rest: Vec<String> = p
        .variables()
        .iter()
        .filter(|v| *v != "q1" && *v != "q2")
        .cloned()
        .collect();
    let mut acc = SparsePolynomial::zero_in(&rest);
    for (mono, coeff) in p.terms() {
        let e = mono.exponents();
        let e1 = i1.map(|i| e[i]).unwrap_or(0);
        let e2 = i2.map(|i| e[i]).unwrap_or(0);
        let value = TOP_INTEGRALS
            .iter()
            .find(|(a, b, _)| *a == e1 && *b == e2)
            .map(|(_, _, v)| *v)
            .ok_or(Error::NotTopDegree { q1: e1, q2: e2 })?;
        let exps: Vec<u32> = p
            .variables()
            .iter()
            .zip(e)
            .filter(|(v, _)| *v != "q1" && *v != "q2")
            .map(|(_, x)| *x)
            .collect();
        let term =
            SparsePolynomial::from_terms(&rest, [(exps, coeff * &ExactRational::from(value))])?;
        acc = acc.add_poly(&term);
    }
    Ok(acc)
}

/// Pushes `b_q(v, w1, w2)` down to `Y` for a given image of `v`.
fn pushed_bq(q: usize, v: &BundleFiberClass) -> Result<GrassmannClass> {
    let f = BundleFiberClass::f();
    let q1 = BundleFiberClass::base(&GrassmannClass::q1());
    let q2 = BundleFiberClass::base(&GrassmannClass::q2());
    let w1 = q1.sub(&f.scale(&ExactRational::from(3)));
    let w2 = q2
        .sub(&f.mul(&q1).scale(&ExactRational::from(2)))
        .add(&f.pow(2).scale(&ExactRational::from(3)));
    let bq = node_polynomials()?.b(q)?;
    let lifted = bq.evaluate_in(|name| match name {
        "v" => Some(v.clone()),
        "w1" => Some(w1.clone()),
        "w2" => Some(w2.clone()),
        _ => None,
    })?;
    Ok(fiber_pushforward(&lifted))
}

fn v_for(m: &SparsePolynomial) -> BundleFiberClass {
    BundleFiberClass::new(m.mul_poly(&SparsePolynomial::var("f")))
}

/// `a_q` with `m` symbolic.
pub fn grass_aq(q: usize) -> Result<GrassmannClass> {
    pushed_bq(q, &v_for(&SparsePolynomial::var("m")))
}

fn aq_list(n: usize, m: &SparsePolynomial) -> Result<Vec<GrassmannClass>> {
    let v = v_for(m);
    (1..=n).map(|q| pushed_bq(q, &v)).collect()
}

fn bell_class(r: usize, a: &[GrassmannClass]) -> Result<GrassmannClass> {
    let p = bell_eval(r, a)?;
    Ok(p.scale(&ExactRational::from(factorial(r as u32)).recip()?))
}

/// Number of 6-nodal plane sections as a polynomial in `m`.
pub fn threefold_6nodal_symbolic() -> Result<SparsePolynomial> {
    let a = aq_list(6, &SparsePolynomial::var("m"))?;
    grass_integrate(&bell_class(6, &a)?)
}

/// Number of 6-nodal plane sections for a given `m`, computed with `m`
/// fixed from the start.
pub fn threefold_6nodal(m: i64) -> Result<BigInt> {
    let a = aq_list(6, &SparsePolynomial::constant(m))?;
    let value = grass_integrate(&bell_class(6, &a)?)?.constant_term();
    value
        .to_integer()
        .ok_or_else(|| Error::NotInteger(value.to_string()))
}

/// `int [U(3)] q1^3`, the 3-nodal plane sections through a general line.
pub fn threefold_3nodal_lines() -> Result<SparsePolynomial> {
    let a = aq_list(3, &SparsePolynomial::var("m"))?;
    let u3 = bell_class(3, &a)?;
    grass_integrate(&u3.mul(&GrassmannClass::q1().pow(3)))
}

/// Whether the threefold counts are known to be enumerative (`m >= 4`).
pub fn threefold_validity(m: i64) -> bool {
    m >= 4
}

/// Multiplicity of the curves containing a line on a quintic.
///
/// On the planes through a fixed line `L`, the residual curve has
/// `v' = 4f + q1`. The classes live on `Y_L`, whose class in `Y` is
/// `(q1^2 - q2)^2`, so `int_{Y_L} z = int_Y (q1^2 - q2)^2 z`. The result is
/// `(1/2) int_{Y_L} P_2(a_1, a_2)`.
pub fn line_restricted_multiplier() -> Result<BigInt> {
    let v = BundleFiberClass::new("4*f + q1".parse().expect("literal"));
    let a = [pushed_bq(1, &v)?, pushed_bq(2, &v)?];
    let p2 = bell_eval(2, &a)?;
    let y_l = GrassmannClass("(q1^2 - q2)^2".parse().expect("literal"));
    let total = grass_integrate(&p2.mul(&y_l))?.constant_term();
    let half = &total * &ExactRational::new(1, 2)?;
    half.to_integer()
        .ok_or_else(|| Error::NotInteger(half.to_string()))
}

/// Irreducible 6-nodal plane quintics on a general quintic threefold.
pub fn quintic_irreducible() -> Result<BigInt> {
    let all = threefold_6nodal(5)?;
    Ok(all
        - BigInt::from(CONICS_ON_QUINTIC)
        - BigInt::from(LINES_ON_QUINTIC) * line_restricted_multiplier()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> GrassmannClass {
        GrassmannClass(s.parse().unwrap())
    }

    fn fiber(s: &str) -> BundleFiberClass {
        BundleFiberClass::new(s.parse().unwrap())
    }

    #[test]
    fn fiber_rules() {
        assert_eq!(fiber_pushforward(&fiber("f^2")), class("1"));
        assert!(fiber_pushforward(&fiber("f")).is_zero());
        assert!(fiber_pushforward(&fiber("7*q2")).is_zero());
        assert_eq!(fiber_pushforward(&fiber("q1*f^3")), class("q1^2"));
        assert_eq!(fiber_pushforward(&fiber("f^4")), class("q1^2 - q2"));
        assert!(fiber_pushforward(&BundleFiberClass::f().pow(5)).is_zero());
    }

    #[test]
    fn integration_table() {
        let int = |s: &str| grass_integrate(&class(s)).unwrap();
        assert_eq!(int("q1^6"), SparsePolynomial::constant(5));
        assert_eq!(int("q2^3"), SparsePolynomial::constant(1));
        assert_eq!(int("(q1^2 - q2)^2*q1^2"), SparsePolynomial::constant(1));
        assert_eq!(int("(q1^2 - q2)^2*q2"), SparsePolynomial::zero());
        assert_eq!(int("m^2*q1^4*q2"), "3*m^2".parse().unwrap());
        assert_eq!(
            grass_integrate(&class("q1^5")),
            Err(Error::NotTopDegree { q1: 5, q2: 0 })
        );
    }

    #[test]
    fn first_class() {
        assert_eq!(grass_aq(1).unwrap(), class("m^3*q1 - 2*m^2*q1 + m*q1"));
    }

    #[test]
    fn classes_are_homogeneous_and_vanish_at_m_zero() {
        for q in 1..=6 {
            let a = grass_aq(q).unwrap();
            assert_eq!(a.degree(), Some(q as u32), "q = {q}");
            let at_zero = a.0.substitute(&[("m", SparsePolynomial::zero())]).unwrap();
            assert!(at_zero.is_zero(), "q = {q}");
        }
    }

    #[test]
    fn validity() {
        assert!(threefold_validity(4));
        assert!(!threefold_validity(3));
    }
}
