//! Curves in a linear system on a fixed smooth surface.
//!
//! The family is `S x Y -> Y` with `Y` the projective space of the system.
//! On `S x Y` we have `v = c + h`, `w1 = K` and `w2 = X`, where `c` is the
//! class of the line bundle, `K` the canonical class, `X` the point class
//! weighted by `c_2`, and `h` the hyperplane class of `Y`. Pushing forward
//! integrates the surface part against the four Chern numbers
//! `d = c^2`, `k = c.K`, `s = K^2` and `x = c_2(S)`.

use num_bigint::BigInt;

use crate::bell::bell_eval;
use crate::error::{Error, Result};
use crate::exactpoly::{factorial, CommutativeRing, ExactRational, SparsePolynomial};
use crate::nodegen::node_polynomials;

/// Largest node count handled.
pub const MAX_NODES: usize = 8;

/// The four numbers `(d, k, s, x)`, possibly depending on a parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernNumbers {
    pub d: SparsePolynomial,
    pub k: SparsePolynomial,
    pub s: SparsePolynomial,
    pub x: SparsePolynomial,
}

impl ChernNumbers {
    pub fn new(
        d: SparsePolynomial,
        k: SparsePolynomial,
        s: SparsePolynomial,
        x: SparsePolynomial,
    ) -> Self {
        Self { d, k, s, x }
    }

    /// Plane curves of degree `m`: `(m^2, -3m, 9, 3)`.
    pub fn plane() -> Self {
        let m = SparsePolynomial::var("m");
        Self {
            d: m.pow_poly(2),
            k: m.scale_by(&ExactRational::from(-3)),
            s: SparsePolynomial::constant(9),
            x: SparsePolynomial::constant(3),
        }
    }

    /// Formal symbols `d, k, s, x`.
    pub fn symbolic() -> Self {
        Self {
            d: SparsePolynomial::var("d"),
            k: SparsePolynomial::var("k"),
            s: SparsePolynomial::var("s"),
            x: SparsePolynomial::var("x"),
        }
    }

    pub fn from_integers(d: i64, k: i64, s: i64, x: i64) -> Self {
        Self {
            d: SparsePolynomial::constant(d),
            k: SparsePolynomial::constant(k),
            s: SparsePolynomial::constant(s),
            x: SparsePolynomial::constant(x),
        }
    }
}

/// Basis of the surface part: `1; c, K; c^2, cK, K^2, X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceBasis {
    One,
    C,
    K,
    CSq,
    CK,
    KSq,
    X,
}

impl SurfaceBasis {
    pub const ALL: [SurfaceBasis; 7] = [
        SurfaceBasis::One,
        SurfaceBasis::C,
        SurfaceBasis::K,
        SurfaceBasis::CSq,
        SurfaceBasis::CK,
        SurfaceBasis::KSq,
        SurfaceBasis::X,
    ];

    pub fn grade(self) -> u32 {
        match self {
            SurfaceBasis::One => 0,
            SurfaceBasis::C | SurfaceBasis::K => 1,
            _ => 2,
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Product of two basis elements; `None` when it vanishes.
    fn times(self, other: SurfaceBasis) -> Option<SurfaceBasis> {
        use SurfaceBasis::*;
        match (self, other) {
            (One, b) | (b, One) => Some(b),
            (C, C) => Some(CSq),
            (C, K) | (K, C) => Some(CK),
            (K, K) => Some(KSq),
            _ => None,
        }
    }
}

/// A class on `S x Y`: polynomial coefficients (in `h` and any parameter)
/// over [`SurfaceBasis`]. Products above surface degree 2 vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceClass {
    coeffs: [SparsePolynomial; 7],
}

impl SurfaceClass {
    pub fn basis(b: SurfaceBasis) -> Self {
        let mut out = <Self as CommutativeRing>::zero();
        out.coeffs[b.index()] = SparsePolynomial::one();
        out
    }

    /// `p * 1`.
    pub fn scalar(p: SparsePolynomial) -> Self {
        let mut out = <Self as CommutativeRing>::zero();
        out.coeffs[0] = p;
        out
    }

    pub fn coefficient(&self, b: SurfaceBasis) -> &SparsePolynomial {
        &self.coeffs[b.index()]
    }

    /// Integrates the surface-degree-2 part against the Chern numbers.
    pub fn pushforward(&self, cn: &ChernNumbers) -> SparsePolynomial {
        use SurfaceBasis::*;
        [(CSq, &cn.d), (CK, &cn.k), (KSq, &cn.s), (X, &cn.x)]
            .iter()
            .fold(SparsePolynomial::zero(), |acc, (b, n)| {
                acc.add_poly(&self.coefficient(*b).mul_poly(n))
            })
    }
}

impl CommutativeRing for SurfaceClass {
    fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| SparsePolynomial::zero()),
        }
    }

    fn one() -> Self {
        Self::scalar(SparsePolynomial::one())
    }

    fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| self.coeffs[i].add_poly(&other.coeffs[i])),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = <Self as CommutativeRing>::zero();
        for a in SurfaceBasis::ALL {
            let ca = &self.coeffs[a.index()];
            if ca.is_zero() {
                continue;
            }
            for b in SurfaceBasis::ALL {
                let cb = &other.coeffs[b.index()];
                if cb.is_zero() {
                    continue;
                }
                if let Some(ab) = a.times(b) {
                    let slot = &mut out.coeffs[ab.index()];
                    *slot = slot.add_poly(&ca.mul_poly(cb));
                }
            }
        }
        out
    }

    fn scale(&self, c: &ExactRational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| self.coeffs[i].scale_by(c)),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SparsePolynomial::is_zero)
    }
}

/// `pi_*(v^a w1^b w2^c)` as a polynomial in `h`.
pub fn pushforward_monomial(a: u32, b: u32, c: u32, cn: &ChernNumbers) -> SparsePolynomial {
    let v =
        SurfaceClass::basis(SurfaceBasis::C).add(&SurfaceClass::scalar(SparsePolynomial::var("h")));
    let class = v
        .pow(a)
        .mul(&SurfaceClass::basis(SurfaceBasis::K).pow(b))
        .mul(&SurfaceClass::basis(SurfaceBasis::X).pow(c));
    class.pushforward(cn)
}

/// `a_q = pi_* b_q`, the coefficient of `h^q`.
pub fn surface_aq(q: usize, cn: &ChernNumbers) -> Result<SparsePolynomial> {
    let bq = node_polynomials()?.b(q)?;
    let mut acc = SparsePolynomial::zero();
    for (mono, coeff) in bq.terms() {
        let e = mono.exponents();
        let pushed = pushforward_monomial(e[0], e[1], e[2], cn);
        acc = acc.add_poly(&pushed.coefficient_of("h", q as u32).scale_by(coeff));
    }
    Ok(acc)
}

/// `a_1, ..., a_n`.
pub fn surface_aq_list(n: usize, cn: &ChernNumbers) -> Result<Vec<SparsePolynomial>> {
    (1..=n).map(|q| surface_aq(q, cn)).collect()
}

/// `N_r = P_r(a_1, ..., a_r) / r!`.
pub fn severi_degree(r: usize, cn: &ChernNumbers) -> Result<SparsePolynomial> {
    if r > MAX_NODES {
        return Err(Error::NodeCountOutOfRange(r));
    }
    let a = surface_aq_list(r, cn)?;
    let p = bell_eval(r, &a)?;
    Ok(p.scale_by(&ExactRational::from(factorial(r as u32)).recip()?))
}

/// `N_r(m)` for plane curves; the value must be an integer.
pub fn plane_count(r: usize, m: i64) -> Result<BigInt> {
    let n = severi_degree(r, &ChernNumbers::plane())?;
    let value = n.evaluate(&[("m", ExactRational::from(m))])?;
    value
        .to_integer()
        .ok_or_else(|| Error::NotInteger(value.to_string()))
}

/// Whether the plane count is known to be enumerative: `r <= 8` and
/// `m >= r/2 + 1`.
pub fn plane_validity(r: i64, m: i64) -> bool {
    r <= MAX_NODES as i64 && 2 * m >= r + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_pushforwards() {
        let cn = ChernNumbers::symbolic();
        assert_eq!(pushforward_monomial(3, 0, 0, &cn), parse("3*d*h"));
        assert_eq!(pushforward_monomial(0, 0, 1, &cn), parse("x"));
        assert_eq!(pushforward_monomial(0, 2, 0, &cn), parse("s"));
        assert_eq!(pushforward_monomial(2, 1, 0, &cn), parse("2*k*h"));
        assert!(pushforward_monomial(0, 3, 0, &cn).is_zero());
        assert!(pushforward_monomial(4, 0, 2, &cn).is_zero());
        let plane = ChernNumbers::plane();
        assert_eq!(pushforward_monomial(3, 0, 0, &plane), parse("3*m^2*h"));
    }

    #[test]
    fn first_classes_in_chern_numbers() {
        let cn = ChernNumbers::symbolic();
        assert_eq!(surface_aq(1, &cn).unwrap(), parse("3*d + 2*k + x"));
        assert_eq!(
            surface_aq(2, &cn).unwrap(),
            parse("-42*d - 39*k - 6*s - 7*x")
        );
        assert!(surface_aq(1, &ChernNumbers::from_integers(0, 0, 0, 0))
            .unwrap()
            .is_zero());
        assert!(surface_aq(9, &cn).is_err());
    }

    #[test]
    fn plane_first_counts() {
        let plane = ChernNumbers::plane();
        assert_eq!(severi_degree(0, &plane).unwrap(), SparsePolynomial::one());
        assert_eq!(severi_degree(1, &plane).unwrap(), parse("3*(m - 1)^2"));
        assert_eq!(plane_count(1, 2).unwrap(), 3.into());
        assert_eq!(severi_degree(9, &plane), Err(Error::NodeCountOutOfRange(9)));
    }

    #[test]
    fn validity_boundary() {
        assert!(plane_validity(8, 5));
        assert!(!plane_validity(8, 4));
        assert!(!plane_validity(3, 1));
        assert!(plane_validity(0, 1));
        assert!(plane_validity(3, 3));
        assert!(!plane_validity(3, 2));
        assert!(!plane_validity(9, 100));
    }
}
