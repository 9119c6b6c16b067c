//! Curves of genus `g` with `r` nodes on an Abelian surface.
//!
//! The curves move in a family over `Y = P(Q*)`, a projective bundle over
//! the dual surface. With `l` the class of the Poincare bundle and `h` the
//! tautological class of `Y`, we have `v = l + h` and `w1 = w2 = 0`, so
//! `b_q` reduces to `kappa_q v^{q+2}`. Pushing `l^i` down to the dual
//! surface gives
//!
//! * `l^2 -> d`, `l^3 -> 6 C1`, `l^4 -> 12 (C1SQ - 2 C2)`, other powers `-> 0`,
//!
//! where `C1 = c_1(Q)`, `C1SQ = c_1(Q)^2`, `C2 = c_2(Q)` and `d` is the
//! self-intersection of the curve class. On the dual surface,
//! `int C1SQ = d` and `int C2 = d/2 - 1`. Finally `d = 2g + 2r - 2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bell::bell_eval;
use crate::error::{Error, Result};
use crate::exactpoly::{binomial, factorial, CommutativeRing, ExactRational, SparsePolynomial};
use crate::nodegen::node_polynomials;

/// Largest node count handled.
pub const MAX_NODES: usize = 8;

/// Largest node count accepted by the series oracle.
pub const MAX_ORACLE_NODES: usize = 12;

/// Basis of the classes on the dual surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DualBasis {
    One,
    C1,
    C1Sq,
    C2,
}

impl DualBasis {
    pub const ALL: [DualBasis; 4] = [
        DualBasis::One,
        DualBasis::C1,
        DualBasis::C1Sq,
        DualBasis::C2,
    ];

    pub fn grade(self) -> u32 {
        match self {
            DualBasis::One => 0,
            DualBasis::C1 => 1,
            DualBasis::C1Sq | DualBasis::C2 => 2,
        }
    }

    fn times(self, other: DualBasis) -> Option<DualBasis> {
        use DualBasis::*;
        match (self, other) {
            (One, b) | (b, One) => Some(b),
            (C1, C1) => Some(C1Sq),
            _ => None,
        }
    }
}

/// A class on the dual surface with coefficients polynomial in `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualAbelianClass {
    coeffs: [SparsePolynomial; 4],
}

impl DualAbelianClass {
    pub fn basis(b: DualBasis) -> Self {
        let mut out = <Self as CommutativeRing>::zero();
        out.coeffs[b as usize] = SparsePolynomial::one();
        out
    }

    pub fn scalar(p: SparsePolynomial) -> Self {
        let mut out = <Self as CommutativeRing>::zero();
        out.coeffs[0] = p;
        out
    }

    pub fn coefficient(&self, b: DualBasis) -> &SparsePolynomial {
        &self.coeffs[b as usize]
    }

    /// Grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<u32> {
        let mut out: Vec<u32> = DualBasis::ALL
            .iter()
            .filter(|b| !self.coefficient(**b).is_zero())
            .map(|b| b.grade())
            .collect();
        out.dedup();
        out
    }

    /// Integral of the grade-2 part: `int C1SQ = d`, `int C2 = d/2 - 1`.
    pub fn integrate(&self) -> SparsePolynomial {
        let d = SparsePolynomial::var("d");
        let c2: SparsePolynomial = "d/2 - 1".parse().expect("literal");
        self.coefficient(DualBasis::C1Sq)
            .mul_poly(&d)
            .add_poly(&self.coefficient(DualBasis::C2).mul_poly(&c2))
    }
}

impl CommutativeRing for DualAbelianClass {
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
        for a in DualBasis::ALL {
            let ca = self.coefficient(a);
            if ca.is_zero() {
                continue;
            }
            for b in DualBasis::ALL {
                let cb = other.coefficient(b);
                if cb.is_zero() {
                    continue;
                }
                if let Some(ab) = a.times(b) {
                    let slot = &mut out.coeffs[ab as usize];
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

/// A class on `Y`: a polynomial in `h` with [`DualAbelianClass`]
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct AbelianYClass {
    terms: BTreeMap<u32, DualAbelianClass>,
}

impl AbelianYClass {
    /// `c * h^k`.
    pub fn monomial(c: DualAbelianClass, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn h_coefficient(&self, k: u32) -> DualAbelianClass {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(<DualAbelianClass as CommutativeRing>::zero)
    }

    pub fn h_terms(&self) -> impl Iterator<Item = (u32, &DualAbelianClass)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Whether every term `h^k * c` with `c` of grade `j` has `k + j = r`.
    pub fn is_pure(&self, r: u32) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| c.grades().iter().all(|j| k + j == r))
    }
}

impl CommutativeRing for AbelianYClass {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::monomial(DualAbelianClass::one(), 0)
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let sum = terms.get(k).map(|x| x.add(c)).unwrap_or_else(|| c.clone());
            if sum.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, sum);
            }
        }
        Self { terms }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out = out.add(&Self::monomial(a.mul(b), i + j));
            }
        }
        out
    }
    fn scale(&self, c: &ExactRational) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out = out.add(&Self::monomial(x.scale(c), *k));
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The coefficient `kappa_q` of `v^{q+2}` in `b_q(v, 0, 0)`.
pub fn kappa(q: usize) -> Result<ExactRational> {
    let bq = node_polynomials()?.b(q)?;
    let at_zero = bq.substitute(&[
        ("w1", SparsePolynomial::zero()),
        ("w2", SparsePolynomial::zero()),
    ])?;
    let k = at_zero.coefficient(&[("v", q as u32 + 2)]);
    if at_zero.num_terms() != 1 || k.is_zero() {
        return Err(Error::Internal(format!(
            "b_{q}(v, 0, 0) is not a pure power of v"
        )));
    }
    Ok(k)
}

/// Pushforward of `l^i` to the dual surface.
fn push_l(i: u32) -> DualAbelianClass {
    let c = |b| DualAbelianClass::basis(b);
    match i {
        2 => DualAbelianClass::scalar(SparsePolynomial::var("d")),
        3 => c(DualBasis::C1).scale(&ExactRational::from(6)),
        4 => c(DualBasis::C1Sq)
            .sub(&c(DualBasis::C2).scale(&ExactRational::from(2)))
            .scale(&ExactRational::from(12)),
        _ => DualAbelianClass::zero(),
    }
}

/// `a_q = kappa_q sum_i C(q+2, i) push(l^i) h^{q+2-i}`.
pub fn abelian_aq(q: usize) -> Result<AbelianYClass> {
    let kappa = kappa(q)?;
    let n = q as u32 + 2;
    let mut acc = AbelianYClass::zero();
    for i in 2..=4.min(n) {
        let c = push_l(i).scale(&(&kappa * &ExactRational::from(binomial(n, i))));
        acc = acc.add(&AbelianYClass::monomial(c, n - i));
    }
    for (_, c) in acc.h_terms() {
        if DualBasis::ALL
            .iter()
            .any(|b| !c.coefficient(*b).is_integral())
        {
            return Err(Error::Internal(format!(
                "a_{q} has a non-integral coefficient"
            )));
        }
    }
    Ok(acc)
}

/// `[U(r)] = P_r(a_1, ..., a_r) / r!`, checked to be of pure grade `r`.
pub fn abelian_ur(r: usize) -> Result<AbelianYClass> {
    if r > MAX_NODES {
        return Err(Error::NodeCountOutOfRange(r));
    }
    let a = (1..=r).map(abelian_aq).collect::<Result<Vec<_>>>()?;
    let u = bell_eval(r, &a)?.scale(&ExactRational::from(factorial(r as u32)).recip()?);
    if !u.is_pure(r as u32) {
        return Err(Error::Internal(format!(
            "[U({r})] has terms of the wrong grade"
        )));
    }
    Ok(u)
}

/// `d = 2g + 2r - 2` with `g` symbolic.
fn d_in_g(r: usize) -> SparsePolynomial {
    SparsePolynomial::var("g")
        .scale_by(&ExactRational::from(2))
        .add_poly(&SparsePolynomial::constant(2 * r as i64 - 2))
}

fn in_g(p: &SparsePolynomial, r: usize) -> Result<SparsePolynomial> {
    p.substitute(&[("d", d_in_g(r))])
}

/// Checks that a polynomial in `g` of degree `n` takes integer values at
/// all integers, using the `n + 1` consecutive points `0..=n`.
fn check_integer_valued(p: &SparsePolynomial) -> Result<()> {
    for g in 0..=p.total_degree() as i64 {
        let value = p.evaluate(&[("g", ExactRational::from(g))])?;
        if !value.is_integer() {
            return Err(Error::NotInteger(format!("{p} at g = {g} gives {value}")));
        }
    }
    Ok(())
}

/// `N_{g,r}` as a polynomial in `g`.
///
/// Writing `[U(r)] = beta_0 h^r + beta_1 h^{r-1} + beta_2 h^{r-2}`, the
/// pushforwards of `h^{g+r}, h^{g+r-1}, h^{g+r-2}` to the dual surface are
/// `C1SQ - C2`, `-C1` and `1`.
pub fn abelian_count(r: usize) -> Result<SparsePolynomial> {
    let u = abelian_ur(r)?;
    let r32 = r as u32;
    let sigma = [
        DualAbelianClass::basis(DualBasis::C1Sq).sub(&DualAbelianClass::basis(DualBasis::C2)),
        DualAbelianClass::basis(DualBasis::C1).neg(),
        DualAbelianClass::one(),
    ];
    let mut total = SparsePolynomial::zero();
    for (j, s) in sigma.iter().enumerate() {
        let j = j as u32;
        if j > r32 {
            break;
        }
        let beta = u.h_coefficient(r32 - j);
        total = total.add_poly(&beta.mul(s).integrate());
    }
    let n = in_g(&total, r)?.with_context(&["g"])?;
    check_integer_valued(&n)?;
    Ok(n)
}

/// `N_{g,r}` at a given genus.
pub fn abelian_count_at(r: usize, g: i64) -> Result<BigInt> {
    let value = abelian_count(r)?.evaluate(&[("g", ExactRational::from(g))])?;
    value
        .to_integer()
        .ok_or_else(|| Error::NotInteger(value.to_string()))
}

/// The number of `r`-nodal curves in a fixed class: the scalar part
/// `beta_0` of `[U(r)]`, as a polynomial in `g`.
pub fn fixed_class_count(r: usize) -> Result<SparsePolynomial> {
    let u = abelian_ur(r)?;
    let beta0 = u
        .h_coefficient(r as u32)
        .coefficient(DualBasis::One)
        .clone();
    let n = in_g(&beta0, r)?.with_context(&["g"])?;
    check_integer_valued(&n)?;
    Ok(n)
}

fn sigma1(k: u64) -> u64 {
    (1..=k).filter(|i| k.is_multiple_of(*i)).sum()
}

/// `1 + 6q + 12q^2 + 28q^3 + ...`: the series `sum_{k>=1} k sigma_1(k) q^{k-1}`
/// truncated after `q^n`.
pub fn quasimodular_series(n: usize) -> Vec<BigInt> {
    (1..=n as u64 + 1)
        .map(|k| BigInt::from(k * sigma1(k)))
        .collect()
}

fn series_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `g` times the coefficient of `q^r` in the `(g-1)`-st power of
/// [`quasimodular_series`].
pub fn bryan_leung_oracle(g: i64, r: usize) -> Result<BigInt> {
    if g < 1 {
        return Err(Error::GenusTooSmall(g));
    }
    if r > MAX_ORACLE_NODES {
        return Err(Error::NodeCountOutOfRange(r));
    }
    let base = quasimodular_series(r);
    let mut result = vec![BigInt::zero(); r + 1];
    result[0] = BigInt::one();
    let mut power = base;
    let mut e = (g - 1) as u64;
    while e > 0 {
        if e & 1 == 1 {
            result = series_mul(&result, &power, r);
        }
        power = series_mul(&power, &power, r);
        e >>= 1;
    }
    Ok(BigInt::from(g) * &result[r])
}

/// `r! [q^r] log S` for `r = 1..=n`, where `S` is [`quasimodular_series`].
pub fn log_coefficients(n: usize) -> Result<Vec<BigInt>> {
    let s: Vec<ExactRational> = quasimodular_series(n)
        .into_iter()
        .map(ExactRational::from)
        .collect();
    // L' = S'/S, solved term by term using S_0 = 1.
    let ds: Vec<ExactRational> = (1..=n).map(|k| &s[k] * &ExactRational::from(k)).collect();
    let mut dl: Vec<ExactRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = ds[k].clone();
        for j in 1..=k {
            x -= &s[j] * &dl[k - j];
        }
        dl.push(x);
    }
    dl.iter()
        .enumerate()
        .map(|(k, c)| {
            let r = k + 1;
            let value = c * &ExactRational::new(factorial(r as u32), r)?;
            value
                .to_integer()
                .ok_or_else(|| Error::NotInteger(value.to_string()))
        })
        .collect()
}

/// Validity of the Abelian counts for a curve class `m` times the primitive
/// class: `m = 1` and `g > 5r + 7`, or `m >= 2` and
/// `g > (3m^2 r + 3m^2 - 2mr + 2m + 2r - 2) / (2m - 2)`.
pub fn thm52_validity(m: i64, g: i64, r: i64) -> bool {
    let (m, g, r) = (i128::from(m), i128::from(g), i128::from(r));
    match m {
        1 => g > 5 * r + 7,
        m if m >= 2 => g * (2 * m - 2) > 3 * m * m * r + 3 * m * m - 2 * m * r + 2 * m + 2 * r - 2,
        _ => false,
    }
}

/// Surfaces with numerically trivial canonical class and Picard number 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Abelian,
    K3,
    Enriques,
}

impl std::str::FromStr for SurfaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abelian" => Ok(Self::Abelian),
            "k3" => Ok(Self::K3),
            "enriques" => Ok(Self::Enriques),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown surface kind `{s}`"),
            }),
        }
    }
}

/// Sufficient condition for `k`-very ampleness of a bundle that is `m`
/// times the primitive class, with `d = int c_1^2`.
pub fn k_very_ample_ok(surface: SurfaceKind, m: i64, d: i64, k: i64) -> bool {
    let (m, d, k) = (i128::from(m), i128::from(d), i128::from(k));
    if m < 1 || k < 0 {
        return false;
    }
    let second = m >= 2 && (m - 1) * d > m * m * (k + 1);
    match surface {
        SurfaceKind::Abelian => (m == 1 && d > 4 * (k + 1)) || second,
        SurfaceKind::K3 => (m == 1 && d >= 4 * k) || second,
        SurfaceKind::Enriques => d >= 4 * (k + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn kappas() {
        let expected = [
            1,
            -7,
            138,
            -4824,
            248832,
            -17187120,
            1497698640,
            -158186669760_i64,
        ];
        for (q, k) in expected.iter().enumerate() {
            assert_eq!(kappa(q + 1).unwrap(), ExactRational::from(*k));
        }
    }

    #[test]
    fn first_class() {
        let a1 = abelian_aq(1).unwrap();
        assert_eq!(a1.h_coefficient(1), DualAbelianClass::scalar(poly("3*d")));
        assert_eq!(
            a1.h_coefficient(0),
            DualAbelianClass::basis(DualBasis::C1).scale(&ExactRational::from(6))
        );
        let a2 = abelian_aq(2).unwrap();
        let top = push_l(4).scale(&ExactRational::from(-7));
        assert_eq!(a2.h_coefficient(0), top);
        assert_eq!(a2.h_coefficient(2), DualAbelianClass::scalar(poly("-42*d")));
    }

    #[test]
    fn low_counts() {
        assert_eq!(abelian_count(0).unwrap(), poly("g"));
        assert_eq!(abelian_count(1).unwrap(), poly("6*g*(g - 1)"));
        assert_eq!(fixed_class_count(0).unwrap(), SparsePolynomial::one());
        assert_eq!(fixed_class_count(1).unwrap(), poly("6*g"));
        assert_eq!(abelian_count(9), Err(Error::NodeCountOutOfRange(9)));
    }

    #[test]
    fn oracle_basics() {
        assert_eq!(
            quasimodular_series(4),
            [1, 6, 12, 28, 30].map(BigInt::from).to_vec()
        );
        for g in 1..6 {
            assert_eq!(bryan_leung_oracle(g, 0).unwrap(), BigInt::from(g));
            assert_eq!(
                bryan_leung_oracle(g, 1).unwrap(),
                BigInt::from(6 * g * (g - 1))
            );
        }
        assert_eq!(bryan_leung_oracle(0, 1), Err(Error::GenusTooSmall(0)));
    }

    #[test]
    fn validity_predicates() {
        assert!(thm52_validity(1, 18, 2));
        assert!(!thm52_validity(1, 17, 2));
        assert!(thm52_validity(2, 13, 1));
        assert!(!thm52_validity(2, 12, 1));
        assert!(!thm52_validity(1, 12, 1));
        assert!(!thm52_validity(0, 100, 0));
        for k in 0..5 {
            assert!(k_very_ample_ok(SurfaceKind::Abelian, 1, 4 * k + 5, k));
            assert!(!k_very_ample_ok(SurfaceKind::Abelian, 1, 4 * k + 4, k));
            assert!(k_very_ample_ok(SurfaceKind::K3, 1, 4 * k, k));
            assert!(!k_very_ample_ok(SurfaceKind::K3, 1, 4 * k - 1, k));
            for m in 1..4 {
                assert!(k_very_ample_ok(SurfaceKind::Enriques, m, 4 * (k + 1), k));
                assert!(!k_very_ample_ok(
                    SurfaceKind::Enriques,
                    m,
                    4 * (k + 1) - 1,
                    k
                ));
            }
        }
    }
}
