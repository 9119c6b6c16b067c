//! Generation of the node polynomials `b_1, ..., b_8` in `(v, w1, w2)`.
//!
//! `v` and `w1` have weight 1, `w2` has weight 2, and `b_q` is
//! weighted-homogeneous of degree `q + 2`.

use std::sync::OnceLock;

use crate::bell::bell_eval;
use crate::error::{Error, Result};
use crate::exactpoly::{factorial, parse_in, ExactRational, SparsePolynomial, WeightedDegree};

/// Variables of the node polynomials.
pub const VARS: [&str; 3] = ["v", "w1", "w2"];

/// Grading: `v` and `w1` weigh 1, `w2` weighs 2.
pub const WEIGHTS: [(&str, u32); 3] = [("v", 1), ("w1", 1), ("w2", 2)];

/// Number of node polynomials produced.
pub const MAX_Q: usize = 8;

const X2: &str = "v^3 + v^2*w1 + v*w2";

const X3: &str = "v^6 + 4*v^5*w1 + 5*v^4*(w1^2 + w2) + v^3*(2*w1^3 + 11*w1*w2) \
                  + v^2*(6*w1^2*w2 + 4*w2^2) + 4*v*w1*w2^2";

const X4: &str = "v^10 + 10*v^9*w1 + v^8*(40*w1^2 + 15*w2) + v^7*(82*w1^3 + 111*w1*w2) \
                  + v^6*(91*w1^4 + 315*w1^2*w2 + 63*w2^2) \
                  + v^5*(52*w1^5 + 29*w1^3*w2 + 324*w1*w2^2) \
                  + v^4*(12*w1^6 + 282*w1^4*w2 + 593*w1^2*w2^2 + 85*w2^3) \
                  + v^3*(72*w1^5*w2 + 464*w1^3*w2^2 + 259*w1*w2^3) \
                  + v^2*(132*w1^4*w2^2 + 246*w1^2*w2^3 + 36*w2^4) \
                  + v*(72*w1^3*w2^3 + 36*w1*w2^4)";

/// Multiplier of `x4` in `b_8`, before the factor `7!`.
pub const X4_MULTIPLIER: u32 = 3281;

pub fn x2() -> SparsePolynomial {
    parse_in(X2, &VARS).expect("x2 literal")
}

pub fn x3() -> SparsePolynomial {
    parse_in(X3, &VARS).expect("x3 literal")
}

pub fn x4() -> SparsePolynomial {
    parse_in(X4, &VARS).expect("x4 literal")
}

/// The transform `Q(i, R)`.
///
/// Substitutes `v -> v - i*e`, `w1 -> w1 + e`, `w2 -> w2 - e^2`, reduces
/// modulo `e^3 + w1*e^2 + w2*e` in `e` and returns minus the coefficient of
/// `e^2`.
pub fn q_transform(i: u32, r: &SparsePolynomial) -> Result<SparsePolynomial> {
    let ctx = ["v", "w1", "w2", "e"];
    let var = |n: &str| SparsePolynomial::var_in(&ctx, n).expect("known variable");
    let (v, w1, w2, e) = (var("v"), var("w1"), var("w2"), var("e"));
    let shifted = r.with_context(&VARS)?.substitute(&[
        ("v", &v - &e.scale_by(&ExactRational::from(i))),
        ("w1", &w1 + &e),
        ("w2", &w2 - &e.pow_poly(2)),
    ])?;
    let divisor = &(&e.pow_poly(3) + &(&w1 * &e.pow_poly(2))) + &(&w2 * &e);
    let (_, rem) = shifted.divrem_in_variable(&divisor, "e")?;
    rem.coefficient_of("e", 2).neg_poly().with_context(&VARS)
}

/// The fixed polynomials `x2, x3, x4` together with `b_1, ..., b_8`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodePolynomialSet {
    b: Vec<SparsePolynomial>,
    x2: SparsePolynomial,
    x3: SparsePolynomial,
    x4: SparsePolynomial,
}

impl NodePolynomialSet {
    /// Runs the generation from scratch.
    pub fn generate() -> Result<Self> {
        let (x2, x3, x4) = (x2(), x3(), x4());
        let mut b: Vec<SparsePolynomial> = Vec::with_capacity(MAX_Q);
        let mut q2: Vec<SparsePolynomial> = Vec::with_capacity(MAX_Q);
        let mut q3: Vec<SparsePolynomial> = Vec::with_capacity(MAX_Q);
        for s in 0..MAX_Q {
            let mut next = bell_eval(s, &q2)?.mul_poly(&x2);
            if (3..=6).contains(&s) {
                let c = ExactRational::from(s * (s - 1) * (s - 2));
                next = next.sub_poly(&bell_eval(s - 3, &q3)?.mul_poly(&x3).scale_by(&c));
            } else if s == 7 {
                next = next.sub_poly(&bell_eval(4, &q3)?.mul_poly(&x3).scale_by(&210.into()));
                let c = ExactRational::from(factorial(7) * X4_MULTIPLIER);
                next = next.add_poly(&x4.scale_by(&c));
            }
            let next = next.with_context(&VARS)?;
            let q = s as u32 + 1;
            if !next.weighted_degree(&WEIGHTS)?.is(q + 2) {
                return Err(Error::Internal(format!(
                    "b_{q} is not homogeneous of degree {}",
                    q + 2
                )));
            }
            if !next.is_integral() {
                return Err(Error::Internal(format!(
                    "b_{q} has a non-integer coefficient"
                )));
            }
            q2.push(q_transform(2, &next)?);
            q3.push(q_transform(3, &next)?);
            b.push(next);
        }
        Ok(Self { b, x2, x3, x4 })
    }

    /// `b_q` for `q` in `1..=8`.
    pub fn b(&self, q: usize) -> Result<&SparsePolynomial> {
        if !(1..=MAX_Q).contains(&q) {
            return Err(Error::IndexOutOfRange(q));
        }
        Ok(&self.b[q - 1])
    }

    /// `b_1, ..., b_8` in order.
    pub fn all(&self) -> &[SparsePolynomial] {
        &self.b
    }

    pub fn x2(&self) -> &SparsePolynomial {
        &self.x2
    }

    pub fn x3(&self) -> &SparsePolynomial {
        &self.x3
    }

    pub fn x4(&self) -> &SparsePolynomial {
        &self.x4
    }
}

/// The node polynomials, generated once per process.
pub fn node_polynomials() -> Result<&'static NodePolynomialSet> {
    static CACHE: OnceLock<std::result::Result<NodePolynomialSet, Error>> = OnceLock::new();
    CACHE
        .get_or_init(NodePolynomialSet::generate)
        .as_ref()
        .map_err(Clone::clone)
}

/// Weighted degree of `p` under [`WEIGHTS`].
pub fn node_degree(p: &SparsePolynomial) -> Result<WeightedDegree> {
    p.weighted_degree(&WEIGHTS)
}
