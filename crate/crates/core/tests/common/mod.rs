#![allow(dead_code)]

use nodecount_core::grass::BundleFiberClass;
use nodecount_core::{ExactRational, SparsePolynomial};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ExactRational::new(n, d).unwrap())
}

/// Random polynomial in `vars` with at most `max_terms` terms and each
/// exponent below `max_exp`.
pub fn poly_in(
    vars: &'static [&'static str],
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = SparsePolynomial> {
    let n = vars.len();
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, n), rational()),
        0..=max_terms,
    )
    .prop_map(move |terms| SparsePolynomial::from_terms(vars, terms).unwrap())
}

pub const VWW: &[&str] = &["v", "w1", "w2"];
pub const VWWE: &[&str] = &["v", "w1", "w2", "e"];
pub const FQQ: &[&str] = &["f", "q1", "q2"];

pub fn node_poly() -> impl Strategy<Value = SparsePolynomial> {
    poly_in(VWW, 4, 6)
}

pub fn fiber_class() -> impl Strategy<Value = BundleFiberClass> {
    poly_in(FQQ, 6, 6).prop_map(BundleFiberClass::new)
}

/// `P_n` through `exp(S) = sum_k S^k / k!` with `S = sum_j a_j t^j / j!`,
/// all series truncated after `t^n`.
pub fn bell_by_series(n: usize, a: &[ExactRational]) -> ExactRational {
    let mut fact = vec![ExactRational::one()];
    for k in 1..=n {
        fact.push(&fact[k - 1] * &ExactRational::from(k));
    }
    let mut s = vec![ExactRational::zero(); n + 1];
    for j in 1..=n {
        s[j] = &a[j - 1] / &fact[j];
    }
    let mul = |x: &[ExactRational], y: &[ExactRational]| {
        let mut out = vec![ExactRational::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                out[i + j] += &x[i] * &y[j];
            }
        }
        out
    };
    let mut exp = vec![ExactRational::zero(); n + 1];
    let mut power = vec![ExactRational::zero(); n + 1];
    power[0] = ExactRational::one();
    for fk in &fact {
        for (e, p) in exp.iter_mut().zip(&power) {
            *e += p / fk;
        }
        power = mul(&power, &s);
    }
    &exp[n] * &fact[n]
}
