//! Exact rational arithmetic and sparse multivariate polynomials.

mod parse;
mod poly;
mod rational;
mod ring;

pub use parse::{parse_in, parse_polynomial};
pub use poly::{Monomial, SparsePolynomial, WeightedDegree};
pub use rational::ExactRational;
pub use ring::CommutativeRing;

use num_bigint::BigInt;

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_combinatorics() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(7), BigInt::from(5040));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(10, 0), BigInt::from(1));
    }
}
