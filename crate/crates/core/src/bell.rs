//! Complete Bell polynomials.
//!
//! `P_n(a_1, ..., a_n)` is defined by
//! `exp(sum_{j>=1} a_j t^j / j!) = sum_{n>=0} P_n t^n / n!`.
//! They are computed with the binomial recurrence
//! `P_{n+1} = sum_{k=0}^{n} C(n, k) a_{k+1} P_{n-k}`.

use crate::error::{Error, Result};
use crate::exactpoly::{binomial, CommutativeRing, ExactRational, SparsePolynomial};

/// Largest supported order.
pub const MAX_ORDER: usize = 16;

/// The formal symbols `a_1, ..., a_n` of a Bell polynomial of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellBasis {
    order: usize,
    symbols: Vec<String>,
}

impl BellBasis {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::BellOrderTooLarge(order));
        }
        let symbols = (1..=order).map(|j| format!("a{j}")).collect();
        Ok(Self { order, symbols })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Weight `j` for `a_j`, the grading under which `P_n` has degree `n`.
    pub fn weights(&self) -> Vec<(&str, u32)> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u32 + 1))
            .collect()
    }
}

/// `P_0, ..., P_n` evaluated at `values[0..n]` in any commutative ring.
pub fn bell_sequence<R: CommutativeRing>(n: usize, values: &[R]) -> Result<Vec<R>> {
    if n > MAX_ORDER {
        return Err(Error::BellOrderTooLarge(n));
    }
    if values.len() < n {
        return Err(Error::LengthMismatch {
            needed: n,
            got: values.len(),
        });
    }
    let mut p: Vec<R> = Vec::with_capacity(n + 1);
    p.push(R::one());
    for m in 0..n {
        let mut next = R::zero();
        for k in 0..=m {
            let term = values[k].mul(&p[m - k]);
            if term.is_zero() {
                continue;
            }
            let c = ExactRational::from(binomial(m as u32, k as u32));
            next = next.add(&term.scale(&c));
        }
        p.push(next);
    }
    Ok(p)
}

/// `P_n(values[0], ..., values[n-1])`.
pub fn bell_eval<R: CommutativeRing>(n: usize, values: &[R]) -> Result<R> {
    Ok(bell_sequence(n, values)?
        .pop()
        .expect("sequence is nonempty"))
}

/// `P_n` as a polynomial in the symbols `a1, ..., an`.
pub fn bell_symbolic(n: usize) -> Result<SparsePolynomial> {
    let basis = BellBasis::new(n)?;
    let vars: Vec<SparsePolynomial> = basis
        .symbols()
        .iter()
        .map(|s| SparsePolynomial::var_in(basis.symbols(), s))
        .collect::<Result<_>>()?;
    let p = bell_eval(n, &vars)?;
    p.with_context(basis.symbols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::WeightedDegree;

    fn parse(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn low_orders() {
        assert_eq!(bell_symbolic(0).unwrap(), SparsePolynomial::one());
        assert_eq!(bell_symbolic(1).unwrap(), parse("a1"));
        assert_eq!(bell_symbolic(2).unwrap(), parse("a1^2 + a2"));
        assert_eq!(bell_symbolic(3).unwrap(), parse("a1^3 + 3*a1*a2 + a3"));
        assert_eq!(
            bell_symbolic(4).unwrap(),
            parse("a1^4 + 6*a1^2*a2 + 4*a1*a3 + 3*a2^2 + a4")
        );
    }

    #[test]
    fn term_counts_are_partition_numbers() {
        let partitions = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in partitions.iter().enumerate() {
            assert_eq!(bell_symbolic(n).unwrap().num_terms(), p, "n = {n}");
        }
    }

    #[test]
    fn homogeneous_with_positive_integer_coefficients() {
        for n in 0..=10 {
            let p = bell_symbolic(n).unwrap();
            let basis = BellBasis::new(n).unwrap();
            let deg = p.weighted_degree(&basis.weights()).unwrap();
            assert_eq!(deg, WeightedDegree::Homogeneous(n as u32));
            assert!(p.terms().all(|(_, c)| c.is_integer() && !c.is_negative()));
        }
    }

    #[test]
    fn set_partition_count() {
        // All a_j = 1 gives the Bell numbers.
        let ones = vec![ExactRational::one(); 10];
        let seq = bell_sequence(10, &ones).unwrap();
        let bell: Vec<i64> = vec![1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (x, b) in seq.iter().zip(bell) {
            assert_eq!(*x, ExactRational::from(b));
        }
    }

    #[test]
    fn zero_values_and_errors() {
        let zeros = vec![ExactRational::zero(); 5];
        assert!(bell_eval(5, &zeros).unwrap().is_zero());
        assert_eq!(bell_eval(0, &zeros).unwrap(), ExactRational::one());
        assert_eq!(
            bell_eval(3, &zeros[..2]),
            Err(Error::LengthMismatch { needed: 3, got: 2 })
        );
        assert_eq!(bell_symbolic(17), Err(Error::BellOrderTooLarge(17)));
        assert!(bell_symbolic(16).is_ok());
    }
}
