use super::ExactRational;

/// A commutative ring with rational scalars.
///
/// Implemented by [`ExactRational`], [`SparsePolynomial`](super::SparsePolynomial)
/// and the graded class algebras of the geometric backends, so that Bell
/// polynomials and node polynomials can be evaluated in any of them.
pub trait CommutativeRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &ExactRational) -> Self;
    fn is_zero(&self) -> bool;

    fn neg(&self) -> Self {
        self.scale(&ExactRational::from(-1))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_rational(c: &ExactRational) -> Self {
        Self::one().scale(c)
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl CommutativeRing for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn one() -> Self {
        ExactRational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &ExactRational) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
}
