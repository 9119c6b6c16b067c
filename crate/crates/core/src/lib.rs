//! Exact node polynomials and their evaluation.
//!
//! The node polynomials `b_1, ..., b_8` in `(v, w1, w2)` are pushed forward
//! along three families: curves on a fixed surface (the plane in
//! particular), plane sections of a threefold in `P^4`, and curves in a
//! linear system on an Abelian surface. The resulting classes `a_q` feed the
//! Bell polynomials, giving the number of `r`-nodal curves as
//! `P_r(a_1, ..., a_r) / r!`.
//!
//! All arithmetic is exact over the rationals.

pub mod abelian;
pub mod bell;
pub mod enriques;
pub mod error;
pub mod exactpoly;
pub mod grass;
pub mod nodegen;
pub mod surface;

pub use error::{Error, Result};
pub use exactpoly::{CommutativeRing, ExactRational, SparsePolynomial};
