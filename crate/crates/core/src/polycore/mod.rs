//! Exact rational and dense univariate polynomial arithmetic.

mod poly;
mod root;
mod squarefree;

pub use poly::{Degree, Poly};
pub use root::nth_root_monic;
pub use squarefree::{squarefree_decomposition, SquarefreeFactor};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}
