//! Exact machinery for the polynomial Pillai equation `p^n - q^m = f`.
//!
//! The crate is layered bottom-up:
//!
//! * [`polycore`]: rationals and dense univariate polynomials
//! * [`factor`]: factorization over the rationals and divisor enumeration
//! * [`function_field`]: places, valuations, S-units and heights on `Q(x)`,
//!   weighted so that they count the corresponding `C(x)` quantities
//! * [`unit_equation`]: the Brownawell–Masser inequality as a checker
//! * [`pillai`]: the explicit degree/exponent bound, admissible tuples,
//!   certification, the `n = m = 2` solver and the parametric families

pub mod error;
pub mod factor;
pub mod function_field;
pub mod pillai;
pub mod polycore;
pub mod unit_equation;

pub use error::{Error, Result};
pub use polycore::{BigRat, Degree, Poly};
