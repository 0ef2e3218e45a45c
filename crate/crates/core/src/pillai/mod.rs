//! The polynomial Pillai equation `p^n − q^m = f` for non-constant `f`.
//!
//! * [`bound_b`] and [`admissible_tuples`]: the explicit bound on
//!   `max{n, m, deg p, deg q}` and the necessary conditions on the tuple
//! * [`certify`] / [`certify_general`]: exact verification of a candidate
//! * [`solve_equal_squares`]: all `n = m = 2` solutions with rational
//!   `p ± q`, as one-parameter divisor families
//! * [`remark2_family`]: the explicit infinite families
//! * [`grid_search`]: brute-force oracle over coefficient grids

mod domain;
mod families;
mod search;
mod solution;
mod squares;

pub use domain::{admissible_tuples, bound_b, bound_for_degree, check_f, AdmissibleTuple};
pub use families::{remark2_family, Remark2Kind};
pub use search::grid_search;
pub use solution::{certify, certify_general, PillaiSolution, Reason, ScaledPower, Verdict};
pub use squares::{instantiate_family, solve_equal_squares, DivisorFamily};

use crate::error::Result;
use crate::polycore::Poly;
use crate::unit_equation::{pillai_instance_from_powers, UnitEquationInstance};

/// The unit equation `1 + q^m/f − p^n/f = 0` of a solution.
pub fn solution_instance(f: &Poly, sol: &PillaiSolution) -> Result<UnitEquationInstance> {
    pillai_instance_from_powers(f, &sol.left.to_poly(), &sol.right.to_poly())
}
