//! The case `n = m = 2`: `(p − q)(p + q) = f`, so every solution with
//! rational `p ± q` comes from splitting `f` into two divisors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::monic_divisors;
use crate::pillai::domain::check_f;
use crate::pillai::solution::PillaiSolution;
use crate::polycore::{BigRat, Poly};

/// One-parameter family `p(t) = (t·g + f/(t·g))/2`, `q(t) = (f/(t·g) − t·g)/2`
/// attached to the unordered monic split `{g, monic(f)/g}`.
///
/// Swapping the two parts of the split maps `(p, q)` to `(p, −q)`, which has
/// the same square; each unordered split is therefore listed once, with the
/// smaller part (degree, then coefficients) as `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorFamily {
    f: Poly,
    g: Poly,
    cofactor: Poly,
}

impl DivisorFamily {
    /// The family for the split `{g, monic(f)/g}`; `g` must be a monic
    /// divisor of `f`.
    pub fn new(f: &Poly, g: &Poly) -> Result<DivisorFamily> {
        check_f(f)?;
        if !g.is_monic() {
            return Err(Error::InvalidParameter(format!(
                "split part {g} is not monic"
            )));
        }
        let cofactor = f
            .exact_div(g)?
            .ok_or_else(|| Error::InvalidParameter(format!("{g} does not divide {f}")))?;
        Ok(DivisorFamily {
            f: f.clone(),
            g: g.clone(),
            cofactor,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    /// The canonical (smaller) part of the split.
    pub fn g(&self) -> &Poly {
        &self.g
    }

    /// `f / g`, carrying the leading coefficient of `f`.
    pub fn cofactor(&self) -> &Poly {
        &self.cofactor
    }

    /// The split as two monic polynomials `(g, monic(f)/g)`.
    pub fn split(&self) -> (Poly, Poly) {
        (self.g.clone(), self.cofactor.monic())
    }

    pub fn p_at(&self, t: &BigRat) -> Poly {
        let half = BigRat::new(1.into(), 2.into());
        (&self.g.scale(t) + &self.cofactor.scale(&t.recip())).scale(&half)
    }

    pub fn q_at(&self, t: &BigRat) -> Poly {
        let half = BigRat::new(1.into(), 2.into());
        (&self.cofactor.scale(&t.recip()) - &self.g.scale(t)).scale(&half)
    }

    /// `p(t)` as text in the free parameter `t`.
    pub fn p_of_t(&self) -> String {
        format!("(t*({}) + ({})/t)/2", self.g, self.cofactor)
    }

    pub fn q_of_t(&self) -> String {
        format!("(({})/t - t*({}))/2", self.cofactor, self.g)
    }

    /// False when every instantiation has `deg p < 1` or `deg q < 1`, which
    /// happens iff both `g` and `f/g` are constant.
    fn has_nondegenerate_member(&self) -> bool {
        !(self.g.is_constant() && self.cofactor.is_constant())
    }

    /// The parameter `t` at which this family yields `(p, q)` or `(p, −q)`.
    pub fn parameter_for(&self, p: &Poly, q: &Poly) -> Option<BigRat> {
        for d in [p - q, p + q] {
            if d.is_zero() {
                continue;
            }
            if d.monic() == self.g {
                let t = d.lc().expect("non-zero").clone();
                let (pp, qq) = (self.p_at(&t), self.q_at(&t));
                if &pp == p && (&qq == q || qq == -q) {
                    return Some(t);
                }
            }
        }
        None
    }
}

/// All divisor families of `f`, one per unordered monic split, sorted by
/// their canonical part.
///
/// Complete for solutions where `p − q` and `p + q` are rational; splits
/// that only exist over `C` are not produced.
pub fn solve_equal_squares(f: &Poly) -> Result<Vec<DivisorFamily>> {
    check_f(f)?;
    let monic_f = f.monic();
    let mut out = Vec::new();
    for g in monic_divisors(f)? {
        let h = monic_f.exact_div(&g)?.expect("divisor divides");
        if g > h {
            continue;
        }
        let fam = DivisorFamily::new(f, &g)?;
        if fam.has_nondegenerate_member() {
            out.push(fam);
        }
    }
    Ok(out)
}

/// The member of `fam` at parameter `t`, as a solution with `n = m = 2`.
pub fn instantiate_family(fam: &DivisorFamily, t: &BigRat) -> Result<PillaiSolution> {
    if t.is_zero() {
        return Err(Error::InvalidParameter(
            "family parameter t must be non-zero".into(),
        ));
    }
    let p = fam.p_at(t);
    let q = fam.q_at(t);
    let p_bad = p.deg().is_none_or(|d| d < 1);
    let q_bad = q.deg().is_none_or(|d| d < 1);
    let which = match (p_bad, q_bad) {
        (true, true) => Some("p and q"),
        (true, false) => Some("p"),
        (false, true) => Some("q"),
        (false, false) => None,
    };
    if let Some(which) = which {
        return Err(Error::DegenerateDegree {
            t: t.to_string(),
            which,
        });
    }
    PillaiSolution::from_polys(&p, 2, &q, 2)
}
