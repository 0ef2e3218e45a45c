//! Explicit infinite families of solutions, one free parameter `a > 0` each.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pillai::solution::{certify, PillaiSolution, ScaledPower};
use crate::polycore::{BigRat, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Remark2Kind {
    /// `f = b·x^k`, `p = (a^k + b)^(1/k)·x`, `q = a·x`, with `n = m = k`.
    MonomialK { k: u32, b: BigRat },
    /// `f = b·x`, `p = a·x + b/(4a)`, `q = a·x − b/(4a)`.
    LinearBx { b: BigRat },
    /// `f = s·x + r`, `p = a·x + ra/s + s/(4a)`, `q = a·x + ra/s − s/(4a)`.
    AffineSr { s: BigRat, r: BigRat },
    /// The affine family multiplied through by `x^ell`:
    /// `f = s·x^(2ell+1) + r·x^(2ell)`.
    ShiftedAffine { s: BigRat, r: BigRat, ell: u32 },
    /// `f = u·x^3 + t·x^2 + s·x` with `deg p = deg q = 2`.
    Cubic { u: BigRat, t: BigRat, s: BigRat },
}

impl Remark2Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Remark2Kind::MonomialK { .. } => "monomial_k",
            Remark2Kind::LinearBx { .. } => "linear_bx",
            Remark2Kind::AffineSr { .. } => "affine_sr",
            Remark2Kind::ShiftedAffine { .. } => "shifted_affine",
            Remark2Kind::Cubic { .. } => "cubic",
        }
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_string())
}

fn affine_pair(s: &BigRat, r: &BigRat, a: &BigRat) -> (Poly, Poly) {
    let four = BigRat::from_integer(4.into());
    let shift = r * a / s;
    let offset = s / (&four * a);
    let p = Poly::new(vec![&shift + &offset, a.clone()]);
    let q = Poly::new(vec![&shift - &offset, a.clone()]);
    (p, q)
}

/// The polynomial `f` of the family and its solution at parameter `a`.
/// The result is certified before it is returned.
pub fn remark2_family(kind: &Remark2Kind, a: &BigRat) -> Result<(Poly, PillaiSolution)> {
    if !a.is_positive() {
        return Err(invalid("family parameter a must be positive"));
    }
    let x = Poly::x();
    let (f, sol) = match kind {
        Remark2Kind::MonomialK { k, b } => {
            if *k < 2 {
                return Err(invalid("monomial_k needs k >= 2"));
            }
            if !b.is_positive() {
                return Err(invalid("monomial_k needs b > 0"));
            }
            let ak = num_traits::pow(a.clone(), *k as usize);
            let f = Poly::monomial(b.clone(), *k as usize);
            let left = ScaledPower::new(*k, &ak + b, x.clone())?;
            let right = ScaledPower::new(*k, ak, x)?;
            (f, PillaiSolution::new(left, right))
        }
        Remark2Kind::LinearBx { b } => {
            if b.is_zero() {
                return Err(invalid("linear_bx needs b != 0"));
            }
            let f = Poly::monomial(b.clone(), 1);
            let (p, q) = affine_pair(b, &BigRat::zero(), a);
            (f, PillaiSolution::from_polys(&p, 2, &q, 2)?)
        }
        Remark2Kind::AffineSr { s, r } => {
            if s.is_zero() {
                return Err(invalid("affine_sr needs s != 0"));
            }
            let f = Poly::new(vec![r.clone(), s.clone()]);
            let (p, q) = affine_pair(s, r, a);
            (f, PillaiSolution::from_polys(&p, 2, &q, 2)?)
        }
        Remark2Kind::ShiftedAffine { s, r, ell } => {
            if s.is_zero() {
                return Err(invalid("shifted_affine needs s != 0"));
            }
            if *ell < 1 {
                return Err(invalid("shifted_affine needs ell >= 1"));
            }
            let shift = Poly::monomial(BigRat::one(), *ell as usize);
            let f = &Poly::new(vec![r.clone(), s.clone()]) * &shift.pow(2);
            let (p, q) = affine_pair(s, r, a);
            let (p, q) = (&p * &shift, &q * &shift);
            (f, PillaiSolution::from_polys(&p, 2, &q, 2)?)
        }
        Remark2Kind::Cubic { u, t, s } => {
            if u.is_zero() {
                return Err(invalid("cubic needs u != 0"));
            }
            let four = BigRat::from_integer(4.into());
            let a2t4 = &four * a * a * t;
            let u2 = u * u;
            let denom = &four * a * u;
            let constant = a * s / u;
            let f = Poly::new(vec![BigRat::zero(), s.clone(), t.clone(), u.clone()]);
            let p = Poly::new(vec![constant.clone(), (&a2t4 + &u2) / &denom, a.clone()]);
            let q = Poly::new(vec![constant, (&a2t4 - &u2) / &denom, a.clone()]);
            (f, PillaiSolution::from_polys(&p, 2, &q, 2)?)
        }
    };
    if !certify(&f, &sol)?.is_valid() {
        return Err(Error::IdentityFailed);
    }
    Ok((f, sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn monomial_k_example() {
        let kind = Remark2Kind::MonomialK { k: 2, b: rat(1, 1) };
        let (f, sol) = remark2_family(&kind, &rat(1, 1)).unwrap();
        assert_eq!(f, p(&[0, 0, 1]));
        assert_eq!(
            sol.left,
            ScaledPower::new(2, rat(2, 1), p(&[0, 1])).unwrap()
        );
        assert_eq!(
            sol.right,
            ScaledPower::new(2, rat(1, 1), p(&[0, 1])).unwrap()
        );
    }

    #[test]
    fn cubic_example() {
        let kind = Remark2Kind::Cubic {
            u: rat(1, 1),
            t: rat(1, 1),
            s: rat(1, 1),
        };
        let (f, sol) = remark2_family(&kind, &rat(1, 1)).unwrap();
        assert_eq!(f, p(&[0, 1, 1, 1]));
        let want_p = Poly::new(vec![rat(1, 1), rat(5, 4), rat(1, 1)]);
        let want_q = Poly::new(vec![rat(1, 1), rat(3, 4), rat(1, 1)]);
        assert_eq!(
            sol,
            PillaiSolution::from_polys(&want_p, 2, &want_q, 2).unwrap()
        );
    }

    #[test]
    fn shifted_affine_example() {
        let kind = Remark2Kind::ShiftedAffine {
            s: rat(1, 1),
            r: rat(1, 1),
            ell: 1,
        };
        let (f, sol) = remark2_family(&kind, &rat(1, 1)).unwrap();
        assert_eq!(f, p(&[0, 0, 1, 1]));
        let want_p = Poly::new(vec![rat(0, 1), rat(5, 4), rat(1, 1)]);
        let want_q = Poly::new(vec![rat(0, 1), rat(3, 4), rat(1, 1)]);
        assert_eq!(
            sol,
            PillaiSolution::from_polys(&want_p, 2, &want_q, 2).unwrap()
        );
    }

    #[test]
    fn linear_bx_example() {
        let (f, sol) = remark2_family(&Remark2Kind::LinearBx { b: rat(4, 1) }, &rat(1, 1)).unwrap();
        assert_eq!(f, p(&[0, 4]));
        assert_eq!(
            sol,
            PillaiSolution::from_polys(&p(&[1, 1]), 2, &p(&[-1, 1]), 2).unwrap()
        );
    }

    #[test]
    fn parameter_domains() {
        let ok = Remark2Kind::LinearBx { b: rat(1, 1) };
        assert!(remark2_family(&ok, &rat(0, 1)).is_err());
        assert!(remark2_family(&ok, &rat(-1, 2)).is_err());
        assert!(
            remark2_family(&Remark2Kind::MonomialK { k: 1, b: rat(1, 1) }, &rat(1, 1)).is_err()
        );
        assert!(remark2_family(
            &Remark2Kind::MonomialK {
                k: 2,
                b: rat(-1, 1)
            },
            &rat(1, 1)
        )
        .is_err());
        assert!(remark2_family(
            &Remark2Kind::AffineSr {
                s: rat(0, 1),
                r: rat(1, 1)
            },
            &rat(1, 1)
        )
        .is_err());
        assert!(remark2_family(
            &Remark2Kind::ShiftedAffine {
                s: rat(1, 1),
                r: rat(1, 1),
                ell: 0
            },
            &rat(1, 1)
        )
        .is_err());
        assert!(remark2_family(
            &Remark2Kind::Cubic {
                u: rat(0, 1),
                t: rat(1, 1),
                s: rat(1, 1)
            },
            &rat(1, 1)
        )
        .is_err());
    }
}
