//! Factorization over the rationals into monic irreducibles, and monic
//! divisor enumeration.
//!
//! The main path runs a squarefree decomposition, then factors each
//! squarefree part modulo the smallest suitable odd prime, Hensel-lifts and
//! recombines (Zassenhaus). Kronecker's method is available as an
//! independent path for small degrees.

mod kronecker;
mod modp;
mod zassenhaus;
mod zpoly;

pub use kronecker::KRONECKER_MAX_DEGREE;

use crate::error::{Error, Result};
use crate::polycore::{squarefree_decomposition, BigRat, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorMethod {
    Zassenhaus,
    Kronecker,
}

/// `unit · Π factor^exponent`, factors monic irreducible and canonically
/// sorted (degree, then coefficient lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRat,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (g, e)| {
                &acc * &g.pow(*e)
            })
    }
}

pub fn factor(f: &Poly) -> Result<Factorization> {
    factor_with(f, FactorMethod::Zassenhaus)
}

pub fn factor_with(f: &Poly, method: FactorMethod) -> Result<Factorization> {
    let unit = f.lc().ok_or(Error::ZeroInput("factor"))?.clone();
    let mut factors = Vec::new();
    for sq in squarefree_decomposition(f)? {
        let (_, prim) = sq.factor.integer_primitive();
        let parts = match method {
            FactorMethod::Zassenhaus => zassenhaus::factor_squarefree(&prim),
            FactorMethod::Kronecker => {
                if prim.len() - 1 > KRONECKER_MAX_DEGREE {
                    return Err(Error::InvalidParameter(format!(
                        "Kronecker factorization supports squarefree parts of degree <= {KRONECKER_MAX_DEGREE}"
                    )));
                }
                kronecker::factor_squarefree(&prim).ok_or_else(|| {
                    Error::InvalidParameter("Kronecker factorization: values too large".into())
                })?
            }
        };
        factors.extend(
            parts
                .iter()
                .map(|g| (Poly::from_bigints(g).monic(), sq.multiplicity)),
        );
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroInput("is_irreducible"));
    }
    if f.is_constant() {
        return Err(Error::ConstantInput("is_irreducible"));
    }
    let fac = factor(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// All monic divisors of `f`, canonically sorted. There are
/// `Π (exponent + 1)` of them.
pub fn monic_divisors(f: &Poly) -> Result<Vec<Poly>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("monic_divisors"));
    }
    divisors_of(&factor(f)?)
}

pub fn divisors_of(fac: &Factorization) -> Result<Vec<Poly>> {
    let mut out = vec![Poly::one()];
    for (g, e) in &fac.factors {
        let powers: Vec<Poly> = (0..=*e).map(|k| g.pow(k)).collect();
        out = out
            .iter()
            .flat_map(|d| powers.iter().map(move |pw| d * pw))
            .collect();
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        let fac = factor(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(fac.unit, BigRat::from_integer(1.into()));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn sum_of_squares_is_irreducible() {
        let fac = factor(&p(&[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn content_and_multiplicity() {
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[1, 1, 1])) * &p(&[6]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.unit, BigRat::from_integer(6.into()));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 1, 1]), 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn rational_coefficients() {
        // (x/2 + 1/3)(x - 3/4)
        let a = Poly::new(vec![
            BigRat::new(1.into(), 3.into()),
            BigRat::new(1.into(), 2.into()),
        ]);
        let b = Poly::new(vec![
            BigRat::new((-3).into(), 4.into()),
            BigRat::from_integer(1.into()),
        ]);
        let f = &a * &b;
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(b.clone(), 1), (a.monic(), 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&p(&[5, 1])).unwrap());
        assert!(is_irreducible(&p(&[-2, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[-1, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[0, 0, 1])).unwrap());
        assert_eq!(
            is_irreducible(&p(&[3])),
            Err(Error::ConstantInput("is_irreducible"))
        );
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(
            monic_divisors(&p(&[-1, 0, 1])).unwrap(),
            vec![p(&[1]), p(&[-1, 1]), p(&[1, 1]), p(&[-1, 0, 1])]
        );
        assert_eq!(
            monic_divisors(&p(&[1, 0, 1])).unwrap(),
            vec![p(&[1]), p(&[1, 0, 1])]
        );
        let f = &p(&[-1, 1]).pow(2) * &p(&[1, 1]);
        let ds = monic_divisors(&f).unwrap();
        assert_eq!(ds.len(), 6);
        for d in &ds {
            assert!(f.is_divisible_by(d).unwrap());
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(factor(&Poly::zero()).is_err());
        assert!(monic_divisors(&Poly::zero()).is_err());
    }

    #[test]
    fn constant_has_no_factors() {
        let fac = factor(&p(&[-7])).unwrap();
        assert!(fac.factors.is_empty());
        assert_eq!(fac.unit, BigRat::from_integer((-7).into()));
    }
}
