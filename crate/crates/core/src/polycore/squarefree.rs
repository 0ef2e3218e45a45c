use crate::error::{Error, Result};
use crate::polycore::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactor {
    pub factor: Poly,
    pub multiplicity: u32,
}

/// Yun's algorithm over the rationals.
///
/// Returns monic, squarefree, pairwise coprime factors with strictly
/// increasing multiplicities such that `f = lc(f) · Π factor^multiplicity`.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<SquarefreeFactor>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("squarefree_decomposition"));
    }
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df)?;
    let mut b = exact(&f, &a0)?;
    let c = exact(&df, &a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        let next_b = exact(&b, &a)?;
        let c = exact(&d, &a)?;
        if !a.is_constant() {
            out.push(SquarefreeFactor {
                factor: a,
                multiplicity: i,
            });
        }
        d = &c - &next_b.derivative();
        b = next_b;
        i += 1;
    }
    Ok(out)
}

fn exact(a: &Poly, b: &Poly) -> Result<Poly> {
    let (q, r) = a.divrem(b)?;
    debug_assert!(r.is_zero());
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn repeated_linear_factor() {
        // (x-1)^2 (x+2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let sq = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            sq,
            vec![
                SquarefreeFactor {
                    factor: p(&[2, 1]),
                    multiplicity: 1
                },
                SquarefreeFactor {
                    factor: p(&[-1, 1]),
                    multiplicity: 2
                },
            ]
        );
    }

    #[test]
    fn already_squarefree() {
        let sq = squarefree_decomposition(&p(&[1, 0, 1])).unwrap();
        assert_eq!(
            sq,
            vec![SquarefreeFactor {
                factor: p(&[1, 0, 1]),
                multiplicity: 1
            }]
        );
    }

    #[test]
    fn leading_coefficient_is_dropped() {
        let f = &p(&[0, 3]).pow(3) * &p(&[1, 1]);
        let sq = squarefree_decomposition(&f).unwrap();
        assert_eq!(sq[0].factor, p(&[1, 1]));
        assert_eq!(sq[1].factor, p(&[0, 1]));
        assert_eq!(sq[1].multiplicity, 3);
    }

    #[test]
    fn constants_and_zero() {
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
        assert!(squarefree_decomposition(&Poly::zero()).is_err());
    }
}
