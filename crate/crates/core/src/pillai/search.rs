use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pillai::domain::{check_f, AdmissibleTuple};
use crate::pillai::solution::{PillaiSolution, ScaledPower};
use crate::polycore::{nth_root_monic, BigRat, Poly};

/// Brute-force oracle: tries every `q` of degree `tuple.dq` with all
/// coefficients drawn from `grid` and keeps those for which `q^m + f` is a
/// scalar times the `n`-th power of a monic polynomial of degree `tuple.dp`.
///
/// Only rational `q` on the grid are examined; this is a test oracle, not a
/// solver over `C`. Output is sorted and deduplicated.
pub fn grid_search(
    f: &Poly,
    tuple: &AdmissibleTuple,
    grid: &[BigRat],
) -> Result<Vec<PillaiSolution>> {
    check_f(f)?;
    let grid: Vec<BigRat> = grid
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if grid.is_empty() {
        return Err(Error::InvalidParameter(
            "grid_search needs a non-empty grid".into(),
        ));
    }
    if tuple.n < 2 || tuple.m < 2 || tuple.dp < 1 || tuple.dq < 1 {
        return Ok(Vec::new());
    }
    let leading: Vec<&BigRat> = grid.iter().filter(|c| !c.is_zero()).collect();
    let len = tuple.dq as usize + 1;
    let target = tuple.n as usize * tuple.dp as usize;
    let mut found = BTreeSet::new();
    // odometer over the lower coefficients, outer loop over the leading one
    for lead in leading {
        let mut idx = vec![0usize; len - 1];
        loop {
            let mut coeffs: Vec<BigRat> = idx.iter().map(|&i| grid[i].clone()).collect();
            coeffs.push(lead.clone());
            let q = Poly::new(coeffs);
            let g = &q.pow(tuple.m) + f;
            if g.deg() == Some(target) {
                if let Some(h) = nth_root_monic(&g.monic(), tuple.n) {
                    let lc = g.lc().expect("non-zero").clone();
                    found.insert(PillaiSolution::new(
                        ScaledPower::new(tuple.n, lc, h)?,
                        ScaledPower::from_poly(&q, tuple.m)?,
                    ));
                }
            }
            let Some(pos) = idx.iter().position(|&i| i + 1 < grid.len()) else {
                break;
            };
            idx[pos] += 1;
            for i in idx.iter_mut().take(pos) {
                *i = 0;
            }
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pillai::certify;
    use crate::polycore::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn int_grid(lo: i64, hi: i64) -> Vec<BigRat> {
        (lo..=hi).map(|c| rat(c, 1)).collect()
    }

    #[test]
    fn finds_linear_solution_for_four_x() {
        let sols = grid_search(
            &p(&[0, 4]),
            &AdmissibleTuple::new(2, 2, 1, 1),
            &int_grid(-2, 2),
        )
        .unwrap();
        let want = PillaiSolution::from_polys(&p(&[1, 1]), 2, &p(&[-1, 1]), 2).unwrap();
        assert!(sols.contains(&want));
        for s in &sols {
            assert!(certify(&p(&[0, 4]), s).unwrap().is_valid());
        }
    }

    #[test]
    fn every_hit_certifies() {
        let f = p(&[1, 1, 1]);
        let sols = grid_search(&f, &AdmissibleTuple::new(2, 2, 1, 1), &int_grid(-3, 3)).unwrap();
        for s in &sols {
            assert!(certify(&f, s).unwrap().is_valid());
        }
    }

    #[test]
    fn unrealizable_tuple_is_empty() {
        let sols = grid_search(
            &p(&[0, 4]),
            &AdmissibleTuple::new(3, 2, 1, 1),
            &int_grid(-3, 3),
        )
        .unwrap();
        assert!(sols.is_empty());
    }

    #[test]
    fn empty_grid_rejected() {
        assert!(grid_search(&p(&[0, 4]), &AdmissibleTuple::new(2, 2, 1, 1), &[]).is_err());
    }
}
