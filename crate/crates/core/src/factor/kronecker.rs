//! Kronecker's interpolation method. Exponential in the degree and only used
//! as a cross-check of the modular path on small inputs.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::zpoly::{self, ZPoly};
use crate::polycore::{BigRat, Poly};

/// Largest squarefree degree accepted by the fallback.
pub const KRONECKER_MAX_DEGREE: usize = 8;

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive integer polynomial. `None` if an evaluation is too
/// large to enumerate its divisors.
pub(crate) fn factor_squarefree(f: &ZPoly) -> Option<Vec<ZPoly>> {
    if f.len() <= 2 {
        return Some(vec![f.clone()]);
    }
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        if let Some(g) = find_factor(f, d)? {
            let h = zpoly::exact_div(f, &g).expect("found factor divides");
            let mut out = factor_squarefree(&g)?;
            out.extend(factor_squarefree(&zpoly::primitive(&h))?);
            return Some(out);
        }
    }
    Some(vec![f.clone()])
}

fn eval(f: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

fn divisors(v: &BigInt) -> Option<Vec<i128>> {
    let v = v.abs().to_u128()?;
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= v {
        if v % d == 0 {
            out.push(d as i128);
            if d * d != v {
                out.push((v / d) as i128);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Searches for a factor of exact degree `d`. Outer `None` means an
/// evaluation was too large; inner `None` means no factor of that degree.
fn find_factor(f: &ZPoly, d: usize) -> Option<Option<ZPoly>> {
    let n = f.len() - 1;
    let mut candidates: Vec<(i64, BigInt)> = Vec::new();
    let span = (n + d + 4) as i64;
    for a in (0..=span).flat_map(|a| if a == 0 { vec![0] } else { vec![a, -a] }) {
        let v = eval(f, a);
        if v.is_zero() {
            // a is a root, so x - a is a factor
            return Some(Some(vec![BigInt::from(-a), BigInt::one()]));
        }
        candidates.push((a, v));
    }
    let mut scored = Vec::new();
    for (a, v) in candidates {
        if let Some(ds) = divisors(&v) {
            scored.push((ds.len(), a, ds));
        }
    }
    if scored.len() < d + 1 {
        return None;
    }
    scored.sort_by_key(|(len, a, _)| (*len, a.abs(), *a));
    let points: Vec<(i64, Vec<i128>)> = scored
        .into_iter()
        .take(d + 1)
        .map(|(_, a, ds)| (a, ds))
        .collect();

    // choice[i] indexes into the signed divisors of point i; the first point
    // only takes positive divisors since g and -g are the same factor
    let sizes: Vec<usize> = points
        .iter()
        .enumerate()
        .map(|(i, (_, ds))| if i == 0 { ds.len() } else { 2 * ds.len() })
        .collect();
    let mut choice = vec![0usize; points.len()];
    loop {
        let values: Vec<i128> = points
            .iter()
            .zip(&choice)
            .enumerate()
            .map(|(i, ((_, ds), &c))| {
                if i == 0 || c < ds.len() {
                    ds[c % ds.len()]
                } else {
                    -ds[c - ds.len()]
                }
            })
            .collect();
        if let Some(g) = interpolate(&points, &values, d) {
            if zpoly::exact_div(f, &g).is_some() {
                return Some(Some(zpoly::primitive(&g)));
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Some(None);
            }
            choice[i] += 1;
            if choice[i] < sizes[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Lagrange interpolation through `(a_i, values_i)`; returns the integer
/// polynomial if it has integer coefficients and degree exactly `d`.
fn interpolate(points: &[(i64, Vec<i128>)], values: &[i128], d: usize) -> Option<ZPoly> {
    let mut acc = Poly::zero();
    for (i, ((ai, _), vi)) in points.iter().zip(values).enumerate() {
        let mut basis = Poly::constant(BigRat::from_integer((*vi).into()));
        for (j, (aj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let lin = Poly::new(vec![BigRat::from_integer((-*aj).into()), BigRat::one()]);
            let denom = BigRat::from_integer((ai - aj).into());
            basis = (&basis * &lin).scale(&denom.recip());
        }
        acc = &acc + &basis;
    }
    if acc.deg() != Some(d) || acc.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(acc.coeffs().iter().map(|c| c.to_integer()).collect())
}
