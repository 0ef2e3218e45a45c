//! Minimal integer-coefficient polynomial helpers (constant term first).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) => x + y,
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => BigInt::zero(),
            })
            .collect(),
    )
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let neg: ZPoly = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    trim(a.iter().map(|x| x * c).collect())
}

/// Coefficients reduced into `[0, m)`.
pub(crate) fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(a: &[BigInt]) -> ZPoly {
    let Some(lc) = a.last() else {
        return Vec::new();
    };
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if lc.is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Exact quotient over the integers, `None` when `b` does not divide `a`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let lb = b.last()?;
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rem = a.to_vec();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    for k in (0..quo.len()).rev() {
        let (c, r) = rem[k + db].div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                rem[k + j] -= &c * y;
            }
        }
        quo[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn exact_division() {
        let a = mul(&z(&[1, 2]), &z(&[-3, 0, 5]));
        assert_eq!(exact_div(&a, &z(&[1, 2])), Some(z(&[-3, 0, 5])));
        assert_eq!(exact_div(&a, &z(&[1, 1])), None);
        assert_eq!(exact_div(&z(&[1, 0, 1]), &z(&[0, 2])), None);
    }

    #[test]
    fn primitive_part() {
        assert_eq!(primitive(&z(&[4, -6, -2])), z(&[-2, 3, 1]));
    }
}
