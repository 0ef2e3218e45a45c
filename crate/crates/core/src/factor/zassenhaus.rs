//! Factorization of squarefree primitive integer polynomials: factor modulo a
//! prime, Hensel-lift to a power of that prime, recombine lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, FpPoly};
use super::zpoly::{self, ZPoly};

const RNG_SEED: u64 = 0x5eed_f00d;

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive integer polynomial of degree ≥ 1.
pub(crate) fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    let mut p = 3u64;
    loop {
        p = next_prime_from(p);
        if let Some(fp_factors) = modular_factors(f, p) {
            if fp_factors.len() == 1 {
                return vec![f.clone()];
            }
            if let Some(out) = lift_and_recombine(f, p, fp_factors) {
                return out;
            }
        }
        p += 2;
    }
}

fn next_prime_from(mut p: u64) -> u64 {
    while !is_prime(p) {
        p += 1;
    }
    p
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_mod_p(f: &ZPoly, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut out: FpPoly = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits u64"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Monic irreducible factors of `f mod p`, or `None` if `p` divides the
/// leading coefficient or `f mod p` is not squarefree.
fn modular_factors(f: &ZPoly, p: u64) -> Option<Vec<FpPoly>> {
    let fp = Fp::new(p);
    let fbar = reduce_mod_p(f, p);
    if fbar.len() != f.len() {
        return None;
    }
    let g = fp.gcd(&fbar, &fp.derivative(&fbar));
    if g.len() != 1 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED ^ p);
    Some(fp.factor_squarefree(&fp.monic(&fbar), &mut rng))
}

/// Bound on the coefficients of `lc(f) · g / lc(g)` for any factor `g` of
/// `f` (Mignotte, with `sqrt(n+1)` replaced by `n+1`).
fn coefficient_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let max = f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let lc = f.last().unwrap().abs();
    (BigInt::one() << n) * BigInt::from(n + 1) * max * lc
}

fn lift_and_recombine(f: &ZPoly, p: u64, factors: Vec<FpPoly>) -> Option<Vec<ZPoly>> {
    let bound = coefficient_bound(f) * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lc = f.last().unwrap().clone();
    let lc_inv = mod_inverse(&lc, &modulus)?;
    let monic_f = zpoly::reduce(&zpoly::scale(f, &lc_inv), &modulus);
    let lifted = lift_all(&monic_f, &factors, p, k);
    for g in &lifted {
        if g.last() != Some(&BigInt::one()) {
            return None;
        }
    }
    Some(recombine(f, lifted, &modulus))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() && e.gcd != -BigInt::one() {
        return None;
    }
    Some((e.x * e.gcd).mod_floor(m))
}

fn to_fp(a: &FpPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts the factorization `f ≡ Π factors (mod p)` of a monic `f` to
/// `mod p^k`, returning monic lifted factors in the same order.
fn lift_all(f: &ZPoly, factors: &[FpPoly], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let fp = Fp::new(p);
    let rest = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, g| fp.mul(&acc, g));
    let (g, h) = lift_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(lift_all(&h, &factors[1..], p, k));
    out
}

/// Linear Hensel lifting of `f ≡ g·h (mod p)` with `g`, `h` monic and
/// coprime mod `p`, to monic `G`, `H` with `f ≡ G·H (mod p^k)`.
fn lift_pair(f: &ZPoly, g: &FpPoly, h: &FpPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let fp = Fp::new(p);
    let (s, t) = fp.bezout(g, h);
    let pb = BigInt::from(p);
    let mut big_g = to_fp(g);
    let mut big_h = to_fp(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let err = zpoly::reduce(&zpoly::sub(f, &zpoly::mul(&big_g, &big_h)), &next);
        let e: FpPoly = {
            let mut v: FpPoly = err
                .iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero());
                    (c / &pj).mod_floor(&pb).to_u64().unwrap()
                })
                .collect();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        let se = fp.mul(&s, &e);
        let (q, sigma) = fp.divrem(&se, h);
        let tau = fp.add(&fp.mul(&t, &e), &fp.mul(&q, g));
        big_g = zpoly::add(&big_g, &zpoly::scale(&to_fp(&tau), &pj));
        big_h = zpoly::add(&big_h, &zpoly::scale(&to_fp(&sigma), &pj));
        pj = next;
    }
    (zpoly::reduce(&big_g, &pj), zpoly::reduce(&big_h, &pj))
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    zpoly::trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = rest.last().unwrap().clone();
        for subset in combinations(lifted.len(), size) {
            let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| {
                zpoly::reduce(&zpoly::mul(&acc, &lifted[i]), modulus)
            });
            let candidate = zpoly::primitive(&symmetric(&prod, modulus));
            if candidate.len() < 2 {
                continue;
            }
            if let Some(q) = zpoly::exact_div(&rest, &candidate) {
                out.push(candidate);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(zpoly::primitive(&rest));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn combinations_enumerate_all() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(5, 1).len(), 5);
    }

    #[test]
    fn swinnerton_dyer_like_quartic_stays_irreducible() {
        // x^4 - 10x^2 + 1 splits into linear or quadratic factors mod every prime
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree(&f), vec![f]);
    }

    #[test]
    fn splits_integer_product() {
        // (2x + 1)(x^2 - 2)(3x - 5)
        let a = z(&[1, 2]);
        let b = z(&[-2, 0, 1]);
        let c = z(&[-5, 3]);
        let f = zpoly::mul(&zpoly::mul(&a, &b), &c);
        let mut got = factor_squarefree(&f);
        got.sort_by_key(|g| (g.len(), g.clone()));
        let mut want = vec![a, b, c];
        want.sort_by_key(|g| (g.len(), g.clone()));
        assert_eq!(got, want);
    }
}
