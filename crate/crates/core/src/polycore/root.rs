use num_traits::Zero;

use crate::polycore::{BigRat, Poly};

/// Monic `n`-th root of a monic polynomial, if one exists over the rationals.
///
/// The coefficients of the candidate root are fixed top-down: the coefficient
/// of `x^(N-k)` in `h^n` is `n·h[d-k]` plus terms in already known higher
/// coefficients, so each unknown is solved linearly. The candidate is then
/// checked by a full multiplication.
pub fn nth_root_monic(g: &Poly, n: u32) -> Option<Poly> {
    assert!(n >= 2, "nth_root_monic needs n >= 2");
    if !g.is_monic() {
        return None;
    }
    let big_n = g.deg()?;
    let n_us = n as usize;
    if big_n % n_us != 0 {
        return None;
    }
    let d = big_n / n_us;
    let mut h = vec![BigRat::zero(); d + 1];
    h[d] = BigRat::from_integer(1.into());
    let n_rat = BigRat::from_integer(n.into());
    for k in 1..=d {
        let partial = Poly::new(h.clone()).pow(n);
        let known = partial.coeff(big_n - k);
        h[d - k] = (g.coeff(big_n - k) - known) / &n_rat;
    }
    let root = Poly::new(h);
    (root.pow(n) == *g).then_some(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn square_round_trip() {
        assert_eq!(nth_root_monic(&p(&[1, 2, 1]), 2), Some(p(&[1, 1])));
    }

    #[test]
    fn non_square_rejected() {
        assert_eq!(nth_root_monic(&p(&[1, 0, 1]), 2), None);
    }

    #[test]
    fn cube_round_trip() {
        let h = p(&[1, 3, 1]);
        assert_eq!(nth_root_monic(&h.pow(3), 3), Some(h));
    }

    #[test]
    fn degree_not_divisible() {
        assert_eq!(nth_root_monic(&p(&[0, 0, 0, 1]), 2), None);
    }

    #[test]
    fn constant_one_is_its_own_root() {
        assert_eq!(nth_root_monic(&Poly::one(), 3), Some(Poly::one()));
    }
}
