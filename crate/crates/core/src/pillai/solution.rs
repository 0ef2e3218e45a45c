use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pillai::domain::{check_f, AdmissibleTuple};
use crate::polycore::{BigRat, Poly};

/// The polynomial `scale · base^exponent` with `base` monic.
///
/// This is `p^exponent` for every `p = ζ·base` with `ζ^exponent = scale`, so
/// solutions whose `p` has an irrational leading coefficient still certify
/// with rational arithmetic only.
///
/// The constructor only enforces the structural invariants (non-zero scale,
/// monic base). `exponent >= 2` and `deg base >= 1` are solution
/// constraints, reported by [`certify`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledPower {
    exponent: u32,
    scale: BigRat,
    base: Poly,
}

impl ScaledPower {
    pub fn new(exponent: u32, scale: BigRat, base: Poly) -> Result<ScaledPower> {
        if scale.is_zero() {
            return Err(Error::InvalidParameter(
                "scaled power with zero scale".into(),
            ));
        }
        if !base.is_monic() {
            return Err(Error::InvalidParameter(format!(
                "scaled power base must be monic, got {base}"
            )));
        }
        Ok(ScaledPower {
            exponent,
            scale,
            base,
        })
    }

    /// `p^exponent` for a rational polynomial `p`: scale `lc(p)^exponent`,
    /// base the monic part of `p`.
    pub fn from_poly(p: &Poly, exponent: u32) -> Result<ScaledPower> {
        let lc = p.lc().ok_or(Error::ZeroInput("scaled power"))?;
        let scale = num_traits::pow(lc.clone(), exponent as usize);
        ScaledPower::new(exponent, scale, p.monic())
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn scale(&self) -> &BigRat {
        &self.scale
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    /// Degree of the base, i.e. of any `p` this power represents.
    pub fn base_degree(&self) -> usize {
        self.base.deg().expect("monic base is non-zero")
    }

    pub fn to_poly(&self) -> Poly {
        self.base.pow(self.exponent).scale(&self.scale)
    }

    /// The rational `p` with `p^exponent = self` and leading coefficient of
    /// the given sign, if the scale is a perfect rational power.
    pub fn rational_root(&self) -> Option<Poly> {
        let root = rational_nth_root(&self.scale, self.exponent)?;
        Some(self.base.scale(&root))
    }
}

/// A rational `r > 0` (or `r < 0` for odd `n`) with `r^n = x`, if any.
fn rational_nth_root(x: &BigRat, n: u32) -> Option<BigRat> {
    use num_traits::Signed;
    if n == 0 {
        return None;
    }
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let num = x.numer().abs().nth_root(n);
    let den = x.denom().nth_root(n);
    let r = BigRat::new(num, den);
    let r = if x.is_negative() { -r } else { r };
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

impl fmt::Display for ScaledPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_one() {
            write!(f, "({})^{}", self.base, self.exponent)
        } else {
            write!(f, "{}*({})^{}", self.scale, self.base, self.exponent)
        }
    }
}

/// A solution of `p^n − q^m = f`: `left` represents `p^n`, `right` `q^m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PillaiSolution {
    pub left: ScaledPower,
    pub right: ScaledPower,
}

impl PillaiSolution {
    pub fn new(left: ScaledPower, right: ScaledPower) -> PillaiSolution {
        PillaiSolution { left, right }
    }

    /// Solution with rational `p` and `q`.
    pub fn from_polys(p: &Poly, n: u32, q: &Poly, m: u32) -> Result<PillaiSolution> {
        Ok(PillaiSolution {
            left: ScaledPower::from_poly(p, n)?,
            right: ScaledPower::from_poly(q, m)?,
        })
    }

    pub fn n(&self) -> u32 {
        self.left.exponent
    }

    pub fn m(&self) -> u32 {
        self.right.exponent
    }

    /// `(n, m, deg p, deg q)`.
    pub fn tuple(&self) -> AdmissibleTuple {
        AdmissibleTuple::new(
            self.left.exponent,
            self.right.exponent,
            self.left.base_degree() as u32,
            self.right.base_degree() as u32,
        )
    }

    /// `max{n, m, deg p, deg q}`.
    pub fn max_parameter(&self) -> u64 {
        let t = self.tuple();
        t.n.max(t.m).max(t.dp).max(t.dq) as u64
    }
}

impl fmt::Display for PillaiSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.left, self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    IdentityFailed,
    ExponentTooSmall,
    DegreeTooSmall,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::IdentityFailed => "identity_failed",
            Reason::ExponentTooSmall => "exponent_too_small",
            Reason::DegreeTooSmall => "degree_too_small",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Reason),
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }

    pub fn reason(self) -> Option<Reason> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(r) => Some(r),
        }
    }
}

fn check_shape(sol: &PillaiSolution) -> Option<Reason> {
    if sol.left.exponent < 2 || sol.right.exponent < 2 {
        return Some(Reason::ExponentTooSmall);
    }
    if sol.left.base_degree() < 1 || sol.right.base_degree() < 1 {
        return Some(Reason::DegreeTooSmall);
    }
    None
}

/// Checks `p^n − q^m = f` exactly, together with `n, m >= 2` and
/// `deg p, deg q >= 1`.
pub fn certify(f: &Poly, sol: &PillaiSolution) -> Result<Verdict> {
    check_f(f)?;
    if let Some(r) = check_shape(sol) {
        return Ok(Verdict::Invalid(r));
    }
    if &(sol.left.to_poly() - sol.right.to_poly()) != f {
        return Ok(Verdict::Invalid(Reason::IdentityFailed));
    }
    Ok(Verdict::Valid)
}

/// Checks `a·p^n + b·q^m = f` with the same shape constraints as
/// [`certify`].
pub fn certify_general(a: &Poly, b: &Poly, f: &Poly, sol: &PillaiSolution) -> Result<Verdict> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput("certify_general coefficient"));
    }
    check_f(f)?;
    if let Some(r) = check_shape(sol) {
        return Ok(Verdict::Invalid(r));
    }
    if &(&(a * &sol.left.to_poly()) + &(b * &sol.right.to_poly())) != f {
        return Ok(Verdict::Invalid(Reason::IdentityFailed));
    }
    Ok(Verdict::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn sp(e: u32, s: i64, base: &[i64]) -> ScaledPower {
        ScaledPower::new(e, rat(s, 1), p(base)).unwrap()
    }

    #[test]
    fn linear_family_certifies() {
        let sol = PillaiSolution::new(sp(2, 1, &[1, 1]), sp(2, 1, &[-1, 1]));
        assert_eq!(certify(&p(&[0, 4]), &sol).unwrap(), Verdict::Valid);
    }

    #[test]
    fn irrational_scalar_certifies() {
        // (sqrt(2) x)^2 - x^2 = x^2
        let sol = PillaiSolution::new(sp(2, 2, &[0, 1]), sp(2, 1, &[0, 1]));
        assert_eq!(certify(&p(&[0, 0, 1]), &sol).unwrap(), Verdict::Valid);
        assert_eq!(sol.left.rational_root(), None);
    }

    #[test]
    fn wrong_identity() {
        let sol = PillaiSolution::new(sp(2, 1, &[1, 1]), sp(2, 1, &[0, 1]));
        assert_eq!(
            certify(&p(&[0, 4]), &sol).unwrap(),
            Verdict::Invalid(Reason::IdentityFailed)
        );
    }

    #[test]
    fn shape_reasons() {
        let low_exp = PillaiSolution::new(sp(1, 1, &[4, 1]), sp(2, 1, &[0, 1]));
        assert_eq!(
            certify(&p(&[4, 1, 0]), &low_exp).unwrap().reason(),
            Some(Reason::ExponentTooSmall)
        );
        let low_deg = PillaiSolution::new(sp(2, 1, &[1]), sp(2, 1, &[0, 1]));
        assert_eq!(
            certify(&p(&[1, 0, -1]), &low_deg).unwrap().reason(),
            Some(Reason::DegreeTooSmall)
        );
    }

    #[test]
    fn certify_rejects_constant_f() {
        let sol = PillaiSolution::new(sp(2, 1, &[1, 1]), sp(2, 1, &[-1, 1]));
        assert_eq!(certify(&p(&[3]), &sol), Err(Error::ConstantF));
        assert_eq!(certify(&Poly::zero(), &sol), Err(Error::ZeroF));
    }

    #[test]
    fn general_equation() {
        let sol = PillaiSolution::new(sp(2, 1, &[1, 1]), sp(2, 1, &[-1, 1]));
        let one = p(&[1]);
        let minus_one = p(&[-1]);
        assert!(certify_general(&one, &minus_one, &p(&[0, 4]), &sol)
            .unwrap()
            .is_valid());
        assert!(
            certify_general(&p(&[0, 1]), &p(&[0, -1]), &p(&[0, 0, 4]), &sol)
                .unwrap()
                .is_valid()
        );
        assert!(certify_general(&one, &one, &p(&[2, 0, 2]), &sol)
            .unwrap()
            .is_valid());
        assert!(certify_general(&Poly::zero(), &one, &p(&[0, 4]), &sol).is_err());
    }

    #[test]
    fn from_poly_and_roots() {
        let q = p(&[-3, 6]);
        let s = ScaledPower::from_poly(&q, 2).unwrap();
        assert_eq!(s.scale(), &rat(36, 1));
        assert_eq!(s.base(), &Poly::new(vec![rat(-1, 2), rat(1, 1)]));
        assert_eq!(s.to_poly(), q.pow(2));
        assert_eq!(s.rational_root(), Some(q));
        let cube = ScaledPower::from_poly(&p(&[1, -2]), 3).unwrap();
        assert_eq!(cube.rational_root(), Some(p(&[1, -2])));
    }

    #[test]
    fn constructor_validation() {
        assert!(ScaledPower::new(2, rat(0, 1), p(&[0, 1])).is_err());
        assert!(ScaledPower::new(2, rat(1, 1), p(&[0, 2])).is_err());
        assert!(ScaledPower::from_poly(&Poly::zero(), 2).is_err());
    }
}
