//! The Brownawell–Masser inequality as an executable check on unit
//! equations `1 + u_1 + … + u_k = 0` over `C(x)`.

use crate::error::{Error, Result};
use crate::function_field::{height, is_s_unit, support, Place, RatFn, SUnitSupport};
use crate::polycore::Poly;

/// Largest number of non-constant-term units accepted.
pub const MAX_UNITS: usize = 20;

/// A verified instance of `1 + u_1 + … + u_k = 0` with every `u_i` an
/// S-unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitEquationInstance {
    units: Vec<RatFn>,
    support: SUnitSupport,
    genus: u32,
}

impl UnitEquationInstance {
    pub fn new(units: Vec<RatFn>, support: SUnitSupport, genus: u32) -> Result<Self> {
        if units.is_empty() {
            return Err(Error::InvalidParameter(
                "a unit equation needs k >= 1".into(),
            ));
        }
        if units.len() > MAX_UNITS {
            return Err(Error::TooManyTerms(units.len()));
        }
        let mut total = RatFn::one();
        for (i, u) in units.iter().enumerate() {
            if u.is_zero() {
                return Err(Error::ZeroInput("unit equation term"));
            }
            if !is_s_unit(u, &support)? {
                return Err(Error::NotSUnit(i + 1));
            }
            total = &total + u;
        }
        if !total.is_zero() {
            return Err(Error::NonVanishingSum);
        }
        Ok(UnitEquationInstance {
            units,
            support,
            genus,
        })
    }

    pub fn units(&self) -> &[RatFn] {
        &self.units
    }

    pub fn support(&self) -> &SUnitSupport {
        &self.support
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// The `k + 1` terms `1, u_1, …, u_k`.
    pub fn terms(&self) -> Vec<RatFn> {
        std::iter::once(RatFn::one())
            .chain(self.units.iter().cloned())
            .collect()
    }
}

/// True iff no non-empty proper subset of `{1, u_1, …, u_k}` sums to zero.
///
/// All terms are brought to a common denominator and the subsets are walked
/// in Gray-code order, so each step adds or removes one numerator.
pub fn no_vanishing_proper_subsum(instance: &UnitEquationInstance) -> bool {
    let terms = instance.terms();
    let common = terms.iter().fold(Poly::one(), |acc, t| {
        let g = acc.gcd(t.den()).expect("non-zero denominators");
        &acc * &t.den().divrem(&g).expect("non-zero gcd").0
    });
    let numerators: Vec<Poly> = terms
        .iter()
        .map(|t| &t.num().clone() * &common.divrem(t.den()).expect("non-zero denominator").0)
        .collect();
    let count = numerators.len();
    let full: u64 = (1 << count) - 1;
    let mut mask: u64 = 0;
    let mut sum = Poly::zero();
    for step in 1..(1u64 << count) {
        let bit = step.trailing_zeros() as usize;
        mask ^= 1 << bit;
        sum = if mask & (1 << bit) != 0 {
            &sum + &numerators[bit]
        } else {
            &sum - &numerators[bit]
        };
        if mask != full && sum.is_zero() {
            return false;
        }
    }
    true
}

/// `binomial(k, 2) · (|S| + max(0, 2·genus − 2))`.
pub fn bm_bound(k: u64, s_size_over_c: u64, genus: u64) -> u64 {
    let pairs = k * k.saturating_sub(1) / 2;
    pairs * (s_size_over_c + (2 * genus).saturating_sub(2))
}

/// The unit equation `1 + q^m/f − p^n/f = 0` attached to a solution of
/// `p^n − q^m = f`, with `S` the places of `f`, `p`, `q` and infinity.
pub fn pillai_instance(
    f: &Poly,
    p: &Poly,
    n: u32,
    q: &Poly,
    m: u32,
) -> Result<UnitEquationInstance> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroInput("pillai_instance"));
    }
    pillai_instance_from_powers(f, &p.pow(n), &q.pow(m))
}

/// As [`pillai_instance`], taking the powers `p^n` and `q^m` directly. This
/// covers solutions whose `p` or `q` is only defined up to a scalar outside
/// the rationals: `p` and `p^n` have the same places.
pub fn pillai_instance_from_powers(
    f: &Poly,
    p_pow: &Poly,
    q_pow: &Poly,
) -> Result<UnitEquationInstance> {
    if f.is_zero() || p_pow.is_zero() || q_pow.is_zero() {
        return Err(Error::ZeroInput("pillai_instance"));
    }
    if &(p_pow - q_pow) != f {
        return Err(Error::IdentityFailed);
    }
    let f_rat = RatFn::from_poly(f.clone());
    let mut s = support(&f_rat)?;
    s.extend(&support(&RatFn::from_poly(p_pow.clone()))?);
    s.extend(&support(&RatFn::from_poly(q_pow.clone()))?);
    s.insert(Place::Infinity);
    let first = RatFn::new(q_pow.clone(), f.clone())?;
    let second = RatFn::new(-p_pow, f.clone())?;
    UnitEquationInstance::new(vec![first, second], s, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BmReport {
    pub max_height: u64,
    pub s_size: u64,
    pub bound: u64,
    pub holds: bool,
    pub subsum_ok: bool,
}

/// Evaluates both sides of the Brownawell–Masser inequality. When
/// `subsum_ok` is true the theorem guarantees `holds`.
pub fn verify_bm(instance: &UnitEquationInstance) -> BmReport {
    let max_height = instance
        .units
        .iter()
        .map(|u| height(u).finite().expect("units are non-zero"))
        .max()
        .unwrap_or(0);
    let s_size = instance.support.size_over_c();
    let bound = bm_bound(instance.units.len() as u64, s_size, instance.genus as u64);
    BmReport {
        max_height,
        s_size,
        bound,
        holds: max_height <= bound,
        subsum_ok: no_vanishing_proper_subsum(instance),
    }
}
