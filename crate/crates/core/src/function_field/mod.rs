//! Places, valuations, S-units and the height on the rational function field.
//!
//! All computations are exact over `Q(x)`. Quantities that live on `C(x)`
//! (heights, `|S|`, the sum formula) are obtained by weighting each rational
//! place with the number of complex places above it.

mod place;
mod ratfn;

pub use place::{Place, SUnitSupport};
pub use ratfn::RatFn;

use std::fmt;

use crate::error::{Error, Result};
use crate::factor::factor;
use crate::polycore::Poly;

/// Height of an element of `Q(x)`. The height of zero is `Infinite`.
///
/// There is deliberately no `Ord` impl: callers compare finite values via
/// [`Height::finite`] and decide explicitly what infinity means for them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Height {
    Finite(u64),
    Infinite,
}

impl Height {
    pub fn finite(self) -> Option<u64> {
        match self {
            Height::Finite(h) => Some(h),
            Height::Infinite => None,
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{h}"),
            Height::Infinite => f.write_str("inf"),
        }
    }
}

fn nonzero<'a>(f: &'a RatFn, op: &'static str) -> Result<&'a RatFn> {
    if f.is_zero() {
        Err(Error::ZeroInput(op))
    } else {
        Ok(f)
    }
}

fn multiplicity(mut a: Poly, p: &Poly) -> Result<i64> {
    let mut k = 0;
    while let Some(q) = a.exact_div(p)? {
        a = q;
        k += 1;
    }
    Ok(k)
}

fn degree_of(p: &Poly) -> i64 {
    p.deg().expect("non-zero polynomial") as i64
}

/// `ν_v(f)`: order of `f` at the place `v`. At infinity this is
/// `deg den − deg num`.
pub fn valuation(f: &RatFn, v: &Place) -> Result<i64> {
    nonzero(f, "valuation")?;
    match v {
        Place::Finite(p) => {
            Ok(multiplicity(f.num().clone(), p)? - multiplicity(f.den().clone(), p)?)
        }
        Place::Infinity => Ok(degree_of(f.den()) - degree_of(f.num())),
    }
}

/// Every place with non-zero valuation, paired with that valuation, in
/// canonical place order. Read off the factorizations of numerator and
/// denominator.
pub fn places_with_valuations(f: &RatFn) -> Result<Vec<(Place, i64)>> {
    nonzero(f, "places_with_valuations")?;
    let mut out: Vec<(Place, i64)> = Vec::new();
    for (g, e) in factor(f.num())?.factors {
        out.push((Place::Finite(g), e as i64));
    }
    for (g, e) in factor(f.den())?.factors {
        out.push((Place::Finite(g), -(e as i64)));
    }
    let at_inf = degree_of(f.den()) - degree_of(f.num());
    if at_inf != 0 {
        out.push((Place::Infinity, at_inf));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// The smallest set `S` for which `f` is an S-unit.
pub fn support(f: &RatFn) -> Result<SUnitSupport> {
    Ok(places_with_valuations(f)?
        .into_iter()
        .map(|(v, _)| v)
        .collect())
}

/// `Σ weight(v)·ν_v(f)` over the support of `f`; zero by the sum formula.
pub fn sum_defect(f: &RatFn) -> Result<i64> {
    let mut total = 0;
    for v in support(f)?.iter() {
        total += v.complex_weight() as i64 * valuation(f, v)?;
    }
    Ok(total)
}

/// `Σ weight(v)·max(0, ν_v(f))`, computed from the places.
pub fn height_by_places(f: &RatFn) -> Result<Height> {
    if f.is_zero() {
        return Ok(Height::Infinite);
    }
    let h = places_with_valuations(f)?
        .iter()
        .map(|(v, e)| v.complex_weight() * (*e).max(0) as u64)
        .sum();
    Ok(Height::Finite(h))
}

/// `max(deg num, deg den)` for a reduced quotient.
pub fn height_by_degrees(f: &RatFn) -> Height {
    if f.is_zero() {
        return Height::Infinite;
    }
    Height::Finite(degree_of(f.num()).max(degree_of(f.den())) as u64)
}

/// Height of `f`. Debug builds also run the place sum and check that both
/// routes agree.
pub fn height(f: &RatFn) -> Height {
    let h = height_by_degrees(f);
    if cfg!(debug_assertions) {
        let by_places = height_by_places(f).expect("factorization of a non-zero input");
        assert_eq!(h, by_places, "height routes disagree on {f}");
    }
    h
}

pub fn is_s_unit(f: &RatFn, s: &SUnitSupport) -> Result<bool> {
    nonzero(f, "is_s_unit")?;
    Ok(support(f)?.is_subset(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFn {
        RatFn::new(p(n), p(d)).unwrap()
    }

    fn fin(c: &[i64]) -> Place {
        Place::finite(p(c)).unwrap()
    }

    #[test]
    fn valuation_examples() {
        let f = rf(&[0, 0, 1], &[-1, 1]);
        assert_eq!(valuation(&f, &fin(&[0, 1])).unwrap(), 2);
        assert_eq!(valuation(&f, &fin(&[-1, 1])).unwrap(), -1);
        assert_eq!(valuation(&f, &Place::Infinity).unwrap(), -1);
        let g = rf(&[1, 0, 1], &[0, 1]);
        assert_eq!(valuation(&g, &fin(&[1, 0, 1])).unwrap(), 1);
        assert_eq!(valuation(&g, &fin(&[1, 1])).unwrap(), 0);
        assert!(valuation(&RatFn::zero(), &Place::Infinity).is_err());
    }

    #[test]
    fn support_examples() {
        let g = rf(&[1, 0, 1], &[0, 1]);
        let s = support(&g).unwrap();
        let want: SUnitSupport = [fin(&[0, 1]), fin(&[1, 0, 1]), Place::Infinity]
            .into_iter()
            .collect();
        assert_eq!(s, want);
        assert_eq!(s.size_over_c(), 4);
        assert!(support(&rf(&[5], &[1])).unwrap().is_empty());
        let x = support(&rf(&[0, 1], &[1])).unwrap();
        assert_eq!(x.size_over_c(), 2);
    }

    #[test]
    fn sum_formula_examples() {
        assert_eq!(sum_defect(&rf(&[1, 0, 1], &[0, 1])).unwrap(), 0);
        assert_eq!(sum_defect(&rf(&[7], &[1])).unwrap(), 0);
        assert_eq!(sum_defect(&rf(&[3, 1, 0, 2], &[1, 0, 0, 0, 1])).unwrap(), 0);
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&rf(&[1, 0, 1], &[0, 1])), Height::Finite(2));
        assert_eq!(
            height_by_places(&rf(&[1, 0, 1], &[0, 1])).unwrap(),
            Height::Finite(2)
        );
        assert_eq!(height(&rf(&[-3], &[4])), Height::Finite(0));
        assert_eq!(height(&RatFn::zero()), Height::Infinite);
        assert_eq!(Height::Infinite.finite(), None);
    }

    #[test]
    fn s_unit_examples() {
        let s: SUnitSupport = [fin(&[0, 1]), Place::Infinity].into_iter().collect();
        assert!(is_s_unit(&rf(&[0, 1], &[1]), &s).unwrap());
        assert!(!is_s_unit(&rf(&[1, 1], &[1]), &s).unwrap());
        assert!(is_s_unit(&rf(&[3], &[1]), &SUnitSupport::new()).unwrap());
        assert!(is_s_unit(&RatFn::zero(), &s).is_err());
    }

    #[test]
    fn place_validation() {
        assert!(Place::finite(p(&[-1, 0, 1])).is_err());
        assert!(Place::finite(p(&[2, 2])).is_err());
        assert_eq!(fin(&[1, 0, 1]).complex_weight(), 2);
        assert_eq!(Place::Infinity.complex_weight(), 1);
        assert!(fin(&[0, 1]) < Place::Infinity);
    }
}
