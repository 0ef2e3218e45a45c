use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::polycore::Poly;

/// A place of `Q(x)`: a monic irreducible polynomial or the place at infinity.
///
/// A finite place of degree `d` stands for the `d` conjugate places of `C(x)`
/// lying over it, all of which see the same valuation of a rational function.
/// Finite places order before `Infinity`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Validating constructor for a finite place.
    pub fn finite(p: Poly) -> Result<Place> {
        if !p.is_monic() || p.is_constant() || !is_irreducible(&p)? {
            return Err(Error::InvalidParameter(format!(
                "a finite place needs a monic irreducible polynomial, got {p}"
            )));
        }
        Ok(Place::Finite(p))
    }

    /// Number of places of `C(x)` over this place.
    pub fn complex_weight(&self) -> u64 {
        match self {
            Place::Finite(p) => p.deg().expect("finite place is non-zero") as u64,
            Place::Infinity => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place({self})")
    }
}

/// A finite set of places, kept in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SUnitSupport {
    places: BTreeSet<Place>,
}

impl SUnitSupport {
    pub fn new() -> SUnitSupport {
        SUnitSupport::default()
    }

    pub fn insert(&mut self, place: Place) -> bool {
        self.places.insert(place)
    }

    pub fn contains(&self, place: &Place) -> bool {
        self.places.contains(place)
    }

    pub fn extend(&mut self, other: &SUnitSupport) {
        self.places.extend(other.places.iter().cloned());
    }

    pub fn iter(&self) -> impl Iterator<Item = &Place> {
        self.places.iter()
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn is_subset(&self, other: &SUnitSupport) -> bool {
        self.places.is_subset(&other.places)
    }

    /// `|S|` counted over `C`: the sum of the complex weights.
    pub fn size_over_c(&self) -> u64 {
        self.places.iter().map(Place::complex_weight).sum()
    }
}

impl FromIterator<Place> for SUnitSupport {
    fn from_iter<I: IntoIterator<Item = Place>>(iter: I) -> Self {
        SUnitSupport {
            places: iter.into_iter().collect(),
        }
    }
}
