use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// The `code` of each variant is stable and is what the command-line
/// front-end prints in its machine-readable error object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{0}: the zero polynomial is not a valid input")]
    ZeroInput(&'static str),

    #[error("{0}: expected a non-constant polynomial")]
    ConstantInput(&'static str),

    #[error(
        "f = 0 is outside the theorem's domain: it has infinitely many solutions, \
         e.g. (n, m, p, q) = (3k, k, g, g^3) for any k >= 2 and non-constant g"
    )]
    ZeroF,

    #[error(
        "constant non-zero f is outside the theorem's domain: this case was solved by \
         Kreso and Tichy, and no solution with non-constant p, q exists"
    )]
    ConstantF,

    #[error("the identity p^n - q^m = f does not hold")]
    IdentityFailed,

    #[error("too many terms in the unit equation: {0} (at most 20 supported)")]
    TooManyTerms(usize),

    #[error("the terms of the unit equation do not sum to zero")]
    NonVanishingSum,

    #[error("unit {0} is not an S-unit for the given support")]
    NotSUnit(usize),

    #[error("degenerate parameter t = {t}: deg {which} dropped below 1")]
    DegenerateDegree { t: String, which: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroInput(_) => "zero_input",
            Error::ConstantInput(_) => "constant_input",
            Error::ZeroF => "zero_f_remark1",
            Error::ConstantF => "constant_f_remark1",
            Error::IdentityFailed => "identity_failed",
            Error::TooManyTerms(_) => "too_many_terms",
            Error::NonVanishingSum => "non_vanishing_sum",
            Error::NotSUnit(_) => "not_s_unit",
            Error::DegenerateDegree { .. } => "degenerate_degree",
            Error::InvalidParameter(_) => "invalid_parameter",
        }
    }
}
