//! Exact coefficient arithmetic: rationals, polynomials in the parameter `t`,
//! and the fraction field of rational functions in `t` with its t-adic valuation.
//!
//! Everything here is exact; there is no floating point anywhere in the crate.
//! Rationals are backed by `num::BigRational`, which maintains the canonical
//! form (lowest terms, positive denominator, zero as 0/1).

pub(crate) mod parse;
mod tpoly;
mod tscalar;

pub use parse::{parse_rat, parse_tscalar, ParseError};
pub use tpoly::TPoly;
pub use tscalar::TScalar;

use num::BigInt;
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation of zero is undefined (+infinity)")]
    ValuationOfZero,
    #[error("not integral: t-adic valuation is negative")]
    NotIntegral,
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d == 0; use only with literal nonzero denominators.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rat(): zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Multiplicative inverse with an explicit error on zero.
pub fn rat_inv(a: &Rat) -> Result<Rat, ArithError> {
    if a == &Rat::from_integer(BigInt::from(0)) {
        return Err(ArithError::DivisionByZero);
    }
    Ok(a.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::integer::Integer;
    use num::{One, Signed, Zero};

    #[test]
    fn rational_arithmetic_is_exact_and_canonical() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat_inv(&rat(-2, 7)).unwrap(), rat(-7, 2));
        assert!(rat_inv(&rat_int(0)).is_err());
    }

    #[test]
    fn product_matches_integer_gcd_oracle() {
        // (3/4)*(8/9) reduced by hand via integer gcds: 24/36 -> 2/3.
        let p = rat(3, 4) * rat(8, 9);
        let (n, d) = (BigInt::from(3 * 8), BigInt::from(4 * 9));
        let g = n.gcd(&d);
        assert_eq!(p, Rat::new(n / &g, d / g));
        assert_eq!(p, rat(2, 3));
    }

    #[test]
    fn canonical_form_invariants() {
        let v = rat(-6, -8);
        assert!(v.denom().is_positive());
        assert!(v.numer().gcd(v.denom()).is_one());
        assert_eq!(rat(0, 5), Rat::zero());
    }
}
