//! Coefficient field abstraction: the residue field of exact rationals and
//! the fraction field of rational functions in t.

use crate::scalar::{Rat, TPoly, TScalar};
use num::{BigInt, Integer, One, Signed, Zero};
use std::fmt::{Debug, Display};

/// Exact field operations used by the polynomial engine.
pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` exactly on zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// Rescale a coefficient vector by a common nonzero factor into a
    /// canonical primitive form. Keeps Gröbner intermediates small; the
    /// ideal generated is unchanged.
    fn normalize_content(_coeffs: &mut [Self]) {}

    /// True when the displayed form needs parentheses inside a product.
    fn display_needs_parens(&self) -> bool {
        false
    }

    /// When the value renders with a leading minus, return its negation.
    fn display_magnitude(&self) -> Option<Self> {
        None
    }

    /// Divide a pair by a common factor (any common factor is sound); used to
    /// keep fraction-free reduction multipliers small.
    fn reduce_pair(a: &Self, b: &Self) -> (Self, Self) {
        (a.clone(), b.clone())
    }
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }

    fn one() -> Self {
        <Rat as One>::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) { None } else { Some(self.recip()) }
    }

    fn normalize_content(coeffs: &mut [Self]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den = BigInt::one();
        for c in coeffs.iter() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in coeffs.iter() {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
        if num.is_zero() {
            return;
        }
        if coeffs[0].is_negative() {
            num = -num;
        }
        let scale = Rat::new(den, num);
        for c in coeffs.iter_mut() {
            *c = &*c * &scale;
        }
    }

    fn display_magnitude(&self) -> Option<Self> {
        if self.is_negative() { Some(-self) } else { None }
    }

    fn reduce_pair(a: &Self, b: &Self) -> (Self, Self) {
        // rational pair reduction: divide by gcd of numerators, multiply by
        // gcd of denominators
        let gn = a.numer().gcd(b.numer());
        if gn.is_zero() {
            return (a.clone(), b.clone());
        }
        let gd = a.denom().lcm(b.denom());
        let scale = Rat::new(gd, gn);
        (a * &scale, b * &scale)
    }
}

impl Field for TScalar {
    fn zero() -> Self {
        TScalar::zero()
    }

    fn one() -> Self {
        TScalar::one()
    }

    fn is_zero(&self) -> bool {
        TScalar::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        TScalar::inv(self).ok()
    }

    fn normalize_content(coeffs: &mut [Self]) {
        if coeffs.is_empty() {
            return;
        }
        let mut den = TPoly::one();
        for c in coeffs.iter() {
            den = den.lcm(c.denom());
        }
        let scale = TScalar::from_tpoly(den);
        let mut gcd = TPoly::zero();
        for c in coeffs.iter() {
            let cleared = c * &scale;
            gcd = gcd.gcd(cleared.as_tpoly().expect("denominator cleared"));
        }
        if gcd.is_zero() {
            return;
        }
        let scale = &scale / &TScalar::from_tpoly(gcd);
        let mut rat_content: Vec<Rat> = Vec::new();
        for c in coeffs.iter_mut() {
            *c = &*c * &scale;
            rat_content.extend(c.as_tpoly().expect("polynomial").terms().map(|(_, r)| r.clone()));
        }
        // make the rational content of all numerators primitive as well
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for r in &rat_content {
            den = den.lcm(r.denom());
            num = num.gcd(&(r.numer() * &den / r.denom()));
        }
        if !num.is_zero() {
            let s = TScalar::from_rat(Rat::new(den, num));
            for c in coeffs.iter_mut() {
                *c = &*c * &s;
            }
        }
    }

    fn display_needs_parens(&self) -> bool {
        let s = self.to_string();
        s.contains(' ') || s.contains('/') || s.contains('*') || s.contains('^')
    }

    fn display_magnitude(&self) -> Option<Self> {
        let v = self.numer().valuation()?;
        if self.numer().coeff(v).is_negative() {
            Some(Field::neg(self))
        } else {
            None
        }
    }

    fn reduce_pair(a: &Self, b: &Self) -> (Self, Self) {
        match (a.as_tpoly(), b.as_tpoly()) {
            (Some(pa), Some(pb)) => {
                let g = pa.gcd(pb);
                if g.is_one() {
                    (a.clone(), b.clone())
                } else {
                    let gs = TScalar::from_tpoly(g);
                    (a / &gs, b / &gs)
                }
            }
            _ => (a.clone(), b.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_tscalar, rat};

    #[test]
    fn rational_content_normalization() {
        let mut v = vec![rat(-2, 3), rat(4, 9), rat(-2, 1)];
        Field::normalize_content(&mut v);
        assert_eq!(v, vec![rat(3, 1), rat(-2, 1), rat(9, 1)]);
        let mut w = vec![rat(6, 1), rat(4, 1)];
        Field::normalize_content(&mut w);
        assert_eq!(w, vec![rat(3, 1), rat(2, 1)]);
    }

    #[test]
    fn tscalar_content_normalization_clears_denominators() {
        let mut v = vec![
            parse_tscalar("t^2/(1+t)").unwrap(),
            parse_tscalar("t/2").unwrap(),
        ];
        Field::normalize_content(&mut v);
        for c in &v {
            assert!(c.as_tpoly().is_some(), "denominator not cleared: {}", c);
        }
        // common factor t is stripped
        let vals: Vec<i64> = v.iter().map(|c| c.val().unwrap()).collect();
        assert_eq!(vals.iter().min(), Some(&0));
    }
}
