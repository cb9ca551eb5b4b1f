//! Univariate polynomials in the parameter `t` over exact rationals.

use super::{ArithError, Rat};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `t` with rational coefficients and finite support.
///
/// Stored as the valuation (lowest exponent with nonzero coefficient) plus the
/// coefficient run from there; the first and last stored coefficients are
/// nonzero, and zero is the empty run with valuation 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TPoly {
    val: usize,
    coeffs: Vec<Rat>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { val: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly { val: 0, coeffs: vec![c] }
        }
    }

    /// The monomial c * t^e.
    pub fn monomial(c: Rat, e: usize) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly { val: e, coeffs: vec![c] }
        }
    }

    pub fn t() -> Self {
        TPoly::monomial(Rat::one(), 1)
    }

    pub fn from_coeffs(lowest_exponent: usize, coeffs: Vec<Rat>) -> Self {
        let mut p = TPoly { val: lowest_exponent, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.val += lead_zeros;
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        if self.is_zero() { None } else { Some(self.val) }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() { None } else { Some(self.val + self.coeffs.len() - 1) }
    }

    pub fn coeff(&self, e: usize) -> Rat {
        if e < self.val || e >= self.val + self.coeffs.len() {
            Rat::zero()
        } else {
            self.coeffs[e - self.val].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Iterate over (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.val + i, c))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly { val: self.val, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            TPoly::zero()
        } else {
            TPoly { val: self.val + k, coeffs: self.coeffs.clone() }
        }
    }

    /// Divide the whole polynomial by t^k; requires valuation >= k.
    pub fn unshift(&self, k: usize) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Ok(TPoly::zero());
        }
        if self.val < k {
            return Err(ArithError::NotIntegral);
        }
        Ok(TPoly { val: self.val - k, coeffs: self.coeffs.clone() })
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => TPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        // Horner from the top, then multiply by x^val.
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let mut power = Rat::one();
        for _ in 0..self.val {
            power *= x;
        }
        acc * power
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn div_rem(&self, div: &TPoly) -> Result<(TPoly, TPoly), ArithError> {
        if div.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = div.degree().unwrap();
        let dlc = div.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = TPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &dlc;
            let qterm = TPoly::monomial(c, rd - dd);
            rem = &rem - &(&qterm * div);
            quot = &quot + &qterm;
        }
        Ok((quot, rem))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, div: &TPoly) -> Result<TPoly, ArithError> {
        let (q, r) = self.div_rem(div)?;
        if r.is_zero() { Ok(q) } else { Err(ArithError::DivisionByZero) }
    }

    /// Divide out the rational content: integer coefficients with gcd 1 and
    /// positive leading coefficient. Controls coefficient growth in remainder
    /// sequences.
    pub fn primitive_part(&self) -> TPoly {
        use num::{BigInt, Integer, Signed};
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut den = BigInt::from(1);
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::from(0);
        for c in &self.coeffs {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
        if self.coeffs.last().unwrap().is_negative() {
            num = -num;
        }
        self.scale(&Rat::new(den, num))
    }

    /// Monic gcd via a primitive remainder sequence; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        // strip the common power of t first; if either remaining part is a
        // constant the gcd is that power of t
        let (va, vb) = (self.val, other.val);
        let shared = va.min(vb);
        if self.coeffs.len() == 1 || other.coeffs.len() == 1 {
            return TPoly::monomial(Rat::one(), shared);
        }
        let mut a = self.primitive_part();
        a.val -= shared;
        let mut b = other.primitive_part();
        b.val -= shared;
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic().shift(shared)
    }

    pub fn lcm(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let g = self.gcd(other);
        (self * other).div_exact(&g).expect("gcd divides product").monic()
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.val.min(rhs.val);
        let hi = (self.val + self.coeffs.len()).max(rhs.val + rhs.coeffs.len());
        let mut coeffs = vec![Rat::zero(); hi - lo];
        for (e, c) in self.terms() {
            coeffs[e - lo] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[e - lo] += c;
        }
        TPoly::from_coeffs(lo, coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &(-rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly { val: self.val, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(self.val + rhs.val, coeffs)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && e > 0;
            if !unit_coeff {
                write!(f, "{}", abs)?;
            }
            if e > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn p(pairs: &[(i64, usize)]) -> TPoly {
        let mut acc = TPoly::zero();
        for &(c, e) in pairs {
            acc = &acc + &TPoly::monomial(rat_int(c), e);
        }
        acc
    }

    #[test]
    fn trimming_keeps_ends_nonzero() {
        let q = TPoly::from_coeffs(0, vec![rat_int(0), rat_int(2), rat_int(0)]);
        assert_eq!(q.valuation(), Some(1));
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q, TPoly::monomial(rat_int(2), 1));
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[(1, 0), (1, 1)]); // 1 + t
        let b = p(&[(1, 0), (-1, 1)]); // 1 - t
        assert_eq!(&a * &b, p(&[(1, 0), (-1, 2)]));
        let (q, r) = p(&[(1, 0), (-1, 2)]).div_rem(&a).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[(2, 1), (2, 2)]); // 2t(1+t)
        let b = p(&[(3, 0), (3, 1)]); // 3(1+t)
        assert_eq!(a.gcd(&b), p(&[(1, 0), (1, 1)]));
        assert_eq!(TPoly::zero().gcd(&b), p(&[(1, 0), (1, 1)]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[(2, 0), (3, 1)]).to_string(), "2 + 3*t");
        assert_eq!(p(&[(1, 2)]).to_string(), "t^2");
        assert_eq!(p(&[(-1, 0), (1, 3)]).to_string(), "-1 + t^3");
        assert_eq!(rat(-7, 2), -rat(7, 2));
        assert_eq!(TPoly::constant(rat(-7, 2)).to_string(), "-7/2");
    }
}
