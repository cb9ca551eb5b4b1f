//! Rational functions in `t`: the computable model of the valued field and of
//! its valuation ring (elements of nonnegative valuation).

use super::{ArithError, Rat, TPoly};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Element of the fraction field of `Q[t]`, stored reduced with monic denominator.
///
/// The element lies in the local ring at t = 0 exactly when `val() >= 0`; the
/// uniformiser is `TScalar::t()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TScalar {
    num: TPoly,
    den: TPoly,
}

impl TScalar {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let mut s = TScalar { num, den };
        s.reduce();
        Ok(s)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = TPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides");
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
        let lc = self.den.leading_coeff().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn zero() -> Self {
        TScalar { num: TPoly::zero(), den: TPoly::one() }
    }

    pub fn one() -> Self {
        TScalar { num: TPoly::one(), den: TPoly::one() }
    }

    pub fn t() -> Self {
        TScalar { num: TPoly::t(), den: TPoly::one() }
    }

    /// t^k for any integer k, negative exponents included.
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            TScalar { num: TPoly::monomial(Rat::one(), k as usize), den: TPoly::one() }
        } else {
            TScalar { num: TPoly::one(), den: TPoly::monomial(Rat::one(), (-k) as usize) }
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        TScalar { num: TPoly::constant(c), den: TPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        TScalar::from_rat(super::rat_int(n))
    }

    pub fn from_tpoly(p: TPoly) -> Self {
        TScalar { num: p, den: TPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numer(&self) -> &TPoly {
        &self.num
    }

    pub fn denom(&self) -> &TPoly {
        &self.den
    }

    /// The polynomial content when the denominator is 1.
    pub fn as_tpoly(&self) -> Option<&TPoly> {
        if self.den.is_one() { Some(&self.num) } else { None }
    }

    /// t-adic valuation; errors on zero.
    pub fn val(&self) -> Result<i64, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ValuationOfZero);
        }
        Ok(self.num.valuation().unwrap() as i64 - self.den.valuation().unwrap() as i64)
    }

    /// Membership in the valuation ring (valuation >= 0); zero is integral.
    pub fn is_integral(&self) -> bool {
        self.is_zero() || self.val().unwrap() >= 0
    }

    /// Unit of the valuation ring: valuation exactly 0.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.val().unwrap() == 0
    }

    /// Image in the residue field, i.e. the value at t = 0 of an integral element.
    pub fn reduce_mod_t(&self) -> Result<Rat, ArithError> {
        if !self.is_integral() {
            return Err(ArithError::NotIntegral);
        }
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        let n0 = self.num.coeff(0);
        let d0 = self.den.coeff(0);
        // den has valuation 0 whenever val >= 0 in reduced form.
        debug_assert!(!d0.is_zero());
        Ok(n0 / d0)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        TScalar::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Self, ArithError> {
        if k == 0 {
            return Ok(TScalar::one());
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = TScalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiply by t^k.
    pub fn mul_t_pow(&self, k: i64) -> Self {
        self * &TScalar::t_pow(k)
    }

    /// Truncated power-series expansion: the polynomial of degree < `upto`
    /// congruent to `self` modulo t^upto. Requires an integral element.
    pub fn taylor_truncate(&self, upto: usize) -> Result<TPoly, ArithError> {
        if !self.is_integral() {
            return Err(ArithError::NotIntegral);
        }
        let mut rest = self.clone();
        let mut out = TPoly::zero();
        for e in 0..upto {
            if rest.is_zero() {
                break;
            }
            let c = rest.reduce_mod_t()?;
            if !c.is_zero() {
                out = &out + &TPoly::monomial(c.clone(), e);
            }
            rest = &rest - &TScalar::from_rat(c);
            rest = &rest / &TScalar::t();
        }
        Ok(out)
    }

    /// Substitute a rational value for t; errors if the denominator vanishes there.
    pub fn evaluate(&self, x: &Rat) -> Result<Rat, ArithError> {
        let d = self.den.evaluate(x);
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.num.evaluate(x) / d)
    }
}

impl TScalar {
    /// Construct from parts already known to be reduced, normalizing only the
    /// denominator's leading coefficient.
    fn from_reduced(num: TPoly, den: TPoly) -> TScalar {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return TScalar::zero();
        }
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_one() {
            TScalar { num, den }
        } else {
            let inv = lc.recip();
            TScalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl Add for &TScalar {
    type Output = TScalar;
    fn add(self, rhs: &TScalar) -> TScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TScalar { num: &self.num + &rhs.num, den: TPoly::one() };
        }
        // with both fractions reduced, the sum needs reduction only against
        // the common factor of the denominators
        let e = self.den.gcd(&rhs.den);
        if e.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return TScalar::from_reduced(num, &self.den * &rhs.den);
        }
        let db = self.den.div_exact(&e).expect("gcd divides");
        let dd = rhs.den.div_exact(&e).expect("gcd divides");
        let num = &(&self.num * &dd) + &(&rhs.num * &db);
        let g = num.gcd(&e);
        if g.is_one() {
            TScalar::from_reduced(num, &self.den * &dd)
        } else {
            TScalar::from_reduced(
                num.div_exact(&g).expect("gcd divides"),
                (&self.den * &dd).div_exact(&g).expect("gcd divides"),
            )
        }
    }
}

impl Sub for &TScalar {
    type Output = TScalar;
    fn sub(self, rhs: &TScalar) -> TScalar {
        self + &(-rhs)
    }
}

impl Neg for &TScalar {
    type Output = TScalar;
    fn neg(self) -> TScalar {
        TScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &TScalar {
    type Output = TScalar;
    fn mul(self, rhs: &TScalar) -> TScalar {
        if self.is_zero() || rhs.is_zero() {
            return TScalar::zero();
        }
        // cross-reduce; the product of the reduced parts is already in
        // lowest terms
        let g1 = if rhs.den.is_one() { TPoly::one() } else { self.num.gcd(&rhs.den) };
        let g2 = if self.den.is_one() { TPoly::one() } else { rhs.num.gcd(&self.den) };
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).expect("gcd divides") };
        let d = if g1.is_one() { rhs.den.clone() } else { rhs.den.div_exact(&g1).expect("gcd divides") };
        let c = if g2.is_one() { rhs.num.clone() } else { rhs.num.div_exact(&g2).expect("gcd divides") };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).expect("gcd divides") };
        TScalar::from_reduced(&a * &c, &b * &d)
    }
}

impl Div for &TScalar {
    type Output = TScalar;
    fn div(self, rhs: &TScalar) -> TScalar {
        self * &rhs.inv().expect("division by zero TScalar")
    }
}

impl fmt::Display for TScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_s = self.num.to_string();
        let den_s = self.den.to_string();
        if num_s.contains(' ') {
            write!(f, "({})", num_s)?;
        } else {
            write!(f, "{}", num_s)?;
        }
        write!(f, "/")?;
        if den_s.contains(' ') {
            write!(f, "({})", den_s)
        } else {
            write!(f, "{}", den_s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_tscalar, rat_int};
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(text: &str) -> TScalar {
        parse_tscalar(text).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(s("t^2").val().unwrap(), 2);
        assert_eq!(s("(t + t^3)/(1 + t)").val().unwrap(), 1);
        assert_eq!(s("1/t").val().unwrap(), -1);
        assert_eq!(TScalar::zero().val(), Err(ArithError::ValuationOfZero));
    }

    #[test]
    fn reduce_mod_t_examples() {
        assert_eq!(s("(2 + 3*t)/(1 - t)").reduce_mod_t().unwrap(), rat_int(2));
        assert_eq!(s("t^2").reduce_mod_t().unwrap(), rat_int(0));
        assert_eq!(s("1/t").reduce_mod_t(), Err(ArithError::NotIntegral));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let v = s("(2*t + 2*t^2)/(4 + 4*t)");
        assert_eq!(v, s("t/2"));
        let again = TScalar::new(v.numer().clone(), v.denom().clone()).unwrap();
        assert_eq!(again, v);
    }

    fn random_tscalar(rng: &mut ChaCha8Rng) -> TScalar {
        let mut num = TPoly::zero();
        while num.is_zero() {
            for e in 0..3usize {
                if rng.gen_bool(0.6) {
                    let c = rat_int(rng.gen_range(-5..=5));
                    num = &num + &TPoly::monomial(c, e + rng.gen_range(0..2));
                }
            }
        }
        let mut den = TPoly::one();
        if rng.gen_bool(0.5) {
            den = &den + &TPoly::monomial(rat_int(rng.gen_range(1..=3)), 1);
        }
        if rng.gen_bool(0.3) {
            den = den.shift(rng.gen_range(0..2));
        }
        TScalar::new(num, den).unwrap()
    }

    #[test]
    fn valuation_laws_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = random_tscalar(&mut rng);
            let b = random_tscalar(&mut rng);
            let (va, vb) = (a.val().unwrap(), b.val().unwrap());
            assert_eq!((&a * &b).val().unwrap(), va + vb);
            let sum = &a + &b;
            if !sum.is_zero() {
                let vs = sum.val().unwrap();
                assert!(vs >= va.min(vb));
                if va != vb {
                    assert_eq!(vs, va.min(vb));
                }
            }
        }
    }

    #[test]
    fn residue_map_is_a_ring_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = 0;
        while seen < 300 {
            let a = random_tscalar(&mut rng);
            let b = random_tscalar(&mut rng);
            if !a.is_integral() || !b.is_integral() {
                continue;
            }
            seen += 1;
            let (ra, rb) = (a.reduce_mod_t().unwrap(), b.reduce_mod_t().unwrap());
            assert_eq!((&a + &b).reduce_mod_t().unwrap(), &ra + &rb);
            assert_eq!((&a * &b).reduce_mod_t().unwrap(), &ra * &rb);
        }
    }

    #[test]
    fn taylor_truncation_matches_series() {
        let v = s("1/(1 - t)");
        assert_eq!(v.taylor_truncate(4).unwrap(), s("1 + t + t^2 + t^3").as_tpoly().unwrap().clone());
        let w = s("t^2/(1 + t)");
        let trunc = w.taylor_truncate(4).unwrap();
        assert_eq!(trunc, s("t^2 - t^3").as_tpoly().unwrap().clone());
        // difference is divisible by t^4
        let diff = &w - &TScalar::from_tpoly(trunc);
        assert!(diff.val().unwrap() >= 4);
    }
}
