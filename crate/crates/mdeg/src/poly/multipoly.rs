//! Sparse multivariate polynomials.

use super::{Field, Monomial, MonomialOrder, VarSpec};
use crate::scalar::parse::{parse_expr, Expr};
use crate::scalar::{ParseError, Rat};
use std::collections::BTreeMap;
use std::fmt::Write;

/// Sparse polynomial: canonical map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        MultiPoly::term(Monomial::var(nvars, i), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let nvars = m.nvars();
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Single-monomial polynomial contents, if any.
    pub fn as_monomial(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_coeff(&self) -> Option<&C> {
        self.as_monomial().and_then(|(m, c)| if m.is_one() { Some(c) } else { None })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn add_term(&mut self, m: &Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        match self.terms.get_mut(m) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m0, a)| (m0.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in rhs.terms() {
            for (m0, a) in self.terms() {
                out.add_term(&m0.mul(m), &a.mul(c));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn map_coeffs<D: Field>(&self, mut f: impl FnMut(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            out.add_term(m, &f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Field, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<MultiPoly<D>, E> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            out.add_term(m, &f(c)?);
        }
        Ok(out)
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &C)> {
        let mut best: Option<(&Monomial, &C)> = None;
        for (m, c) in self.terms() {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if ord.cmp(m, bm) == std::cmp::Ordering::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        best
    }

    /// Substitute polynomials for variables (same ring). Unlisted variables stay.
    pub fn substitute(&self, map: &BTreeMap<usize, MultiPoly<C>>) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            let mut acc = MultiPoly::constant(self.nvars, c.clone());
            let mut residual = Monomial::one(self.nvars);
            for i in m.support() {
                match map.get(&i) {
                    Some(p) => acc = acc.mul(&p.pow(m.exp(i))),
                    None => residual = residual.with_exp(i, m.exp(i)),
                }
            }
            out = out.add(&acc.mul_term(&residual, &C::one()));
        }
        out
    }

    /// Substitute a scalar for one variable.
    pub fn substitute_scalar(&self, var: usize, value: &C) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            let e = m.exp(var);
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = coeff.mul(value);
            }
            out.add_term(&m.with_exp(var, 0), &coeff);
        }
        out
    }

    /// Re-index into a restricted ring; `None` when the polynomial touches a
    /// dropped variable.
    pub fn project(&self, map: &[Option<usize>], new_nvars: usize) -> Option<MultiPoly<C>> {
        let mut out = MultiPoly::zero(new_nvars);
        for (m, c) in self.terms() {
            out.add_term(&m.project(map, new_nvars)?, c);
        }
        Some(out)
    }

    /// Re-index into an extended ring.
    pub fn inject(&self, map: &[usize], new_nvars: usize) -> MultiPoly<C> {
        let mut out = MultiPoly::zero(new_nvars);
        for (m, c) in self.terms() {
            out.add_term(&m.inject(map, new_nvars), c);
        }
        out
    }

    /// All terms share the same per-factor degree vector.
    pub fn is_multihomogeneous(&self, spec: &VarSpec) -> bool {
        let mut deg: Option<Vec<u32>> = None;
        for (m, _) in self.terms() {
            let d = spec.block_degrees(m);
            match &deg {
                None => deg = Some(d),
                Some(d0) => {
                    if d0 != &d {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical text form: terms sorted descending under `ord`, explicit `*` and `^`.
    pub fn display(&self, spec: &VarSpec, ord: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &C)> = self.terms().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let (sign, mag) = coeff_sign_split(*c);
            if k == 0 {
                if sign {
                    out.push('-');
                }
            } else if sign {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let mag_str = mag.to_string();
            if !mag.is_one() || m.is_one() {
                if mag.display_needs_parens() {
                    factors.push(format!("({})", mag_str));
                } else {
                    factors.push(mag_str);
                }
            }
            for i in m.support() {
                let e = m.exp(i);
                if e == 1 {
                    factors.push(spec.name(i));
                } else {
                    factors.push(format!("{}^{}", spec.name(i), e));
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

/// Split a coefficient into (is_negative, magnitude) for display purposes.
fn coeff_sign_split<C: Field>(c: &C) -> (bool, C) {
    match c.display_magnitude() {
        Some(mag) => (true, mag),
        None => (false, c.clone()),
    }
}

fn eval_poly(e: &Expr, spec: &VarSpec) -> Result<MultiPoly<Rat>, ParseError> {
    let n = spec.nvars();
    let fail = |msg: String| ParseError { pos: 0, msg };
    Ok(match e {
        Expr::Int(k) => MultiPoly::constant(n, Rat::from_integer(k.clone())),
        Expr::Sym(s) => match spec.lookup(s) {
            Some(i) => MultiPoly::var(n, i),
            None => return Err(fail(format!("unknown variable '{}'", s))),
        },
        Expr::Neg(a) => eval_poly(a, spec)?.neg(),
        Expr::Add(a, b) => eval_poly(a, spec)?.add(&eval_poly(b, spec)?),
        Expr::Sub(a, b) => eval_poly(a, spec)?.sub(&eval_poly(b, spec)?),
        Expr::Mul(a, b) => eval_poly(a, spec)?.mul(&eval_poly(b, spec)?),
        Expr::Div(a, b) => {
            let d = eval_poly(b, spec)?;
            let c = d
                .constant_coeff()
                .cloned()
                .ok_or_else(|| fail("division only by nonzero constants".into()))?;
            eval_poly(a, spec)?.scale(&Field::inv(&c).ok_or_else(|| fail("division by zero".into()))?)
        }
        Expr::Pow(a, k) => {
            let base = eval_poly(a, spec)?;
            if *k < 0 {
                let c = base
                    .constant_coeff()
                    .cloned()
                    .ok_or_else(|| fail("negative power of a non-constant".into()))?;
                let inv = Field::inv(&c).ok_or_else(|| fail("division by zero".into()))?;
                let mut acc = MultiPoly::one(base.nvars());
                for _ in 0..k.unsigned_abs() {
                    acc = acc.scale(&inv);
                }
                acc
            } else {
                base.pow(*k as u32)
            }
        }
    })
}

/// Parse the canonical polynomial text form over the given variable structure.
pub fn parse_poly(text: &str, spec: &VarSpec) -> Result<MultiPoly<Rat>, ParseError> {
    eval_poly(&parse_expr(text)?, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn spec3() -> std::sync::Arc<VarSpec> {
        VarSpec::new(vec![2, 2, 2], 0, 0, false, true)
    }

    #[test]
    fn parse_and_display_round_trip() {
        let spec = spec3();
        let ord = spec.default_order();
        for text in [
            "x11*x22*x13 - x21*x12*x23*t^2",
            "x11 + x21",
            "0",
            "3*x11^2 - 1/2",
            "x11*t",
        ] {
            let p = parse_poly(text, &spec).unwrap();
            let shown = p.display(&spec, &ord);
            let again = parse_poly(&shown, &spec).unwrap();
            assert_eq!(p, again, "round trip failed: {} -> {}", text, shown);
        }
    }

    #[test]
    fn multihomogeneity_test_ignores_aux_vars() {
        let spec = spec3();
        let p = parse_poly("x11*x22*x13 - t^2*x21*x12*x23", &spec).unwrap();
        assert!(p.is_multihomogeneous(&spec));
        let q = parse_poly("x11 - x11*x21", &spec).unwrap();
        assert!(!q.is_multihomogeneous(&spec));
    }

    #[test]
    fn substitution_is_exact() {
        let spec = spec3();
        let p = parse_poly("x11*x22 - x21*x12", &spec).unwrap();
        let mut map = BTreeMap::new();
        map.insert(spec.lookup("x11").unwrap(), parse_poly("x21", &spec).unwrap());
        map.insert(spec.lookup("x22").unwrap(), parse_poly("x12", &spec).unwrap());
        assert!(p.substitute(&map).is_zero());
        let q = p.substitute_scalar(spec.lookup("x11").unwrap(), &rat_int(2));
        assert_eq!(q, parse_poly("2*x22 - x21*x12", &spec).unwrap());
    }

    #[test]
    fn leading_term_respects_order() {
        let spec = spec3();
        let p = parse_poly("x11*x22*x13 - t^2*x21*x12*x23", &spec).unwrap();
        let ord = spec.default_order();
        let (m, c) = p.leading_term(&ord).unwrap();
        // under the x-block-over-t order the t-free cubic leads
        assert_eq!(spec.block_degrees(m), vec![1, 1, 1]);
        assert_eq!(m.exp(spec.t_index().unwrap()), 0);
        assert_eq!(c, &rat_int(1));
    }
}
