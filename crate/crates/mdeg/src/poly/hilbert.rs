//! Multigraded K-polynomials of monomial ideals and Chow classes of cycles in
//! a product of projective spaces.

use super::{Monomial, MultiPoly, VarSpec};
use crate::scalar::Rat;
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Formal integer combination of monomials in the hyperplane classes
/// H_1..H_n, truncated by the factor dimensions (H_i^{l_i} = 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    caps: Vec<usize>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl ChowClass {
    pub fn zero(caps: Vec<usize>) -> Self {
        ChowClass { caps, terms: BTreeMap::new() }
    }

    /// The fundamental class 1.
    pub fn one(caps: Vec<usize>) -> Self {
        let n = caps.len();
        let mut c = ChowClass::zero(caps);
        c.add_term(&vec![0; n], BigInt::one());
        c
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    /// Add coeff * Π H_i^{e_i}; terms over the caps vanish.
    pub fn add_term(&mut self, exps: &[u32], coeff: BigInt) {
        assert_eq!(exps.len(), self.caps.len());
        if coeff.is_zero() {
            return;
        }
        if exps.iter().zip(&self.caps).any(|(&e, &cap)| e as usize >= cap) {
            return;
        }
        let entry = self.terms.entry(exps.to_vec()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(exps);
        }
    }

    pub fn add(&self, other: &ChowClass) -> ChowClass {
        assert_eq!(self.caps, other.caps);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    /// Coefficientwise comparison: every coefficient of self is at most the
    /// matching coefficient of other.
    pub fn leq(&self, other: &ChowClass) -> bool {
        self.terms.iter().all(|(e, c)| c <= &other.coefficient(e))
    }

    /// Restriction to the terms of the given total degree.
    pub fn degree_part(&self, degree: u32) -> ChowClass {
        let mut out = ChowClass::zero(self.caps.clone());
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == degree {
                out.add_term(e, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
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
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                parts.push(mag.to_string());
            }
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    parts.push(format!("H{}", i + 1));
                } else if exp > 1 {
                    parts.push(format!("H{}^{}", i + 1, exp));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted: Vec<&Monomial> = gens.iter().collect();
    sorted.sort_by_key(|m| m.total_degree());
    for m in sorted {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(m.clone());
        }
    }
    out
}

/// Numerator of the multigraded Hilbert series of a monomial ideal, one
/// formal symbol per ring variable, by the splitting recursion
/// K(I + m) = K(I) - Z^m K(I : m) on minimal generators.
pub fn kpolynomial(gens: &[Monomial], nvars: usize) -> MultiPoly<Rat> {
    let minimal = minimalize(gens);
    kpoly_rec(&minimal, nvars)
}

fn kpoly_rec(gens: &[Monomial], nvars: usize) -> MultiPoly<Rat> {
    match gens.split_last() {
        None => MultiPoly::one(nvars),
        Some((m, rest)) => {
            let k_rest = kpoly_rec(rest, nvars);
            let colon: Vec<Monomial> = minimalize(
                &rest
                    .iter()
                    .map(|g| g.try_div(&g.gcd(m)).expect("gcd divides"))
                    .collect::<Vec<_>>(),
            );
            let k_colon = kpoly_rec(&colon, nvars);
            let shifted = k_colon.mul_term(m, &Rat::one());
            k_rest.sub(&shifted)
        }
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Chow class of the cycle of a monomial ideal of the given codimension:
/// substitute each variable symbol of the K-polynomial by (1 - H_factor),
/// expand modulo the caps and keep the degree-codimension part.
pub fn multidegree_of_monomial_ideal(gens: &[Monomial], spec: &VarSpec, codim: usize) -> ChowClass {
    let caps: Vec<usize> = spec.block_sizes().to_vec();
    let n = caps.len();
    let k = kpolynomial(gens, spec.nvars());
    let mut acc = ChowClass::zero(caps.clone());
    for (m, coeff) in k.terms() {
        debug_assert!(coeff.is_integer());
        // expand Π_v (1 - H_{b(v)})^{e_v} = Π_i (1 - H_i)^{d_i} with d_i the
        // block degree of the monomial
        let block_deg = spec.block_degrees(m);
        let mut partial: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        partial.insert(vec![0; n], coeff.numer().clone());
        for (i, &d) in block_deg.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            for (e, c) in &partial {
                let room = (caps[i] - 1) as u32;
                for k in 0..=d.min(room) {
                    let mut e2 = e.clone();
                    e2[i] += k;
                    if e2.iter().sum::<u32>() > codim as u32 {
                        continue;
                    }
                    let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
                    let term = c * binomial(d, k) * sign;
                    *next.entry(e2).or_insert_with(BigInt::zero) += term;
                }
            }
            partial = next;
        }
        for (e, c) in partial {
            acc.add_term(&e, c);
        }
    }
    acc.degree_part(codim as u32)
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, Ideal};
    use super::*;
    use std::sync::Arc;

    #[test]
    fn kpolynomial_trivial_cases() {
        let spec = VarSpec::product(&[2, 2, 2]);
        assert_eq!(kpolynomial(&[], spec.nvars()), MultiPoly::one(spec.nvars()));
        // principal squarefree: 1 - Z^m
        let m = Monomial::from_exponents(vec![1, 0, 1, 0, 1, 0]);
        let k = kpolynomial(&[m.clone()], spec.nvars());
        let expect = MultiPoly::one(spec.nvars()).sub(&MultiPoly::term(m, Rat::one()));
        assert_eq!(k, expect);
    }

    /// Brute-force multigraded Hilbert function of a monomial ideal: the
    /// number of standard monomials of each multidegree.
    fn hilbert_count(gens: &[Monomial], spec: &VarSpec, deg: &[u32]) -> i64 {
        fn enumerate(spec: &VarSpec, deg: &[u32]) -> Vec<Monomial> {
            let mut out = vec![Monomial::one(spec.nvars())];
            for f in 0..spec.n_factors() {
                let vars: Vec<usize> = (0..spec.nvars())
                    .filter(|&v| spec.factor_of(v) == Some(f))
                    .collect();
                let mut next = Vec::new();
                for base in &out {
                    for combo in compositions(deg[f], vars.len()) {
                        let mut m = base.clone();
                        for (v, e) in vars.iter().zip(combo) {
                            m = m.with_exp(*v, e);
                        }
                        next.push(m);
                    }
                }
                out = next;
            }
            out
        }
        fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
            if parts == 0 {
                return if total == 0 { vec![vec![]] } else { vec![] };
            }
            let mut out = Vec::new();
            for first in 0..=total {
                for mut rest in compositions(total - first, parts - 1) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        enumerate(spec, deg)
            .into_iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as i64
    }

    /// Evaluate the Hilbert function from the K-polynomial: HF(a) equals the
    /// sum over K-terms of coefficient times the count of monomials of the
    /// remaining multidegree.
    fn hilbert_from_kpoly(k: &MultiPoly<Rat>, spec: &VarSpec, deg: &[u32]) -> i64 {
        let mut total = 0i64;
        for (m, c) in k.terms() {
            let shift = spec.block_degrees(m);
            let mut term: i64 = 1;
            for (i, &l) in spec.block_sizes().iter().enumerate() {
                if shift[i] > deg[i] {
                    term = 0;
                    break;
                }
                let a = deg[i] - shift[i];
                // monomials of degree a in l variables
                let mut count = 1i64;
                for j in 0..(l as u32 - 1) {
                    count = count * (a + j + 1) as i64 / (j + 1) as i64;
                }
                term *= count;
            }
            let coeff: i64 = c.numer().try_into().expect("small integer");
            total += coeff * term;
        }
        total
    }

    #[test]
    fn kpolynomial_matches_brute_force_counts() {
        // the three pairwise products of the bottom row variables of (P2)^3
        let spec = VarSpec::product(&[3, 3, 3]);
        let g = |s: &str| {
            parse_poly(s, &spec)
                .unwrap()
                .as_monomial()
                .map(|(m, _)| m.clone())
                .unwrap()
        };
        let gens = vec![g("x31*x32"), g("x31*x33"), g("x32*x33")];
        let k = kpolynomial(&gens, spec.nvars());
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for c in 0..=3u32 {
                    let deg = [a, b, c];
                    assert_eq!(
                        hilbert_from_kpoly(&k, &spec, &deg),
                        hilbert_count(&gens, &spec, &deg),
                        "mismatch at degree {:?}",
                        deg
                    );
                }
            }
        }
    }

    #[test]
    fn multidegree_examples() {
        // <x11*x22*x13> in (P1)^3 has class H1 + H2 + H3
        let spec = VarSpec::product(&[2, 2, 2]);
        let ideal = Ideal::new(
            Arc::clone(&spec),
            vec![parse_poly("x11*x22*x13", &spec).unwrap()],
        )
        .unwrap();
        let c = ideal.multidegree().unwrap();
        assert_eq!(c.to_string(), "H1 + H2 + H3");
        assert!(c.all_coefficients_one());
        assert_eq!(c.num_terms(), 3);

        // zero ideal: fundamental class
        let z = Ideal::<Rat>::zero(Arc::clone(&spec)).multidegree().unwrap();
        assert!(z.is_one());
        assert_eq!(z.to_string(), "1");
    }

    #[test]
    fn chow_class_display_and_order() {
        let mut c = ChowClass::zero(vec![3, 3]);
        c.add_term(&[1, 0], BigInt::from(1));
        c.add_term(&[0, 1], BigInt::from(1));
        assert_eq!(c.to_string(), "H1 + H2");
        c.add_term(&[2, 1], BigInt::from(2));
        assert_eq!(c.to_string(), "2*H1^2*H2 + H1 + H2");
        // caps kill overflowing exponents
        c.add_term(&[3, 0], BigInt::from(5));
        assert_eq!(c.to_string(), "2*H1^2*H2 + H1 + H2");
    }
}
