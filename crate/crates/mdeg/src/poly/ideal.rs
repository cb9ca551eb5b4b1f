//! Ideals with cached reduced Gröbner bases and the derived operations:
//! elimination, saturation, intersection, containment, initial ideals,
//! dimension, and the bridges between the two coefficient routes for the
//! degeneration parameter (t as a ring variable vs t inside coefficients).

use super::{
    buchberger, kpolynomial, multidegree_of_monomial_ideal, normal_form, AuxGroup, ChowClass,
    Field, GroebnerConfig, Monomial, MonomialOrder, MultiPoly, PolyError, VarSpec, VarSpecJson,
};
use crate::scalar::{Rat, TPoly, TScalar};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

/// An ideal: generator list over a fixed variable structure, with lazily
/// computed canonical reduced Gröbner bases per monomial order.
#[derive(Debug)]
pub struct Ideal<C: Field> {
    spec: Arc<VarSpec>,
    gens: Vec<MultiPoly<C>>,
    cfg: GroebnerConfig,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<MultiPoly<C>>>>>,
}

impl<C: Field> Clone for Ideal<C> {
    fn clone(&self) -> Self {
        Ideal {
            spec: self.spec.clone(),
            gens: self.gens.clone(),
            cfg: self.cfg.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<C: Field> Ideal<C> {
    pub fn new(spec: Arc<VarSpec>, gens: Vec<MultiPoly<C>>) -> Result<Self, PolyError> {
        for g in &gens {
            if g.nvars() != spec.nvars() {
                return Err(PolyError::SpecMismatch(format!(
                    "generator arity {} does not match ring arity {}",
                    g.nvars(),
                    spec.nvars()
                )));
            }
        }
        Ok(Ideal {
            spec,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cfg: GroebnerConfig::default(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(spec: Arc<VarSpec>) -> Self {
        Ideal::new(spec, Vec::new()).expect("empty generator list")
    }

    /// Wrap an already-reduced Gröbner basis, prefilling the cache.
    fn from_groebner(spec: Arc<VarSpec>, basis: Vec<MultiPoly<C>>, ord: MonomialOrder, cfg: GroebnerConfig) -> Self {
        let ideal = Ideal {
            spec,
            gens: basis.clone(),
            cfg,
            cache: Mutex::new(HashMap::new()),
        };
        ideal.cache.lock().unwrap().insert(ord, Arc::new(basis));
        ideal
    }

    pub fn with_config(mut self, cfg: GroebnerConfig) -> Self {
        self.cfg = cfg;
        self
    }

    pub fn config(&self) -> &GroebnerConfig {
        &self.cfg
    }

    pub fn spec(&self) -> &Arc<VarSpec> {
        &self.spec
    }

    pub fn generators(&self) -> &[MultiPoly<C>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn default_order(&self) -> MonomialOrder {
        self.spec.default_order()
    }

    /// The unique reduced Gröbner basis for the order, cached.
    pub fn groebner_basis(&self, ord: &MonomialOrder) -> Result<Arc<Vec<MultiPoly<C>>>, PolyError> {
        if let Some(b) = self.cache.lock().unwrap().get(ord) {
            return Ok(b.clone());
        }
        let basis = Arc::new(buchberger(&self.gens, ord, &self.cfg)?);
        self.cache.lock().unwrap().insert(ord.clone(), basis.clone());
        Ok(basis)
    }

    /// Reduced basis under the ring's default order.
    pub fn reduced_basis(&self) -> Result<Arc<Vec<MultiPoly<C>>>, PolyError> {
        self.groebner_basis(&self.default_order())
    }

    pub fn normal_form(&self, f: &MultiPoly<C>, ord: &MonomialOrder) -> Result<MultiPoly<C>, PolyError> {
        let basis = self.groebner_basis(ord)?;
        Ok(normal_form(f, &basis, ord))
    }

    pub fn contains_poly(&self, f: &MultiPoly<C>) -> Result<bool, PolyError> {
        Ok(self.normal_form(f, &self.default_order())?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal<C>) -> Result<bool, PolyError> {
        self.check_same_spec(other)?;
        for g in other.generators() {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via canonical reduced bases under the shared default order.
    pub fn equals(&self, other: &Ideal<C>) -> Result<bool, PolyError> {
        self.check_same_spec(other)?;
        Ok(*self.reduced_basis()? == *other.reduced_basis()?)
    }

    fn check_same_spec(&self, other: &Ideal<C>) -> Result<(), PolyError> {
        if *self.spec != *other.spec {
            return Err(PolyError::SpecMismatch(
                "operation requires ideals over the same variable structure".into(),
            ));
        }
        Ok(())
    }

    pub fn is_unit_ideal(&self) -> Result<bool, PolyError> {
        let basis = self.reduced_basis()?;
        Ok(basis.len() == 1 && basis[0].is_constant())
    }

    /// Contract to the subring without the given auxiliary groups.
    pub fn eliminate(&self, drop: &[AuxGroup]) -> Result<Ideal<C>, PolyError> {
        let dropped_idx: Vec<usize> = drop.iter().flat_map(|g| self.spec.indices_of(*g)).collect();
        if dropped_idx.is_empty() {
            return Err(PolyError::SpecMismatch("elimination of absent variable groups".into()));
        }
        let ord = self.spec.elimination_order(drop);
        let basis = self.groebner_basis(&ord)?;
        let (new_spec, map) = self.spec.drop_groups(drop);
        let kept: Vec<MultiPoly<C>> = basis
            .iter()
            .filter_map(|g| g.project(&map, new_spec.nvars()))
            .collect();
        // the retained part of the elimination order coincides with the
        // restricted ring's default order, so the filtered basis is already
        // the reduced basis there
        let ord_small = new_spec.default_order();
        Ok(Ideal::from_groebner(new_spec, kept, ord_small, self.cfg.clone()))
    }

    /// Saturation (self : f^∞) via the helper-variable trick.
    pub fn saturate(&self, f: &MultiPoly<C>) -> Result<Ideal<C>, PolyError> {
        if f.is_zero() {
            return Err(PolyError::SpecMismatch("saturation by zero".into()));
        }
        if self.spec.indices_of(AuxGroup::W).len() > 0 {
            return Err(PolyError::SpecMismatch("saturation helper already present".into()));
        }
        let (big, inj) = self.spec.extend(0, 0, true, false);
        let w = big.indices_of(AuxGroup::W)[0];
        let mut gens: Vec<MultiPoly<C>> = self
            .gens
            .iter()
            .map(|g| g.inject(&inj, big.nvars()))
            .collect();
        let f_big = f.inject(&inj, big.nvars());
        let one = MultiPoly::one(big.nvars());
        let wf = f_big.mul(&MultiPoly::var(big.nvars(), w));
        gens.push(one.sub(&wf));
        let extended = Ideal::new(big, gens)?.with_config(self.cfg.clone());
        let out = extended.eliminate(&[AuxGroup::W])?;
        debug_assert!(*out.spec == *self.spec);
        Ok(out)
    }

    /// Ideal intersection via a single scaling helper variable.
    pub fn intersection(&self, other: &Ideal<C>) -> Result<Ideal<C>, PolyError> {
        self.check_same_spec(other)?;
        if !self.spec.indices_of(AuxGroup::Z).is_empty() {
            return Err(PolyError::SpecMismatch("intersection requires a ring without z-parameters".into()));
        }
        let (big, inj) = self.spec.extend(1, 0, false, false);
        let u = big.indices_of(AuxGroup::Z)[0];
        let uvar = MultiPoly::var(big.nvars(), u);
        let one_minus_u = MultiPoly::one(big.nvars()).sub(&uvar);
        let mut gens = Vec::new();
        for g in self.generators() {
            gens.push(g.inject(&inj, big.nvars()).mul(&uvar));
        }
        for g in other.generators() {
            gens.push(g.inject(&inj, big.nvars()).mul(&one_minus_u));
        }
        let extended = Ideal::new(big, gens)?.with_config(self.cfg.clone());
        extended.eliminate(&[AuxGroup::Z])
    }

    /// Ideal of leading monomials of the reduced basis.
    pub fn initial_ideal(&self, ord: &MonomialOrder) -> Result<Ideal<C>, PolyError> {
        let basis = self.groebner_basis(ord)?;
        let gens: Vec<MultiPoly<C>> = basis
            .iter()
            .map(|g| {
                let (m, _) = g.leading_term(ord).expect("nonzero basis element");
                MultiPoly::term(m.clone(), C::one())
            })
            .collect();
        Ok(Ideal::from_groebner(self.spec.clone(), gens, ord.clone(), self.cfg.clone()))
    }

    pub fn is_monomial_ideal(&self) -> Result<bool, PolyError> {
        Ok(self.reduced_basis()?.iter().all(|g| g.num_terms() == 1))
    }

    /// Minimal monomial generators; errors when the ideal is not monomial.
    pub fn monomial_generators(&self) -> Result<Vec<Monomial>, PolyError> {
        let basis = self.reduced_basis()?;
        basis
            .iter()
            .map(|g| match g.as_monomial() {
                Some((m, _)) => Ok(m.clone()),
                None => Err(PolyError::NotMonomial),
            })
            .collect()
    }

    /// Leading monomials of the default-order initial ideal.
    pub fn initial_monomials(&self) -> Result<Vec<Monomial>, PolyError> {
        self.initial_ideal(&self.default_order())?.monomial_generators()
    }

    /// Projective multihomogeneous dimension: Krull dimension of the affine
    /// multicone of the initial ideal minus the number of factors.
    pub fn dimension(&self) -> Result<i64, PolyError> {
        if !self.spec.is_x_only() {
            return Err(PolyError::SpecMismatch(
                "dimension is defined over the coordinate ring of the product of factors".into(),
            ));
        }
        if self.is_unit_ideal()? {
            return Err(PolyError::EmptyScheme);
        }
        let gens = self.initial_monomials()?;
        let affine = affine_dimension(&gens, self.spec.nvars());
        Ok(affine as i64 - self.spec.n_factors() as i64)
    }

    /// Chow class of the cycle of the ideal, with multiplicities: the
    /// degree-codimension part of the K-polynomial of the initial ideal under
    /// the substitution sending each variable symbol to 1 - H of its factor.
    pub fn multidegree(&self) -> Result<ChowClass, PolyError> {
        if !self.spec.is_x_only() {
            return Err(PolyError::SpecMismatch(
                "multidegree is defined over the coordinate ring of the product of factors".into(),
            ));
        }
        if self.is_unit_ideal()? {
            return Err(PolyError::EmptyScheme);
        }
        let gens = self.initial_monomials()?;
        let affine = affine_dimension(&gens, self.spec.nvars());
        let codim = self.spec.nvars() - affine;
        Ok(multidegree_of_monomial_ideal(&gens, &self.spec, codim))
    }

    /// K-polynomial (multigraded Hilbert numerator) of a monomial ideal, in
    /// one formal symbol per variable.
    pub fn kpolynomial(&self) -> Result<MultiPoly<Rat>, PolyError> {
        let gens = self.monomial_generators()?;
        Ok(kpolynomial(&gens, self.spec.nvars()))
    }

    /// Canonical printed form of the reduced basis.
    pub fn render(&self) -> Result<Vec<String>, PolyError> {
        let ord = self.default_order();
        let basis = self.groebner_basis(&ord)?;
        Ok(basis.iter().map(|g| g.display(&self.spec, &ord)).collect())
    }
}

impl Ideal<Rat> {
    /// Substitute a rational value for the ring variable t.
    pub fn substitute_t(&self, value: &Rat) -> Result<Ideal<Rat>, PolyError> {
        let t = self
            .spec
            .t_index()
            .ok_or_else(|| PolyError::SpecMismatch("ring has no t variable".into()))?;
        let (small, map) = self.spec.drop_groups(&[AuxGroup::T]);
        let gens: Vec<MultiPoly<Rat>> = self
            .gens
            .iter()
            .map(|g| {
                g.substitute_scalar(t, value)
                    .project(&map, small.nvars())
                    .expect("t eliminated by substitution")
            })
            .collect();
        Ideal::new(small, gens).map(|i| i.with_config(self.cfg.clone()))
    }

    pub fn to_json(&self) -> Result<IdealJson, PolyError> {
        Ok(IdealJson {
            ring: self.spec.to_json(),
            generators: self.render()?,
        })
    }

    pub fn from_json(j: &IdealJson) -> Result<Ideal<Rat>, PolyError> {
        let spec = VarSpec::from_json(&j.ring);
        let gens: Result<Vec<_>, _> = j
            .generators
            .iter()
            .map(|s| super::parse_poly(s, &spec))
            .collect();
        let gens = gens.map_err(|e| PolyError::SpecMismatch(format!("unparseable generator: {}", e)))?;
        Ideal::new(spec, gens)
    }
}

/// Move the ring variable t into the coefficient field: polynomials over Q
/// with t as smallest variable become polynomials over rational functions.
pub fn collect_t(ideal: &Ideal<Rat>) -> Result<Ideal<TScalar>, PolyError> {
    let spec = ideal.spec();
    let t = spec
        .t_index()
        .ok_or_else(|| PolyError::SpecMismatch("ring has no t variable".into()))?;
    let (small, map) = spec.drop_groups(&[AuxGroup::T]);
    let mut out_gens: Vec<MultiPoly<TScalar>> = Vec::new();
    for g in ideal.generators() {
        let mut acc: MultiPoly<TScalar> = MultiPoly::zero(small.nvars());
        for (m, c) in g.terms() {
            let e = m.exp(t);
            let coeff = TScalar::from_tpoly(TPoly::monomial(c.clone(), e as usize));
            let small_m = m.with_exp(t, 0).project(&map, small.nvars()).expect("t cleared");
            acc.add_term(&small_m, &coeff);
        }
        out_gens.push(acc);
    }
    Ideal::new(small, out_gens).map(|i| i.with_config(ideal.config().clone()))
}

/// Inverse of [`collect_t`]: requires every coefficient to be polynomial in t.
pub fn expand_t(ideal: &Ideal<TScalar>) -> Result<Ideal<Rat>, PolyError> {
    let spec = ideal.spec();
    if spec.has_t() {
        return Err(PolyError::SpecMismatch("ring already has a t variable".into()));
    }
    let (big, inj) = spec.extend(0, 0, false, true);
    let t = big.t_index().expect("just added");
    let mut out_gens: Vec<MultiPoly<Rat>> = Vec::new();
    for g in ideal.generators() {
        let mut acc: MultiPoly<Rat> = MultiPoly::zero(big.nvars());
        for (m, c) in g.terms() {
            let p = c.as_tpoly().ok_or(PolyError::NotIntegral)?;
            let base = m.inject(&inj, big.nvars());
            for (e, r) in p.terms() {
                acc.add_term(&base.with_exp(t, e as u32), r);
            }
        }
        out_gens.push(acc);
    }
    Ideal::new(big, out_gens).map(|i| i.with_config(ideal.config().clone()))
}

/// Coefficientwise reduction modulo t of integral generators; zero generators
/// are dropped. Errors when a coefficient has negative valuation.
pub fn specialize_t0(ideal: &Ideal<TScalar>) -> Result<Ideal<Rat>, PolyError> {
    let mut gens: Vec<MultiPoly<Rat>> = Vec::new();
    for g in ideal.generators() {
        let reduced = g.try_map_coeffs(|c| c.reduce_mod_t().map_err(|_| PolyError::NotIntegral))?;
        if !reduced.is_zero() {
            gens.push(reduced);
        }
    }
    Ideal::new(ideal.spec().clone(), gens).map(|i| i.with_config(ideal.config().clone()))
}

/// Krull dimension of the affine variety of a monomial ideal: the largest
/// number of variables spanning a coordinate subspace not contained in the
/// zero set complement, found by branching on generator supports.
pub(crate) fn affine_dimension(gens: &[Monomial], nvars: usize) -> usize {
    fn search(gens: &[BTreeSet<usize>], banned: &mut BTreeSet<usize>, nvars: usize, best: &mut usize) {
        if nvars - banned.len() <= *best {
            return; // cannot beat the current best
        }
        match gens.iter().find(|s| s.iter().all(|v| !banned.contains(v))) {
            None => {
                *best = (*best).max(nvars - banned.len());
            }
            Some(s) => {
                for &v in s {
                    banned.insert(v);
                    search(gens, banned, nvars, best);
                    banned.remove(&v);
                }
            }
        }
    }
    let supports: Vec<BTreeSet<usize>> = gens.iter().map(|m| m.support().collect()).collect();
    if supports.iter().any(|s| s.is_empty()) {
        // a unit generator: empty variety; report -1-like minimal value
        return 0;
    }
    let mut best = 0usize;
    let mut banned = BTreeSet::new();
    search(&supports, &mut banned, nvars, &mut best);
    best
}

/// Serialized ideal: ring block structure plus canonical generator strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: VarSpecJson,
    pub generators: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;

    fn xy_ring() -> Arc<VarSpec> {
        // two y-variables named y1, y2 plus an s-like z variable for
        // parametrization tests is built per test; here: plain x-only ring
        VarSpec::product(&[2, 2, 2])
    }

    #[test]
    fn elimination_of_a_parametrized_curve() {
        // <x - s, y - s^2> eliminate s gives <y - x^2>, in variables
        // x = y1, y = y2, s = z1 (named z1 in this ring)
        let spec = VarSpec::new(vec![], 1, 2, false, false);
        let gens = vec![
            parse_poly("y1 - z1", &spec).unwrap(),
            parse_poly("y2 - z1^2", &spec).unwrap(),
        ];
        let ideal = Ideal::new(spec, gens).unwrap();
        let out = ideal.eliminate(&[AuxGroup::Z]).unwrap();
        let small = out.spec().clone();
        let expect = Ideal::new(small, vec![parse_poly("y1^2 - y2", &out.spec()).unwrap()]).unwrap();
        assert!(out.equals(&expect).unwrap());
        // substitution oracle: generators vanish under y1 -> s, y2 -> s^2
        let big = VarSpec::new(vec![], 1, 2, false, false);
        for g in out.generators() {
            let lifted = g.inject(&(0..out.spec().nvars()).map(|i| i + 1).collect::<Vec<_>>(), big.nvars());
            let mut map = std::collections::BTreeMap::new();
            map.insert(big.lookup("y1").unwrap(), parse_poly("z1", &big).unwrap());
            map.insert(big.lookup("y2").unwrap(), parse_poly("z1^2", &big).unwrap());
            assert!(lifted.substitute(&map).is_zero());
        }
    }

    #[test]
    fn eliminate_zero_ideal() {
        let spec = VarSpec::new(vec![2], 0, 1, false, false);
        let ideal: Ideal<Rat> = Ideal::zero(spec);
        let out = ideal.eliminate(&[AuxGroup::Y]).unwrap();
        assert!(out.is_zero_ideal());
    }

    #[test]
    fn saturation_examples() {
        // <t*x11> : t^∞ = <x11>
        let spec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
        let t = parse_poly("t", &spec).unwrap();
        let tx = parse_poly("t*x11", &spec).unwrap();
        let ideal = Ideal::new(spec.clone(), vec![tx]).unwrap();
        let sat = ideal.saturate(&t).unwrap();
        let expect = Ideal::new(spec.clone(), vec![parse_poly("x11", &spec).unwrap()]).unwrap();
        assert!(sat.equals(&expect).unwrap());

        // saturation by a nonzerodivisor leaves the ideal alone
        let x = Ideal::new(spec.clone(), vec![parse_poly("x11", &spec).unwrap()]).unwrap();
        let sat2 = x.saturate(&parse_poly("x22", &spec).unwrap()).unwrap();
        assert!(sat2.equals(&x).unwrap());

        // fixed point: (sat : f) = sat, tested via idempotence
        let sat3 = sat.saturate(&t).unwrap();
        assert!(sat3.equals(&sat).unwrap());
    }

    #[test]
    fn principal_cubic_saturation_is_stable() {
        let spec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
        let f = parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &spec).unwrap();
        let ideal = Ideal::new(spec.clone(), vec![f]).unwrap();
        let sat = ideal.saturate(&parse_poly("t", &spec).unwrap()).unwrap();
        assert!(sat.equals(&ideal).unwrap());
    }

    #[test]
    fn intersection_of_coordinate_hyperplanes() {
        let spec = xy_ring();
        let mk = |s: &str| Ideal::new(spec.clone(), vec![parse_poly(s, &spec).unwrap()]).unwrap();
        let triple = mk("x11").intersection(&mk("x22")).unwrap().intersection(&mk("x13")).unwrap();
        let product = mk("x11*x22*x13");
        assert!(triple.equals(&product).unwrap());
        assert!(mk("x11").contains(&product).unwrap());
        assert!(!product.contains(&mk("x11")).unwrap());
    }

    #[test]
    fn initial_ideal_and_dimension() {
        let spec = xy_ring();
        let f = parse_poly("x11*x22*x13", &spec).unwrap();
        let ideal = Ideal::new(spec.clone(), vec![f]).unwrap();
        assert!(ideal.is_monomial_ideal().unwrap());
        let init = ideal.initial_ideal(&ideal.default_order()).unwrap();
        assert!(init.equals(&ideal).unwrap());
        // hypersurface in (P1)^3
        assert_eq!(ideal.dimension().unwrap(), 2);
        // whole space
        assert_eq!(Ideal::<Rat>::zero(spec.clone()).dimension().unwrap(), 3);
        // unit ideal errors
        let unit = Ideal::new(spec.clone(), vec![parse_poly("1", &spec).unwrap()]).unwrap();
        assert!(matches!(unit.dimension(), Err(PolyError::EmptyScheme)));
        // single P^2 factor
        let p2 = VarSpec::product(&[3]);
        assert_eq!(Ideal::<Rat>::zero(p2).dimension().unwrap(), 2);
    }

    #[test]
    fn t_bridges_round_trip() {
        let spec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
        let f = parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &spec).unwrap();
        let ideal = Ideal::new(spec, vec![f]).unwrap();
        let collected = collect_t(&ideal).unwrap();
        let expanded = expand_t(&collected).unwrap();
        assert!(expanded.equals(&ideal).unwrap());
        // specialization at t = 0 keeps only the residue part
        let fibre = specialize_t0(&collected).unwrap();
        let xspec = fibre.spec().clone();
        let expect = Ideal::new(xspec.clone(), vec![parse_poly("-x11*x22*x13", &xspec).unwrap()]).unwrap();
        assert!(fibre.equals(&expect).unwrap());
        // a generator with everywhere-positive valuation drops out
        let spec2 = VarSpec::new(vec![2], 0, 0, false, true);
        let g = parse_poly("t*x11 + t^3*x21", &spec2).unwrap();
        let dropped = specialize_t0(&collect_t(&Ideal::new(spec2, vec![g]).unwrap()).unwrap()).unwrap();
        assert!(dropped.is_zero_ideal());
    }

    #[test]
    fn substitute_t_recovers_members() {
        let spec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
        let f = parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &spec).unwrap();
        let ideal = Ideal::new(spec, vec![f]).unwrap();
        let at2 = ideal.substitute_t(&crate::scalar::rat_int(2)).unwrap();
        let xspec = at2.spec().clone();
        let expect =
            Ideal::new(xspec.clone(), vec![parse_poly("4*x21*x12*x23 - x11*x22*x13", &xspec).unwrap()])
                .unwrap();
        assert!(at2.equals(&expect).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let spec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
        let f = parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &spec).unwrap();
        let ideal = Ideal::new(spec, vec![f]).unwrap();
        let j = ideal.to_json().unwrap();
        let text = serde_json::to_string(&j).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        let parsed = Ideal::from_json(&back).unwrap();
        assert!(parsed.equals(&ideal).unwrap());
    }
}
