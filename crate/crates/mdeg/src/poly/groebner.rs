//! Buchberger's algorithm with Gebauer-Möller pair pruning and fraction-free
//! full reduction.

use super::{Field, Monomial, MonomialOrder, MultiPoly, PolyError};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// Resource caps for a single Gröbner run. Exceeding a cap is an explicit
/// error, never silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum total degree an S-pair lcm may reach.
    pub max_degree: u32,
    /// Maximum number of S-pairs processed.
    pub max_spairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_degree: 40, max_spairs: 200_000 }
    }
}

/// Terms sorted strictly descending under the active order.
#[derive(Clone)]
struct SortedPoly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> SortedPoly<C> {
    fn from_multipoly(p: &MultiPoly<C>, ord: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, C)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    fn to_multipoly(&self, nvars: usize) -> MultiPoly<C> {
        MultiPoly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &(Monomial, C) {
        &self.terms[0]
    }

    /// a * self - b * m * g, merging sorted term lists; used with
    /// a = lc(g), b = lc(self), m = lcm / lt(g) so the leading terms cancel.
    fn cross_scaled_sub(
        &self,
        a: &C,
        b: &C,
        m: &Monomial,
        g: &SortedPoly<C>,
        ord: &MonomialOrder,
    ) -> SortedPoly<C> {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match ord.cmp(&self.terms[i].0, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push((self.terms[i].0.clone(), self.terms[i].1.mul(a)));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((gm, g.terms[j].1.mul(b).neg()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = self.terms[i].1.mul(a).sub(&g.terms[j].1.mul(b));
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push((self.terms[i].0.clone(), self.terms[i].1.mul(a)));
            i += 1;
        }
        while j < g.terms.len() {
            out.push((g.terms[j].0.mul(m), g.terms[j].1.mul(b).neg()));
            j += 1;
        }
        SortedPoly { terms: out }
    }

    fn normalize_content(&mut self) {
        let mut coeffs: Vec<C> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        C::normalize_content(&mut coeffs);
        for ((_, slot), c) in self.terms.iter_mut().zip(coeffs) {
            *slot = c;
        }
    }
}

/// Fully reduce `f` against `basis`: the exact normal form, no term of which
/// is divisible by any basis leading monomial. Internally fraction-free with
/// per-term scale bookkeeping.
fn reduce_full<C: Field>(
    f: SortedPoly<C>,
    basis: &[SortedPoly<C>],
    ord: &MonomialOrder,
) -> SortedPoly<C> {
    let mut work = f;
    // (monomial, raw coefficient, cumulative scale at finalization)
    let mut done: Vec<(Monomial, C, C)> = Vec::new();
    let mut scale = C::one();
    let mut steps = 0usize;
    let mut cursor = 0usize; // terms before cursor are finalized in `work`
    while cursor < work.terms.len() {
        let (m, c) = work.terms[cursor].clone();
        // best reducer: fewest terms among those whose leading term divides m
        let mut reducer: Option<&SortedPoly<C>> = None;
        for g in basis {
            if g.leading().0.divides(&m) {
                if reducer.map_or(true, |r| g.terms.len() < r.terms.len()) {
                    reducer = Some(g);
                }
            }
        }
        match reducer {
            None => {
                done.push((m, c, scale.clone()));
                cursor += 1;
            }
            Some(g) => {
                let (gm, gc) = g.leading();
                let q = m.try_div(gm).expect("divisibility checked");
                let (a, b) = C::reduce_pair(gc, &c);
                // keep the finalized prefix out of the merge
                let suffix = SortedPoly { terms: work.terms.split_off(cursor) };
                let mut next = suffix.cross_scaled_sub(&a, &b, &q, g, ord);
                scale = scale.mul(&a);
                steps += 1;
                if steps % 4 == 0 && !next.is_zero() {
                    let before = next.leading().1.clone();
                    next.normalize_content();
                    let after = next.leading().1.clone();
                    // divide the tracked scale by the stripped factor
                    scale = scale.mul(&after).div(&before).expect("nonzero leading");
                }
                work.terms.extend(next.terms);
            }
        }
    }
    // true normal form: each finalized coefficient divided by its scale
    SortedPoly {
        terms: done
            .into_iter()
            .map(|(m, c, s)| {
                let coeff = c.div(&s).expect("scales are nonzero");
                (m, coeff)
            })
            .collect(),
    }
}

/// Remainder of `f` on division by `basis` under `ord`. The difference
/// `f - result` lies in the ideal generated by the basis.
pub fn normal_form<C: Field>(
    f: &MultiPoly<C>,
    basis: &[MultiPoly<C>],
    ord: &MonomialOrder,
) -> MultiPoly<C> {
    let sorted_basis: Vec<SortedPoly<C>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_multipoly(g, ord))
        .collect();
    let out = reduce_full(SortedPoly::from_multipoly(f, ord), &sorted_basis, ord);
    out.to_multipoly(f.nvars())
}

struct PairKey(Vec<u32>, Vec<u32>, usize, usize);

impl PartialEq for PairKey {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0 && self.1 == other.1 && self.2 == other.2 && self.3 == other.3
    }
}
impl Eq for PairKey {}
impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.0, &self.1, self.2, self.3).cmp(&(&other.0, &other.1, other.2, other.3))
    }
}

/// Pair bookkeeping with the Gebauer-Möller criteria.
struct PairSet {
    heap: BinaryHeap<Reverse<PairKey>>,
    live: HashSet<(usize, usize)>,
    ord: MonomialOrder,
}

impl PairSet {
    fn new(ord: MonomialOrder) -> Self {
        PairSet { heap: BinaryHeap::new(), live: HashSet::new(), ord }
    }

    fn push(&mut self, i: usize, j: usize, lcm: &Monomial) {
        let key = PairKey(self.ord.selection_key(lcm), lcm.exponents().to_vec(), i, j);
        if self.live.insert((i, j)) {
            self.heap.push(Reverse(key));
        }
    }

    fn cancel(&mut self, i: usize, j: usize) {
        self.live.remove(&(i, j));
    }

    fn pop(&mut self) -> Option<(u32, usize, usize)> {
        while let Some(Reverse(PairKey(key, _, i, j))) = self.heap.pop() {
            if self.live.remove(&(i, j)) {
                return Some((key.iter().sum(), i, j));
            }
        }
        None
    }

    /// Register basis element `s`, pruning with the B, M and F criteria.
    fn update<C: Field>(&mut self, basis: &[SortedPoly<C>], s: usize) {
        let lt = |k: usize| &basis[k].leading().0;
        let m_s = lt(s).clone();
        // B: cancel old pairs strictly refined by the new leading monomial
        let old: Vec<(usize, usize)> = self.live.iter().cloned().collect();
        for (i, j) in old {
            let lcm_ij = lt(i).lcm(lt(j));
            if m_s.divides(&lcm_ij) && lt(i).lcm(&m_s) != lcm_ij && lt(j).lcm(&m_s) != lcm_ij {
                self.cancel(i, j);
            }
        }
        // candidate new pairs, grouped by lcm
        let lcms: Vec<Monomial> = (0..s).map(|i| lt(i).lcm(&m_s)).collect();
        let mut keep: Vec<bool> = vec![true; s];
        // M: drop candidates whose lcm another candidate's lcm properly divides
        for i in 0..s {
            if !keep[i] {
                continue;
            }
            for j in 0..s {
                if i != j && lcms[j].divides(&lcms[i]) && lcms[j] != lcms[i] {
                    keep[i] = false;
                    break;
                }
            }
        }
        // F: one representative per equal-lcm class; a coprime member kills
        // the whole class (its S-polynomial reduces to zero)
        for i in 0..s {
            if !keep[i] {
                continue;
            }
            let class: Vec<usize> = (i..s).filter(|&j| keep[j] && lcms[j] == lcms[i]).collect();
            if class.iter().any(|&j| lt(j).coprime(&m_s)) {
                for &j in &class {
                    keep[j] = false;
                }
            } else {
                for &j in &class[1..] {
                    keep[j] = false;
                }
            }
        }
        for i in 0..s {
            if keep[i] {
                self.push(i, s, &lcms[i]);
            }
        }
    }
}

/// The unique reduced Gröbner basis of the given generators under `ord`.
pub fn buchberger<C: Field>(
    gens: &[MultiPoly<C>],
    ord: &MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<Vec<MultiPoly<C>>, PolyError> {
    let nvars = gens.iter().map(|g| g.nvars()).next().unwrap_or(0);
    let mut basis: Vec<SortedPoly<C>> = Vec::new();
    let mut pairs = PairSet::new(ord.clone());
    let mut spairs = 0usize;

    // seed the basis, reducing every generator against what is already there
    let mut queue: Vec<SortedPoly<C>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_multipoly(g, ord))
        .collect();
    queue.sort_by(|a, b| ord.cmp(&a.leading().0, &b.leading().0));
    for g in queue {
        let mut r = reduce_full(g, &basis, ord);
        if r.is_zero() {
            continue;
        }
        r.normalize_content();
        basis.push(r);
        pairs.update(&basis, basis.len() - 1);
    }

    while let Some((deg, i, j)) = pairs.pop() {
        if deg > cfg.max_degree {
            return Err(PolyError::ResourceLimit {
                what: format!("S-pair lcm degree {} exceeds cap {}", deg, cfg.max_degree),
                spairs,
                basis: basis.len(),
            });
        }
        spairs += 1;
        if spairs > cfg.max_spairs {
            return Err(PolyError::ResourceLimit {
                what: format!("S-pair count exceeds cap {}", cfg.max_spairs),
                spairs,
                basis: basis.len(),
            });
        }
        if spairs % 50 == 0 {
            log::debug!(
                "spairs {} deg {} basis {} queued {} max-terms {}",
                spairs,
                deg,
                basis.len(),
                pairs.live.len(),
                basis.iter().map(|g| g.terms.len()).max().unwrap_or(0)
            );
        }

        let (lm_i, lc_i) = basis[i].leading().clone();
        let (lm_j, lc_j) = basis[j].leading().clone();
        let lcm = lm_i.lcm(&lm_j);
        let qi = lcm.try_div(&lm_i).expect("lcm divisible");
        let qj = lcm.try_div(&lm_j).expect("lcm divisible");
        // S-polynomial, fraction-free: lc_j (qi f_i) - lc_i (qj f_j)
        let (a, b) = C::reduce_pair(&lc_j, &lc_i);
        let shifted_i = SortedPoly {
            terms: basis[i].terms.iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect(),
        };
        let spoly = shifted_i.cross_scaled_sub(&a, &b, &qj, &basis[j], ord);
        let mut rem = reduce_full(spoly, &basis, ord);
        if rem.is_zero() {
            continue;
        }
        rem.normalize_content();
        basis.push(rem);
        pairs.update(&basis, basis.len() - 1);
    }

    Ok(reduce_basis(basis, ord, nvars))
}

/// Minimalize and inter-reduce a Gröbner basis; output is monic, auto-reduced
/// and sorted descending by leading monomial.
fn reduce_basis<C: Field>(
    mut basis: Vec<SortedPoly<C>>,
    ord: &MonomialOrder,
    nvars: usize,
) -> Vec<MultiPoly<C>> {
    // minimal: drop any element whose leading monomial another one divides
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, mj) = (&basis[i].leading().0, &basis[j].leading().0);
            if mj.divides(mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<SortedPoly<C>> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // inter-reduce tails until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<SortedPoly<C>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let current = minimal[i].clone();
            let mut reduced = reduce_full(current, &others, ord);
            if reduced.is_zero() {
                minimal.remove(i);
                changed = true;
                break;
            }
            reduced.normalize_content();
            if reduced.terms != minimal[i].terms {
                changed = true;
                minimal[i] = reduced;
            }
        }
        if !changed {
            break;
        }
    }

    // monic + canonical sort
    let mut out: Vec<MultiPoly<C>> = minimal
        .iter()
        .map(|g| {
            let lc = g.leading().1.clone();
            let inv = lc.inv().expect("nonzero leading coefficient");
            MultiPoly::from_terms(nvars, g.terms.iter().map(|(m, c)| (m.clone(), c.mul(&inv))))
        })
        .collect();
    out.sort_by(|a, b| {
        let (ma, _) = a.leading_term(ord).expect("nonzero");
        let (mb, _) = b.leading_term(ord).expect("nonzero");
        ord.cmp(mb, ma)
    });
    out
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, VarSpec};
    use super::*;
    use crate::scalar::Rat;

    // a tiny 2-variable ring for classical examples, y1 > y2 under Lex
    fn ring2() -> std::sync::Arc<VarSpec> {
        VarSpec::new(vec![], 0, 2, false, false)
    }

    #[test]
    fn principal_monomial_is_its_own_basis() {
        let spec = ring2();
        let x = parse_poly("y1", &spec).unwrap();
        let gb = buchberger(&[x.clone()], &MonomialOrder::Lex, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb, vec![x]);
    }

    #[test]
    fn classic_lex_basis() {
        // {x^2 - y, x*y - 1} under lex x > y gives {x - y^2, y^3 - 1}
        let spec = ring2();
        let f1 = parse_poly("y1^2 - y2", &spec).unwrap();
        let f2 = parse_poly("y1*y2 - 1", &spec).unwrap();
        let gb = buchberger(&[f1.clone(), f2.clone()], &MonomialOrder::Lex, &GroebnerConfig::default()).unwrap();
        let expect1 = parse_poly("y1 - y2^2", &spec).unwrap();
        let expect2 = parse_poly("y2^3 - 1", &spec).unwrap();
        assert_eq!(gb, vec![expect1, expect2]);
        // every input generator reduces to zero
        for f in [&f1, &f2] {
            assert!(normal_form(f, &gb, &MonomialOrder::Lex).is_zero());
        }
    }

    #[test]
    fn normal_form_examples() {
        let spec = ring2();
        let ord = MonomialOrder::Lex;
        let basis = vec![parse_poly("y1^2 - y2", &spec).unwrap()];
        assert_eq!(
            normal_form(&parse_poly("y1^2", &spec).unwrap(), &basis, &ord),
            parse_poly("y2", &spec).unwrap()
        );
        let one = parse_poly("1", &spec).unwrap();
        assert_eq!(normal_form(&one, &basis, &ord), one);
        // exactness of the fraction-free route: 3*x^2 reduces to 3*y
        assert_eq!(
            normal_form(&parse_poly("3*y1^2 + y1", &spec).unwrap(), &basis, &ord),
            parse_poly("3*y2 + y1", &spec).unwrap()
        );
    }

    #[test]
    fn basis_is_canonical_under_permutation() {
        let spec = ring2();
        let f1 = parse_poly("y1^2 + y2^2 - 1", &spec).unwrap();
        let f2 = parse_poly("y1*y2 - 1", &spec).unwrap();
        let cfg = GroebnerConfig::default();
        let a = buchberger(&[f1.clone(), f2.clone()], &MonomialOrder::GrevLex, &cfg).unwrap();
        let b = buchberger(&[f2, f1], &MonomialOrder::GrevLex, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn s_polynomials_of_result_reduce_to_zero() {
        let spec = ring2();
        let ord = MonomialOrder::GrevLex;
        let gens = vec![
            parse_poly("y1^3 - 2*y1*y2", &spec).unwrap(),
            parse_poly("y1^2*y2 - 2*y2^2 + y1", &spec).unwrap(),
        ];
        let gb = buchberger(&gens, &ord, &GroebnerConfig::default()).unwrap();
        for i in 0..gb.len() {
            for j in 0..i {
                let (mi, ci) = gb[i].leading_term(&ord).unwrap();
                let (mj, cj) = gb[j].leading_term(&ord).unwrap();
                let lcm = mi.lcm(mj);
                let si = gb[i].mul_term(&lcm.try_div(mi).unwrap(), &Field::inv(ci).unwrap());
                let sj = gb[j].mul_term(&lcm.try_div(mj).unwrap(), &Field::inv(cj).unwrap());
                let spoly = si.sub(&sj);
                assert!(normal_form(&spoly, &gb, &ord).is_zero());
            }
        }
    }

    #[test]
    fn degree_cap_reports_resource_error() {
        let spec = ring2();
        let gens = vec![
            parse_poly("y1^2 - y2", &spec).unwrap(),
            parse_poly("y1*y2 - 1", &spec).unwrap(),
        ];
        let cfg = GroebnerConfig { max_degree: 1, max_spairs: 10 };
        match buchberger(&gens, &MonomialOrder::Lex, &cfg) {
            Err(PolyError::ResourceLimit { .. }) => {}
            other => panic!("expected resource error, got {:?}", other),
        }
        let _unused: Vec<MultiPoly<Rat>> = Vec::new();
    }
}
