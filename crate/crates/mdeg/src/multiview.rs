//! Generalised multi-view varieties: kernel profiles, the combinatorial
//! dimension and Chow-class formula, vision ideals by elimination, and
//! component candidates over the residue field.

use crate::building::{BuildingError, GammaConfig, Lattice};
use crate::matrix::Matrix;
use crate::poly::{
    AuxGroup, ChowClass, Field, GroebnerConfig, Ideal, MultiPoly, PolyError, VarSpec,
};
use crate::scalar::{Rat, TScalar};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiviewError {
    #[error("factor {0} has a zero matrix: empty image factor")]
    EmptyImageFactor(usize),
    #[error("factor {0} is not of full row rank")]
    RankDeficient(usize),
    #[error("inconsistent ranks: {0}")]
    InconsistentRanks(String),
    #[error("kernel profiles support at most 12 factors, got {0}")]
    TooManyFactors(usize),
    #[error(transparent)]
    Building(#[from] BuildingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A tuple of factor matrices B_i of shape l_i x d over a common field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CameraTuple<C: Field> {
    d: usize,
    mats: Vec<Matrix<C>>,
    allow_rank_deficient: bool,
}

impl<C: Field> CameraTuple<C> {
    /// Full-row-rank tuple, the default for vision ideals over a field.
    pub fn new(d: usize, mats: Vec<Matrix<C>>) -> Result<Self, MultiviewError> {
        let t = CameraTuple::allowing_rank_deficient(d, mats)?;
        for (i, m) in t.mats.iter().enumerate() {
            if m.rank() < m.rows() {
                return Err(MultiviewError::RankDeficient(i));
            }
        }
        Ok(CameraTuple { allow_rank_deficient: false, ..t })
    }

    /// Accept rank-deficient factors; factor matrices must still be nonzero.
    /// This is the reduction path used by component candidates.
    pub fn allowing_rank_deficient(d: usize, mats: Vec<Matrix<C>>) -> Result<Self, MultiviewError> {
        for (i, m) in mats.iter().enumerate() {
            if m.cols() != d {
                return Err(MultiviewError::InconsistentRanks(format!(
                    "factor {} has {} columns, ambient dimension is {}",
                    i + 1,
                    m.cols(),
                    d
                )));
            }
            if m.rows() == 0 || m.rows() > d {
                return Err(MultiviewError::InconsistentRanks(format!(
                    "factor {} has {} rows",
                    i + 1,
                    m.rows()
                )));
            }
            if m.is_zero_matrix() {
                return Err(MultiviewError::EmptyImageFactor(i));
            }
        }
        Ok(CameraTuple { d, mats, allow_rank_deficient: true })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn factor(&self, i: usize) -> &Matrix<C> {
        &self.mats[i]
    }

    pub fn factors(&self) -> &[Matrix<C>] {
        &self.mats
    }

    /// Row counts l_i, the factor block sizes.
    pub fn row_counts(&self) -> Vec<usize> {
        self.mats.iter().map(|m| m.rows()).collect()
    }

    pub fn to_json(&self) -> Vec<Vec<Vec<String>>> {
        self.mats
            .iter()
            .map(|m| (0..m.rows()).map(|i| m.row(i).iter().map(|c| c.to_string()).collect()).collect())
            .collect()
    }
}

impl CameraTuple<TScalar> {
    /// Parse from JSON rows of scalar strings (one matrix per factor).
    pub fn from_json(d: usize, rows: &[Vec<Vec<String>>]) -> Result<Self, MultiviewError> {
        let mut mats = Vec::new();
        for m in rows {
            let parsed: Result<Vec<Vec<TScalar>>, _> = m
                .iter()
                .map(|r| r.iter().map(|s| crate::scalar::parse_tscalar(s)).collect())
                .collect();
            let parsed = parsed.map_err(|e| MultiviewError::InconsistentRanks(e.to_string()))?;
            mats.push(Matrix::from_rows(parsed));
        }
        CameraTuple::new(d, mats)
    }
}

/// Exact kernel-intersection dimensions d_I for every nonempty subset I of
/// factors, stored by subset bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelProfile {
    d: usize,
    n: usize,
    dims: Vec<usize>,
}

impl KernelProfile {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the intersection of kernels over the subset mask.
    pub fn dim_of_mask(&self, mask: usize) -> usize {
        assert!(mask >= 1 && mask < (1 << self.n));
        self.dims[mask - 1]
    }

    /// Kernel dimensions of the single factors.
    pub fn singleton_dims(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.dim_of_mask(1 << i)).collect()
    }
}

/// Kernel-intersection dimensions by rank computation on stacked matrices.
pub fn kernel_dims<C: Field>(cams: &CameraTuple<C>) -> Result<KernelProfile, MultiviewError> {
    let n = cams.n();
    if n > 12 {
        return Err(MultiviewError::TooManyFactors(n));
    }
    let mut dims = Vec::with_capacity((1 << n) - 1);
    for mask in 1..(1usize << n) {
        let mut stacked: Option<Matrix<C>> = None;
        for i in 0..n {
            if mask & (1 << i) != 0 {
                stacked = Some(match stacked {
                    None => cams.factor(i).clone(),
                    Some(s) => s.vstack(cams.factor(i)),
                });
            }
        }
        let stacked = stacked.expect("nonempty mask");
        dims.push(cams.d() - stacked.rank());
    }
    Ok(KernelProfile { d: cams.d(), n, dims })
}

/// Kernel profile of the subspaces spanned by given generator matrices
/// (columns), used when the factors are described by quotient data rather
/// than matrices: d_I is the dimension of the intersection of the spans.
pub fn span_intersection_profile(
    d: usize,
    spans: &[Matrix<TScalar>],
) -> Result<KernelProfile, MultiviewError> {
    let n = spans.len();
    if n > 12 {
        return Err(MultiviewError::TooManyFactors(n));
    }
    let mut dims = Vec::with_capacity((1 << n) - 1);
    for mask in 1..(1usize << n) {
        // intersection of spans = kernel of the stacked annihilators; compute
        // via ranks: dim ∩ V_i = Σ dim V_i - dim Σ V_i is wrong for >2, so
        // intersect iteratively through kernels of stacked dual maps
        let mut inter: Option<Matrix<TScalar>> = None;
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            let v = spans[i].clone();
            inter = Some(match inter {
                None => v,
                Some(u) => {
                    // columns of u and v; solutions of u*a = v*b form the
                    // intersection: kernel of [u | -v]
                    if u.cols() == 0 || v.cols() == 0 {
                        Matrix::zero(d, 0)
                    } else {
                        let combined = u.hstack(&v.scale(&TScalar::from_int(-1)));
                        let ker = combined.kernel();
                        let mut cols = Vec::new();
                        for k in 0..ker.cols() {
                            let a: Vec<TScalar> = (0..u.cols()).map(|r| ker[(r, k)].clone()).collect();
                            let col = u.mul(&Matrix::from_cols(vec![a]));
                            cols.push((0..d).map(|r| col[(r, 0)].clone()).collect());
                        }
                        if cols.is_empty() {
                            Matrix::zero(d, 0)
                        } else {
                            Matrix::from_cols(cols)
                        }
                    }
                }
            });
        }
        let inter = inter.expect("nonempty mask");
        dims.push(if inter.cols() == 0 { 0 } else { inter.rank() });
    }
    Ok(KernelProfile { d, n, dims })
}

/// Admissible exponent tuples: all m with the maximal total degree r_0 such
/// that every nonempty subset I satisfies sum_{i in I} m_i < d - d_I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSet {
    pub r0: usize,
    pub tuples: Vec<Vec<usize>>,
}

pub fn admissible_tuples(profile: &KernelProfile) -> AdmissibleSet {
    let (n, d) = (profile.n(), profile.d());
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut r0 = 0usize;
    let mut m = vec![0usize; n];
    loop {
        if satisfies_constraints(profile, &m) {
            let total: usize = m.iter().sum();
            if total > r0 {
                r0 = total;
                best.clear();
            }
            if total == r0 {
                best.push(m.clone());
            }
        }
        // odometer over the box [0, d-1]^n
        let mut pos = 0;
        loop {
            if pos == n {
                best.sort();
                return AdmissibleSet { r0, tuples: best };
            }
            m[pos] += 1;
            if m[pos] <= d.saturating_sub(1) {
                break;
            }
            m[pos] = 0;
            pos += 1;
        }
    }
}

fn satisfies_constraints(profile: &KernelProfile, m: &[usize]) -> bool {
    let (n, d) = (profile.n(), profile.d());
    for mask in 1..(1usize << n) {
        let sum: usize = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| m[i]).sum();
        if sum + profile.dim_of_mask(mask) >= d {
            return false;
        }
    }
    true
}

/// Dimension p_0 and Chow class of the generalised multi-view variety with
/// the given kernel profile: the class is the sum over admissible tuples of
/// the monomials with exponents l_i - 1 - m_i, all coefficients 1.
pub fn dim_and_chow(
    profile: &KernelProfile,
    ranks: &[usize],
) -> Result<(usize, ChowClass), MultiviewError> {
    if ranks.len() != profile.n() {
        return Err(MultiviewError::InconsistentRanks(format!(
            "{} ranks for {} factors",
            ranks.len(),
            profile.n()
        )));
    }
    for (i, &l) in ranks.iter().enumerate() {
        let expect = profile.d() - profile.dim_of_mask(1 << i);
        if l != expect {
            return Err(MultiviewError::InconsistentRanks(format!(
                "factor {} has rank {}, kernel profile forces {}",
                i + 1,
                l,
                expect
            )));
        }
    }
    let adm = admissible_tuples(profile);
    let mut class = ChowClass::zero(ranks.to_vec());
    for m in &adm.tuples {
        let exps: Vec<u32> = m
            .iter()
            .zip(ranks)
            .map(|(&mi, &li)| (li - 1 - mi) as u32)
            .collect();
        class.add_term(&exps, 1.into());
    }
    debug_assert_eq!(class.num_terms(), adm.tuples.len(), "tuples map to distinct monomials");
    Ok((adm.r0, class))
}

/// The ring of the product of projective factors together with the scaling
/// and source parameters used to present the image of the vision map.
pub fn graph_spec(row_counts: &[usize], d: usize) -> Arc<VarSpec> {
    VarSpec::new(row_counts.to_vec(), row_counts.len(), d, false, false)
}

/// Generators of the graph of the scaled vision map: x_{ji} - z_i (B_i y)_j.
pub fn graph_generators<C: Field>(cams: &CameraTuple<C>, spec: &VarSpec) -> Vec<MultiPoly<C>> {
    let nv = spec.nvars();
    let z_idx = spec.indices_of(AuxGroup::Z);
    let y_idx = spec.indices_of(AuxGroup::Y);
    let mut gens = Vec::new();
    for i in 0..cams.n() {
        let b = cams.factor(i);
        for j in 0..b.rows() {
            let x = MultiPoly::var(nv, spec.x_index(i, j));
            let mut image = MultiPoly::zero(nv);
            for k in 0..cams.d() {
                let c = &b[(j, k)];
                if c.is_zero() {
                    continue;
                }
                image.add_term(
                    &crate::poly::Monomial::var(nv, z_idx[i]).mul(&crate::poly::Monomial::var(nv, y_idx[k])),
                    c,
                );
            }
            gens.push(x.sub(&image));
        }
    }
    gens
}

/// Reduced presentation of the image cone: one scaling is absorbed into the
/// source, and a full-row-rank pivot factor's equations are solved for part
/// of the source variables. Falls back to the full graph when no factor has
/// full row rank.
pub struct ReducedGraph<C: Field> {
    pub spec: std::sync::Arc<VarSpec>,
    pub gens: Vec<MultiPoly<C>>,
}

pub fn reduced_graph<C: Field>(cams: &CameraTuple<C>) -> ReducedGraph<C> {
    let n = cams.n();
    let d = cams.d();
    let ranks = cams.row_counts();
    let pivot = (0..n)
        .filter(|&i| cams.factor(i).rank() == ranks[i])
        .max_by_key(|&i| ranks[i]);
    let Some(p) = pivot else {
        // every factor is rank-deficient: keep the full graph
        let spec = graph_spec(&ranks, d);
        let gens = graph_generators(cams, &spec);
        return ReducedGraph { spec, gens };
    };
    let b_p = cams.factor(p);
    let lp = ranks[p];
    // choose lp independent columns of the pivot factor
    let mut chosen: Vec<usize> = Vec::new();
    for col in 0..d {
        if chosen.len() == lp {
            break;
        }
        let mut attempt = chosen.clone();
        attempt.push(col);
        let sub = select_cols(b_p, &attempt);
        if sub.rank() == attempt.len() {
            chosen = attempt;
        }
    }
    debug_assert_eq!(chosen.len(), lp);
    let free: Vec<usize> = (0..d).filter(|c| !chosen.contains(c)).collect();
    let b_s_inv = select_cols(b_p, &chosen).inverse().expect("independent columns");
    let b_free = select_cols(b_p, &free);
    // y_S = B_S^{-1} x_p - B_S^{-1} B_free y_free
    let minus_c = b_s_inv.mul(&b_free);
    // ring: x-blocks, one scaling per non-pivot factor, the free sources
    let nz = n - 1;
    let ny = d - lp;
    let spec = VarSpec::new(ranks.clone(), nz, ny, false, false);
    let nv = spec.nvars();
    let z_idx = spec.indices_of(AuxGroup::Z);
    let y_idx = spec.indices_of(AuxGroup::Y);
    let mut gens = Vec::new();
    for (slot, r) in (0..n).filter(|&r| r != p).enumerate() {
        let b_r = cams.factor(r);
        // B_r y = D x_p + E y_free
        let d_r = select_cols(b_r, &chosen).mul(&b_s_inv);
        let e_r = select_cols(b_r, &free).sub(&select_cols(b_r, &chosen).mul(&minus_c));
        for j in 0..b_r.rows() {
            let mut gen = MultiPoly::var(nv, spec.x_index(r, j));
            for k in 0..lp {
                let c = &d_r[(j, k)];
                if c.is_zero() {
                    continue;
                }
                let m = crate::poly::Monomial::var(nv, z_idx[slot])
                    .mul(&crate::poly::Monomial::var(nv, spec.x_index(p, k)));
                gen.add_term(&m, &c.neg());
            }
            for k in 0..ny {
                let c = &e_r[(j, k)];
                if c.is_zero() {
                    continue;
                }
                let m = crate::poly::Monomial::var(nv, z_idx[slot])
                    .mul(&crate::poly::Monomial::var(nv, y_idx[k]));
                gen.add_term(&m, &c.neg());
            }
            gens.push(gen);
        }
    }
    ReducedGraph { spec, gens }
}

fn select_cols<C: Field>(m: &Matrix<C>, cols: &[usize]) -> Matrix<C> {
    let mut out: Matrix<C> = Matrix::zero(m.rows(), cols.len());
    for (j, &c) in cols.iter().enumerate() {
        for i in 0..m.rows() {
            out[(i, j)] = m[(i, c)].clone();
        }
    }
    out
}

/// The multihomogeneous prime ideal of the closure of the image of the
/// vision map, by elimination of the source and scaling parameters.
pub fn vision_ideal<C: Field>(
    cams: &CameraTuple<C>,
    cfg: &GroebnerConfig,
) -> Result<Ideal<C>, MultiviewError> {
    for (i, m) in cams.factors().iter().enumerate() {
        if m.is_zero_matrix() {
            return Err(MultiviewError::EmptyImageFactor(i));
        }
    }
    let reduced = reduced_graph(cams);
    let graph = Ideal::new(reduced.spec, reduced.gens)?.with_config(cfg.clone());
    let mut drop = Vec::new();
    if !graph.spec().indices_of(AuxGroup::Z).is_empty() {
        drop.push(AuxGroup::Z);
    }
    if !graph.spec().indices_of(AuxGroup::Y).is_empty() {
        drop.push(AuxGroup::Y);
    }
    if drop.is_empty() {
        return Ok(graph);
    }
    Ok(graph.eliminate(&drop)?)
}

/// The factor matrices of the coordinate presentation: for each quotient
/// lattice, the matrix over the valued field of the composite map from the
/// reference lattice to the quotient, in the bases fixed by the construction
/// (submodule columns solved in the lattice basis; complement given by the
/// non-pivot coordinates in increasing order).
pub fn factor_map_matrices(
    cfg: &GammaConfig,
    reference: &Lattice,
    units: Option<&[Matrix<TScalar>]>,
) -> Result<Vec<Matrix<TScalar>>, MultiviewError> {
    cfg.validate()?;
    if reference.dim() != cfg.d {
        return Err(MultiviewError::Building(BuildingError::DimensionMismatch(
            reference.dim(),
            cfg.d,
        )));
    }
    if let Some(us) = units {
        if us.len() != cfg.n_factors() {
            return Err(MultiviewError::InconsistentRanks(
                "one unit matrix per factor required".into(),
            ));
        }
    }
    let d = cfg.d;
    let href = reference.basis();
    let mut out = Vec::new();
    for (idx, q) in cfg.data.iter().enumerate() {
        let b_inv = q
            .lattice()
            .basis()
            .inverse()
            .expect("lattice bases are invertible");
        let p = match units {
            None => b_inv,
            Some(us) => {
                let u_inv = us[idx].inverse().ok_or_else(|| {
                    MultiviewError::InconsistentRanks(format!("unit {} is singular", idx + 1))
                })?;
                if !us[idx].entries().all(|e| e.is_integral()) || !us[idx].det().is_unit() {
                    return Err(MultiviewError::InconsistentRanks(format!(
                        "matrix {} is not a unit over the valuation ring",
                        idx + 1
                    )));
                }
                u_inv.mul(&b_inv)
            }
        };
        let sub_coords = if q.sub_rank() == 0 {
            Matrix::zero(d, 0)
        } else {
            let n_i = p.mul(q.sub());
            if n_i.entries().any(|e| !e.is_integral()) {
                return Err(MultiviewError::Building(BuildingError::InvalidConfig(format!(
                    "submodule of factor {} leaves the lattice under the chosen bases",
                    idx + 1
                ))));
            }
            n_i
        };
        let pivot_rows = unit_pivot_rows(&sub_coords)?;
        let complement: Vec<usize> = (0..d).filter(|r| !pivot_rows.contains(r)).collect();
        debug_assert_eq!(complement.len(), q.quotient_rank());
        // R_i: the complement rows of the inverse of [n_i | complement]
        let mut ext_cols: Vec<Vec<TScalar>> = (0..sub_coords.cols())
            .map(|j| (0..d).map(|i| sub_coords[(i, j)].clone()).collect())
            .collect();
        for &r in &complement {
            let mut e = vec![TScalar::zero(); d];
            e[r] = TScalar::one();
            ext_cols.push(e);
        }
        let ext = Matrix::from_cols(ext_cols);
        let ext_inv = ext.inverse().expect("direct summand extension is invertible");
        let rows: Vec<usize> = (sub_coords.cols()..d).collect();
        let r_i = ext_inv.select_rows(&rows);
        out.push(r_i.mul(&p).mul(href));
    }
    Ok(out)
}

/// Pivot rows of a direct-summand column set via column reduction over the
/// valuation ring; every pivot must be a unit.
fn unit_pivot_rows(m: &Matrix<TScalar>) -> Result<Vec<usize>, MultiviewError> {
    let mut work = m.clone();
    let (rows, cols) = (work.rows(), work.cols());
    let mut pivots: Vec<usize> = Vec::new();
    for k in 0..cols {
        let mut best: Option<(usize, i64)> = None;
        for i in 0..rows {
            if pivots.contains(&i) {
                continue;
            }
            if let Ok(v) = work[(i, k)].val() {
                if best.map_or(true, |(_, bv)| v < bv) {
                    best = Some((i, v));
                }
            }
        }
        let Some((pi, val)) = best else {
            return Err(MultiviewError::Building(BuildingError::InvalidConfig(
                "dependent submodule generators".into(),
            )));
        };
        if val != 0 {
            return Err(MultiviewError::Building(BuildingError::InvalidConfig(
                "submodule is not a direct summand".into(),
            )));
        }
        let inv = work[(pi, k)].inv().expect("unit pivot");
        for j in (k + 1)..cols {
            if work[(pi, j)].is_zero() {
                continue;
            }
            let c = &work[(pi, j)] * &inv;
            for i in 0..rows {
                let sub = &c * &work[(i, k)];
                work[(i, j)] = &work[(i, j)] - &sub;
            }
        }
        pivots.push(pi);
    }
    Ok(pivots)
}

/// A component candidate: the residue-field vision ideal of the reduced
/// factor matrices for a chosen reference lattice.
#[derive(Debug, Clone)]
pub struct ComponentCandidate {
    pub ideal: Ideal<Rat>,
    /// Reduced factor matrices over the residue field.
    pub factor_matrices: Vec<Matrix<Rat>>,
    /// Per-factor valuation shifts applied before reduction.
    pub scaling_exponents: Vec<i64>,
    /// Row ranks of the reduced matrices (may drop below the block sizes).
    pub residue_ranks: Vec<usize>,
}

/// Candidate obtained from the canonical choice of transition maps.
pub fn component_candidate(
    cfg: &GammaConfig,
    reference: &Lattice,
    gcfg: &GroebnerConfig,
) -> Result<ComponentCandidate, MultiviewError> {
    component_candidate_with_units(cfg, reference, None, gcfg)
}

/// Candidate with explicit unit matrices twisting each transition map; the
/// resulting ideal is expected to be independent of the units.
pub fn component_candidate_with_units(
    cfg: &GammaConfig,
    reference: &Lattice,
    units: Option<&[Matrix<TScalar>]>,
    gcfg: &GroebnerConfig,
) -> Result<ComponentCandidate, MultiviewError> {
    let gs = factor_map_matrices(cfg, reference, units)?;
    let mut reduced = Vec::new();
    let mut shifts = Vec::new();
    for g in &gs {
        let s = g
            .entries()
            .filter_map(|e| e.val().ok())
            .min()
            .expect("factor map is nonzero");
        let h = g
            .map(|e| e.mul_t_pow(-s))
            .try_map(|e| e.reduce_mod_t())
            .expect("entries are integral after the shift");
        assert!(!h.is_zero_matrix(), "valuation shift leaves a unit entry");
        reduced.push(h);
        shifts.push(s);
    }
    let ranks = reduced.iter().map(|h| h.rank()).collect();
    let cams = CameraTuple::allowing_rank_deficient(cfg.d, reduced.clone())?;
    let ideal = vision_ideal(&cams, gcfg)?;
    Ok(ComponentCandidate {
        ideal,
        factor_matrices: reduced,
        scaling_exponents: shifts,
        residue_ranks: ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{GammaConfig, QuotientLatticeDatum};
    use crate::poly::{collect_t, parse_poly};
    use crate::scalar::{parse_tscalar, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ts(s: &str) -> TScalar {
        parse_tscalar(s).unwrap()
    }

    pub(crate) fn three_views_cameras() -> CameraTuple<TScalar> {
        let a1 = Matrix::from_rows(vec![
            vec![ts("1"), ts("0"), ts("0")],
            vec![ts("0"), ts("1"), ts("0")],
        ]);
        let a2 = Matrix::from_rows(vec![
            vec![ts("1"), ts("0"), ts("0")],
            vec![ts("0"), ts("0"), ts("t")],
        ]);
        let a3 = Matrix::from_rows(vec![
            vec![ts("0"), ts("t"), ts("0")],
            vec![ts("0"), ts("0"), ts("1")],
        ]);
        CameraTuple::new(3, vec![a1, a2, a3]).unwrap()
    }

    /// The shipped three-lattice configuration in dimension 3.
    pub(crate) fn three_views_config() -> GammaConfig {
        let text = r#"{
            "d": 3,
            "quotient_lattices": [
                { "L": [["1","0","0"],["0","1","0"],["0","0","1"]], "M": [["0","0","1"]] },
                { "L": [["1","0","0"],["0","1","0"],["0","0","t^-1"]], "M": [["0","1","0"]] },
                { "L": [["1","0","0"],["0","t^-1","0"],["0","0","1"]], "M": [["1","0","0"]] }
            ]
        }"#;
        GammaConfig::from_json_str(text).unwrap()
    }

    #[test]
    fn kernel_dims_of_the_three_view_fixture() {
        let profile = kernel_dims(&three_views_cameras()).unwrap();
        assert_eq!(profile.singleton_dims(), vec![1, 1, 1]);
        for mask in 1..8usize {
            if mask.count_ones() >= 2 {
                assert_eq!(profile.dim_of_mask(mask), 0);
            }
        }
    }

    #[test]
    fn kernel_dims_rank_nullity() {
        let b = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(0), rat_int(2), rat_int(1)],
            vec![rat_int(0), rat_int(1), rat_int(1), rat_int(3)],
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(1)],
        ]);
        let cams = CameraTuple::new(4, vec![b]).unwrap();
        let profile = kernel_dims(&cams).unwrap();
        assert_eq!(profile.singleton_dims(), vec![1]);
    }

    #[test]
    fn admissible_tuples_examples() {
        let profile = kernel_dims(&three_views_cameras()).unwrap();
        let adm = admissible_tuples(&profile);
        assert_eq!(adm.r0, 2);
        assert_eq!(adm.tuples, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);

        // single full quotient in dimension 3
        let id = CameraTuple::new(3, vec![Matrix::<Rat>::identity(3)]).unwrap();
        let single = admissible_tuples(&kernel_dims(&id).unwrap());
        assert_eq!(single.r0, 2);
        assert_eq!(single.tuples, vec![vec![2]]);
    }

    pub(crate) fn random_pinhole_pair(rng: &mut ChaCha8Rng) -> CameraTuple<Rat> {
        loop {
            let mats: Vec<Matrix<Rat>> = (0..2)
                .map(|_| {
                    Matrix::from_rows(
                        (0..3)
                            .map(|_| (0..4).map(|_| rat_int(rng.gen_range(-9..=9))).collect())
                            .collect(),
                    )
                })
                .collect();
            if let Ok(cams) = CameraTuple::new(4, mats) {
                let profile = kernel_dims(&cams).unwrap();
                if profile.singleton_dims() == vec![1, 1] && profile.dim_of_mask(3) == 0 {
                    return cams;
                }
            }
        }
    }

    #[test]
    fn dim_and_chow_examples() {
        let profile = kernel_dims(&three_views_cameras()).unwrap();
        let (p0, class) = dim_and_chow(&profile, &[2, 2, 2]).unwrap();
        assert_eq!(p0, 2);
        assert_eq!(class.to_string(), "H1 + H2 + H3");

        let id = CameraTuple::new(3, vec![Matrix::<Rat>::identity(3)]).unwrap();
        let (p0, class) = dim_and_chow(&kernel_dims(&id).unwrap(), &[3]).unwrap();
        assert_eq!(p0, 2);
        assert!(class.is_one());

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cams = random_pinhole_pair(&mut rng);
        let profile = kernel_dims(&cams).unwrap();
        let adm = admissible_tuples(&profile);
        assert_eq!(adm.r0, 3);
        assert_eq!(adm.tuples, vec![vec![1, 2], vec![2, 1]]);
        let (p0, class) = dim_and_chow(&profile, &[3, 3]).unwrap();
        assert_eq!(p0, 3);
        assert_eq!(class.to_string(), "H1 + H2");

        assert!(dim_and_chow(&profile, &[3, 2]).is_err());
    }

    #[test]
    fn vision_ideal_of_the_three_view_fixture() {
        let cams = three_views_cameras();
        let ideal = vision_ideal(&cams, &GroebnerConfig::default()).unwrap();
        // expected: the principal ideal generated by t^2 x21 x12 x23 - x11 x22 x13
        let tspec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
        let f = parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &tspec).unwrap();
        let expect = collect_t(&Ideal::new(tspec, vec![f]).unwrap()).unwrap();
        assert!(ideal.equals(&expect).unwrap());
    }

    #[test]
    fn vision_ideal_trivial_cases() {
        let id = CameraTuple::new(3, vec![Matrix::<Rat>::identity(3)]).unwrap();
        let ideal = vision_ideal(&id, &GroebnerConfig::default()).unwrap();
        assert!(ideal.is_zero_ideal());

        // two generic plane cameras are jointly dominant
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mats: Vec<Matrix<Rat>> = (0..2)
            .map(|_| {
                Matrix::from_rows(
                    (0..2)
                        .map(|_| (0..3).map(|_| rat_int(rng.gen_range(-9..=9))).collect())
                        .collect(),
                )
            })
            .collect();
        let cams = CameraTuple::new(3, mats).unwrap();
        let ideal = vision_ideal(&cams, &GroebnerConfig::default()).unwrap();
        assert!(ideal.is_zero_ideal());
        assert_eq!(ideal.dimension().unwrap(), 2);
        assert!(ideal.multidegree().unwrap().is_one());
    }

    #[test]
    fn vision_ideal_generators_vanish_under_substitution() {
        let cams = three_views_cameras();
        let ideal = vision_ideal(&cams, &GroebnerConfig::default()).unwrap();
        let spec = graph_spec(&cams.row_counts(), cams.d());
        let (big, inj) = ideal.spec().extend(cams.n(), cams.d(), false, false);
        assert_eq!(*big, *spec);
        let z_idx = big.indices_of(AuxGroup::Z);
        let y_idx = big.indices_of(AuxGroup::Y);
        let mut map = std::collections::BTreeMap::new();
        for i in 0..cams.n() {
            for j in 0..cams.factor(i).rows() {
                let mut image: MultiPoly<TScalar> = MultiPoly::zero(big.nvars());
                for k in 0..cams.d() {
                    image.add_term(
                        &crate::poly::Monomial::var(big.nvars(), z_idx[i])
                            .mul(&crate::poly::Monomial::var(big.nvars(), y_idx[k])),
                        &cams.factor(i)[(j, k)],
                    );
                }
                map.insert(big.x_index(i, j), image);
            }
        }
        for g in ideal.generators() {
            let lifted = g.inject(&inj, big.nvars());
            assert!(lifted.substitute(&map).is_zero());
        }
    }

    #[test]
    fn pinhole_pair_has_one_bilinear_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let cams = random_pinhole_pair(&mut rng);
        let ideal = vision_ideal(&cams, &GroebnerConfig::default()).unwrap();
        let basis = ideal.reduced_basis().unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(ideal.spec().block_degrees(basis[0].leading_term(&ideal.default_order()).unwrap().0), vec![1, 1]);
        assert_eq!(ideal.dimension().unwrap(), 3);
        assert_eq!(ideal.multidegree().unwrap().to_string(), "H1 + H2");
    }

    fn reference_from_diag(entries: &[&str]) -> Lattice {
        let d = entries.len();
        let mut m: Matrix<TScalar> = Matrix::zero(d, d);
        for (i, s) in entries.iter().enumerate() {
            m[(i, i)] = ts(s);
        }
        Lattice::new(m).unwrap()
    }

    #[test]
    fn factor_maps_reproduce_the_fixture_presentations() {
        let cfg = three_views_config();
        // with the first lattice as reference, the construction produces the
        // fixture camera matrices
        let gs = factor_map_matrices(&cfg, &cfg.data[0].lattice().clone(), None).unwrap();
        let cams = three_views_cameras();
        for (g, b) in gs.iter().zip(cams.factors()) {
            assert_eq!(g, b);
        }
    }

    #[test]
    fn component_candidates_of_the_shipped_references() {
        let cfg = three_views_config();
        let gcfg = GroebnerConfig::default();
        let cases = [
            (vec!["t^-1", "t^-1", "1"], "x22"),
            (vec!["t", "t^-1", "1"], "x11"),
            (vec!["1", "1", "t^-1"], "x13"),
        ];
        for (diag_entries, expected_gen) in cases {
            let reference = reference_from_diag(&diag_entries);
            let cand = component_candidate(&cfg, &reference, &gcfg).unwrap();
            let spec = cand.ideal.spec().clone();
            let expect =
                Ideal::new(spec.clone(), vec![parse_poly(expected_gen, &spec).unwrap()]).unwrap();
            assert!(
                cand.ideal.equals(&expect).unwrap(),
                "candidate for {:?} is {:?}, expected <{}>",
                diag_entries,
                cand.ideal.render().unwrap(),
                expected_gen
            );
        }
        // the first reference reproduces the printed reduced matrices
        let reference = reference_from_diag(&["t^-1", "t^-1", "1"]);
        let cand = component_candidate(&cfg, &reference, &gcfg).unwrap();
        let h2 = &cand.factor_matrices[1];
        assert_eq!(h2[(0, 0)], rat_int(1));
        assert!(h2[(1, 0)].is_zero() && h2[(1, 1)].is_zero() && h2[(1, 2)].is_zero());
        assert_eq!(cand.residue_ranks, vec![2, 1, 2]);
    }

    #[test]
    fn single_quotient_candidate_is_the_whole_space() {
        let l = Lattice::standard(3);
        let q = QuotientLatticeDatum::whole(l.clone());
        let cfg = GammaConfig::new(3, vec![q], None);
        let cand = component_candidate(&cfg, &l, &GroebnerConfig::default()).unwrap();
        assert!(cand.ideal.is_zero_ideal());
    }

    #[test]
    fn candidate_is_homothety_invariant() {
        let cfg = three_views_config();
        let gcfg = GroebnerConfig::default();
        let reference = reference_from_diag(&["t^-1", "t^-1", "1"]);
        let base = component_candidate(&cfg, &reference, &gcfg).unwrap();
        // scale the reference lattice
        let scaled_ref = reference.scale_t(2);
        let a = component_candidate(&cfg, &scaled_ref, &gcfg).unwrap();
        assert!(a.ideal.equals(&base.ideal).unwrap());
        // scale a quotient-lattice pair
        let mut cfg2 = cfg.clone();
        cfg2.data[1] = cfg2.data[1].scale_t(-3);
        let b = component_candidate(&cfg2, &reference, &gcfg).unwrap();
        assert!(b.ideal.equals(&base.ideal).unwrap());
    }
}
