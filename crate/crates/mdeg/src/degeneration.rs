//! The end-to-end degeneration pipeline: the family's defining ideal over the
//! polynomial ring with t smallest, its t-saturation, the special fibre,
//! component-candidate verdicts with class bookkeeping, and the generic
//! initial ideal experiment.

use crate::building::{matrix_to_columns, BuildingError, GammaConfig, GammaConfigJson, Lattice};
use crate::matrix::Matrix;
use crate::multiview::{
    self, admissible_tuples, component_candidate, dim_and_chow, kernel_dims, CameraTuple,
    ComponentCandidate, MultiviewError,
};
use crate::poly::{
    collect_t, specialize_t0, AuxGroup, ChowClass, Field, GroebnerConfig, Ideal, Monomial,
    MultiPoly, PolyError, VarSpec, VarSpecJson,
};
use crate::scalar::{rat_int, Rat, TPoly, TScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegenError {
    #[error(transparent)]
    Building(#[from] BuildingError),
    #[error(transparent)]
    Multiview(#[from] MultiviewError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("experiment failed: {0}")]
    Experiment(String),
}

/// How the family ideal over the polynomial ring in t is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionRoute {
    /// Compute the generic fibre over the field of rational functions in t,
    /// clear denominators, then t-saturate. The default.
    ViaField,
    /// Treat t as the smallest ring variable throughout the elimination.
    /// Exact but much heavier; kept as a cross-check at fixture scale.
    PolynomialT,
}

/// Knobs for a pipeline run.
#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub groebner: GroebnerConfig,
    /// Also try every class in the convex hull of the lattice classes as a
    /// candidate reference.
    pub hull_candidates: bool,
    /// Number of nonzero rational points t = c at which the saturated ideal
    /// is checked to recover the vision ideal of the specialized maps.
    pub recovery_checks: usize,
    /// Seed for the deterministic choice of recovery points.
    pub seed: u64,
    pub route: ContractionRoute,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            groebner: GroebnerConfig::default(),
            hull_candidates: false,
            recovery_checks: 1,
            seed: 0,
            route: ContractionRoute::ViaField,
        }
    }
}

/// The family's ideals over the ring with t as the smallest variable.
#[derive(Debug, Clone)]
pub struct MustafinIdeals {
    /// Ring of the product factors plus t.
    pub spec: Arc<VarSpec>,
    /// Eliminated graph ideal, before t-saturation.
    pub generic: Ideal<Rat>,
    /// The t-saturated defining ideal of the family.
    pub saturated: Ideal<Rat>,
    /// Factor map matrices over the valued field.
    pub factor_maps: Vec<Matrix<TScalar>>,
    /// Denominator-cleared factor maps (polynomial entries).
    pub cleared_maps: Vec<Matrix<TScalar>>,
}

/// Clear denominators and strip the common power of t from a factor map; the
/// result has polynomial entries with minimal valuation 0.
fn clear_factor_map(g: &Matrix<TScalar>) -> Matrix<TScalar> {
    let mut den = TPoly::one();
    for e in g.entries() {
        den = den.lcm(e.denom());
    }
    let cleared = g.scale(&TScalar::from_tpoly(den));
    let min_val = cleared
        .entries()
        .filter_map(|e| e.val().ok())
        .min()
        .expect("factor map is nonzero");
    cleared.map(|e| e.mul_t_pow(-min_val))
}

/// Move a generator with coefficients in the valued field into the
/// polynomial ring with t smallest: clear the coefficient denominators, strip
/// the common power of t, expand t into exponents.
fn clear_generator_to_qt(
    g: &MultiPoly<TScalar>,
    inj: &[usize],
    big_nvars: usize,
    t_idx: usize,
) -> MultiPoly<Rat> {
    let mut den = TPoly::one();
    for (_, c) in g.terms() {
        den = den.lcm(c.denom());
    }
    let den = TScalar::from_tpoly(den);
    let min_val = g
        .terms()
        .map(|(_, c)| c.mul(&den).val().expect("nonzero coefficient"))
        .min()
        .unwrap_or(0);
    let mut out: MultiPoly<Rat> = MultiPoly::zero(big_nvars);
    for (m, c) in g.terms() {
        let cleared = c.mul(&den).mul_t_pow(-min_val);
        let p = cleared.as_tpoly().expect("denominator cleared");
        let base = m.inject(inj, big_nvars);
        for (e, r) in p.terms() {
            out.add_term(&base.with_exp(t_idx, e as u32), r);
        }
    }
    out
}

/// Compute the family's defining ideal for a chosen reference lattice
/// (default: the configuration's reference, else the first lattice): the
/// reduced graph of the scaled factor maps over the valued field is cleared
/// into the polynomial ring with t smallest, eliminated down to the
/// coordinate ring, then t-saturated.
pub fn mustafin_ideal(
    cfg: &GammaConfig,
    reference: Option<&Lattice>,
    opts: &PipelineOptions,
) -> Result<MustafinIdeals, DegenError> {
    cfg.validate()?;
    let href = match reference {
        Some(r) => r.clone(),
        None => cfg.reference_lattice(),
    };
    let factor_maps = multiview::factor_map_matrices(cfg, &href, None)?;
    let cleared: Vec<Matrix<TScalar>> = factor_maps.iter().map(clear_factor_map).collect();
    let cams = CameraTuple::new(cfg.d, factor_maps.clone())?;
    let generic = match opts.route {
        ContractionRoute::ViaField => {
            // generic fibre over the field of rational functions, then clear
            let jk = multiview::vision_ideal::<TScalar>(&cams, &opts.groebner)?;
            let basis = jk.reduced_basis()?;
            let polynomial_gens: Vec<MultiPoly<TScalar>> = basis
                .iter()
                .map(|g| {
                    let mut den = TPoly::one();
                    for (_, c) in g.terms() {
                        den = den.lcm(c.denom());
                    }
                    let den = TScalar::from_tpoly(den);
                    let min_val = g
                        .terms()
                        .map(|(_, c)| c.mul(&den).val().expect("nonzero coefficient"))
                        .min()
                        .unwrap_or(0);
                    g.map_coeffs(|c| c.mul(&den).mul_t_pow(-min_val))
                })
                .collect();
            let over_scalars = Ideal::new(jk.spec().clone(), polynomial_gens)?
                .with_config(opts.groebner.clone());
            crate::poly::expand_t(&over_scalars)?
        }
        ContractionRoute::PolynomialT => {
            let reduced = multiview::reduced_graph(&cams);
            let (big, inj) = reduced.spec.extend(0, 0, false, true);
            let t_idx = big.t_index().expect("just added");
            let gens: Vec<MultiPoly<Rat>> = reduced
                .gens
                .iter()
                .map(|g| clear_generator_to_qt(g, &inj, big.nvars(), t_idx))
                .collect();
            let graph = Ideal::new(big.clone(), gens)?.with_config(opts.groebner.clone());
            let mut drop = Vec::new();
            if !big.indices_of(AuxGroup::Z).is_empty() {
                drop.push(AuxGroup::Z);
            }
            if !big.indices_of(AuxGroup::Y).is_empty() {
                drop.push(AuxGroup::Y);
            }
            if drop.is_empty() { graph } else { graph.eliminate(&drop)? }
        }
    };
    let spec = generic.spec().clone();
    let t_poly = MultiPoly::<Rat>::var(spec.nvars(), spec.t_index().expect("t present"));
    let saturated = generic.saturate(&t_poly)?;
    Ok(MustafinIdeals { spec, generic, saturated, factor_maps, cleared_maps: cleared })
}

/// The special fibre: reduce the saturated ideal's reduced basis modulo t.
pub fn special_fibre(saturated: &Ideal<Rat>) -> Result<Ideal<Rat>, DegenError> {
    let basis = saturated.reduced_basis()?;
    let reduced = Ideal::new(saturated.spec().clone(), basis.to_vec())?
        .with_config(saturated.config().clone());
    let over_scalars = collect_t(&reduced)?;
    Ok(specialize_t0(&over_scalars)?)
}

/// Upper bound |N_Gamma| for the number of irreducible components of the
/// special fibre, from the kernel profile of the generic-fibre factor maps.
pub fn component_bound(cfg: &GammaConfig, _opts: &PipelineOptions) -> Result<usize, DegenError> {
    cfg.validate()?;
    let href = cfg.reference_lattice();
    let maps = multiview::factor_map_matrices(cfg, &href, None)?;
    let cams = CameraTuple::new(cfg.d, maps)?;
    let profile = kernel_dims(&cams)?;
    Ok(admissible_tuples(&profile).tuples.len())
}

/// Verdict for one reference lattice: the candidate, containment of the
/// special fibre, dimension match, and the candidate's Chow class.
#[derive(Debug, Clone)]
pub struct CandidateVerdict {
    pub reference: Lattice,
    pub candidate: Option<ComponentCandidate>,
    pub candidate_dimension: Option<i64>,
    pub chow_class: Option<ChowClass>,
    pub contains_special_fibre: bool,
    pub dimension_match: bool,
    pub is_component: bool,
    pub error: Option<String>,
}

/// Check a list of candidate references against the special fibre. Failures
/// are captured per candidate, never thrown.
pub fn component_check(
    j_tilde: &Ideal<Rat>,
    cfg: &GammaConfig,
    references: &[Lattice],
    opts: &PipelineOptions,
) -> Vec<CandidateVerdict> {
    let fibre_dim = j_tilde.dimension().ok();
    references
        .iter()
        .map(|reference| {
            let attempt = (|| -> Result<CandidateVerdict, DegenError> {
                let cand = component_candidate(cfg, reference, &opts.groebner)?;
                let contains = cand.ideal.contains(j_tilde)?;
                let dim = cand.ideal.dimension()?;
                let chow = cand.ideal.multidegree()?;
                let dim_match = fibre_dim == Some(dim);
                Ok(CandidateVerdict {
                    reference: reference.clone(),
                    candidate_dimension: Some(dim),
                    chow_class: Some(chow),
                    contains_special_fibre: contains,
                    dimension_match: dim_match,
                    is_component: contains && dim_match,
                    candidate: Some(cand),
                    error: None,
                })
            })();
            attempt.unwrap_or_else(|e| CandidateVerdict {
                reference: reference.clone(),
                candidate: None,
                candidate_dimension: None,
                chow_class: None,
                contains_special_fibre: false,
                dimension_match: false,
                is_component: false,
                error: Some(e.to_string()),
            })
        })
        .collect()
}

/// Consistency certificates attached to every degeneration report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// (J' : t) = J'.
    pub saturation_fixed_point: bool,
    /// J' specialized at random nonzero t recovers the vision ideal of the
    /// specialized factor maps; `None` when no check was requested.
    pub generic_fibre_recovery: Option<bool>,
    /// dim of the special fibre equals the predicted generic-fibre dimension.
    pub equidimensional: bool,
    /// multidegree of the special fibre equals the predicted class.
    pub class_specialization: bool,
    /// every coefficient of the special fibre's class is 1.
    pub multiplicities_all_one: bool,
    /// the classes of the is-component candidates sum to the fibre's class.
    pub candidates_cover_class: bool,
}

/// Bundled pipeline output.
#[derive(Debug, Clone)]
pub struct DegenerationReport {
    pub cfg: GammaConfig,
    pub reference: Lattice,
    pub ideals: MustafinIdeals,
    pub special_fibre: Ideal<Rat>,
    pub fibre_dimension: i64,
    pub fibre_multidegree: ChowClass,
    pub predicted_dimension: usize,
    pub predicted_chow: ChowClass,
    pub component_bound: usize,
    pub verdicts: Vec<CandidateVerdict>,
    pub certificates: Certificates,
}

/// Machine-readable rendering of a report; polynomial strings are canonical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegenerationReportJson {
    pub config: GammaConfigJson,
    pub reference: Vec<Vec<String>>,
    pub ring: VarSpecJson,
    pub generic_ideal: Vec<String>,
    pub saturated_ideal: Vec<String>,
    pub special_fibre: Vec<String>,
    pub computed: ComputedNumbersJson,
    pub predicted_by_formula: PredictedNumbersJson,
    pub candidate_verdicts: Vec<CandidateVerdictJson>,
    pub certificates: Certificates,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComputedNumbersJson {
    pub fibre_dimension: i64,
    pub fibre_multidegree: String,
    pub components_found: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredictedNumbersJson {
    pub dimension: usize,
    pub chow_class: String,
    pub component_bound: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateVerdictJson {
    pub reference: Vec<Vec<String>>,
    pub candidate_ideal: Option<Vec<String>>,
    pub candidate_dimension: Option<i64>,
    pub chow_class: Option<String>,
    pub contains_special_fibre: bool,
    pub dimension_match: bool,
    pub is_component: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl DegenerationReport {
    pub fn to_json(&self) -> Result<DegenerationReportJson, DegenError> {
        Ok(DegenerationReportJson {
            config: self.cfg.to_json(),
            reference: matrix_to_columns(self.reference.basis()),
            ring: self.ideals.spec.to_json(),
            generic_ideal: self.ideals.generic.render()?,
            saturated_ideal: self.ideals.saturated.render()?,
            special_fibre: self.special_fibre.render()?,
            computed: ComputedNumbersJson {
                fibre_dimension: self.fibre_dimension,
                fibre_multidegree: self.fibre_multidegree.to_string(),
                components_found: self.verdicts.iter().filter(|v| v.is_component).count(),
            },
            predicted_by_formula: PredictedNumbersJson {
                dimension: self.predicted_dimension,
                chow_class: self.predicted_chow.to_string(),
                component_bound: self.component_bound,
            },
            candidate_verdicts: self
                .verdicts
                .iter()
                .map(|v| CandidateVerdictJson {
                    reference: matrix_to_columns(v.reference.basis()),
                    candidate_ideal: v.candidate.as_ref().map(|c| c.ideal.render().unwrap_or_default()),
                    candidate_dimension: v.candidate_dimension,
                    chow_class: v.chow_class.as_ref().map(|c| c.to_string()),
                    contains_special_fibre: v.contains_special_fibre,
                    dimension_match: v.dimension_match,
                    is_component: v.is_component,
                    error: v.error.clone(),
                })
                .collect(),
            certificates: self.certificates.clone(),
        })
    }
}

/// Evaluate the cleared factor maps at a rational point t = c.
fn specialize_maps(cleared: &[Matrix<TScalar>], c: &Rat) -> Vec<Matrix<Rat>> {
    cleared
        .iter()
        .map(|m| m.map(|e| e.evaluate(c).expect("polynomial entries")))
        .collect()
}

/// Run the full pipeline and assemble the report with its certificates.
pub fn degenerate(
    cfg: &GammaConfig,
    references: &[Lattice],
    opts: &PipelineOptions,
) -> Result<DegenerationReport, DegenError> {
    cfg.validate()?;
    let reference = cfg.reference_lattice();
    let ideals = mustafin_ideal(cfg, Some(&reference), opts)?;
    let fibre = special_fibre(&ideals.saturated)?;
    let fibre_dimension = fibre.dimension()?;
    let fibre_multidegree = fibre.multidegree()?;

    // predictions from the generic-fibre kernel profile
    let cams_k = CameraTuple::new(cfg.d, ideals.factor_maps.clone())?;
    let profile = kernel_dims(&cams_k)?;
    let (predicted_dimension, predicted_chow) = dim_and_chow(&profile, &cfg.ranks())?;
    let bound = admissible_tuples(&profile).tuples.len();

    // candidate references: user-supplied plus, optionally, the convex hull
    // of the lattice classes
    let mut refs: Vec<Lattice> = references.to_vec();
    if opts.hull_candidates {
        let classes: Vec<_> = cfg.data.iter().map(|q| q.lattice().class()).collect();
        for cls in crate::building::convex_hull(&classes) {
            let rep = cls.representative();
            if !refs.iter().any(|r| r.same_module(&rep)) {
                refs.push(rep);
            }
        }
    }
    let verdicts = component_check(&fibre, cfg, &refs, opts);

    // certificates
    let t_poly = MultiPoly::<Rat>::var(ideals.spec.nvars(), ideals.spec.t_index().unwrap());
    let saturation_fixed_point = ideals.saturated.saturate(&t_poly)?.equals(&ideals.saturated)?;
    let generic_fibre_recovery = if opts.recovery_checks == 0 {
        None
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x6d64_6567);
        let mut all_ok = true;
        let mut done = 0;
        let mut attempts = 0;
        while done < opts.recovery_checks && attempts < 10 * opts.recovery_checks + 10 {
            attempts += 1;
            let c = rat_int(rng.gen_range(1..=50) * if rng.gen_bool(0.5) { 1 } else { -1 });
            let mats = specialize_maps(&ideals.cleared_maps, &c);
            let Ok(cams) = CameraTuple::new(cfg.d, mats) else {
                continue; // rank drop at this point; pick another
            };
            let vision = multiview::vision_ideal(&cams, &opts.groebner)?;
            let specialized = ideals.saturated.substitute_t(&c)?;
            all_ok &= specialized.equals(&vision)?;
            done += 1;
        }
        Some(all_ok && done == opts.recovery_checks)
    };
    let equidimensional = fibre_dimension == predicted_dimension as i64;
    let class_specialization = fibre_multidegree == predicted_chow;
    let multiplicities_all_one = fibre_multidegree.all_coefficients_one();
    let mut class_sum = ChowClass::zero(fibre_multidegree.caps().to_vec());
    for v in &verdicts {
        if v.is_component {
            if let Some(c) = &v.chow_class {
                class_sum = class_sum.add(c);
            }
        }
    }
    let candidates_cover_class = class_sum == fibre_multidegree;

    Ok(DegenerationReport {
        cfg: cfg.clone(),
        reference,
        ideals,
        special_fibre: fibre,
        fibre_dimension,
        fibre_multidegree,
        predicted_dimension,
        predicted_chow,
        component_bound: bound,
        verdicts,
        certificates: Certificates {
            saturation_fixed_point,
            generic_fibre_recovery,
            equidimensional,
            class_specialization,
            multiplicities_all_one,
            candidates_cover_class,
        },
    })
}

/// The defining ideal of the family computed by the scaled 2x2-minors route,
/// available when every submodule is zero. Cross-check oracle for the
/// elimination route: both must agree after t-saturation.
pub fn mustafin_variety_minors_ideal(
    cfg: &GammaConfig,
    reference: Option<&Lattice>,
    opts: &PipelineOptions,
) -> Result<Ideal<Rat>, DegenError> {
    cfg.validate()?;
    if cfg.data.iter().any(|q| q.sub_rank() != 0) {
        return Err(DegenError::Experiment(
            "the minors route applies only to zero submodules".into(),
        ));
    }
    let href = match reference {
        Some(r) => r.clone(),
        None => cfg.reference_lattice(),
    };
    if href.dim() != cfg.d {
        return Err(DegenError::Building(BuildingError::DimensionMismatch(href.dim(), cfg.d)));
    }
    let d = cfg.d;
    let n = cfg.n_factors();
    let spec = VarSpec::new(vec![d; n], 0, 0, false, true);
    let nv = spec.nvars();
    let t_idx = spec.t_index().unwrap();
    // column j of the comparison matrix: B_j * x^{(j)}, with denominators
    // cleared per factor
    let mut columns: Vec<Vec<MultiPoly<Rat>>> = Vec::new();
    for (j, q) in cfg.data.iter().enumerate() {
        let cleared = clear_factor_map(q.lattice().basis());
        let mut col = Vec::new();
        for r in 0..d {
            let mut entry = MultiPoly::zero(nv);
            for i in 0..d {
                let p = cleared[(r, i)].as_tpoly().expect("cleared");
                for (e, c) in p.terms() {
                    let m = Monomial::var(nv, spec.x_index(j, i)).with_exp(t_idx, e as u32);
                    entry.add_term(&m, c);
                }
            }
            col.push(entry);
        }
        columns.push(col);
    }
    let mut gens = Vec::new();
    for j1 in 0..n {
        for j2 in (j1 + 1)..n {
            for r1 in 0..d {
                for r2 in (r1 + 1)..d {
                    let minor = columns[j1][r1]
                        .mul(&columns[j2][r2])
                        .sub(&columns[j1][r2].mul(&columns[j2][r1]));
                    if !minor.is_zero() {
                        gens.push(minor);
                    }
                }
            }
        }
    }
    let ideal = Ideal::new(spec.clone(), gens)?.with_config(opts.groebner.clone());
    let t_poly = MultiPoly::<Rat>::var(nv, t_idx);
    Ok(ideal.saturate(&t_poly)?)
}

/// Which sorted index of a triple carries the bottom-row variable in the
/// cubic generators of the benchmark monomial ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicConvention {
    MinCarriesX3,
    MidCarriesX3,
    MaxCarriesX3,
}

impl CubicConvention {
    pub const ALL: [CubicConvention; 3] = [
        CubicConvention::MinCarriesX3,
        CubicConvention::MidCarriesX3,
        CubicConvention::MaxCarriesX3,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            CubicConvention::MinCarriesX3 => "min-carries-x3",
            CubicConvention::MidCarriesX3 => "mid-carries-x3",
            CubicConvention::MaxCarriesX3 => "max-carries-x3",
        }
    }
}

/// The benchmark monomial ideal in n P^2-factors: C(n,2) quadrics of
/// bottom-row variables, C(n,3) cubics with one bottom-row and two middle-row
/// variables (carrier fixed by the convention), and C(n,4) middle-row
/// quartics.
#[derive(Debug, Clone)]
pub struct GinIdealSpec {
    pub n: usize,
    pub convention: CubicConvention,
    pub ideal: Ideal<Rat>,
    pub quadric_count: usize,
    pub cubic_count: usize,
    pub quartic_count: usize,
}

pub fn m_n_ideal(n: usize, convention: CubicConvention) -> GinIdealSpec {
    assert!(n >= 2, "at least two factors");
    let spec = VarSpec::product(&vec![3; n]);
    let nv = spec.nvars();
    let mut gens: Vec<MultiPoly<Rat>> = Vec::new();
    let x = |row: usize, factor: usize| spec.x_index(factor, row - 1);
    let mut quadrics = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            let m = Monomial::var(nv, x(3, i)).mul(&Monomial::var(nv, x(3, j)));
            gens.push(MultiPoly::term(m, Rat::one()));
            quadrics += 1;
        }
    }
    let mut cubics = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for l in (j + 1)..n {
                let (carrier, others) = match convention {
                    CubicConvention::MinCarriesX3 => (i, [j, l]),
                    CubicConvention::MidCarriesX3 => (j, [i, l]),
                    CubicConvention::MaxCarriesX3 => (l, [i, j]),
                };
                let m = Monomial::var(nv, x(3, carrier))
                    .mul(&Monomial::var(nv, x(2, others[0])))
                    .mul(&Monomial::var(nv, x(2, others[1])));
                gens.push(MultiPoly::term(m, Rat::one()));
                cubics += 1;
            }
        }
    }
    let mut quartics = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for l in (j + 1)..n {
                for m_idx in (l + 1)..n {
                    let m = Monomial::var(nv, x(2, i))
                        .mul(&Monomial::var(nv, x(2, j)))
                        .mul(&Monomial::var(nv, x(2, l)))
                        .mul(&Monomial::var(nv, x(2, m_idx)));
                    gens.push(MultiPoly::term(m, Rat::one()));
                    quartics += 1;
                }
            }
        }
    }
    let ideal = Ideal::new(spec, gens).expect("well-formed generators");
    GinIdealSpec {
        n,
        convention,
        ideal,
        quadric_count: quadrics,
        cubic_count: cubics,
        quartic_count: quartics,
    }
}

/// Multigraded Hilbert function of a monomial ideal at one multidegree:
/// the number of standard monomials.
pub fn monomial_hilbert_function(gens: &[Monomial], spec: &VarSpec, deg: &[u32]) -> u64 {
    fn block_monomials(vars: &[usize], total: u32, nv: usize) -> Vec<Monomial> {
        fn rec(vars: &[usize], total: u32, nv: usize) -> Vec<Monomial> {
            if vars.len() == 1 {
                return vec![Monomial::one(nv).with_exp(vars[0], total)];
            }
            let mut out = Vec::new();
            for first in 0..=total {
                for m in rec(&vars[1..], total - first, nv) {
                    out.push(m.with_exp(vars[0], first));
                }
            }
            out
        }
        rec(vars, total, nv)
    }
    let nv = spec.nvars();
    let mut partials: Vec<Monomial> = vec![Monomial::one(nv)];
    for f in 0..spec.n_factors() {
        let vars: Vec<usize> = (0..nv).filter(|&v| spec.factor_of(v) == Some(f)).collect();
        let block = block_monomials(&vars, deg[f], nv);
        let mut next = Vec::with_capacity(partials.len() * block.len());
        for p in &partials {
            for b in &block {
                next.push(p.mul(b));
            }
        }
        partials = next;
    }
    partials
        .into_iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count() as u64
}

/// Compare multigraded Hilbert functions of two monomial ideals for all
/// multidegrees of total degree at most `max_total`.
pub fn hilbert_functions_agree(
    a: &Ideal<Rat>,
    b: &Ideal<Rat>,
    max_total: u32,
) -> Result<bool, DegenError> {
    let spec = a.spec().clone();
    if **b.spec() != *spec {
        return Err(DegenError::Poly(PolyError::SpecMismatch(
            "Hilbert comparison requires a shared ring".into(),
        )));
    }
    let ga = a.monomial_generators()?;
    let gb = b.monomial_generators()?;
    let n = spec.n_factors();
    let mut deg = vec![0u32; n];
    loop {
        let total: u32 = deg.iter().sum();
        if total <= max_total
            && monomial_hilbert_function(&ga, &spec, &deg)
                != monomial_hilbert_function(&gb, &spec, &deg)
        {
            return Ok(false);
        }
        // odometer over the box [0, max_total]^n
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(true);
            }
            deg[pos] += 1;
            if deg[pos] <= max_total {
                break;
            }
            deg[pos] = 0;
            pos += 1;
        }
    }
}

/// Result of checking one designated maximal minor of the stacked matrix of a
/// factor subset: after t-saturation, its reduction modulo t must be a
/// nonzero rational times the predicted monomial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinorCheck {
    pub subset: Vec<usize>,
    pub predicted_monomial: String,
    pub leading_coefficient_nonzero: bool,
    pub matches_prediction: bool,
}

/// Report of the generic-initial-ideal experiment.
#[derive(Debug, Clone)]
pub struct GinReport {
    pub n: usize,
    pub seed: u64,
    pub report: DegenerationReport,
    pub fibre_is_monomial: bool,
    /// Per convention: containment of the benchmark ideal in the fibre,
    /// Hilbert agreement up to total degree 6, and literal equality.
    pub convention_results: Vec<(CubicConvention, bool, bool, bool)>,
    pub matched_conventions: Vec<CubicConvention>,
    pub minor_checks: Vec<MinorCheck>,
}

/// Draw the random degeneration of n generic rank-3 factor maps with row
/// scalings (1, t, t^2), run the pipeline, compare the special fibre with the
/// benchmark monomial ideal under every cubic convention, and verify the
/// designated minor specializations.
pub fn gin_experiment(n: usize, seed: u64, opts: &PipelineOptions) -> Result<GinReport, DegenError> {
    if !(2..=4).contains(&n) {
        return Err(DegenError::Experiment(format!(
            "the experiment runs at desk scale for 2..=4 factors, got {}",
            n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = 4usize;
    let scaling: Vec<i64> = vec![0, 0, 1, 2];
    let mut data = Vec::new();
    for r in 0..n {
        let mut tries = 0;
        let a = loop {
            tries += 1;
            let raw: Matrix<Rat> = Matrix::new(
                d,
                d,
                (0..d * d)
                    .map(|_| {
                        let num = rng.gen_range(-100i64..=100);
                        let den = rng.gen_range(1i64..=100);
                        crate::scalar::rat(num, den)
                    })
                    .collect(),
            );
            let scaled = Matrix::new(
                d,
                d,
                (0..d * d)
                    .map(|k| {
                        let (i, j) = (k / d, k % d);
                        TScalar::from_rat(raw[(i, j)].clone()).mul_t_pow(scaling[i])
                    })
                    .collect(),
            );
            if !scaled.det().is_zero() {
                break scaled;
            }
            if tries > 10 {
                return Err(DegenError::Experiment(format!(
                    "factor {} stayed singular after 10 draws; last determinant {}",
                    r + 1,
                    scaled.det()
                )));
            }
        };
        let g = a.inverse().expect("invertible");
        let lattice = Lattice::new(g.clone())?;
        // the submodule is the image of the first reference basis vector, so
        // every factor map keeps the scaled rows
        let m_col = Matrix::from_cols(vec![g.col(0)]);
        data.push(crate::building::QuotientLatticeDatum::new(lattice, m_col));
    }
    let cfg = GammaConfig::new(d, data, Some(Lattice::standard(d)));
    let mut run_opts = opts.clone();
    run_opts.hull_candidates = false;
    let report = degenerate(&cfg, &[], &run_opts)?;

    let fibre = &report.special_fibre;
    let fibre_is_monomial = fibre.is_monomial_ideal()?;
    let mut convention_results = Vec::new();
    let mut matched = Vec::new();
    for conv in CubicConvention::ALL {
        let mn = m_n_ideal(n, conv);
        let contained = fibre.contains(&mn.ideal)?;
        let hilbert = if fibre_is_monomial && contained {
            hilbert_functions_agree(fibre, &mn.ideal, 6)?
        } else {
            false
        };
        let equal = contained && hilbert && fibre.equals(&mn.ideal)?;
        if equal {
            matched.push(conv);
        }
        convention_results.push((conv, contained, hilbert, equal));
    }

    let minor_checks = minor_specialization_checks(&report, n)?;

    Ok(GinReport {
        n,
        seed,
        report,
        fibre_is_monomial,
        convention_results,
        matched_conventions: matched,
        minor_checks,
    })
}

/// Machine-readable rendering of an experiment report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GinReportJson {
    pub n: usize,
    pub seed: u64,
    pub fibre_is_monomial: bool,
    pub special_fibre: Vec<String>,
    pub convention_results: Vec<ConventionResultJson>,
    pub matched_conventions: Vec<String>,
    pub minor_checks: Vec<MinorCheck>,
    pub certificates: Certificates,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConventionResultJson {
    pub convention: String,
    pub benchmark_contained_in_fibre: bool,
    pub hilbert_functions_agree_up_to_degree_6: bool,
    pub ideals_equal: bool,
}

impl GinReport {
    pub fn to_json(&self) -> Result<GinReportJson, DegenError> {
        Ok(GinReportJson {
            n: self.n,
            seed: self.seed,
            fibre_is_monomial: self.fibre_is_monomial,
            special_fibre: self.report.special_fibre.render()?,
            convention_results: self
                .convention_results
                .iter()
                .map(|(c, contained, hilbert, equal)| ConventionResultJson {
                    convention: c.label().to_string(),
                    benchmark_contained_in_fibre: *contained,
                    hilbert_functions_agree_up_to_degree_6: *hilbert,
                    ideals_equal: *equal,
                })
                .collect(),
            matched_conventions: self
                .matched_conventions
                .iter()
                .map(|c| c.label().to_string())
                .collect(),
            minor_checks: self.minor_checks.clone(),
            certificates: self.report.certificates.clone(),
        })
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion with
/// dynamic programming over column subsets.
pub(crate) fn poly_det(m: &[Vec<MultiPoly<Rat>>]) -> MultiPoly<Rat> {
    let k = m.len();
    assert!(k <= 16, "determinant size");
    let nv = m[0][0].nvars();
    let mut states: std::collections::HashMap<u32, MultiPoly<Rat>> = std::collections::HashMap::new();
    states.insert(0, MultiPoly::one(nv));
    for row in m.iter() {
        let mut next: std::collections::HashMap<u32, MultiPoly<Rat>> =
            std::collections::HashMap::new();
        for (mask, acc) in &states {
            let used = mask.count_ones();
            for col in 0..k {
                let bit = 1u32 << col;
                if mask & bit != 0 || row[col].is_zero() {
                    continue;
                }
                // inversions added: used columns greater than this one
                let greater_used = used - (mask & (bit - 1)).count_ones();
                let term = acc.mul(&row[col]);
                let term = if greater_used % 2 == 1 { term.neg() } else { term };
                let entry = next.entry(mask | bit).or_insert_with(|| MultiPoly::zero(nv));
                *entry = entry.add(&term);
            }
        }
        states = next;
    }
    states.remove(&((1u32 << k) - 1)).unwrap_or_else(|| MultiPoly::zero(nv))
}

/// Strip the largest common power of t from a polynomial in a ring with t.
fn t_saturate_poly(p: &MultiPoly<Rat>, t_idx: usize) -> MultiPoly<Rat> {
    let min_e = p.terms().map(|(m, _)| m.exp(t_idx)).min().unwrap_or(0);
    if min_e == 0 {
        return p.clone();
    }
    MultiPoly::from_terms(
        p.nvars(),
        p.terms().map(|(m, c)| (m.with_exp(t_idx, m.exp(t_idx) - min_e), c.clone())),
    )
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in start..=n.saturating_sub(k) {
            for mut rest in rec(first + 1, n, k - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    rec(0, n, k)
}

/// For each subset of 2, 3 (and 4 when present) factors, build the stacked
/// matrix of factor maps with coordinate columns, delete the designated rows,
/// take the maximal minor, t-saturate, specialize to t = 0 and compare with
/// the predicted monomial.
fn minor_specialization_checks(
    report: &DegenerationReport,
    n: usize,
) -> Result<Vec<MinorCheck>, DegenError> {
    let spec = &report.ideals.spec;
    let nv = spec.nvars();
    let t_idx = spec.t_index().expect("pipeline ring has t");
    let ord = spec.default_order();
    let maps = &report.ideals.cleared_maps;
    let d = report.cfg.d;
    let mut out = Vec::new();
    for size in 2..=n.min(4) {
        for subset in subsets_of_size(n, size) {
            // stacked matrix: rows grouped per chosen factor; in block r the
            // columns are [G_r | 0 .. p_r .. 0]
            let cols = d + size;
            let mut rows: Vec<Vec<MultiPoly<Rat>>> = Vec::new();
            for (slot, &r) in subset.iter().enumerate() {
                let g = &maps[r];
                for i in 0..g.rows() {
                    let mut row = Vec::with_capacity(cols);
                    for c in 0..d {
                        let p = g[(i, c)].as_tpoly().expect("cleared");
                        let mut entry = MultiPoly::zero(nv);
                        for (e, coeff) in p.terms() {
                            entry.add_term(&Monomial::one(nv).with_exp(t_idx, e as u32), coeff);
                        }
                        row.push(entry);
                    }
                    for s in 0..size {
                        if s == slot {
                            row.push(MultiPoly::var(nv, spec.x_index(r, i)));
                        } else {
                            row.push(MultiPoly::zero(nv));
                        }
                    }
                    rows.push(row);
                }
            }
            // deletion rule: every block after the first loses its bottom
            // row; for quadruples the first block loses it too
            let mut deleted: Vec<usize> = Vec::new();
            match size {
                2 => {}
                3 => deleted.extend([5, 8]),
                4 => deleted.extend([2, 5, 8, 11]),
                _ => unreachable!(),
            }
            let kept: Vec<Vec<MultiPoly<Rat>>> = rows
                .into_iter()
                .enumerate()
                .filter(|(i, _)| !deleted.contains(i))
                .map(|(_, r)| r)
                .collect();
            debug_assert_eq!(kept.len(), cols);
            let minor = poly_det(&kept);
            if minor.is_zero() {
                out.push(MinorCheck {
                    subset: subset.iter().map(|i| i + 1).collect(),
                    predicted_monomial: "0".into(),
                    leading_coefficient_nonzero: false,
                    matches_prediction: false,
                });
                continue;
            }
            let saturated = t_saturate_poly(&minor, t_idx);
            let specialized = saturated.substitute_scalar(t_idx, &Rat::zero());
            // predicted monomial
            let mut predicted = Monomial::one(nv);
            match size {
                2 => {
                    for &r in &subset {
                        predicted = predicted.mul(&Monomial::var(nv, spec.x_index(r, 2)));
                    }
                }
                3 => {
                    predicted = predicted.mul(&Monomial::var(nv, spec.x_index(subset[0], 2)));
                    predicted = predicted.mul(&Monomial::var(nv, spec.x_index(subset[1], 1)));
                    predicted = predicted.mul(&Monomial::var(nv, spec.x_index(subset[2], 1)));
                }
                4 => {
                    for &r in &subset {
                        predicted = predicted.mul(&Monomial::var(nv, spec.x_index(r, 1)));
                    }
                }
                _ => unreachable!(),
            }
            let matches = match specialized.as_monomial() {
                Some((m, c)) => m == &predicted && !Field::is_zero(c),
                None => false,
            };
            out.push(MinorCheck {
                subset: subset.iter().map(|i| i + 1).collect(),
                predicted_monomial: MultiPoly::term(predicted, Rat::one()).display(spec, &ord),
                leading_coefficient_nonzero: !specialized.is_zero(),
                matches_prediction: matches,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::QuotientLatticeDatum;
    use crate::poly::parse_poly;
    use crate::scalar::parse_tscalar;

    fn three_views_config() -> GammaConfig {
        GammaConfig::from_json_str(
            r#"{
            "d": 3,
            "quotient_lattices": [
                { "L": [["1","0","0"],["0","1","0"],["0","0","1"]], "M": [["0","0","1"]] },
                { "L": [["1","0","0"],["0","1","0"],["0","0","t^-1"]], "M": [["0","1","0"]] },
                { "L": [["1","0","0"],["0","t^-1","0"],["0","0","1"]], "M": [["1","0","0"]] }
            ]
        }"#,
        )
        .unwrap()
    }

    fn diag_lattice(entries: &[&str]) -> Lattice {
        let d = entries.len();
        let mut m: Matrix<TScalar> = Matrix::zero(d, d);
        for (i, s) in entries.iter().enumerate() {
            m[(i, i)] = parse_tscalar(s).unwrap();
        }
        Lattice::new(m).unwrap()
    }

    #[test]
    fn pipeline_on_the_three_view_fixture() {
        let cfg = three_views_config();
        let opts = PipelineOptions::default();
        let ideals = mustafin_ideal(&cfg, None, &opts).unwrap();
        let spec = ideals.spec.clone();
        let expected = Ideal::new(
            spec.clone(),
            vec![parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &spec).unwrap()],
        )
        .unwrap();
        assert!(ideals.saturated.equals(&expected).unwrap());

        let fibre = special_fibre(&ideals.saturated).unwrap();
        let xspec = fibre.spec().clone();
        let cut = Ideal::new(xspec.clone(), vec![parse_poly("x11*x22*x13", &xspec).unwrap()]).unwrap();
        assert!(fibre.equals(&cut).unwrap());
        assert_eq!(fibre.dimension().unwrap(), 2);
        assert_eq!(fibre.multidegree().unwrap().to_string(), "H1 + H2 + H3");
    }

    #[test]
    fn trivial_single_lattice_family() {
        let cfg = GammaConfig::new(
            3,
            vec![QuotientLatticeDatum::whole(Lattice::standard(3))],
            None,
        );
        let opts = PipelineOptions::default();
        let ideals = mustafin_ideal(&cfg, None, &opts).unwrap();
        assert!(ideals.saturated.is_zero_ideal());
        let fibre = special_fibre(&ideals.saturated).unwrap();
        assert!(fibre.is_zero_ideal());
        assert_eq!(component_bound(&cfg, &opts).unwrap(), 1);
    }

    #[test]
    fn minors_route_agrees_with_elimination_for_plain_lattices() {
        // two adjacent lattices, zero submodules
        let cfg = GammaConfig::new(
            3,
            vec![
                QuotientLatticeDatum::whole(Lattice::standard(3)),
                QuotientLatticeDatum::whole(diag_lattice(&["1", "1", "t^-1"])),
            ],
            None,
        );
        let opts = PipelineOptions::default();
        let by_minors = mustafin_variety_minors_ideal(&cfg, None, &opts).unwrap();
        let by_elimination = mustafin_ideal(&cfg, None, &opts).unwrap().saturated;
        assert!(by_minors.equals(&by_elimination).unwrap());
        assert!(!by_minors.is_zero_ideal());
    }

    #[test]
    fn component_bound_of_the_fixture() {
        let cfg = three_views_config();
        assert_eq!(component_bound(&cfg, &PipelineOptions::default()).unwrap(), 3);
    }

    #[test]
    fn full_report_on_the_fixture() {
        let cfg = three_views_config();
        let refs = vec![
            diag_lattice(&["t^-1", "t^-1", "1"]),
            diag_lattice(&["t", "t^-1", "1"]),
            diag_lattice(&["1", "1", "t^-1"]),
        ];
        let report = degenerate(&cfg, &refs, &PipelineOptions::default()).unwrap();
        assert_eq!(report.fibre_dimension, 2);
        assert_eq!(report.predicted_dimension, 2);
        assert_eq!(report.component_bound, 3);
        assert_eq!(report.verdicts.len(), 3);
        assert!(report.verdicts.iter().all(|v| v.is_component));
        let c = &report.certificates;
        assert!(c.saturation_fixed_point);
        assert_eq!(c.generic_fibre_recovery, Some(true));
        assert!(c.equidimensional);
        assert!(c.class_specialization);
        assert!(c.multiplicities_all_one);
        assert!(c.candidates_cover_class);
        // verdict ideals are the three coordinate components
        let expected = ["x22", "x11", "x13"];
        for (v, gen) in report.verdicts.iter().zip(expected) {
            let ideal = &v.candidate.as_ref().unwrap().ideal;
            let spec = ideal.spec().clone();
            let want = Ideal::new(spec.clone(), vec![parse_poly(gen, &spec).unwrap()]).unwrap();
            assert!(ideal.equals(&want).unwrap());
        }
        // serialization is stable and non-empty
        let json = serde_json::to_string(&report.to_json().unwrap()).unwrap();
        assert!(json.contains("saturated_ideal"));
    }

    #[test]
    fn far_reference_gives_a_dimension_mismatch() {
        let cfg = three_views_config();
        let far = diag_lattice(&["t^5", "1", "1"]);
        let ideals = mustafin_ideal(&cfg, None, &PipelineOptions::default()).unwrap();
        let fibre = special_fibre(&ideals.saturated).unwrap();
        let verdicts = component_check(&fibre, &cfg, &[far], &PipelineOptions::default());
        assert_eq!(verdicts.len(), 1);
        assert!(!verdicts[0].is_component);
        assert!(!verdicts[0].dimension_match);
        assert!(verdicts[0].candidate_dimension.unwrap() < 2);
    }

    #[test]
    fn m_n_ideal_generator_counts() {
        let two = m_n_ideal(2, CubicConvention::MinCarriesX3);
        assert_eq!(
            (two.quadric_count, two.cubic_count, two.quartic_count),
            (1, 0, 0)
        );
        let three = m_n_ideal(3, CubicConvention::MinCarriesX3);
        assert_eq!(
            (three.quadric_count, three.cubic_count, three.quartic_count),
            (3, 1, 0)
        );
        let four = m_n_ideal(4, CubicConvention::MinCarriesX3);
        assert_eq!(
            (four.quadric_count, four.cubic_count, four.quartic_count),
            (6, 4, 1)
        );
        // generators render as expected
        assert_eq!(two.ideal.render().unwrap(), vec!["x31*x32"]);
    }

    #[test]
    fn poly_det_matches_small_cases() {
        let spec = VarSpec::new(vec![2], 0, 0, false, true);
        let a = parse_poly("x11", &spec).unwrap();
        let b = parse_poly("t", &spec).unwrap();
        let c = parse_poly("x21", &spec).unwrap();
        let d = parse_poly("x11 + t", &spec).unwrap();
        let det = poly_det(&[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        let expect = a.mul(&d).sub(&b.mul(&c));
        assert_eq!(det, expect);
    }

    #[test]
    fn gin_experiment_two_factors() {
        let report = gin_experiment(2, 7, &PipelineOptions::default()).unwrap();
        assert!(report.fibre_is_monomial);
        // the fibre is the single quadric
        let fibre = &report.report.special_fibre;
        let spec = fibre.spec().clone();
        let expect = Ideal::new(spec.clone(), vec![parse_poly("x31*x32", &spec).unwrap()]).unwrap();
        assert!(fibre.equals(&expect).unwrap());
        assert!(!report.matched_conventions.is_empty());
        for check in &report.minor_checks {
            assert!(check.matches_prediction, "minor {:?} failed", check.subset);
        }
        // certificates hold on the experiment's pipeline run
        assert!(report.report.certificates.saturation_fixed_point);
        assert!(report.report.certificates.class_specialization);
    }
}
