//! Lattices over the valuation ring and their combinatorics: invariant
//! factors, homothety classes, adjacency, intersections, convex hulls, and
//! quotient-lattice data with validation.

use crate::matrix::Matrix;
use crate::scalar::{parse_tscalar, ParseError, TScalar};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildingError {
    #[error("lattice basis matrix is singular")]
    SingularBasis,
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix entry failed to parse: {0}")]
    BadEntry(String),
    #[error("configuration invalid: {0}")]
    InvalidConfig(String),
}

/// Free rank-d module over the valuation ring, spanned by the columns of an
/// invertible basis matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    basis: Matrix<TScalar>,
}

impl Lattice {
    pub fn new(basis: Matrix<TScalar>) -> Result<Self, BuildingError> {
        if basis.rows() != basis.cols() {
            return Err(BuildingError::DimensionMismatch(basis.rows(), basis.cols()));
        }
        if basis.det().is_zero() {
            return Err(BuildingError::SingularBasis);
        }
        Ok(Lattice { basis })
    }

    pub fn standard(d: usize) -> Self {
        Lattice { basis: Matrix::identity(d) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<TScalar> {
        &self.basis
    }

    /// The lattice t^k L.
    pub fn scale_t(&self, k: i64) -> Lattice {
        Lattice { basis: self.basis.scale(&TScalar::t_pow(k)) }
    }

    /// Equality as submodules: the transition matrix is a unit over the
    /// valuation ring.
    pub fn same_module(&self, other: &Lattice) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let trans = self
            .basis
            .inverse()
            .expect("lattice bases are invertible")
            .mul(&other.basis);
        is_unit_matrix(&trans)
    }

    pub fn class(&self) -> LatticeClass {
        LatticeClass::of(self)
    }
}

/// All entries integral and the determinant a unit.
fn is_unit_matrix(m: &Matrix<TScalar>) -> bool {
    m.entries().all(|e| e.is_integral()) && m.det().is_unit()
}

/// Smith-style reduction over the valuation ring.
///
/// Writes A = U diag(t^{a_1}, ..., t^{a_r}) V with U, V products of
/// elementary matrices that are units over the valuation ring, pivoting on
/// minimal-valuation entries. Returns the exponents in reduction order
/// (ascending) and U; `rank < min(rows, cols)` signals zero blocks left over.
pub(crate) struct SmithDecomposition {
    pub exponents: Vec<i64>,
    pub left: Matrix<TScalar>,
}

pub(crate) fn smith_over_valuation_ring(a: &Matrix<TScalar>) -> SmithDecomposition {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut u: Matrix<TScalar> = Matrix::identity(rows);
    let mut exps = Vec::new();
    let steps = rows.min(cols);
    for k in 0..steps {
        // minimal-valuation pivot among the remaining block
        let mut best: Option<(usize, usize, i64)> = None;
        for i in k..rows {
            for j in k..cols {
                if let Ok(v) = m[(i, j)].val() {
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, val)) = best else {
            break; // remaining block is zero
        };
        // move pivot to (k, k)
        if pi != k {
            for j in 0..cols {
                let tmp = m[(k, j)].clone();
                m[(k, j)] = m[(pi, j)].clone();
                m[(pi, j)] = tmp;
            }
            for i in 0..rows {
                let tmp = u[(i, k)].clone();
                u[(i, k)] = u[(i, pi)].clone();
                u[(i, pi)] = tmp;
            }
        }
        if pj != k {
            for i in 0..rows {
                let tmp = m[(i, k)].clone();
                m[(i, k)] = m[(i, pj)].clone();
                m[(i, pj)] = tmp;
            }
        }
        // normalize the pivot to exactly t^val
        let unit = &TScalar::t_pow(val) / &m[(k, k)];
        for j in k..cols {
            m[(k, j)] = &m[(k, j)] * &unit;
        }
        let unit_inv = unit.inv().expect("unit");
        for i in 0..rows {
            u[(i, k)] = &u[(i, k)] * &unit_inv;
        }
        // clear the pivot column below
        let pivot_inv = TScalar::t_pow(-val);
        for r in (k + 1)..rows {
            if m[(r, k)].is_zero() {
                continue;
            }
            let c = &m[(r, k)] * &pivot_inv;
            debug_assert!(c.is_integral(), "pivot valuation was minimal");
            for j in k..cols {
                let sub = &c * &m[(k, j)];
                m[(r, j)] = &m[(r, j)] - &sub;
            }
            for i in 0..rows {
                let add = &c * &u[(i, r)];
                u[(i, k)] = &u[(i, k)] + &add;
            }
        }
        // clear the pivot row to the right (folds into V, untracked)
        for j in (k + 1)..cols {
            if m[(k, j)].is_zero() {
                continue;
            }
            let c = &m[(k, j)] * &pivot_inv;
            debug_assert!(c.is_integral());
            for i in k..rows {
                let sub = &c * &m[(i, k)];
                m[(i, j)] = &m[(i, j)] - &sub;
            }
        }
        exps.push(val);
    }
    SmithDecomposition { exponents: exps, left: u }
}

/// Exponents of the elementary divisors of the transition matrix between two
/// lattices, sorted descending.
pub fn invariant_factors(a: &Lattice, b: &Lattice) -> Result<Vec<i64>, BuildingError> {
    if a.dim() != b.dim() {
        return Err(BuildingError::DimensionMismatch(a.dim(), b.dim()));
    }
    let trans = a.basis.inverse().ok_or(BuildingError::SingularBasis)?.mul(&b.basis);
    let smith = smith_over_valuation_ring(&trans);
    debug_assert_eq!(smith.exponents.len(), a.dim(), "nonsingular transition");
    let mut exps = smith.exponents;
    exps.sort_unstable_by(|x, y| y.cmp(x));
    Ok(exps)
}

/// Homothety class of a lattice, held as a canonical representative.
///
/// Canonical form: scale by the power of t making the smallest invariant
/// factor exponent exactly 0, then column-Hermite-reduce over the valuation
/// ring (pivots exactly t^{b_i}, zeros right of pivots, entries below a pivot
/// reduced to polynomials of degree < b_i).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeClass {
    canonical: Matrix<TScalar>,
}

impl LatticeClass {
    pub fn of(lattice: &Lattice) -> LatticeClass {
        let d = lattice.dim();
        // smallest invariant-factor exponent = minimal entry valuation
        let min_val = lattice
            .basis
            .entries()
            .filter_map(|e| e.val().ok())
            .min()
            .expect("nonsingular basis has nonzero entries");
        let mut b = lattice.basis.scale(&TScalar::t_pow(-min_val));
        let mut pivots = vec![0i64; d];
        for i in 0..d {
            let (bj, bval) = (i..d)
                .filter_map(|j| b[(i, j)].val().ok().map(|v| (j, v)))
                .min_by_key(|&(j, v)| (v, j))
                .expect("nonsingular matrix has a pivot in every row");
            if bj != i {
                for r in 0..d {
                    let tmp = b[(r, i)].clone();
                    b[(r, i)] = b[(r, bj)].clone();
                    b[(r, bj)] = tmp;
                }
            }
            let unit = &TScalar::t_pow(bval) / &b[(i, i)];
            for r in 0..d {
                b[(r, i)] = &b[(r, i)] * &unit;
            }
            pivots[i] = bval;
            for j in (i + 1)..d {
                if b[(i, j)].is_zero() {
                    continue;
                }
                let c = &b[(i, j)] * &TScalar::t_pow(-bval);
                debug_assert!(c.is_integral());
                for r in 0..d {
                    let sub = &c * &b[(r, i)];
                    b[(r, j)] = &b[(r, j)] - &sub;
                }
            }
        }
        // reduce below-pivot entries modulo the pivot of their row
        for j in 0..d {
            for i in (j + 1)..d {
                let entry = b[(i, j)].clone();
                if entry.is_zero() {
                    continue;
                }
                let rem = TScalar::from_tpoly(
                    entry.taylor_truncate(pivots[i] as usize).expect("integral entry"),
                );
                let c = &(&entry - &rem) * &TScalar::t_pow(-pivots[i]);
                debug_assert!(c.is_integral());
                for r in 0..d {
                    let sub = &c * &b[(r, i)];
                    b[(r, j)] = &b[(r, j)] - &sub;
                }
            }
        }
        LatticeClass { canonical: b }
    }

    pub fn dim(&self) -> usize {
        self.canonical.rows()
    }

    /// The canonical representative lattice.
    pub fn representative(&self) -> Lattice {
        Lattice { basis: self.canonical.clone() }
    }

    pub fn canonical_matrix(&self) -> &Matrix<TScalar> {
        &self.canonical
    }
}

/// Two classes are adjacent when, after a homothety translation, all
/// invariant factors of the pair lie in {0, -1}: spread at most 1. A class is
/// adjacent to itself.
pub fn adjacent(a: &LatticeClass, b: &LatticeClass) -> bool {
    let exps = invariant_factors(&a.representative(), &b.representative())
        .expect("classes share the ambient dimension");
    let spread = exps.first().unwrap_or(&0) - exps.last().unwrap_or(&0);
    spread <= 1
}

/// The lattice t^a L ∩ t^b L'.
pub fn lattice_intersection(l: &Lattice, lp: &Lattice, a: i64, b: i64) -> Result<Lattice, BuildingError> {
    if l.dim() != lp.dim() {
        return Err(BuildingError::DimensionMismatch(l.dim(), lp.dim()));
    }
    let trans = l.basis.inverse().ok_or(BuildingError::SingularBasis)?.mul(&lp.basis);
    let smith = smith_over_valuation_ring(&trans);
    let d = l.dim();
    let mut diag: Matrix<TScalar> = Matrix::zero(d, d);
    for (i, &c) in smith.exponents.iter().enumerate() {
        diag[(i, i)] = TScalar::t_pow(a + 0.max(c + b - a));
    }
    Lattice::new(l.basis.mul(&smith.left).mul(&diag))
}

/// Closure of the input classes under pairwise scaled intersections with
/// exponents bounded by the maximal invariant-factor spread of the input.
pub fn convex_hull(classes: &[LatticeClass]) -> Vec<LatticeClass> {
    assert!(!classes.is_empty(), "convex hull of an empty set");
    let mut out: Vec<LatticeClass> = Vec::new();
    let mut seen: HashSet<LatticeClass> = HashSet::new();
    for c in classes {
        if seen.insert(c.clone()) {
            out.push(c.clone());
        }
    }
    let mut spread = 1i64;
    for i in 0..out.len() {
        for j in 0..i {
            let exps = invariant_factors(&out[i].representative(), &out[j].representative())
                .expect("same ambient dimension");
            let s = exps.first().unwrap_or(&0) - exps.last().unwrap_or(&0);
            spread = spread.max(s);
        }
    }
    let mut frontier: Vec<LatticeClass> = out.clone();
    while !frontier.is_empty() {
        let mut fresh: Vec<LatticeClass> = Vec::new();
        for new in &frontier {
            for old in &out {
                for a in -spread..=spread {
                    for b in -spread..=spread {
                        let meet = lattice_intersection(
                            &new.representative(),
                            &old.representative(),
                            a,
                            b,
                        )
                        .expect("classes share the ambient dimension");
                        let cls = meet.class();
                        if seen.insert(cls.clone()) {
                            fresh.push(cls);
                        }
                    }
                }
            }
        }
        out.extend(fresh.iter().cloned());
        frontier = fresh;
    }
    out
}

/// A quotient-lattice datum: a lattice together with column vectors spanning
/// a free direct summand, with rank bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientLatticeDatum {
    lattice: Lattice,
    /// d x r matrix of submodule generators as columns; r may be zero.
    sub: Matrix<TScalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A submodule generator does not lie in the lattice.
    NotInLattice { column: usize },
    /// Submodule generators are linearly dependent.
    DependentGenerators,
    /// The quotient has torsion: some invariant-factor exponent is positive.
    NotADirectSummand { exponents: Vec<i64> },
    /// Shapes do not match the ambient dimension.
    ShapeMismatch { detail: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotInLattice { column } => {
                write!(f, "submodule column {} is not contained in the lattice", column + 1)
            }
            Violation::DependentGenerators => write!(f, "submodule generators are dependent"),
            Violation::NotADirectSummand { exponents } => {
                write!(f, "not a direct summand: invariant exponents {:?}", exponents)
            }
            Violation::ShapeMismatch { detail } => write!(f, "shape mismatch: {}", detail),
        }
    }
}

impl QuotientLatticeDatum {
    pub fn new(lattice: Lattice, sub: Matrix<TScalar>) -> Self {
        QuotientLatticeDatum { lattice, sub }
    }

    /// Quotient by the zero submodule.
    pub fn whole(lattice: Lattice) -> Self {
        let d = lattice.dim();
        QuotientLatticeDatum { lattice, sub: Matrix::zero(d, 0) }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn sub(&self) -> &Matrix<TScalar> {
        &self.sub
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn sub_rank(&self) -> usize {
        self.sub.cols()
    }

    /// Rank of the quotient lattice.
    pub fn quotient_rank(&self) -> usize {
        self.ambient_dim() - self.sub_rank()
    }

    /// Scale both the lattice and the submodule by t^k (same homothety class).
    pub fn scale_t(&self, k: i64) -> QuotientLatticeDatum {
        QuotientLatticeDatum {
            lattice: self.lattice.scale_t(k),
            sub: self.sub.scale(&TScalar::t_pow(k)),
        }
    }

    /// The submodule generators written in the lattice basis, when contained.
    pub fn sub_in_lattice_coords(&self) -> Option<Matrix<TScalar>> {
        if self.sub.cols() == 0 {
            return Some(Matrix::zero(self.ambient_dim(), 0));
        }
        let x = self.lattice.basis().inverse()?.mul(&self.sub);
        if x.entries().all(|e| e.is_integral()) {
            Some(x)
        } else {
            None
        }
    }

    /// Structured violations; empty when the datum is a valid quotient lattice.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.sub.cols() > 0 && self.sub.rows() != self.ambient_dim() {
            out.push(Violation::ShapeMismatch {
                detail: format!(
                    "submodule columns have length {}, ambient dimension is {}",
                    self.sub.rows(),
                    self.ambient_dim()
                ),
            });
            return out;
        }
        if self.sub.cols() == 0 {
            return out;
        }
        if self.sub.cols() > self.ambient_dim() {
            out.push(Violation::ShapeMismatch {
                detail: "more submodule generators than the ambient dimension".into(),
            });
            return out;
        }
        let inv = self.lattice.basis().inverse().expect("lattice basis invertible");
        let x = inv.mul(&self.sub);
        for j in 0..x.cols() {
            if (0..x.rows()).any(|i| !x[(i, j)].is_integral()) {
                out.push(Violation::NotInLattice { column: j });
            }
        }
        if !out.is_empty() {
            return out;
        }
        let smith = smith_over_valuation_ring(&x);
        if smith.exponents.len() < self.sub.cols() {
            out.push(Violation::DependentGenerators);
            return out;
        }
        if smith.exponents.iter().any(|&e| e != 0) {
            out.push(Violation::NotADirectSummand { exponents: smith.exponents.clone() });
        }
        out
    }
}

/// A finite set of quotient lattices with a common ambient dimension, plus an
/// optional reference lattice for choosing coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaConfig {
    pub d: usize,
    pub data: Vec<QuotientLatticeDatum>,
    pub reference: Option<Lattice>,
}

impl GammaConfig {
    pub fn new(d: usize, data: Vec<QuotientLatticeDatum>, reference: Option<Lattice>) -> Self {
        GammaConfig { d, data, reference }
    }

    pub fn n_factors(&self) -> usize {
        self.data.len()
    }

    /// Per-factor quotient ranks l_i.
    pub fn ranks(&self) -> Vec<usize> {
        self.data.iter().map(|q| q.quotient_rank()).collect()
    }

    pub fn validate(&self) -> Result<(), BuildingError> {
        if self.data.is_empty() {
            return Err(BuildingError::InvalidConfig("no quotient lattices given".into()));
        }
        for (i, q) in self.data.iter().enumerate() {
            if q.ambient_dim() != self.d {
                return Err(BuildingError::InvalidConfig(format!(
                    "lattice {} has ambient dimension {}, expected {}",
                    i + 1,
                    q.ambient_dim(),
                    self.d
                )));
            }
            if q.quotient_rank() == 0 {
                return Err(BuildingError::InvalidConfig(format!(
                    "quotient lattice {} has rank zero",
                    i + 1
                )));
            }
            let violations = q.validate();
            if !violations.is_empty() {
                let text: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(BuildingError::InvalidConfig(format!(
                    "quotient lattice {}: {}",
                    i + 1,
                    text.join("; ")
                )));
            }
        }
        if let Some(r) = &self.reference {
            if r.dim() != self.d {
                return Err(BuildingError::InvalidConfig(
                    "reference lattice has the wrong ambient dimension".into(),
                ));
            }
        }
        Ok(())
    }

    /// The reference lattice: explicit if given, otherwise the first lattice.
    pub fn reference_lattice(&self) -> Lattice {
        match &self.reference {
            Some(r) => r.clone(),
            None => self.data[0].lattice().clone(),
        }
    }

    pub fn to_json(&self) -> GammaConfigJson {
        GammaConfigJson {
            d: self.d,
            quotient_lattices: self
                .data
                .iter()
                .map(|q| QuotientLatticeJson {
                    l: matrix_to_columns(q.lattice().basis()),
                    m: matrix_to_columns(q.sub()),
                })
                .collect(),
            reference: self.reference.as_ref().map(|r| matrix_to_columns(r.basis())),
        }
    }

    pub fn from_json(j: &GammaConfigJson) -> Result<GammaConfig, BuildingError> {
        let mut data = Vec::new();
        for (i, q) in j.quotient_lattices.iter().enumerate() {
            let l = matrix_from_columns(&q.l)
                .map_err(|e| BuildingError::InvalidConfig(format!("lattice {}: {}", i + 1, e)))?;
            let lattice = Lattice::new(l)?;
            let m = if q.m.is_empty() {
                Matrix::zero(lattice.dim(), 0)
            } else {
                matrix_from_columns(&q.m).map_err(|e| {
                    BuildingError::InvalidConfig(format!("submodule {}: {}", i + 1, e))
                })?
            };
            data.push(QuotientLatticeDatum::new(lattice, m));
        }
        let reference = match &j.reference {
            None => None,
            Some(cols) => Some(Lattice::new(matrix_from_columns(cols).map_err(|e| {
                BuildingError::InvalidConfig(format!("reference: {}", e))
            })?)?),
        };
        Ok(GammaConfig::new(j.d, data, reference))
    }

    pub fn from_json_str(text: &str) -> Result<GammaConfig, BuildingError> {
        let j: GammaConfigJson = serde_json::from_str(text)
            .map_err(|e| BuildingError::InvalidConfig(format!("malformed JSON: {}", e)))?;
        GammaConfig::from_json(&j)
    }
}

/// Matrices serialize as column-major lists of columns of scalar strings.
pub fn matrix_to_columns(m: &Matrix<TScalar>) -> Vec<Vec<String>> {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m[(i, j)].to_string()).collect())
        .collect()
}

pub fn matrix_from_columns(cols: &[Vec<String>]) -> Result<Matrix<TScalar>, ParseError> {
    let parsed: Result<Vec<Vec<TScalar>>, ParseError> = cols
        .iter()
        .map(|col| col.iter().map(|s| parse_tscalar(s)).collect())
        .collect();
    Ok(Matrix::from_cols(parsed?))
}

/// Serialized form of a [`GammaConfig`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaConfigJson {
    pub d: usize,
    pub quotient_lattices: Vec<QuotientLatticeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientLatticeJson {
    #[serde(rename = "L")]
    pub l: Vec<Vec<String>>,
    #[serde(rename = "M", default)]
    pub m: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn diag(entries: &[&str]) -> Lattice {
        let d = entries.len();
        let mut m: Matrix<TScalar> = Matrix::zero(d, d);
        for (i, s) in entries.iter().enumerate() {
            m[(i, i)] = parse_tscalar(s).unwrap();
        }
        Lattice::new(m).unwrap()
    }

    #[test]
    fn invariant_factors_examples() {
        let l1 = Lattice::standard(3);
        assert_eq!(invariant_factors(&l1, &l1).unwrap(), vec![0, 0, 0]);
        let l2 = diag(&["1", "1", "t^-1"]);
        assert_eq!(invariant_factors(&l1, &l2).unwrap(), vec![0, 0, -1]);
        assert_eq!(invariant_factors(&l2, &l1).unwrap(), vec![1, 0, 0]);
    }

    /// Minimum valuation over all k x k minors of the transition matrix
    /// equals the sum of the k smallest invariant-factor exponents.
    fn minor_valuation_oracle(a: &Lattice, b: &Lattice) {
        let trans = a.basis().inverse().unwrap().mul(b.basis());
        let exps = invariant_factors(a, b).unwrap(); // descending
        let d = a.dim();
        for k in 1..=d {
            let mut min_val: Option<i64> = None;
            for rows in combinations(d, k) {
                for cols in combinations(d, k) {
                    let sub = submatrix(&trans, &rows, &cols);
                    if let Ok(v) = sub.det().val() {
                        min_val = Some(min_val.map_or(v, |m: i64| m.min(v)));
                    }
                }
            }
            let expect: i64 = exps.iter().rev().take(k).sum();
            assert_eq!(min_val, Some(expect), "k = {}", k);
        }
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = combinations(n - 1, k);
        for mut c in combinations(n - 1, k - 1) {
            c.push(n - 1);
            out.push(c);
        }
        out
    }

    fn submatrix(m: &Matrix<TScalar>, rows: &[usize], cols: &[usize]) -> Matrix<TScalar> {
        let mut out: Matrix<TScalar> = Matrix::zero(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out[(i, j)] = m[(r, c)].clone();
            }
        }
        out
    }

    pub(crate) fn random_lattice(rng: &mut ChaCha8Rng, d: usize) -> Lattice {
        loop {
            let mut m: Matrix<TScalar> = Matrix::zero(d, d);
            for i in 0..d {
                for j in 0..d {
                    let c0 = rat_int(rng.gen_range(-3..=3));
                    let c1 = rat_int(rng.gen_range(-2..=2));
                    let shift = rng.gen_range(-2..=2i64);
                    let p = &TScalar::from_rat(c0) + &(&TScalar::from_rat(c1) * &TScalar::t());
                    m[(i, j)] = p.mul_t_pow(shift);
                }
            }
            if let Ok(l) = Lattice::new(m) {
                return l;
            }
        }
    }

    #[test]
    fn minor_oracle_on_fixtures_and_random_pairs() {
        let l1 = Lattice::standard(3);
        let l2 = diag(&["1", "1", "t^-1"]);
        minor_valuation_oracle(&l1, &l2);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_lattice(&mut rng, 3);
            let b = random_lattice(&mut rng, 3);
            minor_valuation_oracle(&a, &b);
        }
    }

    #[test]
    fn invariant_factors_antisymmetry_and_unit_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..25 {
            let a = random_lattice(&mut rng, 3);
            let b = random_lattice(&mut rng, 3);
            let ab = invariant_factors(&a, &b).unwrap();
            let ba = invariant_factors(&b, &a).unwrap();
            let neg: Vec<i64> = ab.iter().rev().map(|e| -e).collect();
            assert_eq!(ba, neg);
            // multiplying a basis by a unit matrix over the valuation ring
            // changes nothing
            let mut unit: Matrix<TScalar> = Matrix::identity(3);
            unit[(0, 1)] = TScalar::t();
            unit[(2, 0)] = TScalar::from_int(rng.gen_range(-3..=3));
            let b2 = Lattice::new(b.basis().mul(&unit)).unwrap();
            assert_eq!(invariant_factors(&a, &b2).unwrap(), ab);
        }
    }

    #[test]
    fn adjacency_examples() {
        let l1 = Lattice::standard(3);
        let l2 = diag(&["1", "1", "t^-1"]);
        let far = diag(&["1", "1", "t^-2"]);
        assert!(adjacent(&l1.class(), &l1.class()));
        assert!(adjacent(&l1.class(), &l2.class()));
        assert!(!adjacent(&l1.class(), &far.class()));
        // symmetry and homothety invariance
        assert!(adjacent(&l2.class(), &l1.class()));
        assert!(adjacent(&l1.scale_t(3).class(), &l2.scale_t(-2).class()));
    }

    #[test]
    fn intersection_examples() {
        let l1 = Lattice::standard(3);
        let l2 = diag(&["1", "1", "t^-1"]);
        let meet = lattice_intersection(&l1, &l1, 0, 0).unwrap();
        assert!(meet.same_module(&l1));
        let nested = lattice_intersection(&l1, &l1.scale_t(1), 0, 0).unwrap();
        assert!(nested.same_module(&l1.scale_t(1)));
        // L1 ⊂ L2, so the intersection is L1
        let m12 = lattice_intersection(&l1, &l2, 0, 0).unwrap();
        assert!(m12.same_module(&l1));
    }

    #[test]
    fn convex_hull_examples() {
        let l1 = Lattice::standard(3);
        assert_eq!(convex_hull(&[l1.class()]).len(), 1);
        let l2 = diag(&["1", "1", "t^-1"]);
        let two = convex_hull(&[l1.class(), l2.class()]);
        assert_eq!(two.len(), 2);
        let far = diag(&["1", "1", "t^-2"]);
        let hull = convex_hull(&[l1.class(), far.class()]);
        let mid = diag(&["1", "1", "t^-1"]).class();
        assert!(hull.contains(&mid), "hull misses the intermediate class");
        assert_eq!(hull.len(), 3);
        // idempotence
        let again = convex_hull(&hull);
        assert_eq!(again.len(), hull.len());
    }

    #[test]
    fn class_canonicalization_is_homothety_and_unit_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let l = random_lattice(&mut rng, 3);
            assert_eq!(l.class(), l.scale_t(rng.gen_range(-3..=3)).class());
            let mut unit: Matrix<TScalar> = Matrix::identity(3);
            unit[(1, 0)] = &TScalar::from_int(2) + &TScalar::t();
            unit[(0, 2)] = TScalar::from_int(rng.gen_range(-2..=2));
            let l2 = Lattice::new(l.basis().mul(&unit)).unwrap();
            assert_eq!(l.class(), l2.class());
            assert!(l.same_module(&l2));
        }
    }

    #[test]
    fn validate_quotient_examples() {
        // the shipped first factor: standard lattice with M = e3
        let l1 = Lattice::standard(3);
        let e3 = Matrix::from_cols(vec![vec![
            TScalar::zero(),
            TScalar::zero(),
            TScalar::one(),
        ]]);
        let q = QuotientLatticeDatum::new(l1.clone(), e3);
        assert!(q.validate().is_empty());
        assert_eq!(q.quotient_rank(), 2);

        // torsion quotient: M = t*e1 inside the standard lattice
        let te1 = Matrix::from_cols(vec![vec![TScalar::t(), TScalar::zero(), TScalar::zero()]]);
        let bad = QuotientLatticeDatum::new(l1.clone(), te1);
        match &bad.validate()[..] {
            [Violation::NotADirectSummand { exponents }] => assert_eq!(exponents, &vec![1]),
            other => panic!("expected torsion violation, got {:?}", other),
        }

        // unimodular column e1 + e2 in the standard plane
        let l = Lattice::standard(2);
        let col = Matrix::from_cols(vec![vec![TScalar::one(), TScalar::one()]]);
        assert!(QuotientLatticeDatum::new(l, col).validate().is_empty());

        // a vector outside the lattice
        let out = Matrix::from_cols(vec![vec![
            TScalar::t_pow(-1),
            TScalar::zero(),
            TScalar::zero(),
        ]]);
        let q3 = QuotientLatticeDatum::new(l1, out);
        assert!(matches!(q3.validate()[0], Violation::NotInLattice { column: 0 }));
    }

    #[test]
    fn gamma_config_json_round_trip() {
        let text = r#"{
            "d": 3,
            "quotient_lattices": [
                { "L": [["1","0","0"],["0","1","0"],["0","0","1"]], "M": [["0","0","1"]] },
                { "L": [["1","0","0"],["0","1","0"],["0","0","t^-1"]], "M": [["0","1","0"]] },
                { "L": [["1","0","0"],["0","t^-1","0"],["0","0","1"]], "M": [["1","0","0"]] }
            ]
        }"#;
        let cfg = GammaConfig::from_json_str(text).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.ranks(), vec![2, 2, 2]);
        let j = cfg.to_json();
        let round = GammaConfig::from_json(&j).unwrap();
        assert_eq!(round, cfg);
    }
}
