//! Sparse multivariate polynomial engine over exact coefficient fields.
//!
//! Variables are block-structured: per-factor coordinate blocks `x{i}{j}`
//! (row i of factor j), optional parameter blocks `z{i}` (one scaling per
//! factor), `y{k}` (source coordinates), a saturation helper `w` and the
//! degeneration parameter `t`. The block structure drives the multigrading,
//! the default monomial order and elimination.

mod field;
mod groebner;
mod hilbert;
mod ideal;
mod monomial;
mod multipoly;
mod order;

pub use field::Field;
pub use groebner::{buchberger, normal_form, GroebnerConfig};
pub use hilbert::{kpolynomial, multidegree_of_monomial_ideal, ChowClass};
pub use ideal::{collect_t, expand_t, specialize_t0, Ideal, IdealJson};
pub use monomial::Monomial;
pub use multipoly::{parse_poly, MultiPoly};
pub use order::MonomialOrder;

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("resource limit exceeded during {what}: {spairs} S-pairs processed, basis size {basis}")]
    ResourceLimit { what: String, spairs: usize, basis: usize },
    #[error("empty scheme: the ideal is the unit ideal")]
    EmptyScheme,
    #[error("generator has a coefficient of negative valuation; saturate and clear first")]
    NotIntegral,
    #[error("variable structure mismatch: {0}")]
    SpecMismatch(String),
    #[error("expected a monomial ideal")]
    NotMonomial,
    #[error("inconsistent factor ranks: {0}")]
    InconsistentRanks(String),
}

/// Kind of a single variable in a [`VarSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// Coordinate `row` (0-based) of factor `factor` (0-based).
    X { factor: usize, row: usize },
    /// Per-factor scaling parameter.
    Z(usize),
    /// Source coordinate.
    Y(usize),
    /// Saturation helper.
    W,
    /// Degeneration parameter.
    T,
}

/// Auxiliary variable groups that elimination may drop wholesale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxGroup {
    Z,
    Y,
    W,
    T,
}

/// Ordered, block-structured variable list shared by the polynomials of a ring.
///
/// Layout is canonical: x-blocks factor by factor, then z, y, w, t. The
/// position of a variable in the list is its index in exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpec {
    vars: Vec<VarKind>,
    block_sizes: Vec<usize>,
    nz: usize,
    ny: usize,
    has_w: bool,
    has_t: bool,
    by_name: HashMap<String, usize>,
}

impl VarSpec {
    pub fn new(block_sizes: Vec<usize>, nz: usize, ny: usize, has_w: bool, has_t: bool) -> Arc<VarSpec> {
        assert!(block_sizes.iter().all(|&l| l >= 1), "factor blocks must be nonempty");
        let mut vars = Vec::new();
        for (factor, &l) in block_sizes.iter().enumerate() {
            for row in 0..l {
                vars.push(VarKind::X { factor, row });
            }
        }
        for k in 0..nz {
            vars.push(VarKind::Z(k));
        }
        for k in 0..ny {
            vars.push(VarKind::Y(k));
        }
        if has_w {
            vars.push(VarKind::W);
        }
        if has_t {
            vars.push(VarKind::T);
        }
        let mut spec = VarSpec {
            vars,
            block_sizes,
            nz,
            ny,
            has_w,
            has_t,
            by_name: HashMap::new(),
        };
        for i in 0..spec.vars.len() {
            for name in spec.names_of(i) {
                let clash = spec.by_name.insert(name, i);
                assert!(clash.is_none() || clash == Some(i), "ambiguous variable name");
            }
        }
        Arc::new(spec)
    }

    /// Ring of a product of projective factors: x-variables only.
    pub fn product(block_sizes: &[usize]) -> Arc<VarSpec> {
        VarSpec::new(block_sizes.to_vec(), 0, 0, false, false)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn n_factors(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn has_t(&self) -> bool {
        self.has_t
    }

    pub fn var_kind(&self, i: usize) -> &VarKind {
        &self.vars[i]
    }

    /// Factor tag of a variable; `None` for auxiliary variables.
    pub fn factor_of(&self, i: usize) -> Option<usize> {
        match self.vars[i] {
            VarKind::X { factor, .. } => Some(factor),
            _ => None,
        }
    }

    fn names_of(&self, i: usize) -> Vec<String> {
        match &self.vars[i] {
            VarKind::X { factor, row } => {
                let (r, f) = (row + 1, factor + 1);
                let mut names = vec![format!("x{}_{}", r, f)];
                if r <= 9 && f <= 9 {
                    names.push(format!("x{}{}", r, f));
                }
                names
            }
            VarKind::Z(k) => vec![format!("z{}", k + 1)],
            VarKind::Y(k) => vec![format!("y{}", k + 1)],
            VarKind::W => vec!["w".to_string()],
            VarKind::T => vec!["t".to_string()],
        }
    }

    /// Preferred display name of variable `i`.
    pub fn name(&self, i: usize) -> String {
        match &self.vars[i] {
            VarKind::X { factor, row } if row + 1 <= 9 && factor + 1 <= 9 => {
                format!("x{}{}", row + 1, factor + 1)
            }
            _ => self.names_of(i).remove(0),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn x_index(&self, factor: usize, row: usize) -> usize {
        let mut idx = 0;
        for f in 0..factor {
            idx += self.block_sizes[f];
        }
        assert!(row < self.block_sizes[factor]);
        idx + row
    }

    pub fn indices_of(&self, group: AuxGroup) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, k)| {
                matches!(
                    (group, k),
                    (AuxGroup::Z, VarKind::Z(_))
                        | (AuxGroup::Y, VarKind::Y(_))
                        | (AuxGroup::W, VarKind::W)
                        | (AuxGroup::T, VarKind::T)
                )
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn x_indices(&self) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, k)| matches!(k, VarKind::X { .. }))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn t_index(&self) -> Option<usize> {
        self.vars.iter().position(|k| matches!(k, VarKind::T))
    }

    /// True when the ring consists purely of the projective coordinate blocks.
    pub fn is_x_only(&self) -> bool {
        self.nz == 0 && self.ny == 0 && !self.has_w && !self.has_t
    }

    /// Variable-kind groups in decreasing default precedence, skipping empties.
    fn order_groups(&self) -> Vec<Vec<usize>> {
        let mut groups = Vec::new();
        let xs = self.x_indices();
        if !xs.is_empty() {
            groups.push(xs);
        }
        for g in [AuxGroup::Z, AuxGroup::Y, AuxGroup::W, AuxGroup::T] {
            let idx = self.indices_of(g);
            if !idx.is_empty() {
                groups.push(idx);
            }
        }
        groups
    }

    /// Default working order: graded-reverse-lexicographic within kind blocks,
    /// x above z above y above w, with t smallest.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::Block(self.order_groups())
    }

    /// Elimination order with the dropped groups dominating everything else.
    pub fn elimination_order(&self, drop: &[AuxGroup]) -> MonomialOrder {
        let dropped: Vec<usize> = drop.iter().flat_map(|g| self.indices_of(*g)).collect();
        assert!(!dropped.is_empty(), "nothing to eliminate");
        let mut groups = vec![dropped.clone()];
        for g in self.order_groups() {
            let rest: Vec<usize> = g.into_iter().filter(|i| !dropped.contains(i)).collect();
            if !rest.is_empty() {
                groups.push(rest);
            }
        }
        MonomialOrder::Block(groups)
    }

    /// Spec with the given auxiliary groups removed, plus the index map from
    /// old variable positions to new ones.
    pub fn drop_groups(&self, drop: &[AuxGroup]) -> (Arc<VarSpec>, Vec<Option<usize>>) {
        let nz = if drop.contains(&AuxGroup::Z) { 0 } else { self.nz };
        let ny = if drop.contains(&AuxGroup::Y) { 0 } else { self.ny };
        let has_w = self.has_w && !drop.contains(&AuxGroup::W);
        let has_t = self.has_t && !drop.contains(&AuxGroup::T);
        let new = VarSpec::new(self.block_sizes.clone(), nz, ny, has_w, has_t);
        let map = self
            .vars
            .iter()
            .map(|k| new.vars.iter().position(|k2| k2 == k))
            .collect();
        (new, map)
    }

    /// Spec extended with auxiliary variables, plus old-to-new index map.
    pub fn extend(&self, nz: usize, ny: usize, add_w: bool, add_t: bool) -> (Arc<VarSpec>, Vec<usize>) {
        let new = VarSpec::new(
            self.block_sizes.clone(),
            self.nz + nz,
            self.ny + ny,
            self.has_w || add_w,
            self.has_t || add_t,
        );
        let map = self
            .vars
            .iter()
            .map(|k| new.vars.iter().position(|k2| k2 == k).expect("superset"))
            .collect();
        (new, map)
    }

    /// Per-factor degree vector of a monomial (auxiliary variables ignored).
    pub fn block_degrees(&self, m: &Monomial) -> Vec<u32> {
        let mut deg = vec![0u32; self.n_factors()];
        for (i, e) in m.exponents().iter().enumerate() {
            if let Some(f) = self.factor_of(i) {
                deg[f] += e;
            }
        }
        deg
    }

    pub fn to_json(&self) -> VarSpecJson {
        VarSpecJson {
            blocks: self.block_sizes.clone(),
            z: self.nz,
            y: self.ny,
            w: self.has_w,
            t: self.has_t,
        }
    }

    pub fn from_json(j: &VarSpecJson) -> Arc<VarSpec> {
        VarSpec::new(j.blocks.clone(), j.z, j.y, j.w, j.t)
    }
}

/// Serialized form of a [`VarSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarSpecJson {
    pub blocks: Vec<usize>,
    #[serde(default)]
    pub z: usize,
    #[serde(default)]
    pub y: usize,
    #[serde(default)]
    pub w: bool,
    #[serde(default)]
    pub t: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_layout_and_names() {
        let spec = VarSpec::new(vec![2, 2, 2], 0, 3, false, true);
        assert_eq!(spec.nvars(), 10);
        assert_eq!(spec.name(0), "x11");
        assert_eq!(spec.name(1), "x21");
        assert_eq!(spec.name(2), "x12");
        assert_eq!(spec.name(6), "y1");
        assert_eq!(spec.name(9), "t");
        assert_eq!(spec.lookup("x21"), Some(1));
        assert_eq!(spec.lookup("x2_1"), Some(1));
        assert_eq!(spec.factor_of(3), Some(1));
        assert_eq!(spec.factor_of(9), None);
    }

    #[test]
    fn drop_and_extend_round_trip() {
        let spec = VarSpec::new(vec![2, 2], 2, 3, false, true);
        let (small, map) = spec.drop_groups(&[AuxGroup::Z, AuxGroup::Y]);
        assert_eq!(small.nvars(), 5);
        assert_eq!(map[0], Some(0));
        assert_eq!(map[4], None); // z1 dropped
        assert_eq!(map[spec.nvars() - 1], Some(4)); // t kept
        let (big, inj) = small.extend(0, 0, true, false);
        assert!(big.has_w);
        assert_eq!(inj[0], 0);
    }
}
