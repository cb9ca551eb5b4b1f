//! Lattice combinatorics over the valuation ring: invariant factors,
//! adjacency, convex hulls and quotient-lattice validation.
//!
//! Run with: cargo run --example building_walk

use mdeg::building::{
    adjacent, convex_hull, invariant_factors, lattice_intersection, Lattice,
    QuotientLatticeDatum,
};
use mdeg::matrix::Matrix;
use mdeg::scalar::{parse_tscalar, TScalar};

fn diag(entries: &[&str]) -> Lattice {
    let d = entries.len();
    let mut m: Matrix<TScalar> = Matrix::zero(d, d);
    for (i, s) in entries.iter().enumerate() {
        m[(i, i)] = parse_tscalar(s).unwrap();
    }
    Lattice::new(m).unwrap()
}

fn main() {
    let l1 = Lattice::standard(3);
    let l2 = diag(&["1", "1", "t^-1"]);
    let far = diag(&["1", "1", "t^-2"]);

    println!("invariant factors L1 vs L2:  {:?}", invariant_factors(&l1, &l2).unwrap());
    println!("invariant factors L1 vs far: {:?}", invariant_factors(&l1, &far).unwrap());
    println!("adjacent(L1, L2)  = {}", adjacent(&l1.class(), &l2.class()));
    println!("adjacent(L1, far) = {}", adjacent(&l1.class(), &far.class()));

    let meet = lattice_intersection(&l1, &l2, 0, 0).unwrap();
    println!("L1 ∩ L2 = L1: {}", meet.same_module(&l1));

    let hull = convex_hull(&[l1.class(), far.class()]);
    println!("hull of two distance-2 classes has {} classes:", hull.len());
    for c in &hull {
        println!("{}", c.representative().basis());
    }

    // quotient-lattice validation: a direct summand passes, torsion fails
    let e3 = Matrix::from_cols(vec![vec![TScalar::zero(), TScalar::zero(), TScalar::one()]]);
    let good = QuotientLatticeDatum::new(l1.clone(), e3);
    println!("valid quotient: {:?}", good.validate());
    let te1 = Matrix::from_cols(vec![vec![TScalar::t(), TScalar::zero(), TScalar::zero()]]);
    let bad = QuotientLatticeDatum::new(l1, te1);
    for v in bad.validate() {
        println!("violation: {}", v);
    }
}
