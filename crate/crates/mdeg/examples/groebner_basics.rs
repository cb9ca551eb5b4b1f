//! The polynomial engine: reduced Gröbner bases, normal forms, elimination,
//! saturation and multidegrees on small ideals.
//!
//! Run with: cargo run --example groebner_basics

use mdeg::poly::{parse_poly, AuxGroup, Ideal, MonomialOrder, VarSpec};

fn main() {
    // a classical lexicographic example in two variables
    let spec = VarSpec::new(vec![], 0, 2, false, false);
    let gens = vec![
        parse_poly("y1^2 - y2", &spec).unwrap(),
        parse_poly("y1*y2 - 1", &spec).unwrap(),
    ];
    let ideal = Ideal::new(spec.clone(), gens).unwrap();
    let basis = ideal.groebner_basis(&MonomialOrder::Lex).unwrap();
    println!("reduced basis under lex:");
    for g in basis.iter() {
        println!("  {}", g.display(&spec, &MonomialOrder::Lex));
    }

    // eliminating a parameter: the ideal of a parametrized curve
    let pspec = VarSpec::new(vec![], 1, 2, false, false);
    let graph = Ideal::new(
        pspec.clone(),
        vec![
            parse_poly("y1 - z1", &pspec).unwrap(),
            parse_poly("y2 - z1^2", &pspec).unwrap(),
        ],
    )
    .unwrap();
    let curve = graph.eliminate(&[AuxGroup::Z]).unwrap();
    println!("curve ideal after eliminating the parameter: {:?}", curve.render().unwrap());

    // saturation strips the degeneration parameter
    let tspec = VarSpec::new(vec![2, 2, 2], 0, 0, false, true);
    let family = Ideal::new(
        tspec.clone(),
        vec![parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &tspec).unwrap()],
    )
    .unwrap();
    let t = parse_poly("t", &tspec).unwrap();
    let saturated = family.saturate(&t).unwrap();
    println!("t-saturation is a fixed point: {}", saturated.equals(&family).unwrap());

    // multidegree of a monomial hypersurface in (P1)^3
    let xspec = VarSpec::product(&[2, 2, 2]);
    let fibre = Ideal::new(xspec.clone(), vec![parse_poly("x11*x22*x13", &xspec).unwrap()]).unwrap();
    println!(
        "dimension {} and class {} of the coordinate product hypersurface",
        fibre.dimension().unwrap(),
        fibre.multidegree().unwrap()
    );
}
