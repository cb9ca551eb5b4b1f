//! The combinatorial dimension and Chow-class formula for generalised
//! multi-view varieties, cross-checked against the eliminated vision ideal.
//!
//! Run with: cargo run --example chow_formula

use mdeg::matrix::Matrix;
use mdeg::multiview::{admissible_tuples, dim_and_chow, kernel_dims, vision_ideal, CameraTuple};
use mdeg::poly::GroebnerConfig;
use mdeg::scalar::{rat_int, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    // two generic pinhole views of 3-space
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let cams = loop {
        let mats: Vec<Matrix<Rat>> = (0..2)
            .map(|_| {
                Matrix::from_rows(
                    (0..3)
                        .map(|_| (0..4).map(|_| rat_int(rng.gen_range(-9..=9))).collect())
                        .collect(),
                )
            })
            .collect();
        if let Ok(c) = CameraTuple::new(4, mats) {
            break c;
        }
    };

    let profile = kernel_dims(&cams).unwrap();
    println!("kernel dimensions of the single factors: {:?}", profile.singleton_dims());
    let adm = admissible_tuples(&profile);
    println!("maximal admissible degree r0 = {}, tuples {:?}", adm.r0, adm.tuples);

    let (p0, predicted) = dim_and_chow(&profile, &[3, 3]).unwrap();
    println!("formula:     dimension {} and class {}", p0, predicted);

    let ideal = vision_ideal(&cams, &GroebnerConfig::default()).unwrap();
    println!(
        "elimination: dimension {} and class {}",
        ideal.dimension().unwrap(),
        ideal.multidegree().unwrap()
    );
    println!("vision ideal generators: {:?}", ideal.render().unwrap());
    assert_eq!(ideal.dimension().unwrap(), p0 as i64);
    assert_eq!(ideal.multidegree().unwrap(), predicted);
    println!("the two routes agree");
}
