use mdeg::matrix::Matrix;
use mdeg::multiview::{vision_ideal, CameraTuple};
use mdeg::poly::GroebnerConfig;
use mdeg::scalar::{rat_int, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("MDEG_LOG")).init();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cams = loop {
        let mats: Vec<Matrix<Rat>> = (0..3)
            .map(|_| Matrix::from_rows((0..3).map(|_| (0..4).map(|_| rat_int(rng.gen_range(-9..=9))).collect()).collect()))
            .collect();
        if let Ok(c) = CameraTuple::new(4, mats) {
            break c;
        }
    };
    let t0 = Instant::now();
    let ideal = vision_ideal(&cams, &GroebnerConfig::default()).unwrap();
    println!("3-view vision ideal over Q in {:?}", t0.elapsed());
    println!("basis size {}", ideal.reduced_basis().unwrap().len());
    println!("dim {} class {}", ideal.dimension().unwrap(), ideal.multidegree().unwrap());
}
