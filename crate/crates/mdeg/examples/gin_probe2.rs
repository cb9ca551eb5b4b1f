use mdeg::building::{GammaConfig, Lattice, QuotientLatticeDatum};
use mdeg::degeneration::{mustafin_ideal, special_fibre, PipelineOptions};
use mdeg::matrix::Matrix;
use mdeg::scalar::{rat_int, TScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("MDEG_LOG")).init();
    let n = 3usize;
    let bound: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = 4usize;
    let scaling = [0i64, 0, 1, 2];
    let mut data = Vec::new();
    for _ in 0..n {
        let a = loop {
            let m = Matrix::new(
                d,
                d,
                (0..16)
                    .map(|k| TScalar::from_rat(rat_int(rng.gen_range(-bound..=bound))).mul_t_pow(scaling[k / 4]))
                    .collect(),
            );
            if !m.det().is_zero() {
                break m;
            }
        };
        let g = a.inverse().unwrap();
        let m_col = Matrix::from_cols(vec![g.col(0)]);
        data.push(QuotientLatticeDatum::new(Lattice::new(g).unwrap(), m_col));
    }
    let cfg = GammaConfig::new(d, data, Some(Lattice::standard(d)));
    let t0 = Instant::now();
    let ideals = mustafin_ideal(&cfg, None, &PipelineOptions::default()).unwrap();
    println!("elimination+saturation: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let fibre = special_fibre(&ideals.saturated).unwrap();
    println!("fibre: {:?} in {:?}", fibre.render().unwrap(), t0.elapsed());
}
