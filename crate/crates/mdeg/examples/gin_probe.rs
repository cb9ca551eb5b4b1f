use mdeg::degeneration::{gin_experiment, PipelineOptions};
use std::time::Instant;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("MDEG_LOG")).init();
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let seed: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(7);
    let t0 = Instant::now();
    match gin_experiment(n, seed, &PipelineOptions::default()) {
        Ok(r) => {
            println!("n = {} seed = {} in {:?}", n, seed, t0.elapsed());
            println!("fibre monomial: {}", r.fibre_is_monomial);
            println!("fibre: {:?}", r.report.special_fibre.render().unwrap());
            for (conv, contained, hilbert, equal) in &r.convention_results {
                println!("{}: contained={} hilbert={} equal={}", conv.label(), contained, hilbert, equal);
            }
            println!("matched: {:?}", r.matched_conventions.iter().map(|c| c.label()).collect::<Vec<_>>());
            for m in &r.minor_checks {
                println!("minor {:?}: predicted {} nonzero={} matches={}", m.subset, m.predicted_monomial, m.leading_coefficient_nonzero, m.matches_prediction);
            }
        }
        Err(e) => println!("error: {}", e),
    }
}
