//! The generic-initial-ideal experiment: random factor maps with row
//! scalings (1, t, t^2) degenerate to a benchmark monomial ideal; the run
//! also checks the designated minor specializations.
//!
//! Run with: cargo run --release --example gin_experiment [n] [seed]
//! (n = 2 runs in seconds; n = 3 takes a few minutes)

use mdeg::degeneration::{gin_experiment, PipelineOptions};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let seed: u64 = std::env::args().nth(2).and_then(|a| a.parse().ok()).unwrap_or(7);
    println!("running the experiment with n = {}, seed = {}", n, seed);
    let report = gin_experiment(n, seed, &PipelineOptions::default()).unwrap();

    println!("special fibre: {:?}", report.report.special_fibre.render().unwrap());
    println!("fibre is monomial: {}", report.fibre_is_monomial);
    for (conv, contained, hilbert, equal) in &report.convention_results {
        println!(
            "{}: benchmark contained {}, Hilbert functions agree {}, ideals equal {}",
            conv.label(),
            contained,
            hilbert,
            equal
        );
    }
    println!(
        "matched conventions: {:?}",
        report.matched_conventions.iter().map(|c| c.label()).collect::<Vec<_>>()
    );
    for check in &report.minor_checks {
        println!(
            "minor for factors {:?}: predicted {} -> nonzero {}, matches {}",
            check.subset,
            check.predicted_monomial,
            check.leading_coefficient_nonzero,
            check.matches_prediction
        );
    }
}
