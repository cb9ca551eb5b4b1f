//! Component candidates of the special fibre: each reference lattice induces
//! reduced factor maps over the residue field whose vision ideal is checked
//! against the fibre for containment and dimension.
//!
//! Run with: cargo run --example component_candidates

use mdeg::building::{matrix_from_columns, GammaConfig, Lattice};
use mdeg::degeneration::{component_check, mustafin_ideal, special_fibre, PipelineOptions};

const CONFIG: &str = include_str!("../fixtures/three_factor_config.json");
const REFERENCES: &str = include_str!("../fixtures/three_factor_references.json");

fn main() {
    let cfg = GammaConfig::from_json_str(CONFIG).unwrap();
    let refs: Vec<Lattice> = serde_json::from_str::<Vec<Vec<Vec<String>>>>(REFERENCES)
        .unwrap()
        .iter()
        .map(|cols| Lattice::new(matrix_from_columns(cols).unwrap()).unwrap())
        .collect();

    let opts = PipelineOptions::default();
    let ideals = mustafin_ideal(&cfg, None, &opts).unwrap();
    let fibre = special_fibre(&ideals.saturated).unwrap();
    println!("special fibre: {:?}", fibre.render().unwrap());
    println!("fibre class:   {}", fibre.multidegree().unwrap());
    println!();

    for verdict in component_check(&fibre, &cfg, &refs, &opts) {
        let cand = verdict.candidate.as_ref().unwrap();
        println!("reference basis:");
        print!("{}", verdict.reference.basis());
        println!("reduced factor maps (ranks {:?}):", cand.residue_ranks);
        for h in &cand.factor_matrices {
            print!("{}", h);
        }
        println!("candidate ideal: {:?}", cand.ideal.render().unwrap());
        println!(
            "contains fibre: {}, dimension match: {}, is component: {}, class {}",
            verdict.contains_special_fibre,
            verdict.dimension_match,
            verdict.is_component,
            verdict.chow_class.as_ref().unwrap(),
        );
        println!();
    }
}
