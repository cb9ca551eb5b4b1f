//! Thin command-line front end over the library pipeline.

use clap::{Args, Parser, Subcommand};
use mdeg::building::{
    adjacent, convex_hull, invariant_factors, matrix_from_columns, matrix_to_columns,
    BuildingError, GammaConfig, Lattice,
};
use mdeg::degeneration::{
    component_check, degenerate, gin_experiment, special_fibre as compute_special_fibre,
    mustafin_ideal, CandidateVerdict, CubicConvention, DegenError, PipelineOptions,
};
use mdeg::multiview::{admissible_tuples, dim_and_chow, kernel_dims, CameraTuple, MultiviewError};
use mdeg::poly::{GroebnerConfig, PolyError};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mdeg",
    about = "Exact degenerations of generalised multi-view varieties over the ring of rational functions in t",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Configuration file (JSON, see the shipped fixtures for the format)
    #[arg(long)]
    input: PathBuf,
    /// Write the machine-readable JSON here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Cap on the total degree reached inside a Gröbner run
    #[arg(long, default_value_t = 40)]
    max_degree: u32,
    /// Cap on the number of S-pairs processed in a Gröbner run
    #[arg(long, default_value_t = 200_000)]
    max_spairs: usize,
}

#[derive(Args, Clone)]
struct PipelineArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Reference lattice as a JSON list of columns of scalar strings;
    /// repeatable to check several candidate references
    #[arg(long)]
    reference: Vec<String>,
    /// Also try every class in the convex hull of the lattice classes
    #[arg(long)]
    hull_candidates: bool,
    /// Seed for the deterministic generic-fibre recovery points
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone)]
struct GinArgs {
    /// Number of factors (2, 3 or 4)
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Seed for the deterministic random draws
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Cubic index convention to report, or report-all
    #[arg(long, default_value = "min-carries-x3")]
    convention: String,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 40)]
    max_degree: u32,
    #[arg(long, default_value_t = 200_000)]
    max_spairs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted dimension, Chow class and component bound of a configuration
    Chow(CommonArgs),
    /// Full degeneration report: family ideal, saturation, special fibre,
    /// classes and candidate verdicts
    Degenerate(PipelineArgs),
    /// Special fibre only
    Fibre(PipelineArgs),
    /// Candidate verdicts for the given or derived reference lattices
    Components(PipelineArgs),
    /// Pairwise invariant factors, adjacency and the convex hull of the
    /// lattice classes of a configuration
    Building(CommonArgs),
    /// Generic-initial-ideal experiment
    Gin(GinArgs),
    /// Run the shipped fixtures end-to-end and report pass/fail
    Selftest,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("MDEG_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(classify(&e))
        }
    }
}

/// Exit codes: 2 for input/validation problems, 3 for resource caps,
/// 1 for internal failures.
fn classify(e: &DegenError) -> u8 {
    match e {
        DegenError::Poly(PolyError::ResourceLimit { .. }) => 3,
        DegenError::Multiview(MultiviewError::Poly(PolyError::ResourceLimit { .. })) => 3,
        DegenError::Building(_) => 2,
        DegenError::Multiview(MultiviewError::Building(_)) => 2,
        DegenError::Multiview(_) => 2,
        DegenError::Experiment(_) => 2,
        DegenError::Poly(_) => 1,
    }
}

fn io_err(e: std::io::Error) -> DegenError {
    DegenError::Building(BuildingError::InvalidConfig(format!("io: {}", e)))
}

fn read_config(args: &CommonArgs) -> Result<GammaConfig, DegenError> {
    let text = std::fs::read_to_string(&args.input).map_err(io_err)?;
    let cfg = GammaConfig::from_json_str(&text)?;
    cfg.validate()?;
    Ok(cfg)
}

fn parse_reference(text: &str) -> Result<Lattice, DegenError> {
    let cols: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| {
        DegenError::Building(BuildingError::InvalidConfig(format!(
            "reference must be a JSON list of columns: {}",
            e
        )))
    })?;
    let m = matrix_from_columns(&cols)
        .map_err(|e| DegenError::Building(BuildingError::InvalidConfig(e.to_string())))?;
    Ok(Lattice::new(m)?)
}

fn groebner_config(max_degree: u32, max_spairs: usize) -> GroebnerConfig {
    GroebnerConfig { max_degree, max_spairs }
}

fn emit<T: Serialize>(output: &Option<PathBuf>, value: &T) -> Result<(), DegenError> {
    let json = serde_json::to_string_pretty(value).expect("serializable report");
    match output {
        Some(path) => std::fs::write(path, json + "\n").map_err(io_err),
        None => {
            println!("{}", json);
            Ok(())
        }
    }
}

fn pipeline_options(args: &PipelineArgs) -> PipelineOptions {
    PipelineOptions {
        groebner: groebner_config(args.common.max_degree, args.common.max_spairs),
        hull_candidates: args.hull_candidates,
        recovery_checks: 1,
        seed: args.seed,
    }
}

fn references(args: &PipelineArgs) -> Result<Vec<Lattice>, DegenError> {
    args.reference.iter().map(|r| parse_reference(r)).collect()
}

#[derive(Serialize)]
struct ChowOutput {
    p0: usize,
    chow_class: String,
    component_bound: usize,
    provenance: &'static str,
}

#[derive(Serialize)]
struct BuildingOutput {
    d: usize,
    pairs: Vec<BuildingPair>,
    convex_hull_size: usize,
    convex_hull: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct BuildingPair {
    i: usize,
    j: usize,
    invariant_factors: Vec<i64>,
    adjacent: bool,
}

#[derive(Serialize)]
struct FibreOutput {
    ring_blocks: Vec<usize>,
    special_fibre: Vec<String>,
    dimension: i64,
    multidegree: String,
}

#[derive(Serialize)]
struct ComponentsOutput {
    special_fibre: Vec<String>,
    verdicts: Vec<mdeg::degeneration::CandidateVerdictJson>,
    components_found: usize,
    candidates_cover_class: bool,
}

fn verdict_to_json(v: &CandidateVerdict) -> mdeg::degeneration::CandidateVerdictJson {
    mdeg::degeneration::CandidateVerdictJson {
        reference: matrix_to_columns(v.reference.basis()),
        candidate_ideal: v.candidate.as_ref().map(|c| c.ideal.render().unwrap_or_default()),
        candidate_dimension: v.candidate_dimension,
        chow_class: v.chow_class.as_ref().map(|c| c.to_string()),
        contains_special_fibre: v.contains_special_fibre,
        dimension_match: v.dimension_match,
        is_component: v.is_component,
        error: v.error.clone(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, DegenError> {
    match cli.command {
        Command::Chow(args) => {
            let cfg = read_config(&args)?;
            let maps = mdeg::multiview::factor_map_matrices(&cfg, &cfg.reference_lattice(), None)?;
            let cams = CameraTuple::new(cfg.d, maps)?;
            let profile = kernel_dims(&cams)?;
            let (p0, class) = dim_and_chow(&profile, &cfg.ranks())?;
            let bound = admissible_tuples(&profile).tuples.len();
            eprintln!("p0={}, class={}, bound={}", p0, class, bound);
            emit(
                &args.output,
                &ChowOutput {
                    p0,
                    chow_class: class.to_string(),
                    component_bound: bound,
                    provenance: "predicted-by-formula",
                },
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Degenerate(args) => {
            let cfg = read_config(&args.common)?;
            let opts = pipeline_options(&args);
            let refs = references(&args)?;
            let report = degenerate(&cfg, &refs, &opts)?;
            print_report_summary(&report);
            emit(&args.common.output, &report.to_json()?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fibre(args) => {
            let cfg = read_config(&args.common)?;
            let opts = pipeline_options(&args);
            let ideals = mustafin_ideal(&cfg, None, &opts)?;
            let fibre = compute_special_fibre(&ideals.saturated)?;
            let out = FibreOutput {
                ring_blocks: fibre.spec().block_sizes().to_vec(),
                special_fibre: fibre.render()?,
                dimension: fibre.dimension()?,
                multidegree: fibre.multidegree()?.to_string(),
            };
            eprintln!("special fibre: {}", out.special_fibre.join(", "));
            emit(&args.common.output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Components(args) => {
            let cfg = read_config(&args.common)?;
            let opts = pipeline_options(&args);
            let mut refs = references(&args)?;
            if opts.hull_candidates {
                let classes: Vec<_> = cfg.data.iter().map(|q| q.lattice().class()).collect();
                for cls in convex_hull(&classes) {
                    let rep = cls.representative();
                    if !refs.iter().any(|r| r.same_module(&rep)) {
                        refs.push(rep);
                    }
                }
            }
            let ideals = mustafin_ideal(&cfg, None, &opts)?;
            let fibre = compute_special_fibre(&ideals.saturated)?;
            let verdicts = component_check(&fibre, &cfg, &refs, &opts);
            let mut class_sum = mdeg::poly::ChowClass::zero(fibre.multidegree()?.caps().to_vec());
            for v in &verdicts {
                if v.is_component {
                    if let Some(c) = &v.chow_class {
                        class_sum = class_sum.add(c);
                    }
                }
            }
            let covered = class_sum == fibre.multidegree()?;
            for v in &verdicts {
                eprintln!(
                    "reference -> is_component={} (contains={}, dim_match={})",
                    v.is_component, v.contains_special_fibre, v.dimension_match
                );
            }
            let out = ComponentsOutput {
                special_fibre: fibre.render()?,
                components_found: verdicts.iter().filter(|v| v.is_component).count(),
                verdicts: verdicts.iter().map(verdict_to_json).collect(),
                candidates_cover_class: covered,
            };
            emit(&args.common.output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Building(args) => {
            let cfg = read_config(&args)?;
            let classes: Vec<_> = cfg.data.iter().map(|q| q.lattice().class()).collect();
            let mut pairs = Vec::new();
            for i in 0..classes.len() {
                for j in (i + 1)..classes.len() {
                    pairs.push(BuildingPair {
                        i: i + 1,
                        j: j + 1,
                        invariant_factors: invariant_factors(
                            cfg.data[i].lattice(),
                            cfg.data[j].lattice(),
                        )?,
                        adjacent: adjacent(&classes[i], &classes[j]),
                    });
                }
            }
            let hull = convex_hull(&classes);
            for p in &pairs {
                eprintln!(
                    "L{} vs L{}: invariant factors {:?}, adjacent: {}",
                    p.i, p.j, p.invariant_factors, p.adjacent
                );
            }
            eprintln!("convex hull: {} classes", hull.len());
            emit(
                &args.output,
                &BuildingOutput {
                    d: cfg.d,
                    pairs,
                    convex_hull_size: hull.len(),
                    convex_hull: hull
                        .iter()
                        .map(|c| matrix_to_columns(c.canonical_matrix()))
                        .collect(),
                },
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gin(args) => {
            match args.convention.as_str() {
                "min-carries-x3" | "report-all" => {}
                other => {
                    return Err(DegenError::Building(BuildingError::InvalidConfig(format!(
                        "unknown convention '{}'; use min-carries-x3 or report-all",
                        other
                    ))))
                }
            }
            let opts = PipelineOptions {
                groebner: groebner_config(args.max_degree, args.max_spairs),
                ..PipelineOptions::default()
            };
            let report = gin_experiment(args.n, args.seed, &opts)?;
            let mut json = report.to_json()?;
            if args.convention == "min-carries-x3" {
                json.convention_results
                    .retain(|c| c.convention == CubicConvention::MinCarriesX3.label());
            }
            for c in &json.convention_results {
                eprintln!(
                    "{}: contained={} hilbert={} equal={}",
                    c.convention,
                    c.benchmark_contained_in_fibre,
                    c.hilbert_functions_agree_up_to_degree_6,
                    c.ideals_equal
                );
            }
            eprintln!("matched conventions: {:?}", json.matched_conventions);
            emit(&args.output, &json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest => selftest(),
    }
}

fn print_report_summary(report: &mdeg::degeneration::DegenerationReport) {
    eprintln!("family ideal (saturated): {:?}", report.ideals.saturated.render().unwrap_or_default());
    eprintln!("special fibre:            {:?}", report.special_fibre.render().unwrap_or_default());
    eprintln!(
        "dimension {} (predicted {}), class {} (predicted {}), bound {}",
        report.fibre_dimension,
        report.predicted_dimension,
        report.fibre_multidegree,
        report.predicted_chow,
        report.component_bound
    );
    eprintln!(
        "components found: {} of bound {}",
        report.verdicts.iter().filter(|v| v.is_component).count(),
        report.component_bound
    );
    eprintln!("certificates: {:?}", report.certificates);
}

const FIXTURE_CONFIG: &str = include_str!("../../fixtures/three_factor_config.json");
const FIXTURE_REFERENCES: &str = include_str!("../../fixtures/three_factor_references.json");

fn selftest() -> Result<ExitCode, DegenError> {
    let mut all_ok = true;
    let mut check = |name: &str, ok: bool| {
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
        all_ok &= ok;
    };

    let cfg = GammaConfig::from_json_str(FIXTURE_CONFIG)?;
    cfg.validate()?;
    let ref_cols: Vec<Vec<Vec<String>>> = serde_json::from_str(FIXTURE_REFERENCES)
        .map_err(|e| DegenError::Building(BuildingError::InvalidConfig(e.to_string())))?;
    let refs: Vec<Lattice> = ref_cols
        .iter()
        .map(|cols| {
            Lattice::new(matrix_from_columns(cols).expect("fixture parses")).expect("invertible")
        })
        .collect();
    let report = degenerate(&cfg, &refs, &PipelineOptions::default())?;

    let spec = report.ideals.spec.clone();
    let expected_family = mdeg::poly::Ideal::new(
        spec.clone(),
        vec![mdeg::poly::parse_poly("t^2*x21*x12*x23 - x11*x22*x13", &spec).expect("parses")],
    )
    .expect("well-formed");
    check(
        "family ideal is the expected principal cubic",
        report.ideals.saturated.equals(&expected_family).unwrap_or(false),
    );

    let xspec = report.special_fibre.spec().clone();
    let product = mdeg::poly::Ideal::new(
        xspec.clone(),
        vec![mdeg::poly::parse_poly("x11*x22*x13", &xspec).expect("parses")],
    )
    .expect("well-formed");
    check(
        "special fibre is the coordinate product",
        report.special_fibre.equals(&product).unwrap_or(false),
    );

    let mk = |s: &str| {
        mdeg::poly::Ideal::new(
            xspec.clone(),
            vec![mdeg::poly::parse_poly(s, &xspec).expect("parses")],
        )
        .expect("well-formed")
    };
    let triple = mk("x11")
        .intersection(&mk("x22"))
        .and_then(|i| i.intersection(&mk("x13")));
    check(
        "special fibre equals the intersection of the three hyperplanes",
        triple
            .and_then(|t| report.special_fibre.equals(&t))
            .unwrap_or(false),
    );

    check("dimension 2", report.fibre_dimension == 2);
    check(
        "class H1 + H2 + H3",
        report.fibre_multidegree.to_string() == "H1 + H2 + H3",
    );
    check("component bound 3", report.component_bound == 3);
    check(
        "three components found",
        report.verdicts.iter().filter(|v| v.is_component).count() == 3,
    );
    let expected_components = ["x22", "x11", "x13"];
    for (v, gen) in report.verdicts.iter().zip(expected_components) {
        let ok = v
            .candidate
            .as_ref()
            .map(|c| c.ideal.equals(&mk(gen)).unwrap_or(false))
            .unwrap_or(false);
        check(&format!("component candidate <{}>", gen), ok);
    }
    check(
        "certificates all pass",
        report.certificates.saturation_fixed_point
            && report.certificates.generic_fibre_recovery == Some(true)
            && report.certificates.equidimensional
            && report.certificates.class_specialization
            && report.certificates.multiplicities_all_one
            && report.certificates.candidates_cover_class,
    );

    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
