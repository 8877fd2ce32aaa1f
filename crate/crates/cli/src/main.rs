//! Command-line frontend: parse a family file, run one pipeline stage, and
//! emit a single structured JSON document on stdout. Diagnostics and wall
//! times go to stderr so stdout stays byte-reproducible for a fixed seed.

mod parser;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser as ClapParser, Subcommand};
use serde_json::{json, Value};

use parcont::{
    check_generic_regularity, discriminant, regular_zero_count, solve_triangular, specialize_basis,
    specialize_saturated, track_path, verify_continuation_theorem, verify_count_numerically,
    Complex64, ComplexPoint, Error as CoreError, FamilySpec, Monomial, ParameterPoint, Polynomial,
    Rational, Specialization, TrackStatus, TrackerConfig, VariableContext,
};

use parser::{parse_family, parse_point, FamilyFile};

#[derive(ClapParser)]
#[command(
    name = "parcont",
    version,
    about = "Exact Gröbner-basis toolkit for parameterized polynomial systems"
)]
struct Cli {
    /// Include wall-clock times in the stdout document (breaks byte
    /// reproducibility across runs; times always go to stderr).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced lex Gröbner basis of the ideal generated by the family.
    Gb { file: PathBuf },
    /// Saturate the family ideal by its Jacobian determinant.
    Saturate { file: PathBuf },
    /// Discriminant factors and the generic regular-zero count.
    Discriminant {
        file: PathBuf,
        /// Report only the raw leading-coefficient factors.
        #[arg(long, conflicts_with = "squarefree")]
        raw: bool,
        /// Report only the squarefree factors (one-parameter families).
        #[arg(long)]
        squarefree: bool,
        /// Seed for the generic-point sample behind the count.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Count the regular zeros of the system at a parameter point.
    Count {
        file: PathBuf,
        /// Parameter assignments, e.g. `a=1,b=-2,c=1/2`.
        #[arg(long)]
        at: String,
    },
    /// Specialize the saturated basis at a parameter point (guarded).
    Specialize {
        file: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Solve the specialized system numerically at a parameter point.
    Solve {
        file: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Track every regular zero from one parameter point to another.
    Track {
        file: PathBuf,
        /// Start parameters (the solved system).
        #[arg(long)]
        from: String,
        /// Target parameters.
        #[arg(long)]
        to: String,
    },
    /// Sample random parameters and check the regular-zero count is the
    /// constant generic value off the discriminant.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the trials; the report is identical for any
        /// value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Exit code classification: 2 for bad input, 1 for mathematical failures
/// surfaced by the library.
fn classify(e: &CoreError) -> u8 {
    match e {
        CoreError::InvalidRational(_)
        | CoreError::UnknownVariable(_)
        | CoreError::MissingAssignment(_)
        | CoreError::DuplicateVariable(_)
        | CoreError::InvalidArgument(_)
        | CoreError::NonSquareFamily { .. } => 2,
        _ => 1,
    }
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: 2 }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure { message: e.to_string(), code: classify(&e) }
    }
}

fn poly_json(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

fn monomial_json(ctx: &Arc<VariableContext>, m: &Monomial) -> Value {
    let as_poly = Polynomial::from_terms(ctx, vec![(Rational::one(), m.clone())])
        .expect("monomial from its own context");
    Value::String(as_poly.to_string())
}

fn basis_json(basis: &parcont::GroebnerBasis) -> Value {
    Value::Array(basis.elements().iter().map(poly_json).collect())
}

fn point_json(q: &ParameterPoint) -> Value {
    let ctx = q.context();
    Value::Array(
        ctx.p_vars()
            .iter()
            .zip(q.values())
            .map(|(name, value)| json!({ "name": name, "value": value.to_string() }))
            .collect(),
    )
}

fn complex_json(z: &Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn solution_json(point: &ComplexPoint) -> Value {
    Value::Array(point.coordinates().iter().map(complex_json).collect())
}

fn family_json(file: &FamilyFile) -> Value {
    let ctx = file.spec.context();
    json!({
        "vars": ctx.x_vars(),
        "params": ctx.p_vars(),
        "equations": file.equation_names.iter().zip(file.spec.polynomials())
            .map(|(name, poly)| json!({ "name": name, "polynomial": poly.to_string() }))
            .collect::<Vec<_>>(),
    })
}

fn load_family(path: &PathBuf) -> Result<FamilyFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_family(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn solve_at(spec: &FamilySpec, q: &ParameterPoint) -> Result<Vec<ComplexPoint>, CoreError> {
    let basis = specialize_saturated(spec, q)?;
    if basis.contains_one() {
        return Ok(Vec::new());
    }
    solve_triangular(&basis)
}

/// Runs one subcommand; returns the command name, family and result
/// documents, and the exit code.
fn run(command: &Command) -> Result<(&'static str, Value, Value, u8), Failure> {
    match command {
        Command::Gb { file } => {
            let family = load_family(file)?;
            let basis = parcont::buchberger(family.spec.polynomials()).map_err(Failure::from)?;
            Ok(("gb", family_json(&family), json!({ "basis": basis_json(&basis) }), 0))
        }
        Command::Saturate { file } => {
            let family = load_family(file)?;
            let sat = family.spec.saturate().map_err(Failure::from)?;
            let aug_ctx = sat.augmented_basis().context().clone();
            let coeffs: Vec<Value> = sat
                .parameter_leading_coeffs()
                .iter()
                .map(|plc| {
                    json!({
                        "source_index": plc.source_index,
                        "block_monomial": monomial_json(&aug_ctx, &plc.block_monomial),
                        "coefficient": plc.coeff.to_string(),
                    })
                })
                .collect();
            let result = json!({
                "augmented_basis": basis_json(sat.augmented_basis()),
                "saturated_basis": basis_json(sat.saturated_basis()),
                "parameter_leading_coefficients": coeffs,
                "generically_regular": check_generic_regularity(&sat),
            });
            Ok(("saturate", family_json(&family), result, 0))
        }
        Command::Discriminant { file, raw, squarefree, seed } => {
            let family = load_family(file)?;
            let report = discriminant(&family.spec, *seed).map_err(Failure::from)?;
            let raw_factors: Vec<Value> = report.raw_factors.iter().map(poly_json).collect();
            let squarefree_factors: Value = match &report.squarefree_factors {
                Some(fs) => Value::Array(fs.iter().map(poly_json).collect()),
                None => Value::Null,
            };
            let mut result = serde_json::Map::new();
            if !*squarefree {
                result.insert("raw_factors".into(), Value::Array(raw_factors));
                result.insert("raw_product".into(), poly_json(&report.raw_product));
            }
            if !*raw {
                result.insert("squarefree_factors".into(), squarefree_factors);
            }
            result.insert("generic_count".into(), json!(report.generic_count));
            result.insert(
                "degenerate".into(),
                report.diagnostic.clone().map(Value::String).unwrap_or(Value::Null),
            );
            let code = if report.diagnostic.is_some() { 1 } else { 0 };
            Ok(("discriminant", family_json(&family), Value::Object(result), code))
        }
        Command::Count { file, at } => {
            let family = load_family(file)?;
            let q = parse_point(&family.spec, at).map_err(Failure::from)?;
            let count = regular_zero_count(&family.spec, &q).map_err(Failure::from)?;
            let result = json!({ "point": point_json(&q), "count": count });
            Ok(("count", family_json(&family), result, 0))
        }
        Command::Specialize { file, at } => {
            let family = load_family(file)?;
            let q = parse_point(&family.spec, at).map_err(Failure::from)?;
            let sat = family.spec.saturate().map_err(Failure::from)?;
            match specialize_basis(&sat, &q).map_err(Failure::from)? {
                Specialization::Basis(basis) => {
                    let result = json!({
                        "point": point_json(&q),
                        "guard": "passed",
                        "basis": basis_json(&basis),
                    });
                    Ok(("specialize", family_json(&family), result, 0))
                }
                Specialization::GuardFailure(gf) => {
                    let vanishing: Vec<Value> = gf
                        .vanishing
                        .iter()
                        .map(|plc| {
                            json!({
                                "source_index": plc.source_index,
                                "coefficient": plc.coeff.to_string(),
                            })
                        })
                        .collect();
                    let result = json!({
                        "point": point_json(&q),
                        "guard": "failed",
                        "vanishing": vanishing,
                    });
                    Ok(("specialize", family_json(&family), result, 1))
                }
            }
        }
        Command::Solve { file, at } => {
            let family = load_family(file)?;
            let q = parse_point(&family.spec, at).map_err(Failure::from)?;
            let solutions = solve_at(&family.spec, &q).map_err(Failure::from)?;
            let regular = verify_count_numerically(&family.spec, &q).map_err(Failure::from)?;
            let result = json!({
                "point": point_json(&q),
                "solutions": solutions.iter().map(solution_json).collect::<Vec<_>>(),
                "regular_count": regular,
            });
            Ok(("solve", family_json(&family), result, 0))
        }
        Command::Track { file, from, to } => {
            let family = load_family(file)?;
            let q_start = parse_point(&family.spec, from).map_err(Failure::from)?;
            let q_target = parse_point(&family.spec, to).map_err(Failure::from)?;
            let starts = solve_at(&family.spec, &q_start).map_err(Failure::from)?;
            let cfg = TrackerConfig::default();
            let mut paths = Vec::new();
            for x0 in &starts {
                let track =
                    track_path(&family.spec, &q_target, &q_start, x0, &cfg).map_err(Failure::from)?;
                let status = match track.status {
                    TrackStatus::Converged => "converged",
                    TrackStatus::Diverged => "diverged",
                    TrackStatus::SingularEncounter => "singular-encounter",
                };
                paths.push(json!({
                    "start": solution_json(&track.start),
                    "end": solution_json(&track.end),
                    "status": status,
                    "steps": track.steps,
                    "final_residual": track.final_residual,
                }));
            }
            let result = json!({
                "from": point_json(&q_start),
                "to": point_json(&q_target),
                "paths": paths,
            });
            Ok(("track", family_json(&family), result, 0))
        }
        Command::Verify { file, trials, seed, jobs } => {
            let family = load_family(file)?;
            let report = verify_continuation_theorem(&family.spec, *trials, *seed, *jobs)
                .map_err(Failure::from)?;
            let samples_json = |samples: &[parcont::continuation::CountSample]| -> Value {
                Value::Array(
                    samples
                        .iter()
                        .map(|s| json!({ "point": point_json(&s.point), "count": s.count }))
                        .collect(),
                )
            };
            let result = json!({
                "generic_count": report.generic_count,
                "trials": report.trials,
                "off_discriminant": samples_json(&report.off_discriminant),
                "on_discriminant": samples_json(&report.on_discriminant),
                "guard_resamples": report.guard_resamples,
                "violations": report.violations,
                "passed": report.passed(),
            });
            let code = if report.passed() { 0 } else { 1 };
            Ok(("verify", family_json(&family), result, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Ok((name, family, result, code)) => {
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let timings = if cli.timings { json!({ "wall_ms": wall_ms }) } else { json!({}) };
            let doc = json!({
                "command": name,
                "family": family,
                "result": result,
                "timings": timings,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable document"));
            eprintln!("{name}: {wall_ms:.1} ms");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
