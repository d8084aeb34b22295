mod cli;
mod output;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use normbundle::{
    achievable, enumerate_with_jobs, phi_table, phi_values_oracle, splitting_from_phi,
    splitting_type, Achievability, CurveError, EnumerationError, FormulaError, MonomialSpace,
    PhiTable, ValidatedSpace,
};

use crate::cli::{Cli, Command, CurveArgs};
use crate::output::{jsonl, phi_diff, Envelope, PhiReport};

const EXIT_NOT_ACHIEVABLE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        Self {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Self {
            code: EXIT_MISMATCH,
            message: e.to_string(),
        }
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        let code = match e {
            EnumerationError::Formula(_) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(args: &CurveArgs) -> Result<ValidatedSpace, Failure> {
    let space = match (&args.center, &args.curve) {
        (Some(center), None) => MonomialSpace::from_center(args.degree, &center.0)?,
        (None, Some(curve)) => MonomialSpace::from_curve(args.degree, &curve.0)?,
        _ => unreachable!("clap enforces exactly one of --center/--curve"),
    };
    Ok(space.validate()?)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Type { curve, json } => {
            let space = load(curve)?;
            let summary = space.summary();
            let c = splitting_type(&summary)?;
            let envelope = Envelope::new(&space, &summary, &phi_table(&summary), &c);
            print_envelope(&envelope, *json);
            Ok(0)
        }

        Command::Phi { curve, json } => {
            let space = load(curve)?;
            let report = PhiReport::new(space.degree(), &phi_table(&space.summary()));
            if *json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(0)
        }

        Command::Verify { curve, kmax, json } => {
            let space = load(curve)?;
            let summary = space.summary();
            let table = phi_table(&summary);
            let oracle = phi_values_oracle(&space, kmax.unwrap_or(usize::MAX));
            let complete = oracle.len() >= 2 && oracle[oracle.len() - 2..] == [0, 0];

            let prefix_agrees = (0..oracle.len()).all(|k| table.get(k) == oracle[k]);
            let types_agree = !complete || {
                let from_oracle =
                    splitting_from_phi(&PhiTable::from_values(oracle.clone()), space.s());
                let from_formula = splitting_type(&summary);
                matches!((from_oracle, from_formula), (Ok(a), Ok(b)) if a == b)
            };
            if !(prefix_agrees && types_agree) {
                eprint!("{}", phi_diff(table.values(), &oracle));
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!("formula and oracle disagree for {}", space.space()),
                });
            }
            let c = splitting_type(&summary)?;
            let mut envelope = Envelope::new(&space, &summary, &table, &c);
            envelope.verified = Some(true);
            print_envelope(&envelope, *json);
            Ok(0)
        }

        Command::Enumerate {
            degree,
            s,
            jobs,
            out,
        } => {
            let report = enumerate_with_jobs(*degree, *s, *jobs)?;
            let lines = jsonl(&report);
            match out {
                Some(path) => fs::write(path, lines).map_err(|e| Failure {
                    code: EXIT_INVALID,
                    message: format!("cannot write {}: {e}", path.display()),
                })?,
                None => print!("{lines}"),
            }
            eprintln!(
                "degree {} s {}: {} spaces, {} splitting types",
                report.degree,
                report.s,
                report.total_spaces,
                report.histogram.len()
            );
            Ok(0)
        }

        Command::Achievable {
            degree,
            s,
            candidate,
            jobs,
        } => {
            let pool = rayon_pool(*jobs)?;
            let decision = pool.install(|| achievable(*degree, *s, &candidate.0))?;
            match decision {
                Achievability::Achievable { witness } => {
                    println!(
                        "{}",
                        serde_json::json!({ "achievable": true, "witness": witness })
                    );
                    Ok(0)
                }
                Achievability::NotAchievable => {
                    println!("{}", serde_json::json!({ "achievable": false }));
                    Ok(EXIT_NOT_ACHIEVABLE)
                }
            }
        }
    }
}

fn rayon_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure {
            code: EXIT_INVALID,
            message: format!("failed to start worker pool: {e}"),
        })
}

fn print_envelope(envelope: &Envelope, json: bool) {
    if json {
        println!("{}", envelope.to_json());
    } else {
        print!("{}", envelope.to_text());
    }
}
