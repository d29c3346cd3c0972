use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diagram_core::{parse_combo, BlanchfieldSpec, Conventions, EssentialSet, Mode};
use exact_algebra::{chi_points, constraint_points, int, parse_rational, ParamPoly, Rational};
use reduction_engine::{Ctx, Reducer};
use relation_generators::{
    apply_aut, automorphism_relations, chi_relations, cyclic_ctx, lambda_ctx, noncyclic_auts, relations_on, AutSpec,
    Relation,
};
use serde::Serialize;
use verifier_cli::{named, run_suite, Env, Mutation, VerifyError};

#[derive(Parser)]
#[command(name = "jdr", version, about = "Exact reduction and relation checks for colored degree-two diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    Cyclic2,
    Cyclic3,
    Noncyclic3,
}

#[derive(Clone, Copy, ValueEnum)]
enum AutKind {
    T,
    Holbar,
    Lambda,
    Chi,
    Mu,
    Nu,
    Rho,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Quotient,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenario suite.
    Verify {
        /// Only run scenarios whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Seed for sampled parameter values.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run under altered conventions to check that the suite notices.
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
    /// Reduce a combination of diagrams to essential generators.
    Reduce {
        expr: String,
        #[arg(long, value_enum, default_value = "quotient")]
        mode: ModeArg,
        /// `sym` for a symbolic alpha, or a rational value.
        #[arg(long, default_value = "sym")]
        alpha: String,
        /// Number of module copies; inferred from the input when omitted.
        #[arg(long)]
        copies: Option<u8>,
        /// Use the non-cyclic module.
        #[arg(long)]
        noncyclic: bool,
    },
    /// List relations coming from automorphisms.
    Relations {
        #[arg(long, value_enum)]
        case: Case,
        #[arg(long, default_value = "sym")]
        alpha: String,
        #[arg(long, value_enum)]
        aut: Option<AutKind>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Writes to standard output, treating a closed pipe as success.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn parse_alpha(s: &str) -> Result<Option<Rational>, VerifyError> {
    if s == "sym" {
        Ok(None)
    } else {
        Ok(Some(parse_rational(s)?))
    }
}

fn verify(filter: Option<String>, format: Format, seed: u64, mutate: Option<String>) -> Result<i32, VerifyError> {
    let mutation = mutate.as_deref().map(str::parse::<Mutation>).transpose()?;
    let env = Env::new(seed).with_mutation(mutation);
    let report = run_suite(filter.as_deref(), &env);
    if report.scenarios.is_empty() {
        return Err(VerifyError::UnknownScenario(filter.unwrap_or_default()));
    }
    match format {
        Format::Text => emit(&report.to_text()),
        Format::Json => emit(&format!("{}\n", report.to_json())),
    }
    Ok(report.exit_code())
}

fn reduce(expr: &str, mode: ModeArg, alpha: &str, copies: Option<u8>, noncyclic: bool) -> Result<i32, VerifyError> {
    let combo = parse_combo(expr, &Conventions::default())?;
    let inferred = combo.terms().flat_map(|(d, _)| d.copies()).max().unwrap_or(1).max(2);
    let copies = copies.unwrap_or(inferred);
    let ctx = if noncyclic {
        Ctx::new(BlanchfieldSpec::non_cyclic(copies))
    } else {
        cyclic_ctx(parse_alpha(alpha)?, copies)?
    };
    let mode = match mode {
        ModeArg::Quotient => Mode::Quotient,
        ModeArg::Full => Mode::Full,
    };
    let red = Reducer::new(ctx.with_mode(mode));
    emit(&format!("{}\n", named(&red.reduce_combo(&combo)?)));
    Ok(0)
}

#[derive(Serialize)]
struct RelationRow {
    lhs: String,
    aut: String,
    relation: String,
}

fn relations(case: Case, alpha: &str, aut: Option<AutKind>, format: Format, seed: u64) -> Result<i32, VerifyError> {
    let alpha = parse_alpha(alpha)?;
    let rels: Vec<Relation> = match case {
        Case::Cyclic2 | Case::Cyclic3 => {
            let (copies, set) = match case {
                Case::Cyclic2 => (2, EssentialSet::cyclic2()),
                _ => (3, EssentialSet::cyclic3()),
            };
            let red = Reducer::new(cyclic_ctx(alpha.clone(), copies)?);
            match aut {
                None => automorphism_relations(&set, &red)?,
                Some(AutKind::T) => relations_on(&set, &red, |d| {
                    relation_generators::standard_auts(d)
                        .into_iter()
                        .filter(|a| matches!(a, AutSpec::AutT { .. }))
                        .collect()
                })?,
                Some(AutKind::Holbar) => relations_on(&set, &red, |d| {
                    relation_generators::standard_auts(d)
                        .into_iter()
                        .filter(|a| matches!(a, AutSpec::HolBar { .. }))
                        .collect()
                })?,
                Some(AutKind::Lambda) => {
                    if copies != 2 || alpha != Some(int(1)) {
                        return Err(VerifyError::Usage(
                            "the two-parameter family needs --case cyclic2 --alpha 1".into(),
                        ));
                    }
                    let red = Reducer::new(lambda_ctx());
                    let c = |x: &Rational| ParamPoly::constant(x.clone());
                    let mut out = Vec::new();
                    for p in constraint_points(3, seed) {
                        let aut = AutSpec::AutLambda { a: c(&p.a), b: c(&p.b), c: c(&p.c), d: c(&p.d) };
                        for g in set.diagrams().into_iter().take(2) {
                            out.push(apply_aut(&g, &aut, &red)?);
                        }
                    }
                    out
                }
                Some(AutKind::Chi) => {
                    if copies != 2 || alpha != Some(int(1)) {
                        return Err(VerifyError::Usage("the rescaling family needs --case cyclic2 --alpha 1".into()));
                    }
                    chi_relations(&chi_points(3, seed), &red)?
                }
                Some(_) => return Err(VerifyError::Usage("this automorphism acts on the non-cyclic module".into())),
            }
        }
        Case::Noncyclic3 => {
            let red = Reducer::new(Ctx::new(BlanchfieldSpec::non_cyclic(3)));
            let set = EssentialSet::noncyclic3();
            let keep = |a: &AutSpec| match aut {
                None => true,
                Some(AutKind::Mu) => matches!(a, AutSpec::Mu { .. }),
                Some(AutKind::Nu) => matches!(a, AutSpec::Nu { .. }),
                Some(AutKind::Rho) => matches!(a, AutSpec::Rho { .. }),
                Some(AutKind::Holbar) => matches!(a, AutSpec::HolBar { .. }),
                Some(_) => false,
            };
            if matches!(aut, Some(AutKind::T | AutKind::Lambda | AutKind::Chi)) {
                return Err(VerifyError::Usage("this automorphism acts on the cyclic module".into()));
            }
            relations_on(&set, &red, |d| noncyclic_auts(d).into_iter().filter(keep).collect())?
        }
    };
    let rows: Vec<RelationRow> = rels
        .iter()
        .map(|r| RelationRow {
            lhs: r.lhs.to_string(),
            aut: r.aut.to_string(),
            relation: format!("{} = 0", named(&r.combo)),
        })
        .collect();
    match format {
        Format::Text => {
            emit(&rows.iter().map(|r| format!("{}   [{} on {}]\n", r.relation, r.aut, r.lhs)).collect::<String>())
        }
        Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&rows).expect("rows serialize"))),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { filter, format, seed, mutate } => verify(filter, format, seed, mutate),
        Command::Reduce { expr, mode, alpha, copies, noncyclic } => reduce(&expr, mode, &alpha, copies, noncyclic),
        Command::Relations { case, alpha, aut, format, seed } => relations(case, &alpha, aut, format, seed),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
