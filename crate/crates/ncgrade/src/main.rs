//! `ncgrade`: a degree-bounded verification workbench for graded
//! down-up algebras.
//!
//! Exit codes: 0 when every requested verification passes, 1 when at
//! least one fails, 2 when the configuration itself is unusable.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncgrade::algebra::normal_basis;
use ncgrade::checks::{
    default_suite, effective_degree, run_check, run_suite, CheckConfig, CheckReport, SuiteConfig,
    SuiteReport,
};
use ncgrade::config::{
    grading_from_json, group_from_json, order_from_json, poly_from_json, poly_to_json,
    presentation_from_json, word_to_json, TaskConfig,
};
use ncgrade::error::{Error, Result};
use ncgrade::grading::{graded_decompose, is_admissible_grading, Grading};
use ncgrade::hilbert::{down_up_closed_form, expand_series, hilbert_matches_closed_form, IntPoly};
use ncgrade::invariants::minimal_generators;

#[derive(Parser)]
#[command(
    name = "ncgrade",
    version,
    about = "Degree-bounded verification workbench for graded down-up algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check against its frozen expected outcome.
    Check {
        /// Check name (see `ncgrade suite` output for the full list).
        name: String,
        /// JSON config overriding the check's defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Degree bound override.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a list of checks (default: every check at default bounds).
    Suite {
        /// JSON config: a list of check configs, or {"checks": [...]}.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduce a polynomial to its normal form.
    Nf {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the normal-word basis degree by degree.
    Basis {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare graded dimensions against a closed-form series.
    Hilbert {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Complete the rewriting system up to the degree bound.
    Complete {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the fixed-subring basis under a group grading.
    FixedRing {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find minimal generators of the fixed subring.
    MinGens {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check {
            name,
            config,
            max_degree,
            format,
        } => {
            let mut cfg: CheckConfig = match &config {
                Some(path) => serde_json::from_str(&read(path)?)?,
                None => CheckConfig::default(),
            };
            if cfg.check.is_empty() {
                cfg.check = name;
            } else if cfg.check != name {
                return Err(Error::Config(format!(
                    "config file is for check '{}', but '{}' was requested",
                    cfg.check, name
                )));
            }
            if max_degree.is_some() {
                cfg.max_degree = max_degree;
            }
            let report = run_check(&cfg)?;
            print_report(&report, format, true)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Suite { config, format } => {
            let cfgs = match &config {
                Some(path) => serde_json::from_str::<SuiteConfig>(&read(path)?)?.into_checks(),
                None => default_suite(),
            };
            if cfgs.is_empty() {
                return Err(Error::Config("the suite config lists no checks".into()));
            }
            let suite = run_suite(&cfgs)?;
            print_suite(&suite, format)?;
            Ok(if suite.all_pass { 0 } else { 1 })
        }
        Command::Nf { config, format } => task_nf(&load_task(&config)?, format),
        Command::Basis { config, format } => task_basis(&load_task(&config)?, format),
        Command::Hilbert { config, format } => task_hilbert(&load_task(&config)?, format),
        Command::Complete { config, format } => task_complete(&load_task(&config)?, format),
        Command::FixedRing { config, format } => task_fixed_ring(&load_task(&config)?, format),
        Command::MinGens { config, format } => task_min_gens(&load_task(&config)?, format),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn load_task(path: &Path) -> Result<TaskConfig> {
    Ok(serde_json::from_str(&read(path)?)?)
}

// ---------------------------------------------------------------------------
// report rendering
// ---------------------------------------------------------------------------

fn print_report(report: &CheckReport, format: Format, with_details: bool) -> Result<()> {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report)?);
        }
        Format::Text => {
            let status = if report.pass { "PASS" } else { "FAIL" };
            println!("{status} {} ({} ms)", report.name, report.wall_time_ms);
            for a in &report.assumptions {
                println!("  assumption: {a}");
            }
            if with_details || !report.pass {
                println!("  details: {}", indented(&report.details)?);
            }
        }
    }
    Ok(())
}

fn print_suite(suite: &SuiteReport, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(suite)?);
        }
        Format::Text => {
            for report in &suite.reports {
                print_report(report, Format::Text, false)?;
            }
            let failed = suite.reports.iter().filter(|r| !r.pass).count();
            if suite.all_pass {
                println!("suite: all {} checks passed", suite.reports.len());
            } else {
                println!(
                    "suite: {failed} of {} checks FAILED",
                    suite.reports.len()
                );
            }
        }
    }
    Ok(())
}

/// Pretty JSON with continuation lines indented to nest under a
/// two-space bullet.
fn indented(v: &Value) -> Result<String> {
    let s = serde_json::to_string_pretty(v)?;
    Ok(s.replace('\n', "\n  "))
}

fn print_value(v: &Value, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v)?),
        Format::Text => println!("{}", serde_json::to_string_pretty(v)?),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// direct tasks
// ---------------------------------------------------------------------------

struct GradedTask {
    grading: Grading,
}

fn graded_setup(task: &TaskConfig, p: &ncgrade::algebra::Presentation) -> Result<GradedTask> {
    let group_json = task
        .group
        .as_ref()
        .ok_or_else(|| Error::Config("this task needs a 'group'".into()))?;
    let assignment: &BTreeMap<String, String> = task
        .grading
        .as_ref()
        .ok_or_else(|| Error::Config("this task needs a 'grading' assignment".into()))?;
    let group = group_from_json(group_json)?;
    let grading = grading_from_json(group, p.alphabet(), assignment)?;
    if !is_admissible_grading(p, &grading) {
        return Err(Error::Config(
            "the grading is not admissible: a defining relation is not group-homogeneous".into(),
        ));
    }
    Ok(GradedTask { grading })
}

fn task_degree(task: &TaskConfig, default: usize, min_needed: usize) -> Result<(usize, Vec<String>)> {
    let mut assumptions = Vec::new();
    let n = effective_degree(task.max_degree.unwrap_or(default), min_needed, &mut assumptions)?;
    Ok((n, assumptions))
}

fn task_nf(task: &TaskConfig, format: Format) -> Result<u8> {
    let p = presentation_from_json(&task.presentation)?;
    let order = order_from_json(p.alphabet(), task.order.as_deref())?;
    let poly_json = task
        .poly
        .as_ref()
        .ok_or_else(|| Error::Config("'nf' needs a 'poly' to reduce".into()))?;
    let input = poly_from_json(p.alphabet(), poly_json)?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let (n, assumptions) = task_degree(task, 8, min_needed)?;
    let sys = p.complete(&order, n)?;
    let nf = sys.reduce(&input);
    let out = json!({
        "presentation": p.label(),
        "max_degree": n,
        "input": poly_to_json(&order, &input),
        "normal_form": poly_to_json(&order, &nf),
        "normal_form_display": nf.display(&order),
        "assumptions": assumptions,
    });
    print_value(&out, format)?;
    Ok(0)
}

fn task_basis(task: &TaskConfig, format: Format) -> Result<u8> {
    let p = presentation_from_json(&task.presentation)?;
    let order = order_from_json(p.alphabet(), task.order.as_deref())?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let (n, assumptions) = task_degree(task, 10, min_needed)?;
    let (_sys, table) = normal_basis(&p, &order, n)?;
    let rows: Vec<Value> = table
        .rows()
        .iter()
        .enumerate()
        .map(|(t, ws)| {
            json!({
                "degree": t,
                "dimension": ws.len(),
                "words": ws.iter().map(|w| p.alphabet().display_word(w)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let out = json!({
        "presentation": p.label(),
        "max_degree": n,
        "dims": table.dims(),
        "degrees": rows,
        "assumptions": assumptions,
    });
    print_value(&out, format)?;
    Ok(0)
}

fn task_hilbert(task: &TaskConfig, format: Format) -> Result<u8> {
    let p = presentation_from_json(&task.presentation)?;
    let order = order_from_json(p.alphabet(), task.order.as_deref())?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let (n, assumptions) = task_degree(task, 10, min_needed)?;
    let (num, den) = match (&task.numerator, &task.denominator) {
        (None, None) => down_up_closed_form(),
        (Some(nc), Some(dc)) => (IntPoly::new(nc.clone()), IntPoly::new(dc.clone())),
        _ => {
            return Err(Error::Config(
                "closed form needs both 'numerator' and 'denominator'".into(),
            ))
        }
    };
    let (_sys, table) = normal_basis(&p, &order, n)?;
    let dims = table.dims();
    let matches = hilbert_matches_closed_form(&dims, &num, &den)?;
    let expected = expand_series(&num, &den, n)?;
    let out = json!({
        "presentation": p.label(),
        "max_degree": n,
        "dims": dims,
        "expected": expected.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "match": matches,
        "assumptions": assumptions,
    });
    print_value(&out, format)?;
    Ok(if matches { 0 } else { 1 })
}

fn task_complete(task: &TaskConfig, format: Format) -> Result<u8> {
    let p = presentation_from_json(&task.presentation)?;
    let order = order_from_json(p.alphabet(), task.order.as_deref())?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let (n, assumptions) = task_degree(task, 8, min_needed)?;
    let sys = p.complete(&order, n)?;
    let rules: Vec<Value> = sys
        .rules()
        .iter()
        .map(|r| {
            json!({
                "lhs": word_to_json(p.alphabet(), &r.lhs),
                "rhs": poly_to_json(&order, &r.rhs),
            })
        })
        .collect();
    let out = json!({
        "presentation": p.label(),
        "max_degree": n,
        "rule_count": sys.rules().len(),
        "rules": rules,
        "confluent": sys.is_confluent_up_to(n),
        "assumptions": assumptions,
    });
    print_value(&out, format)?;
    Ok(0)
}

fn task_fixed_ring(task: &TaskConfig, format: Format) -> Result<u8> {
    let p = presentation_from_json(&task.presentation)?;
    let order = order_from_json(p.alphabet(), task.order.as_deref())?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let (n, assumptions) = task_degree(task, 8, min_needed)?;
    let graded = graded_setup(task, &p)?;
    let (_sys, table) = normal_basis(&p, &order, n)?;
    let gb = graded_decompose(&table, &graded.grading)?;
    let fixed = gb.fixed_table(n);
    let rows: Vec<Value> = fixed
        .rows()
        .iter()
        .enumerate()
        .map(|(t, ws)| {
            json!({
                "degree": t,
                "dimension": ws.len(),
                "words": ws.iter().map(|w| p.alphabet().display_word(w)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let out = json!({
        "presentation": p.label(),
        "group": graded.grading.group().label(),
        "max_degree": n,
        "admissible": true,
        "dims": fixed.dims(),
        "degrees": rows,
        "assumptions": assumptions,
    });
    print_value(&out, format)?;
    Ok(0)
}

fn task_min_gens(task: &TaskConfig, format: Format) -> Result<u8> {
    let p = presentation_from_json(&task.presentation)?;
    let order = order_from_json(p.alphabet(), task.order.as_deref())?;
    let min_needed = p.relation_degrees().into_iter().max().unwrap_or(0);
    let (n, assumptions) = task_degree(task, 8, min_needed)?;
    let graded = graded_setup(task, &p)?;
    let (sys, table) = normal_basis(&p, &order, n)?;
    let gb = graded_decompose(&table, &graded.grading)?;
    let fixed = gb.fixed_table(n);
    let report = minimal_generators(&fixed, &sys, n)?;
    let out = json!({
        "presentation": p.label(),
        "group": graded.grading.group().label(),
        "max_degree": n,
        "generators": report.generators.iter()
            .map(|(d, q)| json!({"degree": d, "generator": q.display(&order)}))
            .collect::<Vec<_>>(),
        "generator_degrees": report.degrees(),
        "complete_to": report.complete_to,
        "obstruction_flag": report.obstruction_flag,
        "assumptions": assumptions,
    });
    print_value(&out, format)?;
    Ok(0)
}
