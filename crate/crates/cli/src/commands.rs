use std::io::Write;
use std::path::Path;

use serde_json::json;
use squarint::expr::literal::{parse_cube, parse_halfline};
use squarint::expr::sexpr::{format_registry, parse_registry};
use squarint::expr::{CubeRoute, Plan};
use squarint::registry::{builtin_registry, evaluate, Profile, Registry, Status, REGISTRY_VERSION};
use squarint::{Error, C64};

use crate::args::{Cli, Command, EvalArgs, EvalKind, Format, ListArgs, RegistryAction, Selection, VerifyArgs};
use crate::format;
use crate::CliError;

type Outcome = Result<u8, CliError>;

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::List(a) => list(a),
        Command::Verify(a) => verify(a),
        Command::Eval(a) => eval(a),
        Command::Registry { action } => registry(action),
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

/// Writes to `out`, or standard output when absent.
fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Records named by `--id` or matching `--filter`; everything when both are
/// absent. Unknown ids are usage errors.
fn select(reg: &Registry, sel: &Selection) -> Result<Registry, CliError> {
    for id in &sel.ids {
        if reg.lookup(id).is_none() {
            return Err(usage(Error::UnknownIdentity(id.clone())));
        }
    }
    let pattern = match &sel.filter {
        Some(f) => Some(glob::Pattern::new(f).map_err(|e| usage(format!("bad filter `{f}`: {e}")))?),
        None => None,
    };
    if sel.ids.is_empty() && pattern.is_none() {
        return Ok(reg.clone());
    }
    Ok(reg.select(|id| sel.ids.iter().any(|x| x == id) || pattern.as_ref().is_some_and(|p| p.matches(id))))
}

fn list(a: ListArgs) -> Outcome {
    let reg = select(&builtin_registry(), &a.selection)?;
    let text = match a.format {
        Format::Human => {
            let w = reg.records.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
            let lw = reg.records.iter().map(|r| r.location.len()).max().unwrap_or(8).max(8);
            let mut s = format!("{:<w$}  {:<lw$}  {:<14}  tolerance\n", "id", "location", "trust");
            for r in &reg.records {
                s.push_str(&format!("{:<w$}  {:<lw$}  {:<14}  {:e}\n", r.id, r.location, r.trust.name(), r.tolerance));
            }
            s
        }
        Format::Json => json_text(&json!(reg
            .records
            .iter()
            .map(|r| json!({
                "id": r.id,
                "location": r.location,
                "trust": r.trust.name(),
                "tolerance": r.tolerance,
                "description": r.description,
            }))
            .collect::<Vec<_>>())),
    };
    emit(a.out.as_deref(), &text)?;
    Ok(0)
}

fn verify(a: VerifyArgs) -> Outcome {
    let reg = select(&builtin_registry(), &a.selection)?;
    let settings = a.config.settings();
    let reports = reg.verify_all(&settings);
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let text = match a.config.format {
        Format::Human => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format::report_line(r));
                s.push('\n');
            }
            s.push_str(&format::summary(&reports));
            s.push('\n');
            s
        }
        Format::Json => json_text(&json!({
            "registryVersion": reg.version,
            "profile": settings.profile,
            "seed": settings.budget.seed,
            "summary": { "pass": count(Status::Pass), "flagged": count(Status::Flagged), "fail": count(Status::Fail) },
            "reports": reports,
        })),
    };
    emit(a.config.out.as_deref(), &text)?;
    if a.config.out.is_some() {
        println!("{}", format::summary(&reports));
    }
    Ok(if count(Status::Fail) > 0 { 1 } else { 0 })
}

/// Engine tolerance for ad-hoc evaluation.
fn eval_tolerance(p: Profile) -> f64 {
    match p {
        Profile::Quick => 1e-9,
        Profile::Thorough => 1e-10,
    }
}

fn eval(a: EvalArgs) -> Outcome {
    let plan = match a.kind {
        EvalKind::Halfline => {
            let (product, weight) = parse_halfline(&a.literal).map_err(usage)?;
            Plan::Halfline { product, weight }
        }
        EvalKind::Cube => {
            let (spec, part) = parse_cube(&a.literal).map_err(usage)?;
            Plan::Cube { terms: vec![(C64::new(1.0, 0.0), spec)], part, route: CubeRoute::Auto }
        }
    };
    let settings = a.config.settings();
    let (v, d) = evaluate(&plan, eval_tolerance(settings.profile), &settings.budget)
        .map_err(|e| CliError::Engine(e.to_string()))?;
    let text = match a.config.format {
        Format::Human => format!(
            "value           {}\nreal part       {}\nimaginary part  {}\nerror estimate  {}\nevaluations     {}\nmethod          {}\n",
            format::complex(v),
            format::sig9(v.re),
            format::sig9(v.im),
            format::err(d.estimate),
            d.evals,
            d.method
        ),
        Format::Json => json_text(&json!({
            "kind": match a.kind { EvalKind::Halfline => "halfline", EvalKind::Cube => "cube" },
            "literal": a.literal,
            "value": { "re": v.re, "im": v.im },
            "engine": { "method": d.method, "evals": d.evals, "estimate": d.estimate },
            "seed": settings.budget.seed,
            "profile": settings.profile,
        })),
    };
    emit(a.config.out.as_deref(), &text)?;
    Ok(0)
}

fn registry(action: RegistryAction) -> Outcome {
    match action {
        RegistryAction::Export { out } => {
            let reg = builtin_registry();
            let text = format!("; squarint registry {REGISTRY_VERSION}\n{}", format_registry(&reg.records));
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        RegistryAction::Check { path } => {
            let src = std::fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let records = parse_registry(&src).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let reg = Registry::new(records, "file").map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let builtin = builtin_registry();
            let same = reg.records.iter().filter(|r| builtin.lookup(&r.id) == Some(*r)).count();
            println!("{}: {} records valid, {} identical to the built-in registry", path.display(), reg.len(), same);
            Ok(0)
        }
    }
}
