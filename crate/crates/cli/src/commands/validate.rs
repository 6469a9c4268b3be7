use std::path::Path;

use dualkripke_core::kripke::{validate_argument, validate_epistemic};
use serde_json::json;

use crate::file::{load, LoadedModel};
use crate::output::Outcome;
use crate::{CliError, Context, Exit};

pub fn validate(ctx: &Context, path: &Path) -> Result<Outcome, CliError> {
    let loaded = load(path)?;
    let (report, points, current_ok) = match &loaded {
        LoadedModel::Epistemic { model, current } => (
            validate_epistemic(model),
            model.world_count(),
            current.as_deref().is_none_or(|c| model.world_index(c).is_some()),
        ),
        LoadedModel::Argument { model, current } => (
            validate_argument(model),
            model.argument_count(),
            current.as_deref().is_none_or(|c| model.argument_index(c).is_some()),
        ),
    };
    let mut findings: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    if !current_ok {
        findings.push(format!(
            "membership: current `{}` is not a declared point",
            loaded.current().unwrap_or_default()
        ));
    }
    let ok = findings.is_empty();
    let sig = loaded.signature();
    let kind = loaded.kind().name();
    let mut text = if ok {
        format!(
            "{}: {kind} model, {points} points, {} propositions, {} agents\n",
            ctx.paint.good("ok"),
            sig.propositions().len(),
            sig.agents().len()
        )
    } else {
        format!("{}: {} violation(s)\n", ctx.paint.bad("invalid"), findings.len())
    };
    for f in &findings {
        text.push_str(&format!("  - {f}\n"));
    }
    let json = json!({
        "path": path.display().to_string(),
        "kind": kind,
        "points": points,
        "ok": ok,
        "violations": findings,
    });
    Ok(Outcome::new(text, json, if ok { Exit::Ok } else { Exit::Failed }))
}
