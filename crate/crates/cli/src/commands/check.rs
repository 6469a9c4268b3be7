use std::fs;
use std::path::Path;

use dualkripke_core::checker::{eval_argument, eval_epistemic};
use dualkripke_core::formula::{parse_formula, Parsed};
use dualkripke_core::kripke::{validate_argument, validate_epistemic};
use dualkripke_core::Error as CoreError;
use serde_json::json;

use super::point;
use crate::cli::CheckArgs;
use crate::file::{load, LoadedModel};
use crate::output::Outcome;
use crate::{CliError, Context, Exit};

/// Formulas of a corpus file: one per line, skipping blank lines and lines
/// starting with `#`.
pub fn read_formula_file(path: &Path) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.into(),
        source,
    })?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_owned)
        .collect())
}

pub fn check(ctx: &Context, args: &CheckArgs) -> Result<Outcome, CliError> {
    let loaded = load(&args.path)?;
    let mut texts = args.formulas.clone();
    if let Some(f) = &args.formula_file {
        texts.extend(read_formula_file(f)?);
    }
    if texts.is_empty() {
        return Err(CliError::usage("nothing to check: pass --formula or --formulas"));
    }
    let kind = loaded.kind();
    let mut parsed = Vec::with_capacity(texts.len());
    for t in &texts {
        let f = parse_formula(t, kind.formula_kind(), loaded.signature()).map_err(|e| {
            let hint = if e.is_kind_mismatch() {
                format!(" (the model is an {} model)", kind.name())
            } else {
                String::new()
            };
            CliError::usage(format!("formula `{t}`: {e}{hint}"))
        })?;
        parsed.push(f);
    }
    let name = point(args.at.as_deref(), loaded.current())?;

    let results: Vec<(String, bool)> = match loaded {
        LoadedModel::Epistemic { model, .. } => {
            let violations = validate_epistemic(&model).violations.len();
            if violations > 0 {
                return Err(CoreError::InvalidModel(violations).into());
            }
            let m = model.at(&name)?;
            parsed
                .iter()
                .map(|f| match f {
                    Parsed::Epistemic(f) => Ok((f.to_string(), eval_epistemic(&m, f).map_err(CoreError::from)?)),
                    Parsed::Argument(_) => unreachable!("parsed against the model kind"),
                })
                .collect::<Result<_, CliError>>()?
        }
        LoadedModel::Argument { model, .. } => {
            let violations = validate_argument(&model).violations.len();
            if violations > 0 {
                return Err(CoreError::InvalidModel(violations).into());
            }
            let m = model.at(&name)?;
            parsed
                .iter()
                .map(|f| match f {
                    Parsed::Argument(f) => Ok((f.to_string(), eval_argument(&m, f).map_err(CoreError::from)?)),
                    Parsed::Epistemic(_) => unreachable!("parsed against the model kind"),
                })
                .collect::<Result<_, CliError>>()?
        }
    };

    let all = results.iter().all(|(_, v)| *v);
    let mut text = String::new();
    for (f, v) in &results {
        text.push_str(&format!("{}  {f}\n", ctx.paint.verdict(*v, "true ", "false")));
    }
    let json = json!({
        "point": name,
        "results": results.iter().map(|(f, v)| json!({"formula": f, "value": v})).collect::<Vec<_>>(),
        "all_true": all,
    });
    Ok(Outcome::new(text, json, if all { Exit::Ok } else { Exit::Failed }))
}
