use std::fs;

use crate::cli::ExportDotArgs;
use crate::dot::{argument_dot, epistemic_dot, DotOptions};
use crate::file::{load, LoadedModel};
use crate::output::Outcome;
use crate::{CliError, Context, Exit};

pub fn export_dot(_ctx: &Context, args: &ExportDotArgs) -> Result<Outcome, CliError> {
    let opts = DotOptions {
        loops: !args.no_loops,
        reverse_arrows: args.reverse_arrows,
    };
    let dot = match load(&args.path)? {
        LoadedModel::Epistemic { model, current } => {
            let at = current.as_deref().and_then(|c| model.world_index(c));
            epistemic_dot(&model, at, opts)
        }
        LoadedModel::Argument { model, current } => {
            let at = current.as_deref().and_then(|c| model.argument_index(c));
            argument_dot(&model, at, opts)
        }
    };
    match &args.out {
        None => Ok(Outcome::raw(dot)),
        Some(out) => {
            fs::write(out, &dot).map_err(|source| CliError::Write {
                path: out.clone(),
                source,
            })?;
            let text = format!("wrote {}\n", out.display());
            Ok(Outcome::new(
                text,
                serde_json::json!({ "out": out.display().to_string() }),
                Exit::Ok,
            ))
        }
    }
}
