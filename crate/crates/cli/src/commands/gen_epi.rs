use dualkripke_core::duality::{generate_epistemic_model, CurrentWorld};
use serde_json::{json, Map, Value};

use super::point;
use crate::cli::GenEpiArgs;
use crate::file::{load, ModelFile};
use crate::output::Outcome;
use crate::{CliError, Context, Exit};

pub fn gen_epi(ctx: &Context, args: &GenEpiArgs) -> Result<Outcome, CliError> {
    let (model, current) = load(&args.path)?.into_argument()?;
    let name = point(args.at.as_deref(), current.as_deref())?;
    let source = model.at(&name)?;
    let generated = generate_epistemic_model(&source, ctx.config.caps.ultrafilter_arguments)?;
    let m = generated.model();
    let arguments = source.model();

    let world_names = |ws: &[usize]| ws.iter().map(|&w| m.world(w).to_owned()).collect::<Vec<_>>();
    let (status, candidates, designated) = match generated.current() {
        CurrentWorld::Unique(w) => ("unique", world_names(&[*w]), Some(m.world(*w))),
        CurrentWorld::Ambiguous(ws) => ("ambiguous", world_names(ws), None),
        CurrentWorld::Missing => ("missing", Vec::new(), None),
    };
    let back_map: Map<String, Value> = (0..m.world_count())
        .map(|w| {
            let members: Vec<&str> = generated.ultrafilter(w).iter().map(|u| arguments.argument(u)).collect();
            (m.world(w).to_owned(), json!(members))
        })
        .collect();
    let provenance = json!({
        "generated_from": "argument",
        "source_current": name,
        "worlds": back_map,
        "current": { "status": status, "candidates": candidates },
    });
    let file = ModelFile::from_epistemic(m, designated).with_provenance(provenance);

    let Some(out) = &args.out else {
        return Ok(Outcome::raw(file.to_json()));
    };
    file.write(out)?;

    let mut text = format!("ultrafilters: {}\n", m.world_count());
    match designated {
        Some(w) => text.push_str(&format!("current world: {w}\n")),
        None if candidates.is_empty() => text.push_str(&format!(
            "current world: {} ({name} lies in no ultrafilter)\n",
            ctx.paint.note("unresolved")
        )),
        None => text.push_str(&format!(
            "current world: {} ({name} lies in {} ultrafilters: {})\n",
            ctx.paint.note("unresolved"),
            candidates.len(),
            candidates.join(", ")
        )),
    }
    text.push_str(&format!("wrote {}\n", out.display()));
    let json = json!({
        "ultrafilters": m.world_count(),
        "current": { "status": status, "world": designated, "candidates": candidates },
        "out": out.display().to_string(),
    });
    Ok(Outcome::new(text, json, Exit::Ok))
}
