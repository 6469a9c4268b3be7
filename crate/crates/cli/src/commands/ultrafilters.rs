use dualkripke_core::duality::{compute_preorder, enumerate_ultrafilters, set_id};
use dualkripke_core::harness::oracle_ultrafilters;
use dualkripke_core::kripke::{validate_argument, ArgumentModel};
use dualkripke_core::{Error as CoreError, IdSet};
use serde_json::json;

use crate::cli::UltrafiltersArgs;
use crate::file::load;
use crate::output::Outcome;
use crate::{CliError, Context, Exit};

fn names<'m>(model: &'m ArgumentModel, set: &IdSet) -> Vec<&'m str> {
    set.iter().map(|u| model.argument(u)).collect()
}

/// A single argument stands for itself; larger classes print as a set.
fn class_label(model: &ArgumentModel, class: &IdSet) -> String {
    let members = names(model, class);
    match members.as_slice() {
        [one] => (*one).to_owned(),
        _ => set_id(members),
    }
}

pub fn ultrafilters(ctx: &Context, args: &UltrafiltersArgs) -> Result<Outcome, CliError> {
    let (model, _) = load(&args.path)?.into_argument()?;
    let violations = validate_argument(&model).violations.len();
    if violations > 0 {
        return Err(CoreError::InvalidModel(violations).into());
    }
    let found = enumerate_ultrafilters(&model, ctx.config.caps.ultrafilter_arguments)?;
    let order = compute_preorder(&model);
    let classes = order.classes();
    let edges: Vec<(String, String)> = order
        .hasse_edges()
        .into_iter()
        .map(|(lo, hi)| (class_label(&model, &classes[lo]), class_label(&model, &classes[hi])))
        .collect();
    let listed: Vec<Vec<&str>> = found.iter().map(|u| names(&model, &u.members)).collect();

    let mut text = format!("arguments: {}, classes: {}\n", model.argument_count(), classes.len());
    text.push_str("order (covering pairs, stronger first):\n");
    if edges.is_empty() {
        text.push_str("  (none)\n");
    }
    for (lo, hi) in &edges {
        text.push_str(&format!("  {lo} ≤ {hi}\n"));
    }
    if found.is_empty() {
        text.push_str("trivial (no ultrafilters)\n");
    } else {
        text.push_str(&format!("ultrafilters: {}\n", found.len()));
        for u in &listed {
            text.push_str(&format!("  {}\n", set_id(u.iter().copied())));
        }
    }
    let mut json = json!({
        "arguments": model.argument_count(),
        "classes": classes.iter().map(|c| names(&model, c)).collect::<Vec<_>>(),
        "hasse": edges.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        "trivial": found.is_empty(),
        "ultrafilters": listed,
    });

    let mut exit = Exit::Ok;
    if args.oracle {
        let oracle = oracle_ultrafilters(&model, ctx.config.caps.oracle_arguments)?;
        let agrees = oracle.len() == found.len() && oracle.iter().zip(&found).all(|(a, b)| a.members == b.members);
        text.push_str(&format!(
            "oracle: {}\n",
            ctx.paint.verdict(agrees, "agrees", "DISAGREES")
        ));
        json["oracle"] = json!({
            "agrees": agrees,
            "ultrafilters": oracle.iter().map(|u| names(&model, &u.members)).collect::<Vec<_>>(),
        });
        if !agrees {
            exit = Exit::Failed;
        }
    }
    Ok(Outcome::new(text, json, exit))
}
