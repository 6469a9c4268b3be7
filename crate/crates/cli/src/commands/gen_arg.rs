use dualkripke_core::duality::{generate_argument_model, normalize};
use serde_json::{json, Map, Value};

use super::point;
use crate::cli::GenArgArgs;
use crate::file::{load, ModelFile};
use crate::output::Outcome;
use crate::{CliError, Context, Exit};

pub fn gen_arg(ctx: &Context, args: &GenArgArgs) -> Result<Outcome, CliError> {
    let (model, current) = load(&args.path)?.into_epistemic()?;
    let name = point(args.at.as_deref(), current.as_deref())?;
    let mut source = model.at(&name)?;
    let mut flipped = Vec::new();
    if args.normalize {
        let (normalized, renaming) = normalize(&source);
        source = normalized;
        flipped = renaming.flipped_names();
    }
    let generated = generate_argument_model(&source, ctx.config.caps.generation_worlds)?;
    let m = generated.model();
    let sig = m.signature();
    let current_arg = generated.pointed().current_name();

    let worlds = generated.source_worlds();
    let back_map: Map<String, Value> = (0..m.argument_count())
        .map(|u| {
            let members: Vec<&str> = generated.subset(u).iter().map(|w| worlds[w].as_str()).collect();
            (m.argument(u).to_owned(), json!(members))
        })
        .collect();
    let mut provenance = json!({
        "generated_from": "epistemic",
        "source_current": name,
        "arguments": back_map,
    });
    if args.normalize {
        provenance["flipped"] = json!(flipped);
    }
    let file = ModelFile::from_argument(m, Some(current_arg)).with_provenance(provenance);

    let Some(out) = &args.out else {
        return Ok(Outcome::raw(file.to_json()));
    };
    file.write(out)?;

    let attacks: Vec<(&str, usize)> = sig
        .propositions()
        .iter()
        .enumerate()
        .map(|(p, n)| (n.as_str(), m.attacks(p).pair_count()))
        .collect();
    let availability: Vec<(&str, usize)> = sig
        .agents()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), m.availability(i).len()))
        .collect();
    let mut text = format!("arguments: {}\ncurrent: {current_arg}\n", m.argument_count());
    if args.normalize {
        let f = if flipped.is_empty() {
            "none".to_owned()
        } else {
            flipped.join(", ")
        };
        text.push_str(&format!("flipped: {f}\n"));
    }
    let line = |label: &str, xs: &[(&str, usize)]| {
        let parts: Vec<String> = xs.iter().map(|(n, c)| format!("{label}({n})={c}")).collect();
        parts.join(" ")
    };
    text.push_str(&format!("attack edges: {}\n", line("A", &attacks)));
    text.push_str(&format!("availability: {}\n", line("G", &availability)));
    text.push_str(&format!("wrote {}\n", out.display()));
    let json = json!({
        "arguments": m.argument_count(),
        "current": current_arg,
        "flipped": flipped,
        "attack_edges": attacks.iter().map(|(n, c)| (n.to_string(), json!(c))).collect::<Map<_, _>>(),
        "availability": availability.iter().map(|(n, c)| (n.to_string(), json!(c))).collect::<Map<_, _>>(),
        "out": out.display().to_string(),
    });
    Ok(Outcome::new(text, json, Exit::Ok))
}
