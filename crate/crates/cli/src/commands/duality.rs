use std::time::Instant;

use dualkripke_core::duality::{normalize, ValuationClause};
use dualkripke_core::harness::{
    duality_check_with, lemma_suite, DualityReport, DualityStatus, LemmaReport, RandomModelSpec, Verdict,
};
use dualkripke_core::kripke::PointedEpistemicModel;
use serde_json::{json, Value};

use super::point;
use crate::cli::DualityArgs;
use crate::file::load;
use crate::output::{Outcome, Paint};
use crate::{CliError, Context, Exit};

/// Disagreements listed per model in text output; JSON lists them all.
const SHOWN: usize = 10;

fn sources(ctx: &Context, args: &DualityArgs) -> Result<Vec<(String, PointedEpistemicModel)>, CliError> {
    if !args.random {
        let path = args.path.as_ref().expect("clap requires a path without --random");
        let (model, current) = load(path)?.into_epistemic()?;
        let name = point(args.at.as_deref(), current.as_deref())?;
        let label = format!("{}@{name}", path.display());
        return Ok(vec![(label, model.at(&name)?)]);
    }
    for (flag, v) in [
        ("--max-worlds", args.max_worlds),
        ("--max-propositions", args.max_propositions),
        ("--max-agents", args.max_agents),
    ] {
        if v == 0 {
            return Err(CliError::usage(format!("{flag} must be positive")));
        }
    }
    let spec = RandomModelSpec {
        worlds: 1..=args.max_worlds,
        propositions: 1..=args.max_propositions,
        agents: 1..=args.max_agents,
        seed: ctx.config.seed,
        ..Default::default()
    };
    Ok(spec
        .corpus(args.count)
        .enumerate()
        .map(|(k, m)| (format!("random seed={}", spec.seed.wrapping_add(k as u64)), m))
        .collect())
}

fn verdict_json(v: &Verdict) -> Value {
    json!({ "formula": v.formula.to_string(), "source": v.source, "regenerated": v.regenerated })
}

fn status_word(r: &DualityReport, paint: Paint) -> String {
    match &r.status {
        DualityStatus::Skipped(_) => paint.note("skip"),
        _ if r.passed() => paint.good("pass"),
        _ => paint.bad("FAIL"),
    }
}

pub fn duality(ctx: &Context, args: &DualityArgs) -> Result<Outcome, CliError> {
    let caps = ctx.config.caps();
    let clause = if args.mutate {
        ValuationClause::WithoutStrengthGuard
    } else {
        ValuationClause::Standard
    };
    let paint = ctx.paint;
    let mut text = String::new();
    let mut models = Vec::new();
    let (mut passed, mut skipped, mut failed) = (0usize, 0usize, 0usize);

    for (label, source) in sources(ctx, args)? {
        let start = Instant::now();
        let mut report = duality_check_with(&source, args.depth, &caps, clause)?;
        report.elapsed = Some(start.elapsed());
        let lemmas: Option<LemmaReport> = if args.lemmas {
            Some(lemma_suite(&normalize(&source).0, &caps)?)
        } else {
            None
        };
        let ok = report.passed() && lemmas.as_ref().is_none_or(LemmaReport::passed);
        match (&report.status, ok) {
            (_, false) => failed += 1,
            (DualityStatus::Skipped(_), true) => skipped += 1,
            _ => passed += 1,
        }

        let flipped = if report.flipped.is_empty() {
            "-".to_owned()
        } else {
            report.flipped.join(",")
        };
        let ms = report.elapsed.unwrap_or_default().as_millis();
        match &report.status {
            DualityStatus::Checked => text.push_str(&format!(
                "{label}: {}  {} formulas, |S|={} |P|={} |I|={}, flipped {flipped}, {ms} ms\n",
                status_word(&report, paint),
                report.formula_count(),
                report.worlds,
                report.propositions,
                report.agents,
            )),
            DualityStatus::Skipped(why) | DualityStatus::Broken(why) => {
                text.push_str(&format!("{label}: {}  {why}\n", status_word(&report, paint)))
            }
        }
        let bad: Vec<&Verdict> = report.disagreements().collect();
        for v in bad.iter().take(SHOWN) {
            text.push_str(&format!(
                "    disagree: {}  (source {}, regenerated {})\n",
                v.formula, v.source, v.regenerated
            ));
        }
        if bad.len() > SHOWN {
            text.push_str(&format!("    ... and {} more\n", bad.len() - SHOWN));
        }
        if let Some(l) = &lemmas {
            match &l.skipped {
                Some(why) => text.push_str(&format!("    lemmas: skipped ({why})\n")),
                None if l.passed() => text.push_str(&format!("    lemmas: all {} statements hold\n", l.checks.len())),
                None => {
                    for (st, msg) in l.failures() {
                        text.push_str(&format!("    lemma {}: {st}: {msg}\n", paint.bad("failure")));
                    }
                }
            }
        }
        if args.informational && !report.informational.is_empty() {
            text.push_str("    outside the restricted class (not judged):\n");
            for v in &report.informational {
                let word = if v.agrees() { "same  " } else { "differ" };
                text.push_str(&format!("      {word} {}\n", v.formula));
            }
        }

        let status = match &report.status {
            DualityStatus::Checked => json!("checked"),
            DualityStatus::Skipped(why) => json!({ "skipped": why }),
            DualityStatus::Broken(why) => json!({ "broken": why }),
        };
        let mut entry = json!({
            "model": label,
            "worlds": report.worlds,
            "propositions": report.propositions,
            "agents": report.agents,
            "max_connectives": report.max_connectives,
            "formulas": report.formula_count(),
            "flipped": report.flipped,
            "status": status,
            "passed": ok,
            "disagreements": bad.iter().map(|v| verdict_json(v)).collect::<Vec<_>>(),
            "elapsed_ms": report.elapsed.map(|d| d.as_secs_f64() * 1000.0),
        });
        if args.informational {
            entry["informational"] = report.informational.iter().map(verdict_json).collect();
        }
        if let Some(l) = &lemmas {
            entry["lemmas"] = json!({
                "skipped": l.skipped,
                "passed": l.passed(),
                "checks": l.checks.iter().map(|c| json!({
                    "statement": c.statement.name(),
                    "instances": c.instances,
                    "failures": c.failures,
                })).collect::<Vec<_>>(),
            });
        }
        models.push(entry);
    }

    let total = models.len();
    let all = failed == 0;
    text.push_str(&format!(
        "{total} model(s): {passed} passed, {skipped} skipped, {failed} failed{}\n",
        if args.mutate { " (mutated valuation clause)" } else { "" }
    ));
    let json = json!({
        "depth": args.depth,
        "mutated": args.mutate,
        "models": models,
        "passed": passed,
        "skipped": skipped,
        "failed": failed,
        "ok": all,
    });
    Ok(Outcome::new(text, json, if all { Exit::Ok } else { Exit::Failed }))
}
