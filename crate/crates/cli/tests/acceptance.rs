//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dualkripke::commands::read_formula_file;
use dualkripke::file::{load, LoadedModel};
use dualkripke_core::checker::eval_epistemic;
use dualkripke_core::duality::{
    compute_preorder, enumerate_ultrafilters, generate_argument_model, generate_epistemic_model, normalize, set_id,
    Caps, CurrentWorld, ValuationClause,
};
use dualkripke_core::formula::{parse_argument, parse_epistemic, ArgumentFormula, EpistemicFormula};
use dualkripke_core::harness::{
    duality_check, duality_check_with, lemma_suite, oracle_ultrafilters, random_argument_model, DualityStatus,
    RandomArgumentSpec, RandomModelSpec,
};
use dualkripke_core::kripke::{ArgumentModel, PointedArgumentModel, PointedEpistemicModel};
use dualkripke_core::Signature;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FAST: Duration = Duration::from_secs(1);
const SUITE: Duration = Duration::from_secs(300);
const RANDOM_EPISTEMIC: usize = 200;
const RANDOM_ARGUMENT: usize = 100;
const ROUND_TRIPS: usize = 1000;
const SEED: u64 = 0;
const DEPTH: usize = 2;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn epistemic_fixture(name: &str) -> PointedEpistemicModel {
    let (m, current) = load(&fixture(name)).unwrap().into_epistemic().unwrap();
    m.at(&current.unwrap()).unwrap()
}

fn argument_fixture(name: &str) -> PointedArgumentModel {
    let (m, current) = load(&fixture(name)).unwrap().into_argument().unwrap();
    m.at(&current.unwrap()).unwrap()
}

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn edges(m: &ArgumentModel, prop: &str) -> BTreeSet<(String, String)> {
    let p = m.signature().proposition_index(prop).unwrap();
    m.attacks(p)
        .pairs()
        .map(|(u, v)| (m.argument(u).to_owned(), m.argument(v).to_owned()))
        .collect()
}

fn pairs(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn example1_reproduction() -> Check {
    let start = Instant::now();
    let source = epistemic_fixture("example1-epistemic.json");
    ensure(source.current_name() == "s2", || "fixture is not pointed at s2".into())?;
    let g = generate_argument_model(&source, Caps::default().generation_worlds).map_err(|e| e.to_string())?;
    let m = g.model();
    ensure(m.argument_count() == 7, || {
        format!("{} arguments, expected 7", m.argument_count())
    })?;

    let avail = |agent: &str| -> BTreeSet<String> {
        let i = m.signature().agent_index(agent).unwrap();
        m.availability(i).iter().map(|u| m.argument(u).to_owned()).collect()
    };
    let expect = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    ensure(avail("a") == expect(&["{s1,s2}", "{s1,s2,s3}"]), || {
        format!("G(a) = {:?}", avail("a"))
    })?;
    ensure(avail("b") == expect(&["{s2,s3}", "{s1,s2,s3}"]), || {
        format!("G(b) = {:?}", avail("b"))
    })?;

    // The diagram draws every edge inside the upper block (sets of size at
    // least 2) and inside the lower block (singletons); edges between the
    // blocks are left out of the drawing.
    let drawn_p = pairs(&[
        ("{s1,s2,s3}", "{s1,s2}"),
        ("{s1,s3}", "{s1,s2}"),
        ("{s2,s3}", "{s1,s2}"),
        ("{s1}", "{s3}"),
        ("{s3}", "{s1}"),
        ("{s2}", "{s3}"),
        ("{s3}", "{s2}"),
    ]);
    let drawn_q = pairs(&[
        ("{s1,s2,s3}", "{s2,s3}"),
        ("{s1,s2}", "{s2,s3}"),
        ("{s1,s3}", "{s2,s3}"),
        ("{s1}", "{s2}"),
        ("{s2}", "{s1}"),
        ("{s1}", "{s3}"),
        ("{s3}", "{s1}"),
    ]);
    let singleton = |id: &str| !id.contains(',');
    for (prop, drawn) in [("p", &drawn_p), ("q", &drawn_q)] {
        let within: BTreeSet<_> = edges(m, prop)
            .into_iter()
            .filter(|(u, v)| singleton(u) == singleton(v))
            .collect();
        ensure(&within == drawn, || format!("A({prop}) within blocks is {within:?}"))?;
    }
    let t = start.elapsed();
    ensure(t < FAST, || format!("took {t:?}"))?;
    Ok(format!("7 arguments, G(a), G(b) and all 14 drawn edges exact, {t:?}"))
}

fn example2_reproduction() -> Check {
    let start = Instant::now();
    let source = argument_fixture("example2-argument.json");
    let m = source.model();
    let order = compute_preorder(m);
    let strict: BTreeSet<(String, String)> = order
        .pairs()
        .filter(|(u, v)| u != v)
        .map(|(u, v)| (m.argument(u).to_owned(), m.argument(v).to_owned()))
        .collect();
    ensure(strict == pairs(&[("A2", "A1"), ("B", "A1")]), || {
        format!("preorder {strict:?}")
    })?;
    ensure((0..3).all(|u| order.leq(u, u)), || "preorder not reflexive".into())?;

    let ufs: Vec<String> = enumerate_ultrafilters(m, Caps::default().ultrafilter_arguments)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|u| set_id(u.members.iter().map(|i| m.argument(i))))
        .collect();
    ensure(ufs == ["{A1,A2}", "{A1,B}"], || format!("ultrafilters {ufs:?}"))?;

    let g = generate_epistemic_model(&source, Caps::default().ultrafilter_arguments).map_err(|e| e.to_string())?;
    let e = g.model();
    ensure(e.worlds() == ["{A1,A2}", "{A1,B}"], || {
        format!("worlds {:?}", e.worlds())
    })?;
    let (p, q) = (0, 1);
    ensure(e.holds(p, 0) && e.holds(q, 0), || {
        "{A1,A2} should satisfy p and q".into()
    })?;
    ensure(e.holds(p, 1) && !e.holds(q, 1), || {
        "{A1,B} should satisfy p and not q".into()
    })?;
    let (a, b) = (0, 1);
    ensure(e.relation(a).pair_count() == 2 && !e.relation(a).contains(0, 1), || {
        "E(a) is not discrete".into()
    })?;
    ensure(e.relation(b).pair_count() == 4, || {
        "E(b) does not relate both worlds".into()
    })?;
    ensure(g.current() == &CurrentWorld::Unique(0), || {
        format!("designated {:?}", g.current())
    })?;
    let at = g.pointed().unwrap();
    let sig = at.signature().clone();
    let ka_q = eval_epistemic(&at, &parse_epistemic("K[a] q", &sig).unwrap()).unwrap();
    let kb_q = eval_epistemic(&at, &parse_epistemic("K[b] q", &sig).unwrap()).unwrap();
    ensure(ka_q && !kb_q, || format!("K[a] q = {ka_q}, K[b] q = {kb_q}"))?;
    let t = start.elapsed();
    ensure(t < FAST, || format!("took {t:?}"))?;
    Ok(format!(
        "preorder, 2 ultrafilters, generated model and K[a] q / K[b] q exact, {t:?}"
    ))
}

/// The epistemic side of the second fixture: its generated model at the
/// designated world.
fn example2_epistemic() -> PointedEpistemicModel {
    let g = generate_epistemic_model(&argument_fixture("example2-argument.json"), 24).unwrap();
    g.pointed().unwrap()
}

fn fixture_corpus() -> Vec<(String, PointedEpistemicModel)> {
    vec![
        ("example 1".into(), epistemic_fixture("example1-epistemic.json")),
        ("example 2 (generated)".into(), example2_epistemic()),
    ]
}

fn duality_corpus() -> Vec<(String, PointedEpistemicModel)> {
    let spec = RandomModelSpec {
        seed: SEED,
        ..Default::default()
    };
    let mut all = fixture_corpus();
    all.extend(
        spec.corpus(RANDOM_EPISTEMIC)
            .enumerate()
            .map(|(k, m)| (format!("random seed={}", SEED + k as u64), m)),
    );
    all
}

fn duality_round_trip() -> Check {
    let start = Instant::now();
    let caps = Caps::default();
    let (mut checked, mut skipped, mut formulas) = (0, 0, 0);
    for (label, m) in duality_corpus() {
        let r = duality_check(&m, DEPTH, &caps).map_err(|e| format!("{label}: {e}"))?;
        if let Some(v) = r.disagreements().next() {
            return Err(format!("{label}: `{}` is {} vs {}", v.formula, v.source, v.regenerated));
        }
        match r.status {
            DualityStatus::Checked => checked += 1,
            DualityStatus::Skipped(_) => skipped += 1,
            DualityStatus::Broken(why) => return Err(format!("{label}: {why}")),
        }
        formulas += r.formula_count();
    }
    let t = start.elapsed();
    ensure(t < SUITE, || format!("took {t:?}"))?;
    Ok(format!(
        "{checked} checked, {skipped} skipped (trivial), {formulas} formula evaluations, 0 disagreements, {t:?}"
    ))
}

fn oracle_equivalence() -> Check {
    let caps = Caps::default();
    let mut models: Vec<(String, ArgumentModel)> = vec![
        (
            "example 2".into(),
            argument_fixture("example2-argument.json").into_model(),
        ),
        (
            "example 1 generated".into(),
            generate_argument_model(&epistemic_fixture("example1-epistemic.json"), caps.generation_worlds)
                .unwrap()
                .pointed()
                .model()
                .clone(),
        ),
    ];
    for k in 0..RANDOM_ARGUMENT as u64 {
        let spec = RandomArgumentSpec {
            seed: SEED + k,
            ..Default::default()
        };
        models.push((format!("random seed={}", SEED + k), random_argument_model(&spec)));
    }
    let mut total = 0;
    for (label, m) in &models {
        let fast = enumerate_ultrafilters(m, caps.ultrafilter_arguments).map_err(|e| format!("{label}: {e}"))?;
        let slow = oracle_ultrafilters(m, caps.oracle_arguments).map_err(|e| format!("{label}: {e}"))?;
        let a: Vec<_> = fast.iter().map(|u| &u.members).collect();
        let b: Vec<_> = slow.iter().map(|u| &u.members).collect();
        ensure(a == b, || format!("{label}: {a:?} vs oracle {b:?}"))?;
        total += fast.len();
    }
    Ok(format!(
        "{} models, {total} ultrafilters, identical to the subset scan",
        models.len()
    ))
}

fn lemma_checks() -> Check {
    let caps = Caps::default();
    let (mut runs, mut instances) = (0, 0);
    for (label, m) in duality_corpus() {
        let (m, _) = normalize(&m);
        let r = lemma_suite(&m, &caps).map_err(|e| format!("{label}: {e}"))?;
        if let Some((st, msg)) = r.failures().next() {
            return Err(format!("{label}: {st}: {msg}"));
        }
        if r.skipped.is_none() {
            runs += 1;
            instances += r.checks.iter().map(|c| c.instances).sum::<usize>();
        }
    }
    Ok(format!(
        "{runs} nontrivial pipelines, {instances} instances, 0 failures"
    ))
}

fn mutation_control() -> Check {
    let caps = Caps::default();
    let mut caught = Vec::new();
    for (label, m) in fixture_corpus() {
        let r =
            duality_check_with(&m, DEPTH, &caps, ValuationClause::WithoutStrengthGuard).map_err(|e| e.to_string())?;
        let n = r.disagreements().count();
        if n > 0 {
            caught.push(format!("{label}: {n}"));
        }
    }
    ensure(!caught.is_empty(), || {
        "the mutated valuation clause went unnoticed".into()
    })?;
    Ok(format!("disagreements under the mutation: {}", caught.join(", ")))
}

fn random_epistemic(rng: &mut ChaCha8Rng, depth: u32) -> EpistemicFormula {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return EpistemicFormula::prop(["p", "q"][rng.gen_range(0..2)]);
    }
    match rng.gen_range(0..3) {
        0 => random_epistemic(rng, depth - 1).not(),
        1 => random_epistemic(rng, depth - 1).and(random_epistemic(rng, depth - 1)),
        _ => EpistemicFormula::knows(["a", "b"][rng.gen_range(0..2)], random_epistemic(rng, depth - 1)),
    }
}

fn random_argument(rng: &mut ChaCha8Rng, depth: u32) -> ArgumentFormula {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return ArgumentFormula::agent(["a", "b"][rng.gen_range(0..2)]);
    }
    match rng.gen_range(0..3) {
        0 => random_argument(rng, depth - 1).not(),
        1 => random_argument(rng, depth - 1).and(random_argument(rng, depth - 1)),
        _ => ArgumentFormula::attacked(["p", "q"][rng.gen_range(0..2)], random_argument(rng, depth - 1)),
    }
}

fn parser_round_trip() -> Check {
    let sig = Signature::new(["p", "q"], ["a", "b"]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..ROUND_TRIPS {
        let f = random_epistemic(&mut rng, 6);
        let back = parse_epistemic(&f.to_string(), &sig).map_err(|e| format!("`{f}`: {e}"))?;
        ensure(back == f, || format!("`{f}` reparsed as `{back}`"))?;
        let g = random_argument(&mut rng, 6);
        let back = parse_argument(&g.to_string(), &sig).map_err(|e| format!("`{g}`: {e}"))?;
        ensure(back == g, || format!("`{g}` reparsed as `{back}`"))?;
    }
    let mut corpus = 0;
    for (file, model) in [
        ("epistemic-formulas.txt", "example1-epistemic.json"),
        ("argument-formulas.txt", "example2-argument.json"),
    ] {
        let loaded = load(&fixture(model)).unwrap();
        for line in read_formula_file(&fixture(file)).unwrap() {
            let printed = match &loaded {
                LoadedModel::Epistemic { .. } => parse_epistemic(&line, loaded.signature()).map(|f| f.to_string()),
                LoadedModel::Argument { .. } => parse_argument(&line, loaded.signature()).map(|f| f.to_string()),
            }
            .map_err(|e| format!("{file}: `{line}`: {e}"))?;
            ensure(printed == line, || format!("{file}: `{line}` prints as `{printed}`"))?;
            corpus += 1;
        }
    }
    Ok(format!(
        "{ROUND_TRIPS} random ASTs per language and {corpus} corpus lines round-trip"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 example 1 reproduction", example1_reproduction),
        ("2 example 2 reproduction", example2_reproduction),
        ("3 duality on restricted formulas", duality_round_trip),
        ("4 ultrafilter oracle equivalence", oracle_equivalence),
        ("5 lemma suite", lemma_checks),
        ("6 mutation control", mutation_control),
        ("7 parser round trip", parser_round_trip),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
