use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::time::Duration;

use super::{Pipeline, PipelineOutcome};
use crate::checker::eval_epistemic_at;
use crate::duality::{Caps, ValuationClause};
use crate::formula::{enumerate_restricted, EpistemicFormula};
use crate::kripke::PointedEpistemicModel;
use crate::{Error, Signature};

/// Truth of one formula on both sides of the round trip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub formula: EpistemicFormula,
    /// At the actual world of the normalized source.
    pub source: bool,
    /// At the principal ultrafilter of that world in the regenerated model.
    pub regenerated: bool,
}

impl Verdict {
    pub fn agrees(&self) -> bool {
        self.source == self.regenerated
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityStatus {
    Checked,
    /// The generated argument model is trivial, so there is nothing to
    /// compare against.
    Skipped(String),
    /// The pipeline ran but its output is unusable (for instance, the
    /// principal ultrafilter of the actual world is not a world).
    Broken(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub worlds: usize,
    pub propositions: usize,
    pub agents: usize,
    pub max_connectives: usize,
    /// Propositions complemented to normalize the source.
    pub flipped: Vec<String>,
    pub status: DualityStatus,
    /// Restricted formulas; any disagreement here is a failure.
    pub verdicts: Vec<Verdict>,
    /// Formulas outside the restricted class. Reported, never judged.
    pub informational: Vec<Verdict>,
    /// Filled in by callers that can read a clock.
    pub elapsed: Option<Duration>,
}

impl DualityReport {
    pub fn formula_count(&self) -> usize {
        self.verdicts.len()
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.agrees())
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, DualityStatus::Skipped(_))
    }

    pub fn passed(&self) -> bool {
        !matches!(self.status, DualityStatus::Broken(_)) && self.disagreements().next().is_none()
    }
}

/// Nested and compound knowledge for every combination of symbols:
/// `K[i] K[j] p`, `K[i] (p & q)`, `K[i] (p -> q)` and `~K[i] ~K[j] p`.
pub fn informational_formulas(signature: &Signature) -> Vec<EpistemicFormula> {
    type E = EpistemicFormula;
    let mut out = Vec::new();
    let props = signature.propositions();
    for i in signature.agents() {
        for j in signature.agents() {
            for p in props {
                out.push(E::knows(i.as_str(), E::knows(j.as_str(), E::prop(p.as_str()))));
                out.push(E::knows(i.as_str(), E::knows(j.as_str(), E::prop(p.as_str())).not()).not());
            }
        }
        for p in props {
            for q in props {
                if p != q {
                    out.push(E::knows(i.as_str(), E::prop(p.as_str()).and(E::prop(q.as_str()))));
                    out.push(E::knows(i.as_str(), E::prop(p.as_str()).implies(E::prop(q.as_str()))));
                }
            }
        }
    }
    out
}

/// Compares every restricted formula with at most `max_connectives`
/// connectives at the source's actual world and at its principal
/// ultrafilter in the twice-generated model. The source is normalized first.
pub fn duality_check(
    source: &PointedEpistemicModel,
    max_connectives: usize,
    caps: &Caps,
) -> Result<DualityReport, Error> {
    duality_check_with(source, max_connectives, caps, ValuationClause::Standard)
}

pub fn duality_check_with(
    source: &PointedEpistemicModel,
    max_connectives: usize,
    caps: &Caps,
    clause: ValuationClause,
) -> Result<DualityReport, Error> {
    let sig = source.signature();
    let mut report = DualityReport {
        worlds: source.model().world_count(),
        propositions: sig.propositions().len(),
        agents: sig.agents().len(),
        max_connectives,
        flipped: Vec::new(),
        status: DualityStatus::Checked,
        verdicts: Vec::new(),
        informational: Vec::new(),
        elapsed: None,
    };
    let pipeline = match Pipeline::build(source, caps, clause)? {
        PipelineOutcome::Ready(p) => p,
        PipelineOutcome::Trivial { renaming } => {
            report.flipped = renaming.flipped_names();
            report.status =
                DualityStatus::Skipped(String::from("generated argument model is trivial (no ultrafilters)"));
            return Ok(report);
        }
    };
    report.flipped = pipeline.renaming.flipped_names();
    let Some(target) = pipeline.principal_of_current() else {
        report.status = DualityStatus::Broken(format!(
            "up-set of {{{}}} is not a world of the regenerated model",
            pipeline.source.current_name()
        ));
        return Ok(report);
    };

    let left = pipeline.source.model();
    let s = pipeline.source.current();
    let right = pipeline.regenerated.model();
    let judge = |f: EpistemicFormula| -> Result<Verdict, Error> {
        Ok(Verdict {
            source: eval_epistemic_at(left, s, &f)?,
            regenerated: eval_epistemic_at(right, target, &f)?,
            formula: f,
        })
    };
    for f in enumerate_restricted(sig, max_connectives, caps.formulas)? {
        report.verdicts.push(judge(f.into_inner())?);
    }
    for f in informational_formulas(sig) {
        report.informational.push(judge(f)?);
    }
    Ok(report)
}
