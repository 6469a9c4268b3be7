use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::duality::{
    compute_preorder, generate_argument_model, normalize, Caps, GeneratedArgumentModel, GeneratedEpistemicModel,
    Preorder, Renaming, ValuationClause,
};
use crate::kripke::{validate_epistemic, PointedEpistemicModel};
use crate::Error;

/// A normalized source taken to its argument model and back.
#[derive(Debug, Clone)]
pub struct Pipeline {
    /// The normalized source model.
    pub source: PointedEpistemicModel,
    pub renaming: Renaming,
    pub generated: GeneratedArgumentModel,
    /// Strength preorder of `generated`.
    pub order: Preorder,
    pub regenerated: GeneratedEpistemicModel,
    /// For each source world `t`, the world of `regenerated` formed by the
    /// up-set of `{t}`, if that up-set is one of its worlds.
    pub principal: Vec<Option<usize>>,
}

#[derive(Debug, Clone)]
pub enum PipelineOutcome {
    Ready(Box<Pipeline>),
    /// The generated argument model has no ultrafilters.
    Trivial {
        renaming: Renaming,
    },
}

impl Pipeline {
    /// Normalizes `source`, then runs both generations. The regenerated
    /// model is built relative to `{s}`, the argument of the source's world.
    pub fn build(
        source: &PointedEpistemicModel,
        caps: &Caps,
        clause: ValuationClause,
    ) -> Result<PipelineOutcome, Error> {
        let report = validate_epistemic(source.model());
        if !report.is_ok() {
            return Err(Error::InvalidModel(report.violations.len()));
        }
        let (source, renaming) = normalize(source);
        let generated = generate_argument_model(&source, caps.generation_worlds)?;
        let n = generated.model().argument_count();
        if n > caps.ultrafilter_arguments {
            return Err(Error::SizeCap {
                what: "generated argument model",
                size: n,
                cap: caps.ultrafilter_arguments,
            });
        }
        let order = compute_preorder(generated.model());
        let regenerated = match crate::duality::to_epistemic_build(generated.pointed(), &order, clause) {
            Ok(g) => g,
            Err(Error::Trivial) => return Ok(PipelineOutcome::Trivial { renaming }),
            Err(e) => return Err(e),
        };
        let principal = (0..source.model().world_count())
            .map(|t| regenerated.world_of(order.up_set(generated.singleton(t))))
            .collect();
        Ok(PipelineOutcome::Ready(Box::new(Pipeline {
            source,
            renaming,
            generated,
            order,
            regenerated,
            principal,
        })))
    }

    /// World of the regenerated model standing for the source's actual world.
    pub fn principal_of_current(&self) -> Option<usize> {
        self.principal[self.source.current()]
    }
}
