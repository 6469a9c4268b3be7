//! Generation in both directions between the two model classes.
//!
//! From a pointed epistemic model, [`generate_argument_model`] builds the
//! argument model whose arguments are the nonempty sets of worlds. From a
//! pointed argument model, [`generate_epistemic_model`] builds the epistemic
//! model whose worlds are the ultrafilters of the strength preorder.
//! Both constructions are exponential, so each is guarded by a size cap that
//! fails loudly instead of truncating.

mod normalize;
mod order;
mod to_argument;
mod to_epistemic;

pub use normalize::{is_normalized, normalize, Renaming};
pub use order::{
    classify_set, compute_preorder, enumerate_filters, enumerate_ultrafilters, is_trivial, set_id, sort_canonically,
    ArgumentSet, Classification, Preorder,
};
pub use to_argument::{generate_argument_model, GeneratedArgumentModel};
pub(crate) use to_epistemic::build as to_epistemic_build;
pub use to_epistemic::{
    generate_epistemic_model, generate_epistemic_model_with, principal_ultrafilter, CurrentWorld,
    GeneratedEpistemicModel, ValuationClause,
};

/// Size limits for the exponential constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest world count accepted when generating an argument model.
    pub generation_worlds: usize,
    /// Largest argument count accepted when enumerating ultrafilters.
    pub ultrafilter_arguments: usize,
    /// Largest argument count the exhaustive subset oracle will scan.
    pub oracle_arguments: usize,
    /// Largest number of formulas a single enumeration may produce.
    pub formulas: usize,
}

/// Worlds are packed into a `u64` mask during generation.
pub const MAX_GENERATION_WORLDS: usize = 30;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            generation_worlds: 16,
            ultrafilter_arguments: 24,
            oracle_arguments: 20,
            formulas: 1_000_000,
        }
    }
}
