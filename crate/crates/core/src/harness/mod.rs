//! Executable checks of the round trip from an epistemic model to its
//! argument model and back, plus the reference oracles used to test the
//! fast paths.
//!
//! Everything is exhaustive quantification over finite models; there is no
//! sampling inside a single check. Randomness only enters through the seeded
//! model generators.

mod lemmas;
mod oracle;
mod pipeline;
mod random;
mod report;

pub use lemmas::{lemma_suite, LemmaReport, Statement, StatementCheck};
pub use oracle::oracle_ultrafilters;
pub use pipeline::{Pipeline, PipelineOutcome};
pub use random::{random_argument_model, random_epistemic_model, RandomArgumentSpec, RandomModelSpec};
pub use report::{duality_check, duality_check_with, informational_formulas, DualityReport, DualityStatus, Verdict};
