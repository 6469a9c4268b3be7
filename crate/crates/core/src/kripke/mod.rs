//! The two model classes, their pointed variants, and structural validation.
//!
//! Relations are kept exactly as declared. Nothing is closed or repaired on
//! construction; names that do not resolve are remembered and surface as
//! violations when the model is validated.

mod argument;
mod epistemic;
mod relation;
mod validate;

pub use argument::{ArgumentBuilder, ArgumentModel, PointedArgumentModel};
pub use epistemic::{EpistemicBuilder, EpistemicModel, PointedEpistemicModel};
pub use relation::Relation;
pub use validate::{validate_argument, validate_epistemic, ValidationReport, Violation};
