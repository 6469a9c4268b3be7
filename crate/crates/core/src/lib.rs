//! Epistemic and argument Kripke models over a shared signature.
//!
//! The crate provides both model classes, the two modal languages evaluated
//! over them, the construction of an argument model from a pointed epistemic
//! model (arguments are nonempty sets of worlds), the reverse construction
//! (worlds are ultrafilters over the strength preorder of arguments), and a
//! harness that checks formula invariance across the round trip.
//!
//! Everything here is pure computation over `alloc` collections; file
//! formats, reports and the command-line front end live in the `dualkripke`
//! crate.
#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod checker;
pub mod duality;
mod error;
pub mod formula;
pub mod harness;
mod idset;
pub mod kripke;
pub mod samples;
mod signature;

pub use error::{BindError, Error};
pub use idset::IdSet;
pub use signature::{Signature, SignatureError};
