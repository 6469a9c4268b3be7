mod check;
mod duality;
mod export_dot;
mod gen_arg;
mod gen_epi;
mod ultrafilters;
mod validate;

pub use check::{check, read_formula_file};
pub use duality::duality;
pub use export_dot::export_dot;
pub use gen_arg::gen_arg;
pub use gen_epi::gen_epi;
pub use ultrafilters::ultrafilters;
pub use validate::validate;

use crate::cli::Command;
use crate::output::Outcome;
use crate::{CliError, Context};

pub fn dispatch(ctx: &Context, command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { path } => validate(ctx, &path),
        Command::Check(a) => check(ctx, &a),
        Command::GenArg(a) => gen_arg(ctx, &a),
        Command::GenEpi(a) => gen_epi(ctx, &a),
        Command::Ultrafilters(a) => ultrafilters(ctx, &a),
        Command::Duality(a) => duality(ctx, &a),
        Command::ExportDot(a) => export_dot(ctx, &a),
    }
}

/// The point named by `--at`, falling back to the file's `current`.
fn point(at: Option<&str>, current: Option<&str>) -> Result<String, CliError> {
    at.or(current)
        .map(str::to_owned)
        .ok_or_else(|| CliError::usage("no point given: pass --at or set `current` in the model file"))
}
