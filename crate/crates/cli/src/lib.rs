//! Command-line front end for `dualkripke-core`: the JSON model file
//! format, Graphviz export, report rendering and the `dualkripke` commands.

pub mod cli;
pub mod commands;
pub mod config;
pub mod dot;
mod error;
pub mod file;
pub mod output;

use std::io::Write;

pub use error::{CliError, Exit};

use cli::{Cli, GlobalArgs};
use config::{CliConfig, Format};
use output::{Outcome, Paint};

/// Settings resolved from the config file and global flags.
#[derive(Debug, Clone)]
pub struct Context {
    pub config: CliConfig,
    pub paint: Paint,
}

impl Context {
    pub fn resolve(global: &GlobalArgs) -> Result<Self, CliError> {
        let mut config = match &global.config {
            Some(path) => CliConfig::load(path)?,
            None => CliConfig::default(),
        };
        if let Some(f) = global.format {
            config.format = f;
        }
        if global.color {
            config.color = true;
        }
        if global.no_color {
            config.color = false;
        }
        if let Some(s) = global.seed {
            config.seed = s;
        }
        if let Some(c) = global.world_cap {
            config.caps.generation_worlds = c;
        }
        if let Some(c) = global.argument_cap {
            config.caps.ultrafilter_arguments = c;
        }
        if let Some(c) = global.oracle_cap {
            config.caps.oracle_arguments = c;
        }
        config.check().map_err(CliError::Usage)?;
        Ok(Context {
            paint: Paint { enabled: config.color },
            config,
        })
    }
}

/// Runs one parsed invocation, writing results to `out` and diagnostics to
/// `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    let result = Context::resolve(&cli.global).and_then(|ctx| {
        let outcome = commands::dispatch(&ctx, cli.command)?;
        render(&ctx, &outcome, out)?;
        Ok(outcome.exit)
    });
    match result {
        Ok(exit) => exit,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit()
        }
    }
}

fn render(ctx: &Context, outcome: &Outcome, out: &mut dyn Write) -> Result<(), CliError> {
    if outcome.raw || ctx.config.format == Format::Text {
        out.write_all(outcome.text.as_bytes())?;
    } else {
        let mut s = serde_json::to_string_pretty(&outcome.json).expect("reports always serialize");
        s.push('\n');
        out.write_all(s.as_bytes())?;
    }
    Ok(())
}
