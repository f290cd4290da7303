//! Command-line front end for `nmode-squeeze`.

pub mod commands;
pub mod config;
pub mod output;

use serde::Serialize;
use serde_json::Value;

use commands::Failure;
use config::{Command, Format, RunConfig};
use output::SCHEMA;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Serialize)]
struct Document<'a> {
    schema: &'static str,
    command: &'static str,
    config: &'a RunConfig,
    results: &'a Value,
    checks: &'a [Value],
}

/// Rendered output and the exit code it implies.
pub fn execute(cfg: &RunConfig) -> Result<(String, i32), (String, i32)> {
    let out = commands::run(cfg).map_err(|f| match f {
        Failure::Usage(m) => (m, EXIT_USAGE),
        Failure::Resource(m) => (m, EXIT_RESOURCE),
        Failure::Numeric(m) => (m, EXIT_NUMERIC),
    })?;
    let code = if cfg.command == Command::Verify {
        match out.results["overall"].as_str() {
            Some("fail") => EXIT_CHECK_FAILED,
            Some("partial") => EXIT_RESOURCE,
            _ => EXIT_OK,
        }
    } else {
        EXIT_OK
    };
    let text = match cfg.format {
        Format::Json => output::to_json(&Document {
            schema: SCHEMA,
            command: cfg.command.name(),
            config: cfg,
            results: &out.results,
            checks: &out.checks,
        })
        .map_err(|e| (e.to_string(), EXIT_NUMERIC))?,
        Format::Csv => out.table.to_csv().map_err(|e| (e.to_string(), EXIT_NUMERIC))?,
    };
    Ok((text, code))
}
