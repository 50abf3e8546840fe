use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

/// Envelope for machine-readable command output. Serialized through
/// [`canonical_json`] so identical inputs yield byte-identical files.
#[derive(Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub command: String,
    pub inputs: Vec<String>,
    pub report: Value,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Vec<String>, report: Value) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            command: command.to_owned(),
            inputs,
            report,
        }
    }
}

/// Key-sorted, pretty-printed JSON with a trailing newline. Object keys are
/// ordered by converting to `serde_json::Value` first (its map is a BTree),
/// and floats take their shortest round-trip form, so the byte stream is a
/// pure function of the data.
pub fn canonical_json(doc: &ReportDocument) -> Result<String, CliError> {
    let value = serde_json::to_value(doc)?;
    let mut text = serde_json::to_string_pretty(&value)?;
    text.push('\n');
    Ok(text)
}
