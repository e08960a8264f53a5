use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL_VERSION: &str = concat!("apring ", env!("CARGO_PKG_VERSION"));

/// Machine-readable record of one subcommand run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultEnvelope {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub tool_version: String,
    pub elapsed_ms: f64,
}

impl ResultEnvelope {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("envelope values are finite");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
