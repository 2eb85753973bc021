use std::collections::BTreeMap;

use mweb_core::Biclique;
use serde::Serialize;
use serde_json::{Map, Value};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Provenance embedded in every output file. Identical manifests reproduce
/// identical outputs; `timing` is only written when `--timing` is given.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planted: Option<Biclique>,
}

impl RunManifest {
    pub fn new<A: Serialize>(command: &str, args: &A, seed: Option<u64>) -> Self {
        let parameters = match serde_json::to_value(args).expect("arguments serialize") {
            Value::Object(map) => map.into_iter().filter(|(k, _)| k != "seed").collect(),
            other => BTreeMap::from([("value".to_string(), other)]),
        };
        Self {
            command: command.to_string(),
            parameters,
            seed,
            tool_version: TOOL_VERSION.to_string(),
            timing: None,
            planted: None,
        }
    }
}

/// Adds a `manifest` key to an object payload, or wraps other payloads as
/// `{"result": .., "manifest": ..}`.
pub fn with_manifest<T: Serialize>(payload: &T, manifest: &RunManifest) -> String {
    let manifest = serde_json::to_value(manifest).expect("manifest serializes");
    let value = match serde_json::to_value(payload).expect("payload serializes") {
        Value::Object(mut map) => {
            map.insert("manifest".into(), manifest);
            Value::Object(map)
        }
        other => {
            let mut map = Map::new();
            map.insert("result".into(), other);
            map.insert("manifest".into(), manifest);
            Value::Object(map)
        }
    };
    let mut out = serde_json::to_string_pretty(&value).expect("json value serializes");
    out.push('\n');
    out
}

/// TSV output with the manifest as a leading `#` comment line.
pub fn tsv_with_manifest(tsv: &str, manifest: &RunManifest) -> String {
    let line = serde_json::to_string(manifest).expect("manifest serializes");
    format!("# manifest: {line}\n{tsv}")
}
