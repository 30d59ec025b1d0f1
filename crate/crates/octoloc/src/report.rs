//! JSON report envelope shared by the CLI and the examples.
//!
//! Reports are versioned (`"schema": 1`), embed the tool version, a config
//! echo, and the input's content hash, and contain nothing run-dependent
//! (no timestamps, no timings), so a fixed command line reproduces a report
//! byte for byte.

use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

/// Description of the input file embedded in every report.
pub fn input_info(path: &Path, bytes: &[u8], n_vertices: usize, n_edges: usize) -> Value {
    json!({
        "path": path.display().to_string(),
        "sha256": crate::io::sha256_hex(bytes),
        "n_vertices": n_vertices,
        "n_edges": n_edges,
    })
}

/// Assembles the envelope. `payload` fields are merged at the top level.
pub fn envelope(
    command: &str,
    status: &str,
    exit_code: i32,
    config: Value,
    input: Option<Value>,
    payload: Value,
) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA_VERSION));
    map.insert(
        "tool".into(),
        json!({"name": "octoloc", "version": env!("CARGO_PKG_VERSION")}),
    );
    map.insert("command".into(), json!(command));
    map.insert("status".into(), json!(status));
    map.insert("exit_code".into(), json!(exit_code));
    map.insert("config".into(), config);
    if let Some(input) = input {
        map.insert("input".into(), input);
    }
    if let Value::Object(extra) = payload {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    Value::Object(map)
}

/// Pretty-prints to stdout or the given file, with a trailing newline.
pub fn write_report(report: &Value, output: Option<&Path>) -> std::io::Result<()> {
    let text = format!("{}\n", serde_json::to_string_pretty(report)?);
    match output {
        None => std::io::stdout().write_all(text.as_bytes()),
        Some(path) => std::fs::write(path, text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_merges_payload_and_is_stable() {
        let a = envelope(
            "info",
            "ok",
            EXIT_OK,
            json!({"threads": 1}),
            None,
            json!({"n": 5}),
        );
        let b = envelope(
            "info",
            "ok",
            EXIT_OK,
            json!({"threads": 1}),
            None,
            json!({"n": 5}),
        );
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a["schema"], 1);
        assert_eq!(a["n"], 5);
        assert_eq!(a["tool"]["name"], "octoloc");
    }
}
