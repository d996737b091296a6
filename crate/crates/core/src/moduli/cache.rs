use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::Poly;
use crate::error::{Error, Result};

use super::engine::IntersectionEngine;
use super::key::IntersectionKey;

/// What happened while merging a cache file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub accepted: usize,
    pub rejected: usize,
    pub warnings: Vec<String>,
}

/// Reads a cache file and merges it into whichever of `engines` matches
/// each entry's theory.
///
/// Nothing in the file is trusted: every entry is recomputed and kept only
/// if it agrees. Malformed entries, mismatches and unreadable files become
/// warnings; a missing file is simply empty.
pub fn load_cache(path: &Path, engines: &[&IntersectionEngine]) -> LoadReport {
    let mut report = LoadReport::default();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return report,
        Err(e) => {
            report.warnings.push(format!("cannot read {}: {e}", path.display()));
            return report;
        }
    };
    let entries = match serde_json::from_str::<Value>(&text) {
        Ok(Value::Array(a)) => a,
        Ok(_) => {
            report.warnings.push(format!("{}: expected a JSON list, ignoring the file", path.display()));
            return report;
        }
        Err(e) => {
            report.warnings.push(format!("{}: not valid JSON ({e}), ignoring the file", path.display()));
            return report;
        }
    };
    for (idx, entry) in entries.iter().enumerate() {
        match check_entry(entry, engines) {
            Ok(()) => report.accepted += 1,
            Err(msg) => {
                report.rejected += 1;
                report.warnings.push(format!("{}: entry {idx} rejected: {msg}", path.display()));
            }
        }
    }
    report
}

fn check_entry(entry: &Value, engines: &[&IntersectionEngine]) -> std::result::Result<(), String> {
    let key = entry.get("key").ok_or("missing key")?;
    let key = IntersectionKey::from_json(key).map_err(|e| e.to_string())?;
    let engine = engines
        .iter()
        .find(|e| e.theory() == key.theory())
        .ok_or_else(|| format!("no engine for theory {}", key.theory()))?;
    let value = entry.get("value").ok_or("missing value")?;
    let stored = Poly::from_json_in(&key.theory().system(), value).map_err(|e| e.to_string())?;
    let fresh = engine.evaluate(&key).map_err(|e| e.to_string())?;
    if fresh != stored {
        return Err(format!("{key}: stored {stored}, recomputed {fresh}"));
    }
    Ok(())
}

/// Writes every memoized entry of `engines` to `path`, sorted by key.
/// The file is replaced atomically.
pub fn save_cache(path: &Path, engines: &[&IntersectionEngine]) -> Result<usize> {
    let mut entries: Vec<(IntersectionKey, Poly)> = engines.iter().flat_map(|e| e.cached_entries()).collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let doc: Vec<Value> = entries.iter().map(|(k, v)| json!({ "key": k.to_json(), "value": v.to_json() })).collect();
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Cache(e.to_string()))?;

    let tmp = path.with_extension("tmp");
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.write_all(b"\n").map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)?;
    Ok(entries.len())
}

/// Entry counts per theory, for diagnostics. Unreadable files are an error here.
pub fn cache_summary(path: &Path) -> Result<Vec<(String, usize)>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
    let entries = doc.as_array().ok_or_else(|| Error::Cache("expected a JSON list".into()))?;
    let mut counts = std::collections::BTreeMap::new();
    for e in entries {
        let theory = e.pointer("/key/theory").and_then(Value::as_str).unwrap_or("<malformed>").to_string();
        *counts.entry(theory).or_insert(0) += 1;
    }
    Ok(counts.into_iter().collect())
}
