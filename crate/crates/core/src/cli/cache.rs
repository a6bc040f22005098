//! On-disk cache of `AW(n, d)`, keyed by `(n, d)` and a format tag.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::error::Result;
use crate::plabic::PlabicGraph;
use crate::webs::{enumerate_aw, AugmentedWeb};

const FORMAT: &str = "flamingo-aw/1";

fn entry(dir: &Path, n: usize, d: usize) -> PathBuf {
    dir.join(format!("aw-{n}-{d}.v1.json"))
}

fn load(path: &Path, n: usize, d: usize) -> Option<Vec<AugmentedWeb>> {
    let value: Value = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    if value["format"] != FORMAT || value["n"] != n || value["d"] != d {
        return None;
    }
    value["webs"]
        .as_array()?
        .iter()
        .map(|w| PlabicGraph::from_json(w).and_then(|g| AugmentedWeb::new(&g)).ok())
        .collect()
}

/// `enumerate_aw(n, d)`, read from `dir` when a valid entry exists and stored
/// there otherwise. Unreadable or stale entries are recomputed.
pub fn augmented_webs(dir: Option<&Path>, n: usize, d: usize) -> Result<Vec<AugmentedWeb>> {
    let Some(dir) = dir else { return enumerate_aw(n, d) };
    let path = entry(dir, n, d);
    if let Some(webs) = load(&path, n, d) {
        return Ok(webs);
    }
    let webs = enumerate_aw(n, d)?;
    fs::create_dir_all(dir)?;
    let doc = json!({
        "format": FORMAT,
        "n": n,
        "d": d,
        "webs": webs.iter().map(|w| w.graph().to_json()).collect::<Vec<_>>(),
    });
    fs::write(&path, serde_json::to_string(&doc)?)?;
    Ok(webs)
}
