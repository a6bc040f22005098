//! Reading webs, partitions and other objects from files and flags.

use std::fs;
use std::path::Path;

use serde_json::Value;

use super::CliError;
use crate::invariants::PerfectOrientation;
use crate::plabic::PlabicGraph;
use crate::tableaux::OrderedSetPartition;

/// Parse a JSON file, reporting syntax errors with their line and column.
pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::new(format!("{}:{}:{}: malformed JSON: {e}", path.display(), e.line(), e.column())))
}

/// A web file holds either a bare graph or `{"web": graph, "orientation": {...}}`.
pub fn read_web(path: &Path) -> Result<(PlabicGraph, Option<PerfectOrientation>), CliError> {
    let value = read_json(path)?;
    let located = |e: crate::Error| CliError::new(format!("{}: {e}", path.display()));
    match value.get("web") {
        Some(web) => {
            let g = PlabicGraph::from_json(web).map_err(located)?;
            let o = match value.get("orientation") {
                Some(o) => Some(PerfectOrientation::from_json(&g, o).map_err(located)?),
                None => None,
            };
            Ok((g, o))
        }
        None => Ok((PlabicGraph::from_json(&value).map_err(located)?, None)),
    }
}

/// An ordered set partition written as blocks separated by `|`, entries by `,`,
/// e.g. `1,2,3|4,5,6`.
pub fn parse_partition(text: &str) -> Result<OrderedSetPartition, CliError> {
    let bad = || CliError::new(format!("cannot read partition {text:?}; expected e.g. 1,2,3|4,5,6"));
    let blocks: Vec<Vec<usize>> = text
        .split('|')
        .map(|b| b.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect())
        .collect::<Result<_, _>>()?;
    let n = blocks.iter().map(Vec::len).sum();
    Ok(OrderedSetPartition::new(n, blocks)?)
}
