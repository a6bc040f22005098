use serde::{Deserialize, Serialize};

use super::shape::FlamingoShape;
use crate::error::{Error, Result};

/// A standard Young tableau of flamingo shape, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardYoungTableau {
    shape: FlamingoShape,
    rows: Vec<Vec<usize>>,
}

/// JSON form shared by both tableau types: `{"shape": [n, d, r], "rows": [[...], ...]}`.
#[derive(Serialize, Deserialize)]
pub(crate) struct TableauJson {
    pub shape: [usize; 3],
    pub rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn new(shape: FlamingoShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lambda = shape.lambda();
        if rows.len() != lambda.len() || rows.iter().zip(&lambda).any(|(row, &l)| row.len() != l) {
            return Err(Error::InvalidTableau(format!("row lengths do not match {lambda:?}")));
        }
        let mut seen = vec![false; shape.n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > shape.n || seen[x] {
                return Err(Error::InvalidTableau(format!("entry {x} out of range or repeated")));
            }
            seen[x] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            for j in 0..row.len() {
                if j + 1 < row.len() && row[j] >= row[j + 1] {
                    return Err(Error::InvalidTableau(format!("row {} not increasing", i + 1)));
                }
                if i + 1 < rows.len() && j < rows[i + 1].len() && row[j] >= rows[i + 1][j] {
                    return Err(Error::InvalidTableau(format!("column {} not increasing", j + 1)));
                }
            }
        }
        Ok(StandardYoungTableau { shape, rows })
    }

    pub fn shape(&self) -> FlamingoShape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries below row r, top to bottom.
    pub fn tail(&self) -> Vec<usize> {
        self.rows[self.shape.r..].iter().map(|row| row[0]).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let s = self.shape;
        serde_json::to_value(TableauJson { shape: [s.n, s.d, s.r], rows: self.rows.clone() })
            .expect("tableau serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: TableauJson = serde_json::from_value(value.clone())?;
        let shape = FlamingoShape::new(raw.shape[0], raw.shape[1], raw.shape[2])?;
        Self::new(shape, raw.rows)
    }
}

/// All standard Young tableaux of the given shape, sorted by their row-major reading.
pub fn enumerate_syt(shape: &FlamingoShape) -> Vec<StandardYoungTableau> {
    let lambda = shape.lambda();
    let mut rows: Vec<Vec<usize>> = lambda.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fill(&lambda, &mut rows, 1, shape.n, &mut out);
    out.sort();
    out.into_iter().map(|rows| StandardYoungTableau { shape: *shape, rows }).collect()
}

fn fill(lambda: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    if next > n {
        out.push(rows.clone());
        return;
    }
    for i in 0..lambda.len() {
        let len = rows[i].len();
        if len < lambda[i] && (i == 0 || rows[i - 1].len() > len) {
            rows[i].push(next);
            fill(lambda, rows, next + 1, n, out);
            rows[i].pop();
        }
    }
}
