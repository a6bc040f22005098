use super::shape::FlamingoShape;
use super::syt::{StandardYoungTableau, TableauJson};
use crate::error::{Error, Result};

/// An `r × d` tableau filled with distinct elements of `[n]`, subject to the
/// missing-element condition on rows `r - 1` and `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau {
    shape: FlamingoShape,
    rows: Vec<Vec<usize>>,
}

impl RectTableau {
    pub fn new(shape: FlamingoShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        check_rows(&shape, &rows)?;
        if let Some(i) = condition_three_violation(&shape, &rows) {
            return Err(Error::InvalidTableau(format!(
                "missing entry {i} has no more entries below it in row {} than in row {}",
                shape.r - 1,
                shape.r
            )));
        }
        Ok(RectTableau { shape, rows })
    }

    pub fn shape(&self) -> FlamingoShape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Elements of `[n]` not appearing in the tableau, ascending.
    pub fn missing(&self) -> Vec<usize> {
        missing(&self.shape, &self.rows)
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

fn check_rows(shape: &FlamingoShape, rows: &[Vec<usize>]) -> Result<()> {
    if rows.len() != shape.r || rows.iter().any(|row| row.len() != shape.d) {
        return Err(Error::InvalidTableau(format!("expected {} rows of length {}", shape.r, shape.d)));
    }
    let mut seen = vec![false; shape.n + 1];
    for &x in rows.iter().flatten() {
        if x == 0 || x > shape.n || seen[x] {
            return Err(Error::InvalidTableau(format!("entry {x} out of range or repeated")));
        }
        seen[x] = true;
    }
    for i in 0..shape.r {
        for j in 0..shape.d {
            if j + 1 < shape.d && rows[i][j] >= rows[i][j + 1] {
                return Err(Error::InvalidTableau(format!("row {} not increasing", i + 1)));
            }
            if i + 1 < shape.r && rows[i][j] >= rows[i + 1][j] {
                return Err(Error::InvalidTableau(format!("column {} not increasing", j + 1)));
            }
        }
    }
    Ok(())
}

fn missing(shape: &FlamingoShape, rows: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = vec![false; shape.n + 1];
    for &x in rows.iter().flatten() {
        seen[x] = true;
    }
    (1..=shape.n).filter(|&x| !seen[x]).collect()
}

fn count_below(row: &[usize], i: usize) -> usize {
    row.iter().filter(|&&x| x < i).count()
}

fn condition_three_violation(shape: &FlamingoShape, rows: &[Vec<usize>]) -> Option<usize> {
    let (upper, lower) = (&rows[shape.r - 2], &rows[shape.r - 1]);
    missing(shape, rows).into_iter().find(|&i| count_below(upper, i) <= count_below(lower, i))
}

/// The map from standard Young tableaux to `T(n, d, r)`.
pub fn syt_to_rect(t: &StandardYoungTableau) -> RectTableau {
    let shape = t.shape();
    let mut rows: Vec<Vec<usize>> = t.rows()[..shape.r].to_vec();
    if condition_three_violation(&shape, &rows).is_none() {
        return RectTableau { shape, rows };
    }
    let tail = t.tail();
    let (upper, lower) = (&rows[shape.r - 2], &rows[shape.r - 1]);
    let i = *tail
        .iter()
        .filter(|&&i| count_below(upper, i) == count_below(lower, i))
        .max()
        .expect("some tail entry has balanced counts");
    let last = &mut rows[shape.r - 1];
    last.remove(0);
    last.push(i);
    last.sort_unstable();
    let rect = RectTableau { shape, rows };
    debug_assert!(condition_three_violation(&shape, &rect.rows).is_none());
    rect
}

/// The inverse map from `T(n, d, r)` to standard Young tableaux.
pub fn rect_to_syt(t: &RectTableau) -> StandardYoungTableau {
    let shape = t.shape();
    let mut missing = t.missing();
    let mut rows = t.rows().to_vec();
    let r = shape.r;
    if !missing.is_empty() && missing[0] < rows[r - 1][0] {
        let upper = rows[r - 2].clone();
        let last = &mut rows[r - 1];
        let j = (0..shape.d).find(|&j| j + 1 < shape.d && last[j] < upper[j + 1]).unwrap_or(shape.d - 1);
        let i = last.remove(j);
        last.insert(0, missing.remove(0));
        missing.push(i);
        missing.sort_unstable();
    }
    rows.extend(missing.into_iter().map(|x| vec![x]));
    StandardYoungTableau::new(shape, rows).expect("inverse map produces a standard tableau")
}

/// All elements of `T(n, d, r)`, obtained through the bijection with standard tableaux.
pub fn enumerate_rect(shape: &FlamingoShape) -> Vec<RectTableau> {
    let mut out: Vec<RectTableau> = super::syt::enumerate_syt(shape).iter().map(syt_to_rect).collect();
    out.sort();
    out
}
