//! Specht generators `p_π` and jellyfish invariants `[π]_r`.

use num_rational::BigRational;
use num_traits::One;

use super::poly::{permutation_sign, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::tableaux::{FlamingoShape, OrderedSetPartition, SetPartition};

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// The minor of the variable matrix with the given rows and columns (both increasing),
/// as a polynomial on `n` columns.
pub fn minor(n: usize, rows: &[u8], cols: &[usize]) -> Polynomial {
    assert_eq!(rows.len(), cols.len(), "minor must be square");
    let mut p = Polynomial::zero(n);
    for sigma in permutations(rows.len()) {
        let mut m = Monomial::ONE;
        for (c, &col) in cols.iter().enumerate() {
            m = m.with(col, rows[sigma[c]]);
        }
        p.add_term(m, BigRational::from_integer(permutation_sign(&sigma).into()));
    }
    p
}

/// `p_π`: the product over blocks of the minor on rows `1..|block|`; the block
/// sizes must be the column lengths of λ.
pub fn specht_generator(pi: &SetPartition, shape: &FlamingoShape) -> Result<Polynomial> {
    if pi.n() != shape.n {
        return Err(Error::InvalidPartition(format!("partition of {} for a shape of size {}", pi.n(), shape.n)));
    }
    let mut sizes: Vec<usize> = pi.blocks().iter().map(|b| b.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes != shape.conjugate() {
        return Err(Error::InvalidPartition(format!(
            "block sizes {sizes:?} differ from the column lengths {:?}",
            shape.conjugate()
        )));
    }
    let mut p = Polynomial::term(shape.n, Monomial::ONE, BigRational::one());
    for block in pi.blocks() {
        let rows: Vec<u8> = (1..=block.len() as u8).collect();
        p = p.mul_disjoint(&minor(shape.n, &rows, block))?;
    }
    Ok(p)
}

/// A jellyfish tableau: `cells[i][j]` is the entry in row `i + 1`, column `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JellyfishTableau {
    r: usize,
    cells: Vec<Vec<Option<usize>>>,
}

impl JellyfishTableau {
    /// Check the four defining constraints against `π`.
    pub fn new(pi: &OrderedSetPartition, r: usize, cells: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let d = pi.blocks().len();
        let rows = pi.n() + r - d * r;
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if cells.len() != rows || cells.iter().any(|row| row.len() != d) {
            return bad(format!("expected {rows} rows of {d} cells"));
        }
        for (i, row) in cells.iter().enumerate() {
            let filled = row.iter().filter(|c| c.is_some()).count();
            if i < r && filled != d {
                return bad(format!("row {} must be full", i + 1));
            }
            if i >= r && filled != 1 {
                return bad(format!("row {} must have exactly one entry", i + 1));
            }
        }
        for (j, block) in pi.blocks().iter().enumerate() {
            let column: Vec<usize> = cells.iter().filter_map(|row| row[j]).collect();
            if &column != block {
                return bad(format!("column {} does not list block {block:?} in order", j + 1));
            }
        }
        Ok(JellyfishTableau { r, cells })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cells(&self) -> &[Vec<Option<usize>>] {
        &self.cells
    }

    /// `R_j(T)`: the rows (1-based) holding entries of column `j` (0-based).
    pub fn row_set(&self, j: usize) -> Vec<u8> {
        (0..self.cells.len()).filter(|&i| self.cells[i][j].is_some()).map(|i| i as u8 + 1).collect()
    }

    /// Entries read row by row, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.cells.iter().flatten().filter_map(|c| *c).collect()
    }

    pub fn sign(&self) -> i32 {
        permutation_sign(&self.reading_word())
    }
}

/// All `r`-jellyfish tableaux of `π`, ordered by the column choice of each tail row.
pub fn jellyfish_tableaux(pi: &OrderedSetPartition, r: usize) -> Result<Vec<JellyfishTableau>> {
    let blocks = pi.blocks();
    let d = blocks.len();
    if let Some(b) = blocks.iter().find(|b| b.len() < r) {
        return Err(Error::InvalidPartition(format!("block {b:?} has fewer than {r} elements")));
    }
    let extra = pi.n() - d * r;
    let mut out = Vec::new();
    let mut choice = Vec::with_capacity(extra);
    let mut remaining: Vec<usize> = blocks.iter().map(|b| b.len() - r).collect();
    fn rec(
        pi: &OrderedSetPartition,
        r: usize,
        extra: usize,
        choice: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        out: &mut Vec<JellyfishTableau>,
    ) -> Result<()> {
        if choice.len() == extra {
            let blocks = pi.blocks();
            let d = blocks.len();
            let mut cells = vec![vec![None; d]; r + extra];
            let mut next = vec![0usize; d];
            for i in 0..r + extra {
                let cols: Vec<usize> = if i < r { (0..d).collect() } else { vec![choice[i - r]] };
                for j in cols {
                    cells[i][j] = Some(blocks[j][next[j]]);
                    next[j] += 1;
                }
            }
            out.push(JellyfishTableau::new(pi, r, cells)?);
            return Ok(());
        }
        for j in 0..remaining.len() {
            if remaining[j] > 0 {
                remaining[j] -= 1;
                choice.push(j);
                rec(pi, r, extra, choice, remaining, out)?;
                choice.pop();
                remaining[j] += 1;
            }
        }
        Ok(())
    }
    rec(pi, r, extra, &mut choice, &mut remaining, &mut out)?;
    Ok(out)
}

/// `J(T) = ∏_j M^{π_j}_{R_j(T)}`.
pub fn jellyfish_term(pi: &OrderedSetPartition, t: &JellyfishTableau) -> Result<Polynomial> {
    let n = pi.n();
    let mut p = Polynomial::term(n, Monomial::ONE, BigRational::one());
    for (j, block) in pi.blocks().iter().enumerate() {
        p = p.mul_disjoint(&minor(n, &t.row_set(j), block))?;
    }
    Ok(p)
}

/// `[π]_r = Σ_T sign(T) J(T)`.
pub fn jellyfish_invariant(pi: &OrderedSetPartition, r: usize) -> Result<Polynomial> {
    let mut total = Polynomial::zero(pi.n());
    for t in jellyfish_tableaux(pi, r)? {
        let term = jellyfish_term(pi, &t)?;
        total.add_scaled(&term, &BigRational::from_integer(t.sign().into()));
    }
    Ok(total)
}
