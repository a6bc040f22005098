use super::partition::{arcs_cross, is_wnc, SetPartition};
use super::shape::FlamingoShape;
use crate::error::{Error, Result};

/// An arc of an m-diagram, with the index of the block that owns it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    pub block: usize,
}

/// Arc diagram of a 3-weakly noncrossing partition: for each block `b1 < b2 < ...`
/// a first arc `(b1, b2)` and second arcs `(b2, bj)` for `j ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDiagram {
    pub n: usize,
    pub first_arcs: Vec<Arc>,
    pub second_arcs: Vec<Arc>,
}

impl MDiagram {
    /// Number of blocks whose combined arcs enclose the region just below the
    /// line between points `j` and `j + 1`.
    pub fn gap_depth(&self, j: usize) -> usize {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        for f in &self.first_arcs {
            let right =
                self.second_arcs.iter().filter(|s| s.block == f.block).map(|s| s.right).max().unwrap_or(f.right);
            blocks.push((f.left, right));
        }
        blocks.iter().filter(|&&(a, b)| a <= j && j < b).count()
    }
}

pub fn wnc_to_mdiagram(pi: &SetPartition) -> Result<MDiagram> {
    let shape = FlamingoShape::new(pi.n(), pi.blocks().len(), 3)?;
    if !is_wnc(pi, &shape) {
        return Err(Error::InvalidPartition(format!("{pi} is not 3-weakly noncrossing")));
    }
    let mut first_arcs = Vec::new();
    let mut second_arcs = Vec::new();
    for (k, b) in pi.blocks().iter().enumerate() {
        first_arcs.push(Arc { left: b[0], right: b[1], block: k });
        for &x in &b[2..] {
            second_arcs.push(Arc { left: b[1], right: x, block: k });
        }
    }
    let diagram = MDiagram { n: pi.n(), first_arcs, second_arcs };
    debug_assert!(arcs_noncrossing(&diagram.first_arcs) && arcs_noncrossing(&diagram.second_arcs));
    Ok(diagram)
}

/// Whether no two arcs in the list cross.
pub fn arcs_noncrossing(arcs: &[Arc]) -> bool {
    arcs.iter()
        .enumerate()
        .all(|(i, a)| arcs[i + 1..].iter().all(|b| !arcs_cross((a.left, a.right), (b.left, b.right))))
}
