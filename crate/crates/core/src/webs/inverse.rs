use crate::error::{Error, Result};
use crate::tableaux::SetPartition;

use super::coloring::valid_coloring;
use super::{AugmentedWeb, EdgeColor};

/// Recover the partition of an augmented web from its valid coloring.
///
/// Each blue boundary edge is the stub of a block at `b2`. Following red edges
/// (and crossing blue interior edges from white to black) from the stub's black
/// vertex leads to `b1`; following black edges (crossing blue interior edges at
/// white vertices) collects the rest of the block.
pub fn phi_inverse(w: &AugmentedWeb) -> Result<SetPartition> {
    let g = w.graph();
    let colors = valid_coloring(w)?;
    let fail = |msg: &str| Error::Coloring(format!("cannot undo replacements: {msg}"));
    let edge_of = |v: usize, c: EdgeColor| -> Option<usize> { g.rotation(v).iter().copied().find(|&e| colors[e] == c) };
    let mut blocks = Vec::new();
    for b2 in 1..=g.n() {
        let stub = g.boundary_edge(b2);
        if colors[stub] != EdgeColor::Blue {
            continue;
        }
        let v_b = g.boundary_neighbor(b2);
        let mut block = vec![b2];

        // The first arc: red edges, hopping white→black across blue edges.
        let mut v = v_b;
        let mut e = edge_of(v, EdgeColor::Red).ok_or_else(|| fail("no red edge at block vertex"))?;
        let mut steps = 0;
        loop {
            let u = g.other_end(e, v);
            if g.is_boundary(u) {
                block.push(u + 1);
                break;
            }
            if !g.is_white(u) {
                return Err(fail("red edge leads to a black vertex"));
            }
            let blue = edge_of(u, EdgeColor::Blue).ok_or_else(|| fail("white vertex without blue edge"))?;
            let x = g.other_end(blue, u);
            v = x;
            e = edge_of(x, EdgeColor::Red).ok_or_else(|| fail("black vertex without red edge"))?;
            steps += 1;
            if steps > g.num_edges() {
                return Err(fail("red path does not reach the boundary"));
            }
        }

        // The second arcs.
        let mut stack: Vec<(usize, usize)> =
            g.rotation(v_b).iter().copied().filter(|&e| colors[e] == EdgeColor::Black).map(|e| (v_b, e)).collect();
        while let Some((v, e)) = stack.pop() {
            let u = g.other_end(e, v);
            if g.is_boundary(u) {
                block.push(u + 1);
                continue;
            }
            if !g.is_white(u) {
                return Err(fail("black edge from a black vertex leads to a black vertex"));
            }
            let blue = edge_of(u, EdgeColor::Blue).ok_or_else(|| fail("white vertex without blue edge"))?;
            let x = g.other_end(blue, u);
            for &f in g.rotation(x) {
                if colors[f] == EdgeColor::Black {
                    stack.push((x, f));
                }
            }
            if block.len() > g.n() {
                return Err(fail("second arcs revisit vertices"));
            }
        }
        blocks.push(block);
    }
    SetPartition::new(g.n(), blocks)
}
