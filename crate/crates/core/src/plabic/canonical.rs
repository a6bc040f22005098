use std::collections::VecDeque;

use super::graph::{Kind, PlabicGraph};
use crate::error::{Error, Result};

/// A boundary-preserving relabelling of vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabelling {
    /// `vertex[old] = new`.
    pub vertex: Vec<usize>,
    /// `edge[old] = new`.
    pub edge: Vec<usize>,
}

/// Renumber interior vertices in breadth-first discovery order from boundary
/// labels `1..n`, scanning each rotation clockwise from the edge of discovery;
/// edges are then numbered by first appearance in that scan. Two graphs are
/// isomorphic as disk maps (fixing boundary labels) exactly when their canonical
/// forms are equal.
pub fn canonicalize(g: &PlabicGraph) -> Result<(PlabicGraph, Relabelling)> {
    let n = g.n();
    let total = g.num_vertices();
    let mut vertex = vec![usize::MAX; total];
    let mut start_edge = vec![usize::MAX; total];
    for b in 0..n {
        vertex[b] = b;
        start_edge[b] = g.boundary_edge(b + 1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut queue: VecDeque<usize> = (0..n).collect();
    let mut next_id = n;
    while let Some(v) = queue.pop_front() {
        let rot = g.rotation(v);
        let s = g.position(v, start_edge[v]);
        for k in 0..rot.len() {
            let e = rot[(s + k) % rot.len()];
            let w = g.other_end(e, v);
            if vertex[w] == usize::MAX {
                vertex[w] = next_id;
                start_edge[w] = e;
                next_id += 1;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    if next_id != total {
        return Err(Error::InvalidGraph("some interior vertex is not connected to the boundary".into()));
    }
    let mut edge = vec![usize::MAX; g.num_edges()];
    let mut next_edge = 0;
    let mut rotation = Vec::with_capacity(total);
    for &v in &order {
        let rot = g.rotation(v);
        let s = g.position(v, start_edge[v]);
        let mut list = Vec::with_capacity(rot.len());
        for k in 0..rot.len() {
            let e = rot[(s + k) % rot.len()];
            if edge[e] == usize::MAX {
                edge[e] = next_edge;
                next_edge += 1;
            }
            list.push(edge[e]);
        }
        rotation.push(list);
    }
    let mut edges = vec![[0, 0]; g.num_edges()];
    for (old, &[a, b]) in g.edges().iter().enumerate() {
        let (x, y) = (vertex[a], vertex[b]);
        edges[edge[old]] = [x.min(y), x.max(y)];
    }
    let kinds: Vec<Kind> = order.iter().map(|&v| g.kind(v)).collect();
    let graph = PlabicGraph::from_raw(n, kinds, edges, rotation);
    Ok((graph, Relabelling { vertex, edge }))
}

/// A byte string identifying `G` up to boundary-preserving isomorphism.
pub fn canonical_encoding(g: &PlabicGraph) -> Result<Vec<u8>> {
    let (c, _) = canonicalize(g)?;
    let mut out = Vec::new();
    push_num(&mut out, c.n());
    push_num(&mut out, c.num_vertices());
    for v in c.interior_vertices() {
        out.push(if c.is_black(v) { b'B' } else { b'W' });
        push_num(&mut out, c.degree(v));
        for &e in c.rotation(v) {
            push_num(&mut out, e);
        }
    }
    for &[a, b] in c.edges() {
        push_num(&mut out, a);
        push_num(&mut out, b);
    }
    Ok(out)
}

fn push_num(out: &mut Vec<u8>, x: usize) {
    out.extend_from_slice(&(x as u32).to_le_bytes());
}

/// Relabel boundary `i` as `i + 1` (and `n` as 1): the clockwise rotation by `2π/n`.
pub fn rotate(g: &PlabicGraph) -> PlabicGraph {
    relabel_boundary(g, |b| (b + 1) % g.n(), false)
}

/// Relabel boundary `i` as `n + 1 - i` and reverse every rotation.
pub fn reflect(g: &PlabicGraph) -> PlabicGraph {
    relabel_boundary(g, |b| g.n() - 1 - b, true)
}

/// Apply a boundary relabelling (on 0-based ids), optionally mirroring the embedding.
pub(crate) fn relabel_boundary(g: &PlabicGraph, map: impl Fn(usize) -> usize, mirror: bool) -> PlabicGraph {
    let n = g.n();
    let total = g.num_vertices();
    let new_id = |v: usize| if v < n { map(v) } else { v };
    let mut kinds = vec![Kind::Boundary; total];
    let mut rotation = vec![Vec::new(); total];
    for v in 0..total {
        kinds[new_id(v)] = g.kind(v);
        let mut rot = g.rotation(v).to_vec();
        if mirror {
            rot.reverse();
        }
        rotation[new_id(v)] = rot;
    }
    let edges = g.edges().iter().map(|&[a, b]| [new_id(a), new_id(b)]).collect();
    PlabicGraph::from_raw(n, kinds, edges, rotation)
}

/// Whether `G` and `H` are equal after canonicalization.
pub fn isomorphic(g: &PlabicGraph, h: &PlabicGraph) -> bool {
    match (canonical_encoding(g), canonical_encoding(h)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}
