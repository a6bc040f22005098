use super::graph::{Kind, PlabicGraph};
use crate::error::{Error, Result};

/// A mutable rotation system used for local surgery (edge contraction, vertex
/// splitting, insertion of new edges). Vertex and edge ids stay stable until
/// [`MapBuilder::finish`] compacts them.
#[derive(Clone, Debug)]
pub struct MapBuilder {
    n: usize,
    kinds: Vec<Option<Kind>>,
    edges: Vec<Option<[usize; 2]>>,
    rotation: Vec<Vec<usize>>,
}

impl MapBuilder {
    /// An empty map with `n` boundary vertices.
    pub fn new(n: usize) -> Self {
        MapBuilder { n, kinds: vec![Some(Kind::Boundary); n], edges: Vec::new(), rotation: vec![Vec::new(); n] }
    }

    pub fn from_graph(g: &PlabicGraph) -> Self {
        MapBuilder {
            n: g.n(),
            kinds: (0..g.num_vertices()).map(|v| Some(g.kind(v))).collect(),
            edges: g.edges().iter().map(|&e| Some(e)).collect(),
            rotation: (0..g.num_vertices()).map(|v| g.rotation(v).to_vec()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self, kind: Kind) -> usize {
        self.kinds.push(Some(kind));
        self.rotation.push(Vec::new());
        self.kinds.len() - 1
    }

    /// Add an edge without placing it in any rotation.
    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        self.edges.push(Some([a, b]));
        self.edges.len() - 1
    }

    pub fn kind(&self, v: usize) -> Kind {
        self.kinds[v].expect("live vertex")
    }

    pub fn set_kind(&mut self, v: usize, kind: Kind) {
        self.kinds[v] = Some(kind);
    }

    pub fn is_live_edge(&self, e: usize) -> bool {
        self.edges[e].is_some()
    }

    pub fn endpoints(&self, e: usize) -> [usize; 2] {
        self.edges[e].expect("live edge")
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.endpoints(e);
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn set_rotation(&mut self, v: usize, rot: Vec<usize>) {
        self.rotation[v] = rot;
    }

    pub fn position(&self, v: usize, e: usize) -> usize {
        self.rotation[v].iter().position(|&x| x == e).expect("edge is incident")
    }

    pub fn next_cw(&self, v: usize, e: usize) -> usize {
        let rot = &self.rotation[v];
        rot[(self.position(v, e) + 1) % rot.len()]
    }

    pub fn prev_cw(&self, v: usize, e: usize) -> usize {
        let rot = &self.rotation[v];
        rot[(self.position(v, e) + rot.len() - 1) % rot.len()]
    }

    /// Put `new` in the rotation slot of `old` at `v`.
    pub fn replace_in_rotation(&mut self, v: usize, old: usize, new: usize) {
        let p = self.position(v, old);
        self.rotation[v][p] = new;
    }

    /// Insert `new` immediately after `anchor` (clockwise) at `v`.
    pub fn insert_after(&mut self, v: usize, anchor: usize, new: usize) {
        let p = self.position(v, anchor);
        self.rotation[v].insert(p + 1, new);
    }

    /// Insert `new` immediately before `anchor` (clockwise) at `v`.
    pub fn insert_before(&mut self, v: usize, anchor: usize, new: usize) {
        let p = self.position(v, anchor);
        self.rotation[v].insert(p, new);
    }

    /// Re-point the end of `e` at `from` to `to` (rotations are not touched).
    pub fn move_endpoint(&mut self, e: usize, from: usize, to: usize) {
        let ends = self.edges[e].as_mut().expect("live edge");
        if ends[0] == from {
            ends[0] = to;
        } else {
            debug_assert_eq!(ends[1], from);
            ends[1] = to;
        }
    }

    pub fn delete_edge(&mut self, e: usize) {
        let [a, b] = self.endpoints(e);
        for v in [a, b] {
            let p = self.position(v, e);
            self.rotation[v].remove(p);
        }
        self.edges[e] = None;
    }

    /// Delete a vertex that has no incident edges.
    pub fn delete_vertex(&mut self, v: usize) {
        assert!(self.rotation[v].is_empty(), "vertex still has edges");
        assert!(v >= self.n, "boundary vertices cannot be deleted");
        self.kinds[v] = None;
    }

    /// Contract `e = (u, v)` into `keep`, splicing the other endpoint's rotation
    /// in place of `e`.
    pub fn contract(&mut self, e: usize, keep: usize) {
        let gone = self.other_end(e, keep);
        assert_ne!(gone, keep);
        let rot_gone = self.rotation[gone].clone();
        let p = rot_gone.iter().position(|&x| x == e).expect("incident");
        let spliced: Vec<usize> = (1..rot_gone.len()).map(|k| rot_gone[(p + k) % rot_gone.len()]).collect();
        for &f in &spliced {
            self.move_endpoint(f, gone, keep);
        }
        let q = self.position(keep, e);
        self.rotation[keep].splice(q..q + 1, spliced);
        self.rotation[gone].clear();
        self.edges[e] = None;
        self.kinds[gone] = None;
    }

    /// Move the cyclically contiguous run `run` (given in clockwise order) of
    /// `v`'s rotation to a new vertex of kind `kind`, joined to `v` by a new edge.
    /// Returns the new vertex and the new edge.
    pub fn split(&mut self, v: usize, run: &[usize], kind: Kind) -> Result<(usize, usize)> {
        let rot = self.rotation[v].clone();
        let len = rot.len();
        let start =
            rot.iter().position(|&x| x == run[0]).ok_or_else(|| Error::InvalidGraph("run not at vertex".into()))?;
        for (k, &e) in run.iter().enumerate() {
            if rot[(start + k) % len] != e {
                return Err(Error::InvalidGraph("split run is not contiguous".into()));
            }
        }
        let x = self.add_vertex(kind);
        let new = self.add_edge(v, x);
        let mut rest: Vec<usize> = (run.len()..len).map(|k| rot[(start + k) % len]).collect();
        rest.push(new);
        let mut moved = run.to_vec();
        moved.push(new);
        for &e in run {
            self.move_endpoint(e, v, x);
        }
        self.rotation[v] = rest;
        self.rotation[x] = moved;
        Ok((x, new))
    }

    /// Compact ids and produce a validated graph.
    pub fn finish(self) -> Result<PlabicGraph> {
        self.finish_with_maps().map(|(g, _, _)| g)
    }

    /// [`MapBuilder::finish`], also returning where each live vertex and edge
    /// went (`usize::MAX` for deleted ones).
    pub fn finish_with_maps(self) -> Result<(PlabicGraph, Vec<usize>, Vec<usize>)> {
        let n = self.n;
        let mut vertex = vec![usize::MAX; self.kinds.len()];
        let mut colors = Vec::new();
        let mut next = n;
        for (v, kind) in self.kinds.iter().enumerate() {
            match kind {
                Some(Kind::Boundary) => vertex[v] = v,
                Some(Kind::Interior(c)) => {
                    vertex[v] = next;
                    next += 1;
                    colors.push(*c);
                }
                None => {}
            }
        }
        let mut edge = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (e, ends) in self.edges.iter().enumerate() {
            if let Some([a, b]) = ends {
                edge[e] = edges.len();
                edges.push([vertex[*a], vertex[*b]]);
            }
        }
        let mut rotation = vec![Vec::new(); colors.len()];
        for (v, kind) in self.kinds.iter().enumerate() {
            if let Some(Kind::Interior(_)) = kind {
                rotation[vertex[v] - n] = self.rotation[v].iter().map(|&e| edge[e]).collect();
            }
        }
        let g = PlabicGraph::new(n, colors, edges, rotation)?;
        Ok((g, vertex, edge))
    }
}
