use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Boundary,
    Interior(Color),
}

/// An edge endpoint as written in files: an interior vertex or a boundary label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Endpoint {
    #[serde(rename = "v")]
    V(usize),
    #[serde(rename = "b")]
    B(usize),
}

/// A dart is an edge traversed in one direction: `2 * edge + side`, leaving
/// `edges[edge][side]`.
pub type Dart = usize;

/// A plabic graph in a disk, stored as a rotation system.
///
/// Vertex ids `0..n` are the boundary vertices (label `k` has id `k - 1`);
/// interior vertices follow. `rotation[v]` lists the edges at `v` in clockwise
/// order. Boundary labels increase clockwise around the disk.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlabicGraph {
    n: usize,
    kinds: Vec<Kind>,
    edges: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
}

impl PlabicGraph {
    /// Build from unified vertex ids. `colors[i]` is the color of vertex `n + i`;
    /// `rotation[i]` is its clockwise edge list.
    pub fn new(n: usize, colors: Vec<Color>, edges: Vec<[usize; 2]>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph("at least two boundary vertices are required".into()));
        }
        if rotation.len() != colors.len() {
            return Err(Error::InvalidGraph("rotation must list every interior vertex".into()));
        }
        let total = n + colors.len();
        let mut kinds = vec![Kind::Boundary; n];
        kinds.extend(colors.iter().map(|&c| Kind::Interior(c)));
        let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); total];
        for (e, &[a, b]) in edges.iter().enumerate() {
            if a >= total || b >= total {
                return Err(Error::InvalidGraph(format!("edge {e} has an unknown endpoint")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {e} is a loop")));
            }
            incidence[a].push(e);
            incidence[b].push(e);
        }
        let mut full_rotation: Vec<Vec<usize>> = incidence[..n].to_vec();
        full_rotation.extend(rotation);
        for v in 0..total {
            let mut listed = full_rotation[v].clone();
            listed.sort_unstable();
            let mut expected = incidence[v].clone();
            expected.sort_unstable();
            if listed != expected {
                return Err(Error::InvalidGraph(format!(
                    "rotation at vertex {v} does not list its incident edges exactly once"
                )));
            }
        }
        for b in 0..n {
            if incidence[b].len() != 1 {
                return Err(Error::InvalidGraph(format!(
                    "boundary vertex {} has degree {}",
                    b + 1,
                    incidence[b].len()
                )));
            }
        }
        Ok(PlabicGraph { n, kinds, edges, rotation: full_rotation })
    }

    /// Build from file-style endpoints; interior vertex `i` of `colors` is `Endpoint::V(i)`.
    pub fn from_endpoints(
        n: usize,
        colors: Vec<Color>,
        edges: &[[Endpoint; 2]],
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let resolve = |p: Endpoint| -> Result<usize> {
            match p {
                Endpoint::B(k) if (1..=n).contains(&k) => Ok(k - 1),
                Endpoint::V(i) if i < colors.len() => Ok(n + i),
                _ => Err(Error::InvalidGraph(format!("unknown endpoint {p:?}"))),
            }
        };
        let edges = edges.iter().map(|&[a, b]| Ok([resolve(a)?, resolve(b)?])).collect::<Result<Vec<_>>>()?;
        Self::new(n, colors, edges, rotation)
    }

    /// Build from planar coordinates; the clockwise order at each interior vertex
    /// is read from the directions of its straight edges. Boundary label `k` sits
    /// at angle `90° - 360°(k - 1/2)/n` on the circle of radius 2.
    pub fn from_coordinates(n: usize, interior: &[(Color, [f64; 2])], edges: &[[Endpoint; 2]]) -> Result<Self> {
        let position = |p: Endpoint| -> [f64; 2] {
            match p {
                Endpoint::B(k) => boundary_position(n, k),
                Endpoint::V(i) => interior[i].1,
            }
        };
        let mut rotation: Vec<Vec<(f64, usize)>> = vec![Vec::new(); interior.len()];
        for (e, &[a, b]) in edges.iter().enumerate() {
            for (here, there) in [(a, b), (b, a)] {
                if let Endpoint::V(i) = here {
                    let (p, q) = (position(here), position(there));
                    rotation[i].push(((q[1] - p[1]).atan2(q[0] - p[0]), e));
                }
            }
        }
        let rotation = rotation
            .into_iter()
            .map(|mut list| {
                list.sort_by(|x, y| y.0.partial_cmp(&x.0).expect("finite angles"));
                list.into_iter().map(|(_, e)| e).collect()
            })
            .collect();
        Self::from_endpoints(n, interior.iter().map(|p| p.0).collect(), edges, rotation)
    }

    pub(crate) fn from_raw(n: usize, kinds: Vec<Kind>, edges: Vec<[usize; 2]>, rotation: Vec<Vec<usize>>) -> Self {
        PlabicGraph { n, kinds, edges, rotation }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn kind(&self, v: usize) -> Kind {
        self.kinds[v]
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        match self.kinds[v] {
            Kind::Interior(c) => Some(c),
            Kind::Boundary => None,
        }
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn is_black(&self, v: usize) -> bool {
        self.kinds[v] == Kind::Interior(Color::Black)
    }

    pub fn is_white(&self, v: usize) -> bool {
        self.kinds[v] == Kind::Interior(Color::White)
    }

    pub fn interior_vertices(&self) -> std::ops::Range<usize> {
        self.n..self.kinds.len()
    }

    pub fn count_color(&self, c: Color) -> usize {
        self.kinds.iter().filter(|&&k| k == Kind::Interior(c)).count()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
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

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// The unique edge at boundary label `k` (1-based).
    pub fn boundary_edge(&self, k: usize) -> usize {
        self.rotation[k - 1][0]
    }

    /// The interior neighbor of boundary label `k`.
    pub fn boundary_neighbor(&self, k: usize) -> usize {
        self.other_end(self.boundary_edge(k), k - 1)
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        let [a, b] = self.edges[e];
        a < self.n || b < self.n
    }

    /// Position of `e` in the rotation at `v`.
    pub fn position(&self, v: usize, e: usize) -> usize {
        self.rotation[v].iter().position(|&x| x == e).expect("edge is incident")
    }

    /// The edge after `e` in clockwise order around `v`.
    pub fn next_cw(&self, v: usize, e: usize) -> usize {
        let rot = &self.rotation[v];
        rot[(self.position(v, e) + 1) % rot.len()]
    }

    /// The edge before `e` in clockwise order around `v`.
    pub fn prev_cw(&self, v: usize, e: usize) -> usize {
        let rot = &self.rotation[v];
        rot[(self.position(v, e) + rot.len() - 1) % rot.len()]
    }

    pub fn dart_tail(&self, d: Dart) -> usize {
        self.edges[d / 2][d % 2]
    }

    pub fn dart_head(&self, d: Dart) -> usize {
        self.edges[d / 2][1 - d % 2]
    }

    /// The dart leaving `v` along `e`.
    pub fn dart_from(&self, v: usize, e: usize) -> Dart {
        if self.edges[e][0] == v {
            2 * e
        } else {
            debug_assert_eq!(self.edges[e][1], v);
            2 * e + 1
        }
    }

    /// Neighbors of `v` in clockwise order (with repetition for parallel edges).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&e| self.other_end(e, v)).collect()
    }

    /// Edges joining `u` and `v`.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        self.rotation[u].iter().copied().filter(|&e| self.other_end(e, u) == v).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m = self.n;
        let endpoint = |v: usize| {
            if v < m {
                Endpoint::B(v + 1)
            } else {
                Endpoint::V(v - m)
            }
        };
        let raw = GraphJson {
            n: self.n,
            vertices: self
                .interior_vertices()
                .map(|v| VertexJson { id: v - m, color: self.color(v).expect("interior") })
                .collect(),
            edges: self.edges.iter().map(|&[a, b]| [endpoint(a), endpoint(b)]).collect(),
            rotation: self.interior_vertices().map(|v| ((v - m).to_string(), self.rotation[v].clone())).collect(),
        };
        serde_json::to_value(raw).expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: GraphJson = serde_json::from_value(value.clone())?;
        let mut ids: Vec<usize> = raw.vertices.iter().map(|v| v.id).collect();
        ids.sort_unstable();
        if ids.iter().enumerate().any(|(i, &id)| i != id) {
            return Err(Error::InvalidGraph("interior ids must be 0..k".into()));
        }
        let mut colors = vec![Color::Black; ids.len()];
        for v in &raw.vertices {
            colors[v.id] = v.color;
        }
        let mut rotation = vec![Vec::new(); colors.len()];
        for (key, list) in raw.rotation {
            let id: usize = key.parse().map_err(|_| Error::InvalidGraph(format!("bad rotation key {key}")))?;
            if id >= colors.len() {
                return Err(Error::InvalidGraph(format!("rotation for unknown vertex {id}")));
            }
            rotation[id] = list;
        }
        Self::from_endpoints(raw.n, colors, &raw.edges, rotation)
    }
}

/// Location of boundary label `k` used by coordinate-based constructors and renderers.
pub fn boundary_position(n: usize, k: usize) -> [f64; 2] {
    let angle = (90.0 - 360.0 * (k as f64 - 0.5) / n as f64).to_radians();
    [2.0 * angle.cos(), 2.0 * angle.sin()]
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<[Endpoint; 2]>,
    rotation: BTreeMap<String, Vec<usize>>,
}
