//! Local rewrite rules. Each rule names the orientation it needs near the
//! feature, and every output term carries the orientation inherited from it.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::invariants::{
    for_each_admissible_orientation, is_admissible, rat, OrientationConstraints, PerfectOrientation,
};
use crate::plabic::{face_structure, Color, Kind, MapBuilder, PlabicGraph};

/// A configuration some rule can rewrite. Vertex ids refer to the graph the
/// feature was found in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Feature {
    /// A black vertex of degree at most 2 whose neighbors are all boundary vertices.
    BoundaryOnly { vertex: usize },
    /// A black vertex of degree 1 attached to a white vertex.
    Leaf { leaf: usize, white: usize },
    /// A white vertex joined once to `single` and twice to `double`.
    DoubleEdge { white: usize, single: usize, double: usize },
    /// A degree-2 black vertex between a boundary vertex and a white vertex.
    BoundaryBivalent { vertex: usize, white: usize },
    /// A degree-2 black vertex between two distinct white vertices.
    Bivalent { vertex: usize, whites: [usize; 2] },
    /// An interior face of degree 4.
    Square { whites: [usize; 2], blacks: [usize; 2] },
}

impl Feature {
    fn rank(&self) -> usize {
        match self {
            Feature::BoundaryOnly { .. } => 0,
            Feature::Leaf { .. } => 1,
            Feature::DoubleEdge { .. } => 2,
            Feature::BoundaryBivalent { .. } => 3,
            Feature::Bivalent { .. } => 4,
            Feature::Square { .. } => 5,
        }
    }

    fn vertices(&self) -> Vec<usize> {
        match *self {
            Feature::BoundaryOnly { vertex } => vec![vertex],
            Feature::Leaf { leaf, white } => vec![leaf, white],
            Feature::DoubleEdge { white, single, double } => vec![white, single, double],
            Feature::BoundaryBivalent { vertex, white } => vec![vertex, white],
            Feature::Bivalent { vertex, whites } => vec![vertex, whites[0], whites[1]],
            Feature::Square { whites, blacks } => vec![whites[0], whites[1], blacks[0], blacks[1]],
        }
    }

    /// Sort key: rule first, then the sorted vertex ids.
    pub fn key(&self) -> (usize, Vec<usize>) {
        let mut vs = self.vertices();
        vs.sort_unstable();
        (self.rank(), vs)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Feature::BoundaryOnly { .. } => "boundary-only",
            Feature::Leaf { .. } => "leaf",
            Feature::DoubleEdge { .. } => "double-edge",
            Feature::BoundaryBivalent { .. } => "boundary-bivalent",
            Feature::Bivalent { .. } => "bivalent",
            Feature::Square { .. } => "square",
        }
    }
}

/// All reducible features of `G`, smallest key first.
pub fn find_features(g: &PlabicGraph) -> Vec<Feature> {
    let mut out = Vec::new();
    for v in g.interior_vertices().filter(|&v| g.is_black(v)) {
        let nb = g.neighbors(v);
        if nb.len() <= 2 && nb.iter().all(|&u| g.is_boundary(u)) {
            out.push(Feature::BoundaryOnly { vertex: v });
        } else if nb.len() == 1 {
            out.push(Feature::Leaf { leaf: v, white: nb[0] });
        } else if nb.len() == 2 {
            let whites: Vec<usize> = nb.iter().copied().filter(|&u| g.is_white(u)).collect();
            let boundary = nb.iter().any(|&u| g.is_boundary(u));
            if boundary && whites.len() == 1 {
                out.push(Feature::BoundaryBivalent { vertex: v, white: whites[0] });
            } else if whites.len() == 2 && whites[0] != whites[1] {
                out.push(Feature::Bivalent { vertex: v, whites: [whites[0], whites[1]] });
            }
        }
    }
    let fs = face_structure(g);
    for face in fs.faces.iter().filter(|f| !f.touches_boundary()) {
        let vs: Vec<usize> = face.darts().map(|d| g.dart_tail(d)).collect();
        if vs.len() == 2 {
            let (w, b) = if g.is_white(vs[0]) { (vs[0], vs[1]) } else { (vs[1], vs[0]) };
            if !g.is_white(w) || !g.is_black(b) {
                continue;
            }
            let others: Vec<usize> = g.neighbors(w).into_iter().filter(|&u| u != b).collect();
            if others.len() == 1 && g.is_black(others[0]) {
                out.push(Feature::DoubleEdge { white: w, single: others[0], double: b });
            }
        } else if vs.len() == 4 {
            let mut distinct = vs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != 4 {
                continue;
            }
            let (whites, blacks): (Vec<usize>, Vec<usize>) = vs.iter().partition(|&&v| g.is_white(v));
            if whites.len() == 2 && blacks.len() == 2 {
                let mut w = [whites[0], whites[1]];
                let mut b = [blacks[0], blacks[1]];
                w.sort_unstable();
                b.sort_unstable();
                out.push(Feature::Square { whites: w, blacks: b });
            }
        }
    }
    out.sort_by_key(|f| f.key());
    out.dedup();
    out
}

/// The result of one rule: `[G, lhs] = Σ c [G_t, O_t]`.
#[derive(Clone, Debug)]
pub struct RuleApplication {
    pub feature: Feature,
    pub lhs: PerfectOrientation,
    pub terms: Vec<(BigRational, PlabicGraph, PerfectOrientation)>,
}

/// A rotation system with orientation data attached to its live edges and
/// vertices; sink positions are kept as ranks and compacted at the end.
pub(crate) struct Surgery {
    map: MapBuilder,
    independent: Vec<bool>,
    sink: Vec<Option<usize>>,
}

impl Surgery {
    pub(crate) fn new(g: &PlabicGraph, o: &PerfectOrientation) -> Self {
        let mut sink = vec![None; g.num_vertices()];
        for (k, &s) in o.sinks().iter().enumerate() {
            sink[s] = Some(k);
        }
        Surgery { map: MapBuilder::from_graph(g), independent: o.independent().to_vec(), sink }
    }

    pub(crate) fn map(&mut self) -> &mut MapBuilder {
        &mut self.map
    }

    pub(crate) fn add_vertex(&mut self, kind: Kind) -> usize {
        self.sink.push(None);
        self.map.add_vertex(kind)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize, independent: bool) -> usize {
        self.independent.push(independent);
        self.map.add_edge(a, b)
    }

    pub(crate) fn set_independent(&mut self, e: usize, value: bool) {
        self.independent[e] = value;
    }

    fn sink(&self, v: usize) -> Option<usize> {
        self.sink[v]
    }

    fn set_sink(&mut self, v: usize, pos: Option<usize>) {
        self.sink[v] = pos;
    }

    /// The edge at `v` leading to `u` (the first one clockwise).
    fn edge_to(&self, v: usize, u: usize) -> usize {
        *self.map.rotation(v).iter().find(|&&e| self.map.other_end(e, v) == u).expect("vertices are adjacent")
    }

    /// Remove `v` and all its edges.
    fn remove_vertex(&mut self, v: usize) {
        for e in self.map.rotation(v).to_vec() {
            if self.map.is_live_edge(e) {
                self.map.delete_edge(e);
            }
        }
        self.map.delete_vertex(v);
        self.sink[v] = None;
    }

    /// Delete the white vertex `w` and identify its neighbors `keep` and
    /// `other` into `keep`; edges from `w` to anything else are dropped.
    fn fuse(&mut self, w: usize, keep: usize, other: usize) {
        for e in self.map.rotation(w).to_vec() {
            let u = self.map.other_end(e, w);
            if u != keep && u != other {
                self.map.delete_edge(e);
            }
        }
        let ea = self.edge_to(w, keep);
        let eb = self.edge_to(w, other);
        self.map.contract(ea, keep);
        self.map.contract(eb, keep);
        self.sink[other] = None;
    }

    pub(crate) fn finish(self) -> Result<(PlabicGraph, PerfectOrientation)> {
        let (g, vertex, edge) = self.map.finish_with_maps()?;
        let mut independent = vec![false; g.num_edges()];
        for (old, &new) in edge.iter().enumerate() {
            if new != usize::MAX {
                independent[new] = self.independent[old];
            }
        }
        let mut ranked: Vec<(usize, usize)> = self
            .sink
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.filter(|_| vertex[v] != usize::MAX).map(|p| (p, vertex[v])))
            .collect();
        ranked.sort_unstable();
        let sinks = ranked.into_iter().map(|(_, v)| v).collect();
        let o = PerfectOrientation::new(&g, independent, sinks)?;
        Ok((g, o))
    }
}

type Term = (BigRational, PlabicGraph, PerfectOrientation);

/// The first admissible orientation meeting `constraints` for which `build`
/// yields only admissible terms.
fn first_fit(
    g: &PlabicGraph,
    independent: Vec<usize>,
    sinks: Vec<usize>,
    build: impl Fn(&PerfectOrientation) -> Result<Vec<Term>>,
) -> Result<Option<(PerfectOrientation, Vec<Term>)>> {
    let mut out = Ok(None);
    for_each_admissible_orientation(g, &OrientationConstraints { independent, sinks }, |o| match build(&o) {
        Err(e) => {
            out = Err(e);
            false
        }
        Ok(terms) if terms.iter().all(|(_, h, oh)| is_admissible(h, oh)) => {
            out = Ok(Some((o, terms)));
            false
        }
        Ok(_) => true,
    });
    out
}

/// The two edges at white `w` other than `e`, with their far ends.
fn other_edges(g: &PlabicGraph, w: usize, e: usize) -> Vec<(usize, usize)> {
    g.rotation(w).iter().filter(|&&f| f != e).map(|&f| (f, g.other_end(f, w))).collect()
}

/// Apply the rule for `feature`, or `None` when no admissible orientation of
/// the shape the rule needs produces admissible terms.
pub fn apply_rule(g: &PlabicGraph, feature: &Feature) -> Result<Option<RuleApplication>> {
    let found = match *feature {
        Feature::BoundaryOnly { .. } => first_fit(g, vec![], vec![], |_| Ok(vec![]))?,
        Feature::Leaf { leaf, white } => first_fit(g, vec![g.rotation(leaf)[0]], vec![], |o| {
            let mut s = Surgery::new(g, o);
            s.remove_vertex(white);
            s.remove_vertex(leaf);
            let (h, oh) = s.finish()?;
            Ok(vec![(rat(1, 1), h, oh)])
        })?,
        Feature::DoubleEdge { white, single, double } => {
            let e1 = g.edges_between(white, single)[0];
            first_fit(g, vec![e1], vec![], |o| {
                let mut s = Surgery::new(g, o);
                let pair = g.edges_between(white, double);
                s.map().delete_edge(pair[1]);
                s.map().contract(pair[0], double);
                s.map().contract(e1, double);
                let (h, oh) = s.finish()?;
                Ok(vec![(rat(1, 1), h, oh)])
            })?
        }
        Feature::BoundaryBivalent { vertex, white } => {
            let ew = g.edges_between(vertex, white)[0];
            let rest = other_edges(g, white, ew);
            if rest.len() != 2 || rest[0].1 == rest[1].1 {
                return Ok(None);
            }
            first_fit(g, vec![ew], vec![], |o| {
                (0..2)
                    .map(|k| {
                        let (keep_edge, x) = rest[k];
                        let mut s = Surgery::new(g, o);
                        s.map().delete_edge(rest[1 - k].0);
                        s.map().contract(keep_edge, x);
                        s.map().contract(ew, x);
                        let (h, oh) = s.finish()?;
                        Ok((rat(1, 2), h, oh))
                    })
                    .collect()
            })?
        }
        Feature::Bivalent { vertex, whites } => bivalent(g, vertex, whites)?,
        Feature::Square { whites, blacks } => square(g, whites, blacks)?,
    };
    Ok(found.map(|(lhs, terms)| RuleApplication { feature: feature.clone(), lhs, terms }))
}

/// Black `c` between whites `W1` and `W2`, with `c -> W2`, `u1 -> W1`, and
/// `u2` (the other neighbor of `W1`) a sink; `u3, u4` are the outer neighbors of `W2`.
fn bivalent(g: &PlabicGraph, c: usize, whites: [usize; 2]) -> Result<Option<(PerfectOrientation, Vec<Term>)>> {
    for (w1, w2) in [(whites[0], whites[1]), (whites[1], whites[0])] {
        let to_w1 = g.edges_between(c, w1)[0];
        let to_w2 = g.edges_between(c, w2)[0];
        let outer1 = other_edges(g, w1, to_w1);
        let outer2 = other_edges(g, w2, to_w2);
        let mut us: Vec<usize> = outer1.iter().chain(&outer2).map(|&(_, u)| u).collect();
        us.sort_unstable();
        us.dedup();
        if us.len() != 4 {
            return Ok(None);
        }
        let u34 = [outer2[0].1, outer2[1].1];
        for k in 0..2 {
            let (in_edge, u1) = outer1[k];
            let u2 = outer1[1 - k].1;
            let build = |o: &PerfectOrientation| -> Result<Vec<Term>> {
                let blob = || {
                    let mut s = Surgery::new(g, o);
                    s.map().contract(to_w1, w1);
                    s.map().contract(to_w2, w1);
                    s.set_sink(c, None);
                    s
                };
                let half = rat(1, 2);
                let quarter = rat(1, 4);
                let mut terms = Vec::with_capacity(8);
                // One white vertex on three of the four neighbors.
                for (omit, coefficient) in [(u34[1], half.clone()), (u34[0], half.clone()), (u2, -&half), (u1, half)] {
                    let mut s = blob();
                    let e = s.edge_to(w1, omit);
                    s.map().delete_edge(e);
                    if omit == u1 {
                        let f = s.edge_to(w1, u2);
                        s.set_independent(f, true);
                        let pos = s.sink(u2);
                        s.set_sink(u1, pos);
                        s.set_sink(u2, None);
                    }
                    let (h, oh) = s.finish()?;
                    terms.push((coefficient, h, oh));
                }
                // Identify one of u1, u2 with one of u3, u4; the rest of the blob goes.
                for a in [u1, u2] {
                    for &b in &u34 {
                        let mut s = blob();
                        for u in [u1, u2, u34[0], u34[1]] {
                            if u != a && u != b {
                                let e = s.edge_to(w1, u);
                                s.map().delete_edge(e);
                            }
                        }
                        let (pa, pb) = (s.sink(a), s.sink(b));
                        s.fuse(w1, b, a);
                        if a == u2 {
                            // u1 lost its outgoing edge and becomes a sink in u2's slot.
                            s.set_sink(u1, pa);
                        }
                        s.set_sink(b, pb);
                        let (h, oh) = s.finish()?;
                        let coefficient = if a == u1 { quarter.clone() } else { -&quarter };
                        terms.push((coefficient, h, oh));
                    }
                }
                Ok(terms)
            };
            if let Some(found) = first_fit(g, vec![to_w2, in_edge], vec![u2], build)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

/// Square `v1 u2 v2 u4` with tails `u1 -> v1` and `u3 -> v2`.
fn square(g: &PlabicGraph, whites: [usize; 2], blacks: [usize; 2]) -> Result<Option<(PerfectOrientation, Vec<Term>)>> {
    let [v1, v2] = whites;
    let tail = |w: usize| -> Option<(usize, usize)> {
        let rest: Vec<usize> =
            g.rotation(w).iter().copied().filter(|&e| !blacks.contains(&g.other_end(e, w))).collect();
        (rest.len() == 1).then(|| (rest[0], g.other_end(rest[0], w)))
    };
    let (Some((e1, u1)), Some((e3, u3))) = (tail(v1), tail(v2)) else {
        return Ok(None);
    };
    if u1 == u3 || !g.is_black(u1) || !g.is_black(u3) {
        return Ok(None);
    }
    let [u2, u4] = blacks;
    // Each partition as the list of (white, square vertex kept, tail merged in).
    let singles: [&[(usize, usize, usize)]; 4] = [&[(v2, u2, u3)], &[(v2, u4, u3)], &[(v1, u2, u1)], &[(v1, u4, u1)]];
    let doubles: [&[(usize, usize, usize)]; 4] = [
        &[(v1, u4, u1), (v2, u2, u3)],
        &[(v1, u2, u1), (v2, u4, u3)],
        &[(v1, u2, u1), (v2, u2, u3)],
        &[(v1, u4, u1), (v2, u4, u3)],
    ];
    first_fit(g, vec![e1, e3], vec![], |o| {
        singles
            .iter()
            .map(|l| (l, rat(1, 2)))
            .chain(doubles.iter().map(|l| (l, rat(-1, 4))))
            .map(|(list, coefficient)| {
                let mut s = Surgery::new(g, o);
                for &(w, keep, other) in list.iter() {
                    let pos = s.sink(keep);
                    s.fuse(w, keep, other);
                    s.set_sink(keep, pos);
                }
                let (h, oh) = s.finish()?;
                Ok((coefficient, h, oh))
            })
            .collect()
    })
}

/// Count of white vertices.
pub fn white_count(g: &PlabicGraph) -> usize {
    g.count_color(Color::White)
}

pub(crate) fn skein_error(msg: impl Into<String>) -> Error {
    Error::Skein(msg.into())
}
