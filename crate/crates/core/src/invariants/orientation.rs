//! Perfect orientations with ordered sinks, swivel moves and relative signs.
//!
//! An orientation is stored through its independent set `I(O)`, the edges
//! directed from a black vertex to a white one. Every other interior edge
//! points from white to black and boundary edges point inward, so `I(O)`
//! determines all directions.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::poly::permutation_sign;
use crate::error::{Error, Result};
use crate::plabic::{face_structure, PlabicGraph, Relabelling};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PerfectOrientation {
    /// `independent[e]` when `e ∈ I(O)`.
    independent: Vec<bool>,
    /// Sinks in their total order: `sinks[k]` has position `k + 1`.
    sinks: Vec<usize>,
}

impl PerfectOrientation {
    /// Build from an independent set and a sink order, validating against `G`.
    pub fn new(g: &PlabicGraph, independent: Vec<bool>, sinks: Vec<usize>) -> Result<Self> {
        let o = PerfectOrientation { independent, sinks };
        let problems = orientation_violations(g, &o);
        if problems.is_empty() {
            Ok(o)
        } else {
            Err(Error::InvalidOrientation(problems.join("; ")))
        }
    }

    /// Build from an independent set, ordering the sinks canonically.
    pub fn with_canonical_order(g: &PlabicGraph, independent: Vec<bool>) -> Result<Self> {
        let sinks = canonical_sink_order(g, &independent);
        Self::new(g, independent, sinks)
    }

    pub fn is_independent(&self, e: usize) -> bool {
        self.independent[e]
    }

    pub fn independent(&self) -> &[bool] {
        &self.independent
    }

    pub fn independent_edges(&self) -> Vec<usize> {
        (0..self.independent.len()).filter(|&e| self.independent[e]).collect()
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    /// Position `1..d` of `v` in the sink order.
    pub fn sink_position(&self, v: usize) -> Option<usize> {
        self.sinks.iter().position(|&s| s == v).map(|k| k + 1)
    }

    /// The vertex edge `e` points to.
    pub fn head(&self, g: &PlabicGraph, e: usize) -> usize {
        let [a, b] = g.edge(e);
        let black_end = if g.is_black(a) { a } else { b };
        let other = g.other_end(e, black_end);
        if self.independent[e] {
            other
        } else {
            black_end
        }
    }

    pub fn tail(&self, g: &PlabicGraph, e: usize) -> usize {
        g.other_end(e, self.head(g, e))
    }

    /// The same orientation with a different sink order.
    pub fn reordered(&self, sinks: Vec<usize>) -> Result<Self> {
        let mut a = sinks.clone();
        let mut b = self.sinks.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::InvalidOrientation("reordering must permute the sinks".into()));
        }
        Ok(PerfectOrientation { independent: self.independent.clone(), sinks })
    }

    /// `{"independent": [edge ids], "sinks": [vertex ids]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "independent": self.independent_edges(), "sinks": self.sinks })
    }

    /// Parse the format of [`PerfectOrientation::to_json`] and validate against `G`.
    pub fn from_json(g: &PlabicGraph, value: &serde_json::Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("orientation: {msg}"));
        let ids = |key: &str| -> Result<Vec<usize>> {
            value[key]
                .as_array()
                .ok_or_else(|| bad(&format!("{key} must be a list")))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad(&format!("{key} entries must be ids"))))
                .collect()
        };
        let mut independent = vec![false; g.num_edges()];
        for e in ids("independent")? {
            *independent.get_mut(e).ok_or_else(|| bad("edge index out of range"))? = true;
        }
        Self::new(g, independent, ids("sinks")?)
    }

    /// The orientation carried to `target` along `r`, keeping the sink order.
    pub fn relabelled(&self, target: &PlabicGraph, r: &Relabelling) -> Result<Self> {
        let mut independent = vec![false; target.num_edges()];
        for (old, &new) in r.edge.iter().enumerate() {
            independent[new] = self.independent[old];
        }
        let sinks = self.sinks.iter().map(|&s| r.vertex[s]).collect();
        Self::new(target, independent, sinks)
    }
}

/// Sinks sorted by their smallest adjacent boundary label, then by vertex id.
pub fn canonical_sink_order(g: &PlabicGraph, independent: &[bool]) -> Vec<usize> {
    let mut sinks: Vec<usize> =
        g.interior_vertices().filter(|&v| g.is_black(v) && g.rotation(v).iter().all(|&e| !independent[e])).collect();
    let key = |v: usize| {
        let label = g.neighbors(v).into_iter().filter(|&u| g.is_boundary(u)).min().unwrap_or(usize::MAX);
        (label, v)
    };
    sinks.sort_by_key(|&v| key(v));
    sinks
}

/// Every way `O` fails to be a perfect orientation of `G`.
pub fn orientation_violations(g: &PlabicGraph, o: &PerfectOrientation) -> Vec<String> {
    let mut out = Vec::new();
    if o.independent.len() != g.num_edges() {
        out.push(format!("{} edge flags for {} edges", o.independent.len(), g.num_edges()));
        return out;
    }
    for (e, &[a, b]) in g.edges().iter().enumerate() {
        let black_white = (g.is_black(a) && g.is_white(b)) || (g.is_white(a) && g.is_black(b));
        let touches_black = g.is_black(a) || g.is_black(b);
        if !touches_black {
            out.push(format!("edge {e} has no black end"));
        } else if o.independent[e] && !black_white {
            out.push(format!("edge {e} cannot point away from a black vertex"));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let count = |v: usize| g.rotation(v).iter().filter(|&&e| o.independent[e]).count();
    for v in g.interior_vertices() {
        if g.is_white(v) && count(v) != 1 {
            out.push(format!("white vertex {v} has {} ingoing edges", count(v)));
        }
        if g.is_black(v) && count(v) > 1 {
            out.push(format!("black vertex {v} has {} outgoing edges", count(v)));
        }
    }
    let mut actual: Vec<usize> = g.interior_vertices().filter(|&v| g.is_black(v) && count(v) == 0).collect();
    let mut listed = o.sinks.clone();
    listed.sort_unstable();
    actual.sort_unstable();
    if listed != actual {
        out.push(format!("sink order {:?} does not list the sinks {actual:?}", o.sinks));
    }
    if out.is_empty() {
        if let Some(v) = unreachable_vertex(g, o) {
            out.push(format!("vertex {v} has no directed path to a sink"));
        }
    }
    out
}

fn unreachable_vertex(g: &PlabicGraph, o: &PerfectOrientation) -> Option<usize> {
    let mut reach = vec![false; g.num_vertices()];
    let mut queue: VecDeque<usize> = o.sinks.iter().copied().collect();
    for &s in &o.sinks {
        reach[s] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &e in g.rotation(v) {
            if o.head(g, e) == v {
                let u = o.tail(g, e);
                if !reach[u] {
                    reach[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    (0..g.num_vertices()).find(|&v| !reach[v])
}

/// Edges forced into `I(O)` and black vertices forced to be sinks.
#[derive(Clone, Debug, Default)]
pub struct OrientationConstraints {
    pub independent: Vec<usize>,
    pub sinks: Vec<usize>,
}

/// Search independent sets white by white; `visit` returns `false` to stop.
fn search(g: &PlabicGraph, constraints: &OrientationConstraints, mut visit: impl FnMut(PerfectOrientation) -> bool) {
    let whites: Vec<usize> = g.interior_vertices().filter(|&v| g.is_white(v)).collect();
    let mut independent = vec![false; g.num_edges()];
    let mut used = vec![false; g.num_vertices()];
    let mut forced = vec![false; g.num_edges()];
    for &e in &constraints.independent {
        forced[e] = true;
    }
    for &s in &constraints.sinks {
        used[s] = true;
    }
    struct Ctx<'a> {
        g: &'a PlabicGraph,
        whites: &'a [usize],
        forced: &'a [bool],
    }
    fn rec(
        ctx: &Ctx,
        k: usize,
        independent: &mut Vec<bool>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(PerfectOrientation) -> bool,
    ) -> bool {
        let (g, whites) = (ctx.g, ctx.whites);
        if k == whites.len() {
            let sinks = canonical_sink_order(g, independent);
            let o = PerfectOrientation { independent: independent.clone(), sinks };
            if unreachable_vertex(g, &o).is_none() {
                return visit(o);
            }
            return true;
        }
        let w = whites[k];
        let pinned = g.rotation(w).iter().any(|&e| ctx.forced[e]);
        for &e in g.rotation(w) {
            let b = g.other_end(e, w);
            if g.is_black(b) && !used[b] && !independent[e] && (!pinned || ctx.forced[e]) {
                used[b] = true;
                independent[e] = true;
                let go_on = rec(ctx, k + 1, independent, used, visit);
                independent[e] = false;
                used[b] = false;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    if g.edges().iter().any(|&[a, b]| !(g.is_black(a) || g.is_black(b))) {
        return;
    }
    for &e in &constraints.independent {
        let [a, b] = g.edge(e);
        if !((g.is_black(a) && g.is_white(b)) || (g.is_white(a) && g.is_black(b))) {
            return;
        }
    }
    let ctx = Ctx { g, whites: &whites, forced: &forced };
    rec(&ctx, 0, &mut independent, &mut used, &mut visit);
}

/// An interior face of degree less than 6 whose boundary is a directed cycle.
/// Relative signs only relate `[G, O]` across orientations without one; on
/// augmented webs no such face exists.
pub fn directed_short_face(g: &PlabicGraph, o: &PerfectOrientation) -> Option<usize> {
    let fs = face_structure(g);
    fs.faces.iter().position(|f| {
        if f.touches_boundary() || f.degree() >= 6 {
            return false;
        }
        let darts: Vec<usize> = f.darts().collect();
        darts.iter().all(|&d| o.tail(g, d / 2) == g.dart_tail(d))
            || darts.iter().all(|&d| o.head(g, d / 2) == g.dart_tail(d))
    })
}

pub fn is_admissible(g: &PlabicGraph, o: &PerfectOrientation) -> bool {
    directed_short_face(g, o).is_none()
}

/// The first admissible perfect orientation in search order, with canonical sink order.
pub fn find_perfect_orientation(g: &PlabicGraph) -> Result<PerfectOrientation> {
    find_constrained_orientation(g, &OrientationConstraints::default()).ok_or(Error::NotOrientable)
}

/// The first admissible perfect orientation in search order satisfying `constraints`.
pub fn find_constrained_orientation(
    g: &PlabicGraph,
    constraints: &OrientationConstraints,
) -> Option<PerfectOrientation> {
    let mut found = None;
    for_each_admissible_orientation(g, constraints, |o| {
        found = Some(o);
        false
    });
    found
}

/// Visit admissible orientations satisfying `constraints` in search order
/// until `visit` returns `false`.
pub fn for_each_admissible_orientation(
    g: &PlabicGraph,
    constraints: &OrientationConstraints,
    mut visit: impl FnMut(PerfectOrientation) -> bool,
) {
    search(g, constraints, |o| !is_admissible(g, &o) || visit(o));
}

/// All perfect orientations up to sink order, each with canonical sink order.
pub fn enumerate_perfect_orientations(g: &PlabicGraph) -> Vec<PerfectOrientation> {
    let mut out = Vec::new();
    search(g, &OrientationConstraints::default(), |o| {
        out.push(o);
        true
    });
    out
}

/// Reverse the in-edge `in_edge` (from black `b1`) and the out-edge `out_edge`
/// (to black `b2`) at white `v`. The old sink `b2` is replaced by `b1` in the order.
pub fn swivel(
    g: &PlabicGraph,
    o: &PerfectOrientation,
    v: usize,
    in_edge: usize,
    out_edge: usize,
) -> Result<PerfectOrientation> {
    let bad = |msg: &str| Err(Error::InvalidOrientation(format!("invalid swivel: {msg}")));
    if !g.is_white(v) {
        return bad("not a white vertex");
    }
    if !g.rotation(v).contains(&in_edge) || !g.rotation(v).contains(&out_edge) || in_edge == out_edge {
        return bad("edges must be two distinct edges at the vertex");
    }
    if !o.independent[in_edge] || o.independent[out_edge] {
        return bad("needs the ingoing and one outgoing edge");
    }
    let b1 = g.other_end(in_edge, v);
    let b2 = g.other_end(out_edge, v);
    if b1 == b2 {
        return bad("both edges lead to the same black vertex");
    }
    let Some(pos) = o.sinks.iter().position(|&s| s == b2) else {
        return bad("the outgoing edge does not lead to a sink");
    };
    let mut independent = o.independent.clone();
    independent[in_edge] = false;
    independent[out_edge] = true;
    let mut sinks = o.sinks.clone();
    sinks[pos] = b1;
    let next = PerfectOrientation { independent, sinks };
    if let Some(u) = unreachable_vertex(g, &next) {
        return Err(Error::InvalidOrientation(format!("invalid swivel: vertex {u} loses its path to a sink")));
    }
    Ok(next)
}

/// `sign(O1, O2)`: the parity of a swivel sequence taking `O1` to `O2` times
/// the sign of the remaining sink permutation. The sequence is read off
/// `I(O1) Δ I(O2)`: a path with `k` white vertices costs `k` swivels and pairs
/// an old sink with a new one, a cycle of length `2m` costs `m + 1`.
pub fn orientation_sign(g: &PlabicGraph, o1: &PerfectOrientation, o2: &PerfectOrientation) -> Result<i32> {
    for o in [o1, o2] {
        let problems = orientation_violations(g, o);
        if !problems.is_empty() {
            return Err(Error::InvalidOrientation(problems.join("; ")));
        }
    }
    let m = g.num_edges();
    let diff: Vec<bool> = (0..m).map(|e| o1.independent[e] != o2.independent[e]).collect();
    let incident = |v: usize| -> Vec<usize> { g.rotation(v).iter().copied().filter(|&e| diff[e]).collect() };
    let mut seen = vec![false; m];
    let mut swivels = 0usize;
    // Position inherited by each sink of O2 after the swivels.
    let mut inherited: Vec<(usize, usize)> = Vec::new();
    for (k, &s) in o1.sinks.iter().enumerate() {
        if o2.sinks.contains(&s) {
            inherited.push((s, k));
            continue;
        }
        let mut v = s;
        let mut length = 0;
        loop {
            let Some(&e) = incident(v).iter().find(|&&e| !seen[e]) else {
                break;
            };
            seen[e] = true;
            length += 1;
            v = g.other_end(e, v);
        }
        if length % 2 != 0 || !o2.sinks.contains(&v) {
            return Err(Error::InvalidOrientation("symmetric difference path does not end at a new sink".into()));
        }
        swivels += length / 2;
        inherited.push((v, k));
    }
    for e in 0..m {
        if diff[e] && !seen[e] {
            let start = g.edge(e)[0];
            let mut v = start;
            let mut length = 0;
            while let Some(&f) = incident(v).iter().find(|&&f| !seen[f]) {
                seen[f] = true;
                length += 1;
                v = g.other_end(f, v);
            }
            if v != start || length % 2 != 0 {
                return Err(Error::InvalidOrientation("symmetric difference has a stray component".into()));
            }
            swivels += length / 2 + 1;
        }
    }
    inherited.sort_by_key(|&(_, k)| k);
    let order: Vec<usize> = inherited.iter().map(|&(v, _)| o2.sink_position(v).expect("sink of O2")).collect();
    let parity = if swivels.is_multiple_of(2) { 1 } else { -1 };
    Ok(parity * permutation_sign(&order))
}
