use std::collections::VecDeque;

use super::faces::{face_structure, Face, FaceStructure};
use super::graph::PlabicGraph;
use super::trips::{trip, Trip};

/// Faces with their depth: the number of exceedance trips separating a face from `f0`.
#[derive(Clone, Debug)]
pub struct FaceDepthMap {
    pub faces: Vec<Face>,
    pub face_of_dart: Vec<usize>,
    pub depth: Vec<usize>,
    pub f0: usize,
    pub arc_face: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryDirection {
    LeftToRight,
    RightToLeft,
}

/// For each exceedance trip from `i` to `j`, faces inside the closed curve made by
/// the trip and the boundary arc from `i` to `j` get one unit of depth.
pub fn depth_map(g: &PlabicGraph) -> FaceDepthMap {
    let FaceStructure { faces, face_of_dart, f0, arc_face, .. } = face_structure(g);
    let mut depth = vec![0usize; faces.len()];
    for t in exceedance_trips(g) {
        let mut toggles = vec![false; g.num_edges()];
        for &d in &t.darts {
            toggles[d / 2] ^= true;
        }
        let mut parity: Vec<Option<bool>> = vec![None; faces.len()];
        parity[f0] = Some(false);
        let mut queue = VecDeque::from([f0]);
        while let Some(f) = queue.pop_front() {
            let p = parity[f].expect("visited");
            for d in faces[f].darts() {
                let other = face_of_dart[d ^ 1];
                let q = p ^ toggles[d / 2];
                match parity[other] {
                    None => {
                        parity[other] = Some(q);
                        queue.push_back(other);
                    }
                    Some(existing) => {
                        debug_assert_eq!(existing, q, "trip curve parity is inconsistent")
                    }
                }
            }
        }
        for (f, p) in parity.iter().enumerate() {
            if *p == Some(true) {
                depth[f] += 1;
            }
        }
    }
    FaceDepthMap { faces, face_of_dart, depth, f0, arc_face }
}

pub fn exceedance_trips(g: &PlabicGraph) -> Vec<Trip> {
    (1..=g.n()).map(|i| trip(g, i)).filter(|t| t.end > t.start).collect()
}

/// Edges whose two faces have different depth. Oriented toward the black end,
/// an edge is left-to-right when the face on its right is deeper.
pub fn depth_boundary_edges(g: &PlabicGraph) -> Vec<(usize, BoundaryDirection)> {
    let map = depth_map(g);
    depth_boundary_edges_from(g, &map)
}

pub fn depth_boundary_edges_from(g: &PlabicGraph, map: &FaceDepthMap) -> Vec<(usize, BoundaryDirection)> {
    let mut out = Vec::new();
    for e in 0..g.num_edges() {
        let [a, b] = g.edge(e);
        let black = if g.is_black(a) { a } else { b };
        let toward_black = g.dart_from(g.other_end(e, black), e);
        let left = map.depth[map.face_of_dart[toward_black]];
        let right = map.depth[map.face_of_dart[toward_black ^ 1]];
        if left != right {
            let dir = if right > left { BoundaryDirection::LeftToRight } else { BoundaryDirection::RightToLeft };
            out.push((e, dir));
        }
    }
    out
}

/// The same classification read from trips: an edge is a depth boundary when exactly
/// one of its two trips is an exceedance. With boundary labels clockwise, that
/// trip runs toward the black end exactly when the edge is right-to-left.
pub fn depth_boundary_edges_by_trips(g: &PlabicGraph) -> Vec<(usize, BoundaryDirection)> {
    let mut toward_black_exc = vec![0usize; g.num_edges()];
    let mut away_exc = vec![0usize; g.num_edges()];
    for t in exceedance_trips(g) {
        for &d in &t.darts {
            if g.is_black(g.dart_head(d)) {
                toward_black_exc[d / 2] += 1;
            } else {
                away_exc[d / 2] += 1;
            }
        }
    }
    (0..g.num_edges())
        .filter_map(|e| match (toward_black_exc[e], away_exc[e]) {
            (1, 0) => Some((e, BoundaryDirection::RightToLeft)),
            (0, 1) => Some((e, BoundaryDirection::LeftToRight)),
            _ => None,
        })
        .collect()
}
