//! Plabic graphs in a disk, stored as rotation systems.
//!
//! Each interior vertex keeps its incident edges in clockwise order and the
//! boundary labels `1..n` run clockwise. Faces are traced after closing the
//! boundary circle, so boundary faces carry their arcs. Trips turn to the
//! previous edge in clockwise order at black vertices and to the next one at
//! white vertices; with this chirality the tripod has trip permutation `3 1 2`
//! and a single exceedance.

mod canonical;
mod depth;
mod faces;
mod graph;
mod map;
mod trips;

pub use canonical::{canonical_encoding, canonicalize, isomorphic, reflect, rotate, Relabelling};
pub use depth::{
    depth_boundary_edges, depth_boundary_edges_by_trips, depth_boundary_edges_from, depth_map, exceedance_trips,
    BoundaryDirection, FaceDepthMap,
};
pub use faces::{face_structure, faces, Face, FaceStep, FaceStructure};
pub use graph::{boundary_position, Color, Dart, Endpoint, Kind, PlabicGraph};
pub use map::MapBuilder;
pub use trips::{exceedances, roundtrips, scan_bad_features, trip, trip_permutation, trip_successor, BadFeature, Trip};

/// Every way in which `G` fails to be a normal plabic graph in the disk; empty
/// when it is one.
pub fn validate_normal(g: &PlabicGraph) -> Vec<String> {
    let mut out = Vec::new();
    for v in g.interior_vertices() {
        if g.is_white(v) && g.degree(v) != 3 {
            out.push(format!("white vertex {v} has degree {}", g.degree(v)));
        }
        if g.degree(v) == 0 {
            out.push(format!("vertex {v} is isolated"));
        }
    }
    for (e, &[a, b]) in g.edges().iter().enumerate() {
        match (g.kind(a), g.kind(b)) {
            (Kind::Boundary, Kind::Boundary) => out.push(format!("edge {e} joins two boundary vertices")),
            (Kind::Boundary, Kind::Interior(Color::White)) | (Kind::Interior(Color::White), Kind::Boundary) => {
                out.push(format!("edge {e} joins a boundary vertex to a white vertex"))
            }
            (Kind::Interior(x), Kind::Interior(y)) if x == y => {
                out.push(format!("edge {e} has same-colored adjacency"))
            }
            _ => {}
        }
    }
    if !face_structure(g).euler_ok {
        out.push("Euler characteristic check failed: the map is not a connected disk embedding".into());
    }
    out
}

/// Convenience: the tripod or, more generally, one black vertex joined to all
/// boundary vertices.
pub fn star(n: usize) -> PlabicGraph {
    let edges: Vec<[usize; 2]> = (0..n).map(|b| [b, n]).collect();
    PlabicGraph::new(n, vec![Color::Black], edges, vec![(0..n).collect()]).expect("star is well formed")
}
