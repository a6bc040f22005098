use super::graph::{Dart, PlabicGraph};

/// One step of a face boundary: a graph dart, or the boundary arc between
/// consecutive labels (`from` → `to`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceStep {
    Dart(Dart),
    Arc { from: usize, to: usize },
}

/// A face of the disk embedding, traced with the face on the left of each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub steps: Vec<FaceStep>,
}

impl Face {
    /// Graph darts on this face, in order.
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.steps.iter().filter_map(|s| match s {
            FaceStep::Dart(d) => Some(*d),
            FaceStep::Arc { .. } => None,
        })
    }

    /// Number of graph edges on the face, counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.darts().count()
    }

    pub fn touches_boundary(&self) -> bool {
        self.steps.iter().any(|s| matches!(s, FaceStep::Arc { .. }))
    }
}

/// Faces of `G` inside the disk, plus the face of every dart.
#[derive(Clone, Debug)]
pub struct FaceStructure {
    pub faces: Vec<Face>,
    pub face_of_dart: Vec<usize>,
    /// Face touching the boundary arc from label `n` to label 1.
    pub f0: usize,
    /// `arc_face[k - 1]` is the face touching the arc between labels `k` and `k + 1`.
    pub arc_face: Vec<usize>,
    pub euler_ok: bool,
}

/// Trace faces of the map obtained by adding the boundary circle.
///
/// At boundary label `k` the extended clockwise rotation is
/// `[arc to k + 1, graph edge, arc to k - 1]`; arcs traversed clockwise belong
/// to the outer face and are skipped.
pub fn face_structure(g: &PlabicGraph) -> FaceStructure {
    let n = g.n();
    let num_darts = 2 * g.num_edges();
    let mut face_of_dart = vec![usize::MAX; num_darts];
    let mut faces = Vec::new();
    // arc_start[k] marks the counterclockwise arc leaving label k + 2 toward k + 1.
    let mut arc_face = vec![usize::MAX; n];

    // Successor of arriving at vertex v along edge e (graph edge).
    let step_after_edge = |v: usize, e: usize| -> FaceStep {
        if g.is_boundary(v) {
            // Next clockwise after the graph edge is the arc to label v (i.e. k - 1).
            let k = v + 1;
            let to = if k == 1 { n } else { k - 1 };
            FaceStep::Arc { from: k, to }
        } else {
            FaceStep::Dart(g.dart_from(v, g.next_cw(v, e)))
        }
    };

    let trace = |start: FaceStep, faces: &mut Vec<Face>, face_of_dart: &mut Vec<usize>, arc_face: &mut Vec<usize>| {
        let id = faces.len();
        let mut steps = Vec::new();
        let mut cur = start;
        loop {
            match cur {
                FaceStep::Dart(d) => {
                    if face_of_dart[d] != usize::MAX {
                        break;
                    }
                }
                FaceStep::Arc { from, .. } => {
                    if arc_face[from - 1] != usize::MAX {
                        break;
                    }
                }
            }
            steps.push(cur);
            cur = match cur {
                FaceStep::Dart(d) => {
                    face_of_dart[d] = id;
                    step_after_edge(g.dart_head(d), d / 2)
                }
                FaceStep::Arc { from, to } => {
                    // Counterclockwise arc from `from` to `to = from - 1`; at label
                    // `to` the next clockwise element after the arc to `to + 1` is the
                    // graph edge.
                    arc_face[from - 1] = id;
                    let e = g.boundary_edge(to);
                    FaceStep::Dart(g.dart_from(to - 1, e))
                }
            };
        }
        faces.push(Face { steps });
    };

    for k in 1..=n {
        if arc_face[k - 1] == usize::MAX {
            let to = if k == 1 { n } else { k - 1 };
            trace(FaceStep::Arc { from: k, to }, &mut faces, &mut face_of_dart, &mut arc_face);
        }
    }
    for d in 0..num_darts {
        if face_of_dart[d] == usize::MAX {
            trace(FaceStep::Dart(d), &mut faces, &mut face_of_dart, &mut arc_face);
        }
    }
    // arc_face is indexed by the counterclockwise arc's starting label k (arc k → k-1);
    // re-index so entry k - 1 names the arc between k and k + 1.
    let arc_between: Vec<usize> = (1..=n).map(|k| arc_face[if k == n { 0 } else { k }]).collect();
    let vertices = g.num_vertices() as i64;
    let edges = (g.num_edges() + n) as i64;
    let euler_ok = vertices - edges + (faces.len() as i64 + 1) == 2;
    FaceStructure { f0: arc_between[n - 1], faces, face_of_dart, arc_face: arc_between, euler_ok }
}

/// Faces of `G` (without any face data beyond their boundary steps).
pub fn faces(g: &PlabicGraph) -> Vec<Face> {
    face_structure(g).faces
}
