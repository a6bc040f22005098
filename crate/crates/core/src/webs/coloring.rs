use crate::error::{Error, Result};
use crate::plabic::{depth_boundary_edges_from, depth_map, BoundaryDirection, FaceDepthMap, FaceStep, PlabicGraph};

use super::{AugmentedWeb, EdgeColor};

/// The unique valid coloring of an augmented web, found by the forced steps:
/// depth-boundary edges first, then edges that cannot be blue, then alternating
/// blue/black along the remaining paths from their interior ends.
pub fn valid_coloring(w: &AugmentedWeb) -> Result<Vec<EdgeColor>> {
    let g = w.graph();
    let map = depth_map(g);
    let mut color: Vec<Option<EdgeColor>> = vec![None; g.num_edges()];
    for (e, dir) in depth_boundary_edges_from(g, &map) {
        match dir {
            BoundaryDirection::RightToLeft => color[e] = Some(EdgeColor::Red),
            BoundaryDirection::LeftToRight if g.is_boundary_edge(e) => color[e] = Some(EdgeColor::Black),
            BoundaryDirection::LeftToRight => {}
        }
    }
    let red_at = |color: &[Option<EdgeColor>], v: usize| -> Result<usize> {
        let reds: Vec<usize> = g.rotation(v).iter().copied().filter(|&e| color[e] == Some(EdgeColor::Red)).collect();
        match reds.as_slice() {
            [r] => Ok(*r),
            _ => Err(Error::Coloring(format!("vertex {v} has {} red edges after step 1", reds.len()))),
        }
    };
    // A blue edge must sit next to the red edge at each interior end.
    for e in 0..g.num_edges() {
        if color[e].is_some() {
            continue;
        }
        for v in g.edge(e) {
            if g.is_boundary(v) {
                continue;
            }
            let r = red_at(&color, v)?;
            if g.next_cw(v, r) != e && g.prev_cw(v, r) != e {
                color[e] = Some(EdgeColor::Black);
            }
        }
    }
    // No red-blue-red run along a face.
    for face in &map.faces {
        let steps = &face.steps;
        let len = steps.len();
        let is_red = |s: &FaceStep, color: &[Option<EdgeColor>]| match s {
            FaceStep::Dart(d) => color[d / 2] == Some(EdgeColor::Red),
            FaceStep::Arc { .. } => false,
        };
        for i in 0..len {
            if let FaceStep::Dart(d) = steps[i] {
                if color[d / 2].is_none()
                    && is_red(&steps[(i + len - 1) % len], &color)
                    && is_red(&steps[(i + 1) % len], &color)
                {
                    color[d / 2] = Some(EdgeColor::Black);
                }
            }
        }
    }
    // Remaining edges form paths; alternate from an interior end.
    let mut uncolored_at: Vec<Vec<usize>> = vec![Vec::new(); g.num_vertices()];
    for e in 0..g.num_edges() {
        if color[e].is_none() {
            for v in g.edge(e) {
                uncolored_at[v].push(e);
            }
        }
    }
    if let Some(v) = g.interior_vertices().find(|&v| uncolored_at[v].len() > 2) {
        return Err(Error::Coloring(format!("vertex {v} has more than two uncolored edges")));
    }
    let mut visited = vec![false; g.num_edges()];
    let ends: Vec<usize> = g.interior_vertices().filter(|&v| uncolored_at[v].len() == 1).collect();
    for start in ends {
        let first = uncolored_at[start][0];
        if visited[first] {
            continue;
        }
        let mut path = Vec::new();
        let (mut v, mut e) = (start, first);
        loop {
            visited[e] = true;
            path.push(e);
            let next_v = g.other_end(e, v);
            if g.is_boundary(next_v) || uncolored_at[next_v].len() == 1 {
                if !g.is_boundary(next_v) && path.len() % 2 == 0 {
                    return Err(Error::Coloring("even path between interior vertices".into()));
                }
                break;
            }
            let next_e = uncolored_at[next_v].iter().copied().find(|&f| f != e).expect("degree two");
            v = next_v;
            e = next_e;
        }
        for (k, &e) in path.iter().enumerate() {
            color[e] = Some(if k % 2 == 0 { EdgeColor::Blue } else { EdgeColor::Black });
        }
    }
    if let Some(e) = (0..g.num_edges()).find(|&e| color[e].is_none()) {
        return Err(Error::Coloring(format!("edge {e} lies on an uncolored cycle or boundary-to-boundary path")));
    }
    let colors: Vec<EdgeColor> = color.into_iter().map(|c| c.expect("all colored")).collect();
    let problems = coloring_violations(g, &map, &colors);
    if !problems.is_empty() {
        return Err(Error::Coloring(problems.join("; ")));
    }
    Ok(colors)
}

/// Every violated condition of a valid coloring.
pub fn check_valid_coloring(g: &PlabicGraph, colors: &[EdgeColor]) -> Vec<String> {
    coloring_violations(g, &depth_map(g), colors)
}

fn coloring_violations(g: &PlabicGraph, map: &FaceDepthMap, colors: &[EdgeColor]) -> Vec<String> {
    let mut out = Vec::new();
    for v in g.interior_vertices() {
        let rot = g.rotation(v);
        let count = |c: EdgeColor| rot.iter().filter(|&&e| colors[e] == c).count();
        if count(EdgeColor::Red) != 1 || count(EdgeColor::Blue) != 1 || count(EdgeColor::Black) == 0 {
            out.push(format!("vertex {v} does not have one red, one blue and a black edge"));
            continue;
        }
        let r = *rot.iter().find(|&&e| colors[e] == EdgeColor::Red).expect("counted");
        let b = *rot.iter().find(|&&e| colors[e] == EdgeColor::Blue).expect("counted");
        if g.next_cw(v, r) != b && g.prev_cw(v, r) != b {
            out.push(format!("red and blue edges at vertex {v} share no face"));
        }
    }
    for (e, dir) in depth_boundary_edges_from(g, map) {
        match dir {
            BoundaryDirection::RightToLeft if colors[e] != EdgeColor::Red => {
                out.push(format!("right-to-left depth boundary edge {e} is not red"))
            }
            BoundaryDirection::LeftToRight if g.is_boundary_edge(e) && colors[e] != EdgeColor::Black => {
                out.push(format!("left-to-right boundary edge {e} is not black"))
            }
            _ => {}
        }
    }
    for (f, face) in map.faces.iter().enumerate() {
        let steps = &face.steps;
        let len = steps.len();
        let col = |s: &FaceStep| match s {
            FaceStep::Dart(d) => Some(colors[d / 2]),
            FaceStep::Arc { .. } => None,
        };
        for i in 0..len {
            if col(&steps[i]) == Some(EdgeColor::Blue)
                && col(&steps[(i + len - 1) % len]) == Some(EdgeColor::Red)
                && col(&steps[(i + 1) % len]) == Some(EdgeColor::Red)
            {
                out.push(format!("face {f} has a red-blue-red run"));
            }
        }
    }
    out
}
