//! Augmented webs: normal plabic graphs with no interior face of degree below
//! six and no black vertex of degree below three. They are in bijection with
//! 3-weakly noncrossing partitions through `phi`, inverted with the unique
//! valid red/blue/black coloring.

mod coloring;
mod inverse;
mod phi;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plabic::{
    canonical_encoding, canonicalize, face_structure, reflect, rotate, validate_normal, Color, PlabicGraph,
};
use crate::tableaux::{enumerate_wnc, FlamingoShape};

pub use coloring::{check_valid_coloring, valid_coloring};
pub use inverse::phi_inverse;
pub use phi::{phi, phi_with_coloring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
    Black,
}

/// A validated augmented web, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AugmentedWeb {
    graph: PlabicGraph,
}

impl AugmentedWeb {
    pub fn new(g: &PlabicGraph) -> Result<Self> {
        let problems = augmented_web_violations(g);
        if !problems.is_empty() {
            return Err(Error::InvalidGraph(problems.join("; ")));
        }
        Ok(AugmentedWeb { graph: canonicalize(g)?.0 })
    }

    pub(crate) fn from_canonical(graph: PlabicGraph) -> Self {
        AugmentedWeb { graph }
    }

    pub fn graph(&self) -> &PlabicGraph {
        &self.graph
    }

    /// `#black - #white`, which equals the number of exceedances.
    pub fn d(&self) -> usize {
        self.graph.count_color(Color::Black) - self.graph.count_color(Color::White)
    }

    pub fn encoding(&self) -> Vec<u8> {
        canonical_encoding(&self.graph).expect("canonical graphs are connected to the boundary")
    }

    pub fn rotate(&self) -> AugmentedWeb {
        AugmentedWeb { graph: canonicalize(&rotate(&self.graph)).expect("connected").0 }
    }

    pub fn reflect(&self) -> AugmentedWeb {
        AugmentedWeb { graph: canonicalize(&reflect(&self.graph)).expect("connected").0 }
    }
}

/// Diagnostics for each violated augmented-web condition; empty when `G` is one.
pub fn augmented_web_violations(g: &PlabicGraph) -> Vec<String> {
    let mut out = validate_normal(g);
    for v in g.interior_vertices() {
        if g.is_black(v) && g.degree(v) < 3 {
            out.push(format!("black vertex {v} has degree {}", g.degree(v)));
        }
    }
    for (f, face) in face_structure(g).faces.iter().enumerate() {
        if !face.touches_boundary() && face.degree() < 6 {
            out.push(format!("interior face {f} has degree {}", face.degree()));
        }
    }
    out
}

pub fn is_augmented_web(g: &PlabicGraph) -> bool {
    augmented_web_violations(g).is_empty()
}

/// `AW(n, d)` as the image of `phi`, in the order of `WNC(n, d, 3)`.
pub fn enumerate_aw(n: usize, d: usize) -> Result<Vec<AugmentedWeb>> {
    let shape = FlamingoShape::sl3(n, d)?;
    let webs: Vec<AugmentedWeb> = enumerate_wnc(&shape).par_iter().map(phi).collect::<Result<_>>()?;
    let mut seen = std::collections::HashSet::new();
    for w in &webs {
        if !seen.insert(w.encoding()) {
            return Err(Error::InvalidGraph("phi produced the same web twice".into()));
        }
    }
    Ok(webs)
}

/// Orbits of the rotation action, as lists of indices into `webs`, in order of
/// smallest member.
pub fn rotation_orbits(webs: &[AugmentedWeb]) -> Vec<Vec<usize>> {
    let index: HashMap<Vec<u8>, usize> = webs.iter().enumerate().map(|(i, w)| (w.encoding(), i)).collect();
    let mut seen = vec![false; webs.len()];
    let mut orbits = Vec::new();
    for start in 0..webs.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut w = webs[start].rotate();
        loop {
            let i = *index.get(&w.encoding()).expect("AW(n, d) is closed under rotation");
            if i == start {
                break;
            }
            seen[i] = true;
            orbit.push(i);
            w = w.rotate();
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Number of webs fixed by rotating `i` times.
pub fn fixed_points(webs: &[AugmentedWeb], i: usize) -> usize {
    webs.par_iter()
        .filter(|w| {
            let mut r = (*w).clone();
            for _ in 0..i {
                r = r.rotate();
            }
            r.encoding() == w.encoding()
        })
        .count()
}
