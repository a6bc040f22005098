//! Clasped `SL3` webs and their invariants as sums over proper edge colorings.

use num_rational::BigRational;
use serde_json::{json, Value};

use super::WeblikeSubgraph;
use crate::error::{Error, Result};
use crate::invariants::{permutation_sign, permutations, Monomial, Polynomial};
use crate::plabic::{Color, PlabicGraph};

/// An endpoint of an edge of a [`ClaspedSl3Web`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    /// Boundary label `1..=n`.
    Boundary(usize),
    /// Index into the interior vertices.
    Vertex(usize),
}

/// A planar bipartite trivalent graph with `n` boundary points, some of which
/// (the clasps) carry no edge. `loops` counts closed components without vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaspedSl3Web {
    n: usize,
    colors: Vec<Color>,
    edges: Vec<[End; 2]>,
    rotation: Vec<[usize; 3]>,
    loops: usize,
}

impl ClaspedSl3Web {
    /// `rotation[v]` lists the edges at vertex `v` clockwise.
    pub fn new(
        n: usize,
        colors: Vec<Color>,
        edges: Vec<[End; 2]>,
        rotation: Vec<[usize; 3]>,
        loops: usize,
    ) -> Result<Self> {
        let web = ClaspedSl3Web { n, colors, edges, rotation, loops };
        let problems = web.violations();
        if problems.is_empty() {
            Ok(web)
        } else {
            Err(Error::InvalidGraph(problems.join("; ")))
        }
    }

    /// Every way the web fails to be bipartite, trivalent, or to touch each
    /// boundary point at most once.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut boundary_use = vec![0usize; self.n + 1];
        let mut incidence = vec![0usize; self.colors.len()];
        for (e, ends) in self.edges.iter().enumerate() {
            for end in ends {
                match *end {
                    End::Boundary(k) if k == 0 || k > self.n => out.push(format!("edge {e} ends at boundary {k}")),
                    End::Boundary(k) => boundary_use[k] += 1,
                    End::Vertex(v) if v >= self.colors.len() => out.push(format!("edge {e} ends at vertex {v}")),
                    End::Vertex(v) => incidence[v] += 1,
                }
            }
            if let [End::Vertex(a), End::Vertex(b)] = *ends {
                if a < self.colors.len() && b < self.colors.len() && self.colors[a] == self.colors[b] {
                    out.push(format!("edge {e} joins two vertices of the same color"));
                }
            }
        }
        for k in 1..=self.n {
            if boundary_use[k] > 1 {
                out.push(format!("boundary {k} has {} edges", boundary_use[k]));
            }
        }
        if self.rotation.len() != self.colors.len() {
            out.push("one rotation per vertex is required".into());
            return out;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            if incidence[v] != 3 {
                out.push(format!("vertex {v} has degree {}", incidence[v]));
            }
            for &e in rot {
                if e >= self.edges.len() || !self.edges[e].contains(&End::Vertex(v)) {
                    out.push(format!("rotation at vertex {v} lists edge {e}, which does not meet it"));
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[[End; 2]] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> [usize; 3] {
        self.rotation[v]
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    /// Boundary labels without an edge, increasing.
    pub fn clasps(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for ends in &self.edges {
            for end in ends {
                if let End::Boundary(k) = *end {
                    used[k] = true;
                }
            }
        }
        (1..=self.n).filter(|&k| !used[k]).collect()
    }

    pub fn to_json(&self) -> Value {
        let end = |x: End| match x {
            End::Boundary(k) => json!({ "boundary": k }),
            End::Vertex(v) => json!({ "vertex": v }),
        };
        json!({
            "n": self.n,
            "vertices": self.colors,
            "edges": self.edges.iter().map(|&[a, b]| json!([end(a), end(b)])).collect::<Vec<_>>(),
            "rotation": self.rotation,
            "loops": self.loops,
            "clasps": self.clasps(),
        })
    }
}

/// Delete edges of multiplicity 0 or 3 and contract each path alternating
/// between multiplicities 1 and 2 to a single edge.
pub fn contract_to_sl3(w: &WeblikeSubgraph) -> Result<ClaspedSl3Web> {
    let g: &PlabicGraph = w.host();
    let mult = w.multiplicity();
    let kept = |e: usize| mult[e] == 1 || mult[e] == 2;
    let kept_at = |v: usize| -> Vec<usize> { g.rotation(v).iter().copied().filter(|&e| kept(e)).collect() };
    // Interior vertices with three kept edges become web vertices.
    let mut index = vec![None; g.num_vertices()];
    let mut colors = Vec::new();
    for v in g.interior_vertices() {
        if kept_at(v).len() == 3 {
            index[v] = Some(colors.len());
            colors.push(g.color(v).expect("interior"));
        }
    }
    let terminal = |v: usize| -> Option<End> {
        if g.is_boundary(v) {
            Some(End::Boundary(v + 1))
        } else {
            index[v].map(End::Vertex)
        }
    };
    let mut visited = vec![false; g.num_edges()];
    let mut edges = Vec::new();
    let mut first_edge = vec![None; g.num_edges()];
    let starts: Vec<usize> = (0..g.num_vertices()).filter(|&v| terminal(v).is_some()).collect();
    for &t in &starts {
        for e in kept_at(t) {
            if visited[e] {
                continue;
            }
            let (mut cur, mut via) = (g.other_end(e, t), e);
            visited[e] = true;
            let mut last = e;
            while terminal(cur).is_none() {
                let next = kept_at(cur)
                    .into_iter()
                    .find(|&f| f != via)
                    .ok_or_else(|| Error::InvalidGraph(format!("vertex {cur} ends a path of the weblike subgraph")))?;
                visited[next] = true;
                cur = g.other_end(next, cur);
                via = next;
                last = next;
            }
            first_edge[e] = Some(edges.len());
            first_edge[last] = Some(edges.len());
            edges.push([terminal(t).expect("terminal"), terminal(cur).expect("terminal")]);
        }
    }
    // Whatever is left consists of closed cycles through bivalent vertices.
    let mut loops = 0;
    for e in 0..g.num_edges() {
        if !kept(e) || visited[e] {
            continue;
        }
        loops += 1;
        let start = g.edge(e)[0];
        let (mut cur, mut via) = (g.other_end(e, start), e);
        visited[e] = true;
        while cur != start {
            let next = kept_at(cur).into_iter().find(|&f| f != via).expect("bivalent");
            visited[next] = true;
            cur = g.other_end(next, cur);
            via = next;
        }
    }
    let mut rotation = vec![[0; 3]; colors.len()];
    for v in g.interior_vertices() {
        if let Some(i) = index[v] {
            let at = kept_at(v);
            for k in 0..3 {
                rotation[i][k] = first_edge[at[k]].expect("every kept edge at a web vertex starts a path");
            }
        }
    }
    ClaspedSl3Web::new(g.n(), colors, edges, rotation, loops)
}

/// `Σ_ℓ (−1)^{cc(ℓ)} T_ℓ` over proper 3-colorings, with row `c` in the column of
/// each boundary point whose edge has color `c`, times `3^loops`, times the
/// antisymmetrization of rows `4, 5, …` over the clasp columns.
pub fn sl3_invariant(web: &ClaspedSl3Web) -> Result<Polynomial> {
    let n = web.n;
    let m = web.edges.len();
    let clasps = web.clasps();
    let clasp_terms: Vec<(Vec<u8>, i32)> = permutations(clasps.len())
        .into_iter()
        .map(|p| (p.iter().map(|&x| (x + 4) as u8).collect(), permutation_sign(&p)))
        .collect();
    let mut loop_factor: i64 = 1;
    for _ in 0..web.loops {
        loop_factor *= 3;
    }
    let mut out = Polynomial::zero(n);
    let mut color = vec![0u8; m];
    // Edges at each vertex, to check properness as colors are assigned in index order.
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (v, rot) in web.rotation.iter().enumerate() {
        for &e in rot {
            at_vertex[e].push(v);
        }
    }
    fn rec(web: &ClaspedSl3Web, e: usize, color: &mut Vec<u8>, at_vertex: &[Vec<usize>], visit: &mut dyn FnMut(&[u8])) {
        if e == color.len() {
            visit(color);
            return;
        }
        for c in 1..=3u8 {
            let clash = at_vertex[e].iter().any(|&v| web.rotation[v].iter().any(|&f| f < e && color[f] == c));
            if clash {
                continue;
            }
            color[e] = c;
            rec(web, e + 1, color, at_vertex, visit);
        }
        color[e] = 0;
    }
    let mut failure = None;
    rec(web, 0, &mut color, &at_vertex, &mut |color| {
        // A vertex counts toward cc when 1, 2, 3 read counterclockwise, i.e.
        // its clockwise colors form an odd permutation.
        let cc = web
            .rotation
            .iter()
            .filter(|rot| permutation_sign(&[color[rot[0]], color[rot[1]], color[rot[2]]]) < 0)
            .count();
        let sign: i64 = if cc % 2 == 0 { loop_factor } else { -loop_factor };
        let mut word = vec![0u8; n];
        for (e, ends) in web.edges.iter().enumerate() {
            for end in ends {
                if let End::Boundary(k) = *end {
                    word[k - 1] = color[e];
                }
            }
        }
        for (rows, s) in &clasp_terms {
            for (&k, &r) in clasps.iter().zip(rows) {
                word[k - 1] = r;
            }
            match Monomial::from_word(&word) {
                Ok(mono) => out.add_term(mono, BigRational::from_integer((sign * *s as i64).into())),
                Err(err) => failure = Some(err),
            }
        }
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(out),
    }
}
