//! Drawings of plabic graphs as SVG, Graphviz DOT or TikZ.
//!
//! Boundary vertices sit on a circle, labelled clockwise, and interior vertices
//! are placed by the barycentric (Tutte) embedding with the boundary fixed.
//! Coordinates are printed to three decimals, so output is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;

use crate::error::{Error, Result};
use crate::plabic::{boundary_position, PlabicGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Dot,
    Tikz,
}

/// Position of every vertex: boundary label `k` (id `k - 1`) on the circle of
/// radius 2, each interior vertex at the average of its neighbors.
pub fn tutte_layout(g: &PlabicGraph) -> Result<Vec<[f64; 2]>> {
    let n = g.n();
    let interior: Vec<usize> = g.interior_vertices().collect();
    let k = interior.len();
    // Rows of `[L | b_x | b_y]` for the interior Laplacian system.
    let mut a = vec![vec![0.0f64; k + 2]; k];
    for (row, &v) in interior.iter().enumerate() {
        a[row][row] = g.degree(v) as f64;
        for &e in g.rotation(v) {
            let u = g.other_end(e, v);
            if g.is_boundary(u) {
                let [x, y] = boundary_position(n, u + 1);
                a[row][k] += x;
                a[row][k + 1] += y;
            } else {
                a[row][u - n] -= 1.0;
            }
        }
    }
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .filter(|&p| a[p][col].abs() > 1e-12)
            .ok_or_else(|| Error::InvalidGraph("an interior component does not reach the boundary".into()))?;
        a.swap(col, pivot);
        for row in 0..k {
            if row != col {
                let f = a[row][col] / a[col][col];
                if f != 0.0 {
                    for c in col..k + 2 {
                        a[row][c] -= f * a[col][c];
                    }
                }
            }
        }
    }
    let mut pos: Vec<[f64; 2]> = (1..=n).map(|label| boundary_position(n, label)).collect();
    pos.extend((0..k).map(|i| [a[i][k] / a[i][i], a[i][k + 1] / a[i][i]]));
    Ok(pos)
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Edges grouped by endpoint pair, so parallel edges can be drawn apart.
fn edge_groups(g: &PlabicGraph) -> BTreeMap<(usize, usize), usize> {
    let mut groups = BTreeMap::new();
    for &[a, b] in g.edges() {
        *groups.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    groups
}

fn vertex_name(g: &PlabicGraph, v: usize) -> String {
    if g.is_boundary(v) {
        format!("b{}", v + 1)
    } else {
        format!("v{}", v - g.n())
    }
}

/// Render `G` in the given format.
pub fn render(g: &PlabicGraph, format: Format) -> Result<String> {
    let pos = tutte_layout(g)?;
    Ok(match format {
        Format::Svg => svg(g, &pos),
        Format::Dot => dot(g, &pos),
        Format::Tikz => tikz(g, &pos),
    })
}

fn svg(g: &PlabicGraph, pos: &[[f64; 2]]) -> String {
    let (c, s) = (160.0, 60.0);
    let at = |p: [f64; 2]| (num(c + s * p[0]), num(c - s * p[1]));
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"320\" height=\"320\" viewBox=\"0 0 320 320\">\n",
    );
    out.push_str("<circle cx=\"160\" cy=\"160\" r=\"120\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n");
    out.push_str("<g stroke=\"#000000\" stroke-width=\"2\" fill=\"none\">\n");
    for (&(a, b), &m) in &edge_groups(g) {
        let (pa, pb) = (pos[a], pos[b]);
        if m == 1 {
            let ((x1, y1), (x2, y2)) = (at(pa), at(pb));
            let _ = writeln!(out, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>");
            continue;
        }
        let (dx, dy) = (pb[0] - pa[0], pb[1] - pa[1]);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        for k in 0..m {
            let offset = 0.25 * (k as f64 - (m - 1) as f64 / 2.0);
            let mid = [(pa[0] + pb[0]) / 2.0 - offset * dy / len, (pa[1] + pb[1]) / 2.0 + offset * dx / len];
            let ((x1, y1), (qx, qy), (x2, y2)) = (at(pa), at(mid), at(pb));
            let _ = writeln!(out, "<path d=\"M {x1} {y1} Q {qx} {qy} {x2} {y2}\"/>");
        }
    }
    out.push_str("</g>\n");
    for v in g.interior_vertices() {
        let (x, y) = at(pos[v]);
        let fill = if g.is_black(v) { "#000000" } else { "#ffffff" };
        let _ = writeln!(
            out,
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"6\" fill=\"{fill}\" stroke=\"#000000\" stroke-width=\"1.5\"/>"
        );
    }
    for v in 0..g.n() {
        let (x, y) = at(pos[v]);
        let _ = writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"2.5\" fill=\"#000000\"/>");
        let p = pos[v];
        let (lx, ly) = at([p[0] * 1.12, p[1] * 1.12]);
        let _ = writeln!(
            out,
            "<text x=\"{lx}\" y=\"{ly}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            v + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

fn dot(g: &PlabicGraph, pos: &[[f64; 2]]) -> String {
    let mut out = String::from("graph web {\n  layout=neato;\n  node [fixedsize=true, width=0.15, label=\"\"];\n");
    for v in 0..g.num_vertices() {
        let p = format!("{},{}!", num(pos[v][0]), num(pos[v][1]));
        let style = if g.is_boundary(v) {
            format!("shape=plaintext, label=\"{}\"", v + 1)
        } else if g.is_black(v) {
            "shape=circle, style=filled, fillcolor=black".into()
        } else {
            "shape=circle, style=filled, fillcolor=white".into()
        };
        let _ = writeln!(out, "  {} [{style}, pos=\"{p}\"];", vertex_name(g, v));
    }
    for &[a, b] in g.edges() {
        let _ = writeln!(out, "  {} -- {};", vertex_name(g, a), vertex_name(g, b));
    }
    out.push_str("}\n");
    out
}

fn tikz(g: &PlabicGraph, pos: &[[f64; 2]]) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n  \\draw[gray] (0,0) circle (2);\n");
    for v in 0..g.num_vertices() {
        let _ = writeln!(out, "  \\coordinate ({}) at ({},{});", vertex_name(g, v), num(pos[v][0]), num(pos[v][1]));
    }
    for (&(a, b), &m) in &edge_groups(g) {
        let (na, nb) = (vertex_name(g, a), vertex_name(g, b));
        if m == 1 {
            let _ = writeln!(out, "  \\draw ({na}) -- ({nb});");
        }
        for k in 0..m {
            if m > 1 {
                let bend = 15.0 * (2.0 * k as f64 - (m - 1) as f64);
                let _ = writeln!(out, "  \\draw ({na}) to[bend left={}] ({nb});", num(bend));
            }
        }
    }
    for v in g.interior_vertices() {
        let fill = if g.is_black(v) { "black" } else { "white" };
        let _ = writeln!(out, "  \\node[circle, draw, fill={fill}, inner sep=2pt] at ({}) {{}};", vertex_name(g, v));
    }
    for v in 0..g.n() {
        let p = pos[v];
        let _ = writeln!(out, "  \\node at ({},{}) {{${}$}};", num(p[0] * 1.15), num(p[1] * 1.15), v + 1);
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
