#![allow(dead_code)]

use flamingo::invariants::PerfectOrientation;
use flamingo::plabic::{Color, Endpoint, PlabicGraph};

use Color::{Black, White};
use Endpoint::{B, V};

/// The eight-point web with four interior vertices.
pub fn aw_8_2() -> PlabicGraph {
    let interior = [(Black, [0.7, 0.7]), (White, [0.0, 0.0]), (Black, [0.0, -1.0]), (Black, [-0.9, 0.3])];
    let edges = [
        [V(0), B(1)],
        [V(0), B(2)],
        [V(0), B(8)],
        [V(0), V(1)],
        [V(1), V(2)],
        [V(1), V(3)],
        [V(2), B(3)],
        [V(2), B(4)],
        [V(2), B(5)],
        [V(3), B(6)],
        [V(3), B(7)],
    ];
    PlabicGraph::from_coordinates(8, &interior, &edges).unwrap()
}

/// The ten-point web with nine interior vertices, `N11..N19` as `V(0)..V(8)`.
/// Edge order matches [`aw_10_3_labels`].
pub fn aw_10_3() -> PlabicGraph {
    let interior = [
        (White, [0.0, 0.75]),
        (Black, [0.5, 0.375]),
        (White, [0.5, -0.375]),
        (Black, [0.0, -0.75]),
        (White, [-0.5, -0.375]),
        (Black, [-0.5, 0.375]),
        (Black, [0.0, 1.375]),
        (Black, [0.9, -0.675]),
        (Black, [-0.9, -0.675]),
    ];
    PlabicGraph::from_coordinates(10, &interior, &aw_10_3_edges()).unwrap()
}

pub fn aw_10_3_edges() -> Vec<[Endpoint; 2]> {
    vec![
        [B(6), V(8)],
        [B(7), V(8)],
        [B(5), V(3)],
        [V(4), V(3)],
        [V(5), V(4)],
        [V(0), V(5)],
        [V(0), V(1)],
        [V(1), V(2)],
        [V(2), V(3)],
        [B(8), V(5)],
        [B(9), V(6)],
        [B(1), V(6)],
        [B(10), V(6)],
        [V(6), V(0)],
        [B(2), V(1)],
        [V(4), V(8)],
        [B(3), V(7)],
        [B(4), V(7)],
        [V(2), V(7)],
    ]
}

/// Labels of the worked ten-point labelling, in the edge order of [`aw_10_3_edges`].
pub fn aw_10_3_labels() -> Vec<Vec<usize>> {
    vec![
        vec![2],
        vec![1],
        vec![1],
        vec![],
        vec![1, 2],
        vec![],
        vec![1, 2],
        vec![],
        vec![2, 3],
        vec![3],
        vec![1],
        vec![4],
        vec![2],
        vec![3],
        vec![3],
        vec![3],
        vec![3],
        vec![2],
        vec![1],
    ]
}

/// The seven-point web: white `N8 = V(0)`, blacks `N9 = V(1)`, `N10 = V(2)`, `N11 = V(3)`.
pub fn aw_7_2() -> PlabicGraph {
    let interior = [(White, [0.0, 0.0]), (Black, [0.0, 1.0]), (Black, [-0.7, -0.7]), (Black, [0.7, -0.7])];
    PlabicGraph::from_coordinates(7, &interior, &aw_7_2_edges()).unwrap()
}

pub fn aw_7_2_edges() -> Vec<[Endpoint; 2]> {
    vec![
        [B(7), V(1)],
        [B(6), V(1)],
        [B(1), V(1)],
        [V(1), V(0)],
        [V(0), V(2)],
        [V(0), V(3)],
        [B(2), V(3)],
        [B(3), V(3)],
        [B(4), V(2)],
        [B(5), V(2)],
    ]
}

/// The two worked labellings of the seven-point web, in edge order of [`aw_7_2_edges`],
/// with their expected `sign · weight` as `(numerator, denominator)`.
pub fn aw_7_2_labellings() -> Vec<(Vec<Vec<usize>>, (i64, i64))> {
    vec![
        (vec![vec![2], vec![1], vec![3], vec![], vec![1, 2], vec![3], vec![2], vec![1], vec![3], vec![4]], (-1, 2)),
        (vec![vec![2], vec![1], vec![4], vec![3], vec![1], vec![2], vec![1], vec![3], vec![2], vec![3]], (1, 1)),
    ]
}

/// Whether two plabic graphs are isomorphic as abstract colored graphs with
/// fixed boundary labels (rotation systems ignored).
pub fn abstract_isomorphic(g: &PlabicGraph, h: &PlabicGraph) -> bool {
    if g.n() != h.n() || g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return false;
    }
    let total = g.num_vertices();
    let mut map = vec![usize::MAX; total];
    let mut used = vec![false; total];
    for b in 0..g.n() {
        map[b] = b;
        used[b] = true;
    }
    fn multiplicity(g: &PlabicGraph, u: usize, v: usize) -> usize {
        g.edges_between(u, v).len()
    }
    fn extend(g: &PlabicGraph, h: &PlabicGraph, map: &mut Vec<usize>, used: &mut Vec<bool>, v: usize) -> bool {
        if v == g.num_vertices() {
            return true;
        }
        for w in h.interior_vertices() {
            if used[w] || g.kind(v) != h.kind(w) || g.degree(v) != h.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| multiplicity(g, u, v) == multiplicity(h, map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if extend(g, h, map, used, v + 1) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    extend(g, h, &mut map, &mut used, g.n())
}

/// The thirteen-point web of the m-diagram example, from its drawing.
/// Interior: 0 = v_A, 1 = v_B, 2 = v_C, 3 = X1, 4 = Y1, 5 = X2, 6 = Y2, 7 = X3, 8 = Y3.
pub fn thirteen_point_web_edges() -> (Vec<Color>, Vec<[Endpoint; 2]>) {
    let colors = vec![Black, Black, Black, Black, White, Black, White, Black, White];
    let edges = vec![
        [B(1), V(3)],
        [V(3), V(4)],
        [V(1), V(4)],
        [V(0), V(4)],
        [B(2), V(1)],
        [B(5), V(5)],
        [B(8), V(5)],
        [V(0), V(6)],
        [V(6), V(5)],
        [V(8), V(7)],
        [B(10), V(7)],
        [V(2), V(8)],
        [V(7), V(6)],
        [V(3), V(8)],
        [B(6), V(5)],
        [B(7), V(5)],
        [B(9), V(7)],
        [V(2), B(12)],
        [V(2), B(13)],
        [B(3), V(1)],
        [B(4), V(0)],
        [B(11), V(2)],
    ];
    (colors, edges)
}

/// The orientation drawn for [`aw_7_2`].
pub fn drawn_7_2_orientation(g: &PlabicGraph) -> PerfectOrientation {
    let mut independent = vec![false; g.num_edges()];
    independent[3] = true;
    PerfectOrientation::new(g, independent, vec![9, 10]).unwrap()
}

/// The orientation drawn for [`aw_10_3`].
pub fn drawn_10_3_orientation(g: &PlabicGraph) -> PerfectOrientation {
    let mut independent = vec![false; g.num_edges()];
    for e in [13, 4, 7] {
        independent[e] = true;
    }
    PerfectOrientation::new(g, independent, vec![18, 13, 17]).unwrap()
}

/// The fourteen rows for `(n, d, r) = (7, 2, 3)`: SYT rows and tail, the
/// rectangular tableau, and the blocks of the partition.
pub const R2_TABLE: [([[usize; 2]; 3], usize, [[usize; 2]; 3], &[&[usize]]); 14] = [
    ([[1, 2], [3, 4], [5, 6]], 7, [[1, 2], [3, 4], [6, 7]], &[&[1, 4, 5, 6], &[2, 3, 7]]),
    ([[1, 2], [3, 4], [5, 7]], 6, [[1, 2], [3, 4], [5, 7]], &[&[1, 4, 5], &[2, 3, 6, 7]]),
    ([[1, 2], [3, 5], [4, 6]], 7, [[1, 2], [3, 5], [6, 7]], &[&[1, 5, 6], &[2, 3, 4, 7]]),
    ([[1, 2], [3, 5], [4, 7]], 6, [[1, 2], [3, 5], [4, 7]], &[&[1, 5, 6, 7], &[2, 3, 4]]),
    ([[1, 2], [3, 6], [4, 7]], 5, [[1, 2], [3, 6], [5, 7]], &[&[1, 6, 7], &[2, 3, 4, 5]]),
    ([[1, 3], [2, 4], [5, 6]], 7, [[1, 3], [2, 4], [6, 7]], &[&[1, 2, 7], &[3, 4, 5, 6]]),
    ([[1, 3], [2, 4], [5, 7]], 6, [[1, 3], [2, 4], [5, 7]], &[&[1, 2, 6, 7], &[3, 4, 5]]),
    ([[1, 3], [2, 5], [4, 6]], 7, [[1, 3], [2, 5], [6, 7]], &[&[1, 2, 4, 7], &[3, 5, 6]]),
    ([[1, 3], [2, 5], [4, 7]], 6, [[1, 3], [2, 5], [4, 7]], &[&[1, 2, 4], &[3, 5, 6, 7]]),
    ([[1, 3], [2, 6], [4, 7]], 5, [[1, 3], [2, 6], [5, 7]], &[&[1, 2, 4, 5], &[3, 6, 7]]),
    ([[1, 4], [2, 5], [3, 6]], 7, [[1, 4], [2, 5], [6, 7]], &[&[1, 2, 3, 7], &[4, 5, 6]]),
    ([[1, 4], [2, 5], [3, 7]], 6, [[1, 4], [2, 5], [3, 7]], &[&[1, 2, 3], &[4, 5, 6, 7]]),
    ([[1, 4], [2, 6], [3, 7]], 5, [[1, 4], [2, 6], [5, 7]], &[&[1, 2, 3, 5], &[4, 6, 7]]),
    ([[1, 5], [2, 6], [3, 7]], 4, [[1, 5], [2, 6], [4, 7]], &[&[1, 2, 3, 4], &[5, 6, 7]]),
];
