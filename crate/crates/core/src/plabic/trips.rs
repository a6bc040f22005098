use std::collections::HashMap;

use super::graph::{Dart, PlabicGraph};

/// A trip from a boundary vertex, turning right (maximally counterclockwise)
/// at black vertices and left (maximally clockwise) at white vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trip {
    pub start: usize,
    pub darts: Vec<Dart>,
    pub end: usize,
}

/// The dart following `d` on its trip, or `None` when `d` ends at the boundary.
pub fn trip_successor(g: &PlabicGraph, d: Dart) -> Option<Dart> {
    let v = g.dart_head(d);
    let e = d / 2;
    if g.is_boundary(v) {
        return None;
    }
    let next = if g.is_black(v) { g.prev_cw(v, e) } else { g.next_cw(v, e) };
    Some(g.dart_from(v, next))
}

/// The trip starting at boundary label `i`.
pub fn trip(g: &PlabicGraph, i: usize) -> Trip {
    let mut d = g.dart_from(i - 1, g.boundary_edge(i));
    let mut darts = vec![d];
    // A trip uses each dart at most once, so this bound only guards against bugs.
    let limit = 2 * g.num_edges() + 1;
    while let Some(next) = trip_successor(g, d) {
        darts.push(next);
        d = next;
        assert!(darts.len() <= limit, "trip does not terminate");
    }
    Trip { start: i, end: g.dart_head(d) + 1, darts }
}

/// `trip_permutation(G)[i - 1]` is the end label of the trip from `i`.
pub fn trip_permutation(g: &PlabicGraph) -> Vec<usize> {
    (1..=g.n()).map(|i| trip(g, i).end).collect()
}

/// Labels whose trip ends at a larger label.
pub fn exceedances(g: &PlabicGraph) -> Vec<usize> {
    trip_permutation(g).into_iter().enumerate().filter(|&(i, t)| t > i + 1).map(|(i, _)| i + 1).collect()
}

/// Trips that never reach the boundary, as dart cycles.
pub fn roundtrips(g: &PlabicGraph) -> Vec<Vec<Dart>> {
    let mut used = vec![false; 2 * g.num_edges()];
    for i in 1..=g.n() {
        for d in trip(g, i).darts {
            used[d] = true;
        }
    }
    let mut cycles = Vec::new();
    for start in 0..used.len() {
        if used[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        while !used[d] {
            used[d] = true;
            cycle.push(d);
            d = trip_successor(g, d).expect("darts off boundary trips never reach the boundary");
        }
        cycles.push(cycle);
    }
    cycles
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BadFeature {
    /// A closed trip.
    Roundtrip { darts: Vec<Dart> },
    /// A trip (by start label, or roundtrip index offset by `n`) using `edge` twice.
    EssentialSelfIntersection { trip: usize, edge: usize },
    /// Two trips that both traverse `first` and later `second`.
    BadDoubleCrossing { trips: (usize, usize), first: usize, second: usize },
}

/// Bad features of `G`; a normal plabic graph has none exactly when it is reduced.
pub fn scan_bad_features(g: &PlabicGraph) -> Vec<BadFeature> {
    let n = g.n();
    let mut all: Vec<Vec<Dart>> = (1..=n).map(|i| trip(g, i).darts).collect();
    let rounds = roundtrips(g);
    let mut out: Vec<BadFeature> = rounds.iter().map(|c| BadFeature::Roundtrip { darts: c.clone() }).collect();
    all.extend(rounds);

    let positions: Vec<HashMap<usize, usize>> = all
        .iter()
        .enumerate()
        .map(|(t, darts)| {
            let mut pos = HashMap::new();
            for (k, &d) in darts.iter().enumerate() {
                if pos.insert(d / 2, k).is_some() {
                    out.push(BadFeature::EssentialSelfIntersection { trip: t + 1, edge: d / 2 });
                }
            }
            pos
        })
        .collect();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            let mut shared: Vec<(usize, usize, usize)> =
                positions[a].iter().filter_map(|(&e, &pa)| positions[b].get(&e).map(|&pb| (pa, pb, e))).collect();
            shared.sort_unstable();
            'pairs: for x in 0..shared.len() {
                for y in x + 1..shared.len() {
                    if shared[x].1 < shared[y].1 {
                        out.push(BadFeature::BadDoubleCrossing {
                            trips: (a + 1, b + 1),
                            first: shared[x].2,
                            second: shared[y].2,
                        });
                        break 'pairs;
                    }
                }
            }
        }
    }
    out
}
