use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::plabic::{canonicalize, Color, Kind, MapBuilder};
use crate::tableaux::{arcs_cross, wnc_to_mdiagram, SetPartition};

use super::AugmentedWeb;

/// Exact x-coordinate of the crossing of two lower semicircles with the given
/// endpoint pairs, as a fraction with positive denominator.
fn crossing_x(a: (usize, usize), b: (usize, usize)) -> (i64, i64) {
    let (p1, q1) = (a.0 as i64, a.1 as i64);
    let (p2, q2) = (b.0 as i64, b.1 as i64);
    let num = p2 * q2 - p1 * q1;
    let den = p2 + q2 - p1 - q1;
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

fn cmp_frac(a: (i64, i64), b: (i64, i64)) -> Ordering {
    (a.0 * b.1).cmp(&(b.0 * a.1))
}

struct Crossing {
    first: usize,
    second: usize,
    x: (i64, i64),
    vertex: usize,
    f_before: usize,
    f_after: usize,
    s_near: usize,
    s_far: usize,
}

/// The augmented web of a 3-weakly noncrossing partition.
///
/// Arcs of the m-diagram become edges; each block `B` gets a black vertex `v_B`
/// just below `b2`. Every maximal run of crossings between one first arc and the
/// second arcs of one block is replaced by a black vertex `X` (taking the first
/// arc toward its left end and the far halves of the crossed second arcs) and a
/// white vertex `Y` (taking the first arc toward its right end and one edge
/// replacing the near halves), joined by a new edge.
pub fn phi(pi: &SetPartition) -> Result<AugmentedWeb> {
    Ok(phi_with_coloring(pi)?.0)
}

/// `phi` together with the coloring produced by the construction, as
/// `(web, colors)` indexed by the web's edges.
pub fn phi_with_coloring(pi: &SetPartition) -> Result<(AugmentedWeb, Vec<super::EdgeColor>)> {
    use super::EdgeColor;
    let m = wnc_to_mdiagram(pi)?;
    let n = pi.n();
    let blocks = pi.blocks();
    let mut map = MapBuilder::new(n);
    let mut color: BTreeMap<usize, EdgeColor> = BTreeMap::new();

    let v_block: Vec<usize> = blocks.iter().map(|_| map.add_vertex(Kind::Interior(Color::Black))).collect();

    let mut crossings: Vec<Crossing> = Vec::new();
    for (fi, f) in m.first_arcs.iter().enumerate() {
        for (si, s) in m.second_arcs.iter().enumerate() {
            if arcs_cross((f.left, f.right), (s.left, s.right)) {
                let vertex = map.add_vertex(Kind::Interior(Color::Black));
                crossings.push(Crossing {
                    first: fi,
                    second: si,
                    x: crossing_x((f.left, f.right), (s.left, s.right)),
                    vertex,
                    f_before: usize::MAX,
                    f_after: usize::MAX,
                    s_near: usize::MAX,
                    s_far: usize::MAX,
                });
            }
        }
    }

    // Chain each arc through its crossings in order of increasing x.
    let mut first_last_edge = vec![usize::MAX; m.first_arcs.len()];
    for (fi, f) in m.first_arcs.iter().enumerate() {
        let mut on: Vec<usize> = (0..crossings.len()).filter(|&c| crossings[c].first == fi).collect();
        on.sort_by(|&a, &b| cmp_frac(crossings[a].x, crossings[b].x));
        let mut prev = f.left - 1;
        let mut prev_crossing: Option<usize> = None;
        for &c in on.iter().chain(std::iter::once(&usize::MAX)) {
            let here = if c == usize::MAX { v_block[f.block] } else { crossings[c].vertex };
            let e = map.add_edge(prev, here);
            color.insert(e, EdgeColor::Red);
            if prev < n {
                map.set_rotation(prev, vec![e]);
            }
            if let Some(p) = prev_crossing {
                crossings[p].f_after = e;
            }
            if c == usize::MAX {
                first_last_edge[fi] = e;
            } else {
                crossings[c].f_before = e;
            }
            prev = here;
            prev_crossing = if c == usize::MAX { None } else { Some(c) };
        }
    }
    let mut second_first_edge = vec![usize::MAX; m.second_arcs.len()];
    for (si, s) in m.second_arcs.iter().enumerate() {
        let mut on: Vec<usize> = (0..crossings.len()).filter(|&c| crossings[c].second == si).collect();
        on.sort_by(|&a, &b| cmp_frac(crossings[a].x, crossings[b].x));
        let mut prev = v_block[s.block];
        let mut prev_crossing: Option<usize> = None;
        for &c in on.iter().chain(std::iter::once(&usize::MAX)) {
            let here = if c == usize::MAX { s.right - 1 } else { crossings[c].vertex };
            let e = map.add_edge(prev, here);
            color.insert(e, EdgeColor::Black);
            if here < n {
                map.set_rotation(here, vec![e]);
            }
            match prev_crossing {
                Some(p) => crossings[p].s_far = e,
                None => second_first_edge[si] = e,
            }
            if c != usize::MAX {
                crossings[c].s_near = e;
            }
            prev = here;
            prev_crossing = if c == usize::MAX { None } else { Some(c) };
        }
    }
    for (k, b) in blocks.iter().enumerate() {
        let stub = map.add_edge(v_block[k], b[1] - 1);
        color.insert(stub, EdgeColor::Blue);
        map.set_rotation(b[1] - 1, vec![stub]);
        let mut rot = vec![stub];
        let mut seconds: Vec<usize> = (0..m.second_arcs.len()).filter(|&s| m.second_arcs[s].block == k).collect();
        seconds.sort_by_key(|&s| m.second_arcs[s].right);
        rot.extend(seconds.iter().map(|&s| second_first_edge[s]));
        let fi = m.first_arcs.iter().position(|f| f.block == k).expect("one first arc per block");
        rot.push(first_last_edge[fi]);
        map.set_rotation(v_block[k], rot);
    }
    for c in &crossings {
        let f = m.first_arcs[c.first];
        let s = m.second_arcs[c.second];
        let rot = if f.left < s.left {
            vec![c.f_after, c.s_far, c.f_before, c.s_near]
        } else {
            vec![c.f_after, c.s_near, c.f_before, c.s_far]
        };
        map.set_rotation(c.vertex, rot);
    }

    // Clusters: maximal runs along a first arc of crossings with one block's second arcs.
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut cluster_of = vec![usize::MAX; crossings.len()];
    for fi in 0..m.first_arcs.len() {
        let mut on: Vec<usize> = (0..crossings.len()).filter(|&c| crossings[c].first == fi).collect();
        on.sort_by(|&a, &b| cmp_frac(crossings[a].x, crossings[b].x));
        for c in on {
            let block = m.second_arcs[crossings[c].second].block;
            let extend = clusters.last().is_some_and(|cl: &Vec<usize>| {
                let last = &crossings[*cl.last().expect("nonempty")];
                last.first == fi && m.second_arcs[last.second].block == block
            });
            if extend {
                clusters.last_mut().expect("exists").push(c);
            } else {
                clusters.push(vec![c]);
            }
            cluster_of[c] = clusters.len() - 1;
        }
    }

    // A cluster must be processed after every cluster nearer to v_B on its second arcs.
    let mut deps: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); clusters.len()];
    for (k, cl) in clusters.iter().enumerate() {
        for &c in cl {
            for (o, other) in crossings.iter().enumerate() {
                if other.second == crossings[c].second && cmp_frac(other.x, crossings[c].x) == Ordering::Less {
                    deps[k].insert(cluster_of[o]);
                }
            }
        }
    }
    let mut done = vec![false; clusters.len()];
    for _ in 0..clusters.len() {
        let k = (0..clusters.len())
            .find(|&k| !done[k] && deps[k].iter().all(|&j| done[j]))
            .ok_or_else(|| Error::InvalidPartition("cyclic replacement order".into()))?;
        replace_cluster(&mut map, &crossings, &clusters[k], &mut color)?;
        done[k] = true;
    }

    let live: Vec<usize> = color.keys().copied().filter(|&e| map.is_live_edge(e)).collect();
    let graph = map.finish()?;
    // `finish` numbers live edges in increasing old id.
    let colors_by_new: Vec<EdgeColor> = live.iter().map(|e| color[e]).collect();
    let (canon, relabel) = canonicalize(&graph)?;
    let mut colors = vec![EdgeColor::Black; canon.num_edges()];
    for (old, &c) in colors_by_new.iter().enumerate() {
        colors[relabel.edge[old]] = c;
    }
    Ok((AugmentedWeb::from_canonical(canon), colors))
}

fn is_cyclic_run(rot: &[usize], set: &BTreeSet<usize>) -> bool {
    let len = rot.len();
    let starts = (0..len).filter(|&i| set.contains(&rot[i]) && !set.contains(&rot[(i + len - 1) % len])).count();
    starts == 1 || (set.len() == len && starts == 0)
}

fn replace_cluster(
    map: &mut MapBuilder,
    crossings: &[Crossing],
    cluster: &[usize],
    color: &mut BTreeMap<usize, super::EdgeColor>,
) -> Result<()> {
    let bad = |msg: &str| Error::InvalidGraph(format!("replacement step failed: {msg}"));
    let w = crossings[cluster[0]].vertex;
    for pair in cluster.windows(2) {
        map.contract(crossings[pair[0]].f_after, w);
        debug_assert_eq!(crossings[pair[0]].f_after, crossings[pair[1]].f_before);
    }
    let mut x_edges: BTreeSet<usize> = cluster.iter().map(|&c| crossings[c].s_far).collect();
    x_edges.insert(crossings[cluster[0]].f_before);
    let rot = map.rotation(w).to_vec();
    let len = rot.len();
    let start = (0..len)
        .find(|&i| x_edges.contains(&rot[i]) && !x_edges.contains(&rot[(i + len - 1) % len]))
        .ok_or_else(|| bad("no run start"))?;
    let run: Vec<usize> = (0..x_edges.len()).map(|k| rot[(start + k) % len]).collect();
    if run.iter().any(|e| !x_edges.contains(e)) {
        return Err(bad("edges for the black vertex are not contiguous"));
    }
    let (_, new_edge) = map.split(w, &run, Kind::Interior(Color::Black))?;
    map.set_kind(w, Kind::Interior(Color::White));
    color.insert(new_edge, super::EdgeColor::Blue);

    let near: Vec<usize> = cluster.iter().map(|&c| crossings[c].s_near).collect();
    let holder = map.other_end(near[0], w);
    if near.iter().any(|&e| map.other_end(e, w) != holder) {
        return Err(bad("near halves end at different vertices"));
    }
    let near_set: BTreeSet<usize> = near.iter().copied().collect();
    if !is_cyclic_run(map.rotation(w), &near_set) || !is_cyclic_run(map.rotation(holder), &near_set) {
        return Err(bad("parallel near halves enclose other edges"));
    }
    for &e in &near[1..] {
        map.delete_edge(e);
    }
    if map.rotation(w).len() != 3 {
        return Err(bad("white vertex does not have degree 3"));
    }
    Ok(())
}
