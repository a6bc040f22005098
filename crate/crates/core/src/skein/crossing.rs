//! The crossing rule: `s_i` acting on `[W, O]` through local surgery at the
//! boundary vertices `i` and `i + 1`.

use super::rules::{skein_error, Surgery};
use super::FormalWebSum;
use crate::error::Result;
use crate::invariants::{rat, PerfectOrientation};
use crate::plabic::{Color, Kind, PlabicGraph};

/// The three graphs the crossing rule produces besides `W` itself.
pub struct CrossingTerms {
    /// The "I" insertion between `x`, `y` and the boundary.
    pub inserted: (PlabicGraph, PerfectOrientation),
    /// Both boundary vertices attached to `x`.
    pub to_x: (PlabicGraph, PerfectOrientation),
    /// Both boundary vertices attached to `y`.
    pub to_y: (PlabicGraph, PerfectOrientation),
}

/// Build `W_I`, `W_x` and `W_y` for boundary labels `i, i + 1`, or `None` when
/// both attach to the same vertex.
pub fn crossing_terms(i: usize, g: &PlabicGraph, o: &PerfectOrientation) -> Result<Option<CrossingTerms>> {
    let n = g.n();
    if i == 0 || i >= n {
        return Err(skein_error(format!("transposition s_{i} is out of range for n = {n}")));
    }
    let (bi, bj) = (i - 1, i);
    let (ex, ey) = (g.boundary_edge(i), g.boundary_edge(i + 1));
    let (x, y) = (g.boundary_neighbor(i), g.boundary_neighbor(i + 1));
    if x == y {
        return Ok(None);
    }

    let mut s = Surgery::new(g, o);
    let w = s.add_vertex(Kind::Interior(Color::White));
    let b = s.add_vertex(Kind::Interior(Color::Black));
    s.map().move_endpoint(ex, bi, w);
    s.map().move_endpoint(ey, bj, w);
    let fi = s.add_edge(b, bi, false);
    let fj = s.add_edge(b, bj, false);
    let stem = s.add_edge(b, w, true);
    s.map().set_rotation(bi, vec![fi]);
    s.map().set_rotation(bj, vec![fj]);
    s.map().set_rotation(b, vec![fi, fj, stem]);
    s.map().set_rotation(w, vec![stem, ey, ex]);
    let inserted = s.finish()?;

    let mut s = Surgery::new(g, o);
    s.map().delete_edge(ey);
    let f = s.add_edge(x, bj, false);
    s.map().set_rotation(bj, vec![f]);
    s.map().insert_after(x, ex, f);
    let to_x = s.finish()?;

    let mut s = Surgery::new(g, o);
    s.map().delete_edge(ex);
    let f = s.add_edge(y, bi, false);
    s.map().set_rotation(bi, vec![f]);
    s.map().insert_before(y, ey, f);
    let to_y = s.finish()?;

    Ok(Some(CrossingTerms { inserted, to_x, to_y }))
}

/// `s_i · [W, O]` as `[W] - [W_I] - ½[W_x] - ½[W_y]`, or `-[W]` when boundary
/// vertices `i` and `i + 1` share their neighbor.
pub fn apply_transposition(i: usize, g: &PlabicGraph, o: &PerfectOrientation) -> Result<FormalWebSum> {
    let mut sum = FormalWebSum::new(g.n());
    match crossing_terms(i, g, o)? {
        None => sum.add(g, o, &rat(-1, 1))?,
        Some(t) => {
            sum.add(g, o, &rat(1, 1))?;
            sum.add(&t.inserted.0, &t.inserted.1, &rat(-1, 1))?;
            sum.add(&t.to_x.0, &t.to_x.1, &rat(-1, 2))?;
            sum.add(&t.to_y.0, &t.to_y.1, &rat(-1, 2))?;
        }
    }
    Ok(sum)
}
