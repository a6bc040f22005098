//! Perfect orientations, consistent labellings and the web invariant `[W, O]`,
//! compared with the jellyfish invariant of the sink partition.
//!
//! Run with `cargo run --example web_invariants`.

use flamingo::invariants::*;
use flamingo::plabic::Color;
use flamingo::tableaux::OrderedSetPartition;
use flamingo::webs::enumerate_aw;

fn main() -> flamingo::Result<()> {
    let webs = enumerate_aw(6, 2)?;
    for w in &webs {
        let g = w.graph();
        let orientations = enumerate_perfect_orientations(g);
        let o = find_perfect_orientation(g)?;
        let labellings = signed_labellings(g, &o)?;
        let p = web_invariant(g, &o)?;
        println!(
            "{} white: {} orientations, {} labellings, {} terms",
            g.count_color(Color::White),
            orientations.len(),
            labellings.len(),
            p.len()
        );
        if let Some(other) = orientations.last() {
            let s = orientation_sign(g, &o, other)?;
            assert_eq!(web_invariant(g, other)?.scaled(&rat(s.into(), 1)), p);
        }
        if g.count_color(Color::White) == 0 {
            let blocks = o
                .sinks()
                .iter()
                .map(|&v| g.neighbors(v).into_iter().filter(|&u| g.is_boundary(u)).map(|u| u + 1).collect())
                .collect();
            let pi = OrderedSetPartition::new(6, blocks)?;
            println!("  equals the jellyfish invariant: {}", jellyfish_invariant(&pi, 3)? == p);
        }
    }
    let tripod = &enumerate_aw(3, 1)?[0];
    print!("tripod invariant:\n{}", canonical_invariant(tripod.graph())?.1.to_text());
    Ok(())
}
