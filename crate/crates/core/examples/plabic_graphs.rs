//! Plabic graphs as rotation systems: trips, faces, depth and bad features.
//!
//! Run with `cargo run --example plabic_graphs`.

use flamingo::plabic::*;
use flamingo::webs::enumerate_aw;

fn main() -> flamingo::Result<()> {
    let tripod = star(3);
    println!("tripod trip permutation {:?}", trip_permutation(&tripod));

    let w = &enumerate_aw(8, 2)?[7];
    let g = w.graph();
    println!("web JSON: {}", serde_json::to_string(&g.to_json())?);
    println!("normal: {}", validate_normal(g).is_empty());
    let map = depth_map(g);
    println!("{} faces, depths {:?}", map.faces.len(), map.depth);

    let rotated = rotate(g);
    println!("rotation changes the trip permutation to {:?}", trip_permutation(&rotated));
    println!("isomorphic to its rotation: {}", isomorphic(g, &rotated));
    println!("bad features: {}", scan_bad_features(g).len());
    Ok(())
}
