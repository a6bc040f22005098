//! The bijection φ from 3-weakly noncrossing partitions to augmented webs, its
//! inverse, and the rotation orbits of `AW(n, d)`.
//!
//! Run with `cargo run --example augmented_webs`.

use flamingo::plabic::{exceedances, trip_permutation, Color};
use flamingo::tableaux::SetPartition;
use flamingo::webs::*;

fn main() -> flamingo::Result<()> {
    let pi = SetPartition::new(13, vec![vec![1, 4, 6, 7, 8], vec![2, 3, 9, 10], vec![5, 11, 12, 13]])?;
    let w = phi(&pi)?;
    let g = w.graph();
    println!(
        "φ({pi}): {} black, {} white, {} edges",
        g.count_color(Color::Black),
        g.count_color(Color::White),
        g.num_edges()
    );
    println!("trip permutation {:?}, exceedances {:?}", trip_permutation(g), exceedances(g));
    let coloring = valid_coloring(&w)?;
    println!("valid coloring {coloring:?}");
    assert_eq!(phi_inverse(&w)?, pi);

    for (n, d) in [(6, 2), (9, 3), (10, 3)] {
        let webs = enumerate_aw(n, d)?;
        let mut sizes: Vec<usize> = rotation_orbits(&webs).iter().map(Vec::len).collect();
        sizes.sort_unstable();
        println!("AW({n}, {d}): {} webs, rotation orbit sizes {sizes:?}", webs.len());
    }
    Ok(())
}
