//! The symmetric group acting on web invariants: the crossing rule followed by
//! skein reduction back to augmented webs, and the resulting matrices.
//!
//! Run with `cargo run --example skein_reduction`.

use flamingo::invariants::canonical_invariant;
use flamingo::skein::*;
use flamingo::webs::enumerate_aw;

fn main() -> flamingo::Result<()> {
    let (n, d) = (6, 2);
    let webs = enumerate_aw(n, d)?;
    let (o, p) = canonical_invariant(webs[0].graph())?;
    let i = (1..n)
        .find(|&i| webs[0].graph().boundary_neighbor(i) != webs[0].graph().boundary_neighbor(i + 1))
        .expect("some adjacent boundary vertices have different neighbors");
    let crossing = apply_transposition(i, webs[0].graph(), &o)?;
    println!("s_{i} · [W_0, O] has {} terms before reduction", crossing.len());
    let reduced = reduce_to_basis(&crossing)?;
    for t in reduced.terms() {
        let k = webs.iter().position(|w| w.graph() == &t.graph).expect("reduced onto AW(6, 2)");
        println!("  {} · [W_{k}]", t.coefficient);
    }
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.swap(i - 1, i);
    assert_eq!(reduced.invariant()?, p.permute(&sigma)?);

    for i in 1..n {
        println!("s_{i}:");
        for row in sn_matrix(i, n, d)? {
            let row: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
            println!("  {}", row.join(" "));
        }
    }
    Ok(())
}
