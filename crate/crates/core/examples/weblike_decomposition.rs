//! Splitting a web invariant into weblike-subgraph groups, each a signed power
//! of 1/2 times the invariant of a clasped `SL3` web.
//!
//! Run with `cargo run --example weblike_decomposition`.

use flamingo::invariants::canonical_invariant;
use flamingo::weblike::*;
use flamingo::webs::enumerate_aw;

fn main() -> flamingo::Result<()> {
    let w = &enumerate_aw(7, 2)?[3];
    let (o, p) = canonical_invariant(w.graph())?;
    let groups = decompose_invariant(w.graph(), &o)?;
    println!("{} weblike subgraphs, {} with labellings", groups.len(), nonempty(&groups).count());
    for g in nonempty(&groups) {
        println!(
            "  multiplicities {:?}: coefficient {}, clasps {:?}, {} SL3 vertices",
            g.subgraph.multiplicity(),
            g.coefficient,
            g.web.clasps(),
            g.web.colors().len()
        );
    }
    assert_eq!(reassemble(7, &groups), p);
    Ok(())
}
