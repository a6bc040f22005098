//! The web invariants of `AW(n, d)` as a basis of the flamingo Specht module:
//! rank, and the expansion of a Specht generator.
//!
//! Run with `cargo run --example web_basis`.

use flamingo::invariants::*;
use flamingo::tableaux::*;
use flamingo::webs::enumerate_aw;

fn main() -> flamingo::Result<()> {
    let (n, d) = (7, 2);
    let shape = FlamingoShape::sl3(n, d)?;
    let polys: Vec<Polynomial> =
        enumerate_aw(n, d)?.iter().map(|w| canonical_invariant(w.graph()).map(|x| x.1)).collect::<Result<_, _>>()?;
    println!("rank {} of {} invariants, count_syt = {}", rank(&polys), polys.len(), count_syt(&shape));

    let pi = SetPartition::new(n, vec![vec![1, 2, 3, 4], vec![5, 6, 7]])?;
    let p = specht_generator(&pi, &shape)?;
    let basis = SpanBasis::new(&polys)?;
    let coefficients = basis.expand(&p)?;
    let shown: Vec<String> = coefficients.iter().map(|c| c.to_string()).collect();
    println!("p_{pi} = Σ c_W [W, O_W] with c = [{}]", shown.join(", "));
    Ok(())
}
