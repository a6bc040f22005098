//! Shapes, standard Young tableaux and the bijections to rectangular tableaux
//! and weakly noncrossing set partitions.
//!
//! Run with `cargo run --example tableaux`.

use flamingo::tableaux::*;

fn main() -> flamingo::Result<()> {
    let shape = FlamingoShape::new(7, 2, 3)?;
    println!("λ = {:?}, hook lengths {:?}", shape.lambda(), hook_lengths(&shape));
    println!("count_syt = {}", count_syt(&shape));

    println!("{:<28} {:<24} partition", "SYT", "rectangular tableau");
    for t in enumerate_syt(&shape) {
        let rect = syt_to_rect(&t);
        let pi = rect_to_wnc(&rect);
        println!("{:<28} {:<24} {pi}", format!("{:?}", t.rows()), format!("{:?}", rect.rows()));
        assert_eq!(rect_to_syt(&wnc_to_rect(&pi, 3)?), t);
    }

    for r in 2..=4 {
        let s = FlamingoShape::new(10, 2, r)?;
        println!("|WNC(10, 2, {r})| = {} = {}", enumerate_wnc(&s).len(), count_syt(&s));
    }
    Ok(())
}
