//! The fake-degree polynomial, exact evaluation at roots of unity, cyclic
//! sieving of `AW(n, d)` under rotation, and the rotation signs.
//!
//! Run with `cargo run --example cyclic_sieving`.

use flamingo::sieving::*;

fn main() -> flamingo::Result<()> {
    let x = fake_degree(10, 3)?;
    println!("X_(10,3)(q) = {x}");
    assert_eq!(x, q_binomial(10, 4).shifted(12));
    println!("X(ζ^5) = {} for ζ a primitive 10th root of unity", eval_at_root(&x, 10, 5)?);

    for (n, d) in [(9, 3), (10, 3)] {
        print!("{}", verify_csp(n, d)?.to_text());
    }
    print!("{}", rotation_sign_check(9, 3)?.to_text());
    Ok(())
}
