//! Λ(N(d, j)) by enumeration and in closed form.
//!
//! cargo run --release --example lambda_closed_form

use std::time::Instant;

use nwdesign::{lambda_n_analytic, lambda_n_enumerated, FieldSpec, GfElement};

fn main() -> nwdesign::Result<()> {
    println!(
        "{:>3} {:>2} {:>2} {:>14} {:>14} {:>10}",
        "q", "d", "j", "closed form", "enumerated", "time"
    );
    for q in [2u64, 4, 8] {
        let field = FieldSpec::for_order(q)?;
        for d in 0..q as u32 {
            for j in [GfElement::ZERO, GfElement::ONE] {
                let closed = lambda_n_analytic(field, d, j)?;
                let start = Instant::now();
                let counted = lambda_n_enumerated(field, d, j)?;
                assert_eq!(closed, counted);
                println!(
                    "{q:>3} {d:>2} {j:>2} {closed:>14} {counted:>14} {:>10.2?}",
                    start.elapsed()
                );
            }
        }
    }

    let big = FieldSpec::for_order(1 << 16)?;
    println!(
        "\nq = 65536, d = 3: Λ(N(3,1)) = {}",
        lambda_n_analytic(big, 3, GfElement::ONE)?
    );
    Ok(())
}
