//! Spreading a refined NW family over disjoint blocks to reach weak
//! parameter 1.
//!
//! cargo run --release --example block_design -- 8 512

use nwdesign::format::write_matrix;
use nwdesign::{block_count, build_block_design, FieldSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args.next().map_or(Ok(2), |s| s.parse())?;
    let n: u64 = args.next().map_or(Ok(4), |s| s.parse())?;

    let bd = build_block_design(FieldSpec::for_order(q)?, n)?;
    println!(
        "base: n = {n}, l = {}, rho_weak_n = {}",
        bd.base().universe(),
        bd.rho_input()
    );
    println!("blocks 0..={} with sizes {:?}", bd.b(), bd.sizes());
    println!("combined: n' = {}, l' = {}", bd.n_prime(), bd.l_prime());
    println!(
        "max prefix sum {} <= n' = {}",
        bd.combined_report().max_prefix_sum(),
        bd.n_prime()
    );
    println!(
        "block count from the log formula (ceiling): {}",
        block_count(n, q, bd.rho_input())?
    );
    println!("sidecar: {}", serde_json::to_string(&bd.sidecar())?);

    if bd.l_prime() <= 64 && bd.n_prime() <= 64 {
        print!("\n{}", write_matrix(bd.combined()));
    }
    Ok(())
}
