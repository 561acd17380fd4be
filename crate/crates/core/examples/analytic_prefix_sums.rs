//! Overlap prefix sums of the refined construction: closed form against the
//! pairwise verifier.
//!
//! cargo run --release --example analytic_prefix_sums

use std::time::Instant;

use nwdesign::{build_refined_nw, prefix_sum_analytic, verify, FieldSpec};

fn main() -> nwdesign::Result<()> {
    let field = FieldSpec::for_order(8)?;
    let n = 4096;

    let start = Instant::now();
    let report = verify(&build_refined_nw(field, n)?);
    let brute = start.elapsed();

    let start = Instant::now();
    let analytic: Vec<_> = (0..n)
        .map(|i| prefix_sum_analytic(field, i))
        .collect::<Result<_, _>>()?;
    let closed = start.elapsed();

    let mismatches = (0..n as usize)
        .filter(|&i| analytic[i] != &report.prefix_sums[i] + 1u32)
        .count();
    println!("q = 8, n = {n}: {mismatches} mismatches");
    println!("pairwise verifier {brute:.2?}, closed form {closed:.2?}");
    for i in [0usize, 7, 8, 63, 64, 511, 512, 4095] {
        println!("  i = {i:>4}: sum over j <= i = {}", analytic[i]);
    }

    // far beyond what the pairwise verifier can reach
    let field = FieldSpec::for_order(16)?;
    let i = u64::MAX / 3;
    println!("\nq = 16, i = {i}: {}", prefix_sum_analytic(field, i)?);
    Ok(())
}
