//! Verifies an arbitrary family read from a design file, or the six-set
//! family over [4] when no path is given.
//!
//! cargo run --example verify_family -- path/to/design.txt

use nwdesign::format::{parse_design, report_text};
use nwdesign::verify;

const SIX_SETS: &str = "1010\n0101\n1001\n0110\n1100\n0011\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SIX_SETS.to_string(),
    };
    let design = parse_design(&text)?;
    let report = verify(&design);
    print!("{}", report_text(&design, &report));
    println!(
        "prefix sums: {:?}",
        report
            .prefix_sums
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
