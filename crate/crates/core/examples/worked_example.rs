//! The four-set design over [4] built from GF(2), as sets and as a matrix.
//!
//! cargo run --example worked_example

use nwdesign::format::{report_text, write_matrix, write_sets};
use nwdesign::{build_refined_nw, verify, FieldSpec, Poly};

fn main() -> nwdesign::Result<()> {
    let field = FieldSpec::for_order(2)?;
    let design = build_refined_nw(field, 4)?;

    for (i, set) in design.sets().enumerate() {
        println!(
            "S_{i} = {set:?}  from phi_{i}(x) = {}",
            Poly::from_index(field, i as u64)?
        );
    }
    print!("\n{}\n{}", write_sets(&design), write_matrix(&design));
    print!("\n{}", report_text(&design, &verify(&design)));
    Ok(())
}
