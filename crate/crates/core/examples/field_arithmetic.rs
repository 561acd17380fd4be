//! GF(2^r) arithmetic with the canonical moduli.
//!
//! cargo run --example field_arithmetic

use nwdesign::gf::modulus_table_text;
use nwdesign::{FieldSpec, GfElement};

fn main() -> nwdesign::Result<()> {
    print!("canonical moduli (r: bitmask)\n{}", modulus_table_text());

    let field = FieldSpec::for_order(16)?;
    println!("\n{field} multiplication table:");
    for a in field.elements() {
        let row: Vec<String> = field
            .elements()
            .map(|b| format!("{:>2}", field.mul(a, b).unwrap()))
            .collect();
        println!("{}", row.join(" "));
    }

    let x = GfElement::new(2);
    println!("\ninverse of x is {}", field.inv(x)?);
    println!("x^16 = {}", field.pow(x, 16)?);
    Ok(())
}
