//! Measured weak-design parameters against (1 + 1/q)^q over a grid.
//!
//! cargo run --release --example rho_sweep

use nwdesign::sweep::{default_grid, sweep};

fn main() -> nwdesign::Result<()> {
    println!(
        "{:>3} {:>5} {:>12} {:>16} {:>12} {:>10}",
        "q", "n", "rho_weak_n", "rho_weak_prefix", "rho_standard", "bound"
    );
    for q in [2u64, 4, 8, 16] {
        for row in sweep(&[q], &default_grid(q))? {
            println!(
                "{:>3} {:>5} {:>12.6} {:>16.6} {:>12} {:>10.6}{}",
                row.q,
                row.n,
                row.rho_weak_n_f64(),
                row.rho_weak_prefix_f64(),
                row.rho_standard,
                num_traits::ToPrimitive::to_f64(&row.bound).unwrap(),
                if row.ok { "" } else { "  VIOLATED" }
            );
        }
    }
    Ok(())
}
