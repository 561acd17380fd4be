//! Refined Nisan-Wigderson combinatorial designs over GF(2^r).
//!
//! The crate builds the family `S_i = { <x, φ_i(x)> : x in GF(q) }` where the
//! coefficients of `φ_i` are the base-q digits of `i`, verifies standard and
//! weak design parameters of arbitrary families with exact arithmetic,
//! evaluates the same overlap sums in closed form, and spreads a family over
//! disjoint blocks to reach weak parameter 1.
//!
//! ```
//! use nwdesign::{build_refined_nw, verify, FieldSpec};
//! use num_rational::BigRational;
//!
//! let field = FieldSpec::for_order(2)?;
//! let design = build_refined_nw(field, 4)?;
//! let report = verify(&design);
//! assert_eq!(report.rho_weak_n, BigRational::new(5.into(), 4.into()));
//! # Ok::<(), nwdesign::Error>(())
//! ```

pub mod block;
pub mod cli;
pub mod design;
pub mod error;
pub mod format;
pub mod gf;
pub mod lambda;
pub mod poly;
pub mod sweep;

pub use block::{block_count, build_block_design, BlockDesign, BlockSidecar};
pub use design::{
    build_refined_nw, intersection_size, prefix_sum_analytic, theorem_bound, verify, DesignFamily,
    RhoReport,
};
pub use error::{Error, Result};
pub use gf::{FieldSpec, GfElement};
pub use lambda::{lambda_n_analytic, lambda_n_enumerated, lambda_set, BigCount, LambdaTable};
pub use poly::Poly;
