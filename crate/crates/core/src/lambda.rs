//! Root-weighted counts over polynomial families.
//!
//! For a family `M` of polynomials, `Λ(M) = Σ_{φ ∈ M} 2^{λ(φ)}` where `λ(φ)`
//! is the number of roots of `φ` in GF(q) (zero for constants). The families
//! of interest are `N(d, j)`: polynomials of degree at most `d` whose `x^d`
//! coefficient is `j`. `Λ(N(d, j))` can be computed two ways here:
//!
//! * by enumeration ([`lambda_n_enumerated`]), walking the index range of
//!   `N(d, j)` and counting roots exhaustively;
//! * in closed form ([`lambda_n_analytic`]). For `j != 0` every member of
//!   `N(d, j)` is a scalar multiple of a monic degree-`d` polynomial, and
//!   counting monic polynomials divisible by each product of distinct linear
//!   factors gives `Σ_{t=0}^{d} q^{d-t} C(q, t)`. For `j = 0` the family splits
//!   into the zero polynomial plus `q - 1` copies of each `N(k, 1)`, `k < d`.

use std::borrow::Borrow;
use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::{FieldSpec, GfElement};
use crate::poly::Poly;

/// Exact non-negative count.
pub type BigCount = BigUint;

/// `Σ_k hist[k] * 2^k`.
pub(crate) fn weighted_powers_of_two(hist: &[u64]) -> BigCount {
    let mut total = BigCount::zero();
    for (k, &count) in hist.iter().enumerate().rev() {
        if count != 0 {
            total += BigCount::from(count) << k;
        }
    }
    total
}

/// `C(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// `Σ 2^{λ(φ)}` over the given polynomials.
pub fn lambda_set<I, P>(polys: I) -> BigCount
where
    I: IntoIterator<Item = P>,
    P: Borrow<Poly>,
{
    let mut hist: Vec<u64> = Vec::new();
    for p in polys {
        let roots = p.borrow().count_roots() as usize;
        if hist.len() <= roots {
            hist.resize(roots + 1, 0);
        }
        hist[roots] += 1;
    }
    weighted_powers_of_two(&hist)
}

fn check_family(field: FieldSpec, d: u32, j: GfElement) -> Result<()> {
    let j = field.element(j.value())?;
    let q = field.order();
    // N(q, 0) is every polynomial of degree below q; N(q, j != 0) would need degree q.
    if d > q || (d == q && !j.is_zero()) {
        return Err(Error::DegreeOutOfRange { d, q });
    }
    Ok(())
}

/// Index range `[j q^d, (j + 1) q^d)` of `N(d, j)`.
pub fn n_set_range(field: FieldSpec, d: u32, j: GfElement) -> Result<Range<u64>> {
    check_family(field, d, j)?;
    let too_big = || Error::DegreeOutOfRange {
        d,
        q: field.order(),
    };
    let block = u64::from(field.order())
        .checked_pow(d)
        .ok_or_else(too_big)?;
    let start = block
        .checked_mul(u64::from(j.value()))
        .ok_or_else(too_big)?;
    let end = start.checked_add(block).ok_or_else(too_big)?;
    Ok(start..end)
}

/// Iterates over the members of `N(d, j)` in index order.
pub fn n_set(field: FieldSpec, d: u32, j: GfElement) -> Result<impl Iterator<Item = Poly>> {
    let range = n_set_range(field, d, j)?;
    Ok(range.map(move |i| Poly::from_index_unchecked(field, i)))
}

/// `Λ(N(d, j))` by exhaustive enumeration.
pub fn lambda_n_enumerated(field: FieldSpec, d: u32, j: GfElement) -> Result<BigCount> {
    Ok(lambda_set(n_set(field, d, j)?))
}

/// Closed-form values `Λ(N(k, 1))` and `Λ(N(k, 0))` for `k = 0..=d_max`.
#[derive(Debug, Clone)]
pub struct LambdaTable {
    field: FieldSpec,
    monic: Vec<BigCount>,
    low: Vec<BigCount>,
}

impl LambdaTable {
    /// Builds the table up to degree `d_max <= q`.
    pub fn new(field: FieldSpec, d_max: u32) -> Result<Self> {
        let q = field.order();
        if d_max > q {
            return Err(Error::DegreeOutOfRange { d: d_max, q });
        }
        let q_big = BigCount::from(q);
        let mut monic = Vec::with_capacity(d_max as usize + 1);
        let mut low = Vec::with_capacity(d_max as usize + 1);
        let mut choose = BigCount::one();
        monic.push(BigCount::one());
        low.push(BigCount::one());
        for k in 1..=u64::from(d_max) {
            // C(q, k) from C(q, k - 1)
            choose = choose * (u64::from(q) + 1 - k) / k;
            let prev_monic = &monic[k as usize - 1];
            let next_monic = &q_big * prev_monic + &choose;
            let next_low = &low[k as usize - 1] + prev_monic * (q - 1);
            monic.push(next_monic);
            low.push(next_low);
        }
        Ok(LambdaTable { field, monic, low })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Largest tabulated degree.
    pub fn max_degree(&self) -> u32 {
        self.monic.len() as u32 - 1
    }

    /// `Λ(N(k, j))` for any `j != 0`.
    ///
    /// # Panics
    ///
    /// If `k` is beyond [`LambdaTable::max_degree`].
    pub fn nonzero_lead(&self, k: u32) -> &BigCount {
        &self.monic[k as usize]
    }

    /// `Λ(N(k, 0))`.
    ///
    /// # Panics
    ///
    /// If `k` is beyond [`LambdaTable::max_degree`].
    pub fn zero_lead(&self, k: u32) -> &BigCount {
        &self.low[k as usize]
    }
}

/// `Λ(N(d, j))` in closed form.
///
/// Requires `d < q` for `j != 0` and `d <= q` for `j = 0`.
pub fn lambda_n_analytic(field: FieldSpec, d: u32, j: GfElement) -> Result<BigCount> {
    check_family(field, d, j)?;
    let table = LambdaTable::new(field, d)?;
    Ok(if j.is_zero() {
        table.zero_lead(d).clone()
    } else {
        table.nonzero_lead(d).clone()
    })
}
