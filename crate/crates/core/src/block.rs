//! Block designs with weak parameter 1.
//!
//! A refined NW family with weak parameter `rho > 1` is turned into a family
//! with parameter 1 by laying `b + 1` copies of the universe side by side.
//! Block `k` holds the first `sizes[k]` sets of the base family shifted into
//! `[k l, (k + 1) l)`. Sets in different blocks are disjoint, so each set of
//! block `k` sees every earlier set of earlier blocks with weight `2^0 = 1`.
//!
//! The target count is `n' = ceil(n rho)`. Blocks are filled greedily: the
//! next base set joins the current block if its prefix sum inside the combined
//! family (sets before the block, plus its own prefix sum in the base) stays
//! within `n'`; otherwise a new block starts from `S_0`. This is the literal
//! weak-design test with `rho = 1`, applied one set at a time.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::design::{build_refined_nw, to_rational, verify, DesignFamily, RhoReport};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::lambda::BigCount;

/// Least `b >= 0` with `n rho (1 - 1/rho)^b <= q`.
///
/// This is the ceiling of `(log n + log rho - log q) / (log rho - log(rho - 1))`,
/// evaluated with exact rationals. Returns 0 for `rho = 1`.
pub fn block_count(n: u64, q: u64, rho: &BigRational) -> Result<u64> {
    if rho < &BigRational::one() {
        return Err(Error::InvalidRho(format!("rho = {rho} is below 1")));
    }
    if q == 0 {
        return Err(Error::InvalidRho("q must be positive".into()));
    }
    if rho.is_one() {
        return Ok(0);
    }
    let q = BigRational::from_integer(BigInt::from(q));
    let shrink = BigRational::one() - rho.recip();
    let mut remaining = BigRational::from_integer(BigInt::from(n)) * rho;
    let mut b = 0;
    while remaining > q {
        remaining *= &shrink;
        b += 1;
    }
    Ok(b)
}

/// A weak design with parameter 1 assembled from refined NW blocks.
#[derive(Debug, Clone)]
pub struct BlockDesign {
    base: DesignFamily,
    base_report: RhoReport,
    rho_input: BigRational,
    sizes: Vec<u64>,
    combined: DesignFamily,
    combined_report: RhoReport,
}

/// JSON summary written next to a block design file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSidecar {
    pub b: u64,
    pub sizes: Vec<u64>,
    pub n_prime: u64,
    pub l_prime: u64,
    pub rho_input: String,
}

impl BlockDesign {
    /// The refined NW family the blocks are cut from.
    pub fn base(&self) -> &DesignFamily {
        &self.base
    }

    pub fn base_report(&self) -> &RhoReport {
        &self.base_report
    }

    /// Measured `rho_weak_n` of the base, used to size the target `n'`.
    pub fn rho_input(&self) -> &BigRational {
        &self.rho_input
    }

    /// Index of the last block; blocks are numbered `0..=b`.
    pub fn b(&self) -> u64 {
        self.sizes.len() as u64 - 1
    }

    /// Sets per block.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn n_prime(&self) -> u64 {
        self.combined.len() as u64
    }

    pub fn l_prime(&self) -> u64 {
        self.combined.universe()
    }

    pub fn combined(&self) -> &DesignFamily {
        &self.combined
    }

    /// Verifier output for the combined family.
    pub fn combined_report(&self) -> &RhoReport {
        &self.combined_report
    }

    pub fn sidecar(&self) -> BlockSidecar {
        BlockSidecar {
            b: self.b(),
            sizes: self.sizes.clone(),
            n_prime: self.n_prime(),
            l_prime: self.l_prime(),
            rho_input: format!("{}/{}", self.rho_input.numer(), self.rho_input.denom()),
        }
    }

    /// Block index holding combined set `i`.
    pub fn block_of(&self, i: usize) -> usize {
        let mut seen = 0;
        for (k, &size) in self.sizes.iter().enumerate() {
            seen += size as usize;
            if i < seen {
                return k;
            }
        }
        panic!("set index {i} out of range");
    }
}

fn ceil_to_u64(v: &BigRational) -> u64 {
    v.numer()
        .div_ceil(v.denom())
        .to_u64()
        .expect("target set count fits in u64")
}

/// Greedy block sizes for reaching `n_prime` sets given the base prefix sums.
fn schedule(base_prefix: &[BigCount], n_prime: u64) -> Vec<u64> {
    let n = base_prefix.len();
    let target = BigCount::from(n_prime);
    let mut sizes = Vec::new();
    let mut before = BigCount::zero();
    let mut current = 0usize;
    let mut placed = 0u64;
    while placed < n_prime {
        if current < n && &before + &base_prefix[current] <= target {
            current += 1;
            placed += 1;
        } else {
            sizes.push(current as u64);
            before += current;
            current = 0;
        }
    }
    sizes.push(current as u64);
    sizes
}

/// Builds the refined NW family of `n` sets and spreads it over blocks until
/// the combined family is a weak design with parameter 1.
pub fn build_block_design(field: FieldSpec, n: u64) -> Result<BlockDesign> {
    let base = build_refined_nw(field, n)?;
    let base_report = verify(&base);
    let rho_input = base_report.rho_weak_n.clone();

    let n_prime = if rho_input <= BigRational::one() {
        n
    } else {
        ceil_to_u64(&(BigRational::from_integer(BigInt::from(n)) * &rho_input))
    };
    let sizes = schedule(&base_report.prefix_sums, n_prime);

    let l = base.universe();
    let mut elems = Vec::with_capacity(n_prime as usize * base.set_size());
    for (k, &size) in sizes.iter().enumerate() {
        let offset = k as u64 * l;
        for i in 0..size as usize {
            elems.extend(base.set(i).iter().map(|x| x + offset));
        }
    }
    let combined = DesignFamily::from_raw(base.set_size(), l * sizes.len() as u64, elems);
    let combined_report = verify(&combined);
    if !combined_report.is_weak_design(&BigRational::one()) {
        return Err(Error::InvariantViolation(format!(
            "block design for q = {}, n = {n} has a prefix sum above n' = {n_prime}",
            field.order()
        )));
    }

    Ok(BlockDesign {
        base,
        base_report,
        rho_input,
        sizes,
        combined,
        combined_report,
    })
}

/// `Σ_{k' < k} sizes[k'] + rho * sizes[k]` for each block `k`.
pub fn block_loads(sizes: &[u64], rho: &BigRational) -> Vec<BigRational> {
    let mut before = BigRational::zero();
    sizes
        .iter()
        .map(|&s| {
            let s = to_rational(&BigCount::from(s));
            let load = &before + rho * &s;
            before += s;
            load
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::for_order(q).unwrap()
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn block_count_examples() {
        assert_eq!(block_count(4, 2, &ratio(5, 4)).unwrap(), 1);
        assert_eq!(block_count(2, 4, &ratio(3, 2)).unwrap(), 0);
        assert_eq!(block_count(100, 2, &BigRational::one()).unwrap(), 0);
        assert!(matches!(
            block_count(4, 2, &ratio(1, 2)),
            Err(Error::InvalidRho(_))
        ));
    }

    #[test]
    fn block_count_against_float_formula() {
        for (n, q, rho) in [
            (4096u64, 16u64, ratio(5, 2)),
            (256, 4, ratio(21, 10)),
            (1000, 8, ratio(3, 2)),
        ] {
            let r = rho.to_f64().unwrap();
            let raw =
                ((n as f64).log2() + r.log2() - (q as f64).log2()) / (r.log2() - (r - 1.0).log2());
            assert_eq!(block_count(n, q, &rho).unwrap(), raw.ceil() as u64);
        }
    }

    #[test]
    fn block_count_grows_logarithmically() {
        let rho = ratio(5, 2);
        let counts: Vec<u64> = (4..40)
            .map(|e| block_count(1 << e, 16, &rho).unwrap())
            .collect();
        for w in counts.windows(2) {
            assert!(w[1] >= w[0] && w[1] - w[0] <= 2);
        }
    }

    #[test]
    fn q2_n4() {
        let bd = build_block_design(gf(2), 4).unwrap();
        assert_eq!(bd.b(), 1);
        assert_eq!(bd.sizes(), [4, 1]);
        assert_eq!((bd.n_prime(), bd.l_prime()), (5, 8));
        assert_eq!(bd.rho_input(), &ratio(5, 4));
        let sets: Vec<&[u64]> = bd.combined().sets().collect();
        assert_eq!(sets, [&[0, 2][..], &[1, 3], &[0, 3], &[1, 2], &[4, 6]]);
        assert_eq!(bd.combined_report().max_prefix_sum(), BigCount::from(5u32));
        assert_eq!(
            bd.sidecar(),
            BlockSidecar {
                b: 1,
                sizes: vec![4, 1],
                n_prime: 5,
                l_prime: 8,
                rho_input: "5/4".into()
            }
        );
        assert_eq!(bd.block_of(3), 0);
        assert_eq!(bd.block_of(4), 1);
    }

    #[test]
    fn already_weak_base_is_returned_unchanged() {
        for (q, n) in [(4u64, 4u64), (2, 1), (8, 3)] {
            let bd = build_block_design(gf(q), n).unwrap();
            assert_eq!(bd.b(), 0);
            assert_eq!(bd.combined(), bd.base());
        }
    }

    #[test]
    fn blocks_are_prefixes_of_the_base() {
        let bd = build_block_design(gf(4), 200).unwrap();
        let l = bd.base().universe();
        let mut idx = 0;
        for (k, &size) in bd.sizes().iter().enumerate() {
            for i in 0..size as usize {
                let shifted: Vec<u64> = bd.base().set(i).iter().map(|x| x + k as u64 * l).collect();
                assert_eq!(bd.combined().set(idx), shifted.as_slice());
                idx += 1;
            }
        }
        assert_eq!(bd.sizes().iter().sum::<u64>(), bd.n_prime());
        assert!(bd.sizes().windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn loads() {
        let loads = block_loads(&[4, 1], &ratio(5, 4));
        assert_eq!(loads, [ratio(5, 1), ratio(21, 4)]);
    }
}
