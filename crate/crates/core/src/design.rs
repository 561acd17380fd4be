//! Design families, the refined Nisan-Wigderson builder, and exact
//! verification of standard and weak design parameters.
//!
//! A design family is a list of `n` sets `S_0, ..., S_{n-1}`, each with exactly
//! `q` elements drawn from `[l]`. Its overlap is summarized by a [`RhoReport`]:
//!
//! * `rho_standard = 2^{max_{i != j} |S_i ∩ S_j|}`;
//! * `rho_weak_n = max_i P_i / n`;
//! * `rho_weak_prefix = max_i P_i / (i + 1)`;
//!
//! where `P_i = Σ_{j < i} 2^{|S_i ∩ S_j|}`. All three are exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::lambda::{weighted_powers_of_two, BigCount, LambdaTable};
use crate::poly::{check_index, index_limit, Poly};

/// `n` sets of exactly `q` distinct elements of `[l]`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DesignFamily {
    set_size: usize,
    universe: u64,
    elems: Vec<u64>,
}

impl DesignFamily {
    /// Validates and normalizes a family. Each set is sorted; duplicates,
    /// out-of-range elements and wrong set sizes are rejected.
    pub fn new(set_size: usize, universe: u64, sets: Vec<Vec<u64>>) -> Result<Self> {
        if set_size == 0 {
            return Err(Error::MalformedDesign("set size must be positive".into()));
        }
        let mut elems = Vec::with_capacity(sets.len() * set_size);
        for (i, mut set) in sets.into_iter().enumerate() {
            if set.len() != set_size {
                return Err(Error::MalformedDesign(format!(
                    "set {i} has {} elements, expected {set_size}",
                    set.len()
                )));
            }
            set.sort_unstable();
            if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::MalformedDesign(format!(
                    "set {i} contains {} more than once",
                    w[0]
                )));
            }
            if let Some(&x) = set.last().filter(|&&x| x >= universe) {
                return Err(Error::MalformedDesign(format!(
                    "set {i} contains {x}, outside the universe [0, {universe})"
                )));
            }
            elems.extend_from_slice(&set);
        }
        Ok(DesignFamily {
            set_size,
            universe,
            elems,
        })
    }

    pub(crate) fn from_raw(set_size: usize, universe: u64, elems: Vec<u64>) -> Self {
        debug_assert_eq!(elems.len() % set_size, 0);
        DesignFamily {
            set_size,
            universe,
            elems,
        }
    }

    /// Parses a dense 0/1 matrix, one row per set.
    ///
    /// The set size is taken from the first row's weight and the universe size
    /// from the row length; every row must agree on both.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::MalformedDesign("matrix has no rows".into()))?;
        let universe = first.len() as u64;
        let set_size = first.iter().filter(|&&b| b != 0).count();
        let mut sets = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() as u64 != universe {
                return Err(Error::MalformedDesign(format!(
                    "row {i} has length {}, expected {universe}",
                    row.len()
                )));
            }
            if let Some(b) = row.iter().find(|&&b| b > 1) {
                return Err(Error::MalformedDesign(format!(
                    "row {i} contains entry {b}"
                )));
            }
            sets.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b == 1)
                    .map(|(k, _)| k as u64)
                    .collect(),
            );
        }
        Self::new(set_size, universe, sets)
    }

    /// Number of sets `n`.
    pub fn len(&self) -> usize {
        self.elems.len() / self.set_size
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Common set size `q`.
    pub fn set_size(&self) -> usize {
        self.set_size
    }

    /// Universe size `l`.
    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn set(&self, i: usize) -> &[u64] {
        &self.elems[i * self.set_size..(i + 1) * self.set_size]
    }

    pub fn sets(&self) -> impl ExactSizeIterator<Item = &[u64]> + '_ {
        self.elems.chunks_exact(self.set_size)
    }

    /// Dense 0/1 rows, one per set, `l` columns each.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        self.sets()
            .map(|set| {
                let mut row = vec![0u8; self.universe as usize];
                for &x in set {
                    row[x as usize] = 1;
                }
                row
            })
            .collect()
    }

    /// Returns the family with its sets reordered by `order`.
    ///
    /// # Panics
    ///
    /// If `order` has an index out of range.
    pub fn reordered(&self, order: &[usize]) -> DesignFamily {
        let elems = order.iter().flat_map(|&i| self.set(i)).copied().collect();
        Self::from_raw(self.set_size, self.universe, elems)
    }
}

/// Size of the intersection of two sorted slices.
pub fn intersection_size(a: &[u64], b: &[u64]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Exact overlap statistics of a design family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoReport {
    /// Entry `i` is `Σ_{j<i} 2^{|S_i ∩ S_j|}`.
    pub prefix_sums: Vec<BigCount>,
    /// `max_{i != j} |S_i ∩ S_j|`, zero for fewer than two sets.
    pub max_overlap: usize,
    /// `2^max_overlap`.
    pub rho_standard: BigCount,
    /// `max_i prefix_sums[i] / n`, zero for an empty family.
    pub rho_weak_n: BigRational,
    /// `max_i prefix_sums[i] / (i + 1)`.
    pub rho_weak_prefix: BigRational,
}

impl RhoReport {
    pub fn n(&self) -> usize {
        self.prefix_sums.len()
    }

    pub fn max_prefix_sum(&self) -> BigCount {
        self.prefix_sums.iter().max().cloned().unwrap_or_default()
    }

    /// Every prefix sum is at most `n * rho`.
    pub fn is_weak_design(&self, rho: &BigRational) -> bool {
        let n = BigRational::from_integer(BigInt::from(self.n()));
        let limit = n * rho;
        self.prefix_sums.iter().all(|s| to_rational(s) <= limit)
    }

    /// Every prefix sum `i` is at most `(i + 1) * rho`.
    pub fn is_prefix_weak_design(&self, rho: &BigRational) -> bool {
        self.prefix_sums
            .iter()
            .enumerate()
            .all(|(i, s)| to_rational(s) <= BigRational::from_integer(BigInt::from(i + 1)) * rho)
    }

    /// Every pairwise intersection is at most `log2 rho`.
    pub fn is_standard_design(&self, rho: &BigRational) -> bool {
        to_rational(&self.rho_standard) <= *rho
    }
}

pub(crate) fn to_rational(v: &BigCount) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Computes the exact [`RhoReport`] by pairwise intersection of all sets.
///
/// Works on any family; nothing about the refined construction is assumed.
pub fn verify(design: &DesignFamily) -> RhoReport {
    let n = design.len();
    let rows: Vec<(BigCount, usize)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut hist = vec![0u64; design.set_size() + 1];
            let si = design.set(i);
            for j in 0..i {
                hist[intersection_size(si, design.set(j))] += 1;
            }
            let max = hist.iter().rposition(|&c| c != 0).unwrap_or(0);
            (weighted_powers_of_two(&hist), max)
        })
        .collect();

    let max_overlap = rows.iter().map(|r| r.1).max().unwrap_or(0);
    let prefix_sums: Vec<BigCount> = rows.into_iter().map(|r| r.0).collect();

    let rho_weak_n = match prefix_sums.iter().max() {
        Some(m) => BigRational::new(BigInt::from(m.clone()), BigInt::from(n)),
        None => BigRational::zero(),
    };
    let rho_weak_prefix = prefix_sums
        .iter()
        .enumerate()
        .map(|(i, s)| BigRational::new(BigInt::from(s.clone()), BigInt::from(i + 1)))
        .max()
        .unwrap_or_else(BigRational::zero);

    RhoReport {
        prefix_sums,
        max_overlap,
        rho_standard: BigCount::one() << max_overlap,
        rho_weak_n,
        rho_weak_prefix,
    }
}

/// Smallest `d` with `n <= q^{d+1}`: the top degree among the first `n`
/// polynomials. Returns 0 for `n <= 1`.
pub fn top_degree(field: FieldSpec, n: u64) -> u32 {
    let q = u128::from(field.order());
    let mut d = 0;
    let mut reach = q;
    while reach < u128::from(n) {
        reach *= q;
        d += 1;
    }
    d
}

/// Checks `1 <= n <= q^q`.
pub(crate) fn check_set_count(field: FieldSpec, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyDesign);
    }
    if index_limit(field).is_some_and(|limit| u128::from(n) > limit) {
        return Err(Error::TooManySets {
            n,
            q: field.order(),
        });
    }
    Ok(())
}

/// Builds `S_0, ..., S_{n-1}` with `S_i = { j q + φ_i(j) : j in GF(q) }`
/// over the universe `[q^2]`, where `φ_i` is [`Poly::from_index`]`(i)`.
pub fn build_refined_nw(field: FieldSpec, n: u64) -> Result<DesignFamily> {
    check_set_count(field, n)?;
    let q = u64::from(field.order());
    let elems: Vec<u64> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let p = Poly::from_index_unchecked(field, i);
            (0..field.order()).map(move |x| u64::from(x) * q + u64::from(p.eval_raw(x)))
        })
        .collect();
    Ok(DesignFamily::from_raw(q as usize, q * q, elems))
}

/// `Σ_{j <= i} 2^{|S_i ∩ S_j|}` for the refined construction, self term
/// included, evaluated from the base-q digits of `i + 1` and closed-form
/// `Λ` values without touching any set.
///
/// With `i + 1 = Σ_{k=k*}^{d} a_k q^k` (`a_d`, `a_{k*}` nonzero) the sum is
/// `Σ_k a_k Λ(N(k,1)) - Λ(N(k*,1)) + Λ(N(k*,0))`.
pub fn prefix_sum_analytic(field: FieldSpec, i: u64) -> Result<BigCount> {
    check_index(field, u128::from(i))?;
    let q = u128::from(field.order());
    let mut digits = Vec::new();
    let mut rest = u128::from(i) + 1;
    while rest != 0 {
        digits.push((rest % q) as u64);
        rest /= q;
    }
    let top = digits.len() as u32 - 1;
    let lowest = digits.iter().position(|&a| a != 0).unwrap_or(0) as u32;
    let table = LambdaTable::new(field, top)?;

    let mut sum: BigCount = digits
        .iter()
        .enumerate()
        .skip(lowest as usize)
        .map(|(k, &a)| table.nonzero_lead(k as u32) * a)
        .sum();
    sum += table.zero_lead(lowest);
    sum -= table.nonzero_lead(lowest);
    Ok(sum)
}

/// `(1 + 1/q)^q` as an exact rational.
///
/// # Panics
///
/// If `q < 2`.
pub fn theorem_bound(q: u64) -> BigRational {
    assert!(q >= 2, "q must be at least 2");
    let exp = u32::try_from(q).expect("q fits in u32");
    let num = num_traits::pow(BigInt::from(q + 1), exp as usize);
    let den = num_traits::pow(BigInt::from(q), exp as usize);
    BigRational::new(num, den)
}

/// `Σ_{k=0}^{terms} 1/k!`, a rational strictly below `e`.
pub fn euler_lower_bound(terms: u32) -> BigRational {
    let mut sum = BigRational::zero();
    let mut fact = BigInt::one();
    for k in 0..=terms {
        if k > 0 {
            fact *= k;
        }
        sum += BigRational::new(BigInt::one(), fact.clone());
    }
    sum
}

/// `true` when `rho` is below the 30-term partial sum of `e`, which implies
/// `rho < e`. Values within `1/31!` of `e` report `false`.
pub fn below_e(rho: &BigRational) -> bool {
    rho < &euler_lower_bound(30)
}

/// `true` when `rho < e^2`, using the square of a partial sum of `e`.
pub fn below_e_squared(rho: &BigRational) -> bool {
    let lower = euler_lower_bound(30);
    rho < &(&lower * &lower)
}
