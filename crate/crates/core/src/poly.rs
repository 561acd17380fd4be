//! Univariate polynomials over GF(q) and the base-q index scheme used to
//! enumerate them.
//!
//! Polynomial number `i` has the base-q digits of `i` as its coefficients,
//! lowest digit first. Indices `[j * q^d, (j + 1) * q^d)` are then exactly the
//! polynomials of degree at most `d` whose `x^d` coefficient is `j`, which lets
//! the rest of the crate treat those families as index ranges.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldSpec, GfElement};

/// Returns `q^q` if it fits in a `u128`.
pub fn index_limit(field: FieldSpec) -> Option<u128> {
    u128::from(field.order()).checked_pow(field.order())
}

pub(crate) fn check_index(field: FieldSpec, i: u128) -> Result<()> {
    match index_limit(field) {
        Some(limit) if i >= limit => Err(Error::IndexTooLarge {
            index: i,
            q: field.order(),
        }),
        _ => Ok(()),
    }
}

/// A polynomial over GF(q) with coefficients stored low to high.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has an empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<GfElement>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    /// Builds a polynomial from raw coefficient values, lowest degree first.
    pub fn from_coeffs(field: FieldSpec, coeffs: &[u32]) -> Result<Self> {
        let mut out = Vec::with_capacity(coeffs.len());
        for &c in coeffs {
            out.push(field.element(c)?);
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        Ok(Poly { field, coeffs: out })
    }

    /// The `i`-th polynomial: coefficient `k` is `floor(i / q^k) mod q`.
    pub fn from_index(field: FieldSpec, i: u64) -> Result<Self> {
        check_index(field, u128::from(i))?;
        Ok(Self::from_index_unchecked(field, i))
    }

    pub(crate) fn from_index_unchecked(field: FieldSpec, mut i: u64) -> Self {
        let q = u64::from(field.order());
        let mut coeffs = Vec::new();
        while i != 0 {
            coeffs.push(GfElement::new((i % q) as u32));
            i /= q;
        }
        Poly { field, coeffs }
    }

    /// Inverse of [`Poly::from_index`]. `None` if the index overflows `u128`.
    pub fn to_index(&self) -> Option<u128> {
        let q = u128::from(self.field.order());
        self.coeffs.iter().rev().try_fold(0u128, |acc, c| {
            acc.checked_mul(q)?.checked_add(u128::from(c.value()))
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[GfElement] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> GfElement {
        self.coeffs.get(k).copied().unwrap_or(GfElement::ZERO)
    }

    /// Highest `k` with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: GfElement) -> Result<GfElement> {
        let x = self.field.element(x.value())?;
        Ok(GfElement::new(self.eval_raw(x.value())))
    }

    #[inline]
    pub(crate) fn eval_raw(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| self.field.mul_raw(acc, x) ^ c.value())
    }

    /// Number of distinct roots in GF(q), by evaluating at every element.
    ///
    /// Constant polynomials, the zero polynomial included, count as having no
    /// roots.
    pub fn count_roots(&self) -> u32 {
        if self.is_constant() {
            return 0;
        }
        (0..self.field.order())
            .filter(|&x| self.eval_raw(x) == 0)
            .count() as u32
    }

    /// Coefficient-wise difference, which in characteristic 2 is also the sum.
    ///
    /// # Panics
    ///
    /// If the two polynomials live over different fields.
    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs: Vec<GfElement> = (0..len)
            .map(|k| GfElement::new(self.coeff(k).value() ^ other.coeff(k).value()))
            .collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: self.field,
            coeffs,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.sub(other)
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: GfElement) -> Result<Poly> {
        let s = self.field.element(s.value())?;
        if s.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| GfElement::new(self.field.mul_raw(c.value(), s.value())))
            .collect();
        Ok(Poly {
            field: self.field,
            coeffs,
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}*x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, v) => write!(f, "{v}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::for_order(q).unwrap()
    }

    fn poly(q: u64, coeffs: &[u32]) -> Poly {
        Poly::from_coeffs(gf(q), coeffs).unwrap()
    }

    #[test]
    fn from_index_examples() {
        assert!(Poly::from_index(gf(4), 0).unwrap().is_zero());
        assert_eq!(Poly::from_index(gf(4), 7).unwrap(), poly(4, &[3, 1]));
        assert_eq!(Poly::from_index(gf(2), 3).unwrap(), poly(2, &[1, 1]));
        assert_eq!(Poly::from_index(gf(4), 7).unwrap().to_string(), "x + 3");
    }

    #[test]
    fn from_index_limit() {
        assert!(Poly::from_index(gf(2), 3).is_ok());
        assert_eq!(
            Poly::from_index(gf(2), 4),
            Err(Error::IndexTooLarge { index: 4, q: 2 })
        );
        assert!(Poly::from_index(gf(4), 255).is_ok());
        assert!(Poly::from_index(gf(4), 256).is_err());
        // 16^16 = 2^64 exceeds every u64 index
        assert!(Poly::from_index(gf(16), u64::MAX).is_ok());
        assert_eq!(index_limit(gf(16)), Some(1u128 << 64));
        assert_eq!(index_limit(gf(64)), None);
    }

    #[test]
    fn from_coeffs_trims_and_checks() {
        assert!(poly(4, &[0, 0, 0]).is_zero());
        assert_eq!(poly(4, &[1, 2, 0]).degree(), Some(1));
        assert!(Poly::from_coeffs(gf(4), &[4]).is_err());
        assert_eq!(poly(2, &[1, 1, 1]).degree(), Some(2));
        assert_eq!(poly(2, &[1, 1, 1]).to_index(), Some(7));
    }

    #[test]
    fn eval_examples() {
        let f = gf(4);
        for x in f.elements() {
            assert_eq!(poly(4, &[2]).eval(x).unwrap(), GfElement::new(2));
        }
        assert_eq!(
            poly(4, &[3, 1]).eval(GfElement::new(2)).unwrap(),
            GfElement::new(1)
        );
        assert_eq!(
            poly(2, &[0, 1, 1]).eval(GfElement::ONE).unwrap(),
            GfElement::ZERO
        );
        assert!(poly(4, &[1]).eval(GfElement::new(4)).is_err());
    }

    #[test]
    fn count_roots_examples() {
        assert_eq!(Poly::zero(gf(2)).count_roots(), 0);
        assert_eq!(poly(8, &[0]).count_roots(), 0);
        assert_eq!(poly(8, &[5]).count_roots(), 0);
        assert_eq!(poly(2, &[0, 1]).count_roots(), 1);
        assert_eq!(poly(2, &[0, 1, 1]).count_roots(), 2);
    }

    #[test]
    fn root_count_bounded_by_degree_exhaustive() {
        for q in [2u64, 4, 8] {
            let f = gf(q);
            let limit = (q.pow(4)).min(index_limit(f).unwrap() as u64);
            for i in 0..limit {
                let p = Poly::from_index(f, i).unwrap();
                if let Some(deg) = p.degree().filter(|&d| d > 0) {
                    assert!(p.count_roots() as usize <= deg, "q={q} p={p}");
                }
            }
        }
    }

    #[test]
    fn scaling_preserves_roots() {
        let f = gf(8);
        for i in 0..512 {
            let p = Poly::from_index(f, i).unwrap();
            for s in 1..8 {
                let ps = p.scale(GfElement::new(s)).unwrap();
                for x in f.elements() {
                    assert_eq!(p.eval(x).unwrap().is_zero(), ps.eval(x).unwrap().is_zero());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn index_round_trip(r in 1u32..=5, i in any::<u64>()) {
            let f = FieldSpec::for_degree(r).unwrap();
            let i = index_limit(f).map_or(i, |limit| (u128::from(i) % limit) as u64);
            let p = Poly::from_index(f, i).unwrap();
            prop_assert_eq!(p.to_index(), Some(u128::from(i)));
            prop_assert!(p.coeffs().len() <= f.order() as usize);
        }

        #[test]
        fn root_count_bounded_by_degree(r in 1u32..=16, coeffs in prop::collection::vec(any::<u32>(), 2..6)) {
            let f = FieldSpec::for_degree(r).unwrap();
            let coeffs: Vec<u32> = coeffs.iter().map(|c| c % f.order()).collect();
            if let Ok(p) = Poly::from_coeffs(f, &coeffs) {
                if let Some(deg) = p.degree().filter(|&d| d > 0) {
                    prop_assert!(p.count_roots() as usize <= deg);
                }
            }
        }

        #[test]
        fn sub_is_pointwise(i in 0u64..4096, j in 0u64..4096, x in 0u32..8) {
            let f = gf(8);
            let (a, b) = (Poly::from_index(f, i).unwrap(), Poly::from_index(f, j).unwrap());
            let x = GfElement::new(x);
            let lhs = a.sub(&b).eval(x).unwrap();
            let rhs = f.sub(a.eval(x).unwrap(), b.eval(x).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
