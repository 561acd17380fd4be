//! Arithmetic in GF(2^r) for 1 <= r <= 16.
//!
//! Elements are stored as the integer whose bits are the GF(2) coefficients of
//! the element's polynomial representative, so `0b101` is `x^2 + 1`. Every
//! field uses a fixed modulus taken from [`MODULUS_TABLE`]: for each degree `r`
//! it is the numerically smallest irreducible polynomial of degree `r` with a
//! nonzero constant term. The same `q` therefore always yields the same field
//! representation, and designs built over it are reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// Canonical irreducible moduli, indexed by extension degree `r`.
///
/// Bit `k` holds the coefficient of `x^k`. Index 0 is unused.
pub const MODULUS_TABLE: [u32; 17] = [
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

/// Renders the modulus table as text, one `r: <hex>` line per degree.
pub fn modulus_table_text() -> String {
    (1..=MAX_DEGREE as usize)
        .map(|r| format!("{r}: {:#x}\n", MODULUS_TABLE[r]))
        .collect()
}

/// A concrete field GF(q) with q = 2^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    r: u32,
    q: u32,
    modulus: u32,
}

/// An element of some GF(q), held as its bit-vector value in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GfElement(u32);

impl GfElement {
    pub const ZERO: GfElement = GfElement(0);
    pub const ONE: GfElement = GfElement(1);

    /// Wraps a raw value without range checking. Field operations validate it.
    pub const fn new(value: u32) -> Self {
        GfElement(value)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FieldSpec {
    /// Returns the canonical field of order `q`.
    pub fn for_order(q: u64) -> Result<Self> {
        if q < 2 || !q.is_power_of_two() {
            return Err(Error::NotAPowerOfTwo(q));
        }
        let r = q.trailing_zeros();
        if r > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(r));
        }
        Ok(FieldSpec {
            r,
            q: q as u32,
            modulus: MODULUS_TABLE[r as usize],
        })
    }

    /// Returns the canonical field of degree `r` over GF(2).
    pub fn for_degree(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::NotAPowerOfTwo(1));
        }
        if r > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(r));
        }
        Self::for_order(1u64 << r)
    }

    /// Extension degree `r`.
    pub fn degree(&self) -> u32 {
        self.r
    }

    /// Field order `q = 2^r`.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus as a bitmask of length `r + 1`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Validates `value` as an element of this field.
    pub fn element(&self, value: u32) -> Result<GfElement> {
        self.check(GfElement(value))
    }

    /// All elements `0, 1, ..., q - 1` in order.
    pub fn elements(&self) -> impl Iterator<Item = GfElement> {
        (0..self.q).map(GfElement)
    }

    fn check(&self, a: GfElement) -> Result<GfElement> {
        if a.0 < self.q {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange {
                value: a.0,
                order: self.q,
            })
        }
    }

    pub fn add(&self, a: GfElement, b: GfElement) -> Result<GfElement> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(GfElement(a.0 ^ b.0))
    }

    /// Subtraction coincides with addition in characteristic 2.
    pub fn sub(&self, a: GfElement, b: GfElement) -> Result<GfElement> {
        self.add(a, b)
    }

    pub fn mul(&self, a: GfElement, b: GfElement) -> Result<GfElement> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(GfElement(self.mul_raw(a.0, b.0)))
    }

    pub fn inv(&self, a: GfElement) -> Result<GfElement> {
        let a = self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero(self.q));
        }
        // a^(q-1) = 1 for nonzero a
        Ok(GfElement(self.pow_raw(a.0, u64::from(self.q) - 2)))
    }

    pub fn div(&self, a: GfElement, b: GfElement) -> Result<GfElement> {
        let b_inv = self.inv(b)?;
        self.mul(a, b_inv)
    }

    pub fn pow(&self, a: GfElement, exp: u64) -> Result<GfElement> {
        let a = self.check(a)?;
        Ok(GfElement(self.pow_raw(a.0, exp)))
    }

    /// Shift-and-XOR product of two in-range values, reduced by the modulus.
    #[inline]
    pub(crate) fn mul_raw(&self, mut a: u32, mut b: u32) -> u32 {
        let mut acc = 0;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & self.q != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub(crate) fn pow_raw(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1;
        while exp != 0 {
            if exp & 1 != 0 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {:#x}", self.q, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::for_order(q).unwrap()
    }

    fn e(v: u32) -> GfElement {
        GfElement::new(v)
    }

    /// Schoolbook GF(2)[x] product followed by long-division reduction.
    fn oracle_mul(a: u32, b: u32, modulus: u32) -> u32 {
        let mut prod: u64 = 0;
        for i in 0..32 {
            if (b >> i) & 1 == 1 {
                prod ^= u64::from(a) << i;
            }
        }
        let mdeg = 31 - modulus.leading_zeros();
        while prod != 0 && 63 - prod.leading_zeros() >= mdeg {
            let shift = 63 - prod.leading_zeros() - mdeg;
            prod ^= u64::from(modulus) << shift;
        }
        prod as u32
    }

    fn poly_rem(mut a: u64, b: u64) -> u64 {
        let bdeg = 63 - b.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= bdeg {
            a ^= b << (63 - a.leading_zeros() - bdeg);
        }
        a
    }

    fn irreducible(p: u64) -> bool {
        let deg = 63 - p.leading_zeros();
        (2u64..(1 << (deg / 2 + 1))).all(|f| poly_rem(p, f) != 0)
    }

    #[test]
    fn field_for_order_examples() {
        let f2 = gf(2);
        assert_eq!((f2.degree(), f2.modulus()), (1, 0b11));
        let f4 = gf(4);
        assert_eq!((f4.degree(), f4.modulus()), (2, 0b111));
        assert_eq!(FieldSpec::for_order(3), Err(Error::NotAPowerOfTwo(3)));
        assert_eq!(FieldSpec::for_order(0), Err(Error::NotAPowerOfTwo(0)));
        assert_eq!(FieldSpec::for_order(1), Err(Error::NotAPowerOfTwo(1)));
        assert_eq!(
            FieldSpec::for_order(1 << 17),
            Err(Error::DegreeTooLarge(17))
        );
        assert_eq!(FieldSpec::for_degree(17), Err(Error::DegreeTooLarge(17)));
        assert_eq!(FieldSpec::for_degree(5).unwrap(), gf(32));
    }

    #[test]
    fn deterministic() {
        for r in 1..=MAX_DEGREE {
            assert_eq!(
                FieldSpec::for_degree(r).unwrap(),
                FieldSpec::for_degree(r).unwrap()
            );
        }
    }

    #[test]
    fn modulus_table_is_smallest_irreducible() {
        for r in 1..=MAX_DEGREE {
            let m = u64::from(MODULUS_TABLE[r as usize]);
            assert_eq!(63 - m.leading_zeros(), r, "degree of modulus {r}");
            assert_eq!(m & 1, 1);
            assert!(irreducible(m), "r = {r}");
            let smaller = ((1u64 << r)..m)
                .filter(|p| p & 1 == 1)
                .find(|&p| irreducible(p));
            assert_eq!(smaller, None, "r = {r}");
        }
        // no roots in GF(2) for degrees 2 and 3
        for m in &MODULUS_TABLE[2..=3] {
            assert_eq!(m & 1, 1);
            assert_eq!(m.count_ones() % 2, 1);
        }
    }

    #[test]
    fn modulus_table_text_format() {
        let text = modulus_table_text();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 16);
        assert_eq!(lines[0], "1: 0x3");
        assert_eq!(lines[7], "8: 0x11b");
        assert_eq!(lines[15], "16: 0x1002b");
    }

    #[test]
    fn add_examples() {
        let f = gf(4);
        assert_eq!(f.add(e(2), e(2)).unwrap(), e(0));
        assert_eq!(f.add(e(2), e(0)).unwrap(), e(2));
        assert_eq!(f.add(e(2), e(3)).unwrap(), e(1));
        assert_eq!(
            f.add(e(4), e(0)),
            Err(Error::ElementOutOfRange { value: 4, order: 4 })
        );
    }

    #[test]
    fn mul_examples() {
        let f = gf(4);
        assert_eq!(f.mul(e(2), e(1)).unwrap(), e(2));
        assert_eq!(f.mul(e(2), e(2)).unwrap(), e(oracle_mul(2, 2, 0b111)));
        assert_eq!(f.mul(e(2), e(2)).unwrap(), e(3));
        assert_eq!(f.mul(e(2), e(3)).unwrap(), e(oracle_mul(2, 3, 0b111)));
        assert_eq!(f.mul(e(2), e(3)).unwrap(), e(1));
        assert!(f.mul(e(0), e(9)).is_err());
    }

    #[test]
    fn inv_examples() {
        let f = gf(4);
        assert_eq!(f.inv(e(1)).unwrap(), e(1));
        let search = (1..4).find(|&b| oracle_mul(2, b, 0b111) == 1).unwrap();
        assert_eq!(f.inv(e(2)).unwrap(), e(search));
        assert_eq!(f.inv(e(2)).unwrap(), e(3));
        assert_eq!(f.inv(e(0)), Err(Error::DivisionByZero(4)));
        assert_eq!(f.div(e(1), e(0)), Err(Error::DivisionByZero(4)));
    }

    #[test]
    fn mul_matches_schoolbook_oracle() {
        for r in 1..=8 {
            let f = FieldSpec::for_degree(r).unwrap();
            for a in 0..f.order() {
                for b in 0..f.order() {
                    assert_eq!(f.mul_raw(a, b), oracle_mul(a, b, f.modulus()));
                }
            }
        }
        let f = gf(1 << 16);
        for (a, b) in [(0xffff, 0xffff), (0x8000, 0x2), (0x1234, 0xabcd)] {
            assert_eq!(f.mul_raw(a, b), oracle_mul(a, b, f.modulus()));
        }
    }

    #[test]
    fn inverses_in_large_field() {
        let f = gf(1 << 16);
        for a in (1..f.order()).step_by(97) {
            let ai = f.inv(e(a)).unwrap();
            assert_eq!(f.mul(e(a), ai).unwrap(), GfElement::ONE);
        }
    }
}
