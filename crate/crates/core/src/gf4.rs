//! Arithmetic in GF(4) = {0, 1, α, α²} and over words of GF(4)^n.
//!
//! Elements are encoded by the digits 0, 1, 2, 3 with 2 = α and 3 = α².
//! Writing an element as `lo + hi·α` with `lo, hi ∈ GF(2)`, that digit is
//! exactly the two-bit pattern `hi lo`, so addition is XOR of digits.
//!
//! [`Gf4Vector`] stores a word as two bitplanes (`lo` and `hi`), 64
//! coordinates per machine word. Addition is a pair of XORs, Hamming weight is
//! `popcount(lo | hi)`, and both inner products reduce to a handful of bitwise
//! operations followed by parities.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// One element of GF(4).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf4(u8);

const MUL_TABLE: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const ALPHA: Gf4 = Gf4(2);
    pub const ALPHA2: Gf4 = Gf4(3);

    /// All four elements in digit order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::ALPHA, Gf4::ALPHA2];
    /// The multiplicative group.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::ALPHA, Gf4::ALPHA2];

    /// Parses a digit in `0..=3`.
    pub fn from_digit(d: u8) -> Option<Gf4> {
        (d < 4).then_some(Gf4(d))
    }

    pub fn digit(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The Frobenius conjugate `a²`. Fixes 0 and 1, swaps α and α².
    pub fn conjugate(self) -> Gf4 {
        // lo' = lo ^ hi, hi' = hi
        Gf4(self.0 ^ (self.0 >> 1))
    }

    /// Absolute trace `a + a²`, which lands in GF(2). Equals the `hi` bit.
    pub fn trace(self) -> u8 {
        self.0 >> 1
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(self) -> Option<Gf4> {
        // a³ = 1 so a⁻¹ = a²
        (!self.is_zero()).then(|| self.conjugate())
    }
}

// addition in characteristic 2 is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Free-function forms of the field operations.
pub fn add(a: Gf4, b: Gf4) -> Gf4 {
    a + b
}

pub fn mul(a: Gf4, b: Gf4) -> Gf4 {
    a * b
}

pub fn conjugate(a: Gf4) -> Gf4 {
    a.conjugate()
}

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A word of GF(4)^n in bitplane form.
///
/// Bits beyond `len` in the last plane word are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Vector {
    len: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Gf4Vector {
    pub fn zeros(len: usize) -> Self {
        let w = words_for(len);
        Gf4Vector {
            len,
            lo: vec![0; w],
            hi: vec![0; w],
        }
    }

    /// The all-one word of length `len`.
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, Gf4::ONE);
        }
        v
    }

    /// The unit word with `value` at `index`.
    pub fn unit(len: usize, index: usize, value: Gf4) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, value);
        v
    }

    pub fn from_elements(elems: &[Gf4]) -> Self {
        let mut v = Self::zeros(elems.len());
        for (i, &e) in elems.iter().enumerate() {
            v.set(i, e);
        }
        v
    }

    /// Builds a word from 0/1/2/3 digits.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let mut v = Self::zeros(digits.len());
        for (i, &d) in digits.iter().enumerate() {
            let e = Gf4::from_digit(d).ok_or_else(|| Error::Format {
                line: 0,
                msg: format!("digit {d} at position {i} is not in 0..=3"),
            })?;
            v.set(i, e);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Gf4 {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let (w, b) = (i / WORD, i % WORD);
        let lo = (self.lo[w] >> b) & 1;
        let hi = (self.hi[w] >> b) & 1;
        Gf4((lo | (hi << 1)) as u8)
    }

    pub fn set(&mut self, i: usize, value: Gf4) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let (w, b) = (i / WORD, i % WORD);
        let mask = 1u64 << b;
        self.lo[w] = (self.lo[w] & !mask) | (((value.0 & 1) as u64) << b);
        self.hi[w] = (self.hi[w] & !mask) | ((((value.0 >> 1) & 1) as u64) << b);
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf4> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_digits(&self) -> Vec<u8> {
        self.iter().map(Gf4::digit).collect()
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (l | h).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|&w| w == 0)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.lo
            .iter()
            .zip(&self.hi)
            .enumerate()
            .find(|(_, (l, h))| (**l | **h) != 0)
            .map(|(w, (l, h))| w * WORD + (l | h).trailing_zeros() as usize)
    }

    /// Multiplies every coordinate by `c`.
    pub fn scale(&self, c: Gf4) -> Gf4Vector {
        let mut out = self.clone();
        out.scale_in_place(c);
        out
    }

    pub fn scale_in_place(&mut self, c: Gf4) {
        match c.0 {
            0 => {
                self.lo.iter_mut().for_each(|w| *w = 0);
                self.hi.iter_mut().for_each(|w| *w = 0);
            }
            1 => {}
            // α(lo + α hi) = hi + α(lo + hi)
            2 => {
                for (l, h) in self.lo.iter_mut().zip(self.hi.iter_mut()) {
                    let (a, b) = (*l, *h);
                    *l = b;
                    *h = a ^ b;
                }
            }
            // α²(lo + α hi) = (lo + hi) + α lo
            _ => {
                for (l, h) in self.lo.iter_mut().zip(self.hi.iter_mut()) {
                    let (a, b) = (*l, *h);
                    *l = a ^ b;
                    *h = a;
                }
            }
        }
    }

    /// Coordinate-wise Frobenius conjugate.
    pub fn conjugate(&self) -> Gf4Vector {
        let mut out = self.clone();
        for (l, h) in out.lo.iter_mut().zip(&out.hi) {
            *l ^= *h;
        }
        out
    }

    fn check_len(&self, other: &Gf4Vector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::Dimension {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    /// `self += c·other`.
    pub fn axpy(&mut self, c: Gf4, other: &Gf4Vector) {
        assert_eq!(self.len, other.len, "length mismatch in axpy");
        match c.0 {
            0 => {}
            1 => self.xor_planes(&other.lo, &other.hi),
            2 => {
                for i in 0..self.lo.len() {
                    let (a, b) = (other.lo[i], other.hi[i]);
                    self.lo[i] ^= b;
                    self.hi[i] ^= a ^ b;
                }
            }
            _ => {
                for i in 0..self.lo.len() {
                    let (a, b) = (other.lo[i], other.hi[i]);
                    self.lo[i] ^= a ^ b;
                    self.hi[i] ^= a;
                }
            }
        }
    }

    fn xor_planes(&mut self, lo: &[u64], hi: &[u64]) {
        for (d, s) in self.lo.iter_mut().zip(lo) {
            *d ^= s;
        }
        for (d, s) in self.hi.iter_mut().zip(hi) {
            *d ^= s;
        }
    }

    /// Hermitian form `Σ xᵢ·yᵢ²`.
    pub fn hermitian_inner(&self, other: &Gf4Vector) -> Result<Gf4> {
        self.check_len(other)?;
        let (mut lo_par, mut hi_par) = (0u32, 0u32);
        for i in 0..self.lo.len() {
            let (a, b) = (self.lo[i], self.hi[i]);
            // conjugate of other
            let (c, d) = (other.lo[i] ^ other.hi[i], other.hi[i]);
            // (a + bα)(c + dα) = (ac + bd) + α(ad + bc + bd)
            let bd = b & d;
            lo_par ^= ((a & c) ^ bd).count_ones();
            hi_par ^= ((a & d) ^ (b & c) ^ bd).count_ones();
        }
        Ok(Gf4(((lo_par & 1) | ((hi_par & 1) << 1)) as u8))
    }

    /// Trace form `Σ (xᵢyᵢ² + xᵢ²yᵢ)`, always 0 or 1.
    pub fn trace_inner(&self, other: &Gf4Vector) -> Result<u8> {
        Ok(self.hermitian_inner(other)?.trace())
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &Gf4Vector) -> Gf4Vector {
        let mut out = Gf4Vector::zeros(self.len + other.len);
        for (i, e) in self.iter().chain(other.iter()).enumerate() {
            out.set(i, e);
        }
        out
    }

    /// Drops coordinate `index`.
    pub fn remove(&self, index: usize) -> Gf4Vector {
        let elems: Vec<Gf4> = self
            .iter()
            .enumerate()
            .filter_map(|(i, e)| (i != index).then_some(e))
            .collect();
        Gf4Vector::from_elements(&elems)
    }

    /// Cyclic shift to the right by `by` positions.
    pub fn rotate_right(&self, by: usize) -> Gf4Vector {
        let n = self.len;
        let mut out = Gf4Vector::zeros(n);
        if n == 0 {
            return out;
        }
        for (i, e) in self.iter().enumerate() {
            out.set((i + by) % n, e);
        }
        out
    }

    pub(crate) fn planes(&self) -> (&[u64], &[u64]) {
        (&self.lo, &self.hi)
    }
}

impl Add for &Gf4Vector {
    type Output = Gf4Vector;
    fn add(self, rhs: &Gf4Vector) -> Gf4Vector {
        assert_eq!(self.len, rhs.len, "length mismatch in vector addition");
        let mut out = self.clone();
        out.xor_planes(&rhs.lo, &rhs.hi);
        out
    }
}

impl AddAssign<&Gf4Vector> for Gf4Vector {
    fn add_assign(&mut self, rhs: &Gf4Vector) {
        assert_eq!(self.len, rhs.len, "length mismatch in vector addition");
        self.xor_planes(&rhs.lo, &rhs.hi);
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Vector[{self}]")
    }
}

/// Hermitian inner product of two words.
pub fn hermitian_inner(x: &Gf4Vector, y: &Gf4Vector) -> Result<Gf4> {
    x.hermitian_inner(y)
}

/// Trace inner product of two words, as a bit.
pub fn trace_inner(x: &Gf4Vector, y: &Gf4Vector) -> Result<u8> {
    x.trace_inner(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Naive symbolic model: an element is a polynomial lo + hi·α reduced by α² = α + 1.
    fn naive_mul(a: u8, b: u8) -> u8 {
        let (a0, a1) = (a & 1, a >> 1);
        let (b0, b1) = (b & 1, b >> 1);
        // (a0 + a1 α)(b0 + b1 α) = a0b0 + (a0b1 + a1b0) α + a1b1 α²
        let c0 = (a0 & b0) ^ (a1 & b1);
        let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        c0 | (c1 << 1)
    }

    fn naive_herm(x: &[u8], y: &[u8]) -> u8 {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| acc ^ naive_mul(a, naive_mul(b, b)))
    }

    #[test]
    fn addition_examples() {
        assert_eq!(add(Gf4::ALPHA, Gf4::ALPHA), Gf4::ZERO);
        assert_eq!(add(Gf4::ALPHA, Gf4::ONE), Gf4::ALPHA2);
        for x in Gf4::ALL {
            assert_eq!(add(Gf4::ZERO, x), x);
            assert_eq!(x + x, Gf4::ZERO);
        }
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(mul(Gf4::ALPHA, Gf4::ALPHA), Gf4::ALPHA2);
        assert_eq!(mul(Gf4::ALPHA, Gf4::ALPHA2), Gf4::ONE);
        for x in Gf4::ALL {
            assert_eq!(mul(Gf4::ZERO, x), Gf4::ZERO);
        }
        for x in Gf4::NONZERO {
            assert_eq!(x * x * x, Gf4::ONE);
            assert_eq!(x * x.inverse().unwrap(), Gf4::ONE);
        }
        assert_eq!(Gf4::ZERO.inverse(), None);
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(Gf4::ALPHA), Gf4::ALPHA2);
        assert_eq!(conjugate(Gf4::ALPHA2), Gf4::ALPHA);
        assert_eq!(conjugate(Gf4::ONE), Gf4::ONE);
        assert_eq!(conjugate(Gf4::ZERO), Gf4::ZERO);
        for x in Gf4::ALL {
            assert_eq!(x.conjugate(), x * x);
            assert_eq!(x.conjugate().conjugate(), x);
            assert_eq!(Gf4(x.trace()), x + x.conjugate());
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf4::ALL {
            for b in Gf4::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!((a * b).digit(), naive_mul(a.digit(), b.digit()));
                for c in Gf4::ALL {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!((a + b) + c, a + (b + c));
                }
            }
        }
        assert_eq!(Gf4::ALPHA * Gf4::ALPHA, Gf4::ALPHA + Gf4::ONE);
    }

    #[test]
    fn rows_of_the_five_two_code_are_orthogonal() {
        let r1 = Gf4Vector::from_digits(&[1, 0, 1, 2, 2]).unwrap();
        let r2 = Gf4Vector::from_digits(&[0, 1, 2, 2, 1]).unwrap();
        assert_eq!(hermitian_inner(&r1, &r2).unwrap(), Gf4::ZERO);
        assert_eq!(trace_inner(&r1, &r2).unwrap(), 0);
        assert_eq!(trace_inner(&r1, &r1).unwrap(), 0);
        assert_eq!(trace_inner(&r2, &r2).unwrap(), 0);
    }

    #[test]
    fn odd_binary_word_has_unit_norm() {
        let v = Gf4Vector::from_digits(&[1, 0, 1, 1, 0, 0, 1, 1, 1, 1]).unwrap();
        assert_eq!(v.weight() % 2, 1);
        assert_eq!(hermitian_inner(&v, &v).unwrap(), Gf4::ONE);
    }

    #[test]
    fn length_mismatch_is_reported() {
        let a = Gf4Vector::zeros(3);
        let b = Gf4Vector::zeros(4);
        assert_eq!(
            hermitian_inner(&a, &b),
            Err(Error::Dimension {
                expected: 3,
                found: 4
            })
        );
        assert!(trace_inner(&a, &b).is_err());
    }

    #[test]
    fn bad_digit_rejected() {
        assert!(Gf4Vector::from_digits(&[0, 4]).is_err());
        assert_eq!(Gf4::from_digit(4), None);
    }

    fn digits(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<u8>> {
        prop::collection::vec(0u8..4, len)
    }

    fn digit_pair() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
        (1usize..150).prop_flat_map(|n| (digits(n..n + 1), digits(n..n + 1)))
    }

    proptest! {
        #[test]
        fn bitsliced_matches_naive((x, y) in digit_pair(), c in 0u8..4) {
            let vx = Gf4Vector::from_digits(&x).unwrap();
            let vy = Gf4Vector::from_digits(&y).unwrap();
            prop_assert_eq!(vx.to_digits(), x.clone());

            let sum: Vec<u8> = x.iter().zip(&y).map(|(a, b)| a ^ b).collect();
            prop_assert_eq!((&vx + &vy).to_digits(), sum);

            let scaled: Vec<u8> = x.iter().map(|&a| naive_mul(c, a)).collect();
            prop_assert_eq!(vx.scale(Gf4(c)).to_digits(), scaled.clone());

            let mut acc = vy.clone();
            acc.axpy(Gf4(c), &vx);
            let expect: Vec<u8> = scaled.iter().zip(&y).map(|(a, b)| a ^ b).collect();
            prop_assert_eq!(acc.to_digits(), expect);

            prop_assert_eq!(vx.weight(), x.iter().filter(|&&d| d != 0).count());
            prop_assert_eq!(vx.hermitian_inner(&vy).unwrap().digit(), naive_herm(&x, &y));
            prop_assert_eq!(vx.leading_index(), x.iter().position(|&d| d != 0));
        }

        #[test]
        fn inner_product_identities((x, y) in digit_pair()) {
            let vx = Gf4Vector::from_digits(&x).unwrap();
            let vy = Gf4Vector::from_digits(&y).unwrap();
            let hxy = vx.hermitian_inner(&vy).unwrap();
            let hyx = vy.hermitian_inner(&vx).unwrap();
            prop_assert_eq!(hxy, hyx.conjugate());
            let t = vx.trace_inner(&vy).unwrap();
            prop_assert_eq!(Gf4(t), hxy + hxy.conjugate());
            prop_assert_eq!(t, vy.trace_inner(&vx).unwrap());
            if hxy.is_zero() {
                prop_assert_eq!(t, 0);
            }
            prop_assert_eq!(vx.trace_inner(&vx).unwrap(), 0);
            prop_assert!((&vx + &vx).is_zero());
            prop_assert!(vx.weight() <= vx.len());
            prop_assert_eq!(vx.weight() == 0, vx.is_zero());
        }
    }
}
