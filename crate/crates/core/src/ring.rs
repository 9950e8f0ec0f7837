//! Arithmetic in `F2[x]/(1+x^p)` and its quotient `R_p = F2[x]/(M_p(x))`.
//!
//! Elements are carried as length-`p` vectors modulo `1+x^p`. Because
//! `1+x^p = (1+x) M_p(x)`, any result can be brought back to `R_p` with
//! [`RingElement::canonicalize`], and two vectors are congruent modulo `M_p`
//! exactly when they are equal or complementary.

use core::fmt;

use crate::error::{Error, Result};

/// Largest supported `p`; coefficients are packed into one `u64`.
pub const MAX_P: u32 = 63;

pub fn check_p(p: u32) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) || p > MAX_P {
        Err(Error::InvalidModulus { p })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn mask(p: u32) -> u64 {
    (1u64 << p) - 1
}

/// Multiply `g` by `x^shift` in `F2[x]/(1+x^p)`.
#[inline]
pub(crate) fn rotate(g: u64, shift: u32, p: u32) -> u64 {
    if shift == 0 {
        g
    } else {
        ((g << shift) | (g >> (p - shift))) & mask(p)
    }
}

/// Circular-shift product: one shifted copy of `g` per set bit of `f`.
#[inline]
pub(crate) fn mul_bits(f: u64, g: u64, p: u32) -> u64 {
    let mut acc = 0u64;
    let mut rest = f;
    while rest != 0 {
        let i = rest.trailing_zeros();
        acc ^= rotate(g, i, p);
        rest &= rest - 1;
    }
    acc
}

/// Complement when that lowers the Hamming weight.
#[inline]
pub(crate) fn preprocess_bits(f: u64, p: u32) -> (u64, bool) {
    let zeros = p - f.count_ones();
    if 2 * zeros < p {
        (f ^ mask(p), true)
    } else {
        (f, false)
    }
}

#[inline]
pub(crate) fn canonical_bits(a: u64, p: u32) -> u64 {
    if (a >> (p - 1)) & 1 == 1 {
        a ^ mask(p)
    } else {
        a
    }
}

/// An element of `F2[x]/(1+x^p)`, standing for its residue in `R_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    bits: u64,
    p: u8,
}

impl RingElement {
    /// Builds an element from packed coefficients; bits at or above `p` are rejected.
    pub fn new(p: u32, bits: u64) -> Result<Self> {
        check_p(p)?;
        if bits & !mask(p) != 0 {
            return Err(Error::OutOfRange {
                what: "coefficient bit",
                value: 63 - bits.leading_zeros() as usize,
                bound: p as usize,
            });
        }
        Ok(RingElement { bits, p: p as u8 })
    }

    #[inline]
    pub(crate) fn from_bits_unchecked(p: u32, bits: u64) -> Self {
        debug_assert!(bits & !mask(p) == 0);
        RingElement { bits, p: p as u8 }
    }

    pub fn zero(p: u32) -> Result<Self> {
        Self::new(p, 0)
    }

    pub fn one(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    /// `sum of alpha^e` over the given exponents, each below `p`.
    pub fn from_exponents(p: u32, exponents: &[u32]) -> Result<Self> {
        check_p(p)?;
        let mut bits = 0u64;
        for &e in exponents {
            if e >= p {
                return Err(Error::OutOfRange { what: "exponent", value: e as usize, bound: p as usize });
            }
            bits ^= 1 << e;
        }
        Self::new(p, bits)
    }

    /// The all-ones vector `M_p(x)`.
    pub fn m_p(p: u32) -> Result<Self> {
        check_p(p)?;
        Self::new(p, mask(p))
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn coeff(&self, i: u32) -> bool {
        i < self.p() && (self.bits >> i) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.p()).filter(move |&i| self.coeff(i))
    }

    pub fn complement(&self) -> Self {
        RingElement { bits: self.bits ^ mask(self.p()), p: self.p }
    }

    /// Representative with top coefficient zero.
    pub fn canonicalize(&self) -> Self {
        RingElement { bits: canonical_bits(self.bits, self.p()), p: self.p }
    }

    pub fn is_canonical(&self) -> bool {
        !self.coeff(self.p() - 1)
    }

    /// Zero in `R_p` (the zero vector or `M_p` itself).
    pub fn is_zero_mod_mp(&self) -> bool {
        canonical_bits(self.bits, self.p()) == 0
    }

    /// Congruence modulo `M_p`.
    pub fn eq_mod_mp(&self, other: &Self) -> bool {
        self.p == other.p && (self.bits == other.bits || self.bits == other.bits ^ mask(self.p()))
    }

    fn same_p(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ParameterMismatch { left: self.p(), right: other.p() })
        }
    }

    /// Coefficientwise XOR; charges `p` XORs.
    pub fn add(&self, other: &Self, xors: &mut u64) -> Result<Self> {
        self.same_p(other)?;
        *xors += self.p() as u64;
        Ok(RingElement { bits: self.bits ^ other.bits, p: self.p })
    }

    /// Product modulo `1+x^p` by circular shifts of `g`, one per nonzero
    /// coefficient of `self`; charges `p` XORs per nonzero coefficient.
    pub fn mul_cyclic(&self, g: &Self, xors: &mut u64) -> Result<Self> {
        self.same_p(g)?;
        *xors += self.p() as u64 * self.weight() as u64;
        Ok(RingElement { bits: mul_bits(self.bits, g.bits, self.p()), p: self.p })
    }

    /// Swaps in `self + M_p` when fewer than half the coefficients are zero.
    /// Charges `p` XORs when the complement is taken.
    pub fn preprocess(&self, xors: &mut u64) -> Self {
        let (bits, flipped) = preprocess_bits(self.bits, self.p());
        if flipped {
            *xors += self.p() as u64;
        }
        RingElement { bits, p: self.p }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}[", self.p)?;
        let mut first = true;
        for e in self.exponents() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write!(f, "a^{}", e)?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str("]")
    }
}
