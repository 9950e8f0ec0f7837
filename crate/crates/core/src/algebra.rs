//! The coefficient algebra a code runs over.
//!
//! The transforms, encoder and decoder are written once against
//! [`CodeAlgebra`]. [`RingAlgebra`] is `R_p` carried modulo `1+x^p` with
//! circular-shift multiplication; [`FieldAlgebra`] is a binary field with
//! schoolbook multiplication, the single-component case used by the baseline.
//!
//! Methods suffixed `_raw` are exact and uncounted; they are used only to
//! build constant tables. Everything else charges XORs to the given counter.

use core::fmt::Debug;

use crate::crt::{Crt, Gf2m};
use crate::error::{Error, Result};
use crate::ring::{self, RingElement};

pub trait CodeAlgebra {
    type Elem: Copy + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Number of CRT components `t`.
    fn components(&self) -> usize;

    fn full_mask(&self) -> u32 {
        ((1u64 << self.components()) - 1) as u32
    }

    fn add_raw(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul_raw(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv_raw(&self, a: Self::Elem) -> Result<Self::Elem>;
    /// Keeps the components in `mask`, zeroes the rest.
    fn mask_raw(&self, a: Self::Elem, mask: u32) -> Self::Elem;

    fn canonical(&self, a: Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: Self::Elem) -> bool;
    fn component_is_zero(&self, a: Self::Elem, k: usize) -> bool;
    /// Bit `k` set iff component `k` of `a` is zero.
    fn zero_components(&self, a: Self::Elem) -> u32 {
        (0..self.components()).filter(|&k| self.component_is_zero(a, k)).fold(0, |m, k| m | (1 << k))
    }

    /// Cheapest representative of a constant multiplier; uncounted.
    fn prepare(&self, c: Self::Elem) -> Self::Elem;
    /// Same for a data-dependent multiplier; charged.
    fn prepare_counted(&self, c: Self::Elem, xors: &mut u64) -> Self::Elem;

    fn add(&self, a: Self::Elem, b: Self::Elem, xors: &mut u64) -> Self::Elem;
    /// `c * a` where `c` came from [`prepare`](Self::prepare) or
    /// [`prepare_counted`](Self::prepare_counted).
    fn mul_prepared(&self, c: Self::Elem, a: Self::Elem, xors: &mut u64) -> Self::Elem;
    /// Component `k` taken from `a` when bit `k` of `mask` is set, else from `b`.
    fn select(&self, mask: u32, a: Self::Elem, b: Self::Elem, xors: &mut u64) -> Self::Elem;
    /// Inverse on the components in `mask`, zero elsewhere. Fails if `a`
    /// vanishes in one of the selected components.
    fn inv_masked(&self, a: Self::Elem, mask: u32, xors: &mut u64) -> Result<Self::Elem>;
}

/// `R_p` with all products taken in `F2[x]/(1+x^p)`.
#[derive(Debug, Clone)]
pub struct RingAlgebra {
    crt: Crt,
}

impl RingAlgebra {
    pub fn new(p: u32) -> Result<Self> {
        Ok(RingAlgebra { crt: Crt::new(p)? })
    }

    pub fn from_crt(crt: Crt) -> Self {
        RingAlgebra { crt }
    }

    pub fn crt(&self) -> &Crt {
        &self.crt
    }

    pub fn p(&self) -> u32 {
        self.crt.p()
    }

    #[inline]
    fn el(&self, bits: u64) -> RingElement {
        RingElement::from_bits_unchecked(self.p(), bits)
    }
}

impl CodeAlgebra for RingAlgebra {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        self.el(0)
    }

    fn one(&self) -> RingElement {
        self.el(1)
    }

    fn components(&self) -> usize {
        self.crt.t()
    }

    fn add_raw(&self, a: RingElement, b: RingElement) -> RingElement {
        self.el(a.bits() ^ b.bits())
    }

    fn mul_raw(&self, a: RingElement, b: RingElement) -> RingElement {
        self.el(ring::mul_bits(a.bits(), b.bits(), self.p()))
    }

    fn inv_raw(&self, a: RingElement) -> Result<RingElement> {
        self.crt.inverse(&a)
    }

    fn mask_raw(&self, a: RingElement, mask: u32) -> RingElement {
        let mut acc = 0u64;
        for k in 0..self.components() {
            if mask & (1 << k) != 0 {
                acc ^= ring::mul_bits(self.crt.idempotent(k).bits(), a.bits(), self.p());
            }
        }
        self.el(ring::canonical_bits(acc, self.p()))
    }

    fn canonical(&self, a: RingElement) -> RingElement {
        a.canonicalize()
    }

    fn is_zero(&self, a: RingElement) -> bool {
        a.is_zero_mod_mp()
    }

    fn component_is_zero(&self, a: RingElement, k: usize) -> bool {
        self.crt.component_bits(a.bits(), k) == 0
    }

    fn prepare(&self, c: RingElement) -> RingElement {
        self.el(ring::preprocess_bits(c.bits(), self.p()).0)
    }

    fn prepare_counted(&self, c: RingElement, xors: &mut u64) -> RingElement {
        c.preprocess(xors)
    }

    #[inline]
    fn add(&self, a: RingElement, b: RingElement, xors: &mut u64) -> RingElement {
        *xors += self.p() as u64;
        self.el(a.bits() ^ b.bits())
    }

    #[inline]
    fn mul_prepared(&self, c: RingElement, a: RingElement, xors: &mut u64) -> RingElement {
        *xors += self.p() as u64 * c.weight() as u64;
        self.el(ring::mul_bits(c.bits(), a.bits(), self.p()))
    }

    /// `sum_k e_k * (a or b)`: `t` multiplications by idempotents and `t-1`
    /// additions, skipped when every component picks the same side.
    fn select(&self, mask: u32, a: RingElement, b: RingElement, xors: &mut u64) -> RingElement {
        let full = self.full_mask();
        if mask & full == full {
            return a;
        }
        if mask & full == 0 {
            return b;
        }
        let p = self.p();
        let mut acc = 0u64;
        for k in 0..self.components() {
            let src = if mask & (1 << k) != 0 { a } else { b };
            let e = self.prepare(self.crt.idempotent(k));
            *xors += p as u64 * e.weight() as u64;
            if k > 0 {
                *xors += p as u64;
            }
            acc ^= ring::mul_bits(e.bits(), src.bits(), p);
        }
        self.el(acc)
    }

    fn inv_masked(&self, a: RingElement, mask: u32, xors: &mut u64) -> Result<RingElement> {
        self.crt.inverse_masked_counted(a.bits(), mask, xors)
    }
}

/// An element of a binary field, `deg < q` coefficients packed LSB first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct FieldElement(pub u64);

/// A binary field `F2[x]/(q(x))` as a one-component algebra.
#[derive(Debug, Clone)]
pub struct FieldAlgebra {
    field: Gf2m,
}

impl FieldAlgebra {
    pub fn new(field: Gf2m) -> Self {
        FieldAlgebra { field }
    }

    pub fn field(&self) -> &Gf2m {
        &self.field
    }
}

impl CodeAlgebra for FieldAlgebra {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    fn components(&self) -> usize {
        1
    }

    fn add_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    fn mul_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.field.mul_raw(a.0, b.0))
    }

    fn inv_raw(&self, a: FieldElement) -> Result<FieldElement> {
        self.field.inv_raw(a.0).map(FieldElement).ok_or(Error::NotInvertible { component: 0 })
    }

    fn mask_raw(&self, a: FieldElement, mask: u32) -> FieldElement {
        if mask & 1 != 0 {
            a
        } else {
            FieldElement(0)
        }
    }

    fn canonical(&self, a: FieldElement) -> FieldElement {
        a
    }

    fn is_zero(&self, a: FieldElement) -> bool {
        a.0 == 0
    }

    fn component_is_zero(&self, a: FieldElement, _k: usize) -> bool {
        a.0 == 0
    }

    fn prepare(&self, c: FieldElement) -> FieldElement {
        c
    }

    fn prepare_counted(&self, c: FieldElement, _xors: &mut u64) -> FieldElement {
        c
    }

    #[inline]
    fn add(&self, a: FieldElement, b: FieldElement, xors: &mut u64) -> FieldElement {
        FieldElement(self.field.add(a.0, b.0, xors))
    }

    #[inline]
    fn mul_prepared(&self, c: FieldElement, a: FieldElement, xors: &mut u64) -> FieldElement {
        if c.0 == 0 {
            return FieldElement(0);
        }
        FieldElement(self.field.mul(c.0, a.0, xors))
    }

    fn select(&self, mask: u32, a: FieldElement, b: FieldElement, _xors: &mut u64) -> FieldElement {
        if mask & 1 != 0 {
            a
        } else {
            b
        }
    }

    fn inv_masked(&self, a: FieldElement, mask: u32, xors: &mut u64) -> Result<FieldElement> {
        if mask & 1 == 0 {
            return Ok(FieldElement(0));
        }
        self.field.inv(a.0, xors).map(FieldElement)
    }
}
