//! Dense polynomials over F2 of degree below 128, packed into a `u128`.
//!
//! Bit `i` holds the coefficient of `x^i`. These are used for factoring
//! `M_p(x)` and for the component fields, never on a hot path.

use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2Poly(pub u128);

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);
    pub const X: Gf2Poly = Gf2Poly(2);

    /// `1 + x + ... + x^(p-1)`.
    pub fn all_ones(p: u32) -> Gf2Poly {
        debug_assert!(p < 128);
        Gf2Poly((1u128 << p) - 1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros())
        }
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn add(self, other: Gf2Poly) -> Gf2Poly {
        Gf2Poly(self.0 ^ other.0)
    }

    /// Carry-less product. Panics in debug builds if the result would not fit.
    pub fn mul(self, other: Gf2Poly) -> Gf2Poly {
        if let (Some(da), Some(db)) = (self.degree(), other.degree()) {
            debug_assert!(da + db < 128, "product degree overflow");
        }
        let mut acc = 0u128;
        let mut a = self.0;
        let mut shift = 0;
        while a != 0 {
            if a & 1 == 1 {
                acc ^= other.0 << shift;
            }
            a >>= 1;
            shift += 1;
        }
        Gf2Poly(acc)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(self, divisor: Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.0;
        let mut quo = 0u128;
        while rem != 0 {
            let dr = 127 - rem.leading_zeros();
            if dr < dd {
                break;
            }
            let s = dr - dd;
            quo |= 1u128 << s;
            rem ^= divisor.0 << s;
        }
        (Gf2Poly(quo), Gf2Poly(rem))
    }

    pub fn rem(self, divisor: Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    pub fn gcd(self, other: Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.rem(b);
            a = b;
            b = r;
        }
        a
    }

    /// Inverse of `self` modulo `modulus`, if it exists.
    pub fn inv_mod(self, modulus: Gf2Poly) -> Option<Gf2Poly> {
        // Extended Euclid tracking only the coefficient of `self`.
        let (mut r0, mut r1) = (modulus, self.rem(modulus));
        let (mut s0, mut s1) = (Gf2Poly::ZERO, Gf2Poly::ONE);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(r1);
            r0 = r1;
            r1 = r;
            let s = s0.add(q.mul(s1));
            s0 = s1;
            s1 = s;
        }
        if r0 == Gf2Poly::ONE {
            Some(s0.rem(modulus))
        } else {
            None
        }
    }

    pub fn mul_mod(self, other: Gf2Poly, modulus: Gf2Poly) -> Gf2Poly {
        self.rem(modulus).mul(other.rem(modulus)).rem(modulus)
    }

    pub fn pow_mod(self, mut exp: u128, modulus: Gf2Poly) -> Gf2Poly {
        let mut base = self.rem(modulus);
        let mut acc = Gf2Poly::ONE.rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(base, modulus);
            }
            base = base.mul_mod(base, modulus);
            exp >>= 1;
        }
        acc
    }

    /// `self^(2^k) mod modulus` by repeated squaring.
    pub fn frobenius_mod(self, k: u32, modulus: Gf2Poly) -> Gf2Poly {
        let mut a = self.rem(modulus);
        for _ in 0..k {
            a = a.mul_mod(a, modulus);
        }
        a
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let x = Gf2Poly::X;
        if x.frobenius_mod(d, self) != x.rem(self) {
            return false;
        }
        for q in prime_divisors(d) {
            let h = x.frobenius_mod(d / q, self).add(x);
            if self.gcd(h) != Gf2Poly::ONE {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for i in 0..128 {
            if (self.0 >> i) & 1 == 1 {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                match i {
                    0 => f.write_str("1")?,
                    1 => f.write_str("x")?,
                    _ => write!(f, "x^{}", i)?,
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn prime_divisors(mut n: u32) -> alloc::vec::Vec<u32> {
    let mut out = alloc::vec::Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct-irreducible factorization of a squarefree polynomial, sorted
/// ascending by bit value.
///
/// Distinct-degree splitting followed by an equal-degree split driven by the
/// trace map `a + a^2 + ... + a^(2^(d-1))`, trying `a = 2, 3, 4, ...` in order.
pub fn factor_squarefree(f: Gf2Poly) -> alloc::vec::Vec<Gf2Poly> {
    use alloc::vec::Vec;
    let mut out = Vec::new();
    let mut rest = f;
    let x = Gf2Poly::X;
    let mut d = 1;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        if 2 * d > deg {
            out.push(rest);
            break;
        }
        let h = x.frobenius_mod(d, rest).add(x);
        let g = rest.gcd(h);
        if g != Gf2Poly::ONE {
            split_equal_degree(g, d, &mut out);
            rest = rest.div_rem(g).0;
        }
        d += 1;
    }
    out.sort();
    out
}

fn split_equal_degree(g: Gf2Poly, d: u32, out: &mut alloc::vec::Vec<Gf2Poly>) {
    let deg = g.degree().unwrap_or(0);
    if deg == d {
        out.push(g);
        return;
    }
    let mut seed: u128 = 2;
    loop {
        let a = Gf2Poly(seed).rem(g);
        let mut tr = Gf2Poly::ZERO;
        let mut term = a;
        for _ in 0..d {
            tr = tr.add(term);
            term = term.mul_mod(term, g);
        }
        let h = g.gcd(tr);
        if let Some(hd) = h.degree() {
            if hd > 0 && hd < deg {
                split_equal_degree(h, d, out);
                split_equal_degree(g.div_rem(h).0, d, out);
                return;
            }
        }
        seed += 1;
    }
}
