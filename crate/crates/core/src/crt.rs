//! Factorization of `M_p(x)` over F2 and the CRT isomorphism
//! `R_p -> F2[x]/(p_1) + ... + F2[x]/(p_t)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{factor_squarefree, Gf2Poly};
use crate::ring::{self, check_p, RingElement};

/// The distinct irreducible factors of `M_p(x)`, sorted ascending by bit value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    pub p: u32,
    pub factors: Vec<Gf2Poly>,
    pub degrees: Vec<u32>,
    /// gcd of the factor degrees.
    pub m: u32,
}

impl FactorSet {
    pub fn t(&self) -> usize {
        self.factors.len()
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn equal_degrees(&self) -> bool {
        self.degrees.iter().all(|&d| d == self.degrees[0])
    }

    /// log2 of the longest code length: the largest number of evaluation
    /// points whose differences stay invertible in every component.
    pub fn code_length_log2(&self) -> u32 {
        self.min_degree()
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Factors `M_p(x) = 1 + x + ... + x^(p-1)` into distinct irreducibles.
pub fn factor_mp(p: u32) -> Result<FactorSet> {
    check_p(p)?;
    let mp = Gf2Poly::all_ones(p);
    let factors = factor_squarefree(mp);
    let degrees: Vec<u32> = factors.iter().map(|f| f.degree().unwrap_or(0)).collect();
    let m = degrees.iter().fold(0, |acc, &d| gcd(acc, d));
    debug_assert!(factors.iter().all(|f| f.is_irreducible()));
    debug_assert_eq!(factors.iter().fold(Gf2Poly::ONE, |a, &f| a.mul(f)), mp);
    Ok(FactorSet { p, factors, degrees, m })
}

/// Sizes of the 2-cyclotomic cosets of the nonzero residues mod `p`, sorted.
/// They equal the degrees of the irreducible factors of `M_p`.
pub fn cyclotomic_coset_sizes(p: u32) -> Vec<u32> {
    let mut seen = alloc::vec![false; p as usize];
    let mut sizes = Vec::new();
    for s in 1..p {
        if seen[s as usize] {
            continue;
        }
        let mut size = 0;
        let mut c = s;
        while !seen[c as usize] {
            seen[c as usize] = true;
            size += 1;
            c = (2 * c) % p;
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// The finite field `F2[x]/(modulus)`, with XOR-metered arithmetic.
///
/// Multiplication is charged as the full bit-level schoolbook circuit,
/// `(d-1)^2` XORs, plus `(d-1)(w-1)` XORs to fold the `d-1` high
/// coefficients back through the `w-1` low taps of the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2m {
    modulus: Gf2Poly,
    degree: u32,
    mul_cost: u64,
    reduce_taps: u64,
}

impl Gf2m {
    pub fn new(modulus: Gf2Poly) -> Result<Self> {
        let degree = match modulus.degree() {
            Some(d) if (1..=63).contains(&d) => d,
            _ => return Err(Error::Unsupported("field modulus degree must be in 1..=63".into())),
        };
        if !modulus.is_irreducible() {
            return Err(Error::Unsupported(alloc::format!("{:?} is not irreducible", modulus)));
        }
        let d = degree as u64;
        let taps = modulus.weight() as u64 - 1;
        Ok(Gf2m { modulus, degree, mul_cost: (d - 1) * (d - 1) + (d - 1) * taps, reduce_taps: taps })
    }

    pub fn modulus(&self) -> Gf2Poly {
        self.modulus
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn mul_cost(&self) -> u64 {
        self.mul_cost
    }

    /// Reduction of an arbitrary polynomial, charging the XORs executed.
    pub fn reduce(&self, a: u64, xors: &mut u64) -> u64 {
        let mut rem = a as u128;
        while rem != 0 {
            let dr = 127 - rem.leading_zeros();
            if dr < self.degree {
                break;
            }
            rem ^= self.modulus.0 << (dr - self.degree);
            *xors += self.reduce_taps;
        }
        rem as u64
    }

    #[inline]
    pub fn reduce_raw(&self, a: u64) -> u64 {
        Gf2Poly(a as u128).rem(self.modulus).0 as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64, xors: &mut u64) -> u64 {
        *xors += self.degree as u64;
        a ^ b
    }

    #[inline]
    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let mut acc = 0u128;
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros();
            acc ^= (b as u128) << i;
            rest &= rest - 1;
        }
        // fold high coefficients, top down
        let d = self.degree;
        let low = self.modulus.0 ^ (1u128 << d);
        while acc >> d != 0 {
            let top = 127 - acc.leading_zeros();
            acc ^= (1u128 << top) ^ (low << (top - d));
        }
        acc as u64
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64, xors: &mut u64) -> u64 {
        *xors += self.mul_cost;
        self.mul_raw(a, b)
    }

    pub fn pow_raw(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv_raw(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.pow_raw(a, self.size() - 2))
        }
    }

    /// Inversion as `a^(2^d - 2)`: `d-1` squarings and `d-2` multiplications,
    /// each charged as a field multiplication.
    pub fn inv(&self, a: u64, xors: &mut u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::NotInvertible { component: 0 });
        }
        let d = self.degree as u64;
        *xors += self.mul_cost * ((d - 1) + d.saturating_sub(2));
        Ok(self.pow_raw(a, self.size() - 2))
    }
}

/// `Phi(r)`: one reduced residue per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrtVector {
    pub components: Vec<u64>,
}

/// CRT data for `R_p`: factors, component fields and idempotents.
#[derive(Debug, Clone)]
pub struct Crt {
    p: u32,
    factor_set: FactorSet,
    fields: Vec<Gf2m>,
    /// `e_i = (M_p/p_i) * [(M_p/p_i)^-1 mod p_i]`, canonical.
    idempotents: Vec<RingElement>,
    /// Same, after preprocessing, as multipliers.
    idempotents_pre: Vec<u64>,
}

impl Crt {
    pub fn new(p: u32) -> Result<Self> {
        let factor_set = factor_mp(p)?;
        let mp = Gf2Poly::all_ones(p);
        let mut fields = Vec::with_capacity(factor_set.t());
        let mut idempotents = Vec::with_capacity(factor_set.t());
        for &f in &factor_set.factors {
            fields.push(Gf2m::new(f)?);
            let cofactor = mp.div_rem(f).0;
            let inv = cofactor.inv_mod(f).expect("factors of M_p are pairwise coprime");
            let e = cofactor.mul(inv).rem(mp);
            idempotents.push(RingElement::from_bits_unchecked(p, e.0 as u64));
        }
        let idempotents_pre = idempotents.iter().map(|e| ring::preprocess_bits(e.bits(), p).0).collect();
        Ok(Crt { p, factor_set, fields, idempotents, idempotents_pre })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn t(&self) -> usize {
        self.fields.len()
    }

    pub fn factor_set(&self) -> &FactorSet {
        &self.factor_set
    }

    pub fn field(&self, k: usize) -> &Gf2m {
        &self.fields[k]
    }

    pub fn idempotent(&self, k: usize) -> RingElement {
        self.idempotents[k]
    }

    #[inline]
    pub(crate) fn component_bits(&self, a: u64, k: usize) -> u64 {
        self.fields[k].reduce_raw(a)
    }

    pub fn phi(&self, r: &RingElement) -> CrtVector {
        CrtVector { components: (0..self.t()).map(|k| self.component_bits(r.bits(), k)).collect() }
    }

    /// `Phi` with the remainder XORs charged.
    pub fn phi_counted(&self, r: &RingElement, xors: &mut u64) -> CrtVector {
        CrtVector { components: self.fields.iter().map(|f| f.reduce(r.bits(), xors)).collect() }
    }

    fn check_vector(&self, v: &CrtVector) -> Result<()> {
        if v.components.len() != self.t() {
            return Err(Error::LengthMismatch { what: "CRT components", expected: self.t(), actual: v.components.len() });
        }
        for (k, (&c, f)) in v.components.iter().zip(&self.fields).enumerate() {
            if c >> f.degree() != 0 {
                return Err(Error::OutOfRange { what: "component", value: k, bound: self.t() });
            }
        }
        Ok(())
    }

    /// `Phi^-1`, canonical.
    pub fn phi_inv(&self, v: &CrtVector) -> Result<RingElement> {
        self.check_vector(v)?;
        Ok(self.phi_inv_counted_bits(&v.components, &mut 0))
    }

    /// `sum_i r_i e_i`: `t` ring multiplications by the preprocessed
    /// idempotents plus `t-1` additions. Result is not canonicalized.
    pub(crate) fn phi_inv_counted_bits(&self, comps: &[u64], xors: &mut u64) -> RingElement {
        let p = self.p;
        let mut acc = 0u64;
        let mut terms = 0;
        for (k, &c) in comps.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.idempotents_pre[k];
            *xors += p as u64 * e.count_ones() as u64;
            if terms > 0 {
                *xors += p as u64;
            }
            terms += 1;
            acc ^= ring::mul_bits(e, c, p);
        }
        RingElement::from_bits_unchecked(p, ring::canonical_bits(acc, p))
    }

    /// Invertible iff nonzero modulo every factor.
    pub fn is_invertible(&self, a: &RingElement) -> bool {
        (0..self.t()).all(|k| self.component_bits(a.bits(), k) != 0)
    }

    pub fn inverse(&self, a: &RingElement) -> Result<RingElement> {
        let mut comps = Vec::with_capacity(self.t());
        for k in 0..self.t() {
            let c = self.component_bits(a.bits(), k);
            let inv = self.fields[k].inv_raw(c).ok_or(Error::NotInvertible { component: k })?;
            comps.push(inv);
        }
        Ok(self.phi_inv_counted_bits(&comps, &mut 0))
    }

    /// Data-dependent inversion restricted to the components in `mask`:
    /// counted `Phi`, field inversion per selected component, counted `Phi^-1`.
    /// Components outside `mask` come out zero.
    pub(crate) fn inverse_masked_counted(&self, a: u64, mask: u32, xors: &mut u64) -> Result<RingElement> {
        let mut comps = [0u64; 64];
        for k in 0..self.t() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let f = &self.fields[k];
            let c = f.reduce(a, xors);
            comps[k] = f.inv(c, xors).map_err(|_| Error::NotInvertible { component: k })?;
        }
        Ok(self.phi_inv_counted_bits(&comps[..self.t()], xors))
    }
}
