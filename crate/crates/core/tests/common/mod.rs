#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ringrs_core::algebra::{CodeAlgebra, FieldAlgebra, FieldElement, RingAlgebra};
use ringrs_core::{Code, CodeParams, RingCode, RingElement};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_ring(rng: &mut StdRng, p: u32) -> RingElement {
    RingElement::new(p, rng.gen::<u64>() & ((1u64 << p) - 1)).unwrap()
}

/// Canonical, i.e. what a data symbol looks like on the wire.
pub fn random_symbol(rng: &mut StdRng, p: u32) -> RingElement {
    RingElement::new(p, rng.gen::<u64>() & ((1u64 << (p - 1)) - 1)).unwrap()
}

pub fn random_nonzero_symbol(rng: &mut StdRng, p: u32) -> RingElement {
    RingElement::new(p, rng.gen_range(1..(1u64 << (p - 1)))).unwrap()
}

pub fn ring_code(p: u32, mu: u32) -> RingCode {
    RingCode::ring(&CodeParams::new(p, mu).unwrap(), None).unwrap()
}

/// `count` distinct positions below `n`, uniformly.
pub fn positions(rng: &mut StdRng, n: usize, count: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..count {
        let j = rng.gen_range(i..n);
        all.swap(i, j);
    }
    all.truncate(count);
    all
}

pub fn corrupt(rng: &mut StdRng, word: &[RingElement], count: usize) -> (Vec<RingElement>, Vec<usize>) {
    let p = word[0].p();
    let pos = positions(rng, word.len(), count);
    let mut out = word.to_vec();
    for &l in &pos {
        let e = random_nonzero_symbol(rng, p);
        out[l] = RingElement::new(p, out[l].bits() ^ e.bits()).unwrap();
    }
    (out, pos)
}

/// Component `k` of a ring element as a field element.
pub fn comp(alg: &RingAlgebra, a: RingElement, k: usize) -> FieldElement {
    FieldElement(alg.crt().phi(&a).components[k])
}

/// The field code that component `k` of a ring code reduces to.
pub fn component_code(code: &RingCode, k: usize) -> Code<FieldAlgebra> {
    let alg = code.algebra();
    let field = alg.crt().field(k).clone();
    let v = code.basis().v().iter().map(|&x| comp(alg, x, k)).collect();
    Code::new(FieldAlgebra::new(field), v, code.mu()).unwrap()
}

/// Polynomials over an algebra, coefficient of `x^i` at index `i`.
pub struct Poly<'a, A: CodeAlgebra> {
    pub alg: &'a A,
}

impl<'a, A: CodeAlgebra> Poly<'a, A> {
    pub fn mul(&self, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
        let mut out = vec![self.alg.zero(); a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.alg.add_raw(out[i + j], self.alg.mul_raw(x, y));
            }
        }
        out
    }

    pub fn add(&self, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(self.alg.zero());
                let y = b.get(i).copied().unwrap_or(self.alg.zero());
                self.alg.add_raw(x, y)
            })
            .collect()
    }

    pub fn scale(&self, c: A::Elem, a: &[A::Elem]) -> Vec<A::Elem> {
        a.iter().map(|&x| self.alg.mul_raw(c, x)).collect()
    }

    pub fn eval(&self, a: &[A::Elem], x: A::Elem) -> A::Elem {
        a.iter().rev().fold(self.alg.zero(), |acc, &c| self.alg.add_raw(self.alg.mul_raw(acc, x), c))
    }

    pub fn derivative(&self, a: &[A::Elem]) -> Vec<A::Elem> {
        (1..a.len().max(1)).map(|i| if i % 2 == 1 { a[i] } else { self.alg.zero() }).collect()
    }

    /// `prod_{l < 2^j} (x - omega_l)`, by direct multiplication.
    pub fn subspace(&self, omega: &[A::Elem], j: u32) -> Vec<A::Elem> {
        let mut s = vec![self.alg.one()];
        for &w in &omega[..1 << j] {
            s = self.mul(&s, &[w, self.alg.one()]);
        }
        s
    }

    /// `X̄_i` in the monomial basis, built from the direct subspace products.
    pub fn xbar(&self, omega: &[A::Elem], v: &[A::Elem], i: usize) -> Vec<A::Elem> {
        let mut out = vec![self.alg.one()];
        for j in 0..v.len() {
            if (i >> j) & 1 == 1 {
                let s = self.subspace(omega, j as u32);
                let norm = self.eval(&s, v[j]);
                let inv = self.alg.inv_raw(norm).unwrap();
                out = self.mul(&out, &self.scale(inv, &s));
            }
        }
        out
    }

    /// Monomial coefficients of `sum coeffs[i] X̄_i`.
    pub fn xbar_to_monomial(&self, omega: &[A::Elem], v: &[A::Elem], coeffs: &[A::Elem]) -> Vec<A::Elem> {
        let mut out = vec![self.alg.zero()];
        for (i, &c) in coeffs.iter().enumerate() {
            out = self.add(&out, &self.scale(c, &self.xbar(omega, v, i)));
        }
        out
    }
}

pub fn omegas<A: CodeAlgebra>(code: &Code<A>) -> Vec<A::Elem> {
    (0..code.n()).map(|l| code.basis().omega(l).unwrap()).collect()
}

pub fn eq_ring(a: &[RingElement], b: &[RingElement]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.eq_mod_mp(y))
}
