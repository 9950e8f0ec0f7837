//! Evaluation points `omega_l = sum l_j v_j`, subspace polynomials and the
//! constant tables the transforms need.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::algebra::{CodeAlgebra, RingAlgebra};
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::ring::RingElement;

/// Preprocessed twiddles `s_{tau-1}(beta) / s_{tau-1}(v_{tau-1})`.
///
/// Level `tau` (1-based) holds one entry per `beta = omega_{k * 2^(tau-1)}`,
/// `k < 2^(m - tau + 1)`. Since `s_{tau-1}` is linear and vanishes on
/// `omega_0 .. omega_{2^(tau-1) - 1}`, this covers every `beta = omega_b`.
#[derive(Debug, Clone)]
pub struct TwiddleTable<E> {
    levels: Vec<Vec<E>>,
}

impl<E: Copy> TwiddleTable<E> {
    /// Twiddle for a level-`tau` butterfly whose block is shifted by `omega_b`.
    #[inline]
    pub fn get(&self, tau: u32, b: usize) -> E {
        self.levels[tau as usize - 1][b >> (tau - 1)]
    }

    pub fn level(&self, tau: u32) -> &[E] {
        &self.levels[tau as usize - 1]
    }
}

/// A validated basis `v_0 .. v_{m-1}` with its derived constants.
#[derive(Debug, Clone)]
pub struct EvalBasis<E> {
    m: u32,
    v: Vec<E>,
    omega: Vec<E>,
    /// `s_j(v_j)` for `j < m`.
    s_norm: Vec<E>,
    s_norm_inv: Vec<E>,
    twiddles: TwiddleTable<E>,
}

impl<E> EvalBasis<E> {
    pub fn m(&self) -> u32 {
        self.m
    }
}

impl<E: Copy + PartialEq + core::fmt::Debug> EvalBasis<E> {
    /// Checks that every difference of evaluation points is invertible, which
    /// holds iff the basis is linearly independent in every component.
    pub fn new<A: CodeAlgebra<Elem = E>>(alg: &A, v: Vec<E>) -> Result<Self> {
        let m = v.len() as u32;
        if m == 0 || m > 20 {
            return Err(Error::InvalidBasis(alloc::format!("basis size {} not in 1..=20", m)));
        }
        let v: Vec<E> = v.into_iter().map(|x| alg.canonical(x)).collect();
        let n = 1usize << m;
        let mut omega = Vec::with_capacity(n);
        omega.push(alg.zero());
        for j in 0..m as usize {
            for l in 0..(1 << j) {
                let w = alg.add_raw(omega[l], v[j]);
                omega.push(alg.canonical(w));
            }
        }
        // omega_i - omega_j = omega_{i ^ j}
        for (l, &w) in omega.iter().enumerate().skip(1) {
            let zeros = alg.zero_components(w);
            if zeros != 0 {
                return Err(Error::InvalidBasis(alloc::format!(
                    "omega_{} vanishes in component {}: basis dependent there",
                    l,
                    zeros.trailing_zeros()
                )));
            }
        }

        let mut s_norm = Vec::with_capacity(m as usize);
        for j in 0..m {
            s_norm.push(subspace_eval_with(alg, &s_norm, j, v[j as usize]));
        }
        let s_norm_inv: Vec<E> = s_norm
            .iter()
            .map(|&s| alg.inv_raw(s).map(|x| alg.canonical(x)))
            .collect::<Result<_>>()?;

        let mut levels = Vec::with_capacity(m as usize);
        for tau in 1..=m {
            let count = 1usize << (m - tau + 1);
            let step = 1usize << (tau - 1);
            let lvl: Vec<E> = (0..count)
                .map(|k| {
                    let s = subspace_eval_with(alg, &s_norm, tau - 1, omega[k * step]);
                    alg.prepare(alg.canonical(alg.mul_raw(s, s_norm_inv[tau as usize - 1])))
                })
                .collect();
            levels.push(lvl);
        }

        Ok(EvalBasis { m, v, omega, s_norm, s_norm_inv, twiddles: TwiddleTable { levels } })
    }

    pub fn v(&self) -> &[E] {
        &self.v
    }

    pub fn omega(&self, l: usize) -> Result<E> {
        self.omega.get(l).copied().ok_or(Error::OutOfRange { what: "l", value: l, bound: self.omega.len() })
    }

    #[inline]
    pub(crate) fn omega_unchecked(&self, l: usize) -> E {
        self.omega[l]
    }

    pub fn s_norm(&self, j: u32) -> E {
        self.s_norm[j as usize]
    }

    pub fn s_norm_inv(&self, j: u32) -> E {
        self.s_norm_inv[j as usize]
    }

    pub fn twiddles(&self) -> &TwiddleTable<E> {
        &self.twiddles
    }

    /// `s_tau(beta)` by the linearized recurrence
    /// `s_tau(x) = s_{tau-1}(x)^2 + s_{tau-1}(v_{tau-1}) s_{tau-1}(x)`. Canonical.
    pub fn subspace_eval<A: CodeAlgebra<Elem = E>>(&self, alg: &A, tau: u32, beta: E) -> Result<E> {
        if tau > self.m {
            return Err(Error::OutOfRange { what: "tau", value: tau as usize, bound: self.m as usize + 1 });
        }
        Ok(subspace_eval_with(alg, &self.s_norm, tau, beta))
    }

    /// `s_{tau-1}(beta) / s_{tau-1}(v_{tau-1})` for arbitrary `beta`, preprocessed.
    pub fn twiddle_for<A: CodeAlgebra<Elem = E>>(&self, alg: &A, tau: u32, beta: E) -> E {
        let s = subspace_eval_with(alg, &self.s_norm, tau - 1, beta);
        alg.prepare(alg.canonical(alg.mul_raw(s, self.s_norm_inv[tau as usize - 1])))
    }

    /// `p_l = prod_j s_j(v_j)^(l_j)`.
    pub fn p_const<A: CodeAlgebra<Elem = E>>(&self, alg: &A, l: usize) -> Result<E> {
        if l >> self.m != 0 {
            return Err(Error::OutOfRange { what: "l", value: l, bound: 1 << self.m });
        }
        let mut acc = alg.one();
        for j in 0..self.m as usize {
            if (l >> j) & 1 == 1 {
                acc = alg.mul_raw(acc, self.s_norm[j]);
            }
        }
        Ok(alg.canonical(acc))
    }
}

fn subspace_eval_with<A: CodeAlgebra>(alg: &A, s_norm: &[A::Elem], tau: u32, beta: A::Elem) -> A::Elem {
    let mut s = alg.canonical(beta);
    for j in 0..tau as usize {
        let sq = alg.mul_raw(s, s);
        let lin = alg.mul_raw(s_norm[j], s);
        s = alg.canonical(alg.add_raw(sq, lin));
    }
    s
}

/// The eleven-element basis for `p = 23` with low-weight twiddles.
pub const P23_REFERENCE_EXPONENTS: [&[u32]; 11] = [
    &[6],
    &[5],
    &[4],
    &[3],
    &[7],
    &[2],
    &[8, 3],
    &[1],
    &[9, 8, 3, 1, 0],
    &[10, 9, 7, 3, 2, 1],
    &[9, 7, 3],
];

pub fn p23_reference_basis() -> Vec<RingElement> {
    P23_REFERENCE_EXPONENTS
        .iter()
        .map(|e| RingElement::from_exponents(23, e).expect("exponents below 23"))
        .collect()
}

/// The built-in basis: the reference list for `p = 23`, otherwise the
/// heuristic with seed 0.
pub fn default_basis(alg: &RingAlgebra, params: &CodeParams) -> Result<Vec<RingElement>> {
    params.require_supported()?;
    if params.p == 23 {
        return Ok(p23_reference_basis());
    }
    select_basis_heuristic(alg, params, 0)
}

/// Incremental GF(2) row echelon form over `u64` vectors.
#[derive(Debug, Clone, Default)]
struct Span {
    rows: Vec<u64>,
}

impl Span {
    fn reduce(&self, mut x: u64) -> u64 {
        for &r in &self.rows {
            let top = 63 - r.leading_zeros();
            if (x >> top) & 1 == 1 {
                x ^= r;
            }
        }
        x
    }

    fn is_independent(&self, x: u64) -> bool {
        self.reduce(x) != 0
    }

    fn insert(&mut self, x: u64) {
        let r = self.reduce(x);
        if r != 0 {
            self.rows.push(r);
            self.rows.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
}

/// Sum over all multiplications of `IFFT(., mu, beta)` of the preprocessed
/// twiddle weight, for the `beta` blocks of a partial basis `v_0..v_{mu-1}`.
fn ifft_twiddle_weight(alg: &RingAlgebra, v: &[RingElement], s_norm_inv: &[RingElement], beta: RingElement) -> u64 {
    let mu = v.len() as u32;
    let mut omega_low = alloc::vec![alg.zero(); 1 << mu];
    for j in 0..mu as usize {
        for l in 0..(1 << j) {
            omega_low[l + (1 << j)] = alg.add_raw(omega_low[l], v[j]);
        }
    }
    let mut s_norm = Vec::with_capacity(mu as usize);
    for j in 0..mu {
        s_norm.push(subspace_eval_with(alg, &s_norm, j, v[j as usize]));
    }
    let mut total = 0u64;
    for tau in 1..=mu {
        let half = 1u64 << (tau - 1);
        for o in (0..1usize << mu).step_by(1 << tau) {
            let b = alg.add_raw(beta, omega_low[o]);
            let s = subspace_eval_with(alg, &s_norm, tau - 1, b);
            let tw = alg.prepare(alg.canonical(alg.mul_raw(s, s_norm_inv[tau as usize - 1])));
            total += half * tw.weight() as u64;
        }
    }
    total
}

/// Objective for basis selection: `sum_i c_{omega_{i 2^mu}}` over all blocks.
pub fn basis_cost(alg: &RingAlgebra, v: &[RingElement], mu: u32) -> Result<u64> {
    let basis = EvalBasis::new(alg, v.to_vec())?;
    let low = &v[..mu as usize];
    let inv: Vec<RingElement> = (0..mu).map(|j| basis.s_norm_inv(j)).collect();
    let blocks = 1usize << (basis.m() - mu);
    Ok((0..blocks)
        .map(|i| ifft_twiddle_weight(alg, low, &inv, basis.omega_unchecked(i << mu)))
        .sum())
}

fn random_component(rng: &mut ChaCha8Rng, degree: u32) -> u64 {
    rng.next_u64() & ((1u64 << degree) - 1)
}

/// Greedy basis search.
///
/// `v_0..v_{mu-1}` are drawn at random (seeded) subject to per-component
/// independence. Every candidate `r` in the pool is scored by the twiddle
/// weight `c_r` of `IFFT(., mu, r)`; `v_mu, v_{mu+1}, ...` are then taken in
/// increasing `(c_r, bits)` order, skipping candidates that are dependent on
/// the basis so far in some component.
///
/// The pool is all of `R_p` when `p <= 17`; otherwise every element whose CRT
/// components are all monomials or binomials (when there are at most 10^5
/// of those) plus 10^4 seeded random elements.
pub fn select_basis_heuristic(alg: &RingAlgebra, params: &CodeParams, seed: u64) -> Result<Vec<RingElement>> {
    params.require_supported()?;
    let crt = alg.crt();
    let (p, t, m, mu) = (params.p, crt.t(), params.m, params.mu);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spans = alloc::vec![Span::default(); t];
    let mut v = Vec::with_capacity(m as usize);

    let phi_inv = |comps: &[u64]| crt.phi_inv_counted_bits(comps, &mut 0);

    for _ in 0..mu {
        let mut comps = alloc::vec![0u64; t];
        for k in 0..t {
            loop {
                let c = random_component(&mut rng, m);
                if spans[k].is_independent(c) {
                    spans[k].insert(c);
                    comps[k] = c;
                    break;
                }
            }
        }
        v.push(phi_inv(&comps));
    }
    if mu == m {
        return Ok(v);
    }

    let mut s_norm = Vec::with_capacity(mu as usize);
    for j in 0..mu {
        s_norm.push(subspace_eval_with(alg, &s_norm, j, v[j as usize]));
    }
    let s_norm_inv: Vec<RingElement> = s_norm.iter().map(|&s| alg.inv_raw(s)).collect::<Result<_>>()?;

    let mut pool: Vec<RingElement> = Vec::new();
    if p <= 17 {
        pool.extend((1..1u64 << (p - 1)).map(|b| RingElement::from_bits_unchecked(p, b)));
    } else {
        let per_component: Vec<u64> = (0..m)
            .map(|a| 1u64 << a)
            .chain((0..m).flat_map(|a| ((a + 1)..m).map(move |b| (1u64 << a) | (1u64 << b))))
            .collect();
        let combos = (per_component.len() as u64).checked_pow(t as u32);
        if let Some(total) = combos.filter(|&c| c <= 100_000) {
            let mut comps = alloc::vec![0u64; t];
            for mut idx in 0..total {
                for c in comps.iter_mut() {
                    *c = per_component[(idx % per_component.len() as u64) as usize];
                    idx /= per_component.len() as u64;
                }
                pool.push(phi_inv(&comps));
            }
        }
        for _ in 0..10_000 {
            let bits = rng.next_u64() & ((1u64 << (p - 1)) - 1);
            pool.push(RingElement::from_bits_unchecked(p, bits));
        }
    }

    let mut scored: Vec<(u64, u64, RingElement)> = pool
        .into_iter()
        .map(|r| (ifft_twiddle_weight(alg, &v, &s_norm_inv, r), r.bits(), r))
        .collect();
    scored.sort_unstable_by_key(|&(c, b, _)| (c, b));

    for &(_, _, r) in &scored {
        if v.len() == m as usize {
            break;
        }
        let comps = crt.phi(&r).components;
        if comps.iter().zip(&spans).all(|(&c, s)| s.is_independent(c)) {
            for (c, s) in comps.iter().zip(spans.iter_mut()) {
                s.insert(*c);
            }
            v.push(r);
        }
    }
    // the pool was not rich enough; finish with random independent draws
    while v.len() < m as usize {
        let mut comps = alloc::vec![0u64; t];
        for k in 0..t {
            loop {
                let c = random_component(&mut rng, m);
                if spans[k].is_independent(c) {
                    spans[k].insert(c);
                    comps[k] = c;
                    break;
                }
            }
        }
        v.push(phi_inv(&comps));
    }
    Ok(v)
}
