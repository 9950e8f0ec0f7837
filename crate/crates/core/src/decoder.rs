use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::CodeAlgebra;
use crate::code::Code;
use crate::error::{Error, Result};
use crate::meter::XorMeter;
use crate::transform::{eval_point, extended_ifft, fft, formal_derivative, ifft};

#[derive(Debug, Clone, PartialEq)]
pub struct SyndromeSet<E> {
    /// `u(omega_0) .. u(omega_{2^mu - 1})`.
    pub values: Vec<E>,
    /// `X̄` coordinates of `u`.
    pub ubar: Vec<E>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KeyEquationResult<E> {
    /// `X̄` coordinates of the error locator, `2^(mu-1) + 1` of them.
    pub lambda: Vec<E>,
    /// `X̄` coordinates of the error evaluator.
    pub z: Vec<E>,
    /// Per component, `min(r1, r2)` after the last iteration.
    pub ranks: Vec<u32>,
}

/// Roots of the locator found per component, as codeword positions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ErrorLocations {
    pub sets: Vec<Vec<usize>>,
}

impl ErrorLocations {
    /// Positions that are an error in at least one component, ascending.
    pub fn union(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.sets.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Bit `k` set iff `l` is in the `k`-th set.
    pub fn mask_at(&self, l: usize) -> u32 {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.binary_search(&l).is_ok())
            .fold(0, |m, (k, _)| m | (1 << k))
    }

    pub fn is_empty(&self) -> bool {
        self.sets.iter().all(|s| s.is_empty())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeOutcome<E> {
    pub data: Vec<E>,
    pub locations: ErrorLocations,
}

impl<A: CodeAlgebra> Code<A> {
    fn check_received(&self, received: &[A::Elem]) -> Result<()> {
        if received.len() != self.n() {
            return Err(Error::LengthMismatch { what: "received word", expected: self.n(), actual: received.len() });
        }
        Ok(())
    }

    /// `c1 a + c2 b` with prepared multipliers; zero multipliers cost nothing.
    fn lin2(&self, c1: A::Elem, a: A::Elem, c2: A::Elem, b: A::Elem, xors: &mut u64) -> A::Elem {
        let alg = &self.alg;
        match (alg.is_zero(c1), alg.is_zero(c2)) {
            (true, true) => alg.zero(),
            (false, true) => alg.mul_prepared(c1, a, xors),
            (true, false) => alg.mul_prepared(c2, b, xors),
            (false, false) => {
                let x = alg.mul_prepared(c1, a, xors);
                let y = alg.mul_prepared(c2, b, xors);
                alg.add(x, y, xors)
            }
        }
    }

    pub fn syndrome(&self, received: &[A::Elem], xors: &mut u64) -> Result<SyndromeSet<A::Elem>> {
        self.check_received(received)?;
        let alg = &self.alg;
        let block = self.parity_len();
        let mut ubar: Vec<A::Elem> = Vec::new();
        let mut tmp = Vec::with_capacity(block);
        for (b, chunk) in received.chunks(block).enumerate() {
            tmp.clear();
            tmp.extend_from_slice(chunk);
            ifft(alg, &self.basis, &mut tmp, self.mu, b * block, xors)?;
            if ubar.is_empty() {
                ubar.extend_from_slice(&tmp);
            } else {
                for (a, &t) in ubar.iter_mut().zip(&tmp) {
                    *a = alg.add(*a, t, xors);
                }
            }
        }
        for u in ubar.iter_mut() {
            *u = alg.mul_prepared(self.p_inv, *u, xors);
        }
        let mut values = ubar.clone();
        fft(alg, &self.basis, &mut values, self.mu, 0, xors)?;
        Ok(SyndromeSet { values, ubar })
    }

    /// Frequency-domain modular approach, run on all components at once with
    /// per-component branch flags.
    pub fn solve_key_equation(&self, values: &[A::Elem], xors: &mut u64) -> Result<KeyEquationResult<A::Elem>> {
        let alg = &self.alg;
        let n2 = self.parity_len();
        if values.len() != n2 {
            return Err(Error::LengthMismatch { what: "syndrome", expected: n2, actual: values.len() });
        }
        if self.mu == 0 {
            return Err(Error::Unsupported("key equation needs mu >= 1".into()));
        }
        let t = alg.components();
        let full = alg.full_mask() as usize;
        let h = n2 / 2;

        let mut d = values.to_vec();
        let mut g = vec![alg.one(); n2];
        let mut w = vec![alg.one(); h + 1];
        let mut v = vec![alg.zero(); h + 1];
        let mut r1 = vec![0u32; t];
        let mut r2 = vec![1u32; t];

        for j in 0..n2 {
            let (gj, dj) = (g[j], d[j]);
            let mut flag1 = 0usize;
            for k in 0..t {
                let gz = alg.component_is_zero(gj, k);
                let dz = alg.component_is_zero(dj, k);
                if gz || (!dz && r1[k] < r2[k]) {
                    flag1 |= 1 << k;
                    let old = r1[k];
                    r1[k] = r2[k];
                    r2[k] = old + 2;
                } else {
                    r2[k] += 2;
                }
            }
            let gp = alg.prepare_counted(gj, xors);
            let dp = alg.prepare_counted(dj, xors);
            let (psi1, psi2) = (&self.psi[flag1], &self.psi[full ^ flag1]);

            for i in j + 1..n2 {
                let (di, gi) = (d[i], g[i]);
                d[i] = self.lin2(gp, di, dp, gi, xors);
                g[i] = self.lin2(psi1[i ^ j], di, psi2[i ^ j], gi, xors);
            }
            for i in 0..=h {
                let (wi, vi) = (w[i], v[i]);
                w[i] = self.lin2(gp, wi, dp, vi, xors);
                v[i] = self.lin2(psi1[i ^ j], wi, psi2[i ^ j], vi, xors);
            }
        }

        let pick_v = (0..t).filter(|&k| r1[k] > r2[k]).fold(0u32, |m, k| m | (1 << k));
        let mut lam = Vec::with_capacity(h + 1);
        let mut z = Vec::with_capacity(h + 1);
        for i in 0..=h {
            let l = alg.select(pick_v, v[i], w[i], xors);
            let lp = alg.prepare_counted(l, xors);
            z.push(alg.mul_prepared(lp, values[i], xors));
            lam.push(l);
        }
        let lambda = extended_ifft(alg, &self.basis, &lam, self.mu - 1, xors)?;
        let z = extended_ifft(alg, &self.basis, &z, self.mu - 1, xors)?;
        let ranks = r1.iter().zip(&r2).map(|(&a, &b)| a.min(b)).collect();
        Ok(KeyEquationResult { lambda, z, ranks })
    }

    /// Evaluates `lambda` on every block of `2^mu` points and collects the
    /// roots per component. Fails when a component's locator is zero or has
    /// fewer roots than its degree.
    pub fn chien_search(&self, lambda: &[A::Elem], xors: &mut u64) -> Result<ErrorLocations> {
        let alg = &self.alg;
        let block = self.parity_len();
        if lambda.len() > block {
            return Err(Error::LengthMismatch { what: "locator", expected: block, actual: lambda.len() });
        }
        let t = alg.components();
        let mut sets = vec![Vec::new(); t];
        let mut buf = Vec::with_capacity(block);
        for b in 0..self.n() / block {
            buf.clear();
            buf.extend_from_slice(lambda);
            buf.resize(block, alg.zero());
            fft(alg, &self.basis, &mut buf, self.mu, b * block, xors)?;
            for (i, &y) in buf.iter().enumerate() {
                let zeros = alg.zero_components(y);
                for (k, set) in sets.iter_mut().enumerate() {
                    if zeros & (1 << k) != 0 {
                        set.push(b * block + i);
                    }
                }
            }
        }
        for (k, set) in sets.iter().enumerate() {
            let degree = lambda.iter().rposition(|&c| !alg.component_is_zero(c, k));
            match degree {
                None => return Err(Error::Uncorrectable),
                Some(deg) if deg > set.len() => return Err(Error::Uncorrectable),
                _ => {}
            }
        }
        Ok(ErrorLocations { sets })
    }

    /// An error pattern on the roots of `lambda` needs `deg z < deg lambda`
    /// in every component; otherwise the word is beyond the decoding radius.
    fn check_evaluator(&self, key: &KeyEquationResult<A::Elem>) -> Result<()> {
        let alg = &self.alg;
        for k in 0..alg.components() {
            let deg = |p: &[A::Elem]| p.iter().rposition(|&c| !alg.component_is_zero(c, k));
            match (deg(&key.z), deg(&key.lambda)) {
                (None, _) => {}
                (Some(dz), Some(dl)) if dz < dl => {}
                _ => return Err(Error::Uncorrectable),
            }
        }
        Ok(())
    }

    pub fn formal_derivative(&self, coeffs: &[A::Elem], xors: &mut u64) -> Vec<A::Elem> {
        formal_derivative(&self.alg, &self.deriv, coeffs, xors)
    }

    /// Full decoding; returns the `k` data symbols.
    pub fn decode(&self, received: &[A::Elem], meter: &mut XorMeter) -> Result<DecodeOutcome<A::Elem>> {
        let alg = &self.alg;
        let syn = self.syndrome(received, &mut meter.syndrome)?;
        let parity = self.parity_len();
        if syn.values.iter().all(|&u| alg.is_zero(u)) {
            let data = received[parity..].iter().map(|&x| alg.canonical(x)).collect();
            let locations = ErrorLocations { sets: vec![Vec::new(); alg.components()] };
            return Ok(DecodeOutcome { data, locations });
        }
        if self.mu == 0 {
            return Err(Error::Uncorrectable);
        }
        let key = self.solve_key_equation(&syn.values, &mut meter.key_equation)?;
        let locations = self.chien_search(&key.lambda, &mut meter.chien_search)?;
        self.check_evaluator(&key)?;
        let deriv = self.formal_derivative(&key.lambda, &mut meter.formal_derivative);

        let xors = &mut meter.forney;
        let mut data: Vec<A::Elem> = received[parity..].to_vec();
        for l in locations.union() {
            if l < parity {
                continue;
            }
            let mask = locations.mask_at(l);
            let dl = eval_point(alg, &self.basis, &deriv, l, xors)?;
            let den = alg.mul_prepared(self.s_mu[l], dl, xors);
            let inv = alg.inv_masked(den, mask, xors).map_err(|_| Error::Uncorrectable)?;
            let zl = eval_point(alg, &self.basis, &key.z, l, xors)?;
            let zp = alg.prepare_counted(zl, xors);
            let e = alg.mul_prepared(zp, inv, xors);
            data[l - parity] = alg.add(data[l - parity], e, xors);
        }
        for x in data.iter_mut() {
            *x = alg.canonical(*x);
        }
        Ok(DecodeOutcome { data, locations })
    }
}
