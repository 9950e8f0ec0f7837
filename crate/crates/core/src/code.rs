//! A code instance: algebra, evaluation basis, `mu`, and the constant tables
//! shared by encoding and decoding.

use alloc::vec::Vec;

use crate::algebra::{CodeAlgebra, RingAlgebra};
use crate::basis::{default_basis, EvalBasis};
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::ring::RingElement;
use crate::transform::derivative_constants;

#[derive(Debug, Clone)]
pub struct Code<A: CodeAlgebra> {
    pub(crate) alg: A,
    pub(crate) basis: EvalBasis<A::Elem>,
    pub(crate) mu: u32,
    /// `1 / p_{2^m - 2^mu}`, prepared.
    pub(crate) p_inv: A::Elem,
    /// `psi[mask][l]`: `omega_l` kept on the components in `mask`, prepared.
    pub(crate) psi: Vec<Vec<A::Elem>>,
    /// `s_mu(omega_l)` for every `l`, prepared.
    pub(crate) s_mu: Vec<A::Elem>,
    pub(crate) deriv: Vec<A::Elem>,
}

pub type RingCode = Code<RingAlgebra>;

impl<A: CodeAlgebra> Code<A> {
    pub fn new(alg: A, v: Vec<A::Elem>, mu: u32) -> Result<Self> {
        let basis = EvalBasis::new(&alg, v)?;
        let m = basis.m();
        if mu >= m {
            return Err(Error::OutOfRange { what: "mu", value: mu as usize, bound: m as usize });
        }
        if alg.components() > 8 {
            return Err(Error::Unsupported(alloc::format!("{} CRT components", alg.components())));
        }
        let n = 1usize << m;
        let top = basis.p_const(&alg, n - (1 << mu))?;
        let p_inv = alg.prepare(alg.canonical(alg.inv_raw(top)?));

        let masks = 1usize << alg.components();
        let psi = (0..masks)
            .map(|mask| {
                (0..1usize << mu)
                    .map(|l| alg.prepare(alg.mask_raw(basis.omega_unchecked(l), mask as u32)))
                    .collect()
            })
            .collect();
        let s_mu = (0..n)
            .map(|l| alg.prepare(alg.canonical(basis.subspace_eval(&alg, mu, basis.omega_unchecked(l)).unwrap())))
            .collect();
        let deriv = derivative_constants(&alg, &basis);
        Ok(Code { alg, basis, mu, p_inv, psi, s_mu, deriv })
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn basis(&self) -> &EvalBasis<A::Elem> {
        &self.basis
    }

    pub fn m(&self) -> u32 {
        self.basis.m()
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn n(&self) -> usize {
        1 << self.m()
    }

    pub fn k(&self) -> usize {
        self.n() - self.parity_len()
    }

    pub fn parity_len(&self) -> usize {
        1 << self.mu
    }
}

impl Code<RingAlgebra> {
    /// Ring code for `params`, with the given basis or the default one.
    pub fn ring(params: &CodeParams, basis: Option<Vec<RingElement>>) -> Result<Self> {
        params.require_supported()?;
        let alg = RingAlgebra::new(params.p)?;
        let v = match basis {
            Some(v) => {
                if v.len() != params.m as usize {
                    return Err(Error::LengthMismatch { what: "basis", expected: params.m as usize, actual: v.len() });
                }
                if let Some(bad) = v.iter().find(|x| x.p() != params.p) {
                    return Err(Error::ParameterMismatch { left: params.p, right: bad.p() });
                }
                v
            }
            None => default_basis(&alg, params)?,
        };
        Code::new(alg, v, params.mu)
    }
}
