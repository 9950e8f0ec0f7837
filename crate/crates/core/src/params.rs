use alloc::format;

use crate::crt::{factor_mp, FactorSet};
use crate::error::{Error, Result};

/// Code parameters `(p, t, {p_i}, m, mu, n = 2^m, k = 2^m - 2^mu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub p: u32,
    pub factors: FactorSet,
    pub m: u32,
    pub mu: u32,
}

impl CodeParams {
    /// Parameters for the codec. All factor degrees of `M_p` must be equal
    /// (then `m` is that degree) and `mu < m`.
    pub fn new(p: u32, mu: u32) -> Result<Self> {
        let factors = factor_mp(p)?;
        if !factors.equal_degrees() {
            return Err(Error::Unsupported(format!(
                "factor degrees {:?} of M_{} are not all equal",
                factors.degrees, p
            )));
        }
        let m = factors.degrees[0];
        if m > 20 {
            return Err(Error::Unsupported(format!("code length 2^{} too large", m)));
        }
        if mu >= m {
            return Err(Error::OutOfRange { what: "mu", value: mu as usize, bound: m as usize });
        }
        Ok(CodeParams { p, factors, m, mu })
    }

    pub fn t(&self) -> usize {
        self.factors.t()
    }

    pub fn n(&self) -> usize {
        1 << self.m
    }

    pub fn k(&self) -> usize {
        (1 << self.m) - (1 << self.mu)
    }

    pub fn parity(&self) -> usize {
        1 << self.mu
    }

    /// Number of ring-symbol errors a word can always recover from.
    pub fn capability(&self) -> usize {
        if self.mu == 0 {
            0
        } else {
            1 << (self.mu - 1)
        }
    }

    pub fn require_supported(&self) -> Result<()> {
        if self.factors.equal_degrees() && self.mu < self.m {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("p = {}, mu = {}", self.p, self.mu)))
        }
    }
}

/// What the parameter table reports for a given `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthInfo {
    pub p: u32,
    pub t: usize,
    pub degrees: alloc::vec::Vec<u32>,
    pub gcd_degree: u32,
    /// log2 of the code length.
    pub length_log2: u32,
    /// Whether the codec runs at this `p`.
    pub codec_supported: bool,
}

pub fn length_info(p: u32) -> Result<LengthInfo> {
    let fs = factor_mp(p)?;
    Ok(LengthInfo {
        p,
        t: fs.t(),
        degrees: fs.degrees.clone(),
        gcd_degree: fs.m,
        length_log2: fs.code_length_log2(),
        codec_supported: fs.equal_degrees(),
    })
}
