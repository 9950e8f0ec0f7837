use alloc::vec::Vec;

use crate::algebra::CodeAlgebra;
use crate::code::Code;
use crate::error::{Error, Result};
use crate::meter::XorMeter;
use crate::transform::{fft, ifft};

/// `2^m` symbols: `2^mu` parity symbols first, then the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword<E> {
    pub symbols: Vec<E>,
    pub mu: u32,
}

impl<E> Codeword<E> {
    pub fn parity(&self) -> &[E] {
        &self.symbols[..1 << self.mu]
    }

    pub fn data(&self) -> &[E] {
        &self.symbols[1 << self.mu..]
    }
}

impl<A: CodeAlgebra> Code<A> {
    /// Systematic encoding: `data[i]` lands at position `2^mu + i` and the
    /// parity block is `FFT(sum_{j >= 1} IFFT(F_j, mu, omega_{j 2^mu}), mu, 0)`.
    pub fn encode(&self, data: &[A::Elem], meter: &mut XorMeter) -> Result<Codeword<A::Elem>> {
        if data.len() != self.k() {
            return Err(Error::LengthMismatch { what: "data", expected: self.k(), actual: data.len() });
        }
        let alg = &self.alg;
        let block = self.parity_len();
        let xors = &mut meter.encoding;
        let mut acc: Vec<A::Elem> = Vec::new();
        let mut tmp = Vec::with_capacity(block);
        for (j, chunk) in data.chunks(block).enumerate() {
            tmp.clear();
            tmp.extend_from_slice(chunk);
            ifft(alg, &self.basis, &mut tmp, self.mu, (j + 1) * block, xors)?;
            if acc.is_empty() {
                acc.extend_from_slice(&tmp);
            } else {
                for (a, &t) in acc.iter_mut().zip(&tmp) {
                    *a = alg.add(*a, t, xors);
                }
            }
        }
        fft(alg, &self.basis, &mut acc, self.mu, 0, xors)?;

        let mut symbols = Vec::with_capacity(self.n());
        symbols.extend(acc.into_iter().map(|x| alg.canonical(x)));
        symbols.extend(data.iter().map(|&x| alg.canonical(x)));
        Ok(Codeword { symbols, mu: self.mu })
    }
}
