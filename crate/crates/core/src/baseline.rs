//! Comparison codec: every `(p-1)`-bit ring symbol is cut into two
//! `(p-1)/2`-bit halves, each half coded by an RS code over `F2[x]/(q(x))`
//! with the same transform and decoding pipeline.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{CodeAlgebra, FieldAlgebra, FieldElement};
use crate::code::Code;
use crate::crt::Gf2m;
use crate::decoder::{DecodeOutcome, ErrorLocations};
use crate::encoder::Codeword;
use crate::error::{Error, Result};
use crate::meter::XorMeter;
use crate::poly::Gf2Poly;
use crate::ring::RingElement;

/// `1 + x^2 + x^11`.
pub const BASELINE_MODULUS: Gf2Poly = Gf2Poly((1 << 11) | (1 << 2) | 1);

/// The sparsest irreducible polynomial of degree `q`, smallest value first
/// among equals.
pub fn default_modulus(q: u32) -> Result<Gf2Poly> {
    if q == 0 || q > 31 {
        return Err(Error::Unsupported(alloc::format!("field degree {}", q)));
    }
    let top = 1u128 << q;
    for weight in (2..=q + 1).filter(|w| w % 2 == 1 || q == 1) {
        for low in 0..(1u128 << q) {
            let f = Gf2Poly(top | low);
            if low & 1 == 1 && f.weight() == weight && f.is_irreducible() {
                return Ok(f);
            }
        }
    }
    Err(Error::Unsupported(alloc::format!("no irreducible polynomial of degree {}", q)))
}

#[derive(Debug, Clone)]
pub struct BaselineCodec {
    p: u32,
    code: Code<FieldAlgebra>,
}

impl BaselineCodec {
    /// Two field codes of length `2^m` with basis `v_j = x^j`, `j < m`, over
    /// a field of degree `q = (p-1)/2 >= m`.
    pub fn new(p: u32, modulus: Gf2Poly, m: u32, mu: u32) -> Result<Self> {
        crate::ring::check_p(p)?;
        let field = Gf2m::new(modulus)?;
        let q = field.degree();
        if 2 * q != p - 1 {
            return Err(Error::Unsupported(alloc::format!(
                "field degree {} does not split a {}-bit symbol in half",
                q,
                p - 1
            )));
        }
        if m > q {
            return Err(Error::Unsupported(alloc::format!("code length 2^{} exceeds a field of 2^{} elements", m, q)));
        }
        let v = (0..m).map(|j| FieldElement(1 << j)).collect();
        let code = Code::new(FieldAlgebra::new(field), v, mu)?;
        Ok(BaselineCodec { p, code })
    }

    /// The `p = 23` baseline over `1 + x^2 + x^11`.
    pub fn p23(mu: u32) -> Result<Self> {
        Self::new(23, BASELINE_MODULUS, 11, mu)
    }

    /// Baseline matching a ring code's length: `1 + x^2 + x^11` for `p = 23`,
    /// otherwise [`default_modulus`] of degree `(p-1)/2`.
    pub fn for_ring(p: u32, m: u32, mu: u32) -> Result<Self> {
        crate::ring::check_p(p)?;
        let modulus = if p == 23 { BASELINE_MODULUS } else { default_modulus((p - 1) / 2)? };
        Self::new(p, modulus, m, mu)
    }

    pub fn modulus(&self) -> Gf2Poly {
        self.code.algebra().field().modulus()
    }

    pub fn field_code(&self) -> &Code<FieldAlgebra> {
        &self.code
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    fn half_bits(&self) -> u32 {
        (self.p - 1) / 2
    }

    pub fn split(&self, symbols: &[RingElement]) -> Result<(Vec<FieldElement>, Vec<FieldElement>)> {
        let q = self.half_bits();
        let low_mask = (1u64 << q) - 1;
        let mut lo = Vec::with_capacity(symbols.len());
        let mut hi = Vec::with_capacity(symbols.len());
        for s in symbols {
            if s.p() != self.p {
                return Err(Error::ParameterMismatch { left: self.p, right: s.p() });
            }
            let b = s.canonicalize().bits();
            lo.push(FieldElement(b & low_mask));
            hi.push(FieldElement(b >> q));
        }
        Ok((lo, hi))
    }

    pub fn merge(&self, lo: &[FieldElement], hi: &[FieldElement]) -> Vec<RingElement> {
        let q = self.half_bits();
        lo.iter()
            .zip(hi)
            .map(|(a, b)| RingElement::new(self.p, a.0 | (b.0 << q)).expect("halves fit below bit p-1"))
            .collect()
    }

    pub fn encode(&self, data: &[RingElement], meter: &mut XorMeter) -> Result<Codeword<RingElement>> {
        let (lo, hi) = self.split(data)?;
        let a = self.code.encode(&lo, meter)?;
        let b = self.code.encode(&hi, meter)?;
        Ok(Codeword { symbols: self.merge(&a.symbols, &b.symbols), mu: self.code.mu() })
    }

    /// Decodes both halves; fails if either half is uncorrectable. The two
    /// location sets play the role of components.
    pub fn decode(&self, received: &[RingElement], meter: &mut XorMeter) -> Result<DecodeOutcome<RingElement>> {
        let (lo, hi) = self.split(received)?;
        let a = self.code.decode(&lo, meter)?;
        let b = self.code.decode(&hi, meter)?;
        let mut sets = vec![];
        sets.extend(a.locations.sets);
        sets.extend(b.locations.sets);
        Ok(DecodeOutcome { data: self.merge(&a.data, &b.data), locations: ErrorLocations { sets } })
    }

    /// Field codec XORs per multiplication, for reports.
    pub fn mul_cost(&self) -> u64 {
        self.code.algebra().field().mul_cost()
    }

    pub fn components(&self) -> usize {
        self.code.algebra().components()
    }
}
