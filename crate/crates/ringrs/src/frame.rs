//! On-disk framing.
//!
//! ```text
//! offset size
//!  0      4   magic "RRSF"
//!  4      1   version (1)
//!  5      1   p
//!  6      1   mu
//!  7      1   m
//!  8      8   basis hash
//! 16      8   payload length in bytes, u64 LE
//! 24      4   codeword count, u32 LE
//! 28      4   zero symbols padding the last codeword, u32 LE
//! 32      4   CRC-32 of bytes 0..32, u32 LE
//! ```
//!
//! The body holds each codeword as its `k` data symbols followed by its
//! `2^mu` parity symbols. A symbol takes `ceil((p-1)/8)` bytes, coefficient
//! `i` at bit `i`, least significant byte first. The payload is a bit stream
//! cut into `(p-1)`-bit symbols.

use ringrs_core::RingElement;

use crate::Error;

pub const MAGIC: [u8; 4] = *b"RRSF";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameHeader {
    pub p: u32,
    pub mu: u32,
    pub m: u32,
    pub basis_hash: [u8; 8],
    pub payload_len: u64,
    pub codewords: u32,
    pub pad_symbols: u32,
}

pub fn symbol_bytes(p: u32) -> usize {
    (p as usize - 1).div_ceil(8)
}

impl FrameHeader {
    pub fn n(&self) -> usize {
        1 << self.m
    }

    pub fn k(&self) -> usize {
        self.n() - (1 << self.mu)
    }

    pub fn body_len(&self) -> usize {
        self.codewords as usize * self.n() * symbol_bytes(self.p)
    }

    /// Symbols the payload occupies.
    pub fn payload_symbols(&self) -> usize {
        (self.payload_len as usize * 8).div_ceil(self.p as usize - 1)
    }

    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut b = [0u8; HEADER_LEN];
        b[0..4].copy_from_slice(&MAGIC);
        b[4] = VERSION;
        b[5] = self.p as u8;
        b[6] = self.mu as u8;
        b[7] = self.m as u8;
        b[8..16].copy_from_slice(&self.basis_hash);
        b[16..24].copy_from_slice(&self.payload_len.to_le_bytes());
        b[24..28].copy_from_slice(&self.codewords.to_le_bytes());
        b[28..32].copy_from_slice(&self.pad_symbols.to_le_bytes());
        let crc = crc32fast::hash(&b[..32]);
        b[32..36].copy_from_slice(&crc.to_le_bytes());
        b
    }

    pub fn from_bytes(b: &[u8]) -> Result<Self, Error> {
        if b.len() < HEADER_LEN {
            return Err(Error::Frame(format!("header truncated: {} of {} bytes", b.len(), HEADER_LEN)));
        }
        if b[0..4] != MAGIC {
            return Err(Error::Frame("bad magic".into()));
        }
        let crc = u32::from_le_bytes(b[32..36].try_into().unwrap());
        if crc != crc32fast::hash(&b[..32]) {
            return Err(Error::Frame("header checksum mismatch".into()));
        }
        if b[4] != VERSION {
            return Err(Error::Frame(format!("unsupported version {}", b[4])));
        }
        let h = FrameHeader {
            p: b[5] as u32,
            mu: b[6] as u32,
            m: b[7] as u32,
            basis_hash: b[8..16].try_into().unwrap(),
            payload_len: u64::from_le_bytes(b[16..24].try_into().unwrap()),
            codewords: u32::from_le_bytes(b[24..28].try_into().unwrap()),
            pad_symbols: u32::from_le_bytes(b[28..32].try_into().unwrap()),
        };
        if h.m == 0 || h.m > 20 || h.mu >= h.m || h.p < 3 {
            return Err(Error::Frame("inconsistent code parameters".into()));
        }
        let slots = h.codewords as usize * h.k();
        if slots != h.payload_symbols() + h.pad_symbols as usize || (h.codewords > 0 && h.pad_symbols as usize >= h.k()) {
            return Err(Error::Frame("payload length inconsistent with symbol count".into()));
        }
        Ok(h)
    }
}

/// Cuts bytes into `(p-1)`-bit symbols, zero-filling the last one.
pub fn pack_symbols(bytes: &[u8], p: u32) -> Vec<RingElement> {
    let w = p as usize - 1;
    let count = (bytes.len() * 8).div_ceil(w);
    (0..count)
        .map(|s| {
            let mut v = 0u64;
            for j in 0..w {
                let bit = s * w + j;
                if bit < bytes.len() * 8 && (bytes[bit / 8] >> (bit % 8)) & 1 == 1 {
                    v |= 1 << j;
                }
            }
            RingElement::new(p, v).expect("below bit p-1")
        })
        .collect()
}

/// Inverse of [`pack_symbols`], keeping `len` bytes.
pub fn unpack_symbols(symbols: &[RingElement], p: u32, len: usize) -> Vec<u8> {
    let w = p as usize - 1;
    let mut out = vec![0u8; len];
    for (s, sym) in symbols.iter().enumerate() {
        let v = sym.canonicalize().bits();
        for j in 0..w {
            let bit = s * w + j;
            if bit >= len * 8 {
                return out;
            }
            if (v >> j) & 1 == 1 {
                out[bit / 8] |= 1 << (bit % 8);
            }
        }
    }
    out
}

pub fn write_symbol(out: &mut Vec<u8>, s: &RingElement) {
    let bytes = symbol_bytes(s.p());
    out.extend_from_slice(&s.canonicalize().bits().to_le_bytes()[..bytes]);
}

/// Bits at or above `p - 1` are dropped.
pub fn read_symbol(b: &[u8], p: u32) -> RingElement {
    let mut buf = [0u8; 8];
    buf[..b.len()].copy_from_slice(b);
    RingElement::new(p, u64::from_le_bytes(buf) & ((1 << (p - 1)) - 1)).expect("masked")
}
