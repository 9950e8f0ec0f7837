//! Whole-file encoding and decoding as a sequence of frames.

use rayon::prelude::*;
use ringrs_core::{CodeParams, RingCode, RingElement, XorMeter};

use crate::basis_file::basis_hash;
use crate::frame::{pack_symbols, read_symbol, symbol_bytes, unpack_symbols, write_symbol, FrameHeader, HEADER_LEN};
use crate::Error;

pub const DEFAULT_CODEWORDS_PER_FRAME: usize = 16;

pub struct FileCodec {
    params: CodeParams,
    code: RingCode,
    hash: [u8; 8],
}

/// Result of decoding a stream.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub bytes: Vec<u8>,
    pub frames: usize,
    pub codewords: usize,
    /// Codewords in which at least one symbol was repaired.
    pub repaired_codewords: Vec<usize>,
    /// Global indices of codewords that could not be decoded.
    pub failed_codewords: Vec<usize>,
}

impl FileCodec {
    pub fn new(p: u32, mu: u32, basis: Option<Vec<RingElement>>) -> Result<Self, Error> {
        let params = CodeParams::new(p, mu)?;
        let code = RingCode::ring(&params, basis)?;
        let hash = basis_hash(p, code.basis().v());
        Ok(FileCodec { params, code, hash })
    }

    pub fn code(&self) -> &RingCode {
        &self.code
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn basis_hash(&self) -> [u8; 8] {
        self.hash
    }

    /// Payload bytes per frame for a given number of codewords.
    pub fn frame_payload(&self, codewords: usize) -> usize {
        (codewords.max(1) * self.code.k() * (self.params.p as usize - 1) / 8).max(1)
    }

    pub fn encode_frame(&self, payload: &[u8]) -> Result<Vec<u8>, Error> {
        let p = self.params.p;
        let k = self.code.k();
        let mut symbols = pack_symbols(payload, p);
        let codewords = symbols.len().div_ceil(k);
        let pad = codewords * k - symbols.len();
        symbols.resize(codewords * k, RingElement::zero(p)?);
        let header = FrameHeader {
            p,
            mu: self.params.mu,
            m: self.params.m,
            basis_hash: self.hash,
            payload_len: payload.len() as u64,
            codewords: codewords as u32,
            pad_symbols: pad as u32,
        };
        let mut out = Vec::with_capacity(HEADER_LEN + header.body_len());
        out.extend_from_slice(&header.to_bytes());
        let mut meter = XorMeter::default();
        for chunk in symbols.chunks(k) {
            let cw = self.code.encode(chunk, &mut meter)?;
            for s in cw.data().iter().chain(cw.parity()) {
                write_symbol(&mut out, s);
            }
        }
        Ok(out)
    }

    pub fn encode_stream(&self, input: &[u8], codewords_per_frame: usize) -> Result<Vec<u8>, Error> {
        let size = self.frame_payload(codewords_per_frame);
        let frames: Vec<&[u8]> = if input.is_empty() { vec![&[][..]] } else { input.chunks(size).collect() };
        let encoded: Vec<Vec<u8>> = frames.par_iter().map(|f| self.encode_frame(f)).collect::<Result<_, _>>()?;
        Ok(encoded.concat())
    }

    fn check_header(&self, h: &FrameHeader, frame: usize) -> Result<(), Error> {
        if (h.p, h.mu, h.m) != (self.params.p, self.params.mu, self.params.m) {
            return Err(Error::Frame(format!(
                "frame {}: written with p = {}, mu = {}, decoder has p = {}, mu = {}",
                frame, h.p, h.mu, self.params.p, self.params.mu
            )));
        }
        if h.basis_hash != self.hash {
            return Err(Error::BasisMismatch { frame });
        }
        Ok(())
    }

    /// Decodes one frame body; returns the payload and, per codeword,
    /// `Some(repaired)` or `None` when uncorrectable.
    fn decode_body(&self, h: &FrameHeader, body: &[u8]) -> Result<(Vec<u8>, Vec<Option<bool>>), Error> {
        let p = h.p;
        let (n, k) = (h.n(), h.k());
        let sb = symbol_bytes(p);
        let mut data = Vec::with_capacity(h.codewords as usize * k);
        let mut status = Vec::with_capacity(h.codewords as usize);
        let mut meter = XorMeter::default();
        for cw in body.chunks(n * sb) {
            let syms: Vec<RingElement> = cw.chunks(sb).map(|b| read_symbol(b, p)).collect();
            // wire order is data then parity; the code wants parity first
            let mut word = Vec::with_capacity(n);
            word.extend_from_slice(&syms[k..]);
            word.extend_from_slice(&syms[..k]);
            match self.code.decode(&word, &mut meter) {
                Ok(out) => {
                    status.push(Some(out.data != syms[..k]));
                    data.extend(out.data);
                }
                Err(ringrs_core::Error::Uncorrectable) => {
                    status.push(None);
                    data.extend_from_slice(&syms[..k]);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Ok((unpack_symbols(&data, p, h.payload_len as usize), status))
    }

    pub fn decode_stream(&self, input: &[u8]) -> Result<DecodeReport, Error> {
        let mut frames = Vec::new();
        let mut at = 0;
        while at < input.len() {
            let h = FrameHeader::from_bytes(&input[at..]).map_err(|e| match e {
                Error::Frame(why) => Error::Frame(format!("frame {} at byte {}: {}", frames.len(), at, why)),
                other => other,
            })?;
            self.check_header(&h, frames.len())?;
            let start = at + HEADER_LEN;
            let end = start + h.body_len();
            if end > input.len() {
                return Err(Error::Frame(format!(
                    "frame {} truncated: body needs {} bytes, {} left",
                    frames.len(),
                    h.body_len(),
                    input.len() - start
                )));
            }
            frames.push((h, &input[start..end]));
            at = end;
        }
        if frames.is_empty() {
            return Err(Error::Frame("no frames".into()));
        }
        let decoded: Vec<(Vec<u8>, Vec<Option<bool>>)> =
            frames.par_iter().map(|(h, body)| self.decode_body(h, body)).collect::<Result<_, _>>()?;

        let mut report = DecodeReport { frames: frames.len(), ..Default::default() };
        for (bytes, status) in decoded {
            report.bytes.extend(bytes);
            for s in status {
                match s {
                    None => report.failed_codewords.push(report.codewords),
                    Some(true) => report.repaired_codewords.push(report.codewords),
                    Some(false) => {}
                }
                report.codewords += 1;
            }
        }
        Ok(report)
    }
}
