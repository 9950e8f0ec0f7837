//! Basis text files: one line per `v_j`, the exponents of `alpha` with a
//! nonzero coefficient in ascending order. `#` starts a comment.

use ringrs_core::RingElement;
use sha2::{Digest, Sha256};

use crate::Error;

pub fn parse(text: &str, p: u32) -> Result<Vec<RingElement>, Error> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut exps = Vec::new();
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let e: u32 = tok
                .parse()
                .map_err(|_| Error::BasisFile { line: lineno + 1, why: format!("not an exponent: {:?}", tok) })?;
            if e >= p {
                return Err(Error::BasisFile { line: lineno + 1, why: format!("exponent {} >= p = {}", e, p) });
            }
            if exps.last().is_some_and(|&prev| prev >= e) {
                return Err(Error::BasisFile { line: lineno + 1, why: "exponents must be strictly ascending".into() });
            }
            exps.push(e);
        }
        out.push(RingElement::from_exponents(p, &exps)?);
    }
    Ok(out)
}

pub fn format(basis: &[RingElement]) -> String {
    let mut s = String::new();
    for v in basis {
        let exps: Vec<String> = v.exponents().map(|e| e.to_string()).collect();
        s.push_str(&exps.join(" "));
        s.push('\n');
    }
    s
}

/// First 8 bytes of SHA-256 over `p` and the canonical basis text.
pub fn basis_hash(p: u32, basis: &[RingElement]) -> [u8; 8] {
    let canon: Vec<RingElement> = basis.iter().map(|v| v.canonicalize()).collect();
    let mut h = Sha256::new();
    h.update(p.to_le_bytes());
    h.update(format(&canon).as_bytes());
    let digest = h.finalize();
    let mut out = [0u8; 8];
    out.copy_from_slice(&digest[..8]);
    out
}
