//! XOR accounting.
//!
//! Every counted operation takes a `&mut u64` and adds the number of
//! single-coefficient XORs it performs. Stage totals are collected into an
//! [`XorMeter`] by the encoder and decoder.

use core::ops::AddAssign;

/// Per-stage XOR counts for one encode and one decode.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct XorMeter {
    pub encoding: u64,
    pub syndrome: u64,
    pub key_equation: u64,
    pub chien_search: u64,
    pub formal_derivative: u64,
    pub forney: u64,
}

impl XorMeter {
    pub fn total_decoding(&self) -> u64 {
        self.syndrome + self.key_equation + self.chien_search + self.formal_derivative + self.forney
    }

    pub fn decode_stages(&self) -> [u64; 5] {
        [
            self.syndrome,
            self.key_equation,
            self.chien_search,
            self.formal_derivative,
            self.forney,
        ]
    }
}

impl AddAssign for XorMeter {
    fn add_assign(&mut self, rhs: XorMeter) {
        self.encoding += rhs.encoding;
        self.syndrome += rhs.syndrome;
        self.key_equation += rhs.key_equation;
        self.chien_search += rhs.chien_search;
        self.formal_derivative += rhs.formal_derivative;
        self.forney += rhs.forney;
    }
}

/// Stage names in report order.
pub const STAGES: [&str; 7] = [
    "encoding",
    "syndrome",
    "key_equation",
    "chien_search",
    "formal_derivative",
    "forney",
    "total_decoding",
];
