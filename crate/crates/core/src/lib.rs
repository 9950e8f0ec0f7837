#![no_std]
#![doc = include_str!("../README.md")]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod baseline;
pub mod basis;
pub mod code;
pub mod crt;
pub mod decoder;
pub mod encoder;
pub mod error;
pub mod meter;
pub mod params;
pub mod poly;
pub mod ring;
pub mod transform;

pub use algebra::{CodeAlgebra, FieldAlgebra, FieldElement, RingAlgebra};
pub use baseline::BaselineCodec;
pub use basis::EvalBasis;
pub use code::{Code, RingCode};
pub use crt::{Crt, Gf2m};
pub use decoder::{DecodeOutcome, ErrorLocations, KeyEquationResult, SyndromeSet};
pub use encoder::Codeword;
pub use error::{Error, Result};
pub use meter::XorMeter;
pub use params::CodeParams;
pub use poly::Gf2Poly;
pub use ring::RingElement;
