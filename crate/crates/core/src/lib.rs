//! Theta-skew cyclic codes over the ring R = F4 + vF4 (v^2 = v) and the DNA
//! codes obtained from them through the Gray map.
//!
//! The crate is layered bottom-up:
//!
//! * [`gf4`] and [`ring`]: exact arithmetic in F4 and R, the automorphism
//!   theta, units, the Gray map and the CRT split.
//! * [`poly`]: the skew polynomial ring R[x, theta] with right division.
//! * [`word`] and [`code`]: words, code construction by closure,
//!   materialization and right-divisor search.
//! * [`dna`]: DNA encoding, reversal / complement at string and ring level,
//!   brute-force reversibility checks and a theorem-based classifier.
//! * [`analysis`]: Hamming and Lee metrics, Gray images and the
//!   2-quasi-cyclic structure of Gray images.
//! * [`verify`]: the reproducible check suite behind `skewdna verify-paper`.

pub mod analysis;
pub mod code;
pub mod dna;
pub mod error;
pub mod gf4;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod verify;
pub mod word;

pub use code::{CodeSet, GeneratorForm, LeadingMode, SkewCyclicCode};
pub use dna::{DnaBase, DnaWord};
pub use error::{Error, Result};
pub use gf4::Gf4;
pub use poly::SkewPoly;
pub use ring::RElem;
pub use word::Codeword;
