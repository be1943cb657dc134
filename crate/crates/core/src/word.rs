//! Length-n words over R and their packed form.
//!
//! A word of length `n <= 16` packs into a `u64`, entry `i` in bits
//! `4i..4i+4` as `a | b << 2`. Addition of packed words is XOR, which makes
//! the packed form the natural coordinate space for F2-linear algebra.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::SkewPoly;
use crate::ring::RElem;

/// Longest word that fits the packed representation.
pub const MAX_LEN: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Codeword {
    entries: Vec<RElem>,
}

impl Codeword {
    pub fn new(entries: Vec<RElem>) -> Codeword {
        Codeword { entries }
    }

    pub fn zero(n: usize) -> Codeword {
        Codeword::new(vec![RElem::ZERO; n])
    }

    pub fn all_ones(n: usize) -> Codeword {
        Codeword::new(vec![RElem::ONE; n])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RElem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `(a_0, ..., a_(n-1)) -> a_0 + a_1 x + ... + a_(n-1) x^(n-1)`.
    pub fn to_poly(&self) -> SkewPoly {
        SkewPoly::new(self.entries.clone())
    }

    pub fn from_poly(f: &SkewPoly, n: usize) -> Result<Codeword> {
        if let Some(d) = f.degree() {
            if d >= n {
                return Err(Error::DegreeTooLarge { degree: d, n });
            }
        }
        let mut entries = f.coeffs().to_vec();
        entries.resize(n, RElem::ZERO);
        Ok(Codeword::new(entries))
    }

    /// Left scalar multiple `lambda * c`.
    pub fn scale(&self, lambda: RElem) -> Codeword {
        Codeword::new(self.entries.iter().map(|&e| lambda * e).collect())
    }

    pub fn map(&self, f: impl Fn(RElem) -> RElem) -> Codeword {
        Codeword::new(self.entries.iter().map(|&e| f(e)).collect())
    }

    /// Skew cyclic shift `(theta(c_(n-1)), theta(c_0), ..., theta(c_(n-2)))`.
    pub fn sigma_theta(&self) -> Codeword {
        self.cyclic_shift().map(RElem::theta)
    }

    /// Plain cyclic shift `(c_(n-1), c_0, ..., c_(n-2))`.
    pub fn cyclic_shift(&self) -> Codeword {
        let mut entries = self.entries.clone();
        if !entries.is_empty() {
            entries.rotate_right(1);
        }
        Codeword::new(entries)
    }

    pub fn reversed(&self) -> Codeword {
        Codeword::new(self.entries.iter().rev().copied().collect())
    }

    pub fn pack(&self) -> Result<u64> {
        if self.len() > MAX_LEN {
            return Err(Error::UnsupportedLength { n: self.len(), max: MAX_LEN });
        }
        Ok(pack(&self.entries))
    }

    pub fn unpack(word: u64, n: usize) -> Codeword {
        Codeword::new(unpack(word, n))
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: self.len() });
        }
        Ok(())
    }
}

impl Add for &Codeword {
    type Output = Codeword;
    /// Entrywise sum; lengths must match.
    fn add(self, rhs: &Codeword) -> Codeword {
        assert_eq!(self.len(), rhs.len(), "adding words of different lengths");
        Codeword::new(self.entries.iter().zip(&rhs.entries).map(|(&x, &y)| x + y).collect())
    }
}

impl fmt::Display for Codeword {
    /// Comma-separated element tokens, the one-word-per-line export format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Codeword {
    type Err = Error;
    fn from_str(s: &str) -> Result<Codeword> {
        if s.trim().is_empty() {
            return Ok(Codeword::new(Vec::new()));
        }
        s.split(',').map(|t| t.parse()).collect::<Result<Vec<_>>>().map(Codeword::new)
    }
}

pub(crate) fn pack(entries: &[RElem]) -> u64 {
    entries
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, e)| acc | (u64::from(e.index()) << (4 * i)))
}

pub(crate) fn unpack(word: u64, n: usize) -> Vec<RElem> {
    (0..n).map(|i| RElem::from_index(nibble(word, i))).collect()
}

#[inline]
pub(crate) fn nibble(word: u64, i: usize) -> u8 {
    ((word >> (4 * i)) & 0xf) as u8
}

/// Per-element lookup tables for the packed fast paths.
pub(crate) struct Tables {
    pub scale: [[u8; 16]; 16],
    pub theta: [u8; 16],
}

pub(crate) static TABLES: std::sync::LazyLock<Tables> = std::sync::LazyLock::new(|| {
    let mut scale = [[0u8; 16]; 16];
    let mut theta = [0u8; 16];
    for x in RElem::all() {
        theta[x.index() as usize] = x.theta().index();
        for y in RElem::all() {
            scale[x.index() as usize][y.index() as usize] = (x * y).index();
        }
    }
    Tables { scale, theta }
});

pub(crate) fn map_packed(word: u64, n: usize, table: &[u8; 16]) -> u64 {
    (0..n).fold(0u64, |acc, i| acc | (u64::from(table[nibble(word, i) as usize]) << (4 * i)))
}

pub(crate) fn scale_packed(word: u64, n: usize, lambda: RElem) -> u64 {
    map_packed(word, n, &TABLES.scale[lambda.index() as usize])
}

pub(crate) fn theta_packed(word: u64, n: usize) -> u64 {
    map_packed(word, n, &TABLES.theta)
}

pub(crate) fn rotate_packed(word: u64, n: usize) -> u64 {
    let mask = if n == MAX_LEN { u64::MAX } else { (1u64 << (4 * n)) - 1 };
    let last = nibble(word, n - 1) as u64;
    ((word << 4) & mask) | last
}

pub(crate) fn sigma_theta_packed(word: u64, n: usize) -> u64 {
    theta_packed(rotate_packed(word, n), n)
}

pub(crate) fn reverse_packed(word: u64, n: usize) -> u64 {
    (0..n).fold(0u64, |acc, i| acc | (u64::from(nibble(word, i)) << (4 * (n - 1 - i))))
}

/// Packed word of `1 + x + ... + x^(n-1)`.
pub(crate) fn all_ones_packed(n: usize) -> u64 {
    pack(&vec![RElem::ONE; n])
}
