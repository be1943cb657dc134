//! The four-element field F4 = {0, 1, w, w2} with w2 = w + 1.
//!
//! Elements are stored as their coordinate vector over F2 in the basis
//! `{1, w}`: bit 0 is the constant part and bit 1 the `w` part, so addition
//! is XOR and multiplication is a 4x4 table lookup.
//!
//! ```text
//! * | 0  1  w  w2
//! --+------------
//! 0 | 0  0  0  0
//! 1 | 0  1  w  w2
//! w | 0  w  w2 1
//! w2| 0  w2 1  w
//! ```

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

const INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// The primitive element `w` (often written alpha).
    pub const W: Gf4 = Gf4(2);
    /// `w^2 = w + 1`.
    pub const W2: Gf4 = Gf4(3);

    /// All four elements in canonical order `0, 1, w, w2`.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W2];

    /// Builds an element from its 2-bit index; only the low two bits are used.
    pub const fn from_index(index: u8) -> Gf4 {
        Gf4(index & 3)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Result<Gf4> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Gf4(INV[self.0 as usize]))
    }

    /// Frobenius map `x -> x^2`.
    pub fn square(self) -> Gf4 {
        self * self
    }

    pub const fn token(self) -> &'static str {
        match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w2",
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Gf4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gf4> {
        match s.trim() {
            "0" => Ok(Gf4::ZERO),
            "1" => Ok(Gf4::ONE),
            "w" => Ok(Gf4::W),
            "w2" => Ok(Gf4::W2),
            other => Err(Error::Parse(format!("unknown F4 token `{other}`"))),
        }
    }
}

impl From<Gf4> for String {
    fn from(x: Gf4) -> String {
        x.token().to_string()
    }
}

impl TryFrom<String> for Gf4 {
    type Error = Error;
    fn try_from(s: String) -> Result<Gf4> {
        s.parse()
    }
}
