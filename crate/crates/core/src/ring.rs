//! The ring R = F4 + vF4 with v^2 = v.
//!
//! An element `a + b*v` is stored as the pair `(a, b)`. R is commutative with
//! 16 elements, 9 of them units, and splits by the idempotents `v` and `1+v`
//! into two copies of F4. The automorphism theta maps `a + b*v` to
//! `(a+b) + b*v`; it fixes F4 and swaps the two CRT components.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf4::Gf4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct RElem {
    pub a: Gf4,
    pub b: Gf4,
}

impl RElem {
    pub const ZERO: RElem = RElem::new(Gf4::ZERO, Gf4::ZERO);
    pub const ONE: RElem = RElem::new(Gf4::ONE, Gf4::ZERO);
    pub const V: RElem = RElem::new(Gf4::ZERO, Gf4::ONE);
    /// `1 + v`, the complementary idempotent.
    pub const V1: RElem = RElem::new(Gf4::ONE, Gf4::ONE);

    pub const fn new(a: Gf4, b: Gf4) -> RElem {
        RElem { a, b }
    }

    /// Embeds F4 as the constants `a + 0v`.
    pub const fn scalar(a: Gf4) -> RElem {
        RElem::new(a, Gf4::ZERO)
    }

    /// 4-bit index `a | b << 2`; the inverse of [`RElem::from_index`].
    pub const fn index(self) -> u8 {
        self.a.index() | (self.b.index() << 2)
    }

    pub const fn from_index(index: u8) -> RElem {
        RElem::new(Gf4::from_index(index), Gf4::from_index(index >> 2))
    }

    /// All 16 elements in index order.
    pub fn all() -> impl Iterator<Item = RElem> + Clone {
        (0..16u8).map(RElem::from_index)
    }

    /// The 9 units in index order.
    pub fn units() -> impl Iterator<Item = RElem> + Clone {
        RElem::all().filter(|x| x.is_unit())
    }

    pub fn is_zero(self) -> bool {
        self == RElem::ZERO
    }

    pub fn is_unit(self) -> bool {
        !self.a.is_zero() && !(self.a + self.b).is_zero()
    }

    /// True for elements of the embedded copy of F4 (b = 0).
    pub fn in_f4(self) -> bool {
        self.b.is_zero()
    }

    /// `(a + bv)^-1 = a^-1 + b^2 v`.
    pub fn inv(self) -> Result<RElem> {
        if !self.is_unit() {
            return Err(Error::NotUnit(self.to_string()));
        }
        Ok(RElem::new(self.a.inv()?, self.b.square()))
    }

    pub fn theta(self) -> RElem {
        RElem::new(self.a + self.b, self.b)
    }

    /// `theta^k`; theta has order 2.
    #[inline]
    pub fn theta_pow(self, k: usize) -> RElem {
        if k % 2 == 0 {
            self
        } else {
            self.theta()
        }
    }

    /// Watson-Crick complement at ring level: `x + 1`.
    pub fn complement(self) -> RElem {
        self + RElem::ONE
    }

    /// Gray map `a + bv -> (a + b, a)`.
    pub fn gray(self) -> (Gf4, Gf4) {
        (self.a + self.b, self.a)
    }

    pub fn from_gray((first, second): (Gf4, Gf4)) -> RElem {
        RElem::new(second, first + second)
    }

    /// Images modulo `<1+v>` and `<v>`, i.e. the coefficients of the
    /// decomposition `r = (a+b)v + a(1+v)`.
    pub fn crt_split(self) -> (Gf4, Gf4) {
        (self.a + self.b, self.a)
    }

    pub fn from_crt((mod_v1, mod_v): (Gf4, Gf4)) -> RElem {
        RElem::new(mod_v, mod_v1 + mod_v)
    }

    /// Canonical token, e.g. `0`, `w2+v`, `1+w*v`.
    pub fn token(self) -> String {
        let bpart = match self.b.index() {
            0 => None,
            1 => Some("v".to_string()),
            _ => Some(format!("{}*v", self.b)),
        };
        match (self.a.is_zero(), bpart) {
            (true, None) => "0".to_string(),
            (false, None) => self.a.token().to_string(),
            (true, Some(b)) => b,
            (false, Some(b)) => format!("{}+{}", self.a, b),
        }
    }
}

impl Ord for RElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl PartialOrd for RElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Gf4> for RElem {
    fn from(a: Gf4) -> RElem {
        RElem::scalar(a)
    }
}

impl Add for RElem {
    type Output = RElem;
    #[inline]
    fn add(self, rhs: RElem) -> RElem {
        RElem::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for RElem {
    type Output = RElem;
    #[inline]
    fn sub(self, rhs: RElem) -> RElem {
        self + rhs
    }
}

impl Mul for RElem {
    type Output = RElem;
    /// `(a + bv)(c + dv) = ac + (ad + bc + bd)v`.
    #[inline]
    fn mul(self, rhs: RElem) -> RElem {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        RElem::new(a * c, a * d + b * c + b * d)
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl fmt::Debug for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for RElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<RElem> {
        crate::parse::parse_element(s)
    }
}

impl From<RElem> for String {
    fn from(x: RElem) -> String {
        x.token()
    }
}

impl TryFrom<String> for RElem {
    type Error = Error;
    fn try_from(s: String) -> Result<RElem> {
        s.parse()
    }
}
