//! The skew polynomial ring R[x, theta], where `x * a = theta(a) * x`.
//!
//! Polynomials are kept in canonical form: ascending coefficients with no
//! trailing zeros, so the zero polynomial is the empty vector and has no
//! degree.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::ring::RElem;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<RElem>", from = "Vec<RElem>")]
pub struct SkewPoly {
    coeffs: Vec<RElem>,
}

impl SkewPoly {
    pub fn zero() -> SkewPoly {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> SkewPoly {
        SkewPoly::constant(RElem::ONE)
    }

    pub fn constant(c: RElem) -> SkewPoly {
        SkewPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: RElem, k: usize) -> SkewPoly {
        let mut coeffs = vec![RElem::ZERO; k + 1];
        coeffs[k] = c;
        SkewPoly::new(coeffs)
    }

    /// `x^n - 1` (equal to `x^n + 1` in characteristic 2).
    pub fn x_n_minus_one(n: usize) -> SkewPoly {
        let mut coeffs = vec![RElem::ZERO; n + 1];
        coeffs[0] = RElem::ONE;
        coeffs[n] = coeffs[n] + RElem::ONE;
        SkewPoly::new(coeffs)
    }

    /// `1 + x + ... + x^(n-1)`.
    pub fn all_ones(n: usize) -> SkewPoly {
        SkewPoly::new(vec![RElem::ONE; n])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<RElem>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn from_f4(coeffs: &[Gf4]) -> SkewPoly {
        SkewPoly::new(coeffs.iter().copied().map(RElem::scalar).collect())
    }

    pub fn coeffs(&self) -> &[RElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RElem> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> RElem {
        self.coeffs.get(i).copied().unwrap_or(RElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<RElem> {
        self.coeffs.last().copied()
    }

    /// True when every coefficient lies in F4.
    pub fn is_over_f4(&self) -> bool {
        self.coeffs.iter().all(|c| c.in_f4())
    }

    /// Left multiplication by a constant, `c * f`.
    pub fn scale_left(&self, c: RElem) -> SkewPoly {
        SkewPoly::new(self.coeffs.iter().map(|&a| c * a).collect())
    }

    /// Theta applied to every coefficient.
    pub fn apply_theta(&self) -> SkewPoly {
        SkewPoly::new(self.coeffs.iter().map(|c| c.theta()).collect())
    }

    /// Plain coefficient reversal `b_i = a_(t-i)`.
    pub fn reverse(&self) -> Result<SkewPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(SkewPoly::new(self.coeffs.iter().rev().copied().collect()))
    }

    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let t = self.coeffs.len() - 1;
        Ok((0..=t).all(|i| self.coeffs[i] == self.coeffs[t - i]))
    }

    /// `a_i = theta(a_(t-i))` for every `i`.
    pub fn is_theta_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let t = self.coeffs.len() - 1;
        Ok((0..=t).all(|i| self.coeffs[i] == self.coeffs[t - i].theta()))
    }

    /// Right division `f = q * d + r` with `deg r < deg d`.
    ///
    /// Requires `d` to have a unit leading coefficient; the quotient and
    /// remainder are then unique.
    pub fn right_divmod(&self, d: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let t = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.coeffs[t];
        if !lead.is_unit() {
            return Err(Error::NonUnitLeading(lead.to_string()));
        }
        // theta^k(lead)^-1 for k even / odd
        let lead_inv = [lead.inv()?, lead.theta().inv()?];

        let mut rem = self.coeffs.clone();
        let mut quot = vec![RElem::ZERO; rem.len().saturating_sub(t)];
        while rem.len() > t {
            let top = rem.len() - 1;
            let c = rem[top];
            if !c.is_zero() {
                let k = top - t;
                // (q x^k) d has leading coefficient q theta^k(lead)
                let q = c * lead_inv[k % 2];
                quot[k] = q;
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j] + q * dj.theta_pow(k);
                }
            }
            rem.pop();
        }
        Ok((SkewPoly::new(quot), SkewPoly::new(rem)))
    }

    /// `self` right-divides `f`, i.e. `f = q * self` for some `q`.
    pub fn right_divides(&self, f: &SkewPoly) -> Result<bool> {
        Ok(f.right_divmod(self)?.1.is_zero())
    }

    /// Reduction modulo the left ideal generated by `x^n - 1`: exponents
    /// wrap around without a twist since `c x^(k+n) = c x^k x^n`.
    pub fn reduce_mod_xn1(&self, n: usize) -> SkewPoly {
        let mut out = vec![RElem::ZERO; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = out[i % n] + c;
        }
        SkewPoly::new(out)
    }

    /// Renders in the human form, e.g. `x^4 + (w+v)*x^2 + 1`.
    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let tok = c.token();
            let coef = if tok.contains('+') { format!("({tok})") } else { tok };
            let term = match (i, *c == RElem::ONE) {
                (0, _) => coef,
                (1, true) => "x".to_string(),
                (1, false) => format!("{coef}*x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{coef}*x^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl From<Vec<RElem>> for SkewPoly {
    fn from(coeffs: Vec<RElem>) -> SkewPoly {
        SkewPoly::new(coeffs)
    }
}

impl From<SkewPoly> for Vec<RElem> {
    fn from(p: SkewPoly) -> Vec<RElem> {
        p.coeffs
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        SkewPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: SkewPoly) -> SkewPoly {
        &self + &rhs
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    /// `(a x^i)(b x^j) = a theta^i(b) x^(i+j)`.
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        if self.is_zero() || rhs.is_zero() {
            return SkewPoly::zero();
        }
        let twisted = [rhs.coeffs.clone(), rhs.apply_theta_raw()];
        let mut out = vec![RElem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in twisted[i % 2].iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        SkewPoly::new(out)
    }
}

impl Mul for SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: SkewPoly) -> SkewPoly {
        &self * &rhs
    }
}

impl SkewPoly {
    fn apply_theta_raw(&self) -> Vec<RElem> {
        self.coeffs.iter().map(|c| c.theta()).collect()
    }
}

impl fmt::Display for SkewPoly {
    /// Canonical coefficient-list form, e.g. `[1, 0, w+v, 0, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SkewPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<SkewPoly> {
        crate::parse::parse_poly(s)
    }
}
