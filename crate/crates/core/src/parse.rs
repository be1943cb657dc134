//! Text forms for ring elements and skew polynomials.
//!
//! Accepted polynomial syntax is either a coefficient list in ascending
//! order, `[1, 0, w+v, 0, 1]`, or an expression such as
//! `x^4 + (w+v)*x^2 + 1` or `v(x^4 + x^2 + 1)`. Expressions are evaluated in
//! R[x, theta], so a constant written to the right of `x^k` is twisted by
//! `theta^k`. `-` is accepted and means `+` (characteristic 2).

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::poly::SkewPoly;
use crate::ring::RElem;

const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Plus,
    Star,
    Caret,
    X,
    V,
    Gf(Gf4),
    Num(usize),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {}
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            '+' | '-' => out.push(Tok::Plus),
            '*' => out.push(Tok::Star),
            '^' => out.push(Tok::Caret),
            'x' => out.push(Tok::X),
            'v' => out.push(Tok::V),
            'w' => {
                let squared = chars.get(i + 1) == Some(&'2')
                    && !chars.get(i + 2).is_some_and(|c| c.is_ascii_digit());
                if squared {
                    out.push(Tok::Gf(Gf4::W2));
                    i += 1;
                } else {
                    out.push(Tok::Gf(Gf4::W));
                }
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..=i].iter().collect();
                let n = text
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("number `{text}` out of range")))?;
                out.push(Tok::Num(n));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<SkewPoly> {
        if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            acc = &acc + &self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SkewPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::LParen | Tok::X | Tok::V | Tok::Gf(_) | Tok::Num(_)) => {}
                _ => return Ok(acc),
            }
            acc = &acc * &self.power()?;
        }
    }

    fn power(&mut self) -> Result<SkewPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.next() {
            Some(Tok::Num(e)) if e <= MAX_EXPONENT => e,
            Some(Tok::Num(e)) => return Err(Error::Parse(format!("exponent {e} too large"))),
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if base == SkewPoly::monomial(RElem::ONE, 1) {
            return Ok(SkewPoly::monomial(RElem::ONE, e));
        }
        let mut acc = SkewPoly::one();
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<SkewPoly> {
        match self.next() {
            Some(Tok::X) => Ok(SkewPoly::monomial(RElem::ONE, 1)),
            Some(Tok::V) => Ok(SkewPoly::constant(RElem::V)),
            Some(Tok::Gf(g)) => Ok(SkewPoly::constant(RElem::scalar(g))),
            Some(Tok::Num(n)) => Ok(if n % 2 == 1 { SkewPoly::one() } else { SkewPoly::zero() }),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            None => Err(Error::Parse("unexpected end of input".into())),
            Some(other) => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_expr(s: &str) -> Result<SkewPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

/// Parses a ring element such as `w2+v`, `1+w*v` or `(w+v)`.
pub fn parse_element(s: &str) -> Result<RElem> {
    let p = parse_expr(s)?;
    match p.degree() {
        None => Ok(RElem::ZERO),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(Error::Parse(format!("`{s}` is not a ring element"))),
    }
}

/// Parses either a `[c0, c1, ...]` coefficient list or a polynomial expression.
pub fn parse_poly(s: &str) -> Result<SkewPoly> {
    let t = s.trim();
    if let Some(body) = t.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse("missing `]`".into()))?;
        if body.trim().is_empty() {
            return Ok(SkewPoly::zero());
        }
        let coeffs = body.split(',').map(parse_element).collect::<Result<Vec<_>>>()?;
        return Ok(SkewPoly::new(coeffs));
    }
    parse_expr(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements() {
        assert_eq!(parse_element("0").unwrap(), RElem::ZERO);
        assert_eq!(parse_element("v").unwrap(), RElem::V);
        assert_eq!(parse_element("w2+v").unwrap(), RElem::new(Gf4::W2, Gf4::ONE));
        assert_eq!(parse_element("v+w2").unwrap(), RElem::new(Gf4::W2, Gf4::ONE));
        assert_eq!(parse_element("1+w*v").unwrap(), RElem::new(Gf4::ONE, Gf4::W));
        assert_eq!(parse_element("w2 v").unwrap(), RElem::new(Gf4::ZERO, Gf4::W2));
        assert!(parse_element("x").is_err());
        assert!(parse_element("").is_err());
        assert!(parse_element("q").is_err());
    }

    #[test]
    fn polynomial_forms_agree() {
        let human = parse_poly("x^4 + (w+v)*x^2 + 1").unwrap();
        let list = parse_poly("[1, 0, w+v, 0, 1]").unwrap();
        assert_eq!(human, list);
        let factored = parse_poly("v(x^4+x^2+1)").unwrap();
        assert_eq!(factored, parse_poly("[v, 0, v, 0, v]").unwrap());
        assert_eq!(parse_poly("x^10 - 1").unwrap(), SkewPoly::x_n_minus_one(10));
    }

    #[test]
    fn constants_right_of_x_are_twisted() {
        assert_eq!(parse_poly("x*v").unwrap(), parse_poly("(1+v)x").unwrap());
        assert_eq!(parse_poly("x^2*v").unwrap(), parse_poly("v x^2").unwrap());
    }

    #[test]
    fn malformed() {
        assert!(parse_poly("(x+1").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("[1, 0").is_err());
        assert!(parse_poly("[1, x]").is_err());
        assert!(parse_poly("x + + ").is_err());
        assert!(parse_poly("x^99999").is_err());
    }
}
