//! Text grammars for polynomials and ring presentations.
//!
//! Polynomials: integer or `p/q` coefficient literals, identifiers
//! `[A-Za-z_][A-Za-z0-9_]*`, binary `+ - *`, unary `-`, `^` with a
//! nonnegative integer exponent (binding tightest) and parentheses.
//! Juxtaposition (`2x`, `x y`) is rejected.
//!
//! Ring specs: `FIELD[v1,...,vk]/(g1,...,gm)` with `FIELD` one of `QQ` or
//! `F<p>`; the `/(...)` part may be omitted or empty.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::Field;
use crate::error::ParseError;
use crate::poly::{PolyRing, Polynomial};

/// Parsed `FIELD[vars]/(relations)`.
#[derive(Clone, Debug)]
pub struct RingSpec {
    pub ring: Arc<PolyRing>,
    pub relations: Vec<Polynomial>,
}

pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(text, ring.clone());
    let f = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.unexpected(c));
    }
    Ok(f)
}

/// Comma-separated list of polynomials, e.g. `x, y^2 - z`.
pub fn parse_polynomial_list(
    text: &str,
    ring: &Arc<PolyRing>,
) -> Result<Vec<Polynomial>, ParseError> {
    let mut p = Parser::new(text, ring.clone());
    let out = p.list(None)?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.unexpected(c));
    }
    Ok(out)
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = skip_ws(bytes, 0);
    let field_start = pos;
    let field = if text[pos..].starts_with("QQ") {
        pos += 2;
        Field::Rational
    } else if bytes.get(pos) == Some(&b'F') {
        pos += 1;
        let ds = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if ds == pos {
            return Err(ParseError::new(ds, "expected a prime after `F`"));
        }
        let p: u64 = text[ds..pos]
            .parse()
            .map_err(|_| ParseError::new(ds, "prime out of range"))?;
        let p32 = u32::try_from(p).map_err(|_| ParseError::new(ds, "prime out of range"))?;
        Field::prime(p32).map_err(|e| ParseError::new(ds, e.to_string()))?
    } else {
        return Err(ParseError::new(
            field_start,
            "expected field `QQ` or `F<p>`",
        ));
    };
    pos = skip_ws(bytes, pos);
    if bytes.get(pos) != Some(&b'[') {
        return Err(ParseError::new(pos, "expected `[`"));
    }
    pos += 1;
    let mut vars: Vec<String> = Vec::new();
    loop {
        pos = skip_ws(bytes, pos);
        if bytes.get(pos) == Some(&b']') && vars.is_empty() {
            pos += 1;
            break;
        }
        let start = pos;
        if !bytes.get(pos).is_some_and(|c| is_ident_start(*c)) {
            return Err(ParseError::new(pos, "expected a variable name"));
        }
        while pos < bytes.len() && is_ident_char(bytes[pos]) {
            pos += 1;
        }
        let name = &text[start..pos];
        if vars.iter().any(|v| v == name) {
            return Err(ParseError::new(
                start,
                format!("duplicate variable `{name}`"),
            ));
        }
        vars.push(name.to_string());
        pos = skip_ws(bytes, pos);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b']') => {
                pos += 1;
                break;
            }
            _ => return Err(ParseError::new(pos, "expected `,` or `]`")),
        }
    }
    let ring =
        PolyRing::new(field, vars).map_err(|e| ParseError::new(field_start, e.to_string()))?;
    pos = skip_ws(bytes, pos);
    let mut relations = Vec::new();
    if pos < bytes.len() {
        if bytes[pos] != b'/' {
            return Err(ParseError::new(pos, "expected `/` before the relations"));
        }
        pos = skip_ws(bytes, pos + 1);
        if bytes.get(pos) != Some(&b'(') {
            return Err(ParseError::new(pos, "expected `(`"));
        }
        let mut p = Parser::new(text, ring.clone());
        p.pos = pos + 1;
        relations = p.list(Some(b')'))?;
        p.skip_ws();
        if p.peek() != Some(b')') {
            return Err(ParseError::new(p.pos, "expected `)`"));
        }
        p.pos += 1;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(p.unexpected(c));
        }
    }
    Ok(RingSpec { ring, relations })
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, ring: Arc<PolyRing>) -> Self {
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            ring,
        }
    }

    fn skip_ws(&mut self) {
        self.pos = skip_ws(self.bytes, self.pos);
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn unexpected(&self, c: u8) -> ParseError {
        ParseError::new(self.pos, format!("unexpected `{}`", c as char))
    }

    fn list(&mut self, close: Option<u8>) -> Result<Vec<Polynomial>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek().is_none() || self.peek() == close {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            self.skip_ws();
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(c) if is_ident_start(c) || c.is_ascii_digit() || c == b'(' => {
                    return Err(ParseError::new(
                        self.pos,
                        "implicit multiplication is not allowed; use `*`",
                    ));
                }
                Some(b'/') => {
                    return Err(ParseError::new(
                        self.pos,
                        "division is only allowed inside a `p/q` coefficient literal",
                    ));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(ParseError::new(
                    start,
                    "expected a nonnegative integer exponent",
                ));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError::new(start, "exponent out of range"))?;
            self.skip_ws();
            if self.peek() == Some(b'^') {
                return Err(ParseError::new(
                    self.pos,
                    "chained `^` is ambiguous; add parentheses",
                ));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let ds = self.pos;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(ParseError::new(ds, "expected a denominator"));
                    }
                    let den: BigInt = den.parse().expect("digits");
                    let c =
                        self.ring.field().from_ratio(&num, &den).map_err(|_| {
                            ParseError::new(ds, "denominator vanishes in the field")
                        })?;
                    return Ok(Polynomial::constant(&self.ring, c));
                }
                self.pos = save;
                Ok(Polynomial::constant(
                    &self.ring,
                    self.ring.field().from_bigint(&num),
                ))
            }
            Some(c) if is_ident_start(c) => {
                while self.pos < self.bytes.len() && is_ident_char(self.bytes[self.pos]) {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                Polynomial::var_named(&self.ring, name)
                    .map_err(|_| ParseError::new(start, format!("unknown variable `{name}`")))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(ParseError::new(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(self.unexpected(c)),
            None => Err(ParseError::new(self.pos, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_four_variable_ring() {
        let spec = parse_ring_spec("QQ[x,y,z,w]/(x^3+y^3+x*y*z+w^2)").unwrap();
        assert_eq!(spec.ring.nvars(), 4);
        assert_eq!(spec.relations.len(), 1);
        assert_eq!(spec.relations[0].to_string(), "x^3 + y^3 + x*y*z + w^2");
    }

    #[test]
    fn parses_regular_and_prime_rings() {
        let spec = parse_ring_spec("QQ[x]/()").unwrap();
        assert!(spec.relations.is_empty());
        let spec = parse_ring_spec("QQ[x, y]").unwrap();
        assert!(spec.relations.is_empty());
        let spec = parse_ring_spec("F5[x,y,z,w]/(x^3+y^3+x*y*z+w^2)").unwrap();
        assert_eq!(spec.ring.field(), Field::Prime(5));
    }

    #[test]
    fn ring_spec_errors_carry_offsets() {
        let e = parse_ring_spec("F6[x]/(x)").unwrap_err();
        assert_eq!(e.offset, 1);
        let e = parse_ring_spec("QQ[x,x]/(x)").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = parse_ring_spec("QQ[x,y]/(x^3 - q)").unwrap_err();
        assert_eq!(e.offset, 15);
        assert!(parse_ring_spec("ZZ[x]").is_err());
    }

    #[test]
    fn precedence_and_literals() {
        let r = PolyRing::rational(&["x", "y"]);
        let f = parse_polynomial("-x^2", &r).unwrap();
        assert_eq!(f.to_string(), "-x^2");
        let g = parse_polynomial("1/3*x*(3*x^2 + y) - 2/4", &r).unwrap();
        assert_eq!(g.to_string(), "x^3 + 1/3*x*y - 1/2");
        assert_eq!(
            parse_polynomial("(x+y)^2", &r).unwrap().to_string(),
            "x^2 + 2*x*y + y^2"
        );
    }

    #[test]
    fn rejects_juxtaposition_and_bad_division() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(parse_polynomial("2x", &r).unwrap_err().offset, 1);
        assert!(parse_polynomial("x y", &r).is_err());
        assert!(parse_polynomial("x/2", &r).is_err());
        assert!(parse_polynomial("x^", &r).is_err());
        assert!(parse_polynomial("x^-1", &r).is_err());
        assert!(parse_polynomial("(x", &r).is_err());
    }

    #[test]
    fn polynomial_lists() {
        let r = PolyRing::rational(&["x", "y"]);
        let v = parse_polynomial_list("x, y^2 - x", &r).unwrap();
        assert_eq!(v.len(), 2);
        assert!(parse_polynomial_list("", &r).unwrap().is_empty());
    }
}
