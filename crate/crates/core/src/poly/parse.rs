//! Expression parser for the polynomial grammar:
//! identifiers `[A-Za-z_][A-Za-z0-9_]*`, non-negative integer literals,
//! binary `+ - * / ^` with usual precedence, `^` only with a non-negative
//! integer exponent, `/` only by a nonzero integer constant, unary minus,
//! parentheses. Implicit multiplication is rejected.

use super::{Monomial, QPoly, Vars};
use crate::arith::{rat_int, Rat};
use num::bigint::BigInt;
use num::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = vec![];
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            'A'..='Z' | 'a'..='z' | '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().unwrap();
                out.push((start, Tok::Int(n)));
            }
            _ => {
                return Err(ParseError { position: i, message: format!("unexpected character '{c}'") })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a Vars,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.here(), message: msg.into() })
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary (('*' unary) | ('/' intliteral))*
    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(n)) => {
                            if n.is_zero() {
                                return self.err("division by zero constant");
                            }
                            acc = acc.mul_scalar(&Rat::new(BigInt::one(), n));
                        }
                        _ => return self.err("divisor must be a nonzero integer constant"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<QPoly, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    // power := atom ('^' intliteral)?
    fn power(&mut self) -> Result<QPoly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError { position: self.here(), message: "exponent too large".into() })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("exponent must be a non-negative integer"),
            }
        }
        Ok(base)
    }

    // atom := ident | int | '(' expr ')'
    fn atom(&mut self) -> Result<QPoly, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => {
                    // reject implicit multiplication like "2x" handled by lexing;
                    // "x y" and "x(" are adjacency errors caught below
                    self.no_adjacency()?;
                    Ok(QPoly {
                        vars: self.vars.clone(),
                        terms: vec![(Monomial::var(self.vars.len(), i, 1), rat_int(1))],
                    })
                }
                None => Err(ParseError { position: at, message: format!("unknown identifier '{name}'") }),
            },
            Some(Tok::Int(n)) => {
                self.no_adjacency()?;
                Ok(QPoly::constant(self.vars, Rat::from_integer(n)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => {
                        self.no_adjacency()?;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn no_adjacency(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                self.err("implicit multiplication is not allowed")
            }
            _ => Ok(()),
        }
    }
}

/// Parse an expression over the given variable list into canonical form.
pub fn poly_parse(text: &str, vars: &Vars) -> Result<QPoly, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError { position: 0, message: "empty input".into() });
    }
    let mut p = Parser { toks, pos: 0, vars, end: text.len() };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(poly)
}

/// Canonical serialization (deglex descending).
pub fn poly_print(p: &QPoly) -> String {
    p.to_string_ordered(&super::MonomialOrder::DegLex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn vars(names: &[&str]) -> Vars {
        Vars::new(names.to_vec())
    }

    #[test]
    fn parse_paper_row() {
        let v = vars(&["u12", "u13"]);
        let p = poly_parse("u12*u13 - u13 + 1", &v).unwrap();
        assert_eq!(p.terms.len(), 3);
        assert_eq!(poly_print(&p), "u12*u13 - u13 + 1");
    }

    #[test]
    fn parse_zero() {
        let v = vars(&["x"]);
        let p = poly_parse("0", &v).unwrap();
        assert!(p.is_zero());
        assert_eq!(poly_print(&p), "0");
    }

    #[test]
    fn parse_expand_square() {
        let v = vars(&["x", "y"]);
        let p = poly_parse("(x+y)^2 - x^2 - 2*x*y", &v).unwrap();
        let y2 = poly_parse("y^2", &v).unwrap();
        assert_eq!(p, y2);
    }

    #[test]
    fn parse_errors() {
        let v = vars(&["x"]);
        assert!(poly_parse("x + w", &v).is_err());
        assert!(poly_parse("2x", &v).is_err());
        assert!(poly_parse("x x", &v).is_err());
        assert!(poly_parse("x /", &v).is_err());
        assert!(poly_parse("x / y", &v).is_err());
        assert!(poly_parse("x / 0", &v).is_err());
        assert!(poly_parse("x ^ y", &v).is_err());
        assert!(poly_parse("", &v).is_err());
        let e = poly_parse("x + $", &v).unwrap_err();
        assert_eq!(e.position, 4);
    }

    #[test]
    fn roundtrip_fractions() {
        let v = vars(&["u", "v"]);
        let p = poly_parse("3/2*u^2*v - u/4 + 7", &v).unwrap();
        let printed = poly_print(&p);
        assert_eq!(printed, "3/2*u^2*v - 1/4*u + 7");
        let back = poly_parse(&printed, &v).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn unary_minus_precedence() {
        let v = vars(&["x"]);
        // -x^2 parses as -(x^2)
        let p = poly_parse("-x^2", &v).unwrap();
        assert_eq!(p.terms[0].1, rat_int(-1));
    }
}
