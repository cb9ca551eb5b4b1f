//! Parser for the exact text syntax shared by scalars and polynomials:
//! integer and rational literals, named symbols, `^` powers (negative allowed
//! where inverses exist), `+ - * /` and parentheses.

use super::{ArithError, Rat, TScalar};
use num::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Expr {
    Int(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => { toks.push((i, Tok::Plus)); i += 1 }
            b'-' => { toks.push((i, Tok::Minus)); i += 1 }
            b'*' => { toks.push((i, Tok::Star)); i += 1 }
            b'/' => { toks.push((i, Tok::Slash)); i += 1 }
            b'^' => { toks.push((i, Tok::Caret)); i += 1 }
            b'(' => { toks.push((i, Tok::LParen)); i += 1 }
            b')' => { toks.push((i, Tok::RParen)); i += 1 }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: BigInt = text[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(lit)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Sym(text[start..i].to_string())));
            }
            _ => return err(i, format!("unexpected character {:?}", b as char)),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let mut sign = 1i64;
            while let Some(Tok::Minus) = self.peek() {
                self.bump();
                sign = -sign;
            }
            let at = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: i64 = match n.try_into() {
                        Ok(v) => v,
                        Err(_) => return err(at, "exponent out of range"),
                    };
                    Ok(Expr::Pow(Box::new(base), sign * e))
                }
                _ => err(at, "expected integer exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Sym(s)) => Ok(Expr::Sym(s)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err(at, "expected ')'"),
                }
            }
            Some(t) => err(at, format!("unexpected token {:?}", t)),
            None => err(at, "unexpected end of input"),
        }
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, len: text.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.here(), "trailing input");
    }
    Ok(e)
}

fn eval_tscalar(e: &Expr) -> Result<TScalar, ParseError> {
    match e {
        Expr::Int(n) => Ok(TScalar::from_rat(Rat::from_integer(n.clone()))),
        Expr::Sym(s) if s == "t" => Ok(TScalar::t()),
        Expr::Sym(s) => err(0, format!("unknown symbol '{}' in scalar context", s)),
        Expr::Neg(a) => Ok(-&eval_tscalar(a)?),
        Expr::Add(a, b) => Ok(&eval_tscalar(a)? + &eval_tscalar(b)?),
        Expr::Sub(a, b) => Ok(&eval_tscalar(a)? - &eval_tscalar(b)?),
        Expr::Mul(a, b) => Ok(&eval_tscalar(a)? * &eval_tscalar(b)?),
        Expr::Div(a, b) => {
            let d = eval_tscalar(b)?;
            if d.is_zero() {
                return err(0, "division by zero");
            }
            Ok(&eval_tscalar(a)? / &d)
        }
        Expr::Pow(a, k) => eval_tscalar(a)?
            .pow(*k)
            .map_err(|e: ArithError| ParseError { pos: 0, msg: e.to_string() }),
    }
}

/// Parse the scalar text syntax into an exact rational function of t.
pub fn parse_tscalar(text: &str) -> Result<TScalar, ParseError> {
    eval_tscalar(&parse_expr(text)?)
}

/// Parse a plain rational literal or expression without t.
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let v = parse_tscalar(text)?;
    match v.as_tpoly() {
        Some(p) if p.degree().unwrap_or(0) == 0 => Ok(p.coeff(0)),
        _ => err(0, "expected a rational constant"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn parses_the_documented_forms() {
        let a = parse_tscalar("(2 + 3*t)/(1 - t)").unwrap();
        assert_eq!(a.reduce_mod_t().unwrap(), rat_int(2));
        assert_eq!(parse_tscalar("t^-1").unwrap(), TScalar::t_pow(-1));
        assert_eq!(parse_tscalar("-2/7").unwrap(), TScalar::from_rat(rat(-2, 7)));
        assert_eq!(parse_tscalar(" 1 - t ^ 2 ").unwrap(), parse_tscalar("(1-t)*(1+t)").unwrap());
    }

    #[test]
    fn display_round_trips() {
        for text in ["(2 + 3*t)/(1 - t)", "t^-1", "-7/2", "t^2", "0", "1 + t + t^2"] {
            let v = parse_tscalar(text).unwrap();
            let again = parse_tscalar(&v.to_string()).unwrap();
            assert_eq!(v, again, "round trip failed for {}", text);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_tscalar("2 +").is_err());
        assert!(parse_tscalar("q").is_err());
        assert!(parse_tscalar("t^x").is_err());
        assert!(parse_tscalar("1/0").is_err());
        assert!(parse_rat("t").is_err());
    }
}
