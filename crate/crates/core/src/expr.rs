//! Text expressions: scalars, generators, `+ - * / ^`, parentheses.
//!
//! `^` binds tighter than unary minus, which binds tighter than `*` and `/`,
//! which bind tighter than `+` and `-`. Juxtaposition is not multiplication.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::NCPoly;
use crate::scalar::{Coefficient, GaussRational};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    /// A name, with the byte offset where it starts.
    Name(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division, with the offset of the `/`.
    Div(Box<Expr>, Box<Expr>, usize),
    /// Power, with the offset of the `^`.
    Pow(Box<Expr>, i64, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol '{symbol}' at position {pos} in universe {universe}")]
    UnknownSymbol { symbol: String, pos: usize, universe: String },
    #[error("invalid operation at position {pos}: {msg}")]
    Invalid { pos: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(s[start..i].parse().unwrap()), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Name(s[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = s[i..].chars().next().unwrap();
            return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), ParseError> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{op}'")))
        }
    }

    fn error(&self, msg: String) -> ParseError {
        ParseError::Syntax { pos: self.offset(), msg }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let n: i64 = n.try_into().map_err(|_| ParseError::Invalid { pos: at, msg: "exponent too large".into() })?;
                Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }, at))
            }
            _ => Err(self.error("expected an integer exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                // `d(a2)` names the generator da2.
                if name == "d" && self.eat('(') {
                    let inner = match self.peek().cloned() {
                        Some(Tok::Name(inner)) => inner,
                        _ => return Err(self.error("expected a generator inside d(...)".into())),
                    };
                    self.pos += 1;
                    self.expect(')')?;
                    return Ok(Expr::Name(format!("d{inner}"), at));
                }
                Ok(Expr::Name(name, at))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks, pos: 0, end: input.len() };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.error("unexpected trailing input".into()));
    }
    Ok(e)
}

impl Expr {
    /// Evaluates to a polynomial. `resolve` maps a generator-level name to
    /// its value; `i` and `q` are handled here.
    pub fn eval<C: Coefficient>(
        &self,
        universe: &str,
        resolve: &dyn Fn(&str) -> Option<NCPoly<C>>,
    ) -> Result<NCPoly<C>, ParseError> {
        match self {
            Expr::Int(n) => Ok(NCPoly::constant(C::from(GaussRational::real(BigRational::from_integer(n.clone()))))),
            Expr::Name(name, pos) => {
                if let Some(p) = resolve(name) {
                    return Ok(p);
                }
                match name.as_str() {
                    "i" => Ok(NCPoly::constant(C::from(GaussRational::i()))),
                    "q" => C::q_pow(1).map(NCPoly::constant).ok_or_else(|| ParseError::Invalid {
                        pos: *pos,
                        msg: "q is not available in this coefficient ring".into(),
                    }),
                    _ => Err(ParseError::UnknownSymbol { symbol: name.clone(), pos: *pos, universe: universe.into() }),
                }
            }
            Expr::Neg(e) => Ok(-e.eval(universe, resolve)?),
            Expr::Add(a, b) => Ok(a.eval(universe, resolve)? + b.eval(universe, resolve)?),
            Expr::Sub(a, b) => Ok(a.eval(universe, resolve)? - b.eval(universe, resolve)?),
            Expr::Mul(a, b) => Ok(a.eval(universe, resolve)?.nc_mul(&b.eval(universe, resolve)?)),
            Expr::Div(a, b, pos) => {
                let num = a.eval(universe, resolve)?;
                let den = b.eval(universe, resolve)?;
                let inv = invert_constant(&den, *pos)?;
                Ok(num.scale(&inv))
            }
            Expr::Pow(base, n, pos) => {
                let b = base.eval(universe, resolve)?;
                if *n >= 0 {
                    let n = u32::try_from(*n).map_err(|_| ParseError::Invalid { pos: *pos, msg: "exponent too large".into() })?;
                    Ok(b.pow(n))
                } else {
                    let inv = invert_constant(&b, *pos)?;
                    Ok(NCPoly::constant(inv).pow(n.unsigned_abs() as u32))
                }
            }
        }
    }
}

fn invert_constant<C: Coefficient>(p: &NCPoly<C>, pos: usize) -> Result<C, ParseError> {
    let c = p.as_constant().ok_or_else(|| ParseError::Invalid { pos, msg: "can only divide by a scalar".into() })?;
    c.try_inv().map_err(|e| ParseError::Invalid { pos, msg: e.to_string() })
}
