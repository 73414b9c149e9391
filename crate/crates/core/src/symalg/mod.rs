//! Exact symbolic kernel: rational polynomials with T-weight grading,
//! polynomial matrices, nilpotent exponentials and unipotent group laws.

pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::rootsys::Weight;
pub use poly::{Mono, Poly};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SymError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0} has no T-weight")]
    Unweighted(String),
    #[error("not T-homogeneous: {0} and {1} have different weights")]
    NotHomogeneous(String, String),
    #[error("the zero polynomial has no weight")]
    ZeroHasNoWeight,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix is not in the span of the representation basis")]
    NotInSpan,
    #[error("basis element {0} has no private matrix position")]
    NoPrivatePosition(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Variable table: names and optional T-weights, shared by a family of polynomials.
#[derive(Clone, Debug, Default)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<Option<Weight>>,
}

impl Ring {
    pub fn new() -> Ring {
        Ring::default()
    }

    pub fn add_var(&mut self, name: &str, weight: Option<Weight>) -> usize {
        self.names.push(name.to_string());
        self.weights.push(weight);
        self.names.len() - 1
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, v: usize) -> Option<&Weight> {
        self.weights.get(v).and_then(Option::as_ref)
    }

    pub fn index(&self, name: &str) -> Result<usize, SymError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| SymError::UnknownVariable(name.to_string()))
    }

    pub fn var(&self, name: &str) -> Result<Poly, SymError> {
        Ok(Poly::var(self.index(name)?))
    }

    pub fn render(&self, p: &Poly) -> String {
        poly::render(p, &self.names)
    }

    pub fn render_mono(&self, m: &Mono) -> String {
        poly::render(&Poly::monomial(m.clone(), q(1)), &self.names)
    }

    /// Weight of a monomial: the sum of its variable weights.
    pub fn mono_weight(&self, m: &Mono, rank: usize) -> Result<Weight, SymError> {
        let mut w = Weight::zero(rank);
        for (v, e) in m.factors() {
            let vw = self
                .weight(v)
                .ok_or_else(|| SymError::Unweighted(self.names.get(v).cloned().unwrap_or_default()))?;
            w = &w + &vw.scale(&q(e as i64));
        }
        Ok(w)
    }

    /// Common T-weight of all terms.
    pub fn t_weight(&self, p: &Poly, rank: usize) -> Result<Weight, SymError> {
        let mut found: Option<(Weight, &Mono)> = None;
        for (m, _) in p.terms() {
            let w = self.mono_weight(m, rank)?;
            match &found {
                None => found = Some((w, m)),
                Some((w0, m0)) => {
                    if *w0 != w {
                        return Err(SymError::NotHomogeneous(self.render_mono(m0), self.render_mono(m)));
                    }
                }
            }
        }
        found.map(|(w, _)| w).ok_or(SymError::ZeroHasNoWeight)
    }

    /// Parses `360*x1*x4 - 1/2*x3^2 + (x1 + x2)^2` style expressions.
    pub fn parse(&self, s: &str) -> Result<Poly, SymError> {
        let toks = tokenize(s)?;
        let mut p = Parser { ring: self, toks, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(SymError::Parse(format!("trailing input in {s:?}")));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, SymError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Num(lit.parse().map_err(|_| SymError::Parse(lit.clone()))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(SymError::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly, SymError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek_op() {
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, SymError> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek_op() {
            if c != '*' && c != '/' {
                break;
            }
            self.pos += 1;
            let f = self.factor()?;
            if c == '*' {
                acc = &acc * &f;
            } else {
                if f.degree().unwrap_or(1) != 0 {
                    return Err(SymError::Parse("division by a non-constant".into()));
                }
                acc = acc.scale(&f.constant_term().recip());
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, SymError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => {
                    let e = u32::try_from(n).map_err(|_| SymError::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(SymError::Parse("expected exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, SymError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ring.var(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(SymError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(SymError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        let mut r = Ring::new();
        r.add_var("x", Some(Weight::from_ints(&[-1, 0])));
        r.add_var("y", Some(Weight::from_ints(&[0, -1])));
        r.add_var("t", None);
        r
    }

    #[test]
    fn parse_roundtrip() {
        let r = ring();
        let p = r.parse("1/2*x^2*y - 3*(x - y) + 4/6").unwrap();
        assert_eq!(r.render(&p), "1/2*x^2*y - 3*x + 3*y + 2/3");
        assert_eq!(r.parse(&r.render(&p)).unwrap(), p);
        assert_eq!(r.parse("z"), Err(SymError::UnknownVariable("z".into())));
        assert!(r.parse("x +").is_err());
    }

    #[test]
    fn weights() {
        let r = ring();
        let p = r.parse("x*y").unwrap();
        assert_eq!(r.t_weight(&p, 2).unwrap(), Weight::from_ints(&[-1, -1]));
        assert!(matches!(r.t_weight(&r.parse("x + y").unwrap(), 2), Err(SymError::NotHomogeneous(_, _))));
        assert_eq!(r.t_weight(&r.parse("t").unwrap(), 2), Err(SymError::Unweighted("t".into())));
        assert_eq!(r.t_weight(&Poly::zero(), 2), Err(SymError::ZeroHasNoWeight));
    }
}
