//! Text encoding of field elements.
//!
//! Prime field `3`; extension `2*g^2+g+1` (or a constant-first digit vector
//! `[1,1,2]`); function field `t^2+1` or `(t^2+1)/(t)`; rationals `-3/4`.
//! Parsing accepts arbitrary `+ - * / ^ ( )` expressions in `g` and `t`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{Field, FieldKind, Scalar};
use super::finite::FiniteField;
use crate::error::{Error, Result};

fn format_poly(terms: &[(String, usize)], var: &str) -> String {
    // terms: (coefficient text, exponent), highest first, coefficient "1" elided
    if terms.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(c, i)| match (c.as_str(), *i) {
            (c, 0) => c.to_string(),
            ("1", 1) => var.to_string(),
            ("1", i) => format!("{var}^{i}"),
            (c, 1) => format!("{c}*{var}"),
            (c, i) => format!("{c}*{var}^{i}"),
        })
        .collect();
    parts.join("+")
}

pub fn format_finite(f: &FiniteField, a: u32) -> String {
    if f.is_prime_field() {
        return a.to_string();
    }
    let digits = f.digits(a);
    let terms: Vec<(String, usize)> = digits
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| (c.to_string(), i))
        .collect();
    format_poly(&terms, "g")
}

fn format_tpoly(f: &FiniteField, coeffs: &[u32]) -> String {
    let terms: Vec<(String, usize)> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let s = format_finite(f, c);
            let s = if s.contains('+') && i > 0 {
                format!("({s})")
            } else {
                s
            };
            (s, i)
        })
        .collect();
    format_poly(&terms, "t")
}

pub fn format_scalar(field: &Field, a: &Scalar) -> String {
    match (field.kind(), a) {
        (FieldKind::Finite(f), Scalar::Fin(x)) => format_finite(f, *x),
        (FieldKind::RationalFunction(f), Scalar::Fun(r)) => {
            let num = format_tpoly(f, r.num());
            if r.den() == [1] {
                num
            } else {
                format!("({})/({})", num, format_tpoly(f, r.den()))
            }
        }
        (FieldKind::Rationals, Scalar::Rat(r)) => {
            if r.denom() == &BigInt::from(1) {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        _ => panic!("scalar does not belong to {:?}", field),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
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
            out.push((Tok::Num(chars[start..i].iter().collect()), start + 1));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start + 1));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i + 1));
            i += 1;
        } else if c == '\u{2212}' {
            // typographic minus
            out.push((Tok::Sym('-'), i + 1));
            i += 1;
        } else {
            return Err(Error::parse(i + 1, "number, variable or operator"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a Field,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    /// Column offset added to error positions.
    offset: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }
    fn col(&self) -> usize {
        self.offset
            + self
                .toks
                .get(self.pos)
                .map(|(_, c)| *c)
                .unwrap_or(self.end_col)
    }
    fn err(&self, what: &str) -> Error {
        Error::parse(self.col(), what)
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' {
                self.field.add(&acc, &rhs)
            } else {
                self.field.sub(&acc, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(Tok::Sym(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let col = self.col();
            let rhs = self.unary()?;
            acc = if c == '*' {
                self.field.mul(&acc, &rhs)
            } else {
                self.field
                    .div(&acc, &rhs)
                    .map_err(|_| Error::parse(col, "nonzero divisor"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        if let Some(Tok::Sym('-')) = self.peek() {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(self.field.neg(&v));
        }
        if let Some(Tok::Sym('+')) = self.peek() {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Sym('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let col = self.col();
            let e: u64 = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    n.parse().map_err(|_| Error::parse(col, "small exponent"))?
                }
                _ => return Err(self.err("integer exponent")),
            };
            let v = self.field.pow(&base, e);
            return if neg {
                self.field
                    .inv(&v)
                    .map_err(|_| Error::parse(col, "invertible base"))
            } else {
                Ok(v)
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.number(&n))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                self.ident(&id).ok_or_else(|| Error::parse(col, "variable g or t"))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::Sym(')')) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(self.err("')'")),
                }
            }
            _ => Err(self.err("number, variable or '('")),
        }
    }

    fn number(&self, n: &str) -> Scalar {
        match self.field.kind() {
            FieldKind::Rationals => {
                let v: BigInt = n.parse().expect("digits");
                Scalar::Rat(BigRational::from_integer(v))
            }
            FieldKind::Finite(f) | FieldKind::RationalFunction(f) => {
                let p = f.characteristic() as u64;
                let r = n
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                self.field.from_constant(r as u32)
            }
        }
    }

    fn ident(&self, id: &str) -> Option<Scalar> {
        match (id, self.field.kind()) {
            ("t", FieldKind::RationalFunction(_)) => self.field.t(),
            ("g", FieldKind::Finite(f)) | ("g", FieldKind::RationalFunction(f)) => {
                f.generator().map(|g| self.field.from_constant(g))
            }
            _ => None,
        }
    }
}

pub fn parse_scalar(field: &Field, s: &str) -> Result<Scalar> {
    parse_scalar_at(field, s, 0)
}

/// As [`parse_scalar`], with error columns shifted by `offset`.
pub fn parse_scalar_at(field: &Field, s: &str, offset: usize) -> Result<Scalar> {
    let trimmed = s.trim();
    if let (Some(inner), Some(f)) = (
        trimmed.strip_prefix('[').and_then(|r| r.strip_suffix(']')),
        field.as_finite(),
    ) {
        let mut digits = Vec::new();
        for part in inner.split(',') {
            let d: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::parse(offset + 1, "digit vector"))?;
            digits.push(d);
        }
        if digits.len() > f.degree() as usize {
            return Err(Error::parse(offset + 1, "at most k digits"));
        }
        return Ok(Scalar::Fin(f.from_digits(&digits)));
    }
    let toks = tokenize(s).map_err(|e| shift(e, offset))?;
    if toks.is_empty() {
        return Err(Error::parse(offset + 1, "an element"));
    }
    let mut p = Parser {
        field,
        toks,
        pos: 0,
        end_col: s.chars().count() + 1,
        offset,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("end of expression"));
    }
    Ok(v)
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse {
            line,
            col,
            expected,
        } => Error::Parse {
            line,
            col: col + offset,
            expected,
        },
        other => other,
    }
}

/// Splits `a, (b, c), d` at top-level commas, returning each piece with its
/// starting byte offset.
pub fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let f9 = Field::make(3, 2, None).unwrap();
        let g = f9.parse("g").unwrap();
        assert_eq!(f9.format(&f9.mul(&g, &f9.from_i64(2))), "2*g");
        assert_eq!(f9.format(&f9.parse("g^2").unwrap()), "2"); // g^2 = -1
        assert_eq!(f9.parse("[2,1]").unwrap(), f9.parse("g+2").unwrap());
        let ft = Field::rational_function(FiniteField::prime(5).unwrap());
        let x = ft.parse("(t^2+1)/t").unwrap();
        assert_eq!(ft.format(&x), "(t^2+1)/(t)");
        assert_eq!(ft.format(&ft.parse("2*t-1").unwrap()), "2*t+4");
        let q = Field::rationals();
        assert_eq!(q.format(&q.parse("-6/8").unwrap()), "-3/4");
    }

    #[test]
    fn parse_errors_have_positions() {
        let f = Field::prime(7).unwrap();
        match f.parse("3 + * 2") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("{other:?}"),
        }
        assert!(f.parse("t").is_err());
        assert!(f.parse("1/0").is_err());
    }

    #[test]
    fn split_commas() {
        let parts: Vec<&str> = split_top_level("a,(b,c), d")
            .into_iter()
            .map(|(_, s)| s)
            .collect();
        assert_eq!(parts, vec!["a", "(b,c)", " d"]);
    }
}
