//! Text formats accepted on the command line.
//!
//! Maps: `field: 7^1; num=[0,0,1]; den=[1]` (affine coefficients, constant
//! first). Lattès curves: `lattes A=t B=1 m=2 over 7^1(t)`. Points: `inf`
//! or an element. Error columns count characters from 1.

use crate::algebra::text::{parse_scalar_at, split_top_level};
use crate::algebra::{Field, Poly, Scalar};
use crate::dynamics::{ProjPoint, RationalMap};
use crate::error::{Error, Result};

fn col_of(s: &str, byte: usize) -> usize {
    s[..byte].chars().count()
}

/// `[c0, c1, ...]` starting at character column `offset + 1`.
pub fn parse_poly_at(field: &Field, text: &str, offset: usize) -> Result<Poly> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(offset + col_of(text, lead) + 1, "[c0,c1,...]"))?;
    let base = offset + col_of(text, lead) + 1;
    let mut coeffs = Vec::new();
    if inner.trim().is_empty() {
        return Ok(Poly::zero(field));
    }
    for (at, piece) in split_top_level(inner) {
        coeffs.push(parse_scalar_at(field, piece, base + col_of(inner, at))?);
    }
    Ok(Poly::new(field, coeffs))
}

pub fn parse_poly(field: &Field, text: &str) -> Result<Poly> {
    parse_poly_at(field, text, 0)
}

/// Parses `field: ...; num=[...]; den=[...]`. Keys may appear in any order
/// after the field and may be surrounded by spaces.
pub fn parse_map_spec(text: &str) -> Result<RationalMap> {
    let mut field: Option<Field> = None;
    let mut num: Option<(usize, &str)> = None;
    let mut den: Option<(usize, &str)> = None;
    let mut at = 0;
    for part in text.split(';') {
        let start = at;
        at += part.len() + 1;
        if part.trim().is_empty() {
            continue;
        }
        let Some(eq) = part.find([':', '=']) else {
            return Err(Error::parse(col_of(text, start) + 1, "key: value"));
        };
        let key = part[..eq].trim();
        let value_at = start + eq + 1;
        let value = &part[eq + 1..];
        match key {
            "field" => {
                let f = Field::parse_spec(value).map_err(|e| shift(e, col_of(text, value_at)))?;
                field = Some(f);
            }
            "num" => num = Some((value_at, value)),
            "den" => den = Some((value_at, value)),
            _ => return Err(Error::parse(col_of(text, start) + 1, "field, num or den")),
        }
    }
    let end = text.chars().count() + 1;
    let field = field.ok_or_else(|| Error::parse(1, "field: <spec>"))?;
    let (na, nt) = num.ok_or_else(|| Error::parse(end, "num=[...]"))?;
    let n = parse_poly_at(&field, nt, col_of(text, na))?;
    let d = match den {
        Some((da, dt)) => parse_poly_at(&field, dt, col_of(text, da))?,
        None => Poly::one(&field),
    };
    RationalMap::from_affine(&n, &d)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse {
            line,
            col,
            expected,
        } => Error::Parse {
            line,
            col: col + by,
            expected,
        },
        other => other,
    }
}

/// The curve coefficients and field of a Lattès spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LattesSpec {
    pub field: Field,
    pub a: Scalar,
    pub b: Scalar,
    pub m: i64,
}

impl LattesSpec {
    pub fn spec(&self) -> String {
        format!(
            "lattes A={} B={} m={} over {}",
            self.field.format(&self.a),
            self.field.format(&self.b),
            self.m,
            self.field.spec()
        )
    }
}

/// `lattes A=<expr> B=<expr> m=<int> over <field>`. Expressions may
/// contain spaces.
pub fn parse_lattes_spec(text: &str) -> Result<LattesSpec> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let rest = body
        .strip_prefix("lattes")
        .ok_or_else(|| Error::parse(lead + 1, "lattes"))?;
    let over = rest
        .find(" over ")
        .ok_or_else(|| Error::parse(text.chars().count() + 1, "over <field>"))?;
    let field_at = lead + 6 + over + 6;
    let field = Field::parse_spec(&rest[over + 6..]).map_err(|e| shift(e, col_of(text, field_at)))?;
    let params = &rest[..over];
    let mut vals: Vec<(&str, usize, String)> = Vec::new();
    let mut pos = lead + 6;
    for word in params.split(' ') {
        let here = pos;
        pos += word.len() + 1;
        if word.is_empty() {
            continue;
        }
        match word.split_once('=') {
            Some((k @ ("A" | "B" | "m"), v)) => vals.push((k, here + 2, v.to_string())),
            _ => match vals.last_mut() {
                Some(last) => {
                    last.2.push(' ');
                    last.2.push_str(word);
                }
                None => return Err(Error::parse(col_of(text, here) + 1, "A=, B= or m=")),
            },
        }
    }
    let get = |k: &str| vals.iter().find(|v| v.0 == k);
    let (_, a_at, a) = get("A").ok_or_else(|| Error::parse(lead + 8, "A=<expr>"))?;
    let (_, b_at, b) = get("B").ok_or_else(|| Error::parse(lead + 8, "B=<expr>"))?;
    let m = match get("m") {
        Some((_, m_at, m)) => m
            .trim()
            .parse()
            .map_err(|_| Error::parse(col_of(text, *m_at) + 1, "integer m"))?,
        None => 2,
    };
    Ok(LattesSpec {
        a: parse_scalar_at(&field, a, col_of(text, *a_at))?,
        b: parse_scalar_at(&field, b, col_of(text, *b_at))?,
        field,
        m,
    })
}

/// `inf`, `∞`, `(1:0)`, or an element of the field.
pub fn parse_point(field: &Field, text: &str) -> Result<ProjPoint> {
    match text.trim() {
        "inf" | "∞" | "(1:0)" => Ok(ProjPoint::Infinity),
        t => {
            let inner = t
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(":1)"))
                .unwrap_or(t);
            Ok(ProjPoint::Affine(field.parse(inner)?))
        }
    }
}

/// Comma-separated elements.
pub fn parse_list(field: &Field, text: &str) -> Result<Vec<Scalar>> {
    split_top_level(text)
        .into_iter()
        .map(|(at, piece)| parse_scalar_at(field, piece, col_of(text, at)))
        .collect()
}

/// Comma-separated integers, accepting the typographic minus.
pub fn parse_ints(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut at = 0;
    for piece in text.split(',') {
        let v = piece.trim().replace('\u{2212}', "-");
        out.push(
            v.parse()
                .map_err(|_| Error::parse(col_of(text, at) + 1, "integer"))?,
        );
        at += piece.len() + 1;
    }
    Ok(out)
}
