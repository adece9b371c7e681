//! Runtime-selected coefficient fields.
//!
//! [`Field`] is a cheap handle (an `Arc`) describing one of GF(p), GF(p^k),
//! GF(q)(t) or Q. Raw values are [`Scalar`]s and are only meaningful together
//! with their field; all arithmetic goes through the field. [`FieldElement`]
//! bundles the two for the checked public API.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::finite::FiniteField;
use super::ratfn::Ratfn;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldKind {
    Finite(FiniteField),
    /// GF(q)(t) over the given finite field.
    RationalFunction(FiniteField),
    Rationals,
}

#[derive(Clone)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fin(u32),
    Fun(Ratfn),
    Rat(BigRational),
}

impl From<FiniteField> for Field {
    fn from(f: FiniteField) -> Self {
        Field(Arc::new(FieldKind::Finite(f)))
    }
}

impl Field {
    /// Validated field from characteristic, degree and optional modulus
    /// (constant-first coefficients over GF(p)). `p = 0` gives Q.
    pub fn make(p: u64, k: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if p == 0 {
            if k != 1 {
                return Err(Error::Usage("Q admits no extension degree".into()));
            }
            return Ok(Field::rationals());
        }
        Ok(FiniteField::new(p, k, modulus)?.into())
    }

    pub fn prime(p: u64) -> Result<Field> {
        Ok(FiniteField::prime(p)?.into())
    }

    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn rational_function(base: FiniteField) -> Field {
        Field(Arc::new(FieldKind::RationalFunction(base)))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Finite(f) | FieldKind::RationalFunction(f) => f.characteristic() as u64,
            FieldKind::Rationals => 0,
        }
    }

    /// The finite field itself, if this is one.
    pub fn as_finite(&self) -> Option<&FiniteField> {
        match &*self.0 {
            FieldKind::Finite(f) => Some(f),
            _ => None,
        }
    }

    /// Constant field GF(q) of a rational function field.
    pub fn constant_field(&self) -> Option<&FiniteField> {
        match &*self.0 {
            FieldKind::RationalFunction(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(&*self.0, FieldKind::Finite(_))
    }

    pub fn order(&self) -> Option<u64> {
        self.as_finite().map(|f| f.order() as u64)
    }

    /// Text spec, e.g. `7^1`, `3^2 modulus=[1,0,1]`, `5^1(t)`, `Q`.
    pub fn spec(&self) -> String {
        fn ff(f: &FiniteField) -> String {
            if f.degree() == 1 {
                format!("{}^1", f.characteristic())
            } else {
                let m: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
                format!(
                    "{}^{} modulus=[{}]",
                    f.characteristic(),
                    f.degree(),
                    m.join(",")
                )
            }
        }
        match &*self.0 {
            FieldKind::Finite(f) => ff(f),
            FieldKind::RationalFunction(f) => {
                if f.degree() == 1 {
                    format!("{}^1(t)", f.characteristic())
                } else {
                    let m: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
                    format!(
                        "{}^{}(t) modulus=[{}]",
                        f.characteristic(),
                        f.degree(),
                        m.join(",")
                    )
                }
            }
            FieldKind::Rationals => "Q".to_string(),
        }
    }

    /// Inverse of [`Field::spec`]; also accepts `0` and `q:0` for Q and a
    /// bare prime `p` for GF(p).
    pub fn parse_spec(text: &str) -> Result<Field> {
        let s = text.trim();
        let lead = text.len() - text.trim_start().len();
        let col = |i: usize| lead + i + 1;
        if matches!(s, "Q" | "0" | "q:0") {
            return Ok(Field::rationals());
        }
        let (head, modulus) = match s.find("modulus=") {
            Some(i) => (s[..i].trim_end(), Some((i, &s[i + 8..]))),
            None => (s, None),
        };
        let (head, function) = match head.strip_suffix("(t)") {
            Some(h) => (h, true),
            None => (head, false),
        };
        let (ptxt, ktxt) = head.split_once('^').unwrap_or((head, "1"));
        let p: u64 = ptxt
            .trim()
            .parse()
            .map_err(|_| Error::parse(col(0), "characteristic p, or Q"))?;
        let k: u32 = ktxt
            .trim()
            .parse()
            .map_err(|_| Error::parse(col(ptxt.len() + 1), "extension degree k"))?;
        let m = match modulus {
            None => None,
            Some((i, body)) => {
                let inner = body
                    .trim()
                    .strip_prefix('[')
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| Error::parse(col(i + 8), "[c0,c1,...]"))?;
                let mut v = Vec::new();
                for part in inner.split(',') {
                    v.push(
                        part.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::parse(col(i + 9), "modulus coefficient"))?,
                    );
                }
                Some(v)
            }
        };
        if p == 0 {
            return Err(Error::parse(col(0), "Q without exponent"));
        }
        let base = FiniteField::new(p, k, m.as_deref())?;
        Ok(if function {
            Field::rational_function(base)
        } else {
            base.into()
        })
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            FieldKind::Finite(_) => Scalar::Fin(0),
            FieldKind::RationalFunction(_) => Scalar::Fun(Ratfn::zero()),
            FieldKind::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match &*self.0 {
            FieldKind::Finite(f) => Scalar::Fin(f.from_i64(n)),
            FieldKind::RationalFunction(f) => Scalar::Fun(Ratfn::constant(f.from_i64(n))),
            FieldKind::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Embeds a constant of GF(q) into GF(q) or GF(q)(t).
    pub fn from_constant(&self, c: u32) -> Scalar {
        match &*self.0 {
            FieldKind::Finite(_) => Scalar::Fin(c),
            FieldKind::RationalFunction(_) => Scalar::Fun(Ratfn::constant(c)),
            FieldKind::Rationals => panic!("Q has no finite constant field"),
        }
    }

    /// The transcendental `t` of GF(q)(t).
    pub fn t(&self) -> Option<Scalar> {
        self.constant_field()
            .map(|_| Scalar::Fun(Ratfn::from_poly(vec![0, 1])))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fin(x) => *x == 0,
            Scalar::Fun(r) => r.is_zero(),
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fin(x) => *x == 1,
            Scalar::Fun(r) => r.as_constant() == Some(1),
            Scalar::Rat(r) => r.is_one(),
        }
    }

    /// True when `a` lies in the prime/constant field (for Q: always).
    pub fn is_constant(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fun(r) => r.as_constant().is_some(),
            _ => true,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.add(*x, *y)),
            (FieldKind::RationalFunction(f), Scalar::Fun(x), Scalar::Fun(y)) => {
                Scalar::Fun(x.add(f, y))
            }
            (FieldKind::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to {:?}", self),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (FieldKind::Finite(f), Scalar::Fin(x)) => Scalar::Fin(f.neg(*x)),
            (FieldKind::RationalFunction(f), Scalar::Fun(x)) => Scalar::Fun(x.neg(f)),
            (FieldKind::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to {:?}", self),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.sub(*x, *y)),
            (FieldKind::RationalFunction(f), Scalar::Fun(x), Scalar::Fun(y)) => {
                Scalar::Fun(x.sub(f, y))
            }
            (FieldKind::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar does not belong to {:?}", self),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.mul(*x, *y)),
            (FieldKind::RationalFunction(f), Scalar::Fun(x), Scalar::Fun(y)) => {
                Scalar::Fun(x.mul(f, y))
            }
            (FieldKind::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to {:?}", self),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match (&*self.0, a) {
            (FieldKind::Finite(f), Scalar::Fin(x)) => Ok(Scalar::Fin(f.inv(*x)?)),
            (FieldKind::RationalFunction(f), Scalar::Fun(x)) => Ok(Scalar::Fun(x.inv(f)?)),
            (FieldKind::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::DivideByZero)
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            _ => panic!("scalar does not belong to {:?}", self),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: u64) -> Scalar {
        if let (FieldKind::Finite(f), Scalar::Fin(x)) = (&*self.0, a) {
            return Scalar::Fin(f.pow(*x, e));
        }
        let mut acc = self.one();
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// All elements of a finite field in canonical (index) order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        self.as_finite().map(|f| (0..f.order()).map(Scalar::Fin))
    }

    /// Uniformly random element of a finite field; small random elements of
    /// GF(q)(t) (numerator and denominator of degree <= `max_deg`) and Q.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, max_deg: usize) -> Scalar {
        match &*self.0 {
            FieldKind::Finite(f) => Scalar::Fin(rng.gen_range(0..f.order())),
            FieldKind::RationalFunction(f) => {
                let q = f.order();
                let dn = rng.gen_range(0..=max_deg);
                let dd = rng.gen_range(0..=max_deg);
                let num: Vec<u32> = (0..=dn).map(|_| rng.gen_range(0..q)).collect();
                let mut den: Vec<u32> = (0..=dd).map(|_| rng.gen_range(0..q)).collect();
                if den.iter().all(|&c| c == 0) {
                    den = vec![1];
                }
                Scalar::Fun(Ratfn::new(f, num, den).expect("nonzero denominator"))
            }
            FieldKind::Rationals => {
                let n: i64 = rng.gen_range(-20..=20);
                let d: i64 = rng.gen_range(1..=12);
                Scalar::Rat(BigRational::new(n.into(), d.into()))
            }
        }
    }

    /// Rational numbers only: numerator and denominator.
    pub fn rational_parts(a: &Scalar) -> Option<(&BigInt, &BigInt)> {
        match a {
            Scalar::Rat(r) => Some((r.numer(), r.denom())),
            _ => None,
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        super::text::format_scalar(self, a)
    }

    pub fn parse(&self, s: &str) -> Result<Scalar> {
        super::text::parse_scalar(self, s)
    }
}

/// A scalar together with its field; arithmetic checks that operands agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: Scalar,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: Field, value: Scalar) -> Self {
        FieldElement { field, value }
    }
    pub fn from_i64(field: &Field, n: i64) -> Self {
        FieldElement::new(field.clone(), field.from_i64(n))
    }
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        Ok(FieldElement::new(field.clone(), field.parse(s)?))
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn value(&self) -> &Scalar {
        &self.value
    }
    pub fn into_value(self) -> Scalar {
        self.value
    }
    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    pub fn arith(&self, op: ArithOp, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (&self.value, &other.value);
        let v = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(FieldElement::new(f.clone(), v))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement::new(
            self.field.clone(),
            self.field.inv(&self.value)?,
        ))
    }
}
