//! Univariate polynomials over a runtime [`Field`], constant-first.

use std::fmt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_list())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(field: &Field, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, field.one())
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: Scalar, k: usize) -> Poly {
        let mut v = vec![field.zero(); k];
        v.push(c);
        Poly::new(field, v)
    }

    /// `x - a`.
    pub fn linear_root(field: &Field, a: &Scalar) -> Poly {
        Poly::new(field, vec![field.neg(a), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }
    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn lc(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Order of vanishing at 0 (`None` for the zero polynomial).
    pub fn ord0(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    fn check(&self, o: &Poly) -> Result<()> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(f, v)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => f.sub(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => f.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(f, v)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if self.field.is_zero(c) {
            return Poly::zero(&self.field);
        }
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || o.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !f.is_zero(b) {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Poly::new(f, out)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.field.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(&self.field, v)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(d)?;
        let f = &self.field;
        let Some(dd) = d.degree() else {
            return Err(Error::DivideByZero);
        };
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv = f.inv(&d.lc())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); self.coeffs.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd];
            if f.is_zero(c) {
                continue;
            }
            let c = f.mul(c, &inv);
            for (j, b) in d.coeffs.iter().enumerate() {
                if !f.is_zero(b) {
                    r[i + j] = f.sub(&r[i + j], &f.mul(&c, b));
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(d)?.1)
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "{} by {} leaves {}",
                self.to_list(),
                d.to_list(),
                r.to_list()
            )));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Poly) -> Result<Poly> {
        self.check(o)?;
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(o)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = f.inv(&r0.lc())?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse of `self` modulo `m`.
    pub fn inv_mod(&self, m: &Poly) -> Result<Poly> {
        let (g, s, _) = self.ext_gcd(m)?;
        if g.degree() != Some(0) {
            return Err(Error::DivideByZero);
        }
        s.rem(m)
    }

    /// Resultant via the Euclidean remainder chain:
    /// `Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, r)` with `r = f mod g`.
    pub fn resultant(&self, o: &Poly) -> Result<Scalar> {
        self.check(o)?;
        let f = &self.field;
        if self.is_zero() || o.is_zero() {
            return Ok(f.zero());
        }
        let mut a = self.clone();
        let mut b = o.clone();
        let mut acc = f.one();
        loop {
            let m = a.degree().unwrap();
            let n = b.degree().unwrap();
            if n == 0 {
                return Ok(f.mul(&acc, &f.pow(&b.lc(), m as u64)));
            }
            let r = a.rem(&b)?;
            let Some(k) = r.degree() else {
                return Ok(f.zero());
            };
            if (m * n) % 2 == 1 {
                acc = f.neg(&acc);
            }
            acc = f.mul(&acc, &f.pow(&b.lc(), (m - k) as u64));
            a = b;
            b = r;
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Poly::new(f, v)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(&self.field), |acc, c| {
                acc.mul(inner).add(&Poly::constant(&self.field, c.clone()))
            })
    }

    /// Maps every coefficient into another field.
    pub fn map_coeffs(&self, to: &Field, mut m: impl FnMut(&Scalar) -> Scalar) -> Poly {
        Poly::new(to, self.coeffs.iter().map(&mut m).collect())
    }

    /// Constant-first coefficient list, e.g. `[6,0,1]`.
    pub fn to_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| self.field.format(c)).collect();
        format!("[{}]", parts.join(","))
    }

    /// Human-readable form in `var`, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let mut s = self.field.format(c);
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let compound = s.contains(['+', '-', '/']) && i > 0;
            let s = if compound { format!("({s})") } else { s };
            match (s.as_str(), i) {
                (s, 0) => out.push_str(s),
                ("1", 1) => out.push_str(var),
                ("1", i) => out.push_str(&format!("{var}^{i}")),
                (s, 1) => out.push_str(&format!("{s}*{var}")),
                (s, i) => out.push_str(&format!("{s}*{var}^{i}")),
            }
        }
        out
    }
}
