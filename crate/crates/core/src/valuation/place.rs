//! Places of Q and GF(q)(t), normalized valuations and residue maps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{ffpoly, Field, FieldKind, FiniteField, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    /// The p-adic valuation on Q.
    Prime(u64),
    /// The place of GF(q)(t) at a monic irreducible `pi(t)` (constant first).
    Finite { base: FiniteField, pi: Vec<u32> },
    /// `v(f/g) = deg g - deg f` on GF(q)(t).
    Infinite { base: FiniteField },
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if !crate::algebra::finite::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Place::Prime(p))
    }

    /// The place at `pi`, made monic; fails if `pi` is reducible.
    pub fn finite(base: FiniteField, pi: Vec<u32>) -> Result<Place> {
        let pi = ffpoly::monic(&base, &ffpoly::trim(pi));
        if pi.len() < 2 || !ffpoly::is_irreducible(&base, &pi) {
            return Err(Error::ReducibleModulus(format!("{pi:?}")));
        }
        Ok(Place::Finite { base, pi })
    }

    pub fn infinite(base: FiniteField) -> Place {
        Place::Infinite { base }
    }

    pub fn residue_characteristic(&self) -> u64 {
        match self {
            Place::Prime(p) => *p,
            Place::Finite { base, .. } | Place::Infinite { base } => base.characteristic() as u64,
        }
    }

    /// Degree of the residue field over the constant field.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite { pi, .. } => pi.len() - 1,
            _ => 1,
        }
    }

    /// Whether this place is a place of `field`.
    pub fn check(&self, field: &Field) -> Result<()> {
        let ok = match (self, field.kind()) {
            (Place::Prime(_), FieldKind::Rationals) => true,
            (Place::Finite { base, .. }, FieldKind::RationalFunction(b))
            | (Place::Infinite { base }, FieldKind::RationalFunction(b)) => base == b,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::PlaceMismatch(format!(
                "{} is not a place of {}",
                self.spec(),
                field.spec()
            )))
        }
    }

    /// `prime:7`, `place:t^2+1 over 5^1`, `place:inf over 5^1`.
    pub fn spec(&self) -> String {
        match self {
            Place::Prime(p) => format!("prime:{p}"),
            Place::Finite { base, pi } => {
                let f = Field::rational_function(base.clone());
                let s = Scalar::Fun(crate::algebra::Ratfn::from_poly(pi.clone()));
                format!("place:{} over {}", f.format(&s), Field::from(base.clone()).spec())
            }
            Place::Infinite { base } => format!("place:inf over {}", Field::from(base.clone()).spec()),
        }
    }

    pub fn parse(text: &str) -> Result<Place> {
        let s = text.trim();
        if let Some(rest) = s.strip_prefix("prime:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(7, "prime number"))?;
            return Place::prime(p);
        }
        let Some(rest) = s.strip_prefix("place:") else {
            return Err(Error::parse(1, "'prime:' or 'place:'"));
        };
        let Some(idx) = rest.find(" over ") else {
            return Err(Error::parse(7 + rest.len(), "' over <field>'"));
        };
        let (what, field_text) = (rest[..idx].trim(), &rest[idx + 6..]);
        let base_field = Field::parse_spec(field_text)
            .map_err(|e| shift(e, 7 + idx + 6))?;
        let base = base_field
            .as_finite()
            .cloned()
            .ok_or_else(|| Error::parse(7 + idx + 6, "finite constant field"))?;
        if what == "inf" {
            return Ok(Place::infinite(base));
        }
        let ft = Field::rational_function(base.clone());
        let v = crate::algebra::text::parse_scalar_at(&ft, what, 6)?;
        match v {
            Scalar::Fun(r) if r.den() == [1] => Place::finite(base, r.num().to_vec()),
            _ => Err(Error::parse(7, "polynomial in t")),
        }
    }

    /// A uniformizer as an element of `field`.
    pub fn uniformizer(&self, field: &Field) -> Scalar {
        match self {
            Place::Prime(p) => field.from_i64(*p as i64),
            Place::Finite { pi, .. } => Scalar::Fun(crate::algebra::Ratfn::from_poly(pi.clone())),
            Place::Infinite { base } => {
                Scalar::Fun(crate::algebra::Ratfn::new(base, vec![1], vec![0, 1]).unwrap())
            }
        }
    }

    /// The residue field. Places of degree > 1 need a prime constant field.
    pub fn residue_field(&self) -> Result<Field> {
        match self {
            Place::Prime(p) => Field::prime(*p),
            Place::Infinite { base } => Ok(base.clone().into()),
            Place::Finite { base, pi } => {
                if pi.len() == 2 {
                    Ok(base.clone().into())
                } else if base.is_prime_field() {
                    Ok(FiniteField::new(base.characteristic() as u64, (pi.len() - 1) as u32, Some(pi))?.into())
                } else {
                    Err(Error::Unsupported(
                        "places of degree > 1 over a non-prime constant field".into(),
                    ))
                }
            }
        }
    }
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

fn int_val(n: &BigInt, p: u64) -> (i64, BigInt) {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return (v, n);
        }
        n = q;
        v += 1;
    }
}

fn poly_val(f: &FiniteField, a: &[u32], pi: &[u32]) -> (i64, Vec<u32>) {
    let mut a = a.to_vec();
    let mut v = 0;
    loop {
        let (q, r) = ffpoly::divrem(f, &a, pi);
        if !r.is_empty() {
            return (v, a);
        }
        a = q;
        v += 1;
    }
}

/// Normalized valuation; `None` stands for `v(0) = +infinity`.
pub fn valuation(field: &Field, x: &Scalar, place: &Place) -> Result<Option<i64>> {
    place.check(field)?;
    if field.is_zero(x) {
        return Ok(None);
    }
    Ok(Some(match (place, x) {
        (Place::Prime(p), Scalar::Rat(r)) => int_val(r.numer(), *p).0 - int_val(r.denom(), *p).0,
        (Place::Finite { base, pi }, Scalar::Fun(r)) => poly_val(base, r.num(), pi).0 - poly_val(base, r.den(), pi).0,
        (Place::Infinite { .. }, Scalar::Fun(r)) => r.den().len() as i64 - r.num().len() as i64,
        _ => unreachable!("checked above"),
    }))
}

/// Residue of `x / pi^m`, where `v(x) >= m` (zero if strictly greater).
pub fn residue_scaled(field: &Field, x: &Scalar, place: &Place, m: i64, residue: &Field) -> Result<Scalar> {
    let v = match valuation(field, x, place)? {
        None => return Ok(residue.zero()),
        Some(v) => v,
    };
    if v < m {
        return Err(Error::Usage(format!("valuation {v} below scaling {m}")));
    }
    if v > m {
        return Ok(residue.zero());
    }
    match (place, x) {
        (Place::Prime(p), Scalar::Rat(r)) => {
            let (_, a) = int_val(r.numer(), *p);
            let (_, b) = int_val(r.denom(), *p);
            let pm = BigInt::from(*p);
            let to = |n: &BigInt| -> i64 {
                let m = n.mod_floor(&pm);
                i64::try_from(m).unwrap()
            };
            residue.div(&residue.from_i64(to(&a)), &residue.from_i64(to(&b)))
        }
        (Place::Finite { base, pi }, Scalar::Fun(r)) => {
            let (_, a) = poly_val(base, r.num(), pi);
            let (_, b) = poly_val(base, r.den(), pi);
            let red = |a: &[u32]| -> Scalar {
                let rem = ffpoly::rem(base, a, pi);
                if pi.len() == 2 {
                    Scalar::Fin(ffpoly::eval(base, &rem, base.neg(pi[0])))
                } else {
                    let rf = residue.as_finite().unwrap();
                    Scalar::Fin(rf.from_digits(&rem))
                }
            };
            residue.div(&red(&a), &red(&b))
        }
        (Place::Infinite { base }, Scalar::Fun(r)) => {
            let a = *r.num().last().unwrap();
            let b = *r.den().last().unwrap();
            Ok(Scalar::Fin(base.div(a, b)?))
        }
        _ => unreachable!(),
    }
}

/// Valuation of a rational number, for callers holding plain `BigRational`s.
pub fn rational_valuation(r: &BigRational, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let r = r.abs();
    Some(int_val(r.numer(), p).0 - int_val(r.denom(), p).0)
}
