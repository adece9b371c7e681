//! Elements of GF(q)(t), stored reduced with a monic denominator.

use super::ffpoly as fp;
use super::finite::FiniteField;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ratfn {
    num: Vec<u32>,
    den: Vec<u32>,
}

impl Ratfn {
    pub fn zero() -> Self {
        Ratfn {
            num: Vec::new(),
            den: vec![1],
        }
    }

    pub fn constant(c: u32) -> Self {
        Ratfn {
            num: fp::trim(vec![c]),
            den: vec![1],
        }
    }

    pub fn from_poly(num: Vec<u32>) -> Self {
        Ratfn {
            num: fp::trim(num),
            den: vec![1],
        }
    }

    pub fn new(f: &FiniteField, num: Vec<u32>, den: Vec<u32>) -> Result<Self> {
        let num = fp::trim(num);
        let den = fp::trim(den);
        if den.is_empty() {
            return Err(Error::DivideByZero);
        }
        Ok(Self::normalize(f, num, den))
    }

    fn normalize(f: &FiniteField, num: Vec<u32>, den: Vec<u32>) -> Self {
        if num.is_empty() {
            return Self::zero();
        }
        let (num, den) = if den.len() > 1 {
            let g = fp::gcd(f, &num, &den);
            if fp::is_one(&g) {
                (num, den)
            } else {
                (fp::divrem(f, &num, &g).0, fp::divrem(f, &den, &g).0)
            }
        } else {
            (num, den)
        };
        let lc = *den.last().unwrap();
        if lc == 1 {
            Ratfn { num, den }
        } else {
            let inv = f.inv(lc).unwrap();
            Ratfn {
                num: fp::scale(f, &num, inv),
                den: fp::scale(f, &den, inv),
            }
        }
    }

    pub fn num(&self) -> &[u32] {
        &self.num
    }
    pub fn den(&self) -> &[u32] {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// `Some(c)` when the element is a constant of GF(q).
    pub fn as_constant(&self) -> Option<u32> {
        match (self.num.len(), self.den.len()) {
            (0, 1) => Some(0),
            (1, 1) => Some(self.num[0]),
            _ => None,
        }
    }

    pub fn add(&self, f: &FiniteField, o: &Ratfn) -> Ratfn {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = fp::add(f, &self.num, &o.num);
            return Self::normalize(f, n, self.den.clone());
        }
        let n = fp::add(
            f,
            &fp::mul(f, &self.num, &o.den),
            &fp::mul(f, &o.num, &self.den),
        );
        Self::normalize(f, n, fp::mul(f, &self.den, &o.den))
    }

    pub fn neg(&self, f: &FiniteField) -> Ratfn {
        Ratfn {
            num: fp::neg(f, &self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, f: &FiniteField, o: &Ratfn) -> Ratfn {
        self.add(f, &o.neg(f))
    }

    pub fn mul(&self, f: &FiniteField, o: &Ratfn) -> Ratfn {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.len() == 1 && o.den.len() == 1 {
            return Ratfn {
                num: fp::mul(f, &self.num, &o.num),
                den: vec![1],
            };
        }
        // Cross-cancel so the product is already reduced.
        let g1 = fp::gcd(f, &self.num, &o.den);
        let g2 = fp::gcd(f, &o.num, &self.den);
        let (a, d2) = if fp::is_one(&g1) {
            (self.num.clone(), o.den.clone())
        } else {
            (fp::divrem(f, &self.num, &g1).0, fp::divrem(f, &o.den, &g1).0)
        };
        let (b, d1) = if fp::is_one(&g2) {
            (o.num.clone(), self.den.clone())
        } else {
            (fp::divrem(f, &o.num, &g2).0, fp::divrem(f, &self.den, &g2).0)
        };
        let num = fp::mul(f, &a, &b);
        let den = fp::mul(f, &d1, &d2);
        let lc = *den.last().unwrap();
        if lc == 1 {
            Ratfn { num, den }
        } else {
            let inv = f.inv(lc).unwrap();
            Ratfn {
                num: fp::scale(f, &num, inv),
                den: fp::scale(f, &den, inv),
            }
        }
    }

    pub fn inv(&self, f: &FiniteField) -> Result<Ratfn> {
        if self.is_zero() {
            return Err(Error::DivideByZero);
        }
        let lc = *self.num.last().unwrap();
        let inv = f.inv(lc)?;
        Ok(Ratfn {
            num: fp::scale(f, &self.den, inv),
            den: fp::scale(f, &self.num, inv),
        })
    }

    /// Value at `t = c`; `None` when `c` is a pole.
    pub fn eval(&self, f: &FiniteField, c: u32) -> Option<u32> {
        let d = fp::eval(f, &self.den, c);
        if d == 0 {
            return None;
        }
        Some(f.mul(fp::eval(f, &self.num, c), f.inv(d).ok()?))
    }
}
