//! Extension towers GF(q) -> GF(q^j) and root enumeration by exhaustion.

use std::collections::HashMap;

use super::ffpoly;
use super::field::{Field, Scalar};
use super::finite::FiniteField;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An embedding GF(q) -> GF(q^j). GF(q^j) is built over GF(p) with its
/// default modulus; the generator of GF(q) goes to the first root (in index
/// order) of its modulus inside GF(q^j).
#[derive(Clone, Debug)]
pub struct Embedding {
    from: Field,
    to: Field,
    degree: u32,
    image: Vec<u32>,
    preimage: HashMap<u32, u32>,
}

impl Embedding {
    pub fn source(&self) -> &Field {
        &self.from
    }
    pub fn target(&self) -> &Field {
        &self.to
    }
    /// Relative degree `j`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn apply(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fin(x) => Scalar::Fin(self.image[*x as usize]),
            _ => panic!("embedding applies to finite field elements"),
        }
    }

    /// Inverse image, if `a` lies in the embedded subfield.
    pub fn preimage(&self, a: &Scalar) -> Option<Scalar> {
        match a {
            Scalar::Fin(x) => self.preimage.get(x).map(|&v| Scalar::Fin(v)),
            _ => None,
        }
    }

    pub fn apply_poly(&self, f: &Poly) -> Poly {
        f.map_coeffs(&self.to, |c| self.apply(c))
    }

    /// Pulls a polynomial with coefficients in the image back to GF(q).
    pub fn pull_poly(&self, f: &Poly) -> Option<Poly> {
        let coeffs: Option<Vec<Scalar>> = f.coeffs().iter().map(|c| self.preimage(c)).collect();
        Some(Poly::new(&self.from, coeffs?))
    }

    /// Composes `self: A -> B` with `next: B -> C`.
    pub fn then(&self, next: &Embedding) -> Embedding {
        assert_eq!(self.to, next.from);
        let image: Vec<u32> = self.image.iter().map(|&x| next.image[x as usize]).collect();
        let preimage = image
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        Embedding {
            from: self.from.clone(),
            to: next.to.clone(),
            degree: self.degree * next.degree,
            image,
            preimage,
        }
    }
}

/// GF(q) -> GF(q^j). Fails with `FieldTooLarge` beyond the enumeration budget.
pub fn extension(base: &Field, j: u32, limits: &Limits) -> Result<Embedding> {
    let bf = base
        .as_finite()
        .ok_or_else(|| Error::Unsupported("extensions of infinite fields".into()))?;
    let q = bf.order() as u128;
    let size = q.pow(j);
    if size > limits.enumeration as u128 {
        return Err(Error::FieldTooLarge {
            size,
            budget: limits.enumeration,
        });
    }
    if j == 1 {
        let image: Vec<u32> = (0..bf.order()).collect();
        let preimage = image.iter().map(|&x| (x, x)).collect();
        return Ok(Embedding {
            from: base.clone(),
            to: base.clone(),
            degree: 1,
            image,
            preimage,
        });
    }
    let p = bf.characteristic() as u64;
    let big = FiniteField::new(p, bf.degree() * j, None)?;
    let root = if bf.degree() == 1 {
        0
    } else {
        // coefficients of the base modulus lie in GF(p), whose indices agree
        let m = bf.modulus();
        (0..big.order())
            .find(|&r| ffpoly::eval(&big, m, r) == 0)
            .expect("modulus splits in the extension")
    };
    let image: Vec<u32> = (0..bf.order())
        .map(|e| {
            if bf.degree() == 1 {
                return e;
            }
            let digits = bf.digits(e);
            let mut acc = 0u32;
            let mut pw = 1u32;
            for d in digits {
                acc = big.add(acc, big.mul(d, pw));
                pw = big.mul(pw, root);
            }
            acc
        })
        .collect();
    let preimage = image
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    Ok(Embedding {
        from: base.clone(),
        to: big.into(),
        degree: j,
        image,
        preimage,
    })
}

/// A root found in GF(q^j), reported at its minimal field of definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub field: Field,
    pub value: Scalar,
    /// Degree of the minimal field of definition over GF(q).
    pub degree: u32,
    pub multiplicity: usize,
}

/// Roots of `f` over GF(q^j) for `j <= max_ext`, by exhaustive evaluation.
/// Each Galois conjugate is listed separately, in index order within GF(q^j).
pub fn roots_enum(f: &Poly, max_ext: u32, limits: &Limits) -> Result<Vec<Root>> {
    let field = f.field();
    let bf = field
        .as_finite()
        .ok_or_else(|| Error::Unsupported("root enumeration needs a finite field".into()))?;
    if f.is_zero() {
        return Err(Error::Usage("roots of the zero polynomial".into()));
    }
    let size = (bf.order() as u128).pow(max_ext);
    if size > limits.enumeration as u128 {
        return Err(Error::FieldTooLarge {
            size,
            budget: limits.enumeration,
        });
    }
    let q = bf.order();
    let mut out = Vec::new();
    for j in 1..=max_ext {
        let emb = extension(field, j, limits)?;
        let big = emb.target().as_finite().unwrap().clone();
        let fj = emb.apply_poly(f);
        let raw: Vec<u32> = fj
            .coeffs()
            .iter()
            .map(|c| match c {
                Scalar::Fin(x) => *x,
                _ => unreachable!(),
            })
            .collect();
        for x in 0..big.order() {
            if ffpoly::eval(&big, &raw, x) != 0 || big.min_degree_over(x, q) != j {
                continue;
            }
            let lin = vec![big.neg(x), 1];
            let mut g = raw.clone();
            let mut mult = 0;
            loop {
                let (quo, r) = ffpoly::divrem(&big, &g, &lin);
                if !r.is_empty() {
                    break;
                }
                mult += 1;
                g = quo;
            }
            out.push(Root {
                field: emb.target().clone(),
                value: Scalar::Fin(x),
                degree: j,
                multiplicity: mult,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_over_prime_field() {
        let f = Field::prime(7).unwrap();
        let r = roots_enum(&Poly::from_i64s(&f, &[-1, 0, 1]), 1, &Limits::default()).unwrap();
        let vals: Vec<(Scalar, usize)> = r.iter().map(|r| (r.value.clone(), r.multiplicity)).collect();
        assert_eq!(vals, vec![(Scalar::Fin(1), 1), (Scalar::Fin(6), 1)]);
        let f5 = Field::prime(5).unwrap();
        let sq = Poly::from_i64s(&f5, &[-2, 1]).pow(2);
        let r = roots_enum(&sq, 1, &Limits::default()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].value.clone(), r[0].multiplicity), (Scalar::Fin(2), 2));
    }

    #[test]
    fn x2_plus_1_over_gf3() {
        let f = Field::prime(3).unwrap();
        let p = Poly::from_i64s(&f, &[1, 0, 1]);
        assert!(roots_enum(&p, 1, &Limits::default()).unwrap().is_empty());
        let r = roots_enum(&p, 2, &Limits::default()).unwrap();
        assert_eq!(r.len(), 2);
        for root in &r {
            assert_eq!(root.degree, 2);
            assert_eq!(root.multiplicity, 1);
            let fld = &root.field;
            let sq = fld.mul(&root.value, &root.value);
            assert!(fld.is_one(&fld.neg(&sq)));
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let base = Field::make(3, 2, None).unwrap();
        let emb = extension(&base, 2, &Limits::default()).unwrap();
        let to = emb.target().clone();
        for a in base.elements().unwrap() {
            for b in base.elements().unwrap() {
                assert_eq!(
                    emb.apply(&base.mul(&a, &b)),
                    to.mul(&emb.apply(&a), &emb.apply(&b))
                );
                assert_eq!(
                    emb.apply(&base.add(&a, &b)),
                    to.add(&emb.apply(&a), &emb.apply(&b))
                );
            }
            assert_eq!(emb.preimage(&emb.apply(&a)), Some(a.clone()));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = Field::prime(101).unwrap();
        let p = Poly::from_i64s(&f, &[1, 0, 1]);
        let limits = Limits {
            enumeration: 10_000,
            ..Limits::default()
        };
        assert!(matches!(
            roots_enum(&p, 3, &limits),
            Err(Error::FieldTooLarge { .. })
        ));
    }
}
