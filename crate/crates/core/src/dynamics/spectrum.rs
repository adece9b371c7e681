//! Multipliers of periodic points and the multiplier polynomials `M_n`.

use super::dynatomic::{dynatomic_degree, dynatomic_from_iterates, iterates};
use super::map::{ProjPoint, RationalMap};
use crate::algebra::linalg::charpoly;
use crate::algebra::{Field, Poly, Scalar};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `M_n(T) = prod (T - λ_z)` over the `K_n` points of formal period `n`,
/// with `σ_i` its signed coefficients: `M_n = T^K - σ_1 T^{K-1} + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierData {
    pub period: usize,
    pub count: usize,
    pub poly: Poly,
    pub sigma: Vec<Scalar>,
}

impl MultiplierData {
    fn from_poly(period: usize, poly: Poly) -> Self {
        let f = poly.field().clone();
        let k = poly.degree().unwrap_or(0);
        let sigma = (1..=k)
            .map(|i| {
                let c = poly.coeff(k - i);
                if i % 2 == 1 {
                    f.neg(&c)
                } else {
                    c
                }
            })
            .collect();
        MultiplierData {
            period,
            count: k,
            poly,
            sigma,
        }
    }

    pub fn field(&self) -> &Field {
        self.poly.field()
    }
}

/// `(φ^n)'` at a point fixed by `φ^n`, by the chain rule along the orbit.
/// At infinity the coordinate `1/z` is used, so the value is
/// conjugation-invariant.
pub fn multiplier_at(phi: &RationalMap, z: &ProjPoint, n: usize) -> Result<Scalar> {
    if n == 0 {
        return Err(Error::Usage("period must be at least 1".into()));
    }
    let f = phi.field();
    let mut pt = z.clone();
    let mut acc = f.one();
    for _ in 0..n {
        acc = f.mul(&acc, &phi.local_derivative(&pt));
        pt = phi.evaluate(&pt);
    }
    if &pt != z {
        return Err(Error::NotPeriodic(n));
    }
    Ok(acc)
}

/// `M_n(T)` without root-finding. The finite part is the characteristic
/// polynomial of multiplication by `(φ^n)'` on `K[z] / (Φ_n(z, 1))`; the
/// point at infinity, with its multiplicity in `Φ_n`, is handled directly.
pub fn multiplier_spectrum(phi: &RationalMap, n: usize, limits: &Limits) -> Result<MultiplierData> {
    if n == 0 {
        return Err(Error::Usage("period must be at least 1".into()));
    }
    let its = iterates(phi, n, limits)?;
    let phin = dynatomic_from_iterates(&its, n, limits)?;
    let field = phi.field();
    let psi = phin.poly().clone();
    let at_inf = phin.z_order().expect("dynatomic form is nonzero");
    let m = psi.degree().unwrap_or(0);

    let mut poly = Poly::one(field);
    if m > 0 {
        let last = &its[n - 1];
        let f = last.num().poly().rem(&psi)?;
        let g = last.den().poly().rem(&psi)?;
        let df = last.num().poly().derivative().rem(&psi)?;
        let dg = last.den().poly().derivative().rem(&psi)?;
        let num = df.mul(&g).sub(&f.mul(&dg)).rem(&psi)?;
        let den = g.mul(&g).rem(&psi)?;
        let lam = num.mul(&den.inv_mod(&psi)?).rem(&psi)?;
        let x = Poly::monomial(field, field.one(), 1);
        let mut col = lam;
        let mut mat = vec![vec![field.zero(); m]; m];
        for j in 0..m {
            for (i, row) in mat.iter_mut().enumerate() {
                row[j] = col.coeff(i);
            }
            col = col.mul(&x).rem(&psi)?;
        }
        poly = charpoly(field, &mat);
    }
    if at_inf > 0 {
        let lam = multiplier_at(phi, &ProjPoint::Infinity, n)?;
        let lin = Poly::new(field, vec![field.neg(&lam), field.one()]);
        poly = poly.mul(&lin.pow(at_inf as u64));
    }
    debug_assert_eq!(poly.degree().unwrap_or(0) as i64, dynatomic_degree(phi.degree(), n));
    Ok(MultiplierData::from_poly(n, poly))
}
