//! Dynatomic forms: points of formal period n.

use super::map::{check_coefficients, check_scalar, Form, RationalMap};
use crate::algebra::mobius::{divisors, mobius_mu};
use crate::error::Result;
use crate::limits::Limits;

/// `K_n = sum_{k | n} mu(n/k) (d^k + 1)`, the degree of the n-th dynatomic
/// form of a degree-d map.
pub fn dynatomic_degree(d: usize, n: usize) -> i64 {
    divisors(n as u64)
        .into_iter()
        .map(|k| mobius_mu(n as u64 / k) as i64 * ((d as i64).pow(k as u32) + 1))
        .sum()
}

/// Iterates `φ, φ^2, ..., φ^n` with budget checks.
pub(crate) fn iterates(phi: &RationalMap, n: usize, limits: &Limits) -> Result<Vec<RationalMap>> {
    phi.iterate(n, limits)?; // degree budget only; cheap failure path
    let mut out = vec![phi.clone()];
    for _ in 1..n {
        let next = phi.compose(out.last().unwrap());
        check_coefficients(&next, limits)?;
        out.push(next);
    }
    Ok(out)
}

/// `Z F_k - X G_k` for `φ^k = (F_k : G_k)`: vanishes exactly on fixed points
/// of `φ^k`, with multiplicity.
pub fn fixed_point_form(phik: &RationalMap) -> Form {
    phik.num().times_z().sub(&phik.den().times_x())
}

/// `Φ_n = prod_{k | n} (Z F_k - X G_k)^{mu(n/k)}`, normalized so that the
/// highest nonzero coefficient is 1.
pub fn dynatomic(phi: &RationalMap, n: usize, limits: &Limits) -> Result<Form> {
    let its = iterates(phi, n, limits)?;
    dynatomic_from_iterates(&its, n, limits)
}

pub(crate) fn dynatomic_from_iterates(its: &[RationalMap], n: usize, limits: &Limits) -> Result<Form> {
    let field = its[0].field().clone();
    let one = Form::from_coeffs(&field, vec![field.one()]);
    let mut top = one.clone();
    let mut bottom = one;
    for k in divisors(n as u64) {
        let f = fixed_point_form(&its[k as usize - 1]);
        match mobius_mu(n as u64 / k) {
            1 => top = top.mul(&f),
            -1 => bottom = bottom.mul(&f),
            _ => {}
        }
    }
    let phi_n = top.exact_div(&bottom)?;
    let lc = phi_n.poly().lc();
    let phi_n = phi_n.scale(&field.inv(&lc)?);
    for c in phi_n.poly().coeffs() {
        check_scalar(c, limits)?;
    }
    Ok(phi_n)
}
