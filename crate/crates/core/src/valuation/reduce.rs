//! Reduction of maps at a place and the tameness check.

use super::place::{residue_scaled, valuation, Place};
use crate::algebra::{extension, Field, FieldKind, Poly, Scalar};
use crate::dynamics::{critical_points, Form, ProjPoint, RationalMap};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The reduced pair after clearing common factors. `map` is present when
/// the reduced degree is at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub num: Form,
    pub den: Form,
    pub degree: usize,
    pub degree_drop: bool,
    pub map: Option<RationalMap>,
}

/// Scales `(F, G)` so that all coefficients are integral with one unit,
/// reduces into the residue field and removes the common factor.
pub fn reduce_at_place(phi: &RationalMap, place: &Place) -> Result<Reduction> {
    let field = phi.field();
    place.check(field)?;
    let residue = place.residue_field()?;
    let coeffs: Vec<Scalar> = phi.num().coeffs().into_iter().chain(phi.den().coeffs()).collect();
    let mut m = i64::MAX;
    for c in &coeffs {
        if let Some(v) = valuation(field, c, place)? {
            m = m.min(v);
        }
    }
    let red: Vec<Scalar> = coeffs
        .iter()
        .map(|c| residue_scaled(field, c, place, m, &residue))
        .collect::<Result<_>>()?;
    let d = phi.degree();
    let f = Form::from_coeffs(&residue, red[..=d].to_vec());
    let g = Form::from_coeffs(&residue, red[d + 1..].to_vec());
    Ok(clear_common(f, g, d))
}

fn clear_common(f: Form, g: Form, d: usize) -> Reduction {
    let field = f.field().clone();
    if f.is_zero() || g.is_zero() {
        // constant map to (1:0) or (0:1)
        let one = Form::from_coeffs(&field, vec![field.one()]);
        let zero = Form::from_coeffs(&field, vec![field.zero()]);
        let (num, den) = if f.is_zero() { (zero, one) } else { (one, zero) };
        return Reduction {
            num,
            den,
            degree: 0,
            degree_drop: true,
            map: None,
        };
    }
    let gcd = f.poly().gcd(g.poly()).expect("same field");
    let zmin = f.z_order().unwrap().min(g.z_order().unwrap());
    let dg = gcd.degree().unwrap();
    let nd = d - dg - zmin;
    let num = Form::new(f.poly().exact_div(&gcd).unwrap(), nd);
    let den = Form::new(g.poly().exact_div(&gcd).unwrap(), nd);
    let map = if nd >= 2 {
        Some(RationalMap::from_forms(&field, num.coeffs(), den.coeffs()).expect("coprime after clearing"))
    } else {
        None
    };
    Reduction {
        num,
        den,
        degree: nd,
        degree_drop: nd < d,
        map,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TameResult {
    /// `deg φ < p`.
    TameByDegree,
    /// The given model reduces to a tamely ramified map.
    Tame { model: RationalMap },
    /// A point of the reduction whose ramification index is divisible by
    /// the residue characteristic, or that carries more ramification than
    /// its index accounts for.
    Wild { field: Field, point: ProjPoint, e: usize, reason: String },
}

/// Multiplicity of `c` as a zero of `w_z F - w_x G`, where `(w_x : w_z) = φ(c)`.
pub fn ramification_index(phi: &RationalMap, c: &ProjPoint) -> usize {
    let f = phi.field();
    let (wx, wz) = phi.evaluate(c).coords(f);
    let r = phi.num().scale(&wz).sub(&phi.den().scale(&wx));
    match c {
        ProjPoint::Infinity => r.z_order().expect("nonconstant map"),
        ProjPoint::Affine(x) => {
            let lin = Poly::linear_root(f, x);
            let mut g = r.poly().clone();
            let mut e = 0;
            while let Ok(q) = g.exact_div(&lin) {
                g = q;
                e += 1;
            }
            e
        }
    }
}

/// Checks the given integral model at `place`. Maps already over a finite
/// field of the residue characteristic are treated as their own reduction.
pub fn tame_check(phi: &RationalMap, place: &Place, max_ext: u32, limits: &Limits) -> Result<TameResult> {
    let p = place.residue_characteristic() as usize;
    if phi.degree() < p {
        return Ok(TameResult::TameByDegree);
    }
    let reduced = match phi.field().kind() {
        FieldKind::Finite(f) => {
            if f.characteristic() as usize != p {
                return Err(Error::PlaceMismatch(format!(
                    "{} has characteristic {}",
                    phi.field().spec(),
                    f.characteristic()
                )));
            }
            phi.clone()
        }
        _ => {
            let red = reduce_at_place(phi, place)?;
            match (red.map, red.degree) {
                (Some(m), _) => m,
                (None, 0) => return Err(Error::DegenerateReduction),
                (None, _) => {
                    // a Möbius transformation is unramified
                    return Ok(TameResult::Tame { model: phi.clone() });
                }
            }
        }
    };
    let origin = ProjPoint::Affine(reduced.field().zero());
    let crit = match critical_points(&reduced, max_ext, limits) {
        Err(Error::InseparableMap) => {
            return Ok(TameResult::Wild {
                field: reduced.field().clone(),
                e: ramification_index(&reduced, &origin),
                point: origin,
                reason: "reduction is inseparable".into(),
            })
        }
        other => other?,
    };
    let expected = 2 * reduced.degree() - 2;
    let found: usize = crit.iter().map(|c| c.multiplicity).sum();
    if found < expected {
        return Err(Error::BudgetExceeded(format!(
            "critical points of the reduction need extensions beyond degree {max_ext}"
        )));
    }
    let mut cache: Vec<(u32, RationalMap)> = Vec::new();
    for c in &crit {
        let m = if &c.field == reduced.field() {
            reduced.clone()
        } else {
            let j = c.field.as_finite().unwrap().degree() / reduced.field().as_finite().unwrap().degree();
            match cache.iter().find(|(k, _)| *k == j) {
                Some((_, m)) => m.clone(),
                None => {
                    let m = reduced.base_change(&extension(reduced.field(), j, limits)?);
                    cache.push((j, m.clone()));
                    m
                }
            }
        };
        let e = ramification_index(&m, &c.point);
        if e % p == 0 {
            return Ok(TameResult::Wild {
                field: c.field.clone(),
                point: c.point.clone(),
                e,
                reason: format!("ramification index divisible by {p}"),
            });
        }
        if e - 1 != c.multiplicity {
            return Ok(TameResult::Wild {
                field: c.field.clone(),
                point: c.point.clone(),
                e,
                reason: "ramification exceeds e - 1 at this point".into(),
            });
        }
    }
    Ok(TameResult::Tame { model: reduced })
}
