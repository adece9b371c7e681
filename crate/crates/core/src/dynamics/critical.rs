//! Critical points, forward orbits and post-critical finiteness.

use std::collections::HashMap;

use super::map::{Form, ProjPoint, RationalMap};
use crate::algebra::{extension, roots_enum, Embedding, Field, FieldKind, Poly};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The Wronskian `f'g - fg'` of the affine pair, homogenized to degree
/// `2d - 2`. (The Jacobian form `F_X G_Z - F_Z G_X` equals `d` times this,
/// so it vanishes identically whenever the characteristic divides `d`.)
pub fn wronskian(phi: &RationalMap) -> Result<Form> {
    let (w, _) = phi.derivative_parts();
    if w.is_zero() {
        return Err(Error::InseparableMap);
    }
    Ok(Form::new(w, 2 * phi.degree() - 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPoint {
    /// Field containing `point`: an extension of the base for finite fields,
    /// the base itself for function fields.
    pub field: Field,
    pub point: ProjPoint,
    /// Degree of the field of definition over the base.
    pub degree: u32,
    pub multiplicity: usize,
}

/// Roots of the Wronskian. Over a finite field, all roots in `GF(q^j)`,
/// `j <= max_ext`. Over GF(q)(t), only constant points and infinity.
pub fn critical_points(phi: &RationalMap, max_ext: u32, limits: &Limits) -> Result<Vec<CriticalPoint>> {
    let w = wronskian(phi)?;
    let field = phi.field();
    let mut out = Vec::new();
    match field.kind() {
        FieldKind::Finite(_) => {
            if w.poly().degree().is_some_and(|d| d > 0) {
                for r in roots_enum(w.poly(), max_ext, limits)? {
                    out.push(CriticalPoint {
                        field: r.field,
                        point: ProjPoint::Affine(r.value),
                        degree: r.degree,
                        multiplicity: r.multiplicity,
                    });
                }
            }
        }
        FieldKind::RationalFunction(base) => {
            for c in 0..base.order() {
                let x = field.from_constant(c);
                let lin = Poly::linear_root(field, &x);
                let mut g = w.poly().clone();
                let mut mult = 0;
                while let Ok(q) = g.exact_div(&lin) {
                    g = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push(CriticalPoint {
                        field: field.clone(),
                        point: ProjPoint::Affine(x),
                        degree: 1,
                        multiplicity: mult,
                    });
                }
            }
        }
        FieldKind::Rationals => {
            return Err(Error::Unsupported("critical points over Q".into()));
        }
    }
    let e = w.z_order().unwrap_or(0);
    if e > 0 {
        out.push(CriticalPoint {
            field: field.clone(),
            point: ProjPoint::Infinity,
            degree: 1,
            multiplicity: e,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitResult {
    /// `points[tail + cycle] == points[tail]`, both minimal.
    Found {
        tail: usize,
        cycle: usize,
        points: Vec<ProjPoint>,
    },
    NotFoundWithinBound { steps: usize },
}

/// Applies φ at most `bound` times looking for a repeat.
pub fn orbit(phi: &RationalMap, z: &ProjPoint, bound: usize) -> OrbitResult {
    let mut seen: HashMap<ProjPoint, usize> = HashMap::new();
    let mut points = vec![z.clone()];
    seen.insert(z.clone(), 0);
    for i in 1..=bound {
        let next = phi.evaluate(&points[i - 1]);
        if let Some(&j) = seen.get(&next) {
            return OrbitResult::Found {
                tail: j,
                cycle: i - j,
                points,
            };
        }
        seen.insert(next.clone(), i);
        points.push(next);
    }
    OrbitResult::NotFoundWithinBound { steps: bound }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalOrbit {
    pub critical: CriticalPoint,
    pub tail: usize,
    pub cycle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PcfResult {
    Pcf(Vec<CriticalOrbit>),
    /// Some critical orbit did not close, or (over function fields) some
    /// critical points are not constant and were not followed.
    NotPcfWithinBound {
        closed: Vec<CriticalOrbit>,
        open: Vec<CriticalPoint>,
        unresolved: usize,
    },
    /// The map is inseparable, so critical points are not isolated.
    Wild,
}

pub fn pcf_check(phi: &RationalMap, bound: usize, max_ext: u32, limits: &Limits) -> Result<PcfResult> {
    let crit = match critical_points(phi, max_ext, limits) {
        Ok(c) => c,
        Err(Error::InseparableMap) => return Ok(PcfResult::Wild),
        Err(e) => return Err(e),
    };
    let total: usize = crit.iter().map(|c| c.multiplicity).sum();
    let unresolved = 2 * phi.degree() - 2 - total;
    let mut changed: HashMap<u32, RationalMap> = HashMap::new();
    let mut closed = Vec::new();
    let mut open = Vec::new();
    for c in crit {
        let m = if &c.field == phi.field() {
            phi.clone()
        } else {
            let deg = c.field.as_finite().map(|f| f.degree()).unwrap_or(1)
                / phi.field().as_finite().map(|f| f.degree()).unwrap_or(1);
            if !changed.contains_key(&deg) {
                let emb: Embedding = extension(phi.field(), deg, limits)?;
                changed.insert(deg, phi.base_change(&emb));
            }
            changed[&deg].clone()
        };
        match orbit(&m, &c.point, bound) {
            OrbitResult::Found { tail, cycle, .. } => closed.push(CriticalOrbit {
                critical: c,
                tail,
                cycle,
            }),
            OrbitResult::NotFoundWithinBound { .. } => open.push(c),
        }
    }
    if open.is_empty() && unresolved == 0 {
        Ok(PcfResult::Pcf(closed))
    } else {
        Ok(PcfResult::NotPcfWithinBound {
            closed,
            open,
            unresolved,
        })
    }
}
