//! Elliptic curves in short Weierstrass form and the Lattès map of
//! multiplication by 2 on the x-line.

use super::family::{isospectral_check, Family, Isospectrality};
use crate::algebra::{Field, FieldKind, Poly, Scalar};
use crate::dynamics::RationalMap;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `y^2 = x^3 + A x + B`, characteristic not 2 or 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    field: Field,
    a: Scalar,
    b: Scalar,
}

impl EllipticCurve {
    pub fn new(field: &Field, a: Scalar, b: Scalar) -> Result<Self> {
        if matches!(field.characteristic(), 2 | 3) {
            return Err(Error::Unsupported("short Weierstrass form in characteristic 2 or 3".into()));
        }
        let e = EllipticCurve {
            field: field.clone(),
            a,
            b,
        };
        if field.is_zero(&e.discriminant()) {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn a(&self) -> &Scalar {
        &self.a
    }
    pub fn b(&self) -> &Scalar {
        &self.b
    }

    /// `4 A^3 + 27 B^2`.
    pub fn discriminant(&self) -> Scalar {
        let f = &self.field;
        f.add(
            &f.mul(&f.from_i64(4), &f.pow(&self.a, 3)),
            &f.mul(&f.from_i64(27), &f.pow(&self.b, 2)),
        )
    }

    /// `1728 * 4 A^3 / (4 A^3 + 27 B^2)`.
    pub fn j_invariant(&self) -> Scalar {
        let f = &self.field;
        let a3 = f.mul(&f.from_i64(4), &f.pow(&self.a, 3));
        f.div(&f.mul(&f.from_i64(1728), &a3), &self.discriminant())
            .expect("nonsingular")
    }

    pub fn contains(&self, x: &Scalar, y: &Scalar) -> bool {
        let f = &self.field;
        let rhs = f.add(&f.add(&f.pow(x, 3), &f.mul(&self.a, x)), &self.b);
        f.mul(y, y) == rhs
    }

    /// Affine points over a finite field.
    pub fn points(&self) -> Option<Vec<(Scalar, Scalar)>> {
        let els: Vec<Scalar> = self.field.elements()?.collect();
        let mut out = Vec::new();
        for x in &els {
            for y in &els {
                if self.contains(x, y) {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
        Some(out)
    }

    /// `2P` by the tangent rule; `None` for the point at infinity.
    pub fn double(&self, x: &Scalar, y: &Scalar) -> Option<(Scalar, Scalar)> {
        let f = &self.field;
        if f.is_zero(y) {
            return None;
        }
        let num = f.add(&f.mul(&f.from_i64(3), &f.mul(x, x)), &self.a);
        let lam = f.div(&num, &f.add(y, y)).ok()?;
        let x2 = f.sub(&f.mul(&lam, &lam), &f.add(x, x));
        let y2 = f.sub(&f.mul(&lam, &f.sub(x, &x2)), y);
        Some((x2, y2))
    }
}

/// The map on x-coordinates covered by `P -> mP + T`. Only `m = 2` and
/// `T = O` are available.
pub fn lattes_from_curve(e: &EllipticCurve, m: i64, translation: bool) -> Result<RationalMap> {
    if m != 2 {
        return Err(Error::UnsupportedM(m));
    }
    if translation {
        return Err(Error::Unsupported("Lattès maps with a 2-torsion translation".into()));
    }
    let f = e.field();
    let (a, b) = (e.a(), e.b());
    let c = |n: i64| f.from_i64(n);
    let num = Poly::new(
        f,
        vec![
            f.mul(a, a),
            f.mul(&c(-8), b),
            f.mul(&c(-2), a),
            f.zero(),
            f.one(),
        ],
    );
    let den = Poly::new(f, vec![f.mul(&c(4), b), f.mul(&c(4), a), f.zero(), c(4)]);
    RationalMap::from_affine(&num, &den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LattesProbe {
    pub j_invariant: Scalar,
    pub j_constant: bool,
    pub result: Isospectrality,
    /// All computed `Λ_n` coordinates lie in the constant field.
    pub constant_coordinates: bool,
}

/// Builds the doubling Lattès family of `y^2 = x^3 + A x + B` over
/// GF(q)(t) and checks isospectrality up to `max_n`.
pub fn lattes_isospectral_probe(field: &Field, a: Scalar, b: Scalar, max_n: usize, limits: &Limits) -> Result<LattesProbe> {
    if !matches!(field.kind(), FieldKind::RationalFunction(_)) {
        return Err(Error::Usage("the Lattès probe runs over GF(q)(t)".into()));
    }
    let e = EllipticCurve::new(field, a, b)?;
    let j = e.j_invariant();
    let fam = Family::new(lattes_from_curve(&e, 2, false)?)?;
    let result = isospectral_check(&fam, max_n, limits)?;
    let constant_coordinates = match &result {
        Isospectrality::Isospectral { spectra } => spectra
            .iter()
            .all(|m| m.sigma.iter().all(|s| field.is_constant(s))),
        Isospectrality::Witness { .. } => false,
    };
    Ok(LattesProbe {
        j_constant: field.is_constant(&j),
        j_invariant: j,
        result,
        constant_coordinates,
    })
}
