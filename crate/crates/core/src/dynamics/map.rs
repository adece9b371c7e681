//! Binary forms, points of P^1, Möbius transforms and rational maps.

use std::fmt;

use crate::algebra::{Embedding, Field, Poly, Scalar};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A homogeneous form of fixed total degree in (X, Z), stored as the
/// dehomogenized polynomial: coefficient `i` multiplies `X^i Z^(d-i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    poly: Poly,
    degree: usize,
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form{}{:?}", self.degree, self.poly)
    }
}

impl Form {
    pub fn new(poly: Poly, degree: usize) -> Form {
        assert!(
            poly.degree().map_or(true, |d| d <= degree),
            "form degree below polynomial degree"
        );
        Form { poly, degree }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Scalar>) -> Form {
        let degree = coeffs.len() - 1;
        Form::new(Poly::new(field, coeffs), degree)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn field(&self) -> &Field {
        self.poly.field()
    }
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficients padded to length `degree + 1`.
    pub fn coeffs(&self) -> Vec<Scalar> {
        (0..=self.degree).map(|i| self.poly.coeff(i)).collect()
    }

    /// Multiplicity of the point at infinity as a root (`None` if zero).
    pub fn z_order(&self) -> Option<usize> {
        self.poly.degree().map(|d| self.degree - d)
    }

    /// `u -> F(1, u)`.
    pub fn infinity_chart(&self) -> Poly {
        let mut c = self.coeffs();
        c.reverse();
        Poly::new(self.field(), c)
    }

    pub fn mul(&self, o: &Form) -> Form {
        Form::new(self.poly.mul(&o.poly), self.degree + o.degree)
    }

    pub fn add(&self, o: &Form) -> Form {
        assert_eq!(self.degree, o.degree);
        Form::new(self.poly.add(&o.poly), self.degree)
    }

    pub fn sub(&self, o: &Form) -> Form {
        assert_eq!(self.degree, o.degree);
        Form::new(self.poly.sub(&o.poly), self.degree)
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        Form::new(self.poly.scale(c), self.degree)
    }

    /// Multiplies by `X`.
    pub fn times_x(&self) -> Form {
        Form::new(self.poly.shift(1), self.degree + 1)
    }

    /// Multiplies by `Z`.
    pub fn times_z(&self) -> Form {
        Form::new(self.poly.clone(), self.degree + 1)
    }

    pub fn exact_div(&self, o: &Form) -> Result<Form> {
        if o.degree > self.degree {
            return Err(Error::InexactDivision("form degree too small".into()));
        }
        let q = self.poly.exact_div(&o.poly)?;
        let degree = self.degree - o.degree;
        if q.degree().is_some_and(|d| d > degree) {
            return Err(Error::InexactDivision("Z-adic order too small".into()));
        }
        Ok(Form::new(q, degree))
    }

    pub fn eval(&self, pt: &ProjPoint) -> Scalar {
        match pt {
            ProjPoint::Affine(x) => self.poly.eval(x),
            ProjPoint::Infinity => self.poly.coeff(self.degree),
        }
    }

    /// `F(U, V)` for forms `U`, `V` of a common degree.
    pub fn substitute(&self, u: &Form, v: &Form) -> Form {
        assert_eq!(u.degree, v.degree);
        let f = self.field();
        let d = self.degree;
        let mut upow = vec![Poly::one(f)];
        let mut vpow = vec![Poly::one(f)];
        for i in 1..=d {
            upow.push(upow[i - 1].mul(&u.poly));
            vpow.push(vpow[i - 1].mul(&v.poly));
        }
        let mut acc = Poly::zero(f);
        for (i, c) in self.coeffs().iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            acc = acc.add(&upow[i].mul(&vpow[d - i]).scale(c));
        }
        Form::new(acc, d * u.degree)
    }

    pub fn map_coeffs(&self, to: &Field, m: impl FnMut(&Scalar) -> Scalar) -> Form {
        Form::new(self.poly.map_coeffs(to, m), self.degree)
    }
}

/// A point of P^1 in canonical form: `(x : 1)` or `(1 : 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Affine(Scalar),
    Infinity,
}

impl ProjPoint {
    /// Canonicalizes `(x : z)`; panics if both vanish.
    pub fn from_pair(field: &Field, x: &Scalar, z: &Scalar) -> ProjPoint {
        if field.is_zero(z) {
            assert!(!field.is_zero(x), "(0 : 0) is not a point");
            ProjPoint::Infinity
        } else {
            ProjPoint::Affine(field.div(x, z).expect("nonzero"))
        }
    }

    pub fn affine(field: &Field, x: i64) -> ProjPoint {
        ProjPoint::Affine(field.from_i64(x))
    }

    /// Homogeneous coordinates.
    pub fn coords(&self, field: &Field) -> (Scalar, Scalar) {
        match self {
            ProjPoint::Affine(x) => (x.clone(), field.one()),
            ProjPoint::Infinity => (field.one(), field.zero()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn format(&self, field: &Field) -> String {
        match self {
            ProjPoint::Affine(x) => format!("({}:1)", field.format(x)),
            ProjPoint::Infinity => "(1:0)".into(),
        }
    }

    pub fn map_field(&self, m: impl FnOnce(&Scalar) -> Scalar) -> ProjPoint {
        match self {
            ProjPoint::Affine(x) => ProjPoint::Affine(m(x)),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }

    /// All points of P^1 over a finite field: affine points in index order,
    /// then infinity.
    pub fn all(field: &Field) -> Option<Vec<ProjPoint>> {
        let mut v: Vec<ProjPoint> = field.elements()?.map(ProjPoint::Affine).collect();
        v.push(ProjPoint::Infinity);
        Some(v)
    }
}

/// `z -> (a z + b) / (c z + d)`, canonically scaled.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusTransform {
    field: Field,
    m: [Scalar; 4],
}

impl fmt::Debug for MobiusTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

fn scale_first_nonzero(field: &Field, v: &mut [Scalar]) {
    if let Some(first) = v.iter().find(|c| !field.is_zero(c)).cloned() {
        let inv = field.inv(&first).expect("nonzero");
        for c in v.iter_mut() {
            *c = field.mul(c, &inv);
        }
    }
}

impl MobiusTransform {
    pub fn new(field: &Field, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        let det = field.sub(&field.mul(&a, &d), &field.mul(&b, &c));
        if field.is_zero(&det) {
            return Err(Error::DegenerateMap("Möbius determinant vanishes".into()));
        }
        let mut m = [a, b, c, d];
        scale_first_nonzero(field, &mut m);
        Ok(MobiusTransform {
            field: field.clone(),
            m,
        })
    }

    pub fn from_i64(field: &Field, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(
            field,
            field.from_i64(a),
            field.from_i64(b),
            field.from_i64(c),
            field.from_i64(d),
        )
    }

    pub fn identity(field: &Field) -> Self {
        Self::from_i64(field, 1, 0, 0, 1).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn entries(&self) -> &[Scalar; 4] {
        &self.m
    }

    pub fn inverse(&self) -> Self {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        Self::new(f, d.clone(), f.neg(b), f.neg(c), a.clone()).unwrap()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        let [e, g, h, k] = &other.m;
        let mm = |x: &Scalar, y: &Scalar, z: &Scalar, w: &Scalar| f.add(&f.mul(x, y), &f.mul(z, w));
        Self::new(
            f,
            mm(a, e, b, h),
            mm(a, g, b, k),
            mm(c, e, d, h),
            mm(c, g, d, k),
        )
        .unwrap()
    }

    pub fn apply(&self, pt: &ProjPoint) -> ProjPoint {
        let f = &self.field;
        let (x, z) = pt.coords(f);
        let [a, b, c, d] = &self.m;
        let nx = f.add(&f.mul(a, &x), &f.mul(b, &z));
        let nz = f.add(&f.mul(c, &x), &f.mul(d, &z));
        ProjPoint::from_pair(f, &nx, &nz)
    }

    /// The pair of linear forms `(aX + bZ, cX + dZ)`.
    pub fn forms(&self) -> (Form, Form) {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        (
            Form::new(Poly::new(f, vec![b.clone(), a.clone()]), 1),
            Form::new(Poly::new(f, vec![d.clone(), c.clone()]), 1),
        )
    }

    /// The transform sending `(0, ∞, 1)` to `(p0, p1, p2)`; `None` if the
    /// targets are not distinct.
    fn from_standard(field: &Field, p: [&ProjPoint; 3]) -> Option<Self> {
        let f = field;
        let (x0, z0) = p[0].coords(f);
        let (x1, z1) = p[1].coords(f);
        let (x2, z2) = p[2].coords(f);
        let det = f.sub(&f.mul(&x1, &z0), &f.mul(&z1, &x0));
        if f.is_zero(&det) {
            return None;
        }
        let lam = f.div(&f.sub(&f.mul(&x2, &z0), &f.mul(&z2, &x0)), &det).ok()?;
        let mu = f.div(&f.sub(&f.mul(&x1, &z2), &f.mul(&z1, &x2)), &det).ok()?;
        Self::new(
            f,
            f.mul(&lam, &x1),
            f.mul(&mu, &x0),
            f.mul(&lam, &z1),
            f.mul(&mu, &z0),
        )
        .ok()
    }

    /// The unique transform with `from[i] -> to[i]`.
    pub fn from_triples(field: &Field, from: [&ProjPoint; 3], to: [&ProjPoint; 3]) -> Option<Self> {
        let a = Self::from_standard(field, from)?;
        let b = Self::from_standard(field, to)?;
        Some(b.compose(&a.inverse()))
    }

    pub fn format(&self) -> String {
        let f = &self.field;
        let s: Vec<String> = self.m.iter().map(|c| f.format(c)).collect();
        format!("[[{},{}],[{},{}]]", s[0], s[1], s[2], s[3])
    }

    pub fn base_change(&self, emb: &Embedding) -> Self {
        let m = self.m.clone().map(|c| emb.apply(&c));
        Self::new(emb.target(), m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone()).unwrap()
    }
}

/// A degree-d endomorphism of P^1, `(X : Z) -> (F(X, Z) : G(X, Z))`, with
/// `Res(F, G) != 0` and the first nonzero coefficient of `F` then `G` equal
/// to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMap {
    field: Field,
    degree: usize,
    num: Form,
    den: Form,
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

impl RationalMap {
    /// From homogeneous coefficient lists of equal length `d + 1`.
    pub fn from_forms(field: &Field, num: Vec<Scalar>, den: Vec<Scalar>) -> Result<Self> {
        if num.len() != den.len() || num.is_empty() {
            return Err(Error::Usage("forms must have equal degree".into()));
        }
        let d = num.len() - 1;
        Self::validated(
            field,
            Form::from_coeffs(field, num),
            Form::from_coeffs(field, den),
            d,
        )
    }

    /// Homogenizes the affine map `num(z) / den(z)` to degree
    /// `max(deg num, deg den)`.
    pub fn from_affine(num: &Poly, den: &Poly) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::DegenerateMap("zero denominator".into()));
        }
        let d = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        Self::validated(
            num.field(),
            Form::new(num.clone(), d),
            Form::new(den.clone(), d),
            d,
        )
    }

    pub fn from_affine_i64(field: &Field, num: &[i64], den: &[i64]) -> Result<Self> {
        Self::from_affine(&Poly::from_i64s(field, num), &Poly::from_i64s(field, den))
    }

    fn validated(field: &Field, num: Form, den: Form, d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::DegreeTooLow(d));
        }
        if num.is_zero() || den.is_zero() {
            return Err(Error::DegenerateMap("a coordinate vanishes identically".into()));
        }
        if num.poly().degree() != Some(d) && den.poly().degree() != Some(d) {
            return Err(Error::DegenerateMap("common factor Z".into()));
        }
        let g = num.poly().gcd(den.poly())?;
        if g.degree() != Some(0) {
            return Err(Error::DegenerateMap(format!(
                "common factor {}",
                g.pretty("z")
            )));
        }
        Ok(Self::scaled(field, num, den, d))
    }

    /// Applies canonical scaling without validation.
    fn scaled(field: &Field, num: Form, den: Form, d: usize) -> Self {
        let mut all = num.coeffs();
        all.extend(den.coeffs());
        scale_first_nonzero(field, &mut all);
        let den_c = all.split_off(d + 1);
        RationalMap {
            field: field.clone(),
            degree: d,
            num: Form::from_coeffs(field, all),
            den: Form::from_coeffs(field, den_c),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn num(&self) -> &Form {
        &self.num
    }
    pub fn den(&self) -> &Form {
        &self.den
    }

    /// Text spec `field: ...; num=[...]; den=[...]` with affine coefficients.
    pub fn spec(&self) -> String {
        format!(
            "field: {}; num={}; den={}",
            self.field.spec(),
            self.num.poly().to_list(),
            self.den.poly().to_list()
        )
    }

    pub fn evaluate(&self, pt: &ProjPoint) -> ProjPoint {
        let x = self.num.eval(pt);
        let z = self.den.eval(pt);
        ProjPoint::from_pair(&self.field, &x, &z)
    }

    /// Homogeneous composition `self ∘ inner` without validation of the
    /// result (composition of non-degenerate maps is non-degenerate).
    pub fn compose(&self, inner: &RationalMap) -> RationalMap {
        let f = self.num.substitute(&inner.num, &inner.den);
        let g = self.den.substitute(&inner.num, &inner.den);
        let d = self.degree * inner.degree;
        Self::scaled(&self.field, f, g, d)
    }

    /// `φ^n`, degree `d^n`.
    pub fn iterate(&self, n: usize, limits: &Limits) -> Result<RationalMap> {
        if n == 0 {
            return Err(Error::Usage("iteration count must be at least 1".into()));
        }
        check_degree(self.degree, n, limits)?;
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc);
            check_coefficients(&acc, limits)?;
        }
        Ok(acc)
    }

    /// `A ∘ φ ∘ A^{-1}`.
    pub fn conjugate(&self, a: &MobiusTransform) -> RationalMap {
        let (ia, ib) = a.inverse().forms();
        let f1 = self.num.substitute(&ia, &ib);
        let g1 = self.den.substitute(&ia, &ib);
        let [p, q, r, s] = a.entries();
        let f2 = f1.scale(p).add(&g1.scale(q));
        let g2 = f1.scale(r).add(&g1.scale(s));
        Self::scaled(&self.field, f2, g2, self.degree)
    }

    pub fn map_coeffs(&self, to: &Field, mut m: impl FnMut(&Scalar) -> Scalar) -> Result<RationalMap> {
        let num = self.num.map_coeffs(to, &mut m);
        let den = self.den.map_coeffs(to, &mut m);
        Self::validated(to, num, den, self.degree)
    }

    /// The same map over an extension field.
    pub fn base_change(&self, emb: &Embedding) -> RationalMap {
        let num = self.num.map_coeffs(emb.target(), |c| emb.apply(c));
        let den = self.den.map_coeffs(emb.target(), |c| emb.apply(c));
        Self::scaled(emb.target(), num, den, self.degree)
    }

    /// Derivative of φ at `z` in the affine chart at `z` (coordinate `z`
    /// or `1/z` at infinity) to the chart at `φ(z)`.
    pub fn local_derivative(&self, z: &ProjPoint) -> Scalar {
        let f = &self.field;
        let w = self.evaluate(z);
        let (a, b, s) = match z {
            ProjPoint::Affine(x) => (self.num.poly().clone(), self.den.poly().clone(), x.clone()),
            ProjPoint::Infinity => (self.num.infinity_chart(), self.den.infinity_chart(), f.zero()),
        };
        let (top, bottom) = match w {
            ProjPoint::Affine(_) => (a, b),
            ProjPoint::Infinity => (b, a),
        };
        let t = top.eval(&s);
        let bt = bottom.eval(&s);
        let dt = top.derivative().eval(&s);
        let db = bottom.derivative().eval(&s);
        let numer = f.sub(&f.mul(&dt, &bt), &f.mul(&t, &db));
        f.div(&numer, &f.mul(&bt, &bt)).expect("chart denominator is nonzero")
    }

    /// `(N, D)` with `φ'(z) = N(z) / D(z)` on the affine chart.
    pub fn derivative_parts(&self) -> (Poly, Poly) {
        let f = self.num.poly();
        let g = self.den.poly();
        (
            f.derivative().mul(g).sub(&f.mul(&g.derivative())),
            g.mul(g),
        )
    }
}

fn check_degree(d: usize, n: usize, limits: &Limits) -> Result<()> {
    let mut acc: usize = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(d);
        if acc > limits.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "degree {d}^{n} exceeds {}",
                limits.max_degree
            )));
        }
    }
    Ok(())
}

pub(crate) fn check_coefficients(map: &RationalMap, limits: &Limits) -> Result<()> {
    for c in map.num.poly().coeffs().iter().chain(map.den.poly().coeffs()) {
        check_scalar(c, limits)?;
    }
    Ok(())
}

pub(crate) fn check_scalar(c: &Scalar, limits: &Limits) -> Result<()> {
    if let Scalar::Fun(r) = c {
        let deg = r.num().len().max(r.den().len()).saturating_sub(1);
        if deg > limits.max_coeff_degree {
            return Err(Error::BudgetExceeded(format!(
                "coefficient degree {deg} in t exceeds {}",
                limits.max_coeff_degree
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteField;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn map_make_examples() {
        let f = gf(7);
        let sq = RationalMap::from_affine_i64(&f, &[0, 0, 1], &[1]).unwrap();
        assert_eq!(sq.degree(), 2);
        assert_eq!(sq.num().coeffs(), vec![f.zero(), f.zero(), f.one()]);
        assert_eq!(sq.den().coeffs(), vec![f.one(), f.zero(), f.zero()]);
        // (XZ, Z^2)
        let xz = RationalMap::from_forms(
            &f,
            vec![f.zero(), f.one(), f.zero()],
            vec![f.one(), f.zero(), f.zero()],
        );
        assert!(matches!(xz, Err(Error::DegenerateMap(_))));
        assert_eq!(
            RationalMap::from_affine_i64(&f, &[0, 1], &[1]).unwrap_err(),
            Error::DegreeTooLow(1)
        );
    }

    #[test]
    fn counterexample_shape_over_gf_p2() {
        for p in [3u64, 5] {
            let f = Field::make(p, 2, None).unwrap();
            let a = f.parse("g").unwrap();
            let mut num = vec![f.zero(); p as usize + 1];
            num[1] = a.clone();
            num[p as usize] = f.one();
            let m = RationalMap::from_affine(&Poly::new(&f, num), &Poly::one(&f)).unwrap();
            assert_eq!(m.degree(), p as usize);
            // canonical scaling: the first nonzero coefficient (a at X Z^{p-1}) becomes 1
            let inv = f.inv(&a).unwrap();
            assert_eq!(m.num().poly().coeff(1), f.one());
            assert_eq!(m.num().poly().coeff(p as usize), inv);
            assert_eq!(m.den().poly().coeff(0), inv);
            let zero = ProjPoint::affine(&f, 0);
            assert_eq!(m.evaluate(&zero), zero);
        }
    }

    #[test]
    fn evaluate_examples() {
        let f = gf(7);
        let sq = RationalMap::from_affine_i64(&f, &[0, 0, 1], &[1]).unwrap();
        assert_eq!(sq.evaluate(&ProjPoint::affine(&f, 3)), ProjPoint::affine(&f, 2));
        assert_eq!(sq.evaluate(&ProjPoint::Infinity), ProjPoint::Infinity);
    }

    #[test]
    fn iterate_examples() {
        let f = gf(7);
        let sq = RationalMap::from_affine_i64(&f, &[0, 0, 1], &[1]).unwrap();
        let l = Limits::default();
        assert_eq!(
            sq.iterate(2, &l).unwrap(),
            RationalMap::from_affine_i64(&f, &[0, 0, 0, 0, 1], &[1]).unwrap()
        );
        assert_eq!(sq.iterate(1, &l).unwrap(), sq);
        let f11 = gf(11);
        let m = RationalMap::from_affine_i64(&f11, &[-1, 0, 1], &[0, 0, 1]).unwrap();
        let m2 = m.iterate(2, &l).unwrap();
        assert_eq!(m2.degree(), 4);
        for pt in ProjPoint::all(&f11).unwrap() {
            assert_eq!(m2.evaluate(&pt), m.evaluate(&m.evaluate(&pt)));
        }
        let big = Limits {
            max_degree: 10,
            ..Limits::default()
        };
        assert!(matches!(sq.iterate(4, &big), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn conjugate_by_translation() {
        let f = gf(7);
        let sq = RationalMap::from_affine_i64(&f, &[0, 0, 1], &[1]).unwrap();
        let a = MobiusTransform::from_i64(&f, 1, 1, 0, 1).unwrap();
        let expected = RationalMap::from_affine_i64(&f, &[2, -2, 1], &[1]).unwrap();
        assert_eq!(sq.conjugate(&a), expected);
        for pt in ProjPoint::all(&f).unwrap() {
            // pointwise oracle: A(φ(A^{-1} z))
            let lhs = expected.evaluate(&pt);
            let rhs = a.apply(&sq.evaluate(&a.inverse().apply(&pt)));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(sq.conjugate(&MobiusTransform::identity(&f)), sq);
    }

    #[test]
    fn mobius_from_triples() {
        let f = gf(13);
        let pts: Vec<ProjPoint> = ProjPoint::all(&f).unwrap();
        let a = MobiusTransform::from_triples(
            &f,
            [&pts[0], &pts[13], &pts[1]],
            [&pts[5], &pts[2], &pts[13]],
        )
        .unwrap();
        assert_eq!(a.apply(&pts[0]), pts[5]);
        assert_eq!(a.apply(&pts[13]), pts[2]);
        assert_eq!(a.apply(&pts[1]), pts[13]);
    }

    #[test]
    fn local_derivative_at_infinity() {
        let f = gf(7);
        let sq = RationalMap::from_affine_i64(&f, &[0, 0, 1], &[1]).unwrap();
        assert!(f.is_zero(&sq.local_derivative(&ProjPoint::Infinity)));
        assert_eq!(sq.local_derivative(&ProjPoint::affine(&f, 1)), f.from_i64(2));
        // function field coefficients go through the same path
        let ft = Field::rational_function(FiniteField::prime(5).unwrap());
        let m = RationalMap::from_affine(
            &Poly::new(&ft, vec![ft.t().unwrap(), ft.zero(), ft.one()]),
            &Poly::one(&ft),
        )
        .unwrap();
        assert!(ft.is_zero(&m.local_derivative(&ProjPoint::Infinity)));
    }
}
