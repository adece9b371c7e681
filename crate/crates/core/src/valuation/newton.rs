//! Newton polygons and the attracting / indifferent / repelling split of a
//! multiplier spectrum.

use num_rational::Rational64;

use super::place::{valuation, Place};
use crate::algebra::{Field, Poly};
use crate::dynamics::MultiplierData;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: Rational64,
    pub length: usize,
}

/// Lower convex hull of `{(i, v(a_i))}`. A segment of slope `s` and length
/// `l` accounts for exactly `l` roots of valuation `-s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, i64)>,
    pub segments: Vec<Segment>,
    /// Order of vanishing at 0 (roots of valuation +infinity).
    pub ord0: usize,
}

impl NewtonPolygon {
    /// `(valuation, count)` pairs in increasing valuation.
    pub fn root_valuations(&self) -> Vec<(Rational64, usize)> {
        self.segments
            .iter()
            .rev()
            .map(|s| (-s.slope, s.length))
            .collect()
    }
}

pub fn newton_polygon(f: &Poly, place: &Place) -> Result<NewtonPolygon> {
    let field = f.field();
    place.check(field)?;
    let mut pts: Vec<(usize, i64)> = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if let Some(v) = valuation(field, c, place)? {
            pts.push((i, v));
        }
    }
    let ord0 = pts.first().map_or(0, |p| p.0);
    let mut hull: Vec<(usize, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the chord a -> p
            let cross = (b.0 as i64 - a.0 as i64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as i64 - a.0 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let len = w[1].0 - w[0].0;
            Segment {
                slope: Rational64::new(w[1].1 - w[0].1, len as i64),
                length: len,
            }
        })
        .collect();
    Ok(NewtonPolygon {
        vertices: hull,
        segments,
        ord0,
    })
}

/// Checks the sign convention on `x - p` at `p`: its root `p` has
/// valuation 1.
pub fn convention_self_test() -> bool {
    let q = Field::rationals();
    [2i64, 3, 7].iter().all(|&p| {
        let f = Poly::from_i64s(&q, &[-p, 1]);
        newton_polygon(&f, &Place::Prime(p as u64))
            .map(|np| np.root_valuations() == vec![(Rational64::from_integer(1), 1)])
            .unwrap_or(false)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumClassification {
    pub attracting: usize,
    pub indifferent: usize,
    pub repelling: usize,
    /// Multiplier valuations with multiplicity; `None` for `λ = 0`.
    pub by_valuation: Vec<(Option<Rational64>, usize)>,
}

/// Buckets the roots of `M_n` by the sign of their valuation; roots
/// `λ = 0` count as attracting.
pub fn classify_spectrum(m: &MultiplierData, place: &Place) -> Result<SpectrumClassification> {
    let np = newton_polygon(&m.poly, place)?;
    let mut out = SpectrumClassification {
        attracting: np.ord0,
        indifferent: 0,
        repelling: 0,
        by_valuation: Vec::new(),
    };
    if np.ord0 > 0 {
        out.by_valuation.push((None, np.ord0));
    }
    for (v, n) in np.root_valuations() {
        if v > Rational64::from_integer(0) {
            out.attracting += n;
        } else if v == Rational64::from_integer(0) {
            out.indifferent += n;
        } else {
            out.repelling += n;
        }
        out.by_valuation.push((Some(v), n));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteField, Scalar};
    use crate::dynamics::{multiplier_spectrum, RationalMap};
    use crate::Limits;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn polygon_examples() {
        assert!(convention_self_test());
        let q = Field::rationals();
        for p in [2i64, 3, 5] {
            let f = Poly::from_i64s(&q, &[1, 1, p]);
            let np = newton_polygon(&f, &Place::Prime(p as u64)).unwrap();
            assert_eq!(np.root_valuations(), vec![(r(-1), 1), (r(0), 1)]);
        }
        let b = FiniteField::prime(5).unwrap();
        let ft = Field::rational_function(b.clone());
        let f = Poly::new(&ft, vec![ft.one(), ft.one(), ft.t().unwrap()]);
        let np = newton_polygon(&f, &Place::finite(b, vec![0, 1]).unwrap()).unwrap();
        assert_eq!(np.root_valuations(), vec![(r(-1), 1), (r(0), 1)]);
        // fractional slope: x^2 - p has two roots of valuation 1/2
        let np = newton_polygon(&Poly::from_i64s(&q, &[-3, 0, 1]), &Place::Prime(3)).unwrap();
        assert_eq!(np.root_valuations(), vec![(Rational64::new(1, 2), 2)]);
    }

    #[test]
    fn classify_examples() {
        let q = Field::rationals();
        let sq = RationalMap::from_affine_i64(&q, &[0, 0, 1], &[1]).unwrap();
        let m1 = multiplier_spectrum(&sq, 1, &Limits::default()).unwrap();
        let c3 = classify_spectrum(&m1, &Place::Prime(3)).unwrap();
        assert_eq!((c3.attracting, c3.indifferent, c3.repelling), (2, 1, 0));
        let c2 = classify_spectrum(&m1, &Place::Prime(2)).unwrap();
        assert_eq!((c2.attracting, c2.indifferent, c2.repelling), (3, 0, 0));
        // T (T - a)^p over GF(p)(a) at the place where v(a) = -1
        for p in [3u64, 5] {
            let b = FiniteField::prime(p).unwrap();
            let ft = Field::rational_function(b.clone());
            let a = ft.t().unwrap();
            let poly = Poly::monomial(&ft, ft.one(), 1).mul(&Poly::new(&ft, vec![ft.neg(&a), ft.one()]).pow(p));
            let md = MultiplierData {
                period: 1,
                count: p as usize + 1,
                poly,
                sigma: vec![],
            };
            let c = classify_spectrum(&md, &Place::infinite(b)).unwrap();
            assert_eq!((c.attracting, c.indifferent, c.repelling), (1, 0, p as usize));
        }
    }

    /// Polynomials over GF(5)(t) with known roots: linear factors `x - r`
    /// and quadratic factors `x^2 - n s^2` (n a non-square constant), whose
    /// roots `±s sqrt(n)` lie in GF(25)(t) and have valuation `v(s)`.
    #[test]
    fn polygon_matches_known_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let b = FiniteField::prime(5).unwrap();
        let ft = Field::rational_function(b.clone());
        let places = [
            Place::finite(b.clone(), vec![0, 1]).unwrap(),
            Place::finite(b.clone(), vec![2, 0, 1]).unwrap(),
            Place::infinite(b.clone()),
        ];
        let nonsquare = ft.from_i64(2);
        for trial in 0..50 {
            let place = &places[trial % 3];
            let mut f = Poly::one(&ft);
            let mut expected: Vec<Option<i64>> = Vec::new();
            let deg = rng.gen_range(1..=3);
            while f.degree().unwrap() < deg {
                let s: Scalar = ft.random(&mut rng, 2);
                let v = valuation(&ft, &s, place).unwrap();
                if deg - f.degree().unwrap() >= 2 && !ft.is_zero(&s) && rng.gen_bool(0.5) {
                    let c = ft.neg(&ft.mul(&nonsquare, &ft.mul(&s, &s)));
                    f = f.mul(&Poly::new(&ft, vec![c, ft.zero(), ft.one()]));
                    expected.extend([v, v]);
                } else {
                    f = f.mul(&Poly::linear_root(&ft, &s));
                    expected.push(v);
                }
            }
            let np = newton_polygon(&f, place).unwrap();
            let zeros = expected.iter().filter(|v| v.is_none()).count();
            assert_eq!(np.ord0, zeros);
            let mut finite: Vec<i64> = expected.into_iter().flatten().collect();
            finite.sort();
            let mut certified: Vec<Rational64> = Vec::new();
            for (v, n) in np.root_valuations() {
                certified.extend(std::iter::repeat(v).take(n));
            }
            assert_eq!(certified, finite.into_iter().map(r).collect::<Vec<_>>(), "{f:?} at {place:?}");
            let total: usize = np.segments.iter().map(|s| s.length).sum();
            assert_eq!(total + np.ord0, f.degree().unwrap());
        }
    }
}
