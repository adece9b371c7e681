//! Orbits tracked by valuation only. `v(φ(z))` is forced when a single
//! term of the numerator and of the denominator has minimal valuation;
//! otherwise the step is reported as indeterminate.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dynamics::RationalMap;
use crate::error::{Error, Result};
use crate::valuation::{valuation, Place};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    /// The valuation stayed 0: the orbit never leaves the unit sphere.
    NoConvergenceToSinks,
    /// Valuations strictly increased (toward 0) or decreased (toward ∞).
    ConvergesToZero,
    ConvergesToInfinity,
    /// Valuations were forced but followed neither pattern.
    NoVerdict,
    /// Step at which the ultrametric inequality did not force a valuation.
    Indeterminate(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeTrajectory {
    pub seed: i64,
    pub valuations: Vec<BigInt>,
    pub verdict: ProbeVerdict,
}

/// Valuation of `sum c_i z^i` given `v(z) = s`, if forced.
fn forced(coeff_vals: &[Option<i64>], s: &BigInt) -> Option<BigInt> {
    let mut best: Option<BigInt> = None;
    let mut unique = true;
    for (i, v) in coeff_vals.iter().enumerate() {
        let Some(v) = v else { continue };
        let term = BigInt::from(*v) + s * BigInt::from(i);
        match &best {
            Some(b) if &term == b => unique = false,
            Some(b) if &term > b => {}
            _ => {
                best = Some(term);
                unique = true;
            }
        }
    }
    if unique {
        best
    } else {
        None
    }
}

/// Follows `v(z_i)` for `iters` steps from each seed valuation.
pub fn convergence_probe(phi: &RationalMap, place: &Place, seeds: &[i64], iters: usize) -> Result<Vec<ProbeTrajectory>> {
    let field = phi.field();
    place.check(field)?;
    let val = |c: &_| valuation(field, c, place);
    let (nc, dc) = (phi.num().coeffs(), phi.den().coeffs());
    let nv: Vec<Option<i64>> = nc.iter().map(val).collect::<Result<_>>()?;
    let dv: Vec<Option<i64>> = dc.iter().map(val).collect::<Result<_>>()?;
    Ok(seeds
        .iter()
        .map(|&seed| {
            let mut vals = vec![BigInt::from(seed)];
            let mut verdict = None;
            for step in 1..=iters {
                let s = vals.last().unwrap();
                match (forced(&nv, s), forced(&dv, s)) {
                    (Some(a), Some(b)) => vals.push(a - b),
                    _ => {
                        verdict = Some(ProbeVerdict::Indeterminate(step));
                        break;
                    }
                }
            }
            let verdict = verdict.unwrap_or_else(|| classify(&vals));
            ProbeTrajectory {
                seed,
                valuations: vals,
                verdict,
            }
        })
        .collect())
}

fn classify(vals: &[BigInt]) -> ProbeVerdict {
    if vals.iter().all(|v| v.is_zero()) {
        ProbeVerdict::NoConvergenceToSinks
    } else if vals.windows(2).all(|w| w[1] > w[0]) && vals.last().unwrap().is_positive() {
        ProbeVerdict::ConvergesToZero
    } else if vals.windows(2).all(|w| w[1] < w[0]) && vals.last().unwrap().is_negative() {
        ProbeVerdict::ConvergesToInfinity
    } else {
        ProbeVerdict::NoVerdict
    }
}

/// The first indeterminate step of a trajectory as an error.
pub fn require_determined(t: &ProbeTrajectory) -> Result<()> {
    match t.verdict {
        ProbeVerdict::Indeterminate(step) => Err(Error::IndeterminateStep(step)),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    #[test]
    fn squaring_partitions_by_sign() {
        let q = Field::rationals();
        let sq = RationalMap::from_affine_i64(&q, &[0, 0, 1], &[1]).unwrap();
        let seeds: Vec<i64> = (-3..=3).collect();
        let out = convergence_probe(&sq, &Place::Prime(3), &seeds, 20).unwrap();
        for t in &out {
            let expected = match t.seed.signum() {
                0 => ProbeVerdict::NoConvergenceToSinks,
                1 => ProbeVerdict::ConvergesToZero,
                _ => ProbeVerdict::ConvergesToInfinity,
            };
            assert_eq!(t.verdict, expected);
            assert_eq!(t.valuations.len(), 21);
        }
        assert_eq!(out[4].valuations[..4], [1, 2, 4, 8].map(BigInt::from));
    }

    #[test]
    fn cancellation_is_indeterminate() {
        let q = Field::rationals();
        // z^2 + 1 with v(z) = 0: both terms have valuation 0
        let m = RationalMap::from_affine_i64(&q, &[1, 0, 1], &[1]).unwrap();
        let out = convergence_probe(&m, &Place::Prime(3), &[0, 1], 5).unwrap();
        assert_eq!(out[0].verdict, ProbeVerdict::Indeterminate(1));
        assert_eq!(require_determined(&out[0]), Err(Error::IndeterminateStep(1)));
        // v(z) = 1 gives v(z^2 + 1) = 0, then indeterminate
        assert_eq!(out[1].verdict, ProbeVerdict::Indeterminate(2));
    }
}
