//! The fixed-point multiplier identity and the arithmetic obstructions to
//! generally convergent algorithms at a non-archimedean place.

use crate::algebra::finite::is_prime;
use crate::algebra::Scalar;
use crate::dynamics::{multiplier_spectrum, RationalMap};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPointSum {
    /// `sum 1/(1 - λ_i) = 1`.
    HoldsExactly,
    /// Some fixed point has multiplier 1, so the sum is undefined.
    MultiplierOne,
    /// The sum, when it differs from 1.
    Value(Scalar),
}

/// Evaluates `sum 1/(1 - λ_i) = M_1'(1) / M_1(1)` exactly.
pub fn fixed_point_sum_check(phi: &RationalMap, limits: &Limits) -> Result<FixedPointSum> {
    let m1 = multiplier_spectrum(phi, 1, limits)?;
    let f = phi.field();
    let one = f.one();
    let at1 = m1.poly.eval(&one);
    if f.is_zero(&at1) {
        return Ok(FixedPointSum::MultiplierOne);
    }
    let s = f.div(&m1.poly.derivative().eval(&one), &at1)?;
    Ok(if f.is_one(&s) {
        FixedPointSum::HoldsExactly
    } else {
        FixedPointSum::Value(s)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionReason {
    /// `r` attracting fixed points force `r ≡ 1` modulo the maximal ideal.
    ResidueCount,
    /// For `p > d` isospectral families are trivial, so the algorithm
    /// cannot vary with `f`.
    IsospectralCollapse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    Obstructed {
        reason: ObstructionReason,
        /// The dynamical premise that the arithmetic conclusion rests on.
        hypothesis: String,
    },
    NotObstructedByTheseTests { failed: Vec<String> },
}

/// Gates for a generally convergent algorithm on degree-`r` polynomials
/// with output degree `d` at residue characteristic `p` (0 for
/// characteristic zero residue fields).
pub fn residue_obstruction(r: u64, p: u64, d: u64) -> Result<Obstruction> {
    if r < 2 || d < 2 {
        return Err(Error::Usage("r and d must be at least 2".into()));
    }
    if p != 0 && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let hypothesis = format!(
        "the {r} roots are attracting fixed points, so each contributes 1/(1 - λ) ≡ 1 to the fixed-point sum"
    );
    if p == 0 {
        return Ok(Obstruction::Obstructed {
            reason: ObstructionReason::ResidueCount,
            hypothesis,
        });
    }
    let mut failed = Vec::new();
    if p >= r {
        if (r - 1) % p != 0 {
            return Ok(Obstruction::Obstructed {
                reason: ObstructionReason::ResidueCount,
                hypothesis,
            });
        }
        failed.push(format!("residue count: {p} divides r - 1 = {}", r - 1));
    } else {
        failed.push(format!("residue count: p = {p} < r = {r}"));
    }
    if p > d {
        return Ok(Obstruction::Obstructed {
            reason: ObstructionReason::IsospectralCollapse,
            hypothesis: format!("p = {p} exceeds d = {d}, so isospectral families of degree d are trivial"),
        });
    }
    failed.push(format!("isospectral collapse: p = {p} <= d = {d}"));
    Ok(Obstruction::NotObstructedByTheseTests { failed })
}
