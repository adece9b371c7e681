//! Purely iterative root-finding algorithms `f -> T_f`.

use crate::algebra::{Field, Poly};
use crate::dynamics::RationalMap;
use crate::error::{Error, Result};

/// `N_f(z) = z - f(z)/f'(z) = (z f' - f) / f'`.
pub fn newton_map(f: &Poly) -> Result<RationalMap> {
    let df = f.derivative();
    if df.is_zero() {
        return Err(Error::InseparablePolynomial);
    }
    if f.gcd(&df)?.degree() != Some(0) {
        return Err(Error::InseparablePolynomial);
    }
    let x = Poly::monomial(f.field(), f.field().one(), 1);
    let num = x.mul(&df).sub(f);
    RationalMap::from_affine(&num, &df)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgorithmKind {
    Newton,
    /// Affine coefficients of `T_f`, constant first, as expressions in the
    /// coefficients `a0, ..., ar` of `f`.
    Template { num: Vec<String>, den: Vec<String> },
}

/// An assignment `f -> T_f` on polynomials of degree `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterativeAlgorithm {
    pub r: usize,
    pub kind: AlgorithmKind,
}

impl IterativeAlgorithm {
    pub fn newton(r: usize) -> Self {
        IterativeAlgorithm {
            r,
            kind: AlgorithmKind::Newton,
        }
    }

    pub fn template(r: usize, num: Vec<String>, den: Vec<String>) -> Self {
        IterativeAlgorithm {
            r,
            kind: AlgorithmKind::Template { num, den },
        }
    }

    /// `T_f`. Degenerate inputs surface as the map constructor's errors.
    pub fn apply(&self, f: &Poly) -> Result<RationalMap> {
        if f.degree() != Some(self.r) {
            return Err(Error::Usage(format!(
                "algorithm expects degree {}, got {:?}",
                self.r,
                f.degree()
            )));
        }
        match &self.kind {
            AlgorithmKind::Newton => newton_map(f),
            AlgorithmKind::Template { num, den } => {
                let field = f.field();
                let n = self.eval_all(field, f, num)?;
                let d = self.eval_all(field, f, den)?;
                RationalMap::from_affine(&Poly::new(field, n), &Poly::new(field, d))
            }
        }
    }

    fn eval_all(&self, field: &Field, f: &Poly, exprs: &[String]) -> Result<Vec<crate::algebra::Scalar>> {
        exprs.iter().map(|e| field.parse(&substitute(field, f, e))).collect()
    }
}

/// Replaces each identifier `a<i>` by the parenthesized coefficient `a_i`.
fn substitute(field: &Field, f: &Poly, expr: &str) -> String {
    let chars: Vec<char> = expr.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let boundary = i == 0 || !chars[i - 1].is_ascii_alphanumeric();
        if c == 'a' && boundary && i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j == chars.len() || !chars[j].is_ascii_alphabetic() {
                let k: usize = chars[i + 1..j].iter().collect::<String>().parse().unwrap();
                out.push('(');
                out.push_str(&field.format(&f.coeff(k)));
                out.push(')');
                i = j;
                continue;
            }
        }
        out.push(c);
        i += 1;
    }
    out
}
