//! Dense linear algebra over a [`Field`]: characteristic polynomials and
//! null spaces.

use super::field::{Field, Scalar};
use super::poly::Poly;

/// Characteristic polynomial `det(x I - M)` by reduction to upper Hessenberg
/// form followed by the standard three-term recurrence. Works in every
/// characteristic.
pub fn charpoly(field: &Field, m: &[Vec<Scalar>]) -> Poly {
    let n = m.len();
    let f = field;
    let mut h: Vec<Vec<Scalar>> = m.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| !f.is_zero(&h[i][c])) else {
            continue;
        };
        if i != c + 1 {
            h.swap(i, c + 1);
            for row in h.iter_mut() {
                row.swap(i, c + 1);
            }
        }
        let pivot_inv = f.inv(&h[c + 1][c]).expect("nonzero pivot");
        for k in c + 2..n {
            if f.is_zero(&h[k][c]) {
                continue;
            }
            let u = f.mul(&h[k][c], &pivot_inv);
            for j in 0..n {
                let v = f.mul(&u, &h[c + 1][j]);
                h[k][j] = f.sub(&h[k][j], &v);
            }
            for row in h.iter_mut() {
                let v = f.mul(&u, &row[k]);
                row[c + 1] = f.add(&row[c + 1], &v);
            }
        }
    }
    let x = Poly::monomial(f, f.one(), 1);
    let mut p: Vec<Poly> = vec![Poly::one(f)];
    for mm in 1..=n {
        let diag = Poly::constant(f, h[mm - 1][mm - 1].clone());
        let mut cur = x.sub(&diag).mul(&p[mm - 1]);
        let mut t = f.one();
        for i in 1..mm {
            t = f.mul(&t, &h[mm - i][mm - i - 1]);
            if f.is_zero(&t) {
                break;
            }
            let coef = f.mul(&t, &h[mm - i - 1][mm - 1]);
            if !f.is_zero(&coef) {
                cur = cur.sub(&p[mm - i - 1].scale(&coef));
            }
        }
        p.push(cur);
    }
    p.pop().unwrap()
}

/// Basis of `{ v : rows * v = 0 }`, each vector normalized so its last
/// free coordinate is 1.
pub fn nullspace(field: &Field, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let f = field;
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..a.len()).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, i);
        let inv = f.inv(&a[r][c]).unwrap();
        for j in 0..ncols {
            a[r][j] = f.mul(&a[r][j], &inv);
        }
        for i in 0..a.len() {
            if i != r && !f.is_zero(&a[i][c]) {
                let u = a[i][c].clone();
                for j in 0..ncols {
                    let v = f.mul(&u, &a[r][j]);
                    a[i][j] = f.sub(&a[i][j], &v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); ncols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&a[row][fc]);
            }
            v
        })
        .collect()
}
