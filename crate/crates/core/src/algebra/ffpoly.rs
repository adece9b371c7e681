//! Dense univariate polynomials over a [`FiniteField`], coefficients
//! constant-first and trimmed so the last entry is nonzero.

use super::finite::FiniteField;

pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn is_one(a: &[u32]) -> bool {
    a.len() == 1 && a[0] == 1
}

pub fn add(f: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| {
            f.add(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    trim(v)
}

pub fn neg(f: &FiniteField, a: &[u32]) -> Vec<u32> {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn sub(f: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| {
            f.sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    trim(v)
}

pub fn scale(f: &FiniteField, a: &[u32], c: u32) -> Vec<u32> {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn mul(f: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return scale(f, b, a[0]);
    }
    if b.len() == 1 {
        return scale(f, a, b[0]);
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(f: &FiniteField, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv_lc = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    let mut q = vec![0u32; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        if c == 0 {
            continue;
        }
        let c = f.mul(c, inv_lc);
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                r[i + j] = f.sub(r[i + j], f.mul(c, bj));
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(f: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(f, a, b).1
}

pub fn monic(f: &FiniteField, a: &[u32]) -> Vec<u32> {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(f, a, f.inv(lc).expect("nonzero")),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(f: &FiniteField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn eval(f: &FiniteField, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0u32, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn derivative(f: &FiniteField, a: &[u32]) -> Vec<u32> {
    let v = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, f.from_i64(i as i64)))
        .collect();
    trim(v)
}

pub fn mulmod(f: &FiniteField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &FiniteField, a: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

/// Irreducibility over GF(p): no factor of degree `j <= deg/2`, tested by
/// `gcd(m, x^(p^j) - x) = 1`. `f` must be a prime field.
pub fn is_irreducible(f: &FiniteField, m: &[u32]) -> bool {
    let Some(n) = degree(m) else { return false };
    if n == 0 {
        return false;
    }
    let p = f.order() as u64;
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=n / 2 {
        xp = powmod(f, &xp, p, m);
        let g = gcd(f, m, &sub(f, &xp, &x));
        if !is_one(&g) {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `n` over the prime field `f`, scanning
/// the lower coefficients as a base-p counter.
pub fn first_irreducible(f: &FiniteField, n: usize) -> Vec<u32> {
    let p = f.order() as u64;
    let mut idx = 0u64;
    loop {
        let mut m = Vec::with_capacity(n + 1);
        let mut t = idx;
        for _ in 0..n {
            m.push((t % p) as u32);
            t /= p;
        }
        m.push(1);
        if is_irreducible(f, &m) {
            return m;
        }
        idx += 1;
    }
}

pub fn pow(f: &FiniteField, a: &[u32], mut e: u64) -> Vec<u32> {
    let mut acc = vec![1];
    let mut b = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = mul(f, &b, &b);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let f = FiniteField::prime(7).unwrap();
        let a = vec![3, 0, 5, 1, 2];
        let b = vec![1, 4, 3];
        let (q, r) = divrem(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn irreducible_quadratics_over_gf2() {
        let f = FiniteField::prime(2).unwrap();
        assert_eq!(first_irreducible(&f, 2), vec![1, 1, 1]);
        assert!(!is_irreducible(&f, &[1, 0, 1]));
        assert_eq!(first_irreducible(&f, 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn gcd_monic() {
        let f = FiniteField::prime(5).unwrap();
        // (x^2 - 1, 2x - 2) -> x - 1
        let g = gcd(&f, &[4, 0, 1], &[3, 2]);
        assert_eq!(g, vec![4, 1]);
        assert!(gcd(&f, &[], &[]).is_empty());
    }
}
