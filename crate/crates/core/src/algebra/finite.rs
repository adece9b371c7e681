//! Prime and extension finite fields with elements packed into `u32`.
//!
//! An element of GF(p^k) is the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! whose base-p digits are the coefficients of its representative polynomial
//! in the generator `g` (a root of the modulus). Extension fields use
//! log/antilog and Zech tables so that every operation is O(1).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::ffpoly;
use crate::error::{Error, Result};

/// Largest field the library builds tables for.
pub const MAX_TABLE_SIZE: u64 = 1 << 24;

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[i] = log(1 + w^i)`, or `ZERO_LOG` when `1 + w^i = 0`.
    zech: Vec<u32>,
    neg_one_log: u32,
}

const ZERO_LOG: u32 = u32::MAX;

#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

impl std::hash::Hash for FiniteField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.k.hash(state);
        self.modulus.hash(state);
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.p, self.k, self.modulus)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            while n % i == 0 {
                n /= i;
            }
        }
        i += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn default_cache() -> &'static Mutex<HashMap<(u32, u32), FiniteField>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), FiniteField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FiniteField {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        let p = p as u32;
        Ok(FiniteField {
            p,
            k: 1,
            q: p,
            modulus: vec![0, 1],
            tables: None,
        })
    }

    /// GF(p^k). With no modulus the first irreducible monic polynomial of degree
    /// `k` in ascending index order (`c_0 + c_1 p + ...`) is used; results for
    /// the default modulus are cached.
    pub fn new(p: u64, k: u32, modulus: Option<&[u32]>) -> Result<Self> {
        let base = Self::prime(p)?;
        if k == 0 {
            return Err(Error::Usage("extension degree must be at least 1".into()));
        }
        if k == 1 && modulus.is_none() {
            return Ok(base);
        }
        let q = (p as u128).pow(k);
        if q as u64 > MAX_TABLE_SIZE || q > u32::MAX as u128 {
            return Err(Error::FieldTooLarge {
                size: q,
                budget: MAX_TABLE_SIZE,
            });
        }
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u32> = m.iter().map(|&c| c % base.p).collect();
                let m = ffpoly::trim(m);
                if ffpoly::degree(&m) != Some(k as usize) {
                    return Err(Error::ReducibleModulus(format!(
                        "{m:?} does not have degree {k}"
                    )));
                }
                let m = ffpoly::monic(&base, &m);
                if !ffpoly::is_irreducible(&base, &m) {
                    return Err(Error::ReducibleModulus(format!("{m:?}")));
                }
                m
            }
            None => {
                if let Some(f) = default_cache().lock().unwrap().get(&(base.p, k)) {
                    return Ok(f.clone());
                }
                ffpoly::first_irreducible(&base, k as usize)
            }
        };
        if k == 1 {
            // A linear modulus still describes GF(p); keep the canonical form.
            return Ok(base);
        }
        let field = Self::with_tables(base, k, modulus);
        let default = ffpoly::first_irreducible(&Self::prime(p)?, k as usize);
        if field.modulus == default {
            default_cache()
                .lock()
                .unwrap()
                .insert((field.p, k), field.clone());
        }
        Ok(field)
    }

    fn with_tables(base: FiniteField, k: u32, modulus: Vec<u32>) -> Self {
        let p = base.p;
        let q = p.pow(k);
        let slow = SlowExt {
            base: &base,
            modulus: &modulus,
            k: k as usize,
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let mut w = 0u32;
        for cand in 2..q {
            if factors
                .iter()
                .all(|&r| slow.pow(cand, order / r) != 1)
            {
                w = cand;
                break;
            }
        }
        if q == 2 || w == 0 {
            w = 1;
        }
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = cur;
            log[cur as usize] = i as u32;
            cur = slow.mul(cur, w);
        }
        let zech = exp
            .iter()
            .map(|&e| {
                let s = slow.add(e, 1);
                if s == 0 {
                    ZERO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();
        let neg_one = slow.neg(1);
        let tables = Tables {
            exp,
            log,
            zech,
            neg_one_log: 0,
        };
        let neg_one_log = tables.log[neg_one as usize];
        FiniteField {
            p,
            k,
            q,
            modulus,
            tables: Some(Arc::new(Tables {
                neg_one_log,
                ..tables
            })),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.k
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }
    /// The prime subfield.
    pub fn prime_subfield(&self) -> FiniteField {
        FiniteField::prime(self.p as u64).expect("characteristic is prime")
    }

    /// Index of the generator `g` (equal to `p`), or `None` for prime fields.
    pub fn generator(&self) -> Option<u32> {
        (self.k > 1).then_some(self.p)
    }

    pub fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0u32, |acc, &d| acc * self.p + d % self.p)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            None => {
                let s = a as u64 + b as u64;
                (s % self.p as u64) as u32
            }
            Some(t) => {
                if a == 0 {
                    return b;
                }
                if b == 0 {
                    return a;
                }
                let n = self.q - 1;
                let la = t.log[a as usize];
                let lb = t.log[b as usize];
                let diff = (lb + n - la) % n;
                let z = t.zech[diff as usize];
                if z == ZERO_LOG {
                    0
                } else {
                    t.exp[((la as u64 + z as u64) % n as u64) as usize]
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        match &self.tables {
            None => self.p - a,
            Some(t) => {
                let n = self.q - 1;
                t.exp[((t.log[a as usize] + t.neg_one_log) % n) as usize]
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            None => ((a as u64 * b as u64) % self.p as u64) as u32,
            Some(t) => {
                let n = self.q - 1;
                let s = t.log[a as usize] as u64 + t.log[b as usize] as u64;
                t.exp[(s % n as u64) as usize]
            }
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivideByZero);
        }
        Ok(match &self.tables {
            None => self.pow(a, (self.p - 2) as u64),
            Some(t) => {
                let n = self.q - 1;
                t.exp[((n - t.log[a as usize]) % n) as usize]
            }
        })
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let n = (self.q - 1) as u64;
                let l = (t.log[a as usize] as u64 * (e % n)) % n;
                t.exp[l as usize]
            }
            None => {
                let m = self.p as u64;
                let mut base = a as u64 % m;
                let mut acc = 1u64;
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                acc as u32
            }
        }
    }

    /// Smallest `i` dividing `max_j` such that `a` lies in the subfield with
    /// `p^(self.k / ...)`; concretely the least `i >= 1` with `a^(base^i) = a`
    /// where `base` is the order of the given subfield.
    pub fn min_degree_over(&self, a: u32, base_order: u32) -> u32 {
        let mut i = 1;
        let mut x = self.pow(a, base_order as u64);
        while x != a {
            x = self.pow(x, base_order as u64);
            i += 1;
        }
        i
    }
}

/// Polynomial-arithmetic implementation used only while building tables.
struct SlowExt<'a> {
    base: &'a FiniteField,
    modulus: &'a [u32],
    k: usize,
}

impl SlowExt<'_> {
    fn to_poly(&self, a: u32) -> Vec<u32> {
        let p = self.base.p;
        let mut a = a;
        let v = (0..self.k)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect();
        ffpoly::trim(v)
    }
    fn from_poly(&self, v: &[u32]) -> u32 {
        v.iter().rev().fold(0u32, |acc, &d| acc * self.base.p + d)
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        self.from_poly(&ffpoly::add(self.base, &self.to_poly(a), &self.to_poly(b)))
    }
    fn neg(&self, a: u32) -> u32 {
        self.from_poly(&ffpoly::neg(self.base, &self.to_poly(a)))
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = ffpoly::mul(self.base, &self.to_poly(a), &self.to_poly(b));
        self.from_poly(&ffpoly::rem(self.base, &prod, self.modulus))
    }
    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}
