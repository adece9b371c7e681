/// Möbius function by trial factorization.
pub fn mobius_mu(n: u64) -> i32 {
    assert!(n >= 1, "mobius_mu needs n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|k| n % k == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(mobius_mu(1), 1);
        assert_eq!(mobius_mu(2), -1);
        assert_eq!(mobius_mu(4), 0);
        assert_eq!(mobius_mu(6), 1);
        assert_eq!(mobius_mu(30), -1);
    }

    #[test]
    fn sums_over_divisors_vanish() {
        for n in 2..200 {
            let s: i32 = divisors(n).into_iter().map(mobius_mu).sum();
            assert_eq!(s, 0);
        }
    }
}
