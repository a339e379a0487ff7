//! Small-integer number theory: primality, factorization, modular powers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut stack = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        while m.is_multiple_of(p) {
            push_factor(&mut out, p);
            m /= p;
        }
    }
    if m > 1 {
        stack.push(m);
    }
    while let Some(x) = stack.pop() {
        if x == 1 {
            continue;
        }
        if is_prime(x) {
            push_factor(&mut out, x);
            continue;
        }
        let d = pollard_rho(x);
        stack.push(d);
        stack.push(x / d);
    }
    out.sort_unstable();
    out
}

fn push_factor(out: &mut Vec<(u64, u32)>, p: u64) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Exponent of the prime `q` in a nonzero integer; `None` for zero.
pub fn valuation(x: &BigInt, q: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let q = BigInt::from(q);
    let mut v = 0;
    let mut y = x.abs();
    loop {
        let (quot, rem) = y.div_rem(&q);
        if !rem.is_zero() {
            return Some(v);
        }
        y = quot;
        v += 1;
    }
}

pub fn valuation_u64(mut x: u64, q: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x.is_multiple_of(q) {
        x /= q;
        v += 1;
    }
    Some(v)
}

/// Legendre's formula for the exponent of `q` in `n!`.
pub fn factorial_valuation(n: u64, q: u64) -> u64 {
    let mut total = 0;
    let mut m = n;
    while m > 0 {
        m /= q;
        total += m;
    }
    total
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Primes in increasing order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let naive: Vec<u64> = (0..200)
            .filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0))
            .collect();
        let fast: Vec<u64> = (0..200).filter(|&n| is_prime(n)).collect();
        assert_eq!(naive, fast);
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn factor_reassembles() {
        for n in [1u64, 2, 12, 360, 999_983 * 1_000_003, 600_851_475_143] {
            let back: u64 = factor(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            assert!(factor(n).iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn legendre_matches_division() {
        let mut fact_v = 0;
        for n in 1..300u64 {
            fact_v += valuation_u64(n, 3).unwrap() as u64;
            assert_eq!(factorial_valuation(n, 3), fact_v);
        }
    }

    #[test]
    fn divisors_of_twelve() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(totient(12), 4);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
    }
}
