//! Digit products, multiplicative persistence and practical numbers.

use crate::arith;
use crate::serde_int;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Product of the base-`b` digits of `n`.
pub fn sloane_map(n: &BigUint, b: u32) -> BigUint {
    assert!(b >= 2, "base must be at least 2");
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut product = BigUint::one();
    for d in n.to_radix_le(b) {
        if d == 0 {
            return BigUint::zero();
        }
        product *= d;
    }
    product
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceRecord {
    #[serde(with = "serde_int::int")]
    pub n: BigInt,
    pub base: u32,
    /// `n, S(n), S(S(n)), ...` up to the first fixed point.
    pub orbit: Vec<String>,
    /// Least index from which the orbit is constant.
    pub l: usize,
}

impl PersistenceRecord {
    pub fn csv_header() -> &'static str {
        "n,base,l,orbit"
    }

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.n, self.base, self.l, self.orbit.join(";"))
    }
}

/// Iterates the digit product until it stops moving. This terminates since
/// `S_b(n) < n` once `n >= b`, and every single digit is a fixed point.
pub fn persistence(n: &BigUint, b: u32) -> PersistenceRecord {
    let mut orbit = vec![n.clone()];
    loop {
        let last = orbit.last().unwrap();
        let next = sloane_map(last, b);
        if &next == last {
            break;
        }
        orbit.push(next);
    }
    PersistenceRecord {
        n: BigInt::from(n.clone()),
        base: b,
        l: orbit.len() - 1,
        orbit: orbit.iter().map(|x| x.to_string()).collect(),
    }
}

/// Largest persistence among `lo..=hi` together with the first `n` attaining it.
pub fn max_persistence(lo: u64, hi: u64, b: u32) -> Option<(u64, usize)> {
    (lo..=hi)
        .map(|n| (n, persistence(&BigUint::from(n), b).l))
        .fold(None, |best, (n, l)| match best {
            Some((_, bl)) if bl >= l => best,
            _ => Some((n, l)),
        })
}

/// Below this bound `is_practical` also runs the subset-sum definition.
pub const PRACTICAL_CROSSOVER: u64 = 10_000;

/// Whether every integer below `n` is a sum of distinct divisors of `n`.
pub fn is_practical(n: u64) -> bool {
    assert!(n >= 1);
    let fast = is_practical_factored(&arith::factor(n));
    if n <= PRACTICAL_CROSSOVER {
        debug_assert_eq!(fast, is_practical_naive(n), "criteria disagree at {n}");
    }
    fast
}

/// Growth criterion on the factorization: with primes in increasing order,
/// each prime is at most one more than the divisor sum of the part before it.
pub fn is_practical_factored(factors: &[(u64, u32)]) -> bool {
    let mut factors = factors.to_vec();
    factors.sort_unstable();
    let mut sigma = BigUint::one();
    for (p, e) in factors {
        if BigUint::from(p) > &sigma + 1u32 {
            return false;
        }
        // sigma(p^e) = (p^(e+1) - 1) / (p - 1)
        let pb = BigUint::from(p);
        sigma *= (pb.pow(e + 1) - 1u32) / (pb - 1u32);
    }
    true
}

/// Subset sums of the divisors, straight from the definition.
pub fn is_practical_naive(n: u64) -> bool {
    let n = n as usize;
    let words = n.div_ceil(64);
    // Bit s of `reach` records whether s is a sum of distinct divisors seen so far.
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for d in arith::divisors(n as u64) {
        let (w, b) = (d as usize / 64, d as u32 % 64);
        for i in (w..words).rev() {
            let mut shifted = reach[i - w] << b;
            if b > 0 && i > w {
                shifted |= reach[i - w - 1] >> (64 - b);
            }
            reach[i] |= shifted;
        }
    }
    (0..n).all(|s| reach[s / 64] >> (s % 64) & 1 == 1)
}

/// `C(2n, n)` as prime powers, from Legendre's formula.
pub fn central_binomial_factors(n: u64) -> Vec<(u64, u32)> {
    arith::primes()
        .take_while(|&p| p <= 2 * n)
        .filter_map(|p| {
            let e = arith::factorial_valuation(2 * n, p) - 2 * arith::factorial_valuation(n, p);
            (e > 0).then_some((p, e as u32))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralBinomialRecord {
    pub n: u64,
    #[serde(with = "serde_int::decimal")]
    pub binomial: BigInt,
    pub practical: bool,
    /// `n = 2^k` with `k >= 1` and no digit 2 in base 3.
    pub omits_two: bool,
    /// `omits_two` holds but the coefficient is practical.
    pub violation: bool,
}

pub fn central_binomial_practical(n: u64) -> CentralBinomialRecord {
    assert!(n >= 1);
    let factors = central_binomial_factors(n);
    let binomial: BigUint = factors.iter().map(|&(p, e)| BigUint::from(p).pow(e)).product();
    let practical = is_practical_factored(&factors);
    // n = 1 = 2^0 is excluded: C(2, 1) = 2 is practical.
    let omits_two = n > 1 && n.is_power_of_two() && !BigUint::from(n).to_radix_le(3).contains(&2);
    CentralBinomialRecord {
        n,
        binomial: binomial.into(),
        practical,
        omits_two,
        violation: omits_two && practical,
    }
}

/// Exponents `k <= k_max` such that `2^k` has no ternary digit 2.
pub fn ternary_powers_of_two(k_max: u32) -> Vec<u32> {
    let mut x = BigUint::one();
    let mut out = Vec::new();
    for k in 0..=k_max {
        if !x.to_radix_le(3).contains(&2) {
            out.push(k);
        }
        x <<= 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn sloane_examples() {
        assert_eq!(sloane_map(&big(39), 10), big(27));
        assert_eq!(sloane_map(&big(7), 10), big(7));
        assert_eq!(sloane_map(&big(256), 3), big(0));
        assert_eq!(sloane_map(&big(13), 3), big(1));
    }

    #[test]
    fn persistence_examples() {
        let r = persistence(&big(39), 10);
        assert_eq!(r.orbit, vec!["39", "27", "14", "4"]);
        assert_eq!(r.l, 3);
        assert_eq!(persistence(&big(7), 10).l, 0);
        assert_eq!(persistence(&big(277777788888899), 10).l, 11);
        for n in 1..2000 {
            assert!(persistence(&big(n), 2).l <= 1);
        }
        assert_eq!(r.csv_row(), "39,10,3,39;27;14;4");
        assert_eq!(max_persistence(1, 100, 10), Some((77, 4)));
    }

    #[test]
    fn practical_examples() {
        assert!(is_practical(1));
        assert!(!is_practical(3));
        assert!(is_practical(6));
        let small: Vec<u64> = (1..=30).filter(|&n| is_practical(n)).collect();
        assert_eq!(small, vec![1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30]);
    }

    #[test]
    fn central_binomials() {
        let r = central_binomial_practical(4);
        assert_eq!(r.binomial, BigInt::from(70));
        assert!(!r.practical && r.omits_two && !r.violation);
        let r = central_binomial_practical(1);
        assert!(r.practical && !r.omits_two);
        let r = central_binomial_practical(3);
        assert_eq!(r.binomial, BigInt::from(20));
        assert!(r.practical);
        assert!(!central_binomial_practical(256).violation);
        assert!(central_binomial_practical(256).omits_two);
        assert_eq!(ternary_powers_of_two(20), vec![0, 2, 8]);
    }
}
