//! Irreducibility of monic integer polynomials over the rationals.
//!
//! Strategy: reject repeated factors via the discriminant, pick a prime where
//! the reduction stays square-free, factor there, and if more than one
//! modular factor exists, Hensel-lift the factorization beyond a coefficient
//! bound and search factor combinations (Zassenhaus).

use crate::arith::primes;
use crate::linalg::det;
use crate::poly::{self, degree};
use crate::polymod::{Fp, PolyMod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (Some(df), Some(dg)) = (degree(f), degree(g)) else {
        return BigInt::zero();
    };
    let n = df + dg;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for r in 0..dg {
        for (i, c) in f[..=df].iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..df {
        for (i, c) in g[..=dg].iter().rev().enumerate() {
            m[dg + r][r + i] = c.clone();
        }
    }
    det(&m)
}

pub fn discriminant_nonzero(f: &[BigInt]) -> bool {
    !resultant(f, &poly::derivative(f)).is_zero()
}

/// Decides irreducibility over Q of a monic integer polynomial.
pub fn is_irreducible(f: &[BigInt]) -> bool {
    let f = poly::trimmed(f.to_vec());
    let Some(d) = degree(&f) else { return false };
    if d <= 1 {
        return d == 1;
    }
    if !discriminant_nonzero(&f) {
        return false;
    }
    let disc = resultant(&f, &poly::derivative(&f));

    // Degree patterns over several good primes can certify irreducibility
    // cheaply; keep the prime with the fewest factors for lifting.
    let mut possible = vec![true; d + 1];
    let mut best: Option<(u64, Vec<PolyMod>)> = None;
    for p in primes().filter(|&p| !(&disc % BigInt::from(p)).is_zero()).take(12) {
        let fp = Fp::new(p);
        let factors: Vec<PolyMod> = fp
            .factor(&PolyMod::from_int(&f, p))
            .into_iter()
            .map(|(g, _)| g)
            .collect();
        let mut sums = vec![false; d + 1];
        sums[0] = true;
        for g in &factors {
            let k = g.degree().unwrap();
            for s in (k..=d).rev() {
                if sums[s - k] {
                    sums[s] = true;
                }
            }
        }
        for (slot, s) in possible.iter_mut().zip(&sums) {
            *slot &= *s;
        }
        if (1..d).all(|k| !possible[k]) {
            return true;
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    let (p, factors) = best.expect("some prime avoids the discriminant");
    !has_integer_factor(&f, p, &factors, &possible)
}

fn has_integer_factor(f: &[BigInt], p: u64, factors: &[PolyMod], possible: &[bool]) -> bool {
    let d = degree(f).unwrap();
    // Mignotte-style bound on coefficients of any factor.
    let norm2: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << d) * norm2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = lift_all(f, factors, p, k);
    let r = lifted.len();
    let half = &modulus / 2;
    for size in 1..=r / 2 {
        for subset in combinations(r, size) {
            let deg: usize = subset.iter().map(|&i| lifted[i].len() - 1).sum();
            if !possible[deg] {
                continue;
            }
            let mut g = vec![BigInt::one()];
            for &i in &subset {
                g = poly::mul(&g, &lifted[i])
                    .into_iter()
                    .map(|c| c.mod_floor(&modulus))
                    .collect();
            }
            let g: Vec<BigInt> = g
                .into_iter()
                .map(|c| if c > half { c - &modulus } else { c })
                .collect();
            if poly::div_exact_monic(f, &g).is_some() {
                return true;
            }
        }
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn to_int(g: &PolyMod) -> Vec<BigInt> {
    g.c.iter().map(|&x| BigInt::from(x)).collect()
}

fn reduce(g: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    poly::trimmed(g.iter().map(|c| c.mod_floor(m)).collect())
}

/// Lifts a factorization of `f` modulo `p` into monic factors modulo `p^k`.
fn lift_all(f: &[BigInt], factors: &[PolyMod], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(k);
        return vec![reduce(f, &m)];
    }
    let fp = Fp::new(p);
    let mid = factors.len() / 2;
    let prod = |fs: &[PolyMod]| fs.iter().fold(PolyMod::one(), |acc, g| fp.mul(&acc, g));
    let (g, h) = lift_pair(f, &prod(&factors[..mid]), &prod(&factors[mid..]), p, k);
    let mut out = lift_all(&g, &factors[..mid], p, k);
    out.extend(lift_all(&h, &factors[mid..], p, k));
    out
}

/// Linear Hensel lifting of `f = g h (mod p)` with monic coprime `g`, `h`.
fn lift_pair(f: &[BigInt], g0: &PolyMod, h0: &PolyMod, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let fp = Fp::new(p);
    let (one, s, t) = fp.ext_gcd(g0, h0);
    debug_assert!(one.is_one());
    let pb = BigInt::from(p);
    let mut g = to_int(g0);
    let mut h = to_int(h0);
    let mut pk = pb.clone();
    for _ in 1..k {
        let prod = poly::mul(&g, &h);
        let n = f.len().max(prod.len());
        let err: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b) / &pk
            })
            .collect();
        let e = PolyMod::from_int(&err, p);
        let (q, dg) = fp.divrem(&fp.mul(&e, &t), g0);
        let dh = fp.add(&fp.mul(&e, &s), &fp.mul(&q, h0));
        for (i, c) in dg.c.iter().enumerate() {
            g[i] += &pk * BigInt::from(*c);
        }
        for (i, c) in dh.c.iter().enumerate() {
            h[i] += &pk * BigInt::from(*c);
        }
        pk *= &pb;
    }
    (reduce(&g, &pk), reduce(&h, &pk))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn classic_cases() {
        assert!(is_irreducible(&ints(&[0, 1])));
        assert!(is_irreducible(&ints(&[1, 0, 1])));
        assert!(is_irreducible(&ints(&[2, -2, 1])));
        assert!(is_irreducible(&ints(&[-1, -1, 0, 1])));
        // x^4 + 1 splits modulo every prime yet is irreducible.
        assert!(is_irreducible(&ints(&[1, 0, 0, 0, 1])));
        // x^4 - 10x^2 + 1, minimal polynomial of sqrt2 + sqrt3.
        assert!(is_irreducible(&ints(&[1, 0, -10, 0, 1])));
        assert!(!is_irreducible(&ints(&[-1, 0, 1])));
        assert!(!is_irreducible(&ints(&[1, 0, 2, 0, 1])));
        // (x^2+x+1)(x^2+2) = x^4 + x^3 + 3x^2 + 2x + 2
        assert!(!is_irreducible(&ints(&[2, 2, 3, 1, 1])));
        // (x^3 - 2)(x^2 + 3)
        assert!(!is_irreducible(&ints(&[-6, 0, 3, -2, 0, 1])));
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(x^2+1, x-1) = (i-1)(-i-1) = 2
        assert_eq!(resultant(&ints(&[1, 0, 1]), &ints(&[-1, 1])), BigInt::from(2));
        assert_eq!(resultant(&ints(&[1, 0, 1]), &ints(&[3])), BigInt::from(9));
    }
}
