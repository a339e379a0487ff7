//! Polynomials over the prime field F_p and their factorization
//! (square-free decomposition, distinct-degree and Cantor-Zassenhaus splitting).

use crate::arith::{inv_mod, mul_mod};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A polynomial over F_p, little-endian, always trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyMod {
    pub c: Vec<u64>,
}

impl PolyMod {
    pub fn new(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyMod { c }
    }

    pub fn from_int(p: &[BigInt], modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        Self::new(
            p.iter()
                .map(|x| x.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn zero() -> Self {
        PolyMod { c: Vec::new() }
    }

    pub fn one() -> Self {
        PolyMod { c: vec![1] }
    }

    pub fn x() -> Self {
        PolyMod { c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64, p: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }
}

pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(&self, a: &PolyMod, b: &PolyMod) -> PolyMod {
        let n = a.c.len().max(b.c.len());
        PolyMod::new(
            (0..n)
                .map(|i| {
                    let x = a.c.get(i).copied().unwrap_or(0);
                    let y = b.c.get(i).copied().unwrap_or(0);
                    ((x as u128 + y as u128) % self.p as u128) as u64
                })
                .collect(),
        )
    }

    pub fn sub(&self, a: &PolyMod, b: &PolyMod) -> PolyMod {
        let n = a.c.len().max(b.c.len());
        PolyMod::new(
            (0..n)
                .map(|i| {
                    let x = a.c.get(i).copied().unwrap_or(0);
                    let y = b.c.get(i).copied().unwrap_or(0);
                    ((x as u128 + self.p as u128 - y as u128) % self.p as u128) as u64
                })
                .collect(),
        )
    }

    pub fn scale(&self, a: &PolyMod, k: u64) -> PolyMod {
        PolyMod::new(a.c.iter().map(|&x| mul_mod(x, k, self.p)).collect())
    }

    pub fn mul(&self, a: &PolyMod, b: &PolyMod) -> PolyMod {
        if a.is_zero() || b.is_zero() {
            return PolyMod::zero();
        }
        let mut out = vec![0u128; a.c.len() + b.c.len() - 1];
        let p = self.p as u128;
        for (i, &x) in a.c.iter().enumerate() {
            for (j, &y) in b.c.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % p;
            }
        }
        PolyMod::new(out.into_iter().map(|v| v as u64).collect())
    }

    pub fn divrem(&self, a: &PolyMod, b: &PolyMod) -> (PolyMod, PolyMod) {
        let db = b.degree().expect("division by zero polynomial");
        let inv = inv_mod(b.lead(), self.p).expect("leading coefficient invertible");
        let mut rem = a.c.clone();
        if rem.len() <= db {
            return (PolyMod::zero(), a.clone());
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = mul_mod(rem[k], inv, self.p);
            if c == 0 {
                continue;
            }
            quot[k - db] = c;
            for i in 0..=db {
                let t = mul_mod(c, b.c[i], self.p);
                rem[k - db + i] = (rem[k - db + i] + self.p - t) % self.p;
            }
        }
        rem.truncate(db);
        (PolyMod::new(quot), PolyMod::new(rem))
    }

    pub fn rem(&self, a: &PolyMod, b: &PolyMod) -> PolyMod {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &PolyMod) -> PolyMod {
        if a.is_zero() {
            return a.clone();
        }
        let inv = inv_mod(a.lead(), self.p).unwrap();
        self.scale(a, inv)
    }

    pub fn gcd(&self, a: &PolyMod, b: &PolyMod) -> PolyMod {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &PolyMod, b: &PolyMod) -> (PolyMod, PolyMod, PolyMod) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (PolyMod::one(), PolyMod::zero());
        let (mut t0, mut t1) = (PolyMod::zero(), PolyMod::one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = inv_mod(r0.lead(), self.p).unwrap();
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &PolyMod) -> PolyMod {
        PolyMod::new(
            a.c.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn pow_mod(&self, base: &PolyMod, exp: &BigUint, modulus: &PolyMod) -> PolyMod {
        let mut acc = PolyMod::one();
        let base = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), modulus);
            }
        }
        self.rem(&acc, modulus)
    }

    /// Square-free decomposition of a monic polynomial: pairs `(g, m)` with
    /// `a = prod g^m`, each `g` square-free, monic and pairwise coprime.
    pub fn squarefree(&self, a: &PolyMod) -> Vec<(PolyMod, usize)> {
        let mut out = Vec::new();
        if a.degree().unwrap_or(0) == 0 {
            return out;
        }
        let c = self.gcd(a, &self.derivative(a));
        let mut w = self.divrem(a, &c).0;
        let mut c = c;
        let mut i = 1;
        while !w.is_one() {
            let y = self.gcd(&w, &c);
            let fac = self.divrem(&w, &y).0;
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = self.divrem(&c, &w).0;
            i += 1;
        }
        if !c.is_one() {
            // c is a p-th power: take the p-th root coefficientwise.
            let root = PolyMod::new(c.c.iter().step_by(self.p as usize).copied().collect());
            for (g, m) in self.squarefree(&root) {
                out.push((g, m * self.p as usize));
            }
        }
        out
    }

    /// Distinct-degree factorization of a square-free monic polynomial.
    pub fn distinct_degree(&self, a: &PolyMod) -> Vec<(PolyMod, usize)> {
        let mut out = Vec::new();
        let mut rest = a.clone();
        let mut h = PolyMod::x();
        let mut k = 0;
        let p = BigUint::from(self.p);
        while rest.degree().unwrap_or(0) >= 2 * (k + 1) {
            k += 1;
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &PolyMod::x()));
            if !g.is_one() {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, k));
            }
        }
        if let Some(d) = rest.degree() {
            if d > 0 {
                out.push((rest, d));
            }
        }
        out
    }

    /// Splits a product of distinct irreducibles of common degree `k`.
    pub fn equal_degree(&self, a: &PolyMod, k: usize, rng: &mut ChaCha8Rng) -> Vec<PolyMod> {
        let d = a.degree().unwrap_or(0);
        if d == k {
            return vec![a.clone()];
        }
        if d == 0 {
            return vec![];
        }
        loop {
            let r = PolyMod::new((0..d).map(|_| rng.gen_range(0..self.p)).collect());
            if r.degree().unwrap_or(0) == 0 {
                continue;
            }
            let candidate = if self.p == 2 {
                // Trace map r + r^2 + ... + r^(2^(k-1)).
                let mut t = r.clone();
                let mut acc = r.clone();
                for _ in 1..k {
                    t = self.rem(&self.mul(&t, &t), a);
                    acc = self.add(&acc, &t);
                }
                acc
            } else {
                let e = (BigUint::from(self.p).pow(k as u32) - 1u32) / 2u32;
                self.sub(&self.pow_mod(&r, &e, a), &PolyMod::one())
            };
            let g = self.gcd(a, &candidate);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < d {
                let h = self.divrem(a, &g).0;
                let mut parts = self.equal_degree(&g, k, rng);
                parts.extend(self.equal_degree(&h, k, rng));
                return parts;
            }
        }
    }

    /// Complete factorization of a monic polynomial into monic irreducibles
    /// with multiplicities, sorted for determinism.
    pub fn factor(&self, a: &PolyMod) -> Vec<(PolyMod, usize)> {
        let a = self.monic(a);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.p);
        let mut out = Vec::new();
        for (sf, mult) in self.squarefree(&a) {
            for (block, k) in self.distinct_degree(&sf) {
                for g in self.equal_degree(&block, k, &mut rng) {
                    out.push((g, mult));
                }
            }
        }
        out.sort();
        out
    }

    /// Roots in F_p with multiplicities, ascending.
    pub fn roots(&self, a: &PolyMod) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = self
            .factor(a)
            .into_iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, m)| ((self.p - g.c[0]) % self.p, m))
            .collect();
        out.sort();
        out
    }
}
