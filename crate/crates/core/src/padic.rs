//! Degree-one prime ideals above `beta`, q-adic numbers at finite precision,
//! and the analytic interpolation `G_l(x) = alpha^l exp(x log alpha^u)`.
//!
//! A degree-one unramified prime `P` of `Z[θ]` above `q` is modelled by a
//! simple root `r` of `f` modulo `q`, lifted to `q^K`; the completion at `P`
//! is then `Z_q` with `θ -> r`, so every computation reduces to integers
//! modulo `q^K`.

use crate::arith::{self, factor, valuation};
use crate::error::{Error, Result};
use crate::poly;
use crate::polymod::{Fp, PolyMod};
use crate::ring::{norm_abs_u64, AlgebraicInt, NumberRing};
use crate::serde_int;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_PRECISION: u32 = 64;
/// `vp` doubles the precision at most this many times.
pub const MAX_DOUBLINGS: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisMode {
    /// Ramified primes and primes of inertia degree > 1 are errors.
    #[default]
    Theorem,
    /// Such primes are returned flagged.
    Exploration,
}

impl HypothesisMode {
    pub fn name(self) -> &'static str {
        match self {
            HypothesisMode::Theorem => "theorem",
            HypothesisMode::Exploration => "exploration",
        }
    }
}

impl std::str::FromStr for HypothesisMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(HypothesisMode::Theorem),
            "exploration" => Ok(HypothesisMode::Exploration),
            _ => Err(Error::Parse(format!("unknown hypothesis mode {s:?}"))),
        }
    }
}

/// A `v`-adic valuation, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u32(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// An element of `Z_q` known modulo `q^K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PadicInt {
    q: u64,
    #[serde(rename = "K")]
    k: u32,
    #[serde(with = "serde_int::decimal")]
    value: BigInt,
}

impl PadicInt {
    pub fn new(value: impl Into<BigInt>, q: u64, k: u32) -> Self {
        let m = BigInt::from(q).pow(k);
        PadicInt {
            q,
            k,
            value: value.into().mod_floor(&m),
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.q).pow(self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Valuation, `Infinite` when the value vanishes at this precision.
    pub fn valuation(&self) -> Valuation {
        match valuation(&self.value, self.q) {
            Some(v) => Valuation::Finite(v),
            None => Valuation::Infinite,
        }
    }

    /// Forgets digits beyond `k`.
    pub fn with_precision(&self, k: u32) -> Result<Self> {
        if k > self.k {
            return Err(Error::PrecisionMismatch);
        }
        Ok(PadicInt::new(self.value.clone(), self.q, k))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.q == other.q && self.k == other.k {
            Ok(())
        } else {
            Err(Error::PrecisionMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PadicInt::new(&self.value + &other.value, self.q, self.k))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PadicInt::new(&self.value - &other.value, self.q, self.k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PadicInt::new(&self.value * &other.value, self.q, self.k))
    }

    pub fn pow(&self, n: u64) -> Self {
        PadicInt {
            q: self.q,
            k: self.k,
            value: self.value.modpow(&BigInt::from(n), &self.modulus()),
        }
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.value, self.q, self.k)
    }
}

/// A prime `P` above `q` dividing `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdealModel {
    pub q: u64,
    /// Root of `f` modulo `q^K` (modulo `q` only, for flagged primes).
    #[serde(with = "serde_int::decimal")]
    pub root: BigInt,
    #[serde(rename = "K")]
    pub k: u32,
    /// `v_P(beta)`; absent for flagged primes.
    pub e: Option<u32>,
    pub unramified: bool,
    pub degree_one: bool,
    /// Degree of the residue-field polynomial.
    pub inertia: usize,
}

impl PrimeIdealModel {
    pub fn admitted(&self) -> bool {
        self.unramified && self.degree_one
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.q).pow(self.k)
    }

    /// The same prime with its root lifted to precision `k`.
    pub fn lifted(&self, ring: &NumberRing, k: u32) -> Self {
        let root = hensel_lift(ring.modulus(), &self.root, self.q, k);
        PrimeIdealModel { root, k, ..self.clone() }
    }

    /// Image of `alpha` in `Z_q / q^K`.
    pub fn image(&self, alpha: &AlgebraicInt) -> PadicInt {
        let m = self.modulus();
        PadicInt::new(poly::eval_mod(alpha.coeffs(), &self.root, &m), self.q, self.k)
    }
}

/// Lifts a simple root `r` of `f` modulo `q` to a root modulo `q^k`
/// by Newton iteration.
pub fn hensel_lift(f: &[BigInt], r: &BigInt, q: u64, k: u32) -> BigInt {
    let df = poly::derivative(f);
    let qb = BigInt::from(q);
    let target = qb.pow(k);
    let mut r = r.mod_floor(&qb);
    let mut prec = 1u32;
    while prec < k {
        prec = (2 * prec).min(k);
        let m = qb.pow(prec);
        let fr = poly::eval_mod(f, &r, &m);
        let dr = poly::eval_mod(&df, &r, &m);
        let inv = mod_inverse(&dr, &m).expect("root is simple");
        r = (r - fr * inv).mod_floor(&m);
    }
    r.mod_floor(&target)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// All primes of `Z[θ]` containing `beta`.
///
/// Degree-one primes where `f` has a simple root are returned with
/// a Hensel-lifted root and `e = v_P(beta)`. Other primes are errors in
/// theorem mode and flagged models in exploration mode.
pub fn primes_above(ring: &Arc<NumberRing>, beta: &AlgebraicInt, k: u32, mode: HypothesisMode) -> Result<Vec<PrimeIdealModel>> {
    let n = beta.norm();
    let m = norm_abs_u64(&n)?;
    if m <= 1 {
        return Err(Error::NormTooSmall(n.to_string()));
    }
    let k = k.max(2);
    let mut out = Vec::new();
    for (q, _) in factor(m) {
        let fp = Fp::new(q);
        let beta_bar = PolyMod::from_int(beta.coeffs(), q);
        for (g, mult) in fp.factor(&PolyMod::from_int(ring.modulus(), q)) {
            if !fp.rem(&beta_bar, &g).is_zero() {
                continue;
            }
            let degree = g.degree().unwrap_or(0);
            let unramified = mult == 1;
            let degree_one = degree == 1;
            if mode == HypothesisMode::Theorem {
                if !degree_one {
                    return Err(Error::NotDegreeOne { q, degree });
                }
                if !unramified {
                    return Err(Error::RamifiedPrime { q });
                }
            }
            let r0 = if degree_one { BigInt::from((q - g.c[0]) % q) } else { BigInt::zero() };
            let mut model = PrimeIdealModel {
                q,
                root: r0,
                k: 1,
                e: None,
                unramified,
                degree_one,
                inertia: degree,
            };
            if model.admitted() {
                model = model.lifted(ring, k);
                model.e = vp(beta, &model, ring)?.finite();
            }
            out.push(model);
        }
    }
    Ok(out)
}

/// `v_P(alpha)`, doubling the precision while the image vanishes.
pub fn vp(alpha: &AlgebraicInt, model: &PrimeIdealModel, ring: &NumberRing) -> Result<Valuation> {
    if alpha.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let mut model = model.clone();
    for _ in 0..=MAX_DOUBLINGS {
        if let Valuation::Finite(v) = model.image(alpha).valuation() {
            return Ok(Valuation::Finite(v));
        }
        let k = model.k * 2;
        model = model.lifted(ring, k);
    }
    Err(Error::PrecisionExhausted(model.k))
}

/// The q-adic logarithm `sum (-1)^(n+1) (x-1)^n / n` for `v(x-1) >= 2`.
///
/// The result carries the full input precision: the series is summed with
/// enough guard digits to absorb the division by `n`.
pub fn padic_log(x: &PadicInt) -> Result<PadicInt> {
    let (q, k) = (x.q, x.k);
    let y = &x.value - 1;
    let t = match valuation(&y, q) {
        None => return Ok(PadicInt::new(0, q, k)),
        Some(t) if t >= 2 => t as u64,
        Some(t) => return Err(Error::OutOfDomain(format!("v_{q}(x - 1) = {t} < 2"))),
    };
    // Terms with n t - v_q(n) >= K vanish; the left side increases with n.
    let mut last = 1u64;
    while (last + 1) * t < k as u64 + ilog(last + 1, q) as u64 {
        last += 1;
    }
    let guard = ilog(last, q);
    let work = BigInt::from(q).pow(k + guard);
    let target = x.modulus();
    let qb = BigInt::from(q);
    let mut sum = BigInt::zero();
    let mut power = BigInt::one();
    for n in 1..=last {
        power = (power * &y).mod_floor(&work);
        let v = arith::valuation_u64(n, q).unwrap_or(0);
        let unit = n / q.pow(v);
        let term = (&power / qb.pow(v)) * mod_inverse(&BigInt::from(unit), &target).unwrap();
        if n % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(PadicInt::new(sum, q, k))
}

/// The q-adic exponential `sum x^n / n!` for `v(x) >= 1` (`>= 2` when q = 2).
pub fn padic_exp(x: &PadicInt) -> Result<PadicInt> {
    let (q, k) = (x.q, x.k);
    let min = if q == 2 { 2 } else { 1 };
    let s = match valuation(&x.value, q) {
        None => return Ok(PadicInt::new(1, q, k)),
        Some(s) if s >= min => s as u64,
        Some(s) => return Err(Error::OutOfDomain(format!("v_{q}(x) = {s} < {min}"))),
    };
    // v(x^n / n!) >= n s - (n - 1)/(q - 1), increasing in n.
    let mut last = 1u64;
    while (last + 1) * s * (q - 1) < k as u64 * (q - 1) + last {
        last += 1;
    }
    let guard = arith::factorial_valuation(last, q) as u32;
    let work = BigInt::from(q).pow(k + guard);
    let target = x.modulus();
    let qb = BigInt::from(q);
    let mut sum = BigInt::one();
    let mut power = BigInt::one();
    let mut fact_v = 0u32;
    let mut unit_inv = BigInt::one();
    for n in 1..=last {
        power = (power * &x.value).mod_floor(&work);
        let v = arith::valuation_u64(n, q).unwrap_or(0);
        fact_v += v;
        let unit = n / q.pow(v);
        unit_inv = (unit_inv * mod_inverse(&BigInt::from(unit), &target).unwrap()).mod_floor(&target);
        sum += (&power / qb.pow(fact_v)) * &unit_inv;
    }
    Ok(PadicInt::new(sum, q, k))
}

fn ilog(n: u64, q: u64) -> u32 {
    if n == 0 {
        0
    } else {
        n.ilog(q)
    }
}

/// Least `u >= 1` with `v_P(alpha^u - 1) >= 2`: the order of `alpha` in
/// `(Z/q^2)^*`, found among the divisors of `q (q - 1)`.
pub fn unit_order_u(alpha: &AlgebraicInt, model: &PrimeIdealModel) -> Result<u64> {
    let q = model.q;
    let q2 = BigInt::from(q * q);
    let a = poly::eval_mod(alpha.coeffs(), &model.root, &q2);
    if (&a % q).is_zero() {
        return Err(Error::NotCoprime { q });
    }
    let order = arith::divisors(q * (q - 1))
        .into_iter()
        .find(|&d| a.modpow(&BigInt::from(d), &q2).is_one())
        .expect("group order annihilates every unit");
    Ok(order)
}

/// `(product, lcm)` of the per-prime orders; the product is what the
/// counting bound uses.
pub fn combined_u(alpha: &AlgebraicInt, models: &[PrimeIdealModel]) -> Result<(u64, u64)> {
    let mut product = 1u64;
    let mut lcm = 1u64;
    for model in models.iter().filter(|m| m.admitted()) {
        let u = unit_order_u(alpha, model)?;
        product = product
            .checked_mul(u)
            .ok_or_else(|| Error::InvalidArgument("u overflows 64 bits".into()))?;
        lcm = lcm.lcm(&u);
    }
    Ok((product, lcm))
}

/// `G_l(x) = alpha^l exp(x log(alpha^u))` at the prime `model`.
pub fn interpolate_g(alpha: &AlgebraicInt, l: u64, u: u64, x: &PadicInt, model: &PrimeIdealModel) -> Result<PadicInt> {
    if x.q != model.q || x.k > model.k {
        return Err(Error::PrecisionMismatch);
    }
    let a = model.image(alpha).with_precision(x.k)?;
    let log = padic_log(&a.pow(u)).map_err(|e| Error::HypothesisViolated(format!("alpha^u outside the log domain: {e}")))?;
    let e = padic_exp(&x.mul(&log)?)?;
    a.pow(l).mul(&e)
}

/// Constants `(m0, n0)` with `v_P(G_l(x) - G_l(y)) <= v_P(x - y) + n0` at every
/// prime; in fact equality holds with `n0 = v_P(log alpha^u)`.
pub fn lipschitz_constants(alpha: &AlgebraicInt, u: u64, models: &[PrimeIdealModel]) -> Result<(u32, u32)> {
    let mut n0 = 0;
    for model in models.iter().filter(|m| m.admitted()) {
        let log = padic_log(&model.image(alpha).pow(u))?;
        match log.valuation() {
            Valuation::Finite(v) => n0 = n0.max(v),
            Valuation::Infinite => return Err(Error::RootOfUnity { order: u }),
        }
    }
    Ok((0, n0))
}

/// Rational prime `q` as a degree-one model of `Z` (handy for tests and the
/// rational fast paths).
pub fn rational_model(q: u64, k: u32) -> PrimeIdealModel {
    PrimeIdealModel {
        q,
        root: BigInt::zero(),
        k,
        e: Some(1),
        unramified: true,
        degree_one: true,
        inertia: 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn el(ring: &Arc<NumberRing>, c: &[i64]) -> AlgebraicInt {
        AlgebraicInt::new(ring, c.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn primes_above_examples() {
        let z = NumberRing::integers();
        let ms = primes_above(&z, &el(&z, &[3]), 10, HypothesisMode::Theorem).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!((ms[0].q, ms[0].e, ms[0].admitted()), (3, Some(1), true));

        let g = NumberRing::gaussian();
        assert_eq!(
            primes_above(&g, &el(&g, &[-1, 1]), 10, HypothesisMode::Theorem).unwrap_err(),
            Error::RamifiedPrime { q: 2 }
        );
        let flagged = primes_above(&g, &el(&g, &[-1, 1]), 10, HypothesisMode::Exploration).unwrap();
        assert!(!flagged[0].unramified && flagged[0].e.is_none());

        let ms = primes_above(&g, &el(&g, &[2, 1]), 10, HypothesisMode::Theorem).unwrap();
        assert_eq!(ms.len(), 1);
        // 2 + θ vanishes at θ = -2 = 3 mod 5.
        assert_eq!((&ms[0].root % 5u32).to_u64(), Some(3));
        assert_eq!(ms[0].e, Some(1));

        assert_eq!(
            primes_above(&g, &el(&g, &[3, 0]), 10, HypothesisMode::Theorem).unwrap_err(),
            Error::NotDegreeOne { q: 3, degree: 2 }
        );
    }

    #[test]
    fn norm_is_product_of_prime_powers() {
        let g = NumberRing::gaussian();
        for c in [[2, 1], [5, 0], [3, 4], [1, 4], [7, 2]] {
            let beta = el(&g, &c);
            let ms = primes_above(&g, &beta, 8, HypothesisMode::Theorem).unwrap();
            let prod: u64 = ms.iter().map(|m| m.q.pow(m.e.unwrap())).product();
            assert_eq!(BigInt::from(prod), beta.norm(), "{beta}");
        }
    }

    #[test]
    fn hensel_root_mod_25() {
        let g = NumberRing::gaussian();
        let r = hensel_lift(g.modulus(), &BigInt::from(2), 5, 2);
        assert_eq!(r, BigInt::from(7));
        let model = PrimeIdealModel {
            q: 5,
            root: r,
            k: 2,
            e: Some(1),
            unramified: true,
            degree_one: true,
            inertia: 1,
        };
        assert_eq!(vp(&el(&g, &[2, -1]), &model, &g).unwrap(), Valuation::Finite(1));
        // v_P(5) = 1 at precision 1 forces a relift.
        let low = PrimeIdealModel { k: 1, root: BigInt::from(2), ..model };
        assert_eq!(vp(&el(&g, &[25, 0]), &low, &g).unwrap(), Valuation::Finite(2));
    }

    #[test]
    fn rational_valuations() {
        let z = NumberRing::integers();
        let m = rational_model(3, 4);
        assert_eq!(vp(&el(&z, &[18]), &m, &z).unwrap(), Valuation::Finite(2));
        assert_eq!(vp(&el(&z, &[63]), &m, &z).unwrap(), Valuation::Finite(2));
        assert_eq!(vp(&el(&z, &[0]), &m, &z).unwrap(), Valuation::Infinite);
    }

    #[test]
    fn log_exp_examples() {
        assert!(padic_log(&PadicInt::new(1, 3, 20)).unwrap().is_zero());
        let l = padic_log(&PadicInt::new(64, 3, 20)).unwrap();
        assert_eq!(l.valuation(), Valuation::Finite(2));
        assert!(matches!(padic_log(&PadicInt::new(4, 3, 20)), Err(Error::OutOfDomain(_))));
        assert_eq!(padic_exp(&PadicInt::new(0, 3, 20)).unwrap(), PadicInt::new(1, 3, 20));
        assert_eq!(padic_exp(&l).unwrap(), PadicInt::new(64, 3, 20));
        assert!(matches!(padic_exp(&PadicInt::new(2, 2, 20)), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn log_matches_rational_series_oracle() {
        // Sum the series exactly over the rationals well past convergence.
        use num_rational::BigRational;
        let (q, k) = (5u64, 12u32);
        let y = BigInt::from(50);
        let mut exact = BigRational::zero();
        for n in 1..60i64 {
            let term = BigRational::new(y.pow(n as u32), BigInt::from(n));
            exact = if n % 2 == 1 { exact + term } else { exact - term };
        }
        let m = BigInt::from(q).pow(k);
        let den_inv = mod_inverse(exact.denom(), &m).unwrap();
        let expect = (exact.numer() * den_inv).mod_floor(&m);
        assert_eq!(padic_log(&PadicInt::new(51, q, k)).unwrap().value(), &expect);
    }

    #[test]
    fn exp_log_inverse_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [2u64, 3, 5, 7] {
            let k = 24;
            let m = BigInt::from(q).pow(k);
            for _ in 0..100 {
                let y = BigInt::from(q * q) * BigInt::from(rng.gen::<u64>()) % &m;
                let x = PadicInt::new(&y + 1, q, k);
                let l = padic_log(&x).unwrap();
                assert_eq!(padic_exp(&l).unwrap(), x);
                let z = PadicInt::new(y, q, k);
                assert_eq!(padic_log(&padic_exp(&z).unwrap()).unwrap(), z);
            }
        }
    }

    #[test]
    fn unit_orders() {
        let z = NumberRing::integers();
        let two = el(&z, &[2]);
        assert_eq!(unit_order_u(&two, &rational_model(3, 4)).unwrap(), 6);
        assert_eq!(unit_order_u(&two, &rational_model(5, 4)).unwrap(), 20);
        assert_eq!(unit_order_u(&el(&z, &[1]), &rational_model(7, 4)).unwrap(), 1);
        assert_eq!(unit_order_u(&el(&z, &[6]), &rational_model(3, 4)).unwrap_err(), Error::NotCoprime { q: 3 });
        let models = primes_above(&z, &el(&z, &[15]), 8, HypothesisMode::Theorem).unwrap();
        assert_eq!(combined_u(&two, &models).unwrap(), (120, 60));
        assert_eq!(combined_u(&el(&z, &[1]), &models).unwrap(), (1, 1));
    }

    #[test]
    fn interpolation_examples() {
        let z = NumberRing::integers();
        let two = el(&z, &[2]);
        let m = rational_model(3, 10);
        let g = |l, n| interpolate_g(&two, l, 6, &PadicInt::new(n, 3, 10), &m).unwrap();
        assert_eq!(g(0, 2), PadicInt::new(4096, 3, 10));
        assert_eq!(g(1, 0), PadicInt::new(2, 3, 10));
        assert_eq!(g(1, 1), PadicInt::new(128, 3, 10));
    }

    #[test]
    fn lipschitz_examples() {
        let z = NumberRing::integers();
        let two = el(&z, &[2]);
        assert_eq!(lipschitz_constants(&two, 6, &[rational_model(3, 20)]).unwrap(), (0, 2));
        assert_eq!(lipschitz_constants(&el(&z, &[10]), 1, &[rational_model(3, 20)]).unwrap(), (0, 2));
        let models = primes_above(&z, &el(&z, &[15]), 20, HypothesisMode::Theorem).unwrap();
        // v_3(2^120 - 1) = v_3(2^6 - 1) + v_3(20) = 2 and v_5(2^120 - 1) = 2.
        assert_eq!(lipschitz_constants(&two, 120, &models).unwrap(), (0, 2));
    }

    #[test]
    fn serialization() {
        let x = PadicInt::new(64, 3, 20);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"q":3,"K":20,"value":"64"}"#);
        let back: PadicInt = serde_json::from_str(r#"{"q":3,"K":20,"value":"64"}"#).unwrap();
        assert_eq!(back, x);
    }
}
