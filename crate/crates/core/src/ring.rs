//! Exact arithmetic in the order `Z[θ] = Z[x]/(f)` for a monic integer `f`.

use crate::error::{Error, Result};
use crate::irreducible::{is_irreducible, resultant};
use crate::linalg::{self, Matrix};
use crate::poly;
use crate::serde_int;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// How the irreducibility of the defining polynomial was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Verified,
    Trusted,
}

/// The order `Z[θ]` cut out by a monic irreducible polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberRing {
    f: Vec<BigInt>,
    irreducibility: Irreducibility,
}

/// JSON form `{"f": [1, 0, 1]}` (little-endian coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRepr {
    #[serde(with = "serde_int::vec")]
    pub f: Vec<BigInt>,
}

impl NumberRing {
    /// Builds the ring after checking that `f` is monic and irreducible.
    pub fn new(f: Vec<BigInt>) -> Result<Arc<Self>> {
        Self::with_check(f, true)
    }

    /// As [`NumberRing::new`]; with `check_irreducible == false` the
    /// polynomial is trusted and recorded as such.
    pub fn with_check(f: Vec<BigInt>, check_irreducible: bool) -> Result<Arc<Self>> {
        let f = poly::trimmed(f);
        let d = poly::degree(&f).ok_or(Error::ZeroDegree)?;
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        if !f[d].is_one() {
            return Err(Error::NotMonic);
        }
        let irreducibility = if check_irreducible {
            if !is_irreducible(&f) {
                return Err(Error::Reducible);
            }
            Irreducibility::Verified
        } else {
            Irreducibility::Trusted
        };
        Ok(Arc::new(NumberRing { f, irreducibility }))
    }

    /// The rational integers, `f = x`.
    pub fn integers() -> Arc<Self> {
        Arc::new(NumberRing {
            f: vec![BigInt::zero(), BigInt::one()],
            irreducibility: Irreducibility::Verified,
        })
    }

    /// Gaussian integers, `f = x^2 + 1`.
    pub fn gaussian() -> Arc<Self> {
        Arc::new(NumberRing {
            f: vec![BigInt::one(), BigInt::zero(), BigInt::one()],
            irreducibility: Irreducibility::Verified,
        })
    }

    pub fn parse(text: &str) -> Result<Arc<Self>> {
        Self::new(poly::parse(text)?)
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.f
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn repr(&self) -> RingRepr {
        RingRepr { f: self.f.clone() }
    }

    pub fn from_repr(repr: RingRepr) -> Result<Arc<Self>> {
        Self::new(repr.f)
    }

    pub fn describe(&self) -> String {
        poly::format(&self.f, "x")
    }
}

/// An element of `Z[θ]`: `coeffs[i]` multiplies `θ^i`.
#[derive(Clone)]
pub struct AlgebraicInt {
    coeffs: Vec<BigInt>,
    ring: Arc<NumberRing>,
}

/// JSON form `{"coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRepr {
    #[serde(with = "serde_int::vec")]
    pub coeffs: Vec<BigInt>,
}

impl PartialEq for AlgebraicInt {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for AlgebraicInt {}

impl std::hash::Hash for AlgebraicInt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

fn same_ring(a: &Arc<NumberRing>, b: &Arc<NumberRing>) -> bool {
    Arc::ptr_eq(a, b) || a.f == b.f
}

impl Serialize for AlgebraicInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr().serialize(s)
    }
}

impl fmt::Debug for AlgebraicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicInt({})", self)
    }
}

impl fmt::Display for AlgebraicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly::format(&self.coeffs, "θ"))
    }
}

impl AlgebraicInt {
    /// Builds an element from exactly `d` coefficients.
    pub fn new(ring: &Arc<NumberRing>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != ring.degree() {
            return Err(Error::WrongLength {
                expected: ring.degree(),
                got: coeffs.len(),
            });
        }
        Ok(AlgebraicInt {
            coeffs,
            ring: Arc::clone(ring),
        })
    }

    /// Reduces an arbitrary integer polynomial in `θ` modulo `f`.
    pub fn from_poly(ring: &Arc<NumberRing>, p: &[BigInt]) -> Self {
        let mut coeffs = p.to_vec();
        reduce_mod(&mut coeffs, &ring.f);
        AlgebraicInt {
            coeffs,
            ring: Arc::clone(ring),
        }
    }

    pub fn parse(ring: &Arc<NumberRing>, text: &str) -> Result<Self> {
        Ok(Self::from_poly(ring, &poly::parse(text)?))
    }

    pub fn from_int(ring: &Arc<NumberRing>, n: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); ring.degree()];
        coeffs[0] = n.into();
        AlgebraicInt {
            coeffs,
            ring: Arc::clone(ring),
        }
    }

    pub fn zero(ring: &Arc<NumberRing>) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: &Arc<NumberRing>) -> Self {
        Self::from_int(ring, 1)
    }

    /// The generator `θ` itself (equal to `-f(0)` when `d = 1`).
    pub fn theta(ring: &Arc<NumberRing>) -> Self {
        Self::from_poly(ring, &[BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn ring(&self) -> &Arc<NumberRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(n)` when the element is a rational integer.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn repr(&self) -> ElementRepr {
        ElementRepr {
            coeffs: self.coeffs.clone(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        AlgebraicInt {
            coeffs,
            ring: Arc::clone(&self.ring),
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        AlgebraicInt {
            coeffs,
            ring: Arc::clone(&self.ring),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.ring.degree();
        if d == 1 {
            return AlgebraicInt {
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
                ring: Arc::clone(&self.ring),
            };
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        reduce_mod(&mut prod, &self.ring.f);
        AlgebraicInt {
            coeffs: prod,
            ring: Arc::clone(&self.ring),
        }
    }

    /// Multiplies every coefficient by a rational integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        AlgebraicInt {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            ring: Arc::clone(&self.ring),
        }
    }

    /// `self^n` by binary exponentiation.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// The norm `N(a) = Res(f, a)`.
    pub fn norm(&self) -> BigInt {
        if self.ring.degree() == 1 {
            // θ = -f(0); no need for a determinant.
            return self.coeffs[0].clone();
        }
        resultant(&self.ring.f, &poly::trimmed(self.coeffs.clone()))
    }

    /// Matrix of multiplication by `self` in the power basis; column `j`
    /// holds the coordinates of `self * θ^j`.
    pub fn multiplication_matrix(&self) -> Matrix {
        let d = self.ring.degree();
        let mut m = vec![vec![BigInt::zero(); d]; d];
        let mut col = self.clone();
        let theta = Self::theta(&self.ring);
        for j in 0..d {
            for (i, c) in col.coeffs.iter().enumerate() {
                m[i][j] = c.clone();
            }
            if j + 1 < d {
                col = col.mul_unchecked(&theta);
            }
        }
        m
    }

    /// Returns `q` with `self = divisor * q` if such `q` exists in `Z[θ]`.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check(divisor)?;
        let inverse = ScaledInverse::new(divisor)?;
        Ok(inverse.divide(self))
    }
}

/// `divisor^-1 = numer / denom` in `Q[x]/(f)`, precomputed so that repeated
/// exact divisions by the same element cost one multiplication each.
#[derive(Debug, Clone)]
pub struct ScaledInverse {
    numer: AlgebraicInt,
    denom: BigInt,
}

impl ScaledInverse {
    pub fn new(divisor: &AlgebraicInt) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = divisor.ring();
        let d = ring.degree();
        let mut e0 = vec![BigInt::zero(); d];
        e0[0] = BigInt::one();
        let x = linalg::solve(&divisor.multiplication_matrix(), &e0).ok_or(Error::DivisionByZero)?;
        let denom = x.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let coeffs = x.iter().map(|r| r.numer() * (&denom / r.denom())).collect();
        Ok(ScaledInverse {
            numer: AlgebraicInt {
                coeffs,
                ring: Arc::clone(ring),
            },
            denom,
        })
    }

    pub fn divide(&self, a: &AlgebraicInt) -> Option<AlgebraicInt> {
        let prod = a.mul_unchecked(&self.numer);
        if self.denom.is_one() {
            return Some(prod);
        }
        let mut coeffs = Vec::with_capacity(prod.coeffs.len());
        for c in prod.coeffs {
            let (q, r) = c.div_rem(&self.denom);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(AlgebraicInt {
            coeffs,
            ring: prod.ring,
        })
    }
}

/// Reduces a polynomial modulo monic `f`, leaving exactly `deg f` coefficients.
fn reduce_mod(p: &mut Vec<BigInt>, f: &[BigInt]) {
    let d = f.len() - 1;
    for k in (d..p.len()).rev() {
        let c = std::mem::take(&mut p[k]);
        if c.is_zero() {
            continue;
        }
        for i in 0..d {
            if !f[i].is_zero() {
                p[k - d + i] -= &c * &f[i];
            }
        }
    }
    p.resize(d, BigInt::zero());
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&AlgebraicInt> for &AlgebraicInt {
            type Output = AlgebraicInt;
            /// Panics if the operands live in different rings; use the
            /// `try_*` methods to get an error instead.
            fn $method(self, rhs: &AlgebraicInt) -> AlgebraicInt {
                self.check(rhs).expect("ring mismatch");
                self.$inner(rhs)
            }
        }
        impl $tr<AlgebraicInt> for AlgebraicInt {
            type Output = AlgebraicInt;
            fn $method(self, rhs: AlgebraicInt) -> AlgebraicInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, add_unchecked);
forward_op!(Sub, sub, sub_unchecked);
forward_op!(Mul, mul, mul_unchecked);

impl Neg for &AlgebraicInt {
    type Output = AlgebraicInt;
    fn neg(self) -> AlgebraicInt {
        AlgebraicInt {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ring: Arc::clone(&self.ring),
        }
    }
}

impl Neg for AlgebraicInt {
    type Output = AlgebraicInt;
    fn neg(self) -> AlgebraicInt {
        -&self
    }
}

/// Absolute value of a norm as `u64`, or an error when it is out of range.
pub fn norm_abs_u64(n: &BigInt) -> Result<u64> {
    use num_traits::ToPrimitive;
    n.abs()
        .to_u64()
        .ok_or_else(|| Error::NormTooLarge(n.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn el(ring: &Arc<NumberRing>, c: &[i64]) -> AlgebraicInt {
        AlgebraicInt::new(ring, c.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn cubic() -> Arc<NumberRing> {
        NumberRing::parse("x^3-x-1").unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(NumberRing::parse("x").unwrap().degree(), 1);
        assert_eq!(NumberRing::parse("x^2+1").unwrap().degree(), 2);
        let r = NumberRing::parse("x^2-2x+2").unwrap();
        // 1+i is a root: (1+i)^2 - 2(1+i) + 2 = 2i - 2 - 2i + 2 = 0
        let g = NumberRing::gaussian();
        let one_plus_i = el(&g, &[1, 1]);
        let val = &(&one_plus_i * &one_plus_i) - &one_plus_i.scale(&BigInt::from(2));
        assert!((&val + &AlgebraicInt::from_int(&g, 2)).is_zero());
        assert_eq!(r.degree(), 2);
        assert_eq!(NumberRing::parse("2x^2+1").unwrap_err(), Error::NotMonic);
        assert_eq!(NumberRing::parse("x^2-1").unwrap_err(), Error::Reducible);
        assert_eq!(NumberRing::parse("5").unwrap_err(), Error::ZeroDegree);
        let trusted = NumberRing::with_check(poly::parse("x^2-1").unwrap(), false).unwrap();
        assert_eq!(trusted.irreducibility(), Irreducibility::Trusted);
    }

    #[test]
    fn multiplication_examples() {
        let g = NumberRing::gaussian();
        assert_eq!(&el(&g, &[-1, 1]) * &el(&g, &[-1, 1]), el(&g, &[0, -2]));
        let z = NumberRing::integers();
        assert_eq!(&el(&z, &[2]) * &el(&z, &[3]), el(&z, &[6]));
        let c = cubic();
        assert_eq!(&el(&c, &[0, 0, 1]) * &el(&c, &[0, 1, 0]), el(&c, &[1, 1, 0]));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = el(&NumberRing::gaussian(), &[1, 1]);
        let b = el(&NumberRing::parse("x^2+2").unwrap(), &[1, 1]);
        assert_eq!(a.try_mul(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.try_add(&b).unwrap_err(), Error::RingMismatch);
        assert!(AlgebraicInt::new(&NumberRing::gaussian(), vec![BigInt::one()]).is_err());
    }

    #[test]
    fn norm_examples() {
        let g = NumberRing::gaussian();
        assert_eq!(el(&g, &[-1, 1]).norm(), BigInt::from(2));
        assert_eq!(el(&NumberRing::integers(), &[3]).norm(), BigInt::from(3));
        assert_eq!(el(&cubic(), &[0, 1, 0]).norm(), BigInt::from(1));
        assert_eq!(el(&g, &[0, 0]).norm(), BigInt::zero());
    }

    #[test]
    fn norm_equals_multiplication_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ring in [NumberRing::gaussian(), cubic(), NumberRing::parse("x^4+1").unwrap()] {
            for _ in 0..30 {
                let c: Vec<i64> = (0..ring.degree()).map(|_| rng.gen_range(-9..=9)).collect();
                let a = el(&ring, &c);
                assert_eq!(a.norm(), linalg::det(&a.multiplication_matrix()));
            }
        }
    }

    #[test]
    fn exact_division_examples() {
        let g = NumberRing::gaussian();
        let q = el(&g, &[0, -2]).divide_exact(&el(&g, &[-1, 1])).unwrap();
        assert_eq!(q, Some(el(&g, &[-1, 1])));
        let q = el(&g, &[-2, 0]).divide_exact(&el(&g, &[-1, 1])).unwrap();
        assert_eq!(q, Some(el(&g, &[1, 1])));
        let z = NumberRing::integers();
        assert_eq!(el(&z, &[7]).divide_exact(&el(&z, &[3])).unwrap(), None);
        assert_eq!(
            el(&g, &[0, 0]).divide_exact(&el(&g, &[3, 1])).unwrap(),
            Some(el(&g, &[0, 0]))
        );
        assert_eq!(
            el(&g, &[1, 0]).divide_exact(&el(&g, &[0, 0])).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn power_examples() {
        let z = NumberRing::integers();
        assert_eq!(el(&z, &[2]).pow(8), el(&z, &[256]));
        let g = NumberRing::gaussian();
        assert_eq!(el(&g, &[5, 3]).pow(0), el(&g, &[1, 0]));
        let b = el(&g, &[-1, 1]);
        assert_eq!(b.pow(4), &(&(&b * &b) * &b) * &b);
        assert_eq!(b.pow(4), el(&g, &[-4, 0]));
    }

    #[test]
    fn shifted_linear_ring() {
        // f = x - 5 means θ = 5.
        let r = NumberRing::new(vec![BigInt::from(-5), BigInt::one()]).unwrap();
        assert_eq!(AlgebraicInt::theta(&r), el(&r, &[5]));
    }
}
