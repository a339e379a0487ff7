//! Fixed-point reals with 80 decimal digits after the point, enough to print
//! logarithms, powers and ratios to 30 significant digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::OnceLock;

const SCALE: u32 = 80;
pub const SIGNIFICANT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(BigInt);

fn one() -> &'static BigInt {
    static ONE: OnceLock<BigInt> = OnceLock::new();
    ONE.get_or_init(|| BigInt::from(10).pow(SCALE))
}

fn ln2() -> &'static Fixed {
    static LN2: OnceLock<Fixed> = OnceLock::new();
    LN2.get_or_init(|| atanh(&Fixed::ratio(&BigInt::one(), &BigInt::from(3))).mul_int(2))
}

/// `atanh(z) = z + z^3/3 + z^5/5 + ...` for `|z| <= 1/3`.
fn atanh(z: &Fixed) -> Fixed {
    let z2 = z.mul(z);
    let mut power = z.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !power.0.is_zero() {
        sum += &power.0 / k;
        power = power.mul(&z2);
        k += 2;
    }
    Fixed(sum)
}

impl Fixed {
    pub fn zero() -> Self {
        Fixed(BigInt::zero())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Fixed(n.into() * one())
    }

    /// `p / q`, rounded toward negative infinity.
    pub fn ratio(p: &BigInt, q: &BigInt) -> Self {
        Fixed((p * one()).div_floor(q))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        Fixed(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Fixed) -> Fixed {
        Fixed(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        Fixed((&self.0 * &other.0).div_floor(one()))
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Fixed {
        Fixed(&self.0 * k.into())
    }

    pub fn div(&self, other: &Fixed) -> Fixed {
        Fixed((&self.0 * one()).div_floor(&other.0))
    }

    /// Natural logarithm of a positive integer.
    pub fn ln(n: &BigInt) -> Fixed {
        assert!(n.is_positive(), "logarithm of a non-positive integer");
        let k = n.bits() - 1;
        // n = m 2^k with m in [1, 2); ln m = 2 atanh((m - 1)/(m + 1)).
        let m = Fixed::ratio(n, &(BigInt::one() << k));
        let z = m.sub(&Fixed::from_int(1)).div(&m.add(&Fixed::from_int(1)));
        ln2().mul_int(k).add(&atanh(&z).mul_int(2))
    }

    pub fn exp(&self) -> Fixed {
        // self = k ln2 + r with |r| <= ln2 / 2.
        let k: BigInt = (&self.0 + &ln2().0 / 2u32).div_floor(&ln2().0);
        let r = self.sub(&ln2().mul_int(k.clone()));
        let mut term = Fixed::from_int(1);
        let mut sum = BigInt::zero();
        let mut n = 1u32;
        while !term.0.is_zero() {
            sum += &term.0;
            term = Fixed(term.mul(&r).0 / n);
            n += 1;
        }
        let shift: i64 = k.try_into().expect("exponent in range");
        if shift >= 0 {
            Fixed(sum << shift as usize)
        } else {
            Fixed(sum >> (-shift) as usize)
        }
    }

    /// `n^e` for a positive integer `n`.
    pub fn pow_of(n: &BigInt, e: &Fixed) -> Fixed {
        Fixed::ln(n).mul(e).exp()
    }

    /// Decimal rendering with `digits` significant digits, rounded half up.
    pub fn render(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let negative = self.0.is_negative();
        let mag = self.0.abs();
        let len = mag.to_string().len() as i64;
        let drop = len - digits as i64;
        let mut exp10 = drop - SCALE as i64;
        let mut r = if drop > 0 {
            let p = BigInt::from(10).pow(drop as u32);
            (mag + &p / 2) / p
        } else {
            mag * BigInt::from(10).pow((-drop) as u32)
        };
        if r.to_string().len() > digits {
            r /= 10;
            exp10 += 1;
        }
        let s = r.to_string();
        let body = if exp10 >= 0 {
            format!("{s}{}", "0".repeat(exp10 as usize))
        } else {
            let point = s.len() as i64 + exp10;
            if point > 0 {
                format!("{}.{}", &s[..point as usize], &s[point as usize..])
            } else {
                format!("0.{}{s}", "0".repeat((-point) as usize))
            }
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(SIGNIFICANT))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_constants() {
        assert_eq!(ln2().render(30), "0.693147180559945309417232121458");
        assert_eq!(Fixed::ln(&BigInt::from(10)).render(30), "2.30258509299404568401799145468");
        assert_eq!(Fixed::from_int(1).exp().render(30), "2.71828182845904523536028747135");
        let sigma = Fixed::ln(&BigInt::from(2)).div(&Fixed::ln(&BigInt::from(3)));
        assert_eq!(sigma.render(30), "0.630929753571457437099527114343");
    }

    #[test]
    fn powers_and_rendering() {
        let half = Fixed::ratio(&BigInt::one(), &BigInt::from(2));
        assert_eq!(Fixed::pow_of(&BigInt::from(9), &half).render(30), "3.00000000000000000000000000000");
        assert_eq!(Fixed::from_int(1234).render(3), "1230");
        assert_eq!(Fixed::ratio(&BigInt::one(), &BigInt::from(800)).render(4), "0.001250");
        assert_eq!(Fixed::from_int(-2).exp().render(5), "0.13534");
        assert_eq!(Fixed::ratio(&BigInt::from(-1), &BigInt::from(3)).render(3), "-0.333");
        assert_eq!(Fixed::ratio(&BigInt::from(999_999), &BigInt::from(1000)).render(3), "1000");
    }
}
