//! Dense integer polynomials stored little-endian (`c[i]` is the coefficient of
//! `x^i`), plus the single-variable text grammar used on the command line.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn trimmed(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut p);
    p
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn eval_mod(p: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    p.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

pub fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

/// Exact division by a monic divisor; `None` if the remainder is nonzero.
pub fn div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = degree(b)?;
    debug_assert!(b[db].is_one());
    let mut rem = trimmed(a.to_vec());
    let Some(da) = degree(&rem) else {
        return Some(Vec::new());
    };
    if da < db {
        return None;
    }
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (db..=da).rev() {
        let c = std::mem::take(&mut rem[k]);
        if c.is_zero() {
            continue;
        }
        for i in 0..db {
            rem[k - db + i] -= &c * &b[i];
        }
        quot[k - db] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// Renders ascending in the given variable, e.g. `-1+x` or `1+x^2`.
pub fn format(p: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses an integer polynomial in one variable.
///
/// Accepts terms like `3`, `-x`, `2x`, `2*x^3`, `+ 7 i`; the variable may be
/// any single letter (`x`, `t`, `i`, ...) or `θ`, but must be the same letter
/// throughout. Whitespace is ignored.
pub fn parse(text: &str) -> Result<Vec<BigInt>> {
    let err = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
    let raw: Vec<char> = text.chars().collect();
    for (i, _) in raw.iter().enumerate().filter(|(_, c)| c.is_whitespace()) {
        let before = raw[..i].iter().rev().find(|c| !c.is_whitespace());
        let after = raw[i + 1..].iter().find(|c| !c.is_whitespace());
        if let (Some(a), Some(b)) = (before, after) {
            if a.is_ascii_digit() && b.is_ascii_digit() {
                return Err(err("missing operator"));
            }
        }
    }
    let s: Vec<char> = raw.into_iter().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut var: Option<char> = None;
    let mut pos = 0;
    while pos < s.len() {
        let mut sign = BigInt::one();
        let mut saw_sign = false;
        while pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
            if s[pos] == '-' {
                sign = -sign;
            }
            saw_sign = true;
            pos += 1;
        }
        if pos > 0 && !saw_sign {
            return Err(err("missing operator"));
        }
        let start = pos;
        while pos < s.len() && s[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: Option<BigInt> = if pos > start {
            let digits: String = s[start..pos].iter().collect();
            Some(digits.parse().map_err(|_| err("bad integer"))?)
        } else {
            None
        };
        if pos < s.len() && s[pos] == '*' {
            if coeff.is_none() {
                return Err(err("'*' without coefficient"));
            }
            pos += 1;
        }
        let mut exponent = 0usize;
        if pos < s.len() && s[pos].is_alphabetic() {
            let v = s[pos];
            match var {
                Some(prev) if prev != v => return Err(err("mixed variables")),
                _ => var = Some(v),
            }
            pos += 1;
            exponent = 1;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                let start = pos;
                while pos < s.len() && s[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(err("missing exponent"));
                }
                let digits: String = s[start..pos].iter().collect();
                exponent = digits.parse().map_err(|_| err("bad exponent"))?;
                if exponent > 4096 {
                    return Err(err("exponent too large"));
                }
            }
        } else if coeff.is_none() {
            return Err(err("expected a term"));
        }
        let c = sign * coeff.unwrap_or_else(BigInt::one);
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::zero());
        }
        coeffs[exponent] += c;
    }
    Ok(trimmed(coeffs))
}

/// Splits a comma-separated list of polynomials.
pub fn parse_list(text: &str) -> Result<Vec<Vec<BigInt>>> {
    text.split(',').map(parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("x^2+1").unwrap(), ints(&[1, 0, 1]));
        assert_eq!(parse("-1+x").unwrap(), ints(&[-1, 1]));
        assert_eq!(parse("1+i").unwrap(), ints(&[1, 1]));
        assert_eq!(parse("x^3 - x - 1").unwrap(), ints(&[-1, -1, 0, 1]));
        assert_eq!(parse("2*x^2-2x+2").unwrap(), ints(&[2, -2, 2]));
        assert_eq!(parse("x").unwrap(), ints(&[0, 1]));
        assert_eq!(parse("0").unwrap(), ints(&[]));
        assert_eq!(parse("--3").unwrap(), ints(&[3]));
        assert!(parse("x+y").is_err());
        assert!(parse("3 4").is_err());
        assert!(parse("").is_err());
        assert!(parse("x^").is_err());
    }

    #[test]
    fn format_round_trips() {
        for p in [ints(&[-1, 1]), ints(&[1, 0, 1]), ints(&[0, -3, 0, 2]), ints(&[])] {
            assert_eq!(parse(&format(&p, "x")).unwrap(), p);
        }
        assert_eq!(format(&ints(&[-1, 1]), "x"), "-1+x");
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(
            div_exact_monic(&ints(&[-1, 0, 1]), &ints(&[-1, 1])),
            Some(ints(&[1, 1]))
        );
        assert_eq!(div_exact_monic(&ints(&[1, 0, 1]), &ints(&[-1, 1])), None);
    }
}
