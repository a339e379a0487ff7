//! Digit sets modulo `beta` and constant-time residue lookup.
//!
//! The lattice `beta * Z[θ]` is put in lower-triangular column Hermite form
//! `H`. Reducing a coefficient vector row by row against the columns of `H`
//! lands on the unique representative with `0 <= v[i] < H[i][i]`, which is
//! then read as a mixed-radix number to index a flat table of digits.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::ring::{norm_abs_u64, AlgebraicInt, NumberRing, ScaledInverse};
use crate::serde_int;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Largest digit set the table will enumerate.
pub const MAX_DIGITS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitSet {
    digits: Vec<AlgebraicInt>,
    beta: AlgebraicInt,
    canonical: bool,
}

/// Serialized form: `{"canonical": m}` or a list of coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DigitSpec {
    Canonical { canonical: u64 },
    Explicit(#[serde(with = "coeff_lists")] Vec<Vec<BigInt>>),
}

mod coeff_lists {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "serde_int::vec")] Vec<BigInt>);

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Row> = v.iter().map(|r| Row(r.clone())).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
        Ok(Vec::<Row>::deserialize(d)?.into_iter().map(|r| r.0).collect())
    }
}

impl DigitSet {
    /// `{0, 1, ..., |N(beta)| - 1}` as rational integers.
    pub fn canonical(ring: &Arc<NumberRing>, beta: &AlgebraicInt) -> Result<Self> {
        let m = digit_count(beta)?;
        let digits = (0..m).map(|k| AlgebraicInt::from_int(ring, k)).collect();
        let set = DigitSet {
            digits,
            beta: beta.clone(),
            canonical: true,
        };
        ResidueTable::new(&set)?;
        Ok(set)
    }

    /// An explicit digit list; validated as a residue system.
    pub fn new(beta: &AlgebraicInt, digits: Vec<AlgebraicInt>) -> Result<Self> {
        let ring = beta.ring();
        for d in &digits {
            beta.try_sub(d)?;
        }
        let m = digit_count(beta)?;
        let canonical = digits.len() as u64 == m
            && digits
                .iter()
                .enumerate()
                .all(|(k, d)| *d == AlgebraicInt::from_int(ring, k));
        let set = DigitSet {
            digits,
            beta: beta.clone(),
            canonical,
        };
        ResidueTable::new(&set)?;
        Ok(set)
    }

    pub fn from_spec(beta: &AlgebraicInt, spec: &DigitSpec) -> Result<Self> {
        let ring = beta.ring();
        match spec {
            DigitSpec::Canonical { canonical } => {
                let set = Self::canonical(ring, beta)?;
                if set.len() as u64 != *canonical {
                    return Err(Error::DigitCount {
                        expected: set.len().to_string(),
                        got: *canonical as usize,
                    });
                }
                Ok(set)
            }
            DigitSpec::Explicit(rows) => {
                let digits = rows
                    .iter()
                    .map(|r| AlgebraicInt::new(ring, r.clone()))
                    .collect::<Result<Vec<_>>>()?;
                Self::new(beta, digits)
            }
        }
    }

    pub fn spec(&self) -> DigitSpec {
        if self.canonical {
            DigitSpec::Canonical {
                canonical: self.digits.len() as u64,
            }
        } else {
            DigitSpec::Explicit(self.digits.iter().map(|d| d.coeffs().to_vec()).collect())
        }
    }

    pub fn digits(&self) -> &[AlgebraicInt] {
        &self.digits
    }

    pub fn digit(&self, index: usize) -> &AlgebraicInt {
        &self.digits[index]
    }

    pub fn beta(&self) -> &AlgebraicInt {
        &self.beta
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Index of the zero digit, if present.
    pub fn zero_index(&self) -> Option<usize> {
        self.digits.iter().position(AlgebraicInt::is_zero)
    }

    /// Index of the digit equal to `value`.
    pub fn index_of(&self, value: &AlgebraicInt) -> Option<usize> {
        self.digits.iter().position(|d| d == value)
    }

    /// Short text label for a digit: its integer value or its polynomial.
    pub fn label(&self, index: usize) -> String {
        self.digits[index].to_string()
    }
}

fn digit_count(beta: &AlgebraicInt) -> Result<u64> {
    let n = beta.norm();
    let m = norm_abs_u64(&n)?;
    if m <= 1 {
        return Err(Error::NormTooSmall(n.to_string()));
    }
    if m > MAX_DIGITS {
        return Err(Error::NormTooLarge(n.to_string()));
    }
    Ok(m)
}

/// Whether `digits` meets every residue class modulo `beta` exactly once.
pub fn is_representative_system(ring: &Arc<NumberRing>, beta: &AlgebraicInt, digits: &[AlgebraicInt]) -> bool {
    if !Arc::ptr_eq(ring, beta.ring()) && ring.modulus() != beta.ring().modulus() {
        return false;
    }
    DigitSet::new(beta, digits.to_vec()).is_ok()
}

/// Precomputed residue data for one `(beta, digit set)` pair.
#[derive(Debug, Clone)]
pub struct ResidueTable {
    dset: DigitSet,
    hnf: Matrix,
    /// `diag[i] = hnf[i][i]` as machine integers, for the mixed radix.
    diag: Vec<u64>,
    lookup: Vec<u32>,
    inverse: ScaledInverse,
}

impl ResidueTable {
    pub fn new(dset: &DigitSet) -> Result<Self> {
        let beta = &dset.beta;
        let m = digit_count(beta)?;
        if dset.digits.len() as u64 != m {
            return Err(Error::DigitCount {
                expected: m.to_string(),
                got: dset.digits.len(),
            });
        }
        let hnf = linalg::hermite_lower(&beta.multiplication_matrix()).ok_or(Error::DivisionByZero)?;
        let diag: Vec<u64> = (0..hnf.len()).map(|i| hnf[i][i].to_u64().expect("diagonal divides the norm")).collect();
        debug_assert_eq!(diag.iter().product::<u64>(), m);
        let mut table = ResidueTable {
            dset: dset.clone(),
            hnf,
            diag,
            lookup: vec![u32::MAX; m as usize],
            inverse: ScaledInverse::new(beta)?,
        };
        for (k, d) in dset.digits.iter().enumerate() {
            let slot = table.index(d);
            let prev = table.lookup[slot];
            if prev != u32::MAX {
                return Err(Error::NotRepresentative(prev as usize, k));
            }
            table.lookup[slot] = k as u32;
        }
        Ok(table)
    }

    pub fn digit_set(&self) -> &DigitSet {
        &self.dset
    }

    pub fn beta(&self) -> &AlgebraicInt {
        &self.dset.beta
    }

    pub fn hnf(&self) -> &Matrix {
        &self.hnf
    }

    /// Canonical representative of `alpha` modulo `beta`.
    pub fn canonical_residue(&self, alpha: &AlgebraicInt) -> Vec<BigInt> {
        let mut v = alpha.coeffs().to_vec();
        for i in 0..v.len() {
            let q = v[i].div_floor(&self.hnf[i][i]);
            if q.is_zero() {
                continue;
            }
            for (r, row) in self.hnf.iter().enumerate().skip(i) {
                let t = &q * &row[i];
                v[r] -= t;
            }
        }
        v
    }

    fn index(&self, alpha: &AlgebraicInt) -> usize {
        let v = self.canonical_residue(alpha);
        let mut idx = 0u64;
        let mut radix = 1u64;
        for (x, &b) in v.iter().zip(&self.diag) {
            idx += x.to_u64().unwrap() * radix;
            radix *= b;
        }
        idx as usize
    }

    /// Index of the unique digit congruent to `alpha` modulo `beta`.
    pub fn residue_digit(&self, alpha: &AlgebraicInt) -> usize {
        self.lookup[self.index(alpha)] as usize
    }

    /// One digit-strip step: `(d, (alpha - d) / beta)`.
    pub fn strip(&self, alpha: &AlgebraicInt) -> (usize, AlgebraicInt) {
        let k = self.residue_digit(alpha);
        let rest = self
            .inverse
            .divide(&(alpha - &self.dset.digits[k]))
            .expect("difference with the residue digit is divisible by beta");
        (k, rest)
    }

    /// `T(alpha)`, the digit-strip map.
    pub fn shift(&self, alpha: &AlgebraicInt) -> AlgebraicInt {
        self.strip(alpha).1
    }
}

/// `a_0 + a_1 beta + ... + a_{i-1} beta^{i-1}` for a prefix of digit indices.
pub fn truncation_map(prefix: &[usize], dset: &DigitSet) -> AlgebraicInt {
    let ring = dset.beta.ring();
    prefix
        .iter()
        .rev()
        .fold(AlgebraicInt::zero(ring), |acc, &k| &(&acc * &dset.beta) + &dset.digits[k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn el(ring: &Arc<NumberRing>, c: &[i64]) -> AlgebraicInt {
        AlgebraicInt::new(ring, c.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn canonical_sets() {
        let z = NumberRing::integers();
        assert_eq!(DigitSet::canonical(&z, &el(&z, &[3])).unwrap().len(), 3);
        let g = NumberRing::gaussian();
        let set = DigitSet::canonical(&g, &el(&g, &[-1, 1])).unwrap();
        assert_eq!(set.digits(), &[el(&g, &[0, 0]), el(&g, &[1, 0])]);
        assert!(matches!(
            DigitSet::canonical(&g, &el(&g, &[2, 0])),
            Err(Error::NotRepresentative(0, 2))
        ));
        assert!(matches!(
            DigitSet::canonical(&z, &el(&z, &[-1])),
            Err(Error::NormTooSmall(_))
        ));
    }

    #[test]
    fn representative_examples() {
        let z = NumberRing::integers();
        let two = el(&z, &[2]);
        assert!(is_representative_system(&z, &two, &[el(&z, &[0]), el(&z, &[3])]));
        assert!(!is_representative_system(&z, &two, &[el(&z, &[0]), el(&z, &[2])]));
        assert!(!is_representative_system(&z, &two, &[el(&z, &[0])]));
        let g = NumberRing::gaussian();
        assert!(is_representative_system(&g, &el(&g, &[-1, 1]), &[el(&g, &[0, 0]), el(&g, &[1, 0])]));
    }

    #[test]
    fn residue_digit_examples() {
        let z = NumberRing::integers();
        let t = ResidueTable::new(&DigitSet::canonical(&z, &el(&z, &[3])).unwrap()).unwrap();
        assert_eq!(t.residue_digit(&el(&z, &[256])), 1);
        assert_eq!(t.residue_digit(&el(&z, &[0])), 0);
        assert_eq!(t.residue_digit(&el(&z, &[-1])), 2);
        let two = el(&z, &[2]);
        let set = DigitSet::new(&two, vec![el(&z, &[0]), el(&z, &[3])]).unwrap();
        let t = ResidueTable::new(&set).unwrap();
        assert_eq!(set.digit(t.residue_digit(&el(&z, &[1]))), &el(&z, &[3]));
    }

    #[test]
    fn truncation_examples() {
        let z = NumberRing::integers();
        let set = DigitSet::canonical(&z, &el(&z, &[3])).unwrap();
        assert_eq!(truncation_map(&[1, 1, 1, 0, 0, 1], &set), el(&z, &[256]));
        assert_eq!(truncation_map(&[], &set), el(&z, &[0]));
        let set = DigitSet::new(&el(&z, &[2]), vec![el(&z, &[0]), el(&z, &[3])]).unwrap();
        assert_eq!(truncation_map(&[1, 1], &set), el(&z, &[9]));
    }

    #[test]
    fn residues_agree_with_divisibility() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = NumberRing::gaussian();
        let cubic = NumberRing::parse("x^3-x-1").unwrap();
        for (ring, beta) in [
            (g.clone(), el(&g, &[-1, 2])),
            (g.clone(), el(&g, &[3, 1])),
            (cubic.clone(), el(&cubic, &[2, 1, 0])),
        ] {
            let set = DigitSet::canonical(&ring, &beta).unwrap();
            let t = ResidueTable::new(&set).unwrap();
            let det = linalg::det(t.hnf());
            assert_eq!(det, beta.norm().abs());
            for _ in 0..200 {
                let c: Vec<i64> = (0..ring.degree()).map(|_| rng.gen_range(-500..=500)).collect();
                let a = el(&ring, &c);
                let k = t.residue_digit(&a);
                for (j, d) in set.digits().iter().enumerate() {
                    let divisible = (&a - d).divide_exact(&beta).unwrap().is_some();
                    assert_eq!(divisible, j == k);
                }
            }
        }
    }
}
