//! Beta-adic digit streams and finite radix expansions.

use crate::error::{Error, Result};
use crate::residue::{DigitSet, ResidueTable};
use crate::ring::AlgebraicInt;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// An eventually periodic digit sequence, least significant digit first.
///
/// An empty `period` stands for an infinite tail of the zero digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaExpansion {
    pub preperiod: Vec<usize>,
    pub period: Vec<usize>,
    #[serde(skip)]
    pub zero_digit: Option<usize>,
}

impl BetaExpansion {
    /// Digit `j` of the infinite sequence.
    pub fn digit(&self, j: usize) -> usize {
        if j < self.preperiod.len() {
            return self.preperiod[j];
        }
        if self.period.is_empty() {
            return self.zero_digit.expect("zero tail needs a zero digit");
        }
        self.period[(j - self.preperiod.len()) % self.period.len()]
    }

    /// Whether the expansion is finite (zero tail).
    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Most significant first, period marked as `(...)*`, e.g. `(03)*3`.
    pub fn render(&self, dset: &DigitSet) -> String {
        let labels: Vec<String> = (0..dset.len()).map(|k| dset.label(k)).collect();
        let short = labels.iter().all(|l| l.chars().count() == 1);
        let join = |word: &[usize]| {
            let parts: Vec<&str> = word.iter().rev().map(|&k| labels[k].as_str()).collect();
            parts.join(if short { "" } else { "," })
        };
        let mut out = String::new();
        if !self.period.is_empty() {
            out.push('(');
            out.push_str(&join(&self.period));
            out.push_str(")*");
            if !short && !self.preperiod.is_empty() {
                out.push(',');
            }
        }
        out.push_str(&join(&self.preperiod));
        if out.is_empty() {
            out.push_str(&labels[self.zero_digit.unwrap_or(0)]);
        }
        out
    }
}

/// The first `k` digits of `alpha`.
pub fn beta_digits(alpha: &AlgebraicInt, table: &ResidueTable, k: usize) -> Vec<usize> {
    let mut x = alpha.clone();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let (d, rest) = table.strip(&x);
        out.push(d);
        x = rest;
    }
    out
}

/// Full expansion plus the elements of the periodic part, in order.
fn expand_with_cycle(
    alpha: &AlgebraicInt,
    table: &ResidueTable,
    budget: usize,
) -> Result<(BetaExpansion, Vec<AlgebraicInt>)> {
    let zero = table.digit_set().zero_index();
    let mut seen: HashMap<AlgebraicInt, usize> = HashMap::new();
    let mut states: Vec<AlgebraicInt> = Vec::new();
    let mut digits = Vec::new();
    let mut x = alpha.clone();
    loop {
        if let Some(&start) = seen.get(&x) {
            let mut period = digits.split_off(start);
            let cycle = states.split_off(start);
            if zero.is_some() && period == [zero.unwrap()] && cycle[0].is_zero() {
                period.clear();
            }
            let exp = BetaExpansion {
                preperiod: digits,
                period,
                zero_digit: zero,
            };
            return Ok((exp, cycle));
        }
        if seen.len() >= budget {
            return Err(Error::StateBudgetExceeded(budget));
        }
        let (d, rest) = table.strip(&x);
        seen.insert(x.clone(), states.len());
        states.push(x);
        digits.push(d);
        x = rest;
    }
}

/// The eventually periodic expansion of `alpha` with minimal preperiod and
/// primitive period.
pub fn beta_expansion(alpha: &AlgebraicInt, table: &ResidueTable) -> Result<BetaExpansion> {
    beta_expansion_with_budget(alpha, table, DEFAULT_STATE_BUDGET)
}

pub fn beta_expansion_with_budget(alpha: &AlgebraicInt, table: &ResidueTable, budget: usize) -> Result<BetaExpansion> {
    Ok(expand_with_cycle(alpha, table, budget)?.0)
}

/// The finite digit word of `alpha`, or the cycle it falls into.
pub fn radix_expansion(alpha: &AlgebraicInt, table: &ResidueTable) -> Result<Vec<usize>> {
    if table.digit_set().zero_index().is_none() {
        return Err(Error::MissingZeroDigit);
    }
    let (exp, cycle) = expand_with_cycle(alpha, table, DEFAULT_STATE_BUDGET)?;
    if exp.is_finite() {
        Ok(exp.preperiod)
    } else {
        Err(Error::NotTerminating {
            cycle: cycle
                .iter()
                .map(|e| e.coeffs().iter().map(|c| c.to_string()).collect())
                .collect(),
        })
    }
}

/// Whether digit `b` never occurs anywhere in the infinite sequence.
pub fn omits_digit(exp: &BetaExpansion, b: usize) -> bool {
    if exp.preperiod.contains(&b) || exp.period.contains(&b) {
        return false;
    }
    !(exp.period.is_empty() && exp.zero_digit == Some(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::NumberRing;
    use num_bigint::BigInt;
    use std::sync::Arc;

    fn el(ring: &Arc<NumberRing>, c: &[i64]) -> AlgebraicInt {
        AlgebraicInt::new(ring, c.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn ternary() -> ResidueTable {
        let z = NumberRing::integers();
        ResidueTable::new(&DigitSet::canonical(&z, &el(&z, &[3])).unwrap()).unwrap()
    }

    fn binary_03() -> ResidueTable {
        let z = NumberRing::integers();
        let set = DigitSet::new(&el(&z, &[2]), vec![el(&z, &[0]), el(&z, &[3])]).unwrap();
        ResidueTable::new(&set).unwrap()
    }

    #[test]
    fn digit_examples() {
        let z = NumberRing::integers();
        assert_eq!(beta_digits(&el(&z, &[256]), &ternary(), 6), vec![1, 1, 1, 0, 0, 1]);
        assert_eq!(beta_digits(&el(&z, &[1]), &binary_03(), 6), vec![1, 1, 0, 1, 0, 1]);
        assert_eq!(beta_digits(&el(&z, &[0]), &ternary(), 4), vec![0; 4]);
    }

    #[test]
    fn expansion_examples() {
        let z = NumberRing::integers();
        let e = beta_expansion(&el(&z, &[1]), &binary_03()).unwrap();
        assert_eq!((e.preperiod.as_slice(), e.period.as_slice()), (&[1][..], &[1, 0][..]));
        let e = beta_expansion(&el(&z, &[256]), &ternary()).unwrap();
        assert_eq!(e.preperiod, vec![1, 1, 1, 0, 0, 1]);
        assert!(e.period.is_empty());
        let e = beta_expansion(&el(&z, &[-1]), &ternary()).unwrap();
        assert!(e.preperiod.is_empty());
        assert_eq!(e.period, vec![2]);
    }

    #[test]
    fn radix_examples() {
        let z = NumberRing::integers();
        assert_eq!(radix_expansion(&el(&z, &[4]), &ternary()).unwrap(), vec![1, 1]);
        assert_eq!(radix_expansion(&el(&z, &[1]), &ternary()).unwrap(), vec![1]);
        assert_eq!(
            radix_expansion(&el(&z, &[-1]), &ternary()).unwrap_err(),
            Error::NotTerminating {
                cycle: vec![vec!["-1".into()]]
            }
        );
        let set = DigitSet::new(&el(&z, &[2]), vec![el(&z, &[1]), el(&z, &[2])]).unwrap();
        let t = ResidueTable::new(&set).unwrap();
        assert_eq!(radix_expansion(&el(&z, &[1]), &t).unwrap_err(), Error::MissingZeroDigit);
    }

    #[test]
    fn omission_examples() {
        let z = NumberRing::integers();
        let t = ternary();
        assert!(omits_digit(&beta_expansion(&el(&z, &[256]), &t).unwrap(), 2));
        assert!(!omits_digit(&beta_expansion(&el(&z, &[8]), &t).unwrap(), 2));
        assert!(omits_digit(&beta_expansion(&el(&z, &[8]), &t).unwrap(), 7));
        // The zero tail counts as an occurrence of the zero digit.
        assert!(!omits_digit(&beta_expansion(&el(&z, &[4]), &t).unwrap(), 0));
        assert!(!omits_digit(&beta_expansion(&el(&z, &[0]), &t).unwrap(), 0));
    }

    #[test]
    fn rendering() {
        let z = NumberRing::integers();
        let t = binary_03();
        let e = beta_expansion(&el(&z, &[1]), &t).unwrap();
        assert_eq!(e.render(t.digit_set()), "(03)*3");
        let t = ternary();
        let e = beta_expansion(&el(&z, &[256]), &t).unwrap();
        assert_eq!(e.render(t.digit_set()), "100111");
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"preperiod":[1,1,1,0,0,1],"period":[]}"#);
        let e = beta_expansion(&el(&z, &[0]), &t).unwrap();
        assert_eq!(e.render(t.digit_set()), "0");
    }

    #[test]
    fn state_budget() {
        let z = NumberRing::integers();
        let big = el(&z, &[1_000_000]);
        assert_eq!(
            beta_expansion_with_budget(&big, &ternary(), 5).unwrap_err(),
            Error::StateBudgetExceeded(5)
        );
    }
}
