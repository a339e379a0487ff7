//! Deciding whether `(beta, {0, ..., |N(beta)| - 1})` is a canonical number
//! system.
//!
//! Let `E` contain `±1, ±θ, ..., ±θ^(d-1)` and be closed under
//! `e -> T(e + a)` for every digit `a`, where `T` is the digit-strip map.
//! Since `T(w + e) = T(w) + T(e + d(w))`, induction on the length of the
//! expansion of `w` shows that if every element of `E` reaches 0 under `T`,
//! then so does `w + e` for every `e` in `E`, and hence every element of
//! `Z[θ]`. Conversely an element of `E` that never reaches 0 is a counterexample.

use crate::error::{Error, Result};
use crate::linalg;
use crate::residue::{DigitSet, ResidueTable};
use crate::ring::{AlgebraicInt, NumberRing};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

pub const DEFAULT_CLOSURE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnsVerdict {
    pub is_cns: bool,
    /// A nonzero cycle of the digit-strip map, present when `is_cns` is false.
    pub witness_cycle: Option<Vec<AlgebraicInt>>,
    /// Whether every conjugate of `beta` has absolute value above 1.
    pub expansivity_ok: bool,
}

pub fn cns_check(ring: &Arc<NumberRing>, beta: &AlgebraicInt) -> Result<CnsVerdict> {
    cns_check_with_budget(ring, beta, DEFAULT_CLOSURE_BUDGET)
}

pub fn cns_check_with_budget(ring: &Arc<NumberRing>, beta: &AlgebraicInt, budget: usize) -> Result<CnsVerdict> {
    let table = ResidueTable::new(&DigitSet::canonical(ring, beta)?)?;
    let expansivity_ok = is_expansive(beta);
    let digits = table.digit_set().digits().to_vec();

    let mut index: HashMap<AlgebraicInt, usize> = HashMap::new();
    let mut elems: Vec<AlgebraicInt> = Vec::new();
    let push = |e: AlgebraicInt, index: &mut HashMap<AlgebraicInt, usize>, elems: &mut Vec<AlgebraicInt>| {
        if !index.contains_key(&e) {
            if elems.len() >= budget {
                return Err(Error::ClosureBudgetExceeded(budget));
            }
            index.insert(e.clone(), elems.len());
            elems.push(e);
        }
        Ok(())
    };
    let theta = AlgebraicInt::theta(ring);
    let mut power = AlgebraicInt::one(ring);
    for _ in 0..ring.degree() {
        push(power.clone(), &mut index, &mut elems)?;
        push(-&power, &mut index, &mut elems)?;
        power = &power * &theta;
    }
    let mut next = 0;
    while next < elems.len() {
        let e = elems[next].clone();
        for a in &digits {
            push(table.shift(&(&e + a)), &mut index, &mut elems)?;
        }
        next += 1;
    }

    // The zero digit is in the set, so E is closed under T itself.
    let succ: Vec<usize> = elems.iter().map(|e| index[&table.shift(e)]).collect();
    let mut reaches_zero: Vec<Option<bool>> = elems.iter().map(|e| e.is_zero().then_some(true)).collect();
    for start in 0..elems.len() {
        let mut path = Vec::new();
        let mut on_path = HashMap::new();
        let mut cur = start;
        let verdict = loop {
            if let Some(v) = reaches_zero[cur] {
                break v;
            }
            if let Some(&pos) = on_path.get(&cur) {
                let cycle: Vec<AlgebraicInt> = path[pos..].iter().map(|&k: &usize| elems[k].clone()).collect();
                return Ok(CnsVerdict {
                    is_cns: false,
                    witness_cycle: Some(rotate_to_least(cycle)),
                    expansivity_ok,
                });
            }
            on_path.insert(cur, path.len());
            path.push(cur);
            cur = succ[cur];
        };
        for k in path {
            reaches_zero[k] = Some(verdict);
        }
    }
    Ok(CnsVerdict {
        is_cns: true,
        witness_cycle: None,
        expansivity_ok,
    })
}

fn rotate_to_least(mut cycle: Vec<AlgebraicInt>) -> Vec<AlgebraicInt> {
    let key = |e: &AlgebraicInt| e.coeffs().to_vec();
    let pos = (0..cycle.len()).min_by_key(|&i| key(&cycle[i])).unwrap_or(0);
    cycle.rotate_left(pos);
    cycle
}

/// Whether every conjugate of `beta` lies strictly outside the unit circle.
pub fn is_expansive(beta: &AlgebraicInt) -> bool {
    let mut p = linalg::charpoly(&beta.multiplication_matrix());
    p.reverse();
    schur_stable(p)
}

/// Schur-Cohn test: every root of `p` lies strictly inside the unit disc.
pub fn schur_stable(mut p: Vec<BigInt>) -> bool {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    loop {
        let n = match p.len() {
            0 => return false,
            1 => return true,
            len => len - 1,
        };
        let (a0, an) = (p[0].clone(), p[n].clone());
        if a0.abs() >= an.abs() {
            return false;
        }
        // (a_n p(z) - a_0 p*(z)) / z, where p* reverses the coefficients.
        let mut q: Vec<BigInt> = (1..=n).map(|i| &an * &p[i] - &a0 * &p[n - i]).collect();
        let g = q.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() {
            q.iter_mut().for_each(|c| *c /= &g);
        }
        p = q;
    }
}
