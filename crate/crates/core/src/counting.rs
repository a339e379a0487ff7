//! Counting exponents `1 <= n <= N` for which the expansion of `alpha^n`
//! avoids a digit `b`, and comparing the counts with `N^sigma(beta)`.

use crate::arith::{self, totient};
use crate::decimal::{Fixed, SIGNIFICANT};
use crate::error::{Error, Result};
use crate::expansion::beta_digits;
use crate::padic::{self, HypothesisMode, PrimeIdealModel};
use crate::polymod::{Fp, PolyMod};
use crate::residue::ResidueTable;
use crate::ring::{norm_abs_u64, AlgebraicInt};
use crate::serde_int;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

/// Serialized hit lists keep at most this many exponents.
pub const HIT_CAP: usize = 1_000_000;
/// Digit-strip steps allowed per power before giving up.
pub const STEP_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum CountMode {
    /// Digits of the finite radix word only.
    #[default]
    RadixOnly,
    /// The whole infinite expansion, zero tail included.
    BetaAdic,
}

impl CountMode {
    pub fn name(self) -> &'static str {
        match self {
            CountMode::RadixOnly => "radix-only",
            CountMode::BetaAdic => "beta-adic",
        }
    }
}

impl std::str::FromStr for CountMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "radix-only" => Ok(CountMode::RadixOnly),
            "beta-adic" => Ok(CountMode::BetaAdic),
            _ => Err(Error::Parse(format!("unknown count mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CountRequest {
    pub alpha: AlgebraicInt,
    pub table: ResidueTable,
    /// Digit index into the table's digit set.
    pub b: usize,
    pub n_max: u64,
    pub mode: CountMode,
    pub hypothesis: HypothesisMode,
}

/// Resumable state: every exponent below `next_n` has been examined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progress {
    pub next_n: u64,
    pub hits: Vec<u64>,
}

#[derive(Default)]
pub struct CountOptions<'a> {
    /// Worker threads; 0 and 1 both mean sequential.
    pub jobs: usize,
    pub resume: Option<Progress>,
    /// Called after each checkpoint exponent in sequential runs.
    pub on_checkpoint: Option<&'a mut dyn FnMut(&Progress)>,
}

/// `sigma(beta) = log(m - 1) / log m` with `m = |N(beta)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sigma {
    /// `m - 1`, the argument of the numerator logarithm.
    pub log_of: u64,
    /// `m`, the argument of the denominator logarithm.
    pub over_log_of: u64,
    pub decimal: String,
    #[serde(skip)]
    value: Option<Fixed>,
}

impl Sigma {
    pub fn value(&self) -> Fixed {
        self.value.clone().unwrap_or_else(|| sigma_fixed(self.over_log_of))
    }
}

fn sigma_fixed(m: u64) -> Fixed {
    if m == 2 {
        return Fixed::zero();
    }
    Fixed::ln(&BigInt::from(m - 1)).div(&Fixed::ln(&BigInt::from(m)))
}

pub fn sigma(beta: &AlgebraicInt) -> Result<Sigma> {
    let n = beta.norm();
    let m = norm_abs_u64(&n)?;
    if m <= 1 {
        return Err(Error::NormTooSmall(n.to_string()));
    }
    let value = sigma_fixed(m);
    Ok(Sigma {
        log_of: m - 1,
        over_log_of: m,
        decimal: value.render(SIGNIFICANT),
        value: Some(value),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "M")]
    pub count: u64,
    /// `M / N^sigma`.
    pub ratio: String,
    pub power_of_norm: bool,
    #[serde(rename = "final")]
    pub is_final: bool,
}

/// Constants of the counting bound, evaluated with the constructive
/// Lipschitz constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundConstants {
    pub u: u64,
    pub u_lcm: u64,
    pub m0: u32,
    pub n0: u32,
    /// `(prod q_j)^n0`.
    #[serde(with = "serde_int::int")]
    pub c0_tilde: BigInt,
    /// `u |N(beta)|^m0 c0_tilde`.
    #[serde(with = "serde_int::int")]
    pub c0: BigInt,
    /// `c0 |N(beta)|^sigma = c0 (|N(beta)| - 1)`.
    #[serde(with = "serde_int::int")]
    pub c1: BigInt,
    pub models: Vec<PrimeIdealModel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub mode: CountMode,
    #[serde(rename = "N")]
    pub n_max: u64,
    pub count: u64,
    pub sigma: Sigma,
    pub counts: Vec<CountRow>,
    /// Largest `M / N^sigma` over the rows: a lower bound for any valid `C1`.
    pub empirical_c1: String,
    pub constants: Option<BoundConstants>,
    /// Whether every row ratio stays below `constants.c1`.
    pub within_bound: Option<bool>,
    pub narkiewicz_ok: Option<bool>,
    pub hits: Vec<u64>,
    pub hits_truncated: bool,
    pub warnings: Vec<String>,
}

impl BoundReport {
    /// Plot-ready CSV with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,M_b,ratio,power_of_norm,final\n");
        for r in &self.counts {
            out.push_str(&format!("{},{},{},{},{}\n", r.n, r.count, r.ratio, r.power_of_norm, r.is_final));
        }
        out
    }

    pub fn hits_text(&self) -> String {
        self.hits.iter().map(|n| format!("{n}\n")).collect()
    }
}

/// Rejects `alpha` when some power `alpha^t = 1`. A root of unity of order
/// `t` in a field of degree `d` has `phi(t) <= d`, which forces `t <= 2 d^2`.
pub fn root_of_unity_guard(alpha: &AlgebraicInt) -> Result<()> {
    if !alpha.norm().abs().is_one() {
        return Ok(());
    }
    let d = alpha.ring().degree() as u64;
    for t in 1..=2 * d * d {
        if totient(t) <= d && alpha.pow(t).is_one() {
            return Err(Error::RootOfUnity { order: t });
        }
    }
    Ok(())
}

/// A rational prime `q` such that `alpha` and `beta` share a prime above `q`.
pub fn shared_prime(alpha: &AlgebraicInt, beta: &AlgebraicInt) -> Result<Option<u64>> {
    let m = norm_abs_u64(&beta.norm())?;
    let f = alpha.ring().modulus();
    for (q, _) in arith::factor(m) {
        let fp = Fp::new(q);
        let a = PolyMod::from_int(alpha.coeffs(), q);
        let b = PolyMod::from_int(beta.coeffs(), q);
        for (g, _) in fp.factor(&PolyMod::from_int(f, q)) {
            if fp.rem(&b, &g).is_zero() && fp.rem(&a, &g).is_zero() {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// Checks the request and returns the admitted prime models (empty when
/// exploration mode let flagged primes through).
fn validate(req: &CountRequest) -> Result<Vec<PrimeIdealModel>> {
    let dset = req.table.digit_set();
    if req.b >= dset.len() {
        return Err(Error::InvalidArgument(format!("digit index {} out of range", req.b)));
    }
    if req.n_max == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if req.mode == CountMode::RadixOnly && dset.zero_index().is_none() {
        return Err(Error::MissingZeroDigit);
    }
    req.alpha.try_sub(dset.beta())?;
    if req.alpha.is_zero() {
        return Err(Error::InvalidArgument("alpha must be nonzero".into()));
    }
    root_of_unity_guard(&req.alpha)?;
    if let Some(q) = shared_prime(&req.alpha, dset.beta())? {
        return Err(Error::NotCoprime { q });
    }
    let ring = req.alpha.ring();
    let models = padic::primes_above(ring, dset.beta(), padic::DEFAULT_PRECISION, req.hypothesis)?;
    Ok(models)
}

/// `(p, q, b)` when the request is a positive integer power in a positive
/// integer base with digits `0..q`.
fn rational_case(req: &CountRequest) -> Option<(u32, u32, u32)> {
    let dset = req.table.digit_set();
    if req.alpha.ring().degree() != 1 || !dset.is_canonical() {
        return None;
    }
    let q = dset.beta().coeffs()[0].to_u32()?;
    let p = req.alpha.coeffs()[0].to_u32()?;
    (q >= 2 && p >= 1).then_some((p, q, req.b as u32))
}

/// Base-`q` digits of `p^n` held in limbs of `c` digits each.
struct RationalScanner {
    p: u64,
    q: u64,
    c: u32,
    limb: u64,
    limbs: Vec<u64>,
}

impl RationalScanner {
    fn new(p: u32, q: u32, start: &BigUint) -> Self {
        let (p, q) = (p as u64, q as u64);
        let mut c = 1;
        while q.pow(c + 1) <= 1 << 32 {
            c += 1;
        }
        let limb = q.pow(c);
        let mut limbs = Vec::new();
        let mut x = start.clone();
        let lb = BigUint::from(limb);
        while !x.is_zero() {
            let (next, r) = x.div_rem(&lb);
            limbs.push(r.to_u64().unwrap());
            x = next;
        }
        RationalScanner { p, q, c, limb, limbs }
    }

    fn multiply(&mut self) {
        let mut carry = 0u64;
        for x in self.limbs.iter_mut() {
            let t = *x * self.p + carry;
            *x = t % self.limb;
            carry = t / self.limb;
        }
        while carry > 0 {
            self.limbs.push(carry % self.limb);
            carry /= self.limb;
        }
    }

    /// Whether the base-`q` word contains digit `b`.
    fn contains(&self, b: u64) -> bool {
        let top = self.limbs.len() - 1;
        for (i, &x) in self.limbs.iter().enumerate() {
            let mut x = x;
            if i == top {
                while x > 0 {
                    if x % self.q == b {
                        return true;
                    }
                    x /= self.q;
                }
            } else {
                for _ in 0..self.c {
                    if x % self.q == b {
                        return true;
                    }
                    x /= self.q;
                }
            }
        }
        false
    }
}

fn rational_hits(p: u32, q: u32, b: u32, mode: CountMode, from: u64, to: u64) -> Vec<u64> {
    if from > to || (mode == CountMode::BetaAdic && b == 0) {
        // Every positive integer ends in a zero tail.
        return Vec::new();
    }
    let start = BigUint::from(p).pow(from as u32);
    let mut scanner = RationalScanner::new(p, q, &start);
    let mut hits = Vec::new();
    for n in from..=to {
        if n > from {
            scanner.multiply();
        }
        if !scanner.contains(b as u64) {
            hits.push(n);
        }
    }
    hits
}

/// Whether the expansion of `x` avoids digit `b`.
fn omits(x: &AlgebraicInt, table: &ResidueTable, b: usize, mode: CountMode) -> Result<bool> {
    let zero = table.digit_set().zero_index();
    let mut seen: HashSet<AlgebraicInt> = HashSet::new();
    let mut x = x.clone();
    for _ in 0..STEP_BUDGET {
        if x.is_zero() && zero.is_some() {
            return Ok(match mode {
                CountMode::RadixOnly => true,
                CountMode::BetaAdic => zero != Some(b),
            });
        }
        if !seen.insert(x.clone()) {
            // Back on a cycle whose digits have all been seen.
            return match mode {
                CountMode::BetaAdic => Ok(true),
                CountMode::RadixOnly => Err(not_terminating(&x, table)),
            };
        }
        let (d, rest) = table.strip(&x);
        if d == b {
            return Ok(false);
        }
        x = rest;
    }
    Err(Error::StateBudgetExceeded(STEP_BUDGET))
}

fn not_terminating(start: &AlgebraicInt, table: &ResidueTable) -> Error {
    let mut cycle = vec![start.clone()];
    let mut x = table.shift(start);
    while &x != start {
        cycle.push(x.clone());
        x = table.shift(&x);
    }
    Error::NotTerminating {
        cycle: cycle
            .iter()
            .map(|e| e.coeffs().iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

fn general_hits(req: &CountRequest, from: u64, to: u64) -> Result<Vec<u64>> {
    let mut hits = Vec::new();
    if from > to {
        return Ok(hits);
    }
    let mut x = req.alpha.pow(from);
    for n in from..=to {
        if n > from {
            x = &x * &req.alpha;
        }
        if omits(&x, &req.table, req.b, req.mode)? {
            hits.push(n);
        }
    }
    Ok(hits)
}

fn hits_in(req: &CountRequest, from: u64, to: u64) -> Result<Vec<u64>> {
    match rational_case(req) {
        Some((p, q, b)) => Ok(rational_hits(p, q, b, req.mode, from, to)),
        None => general_hits(req, from, to),
    }
}

/// Powers of `m` up to `n_max`.
fn power_checkpoints(m: u64, n_max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut x = 1u64;
    while x <= n_max {
        out.push(x);
        match x.checked_mul(m) {
            Some(y) => x = y,
            None => break,
        }
    }
    out
}

/// Exponents `1 <= n <= N` whose expansion of `alpha^n` omits digit `b`.
pub fn count_hits(req: &CountRequest, mut opts: CountOptions<'_>) -> Result<Vec<u64>> {
    validate(req)?;
    run_hits(req, &mut opts)
}

fn run_hits(req: &CountRequest, opts: &mut CountOptions<'_>) -> Result<Vec<u64>> {
    let (mut hits, start) = match opts.resume.take() {
        Some(p) => {
            let hits: Vec<u64> = p.hits.into_iter().filter(|&n| n < p.next_n).collect();
            (hits, p.next_n.max(1))
        }
        None => (Vec::new(), 1),
    };
    if start > req.n_max {
        hits.retain(|&n| n <= req.n_max);
        return Ok(hits);
    }
    let jobs = opts.jobs.max(1);
    if jobs == 1 {
        let m = norm_abs_u64(&req.table.beta().norm())?;
        let mut stops: Vec<u64> = power_checkpoints(m, req.n_max)
            .into_iter()
            .filter(|&c| c >= start)
            .collect();
        stops.push(req.n_max);
        stops.dedup();
        let mut from = start;
        for stop in stops {
            hits.extend(hits_in(req, from, stop)?);
            from = stop + 1;
            if let Some(cb) = opts.on_checkpoint.as_mut() {
                cb(&Progress {
                    next_n: from,
                    hits: hits.clone(),
                });
            }
        }
        return Ok(hits);
    }
    // Blocks are dealt round-robin so that the costlier late blocks spread
    // over all workers; the merge is by block order, so the output does not
    // depend on scheduling.
    let total = req.n_max - start + 1;
    let blocks = (jobs as u64 * 8).min(total);
    let size = total.div_ceil(blocks);
    let ranges: Vec<(u64, u64)> = (0..blocks)
        .map(|i| (start + i * size, (start + (i + 1) * size - 1).min(req.n_max)))
        .filter(|(a, b)| a <= b)
        .collect();
    let mut results: Vec<Option<Result<Vec<u64>>>> = vec![None; ranges.len()];
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let ranges = &ranges;
                s.spawn(move || {
                    (w..ranges.len())
                        .step_by(jobs)
                        .map(|i| (i, hits_in(req, ranges[i].0, ranges[i].1)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    for r in results {
        hits.extend(r.expect("every block ran")?);
    }
    Ok(hits)
}

/// `M / N^sigma` as a fixed-point number.
fn ratio(count: u64, n: u64, sigma: &Fixed) -> Fixed {
    let denom = Fixed::pow_of(&BigInt::from(n), sigma);
    Fixed::from_int(count).div(&denom)
}

/// Counts at every power of `|N(beta)|` and at `N`, with the bound comparison.
pub fn count_omitting(req: &CountRequest) -> Result<BoundReport> {
    bound_report(req, CountOptions::default())
}

pub fn bound_report(req: &CountRequest, mut opts: CountOptions<'_>) -> Result<BoundReport> {
    let models = validate(req)?;
    let hits = run_hits(req, &mut opts)?;
    let beta = req.table.beta();
    let sig = sigma(beta)?;
    let sv = sig.value();
    let m = sig.over_log_of;

    let mut points: Vec<(u64, bool)> = power_checkpoints(m, req.n_max).into_iter().map(|n| (n, true)).collect();
    if points.last().map(|p| p.0) != Some(req.n_max) {
        points.push((req.n_max, false));
    }
    let mut counts = Vec::new();
    let mut best = Fixed::zero();
    for (n, power) in points {
        let count = hits.partition_point(|&h| h <= n) as u64;
        let r = ratio(count, n, &sv);
        if r > best {
            best = r.clone();
        }
        counts.push(CountRow {
            n,
            count,
            ratio: r.render(SIGNIFICANT),
            power_of_norm: power,
            is_final: n == req.n_max,
        });
    }

    let mut warnings = Vec::new();
    let flagged: Vec<&PrimeIdealModel> = models.iter().filter(|m| !m.admitted()).collect();
    let constants = if flagged.is_empty() {
        Some(bound_constants(&req.alpha, m, models.clone())?)
    } else {
        warnings.push(format!(
            "primes above {:?} are ramified or of inertia degree > 1; the counting bound does not apply",
            flagged.iter().map(|m| m.q).collect::<Vec<_>>()
        ));
        None
    };
    let within_bound = constants.as_ref().map(|c| {
        let c1 = Fixed::from_int(c.c1.clone());
        counts.iter().all(|row| ratio(row.count, row.n, &sv) <= c1)
    });
    let zero = req.table.digit_set().zero_index();
    if zero == Some(req.b) {
        warnings.push(match req.mode {
            CountMode::RadixOnly => "b is the zero digit: counts use the finite radix word, whose length is not controlled by the bound".into(),
            CountMode::BetaAdic => "b is the zero digit: every finite expansion contains it through its zero tail".into(),
        });
    }

    let narkiewicz_ok = is_two_three_two(req).then(|| narkiewicz_from_hits(&hits, req.n_max).ok);
    let count = hits.len() as u64;
    let hits_truncated = hits.len() > HIT_CAP;
    let mut hits = hits;
    hits.truncate(HIT_CAP);
    Ok(BoundReport {
        mode: req.mode,
        n_max: req.n_max,
        count,
        sigma: sig,
        counts,
        empirical_c1: best.render(SIGNIFICANT),
        constants,
        within_bound,
        narkiewicz_ok,
        hits,
        hits_truncated,
        warnings,
    })
}

fn bound_constants(alpha: &AlgebraicInt, m: u64, models: Vec<PrimeIdealModel>) -> Result<BoundConstants> {
    let (u, u_lcm) = padic::combined_u(alpha, &models)?;
    let (m0, n0) = padic::lipschitz_constants(alpha, u, &models)?;
    let prod_q: BigInt = models.iter().map(|p| BigInt::from(p.q)).product();
    let c0_tilde = prod_q.pow(n0);
    let c0 = BigInt::from(u) * BigInt::from(m).pow(m0) * &c0_tilde;
    let c1 = &c0 * BigInt::from(m - 1);
    Ok(BoundConstants {
        u,
        u_lcm,
        m0,
        n0,
        c0_tilde,
        c0,
        c1,
        models,
    })
}

fn is_two_three_two(req: &CountRequest) -> bool {
    rational_case(req) == Some((2, 3, 2)) && req.mode == CountMode::RadixOnly
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NarkiewiczRow {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "M")]
    pub count: u64,
    pub ratio: String,
    /// `1.62 N^sigma - M`.
    pub margin: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NarkiewiczReport {
    pub ok: bool,
    #[serde(rename = "N")]
    pub n_max: u64,
    pub max_ratio: String,
    pub argmax: u64,
    pub rows: Vec<NarkiewiczRow>,
}

/// Checks `M(N') <= 1.62 N'^(log 2 / log 3)` for every `N' <= N`, where
/// `M` counts powers of 2 whose ternary word avoids the digit 2.
pub fn narkiewicz_check(n_max: u64) -> NarkiewiczReport {
    let hits = rational_hits(2, 3, 2, CountMode::RadixOnly, 1, n_max);
    narkiewicz_from_hits(&hits, n_max)
}

fn narkiewicz_from_hits(hits: &[u64], n_max: u64) -> NarkiewiczReport {
    // M(N')/N'^sigma only increases at hits, so those are the only
    // positions where the inequality can first fail.
    let sigma = sigma_fixed(3);
    let limit = Fixed::ratio(&BigInt::from(162), &BigInt::from(100));
    let mut rows = Vec::new();
    let mut ok = true;
    let mut best = (Fixed::zero(), 0);
    for (i, &n) in hits.iter().enumerate() {
        let count = i as u64 + 1;
        let power = Fixed::pow_of(&BigInt::from(n), &sigma);
        let r = Fixed::from_int(count).div(&power);
        let margin = limit.mul(&power).sub(&Fixed::from_int(count));
        ok &= r < limit;
        if r > best.0 {
            best = (r.clone(), n);
        }
        rows.push(NarkiewiczRow {
            n,
            count,
            ratio: r.render(SIGNIFICANT),
            margin: margin.render(SIGNIFICANT),
        });
    }
    NarkiewiczReport {
        ok,
        n_max,
        max_ratio: best.0.render(SIGNIFICANT),
        argmax: best.1,
        rows,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub k: u32,
    pub u: u64,
    pub m0: u32,
    pub n0: u32,
    /// `prod q_j^max(0, k e_j - n0)`, which must divide every `n - m`.
    #[serde(with = "serde_int::int")]
    pub modulus: BigInt,
    #[serde(with = "serde_int::int")]
    pub c0_tilde: BigInt,
    #[serde(with = "serde_int::int")]
    pub c0: BigInt,
    /// `|N(beta)|^k / modulus`: the cap on each class implied by the spacing.
    #[serde(with = "serde_int::int")]
    pub per_class_cap: BigInt,
    /// Largest class among `0 <= n < |N(beta)|^k` (when that range was scanned).
    pub largest_class: Option<u64>,
    pub pairs_checked: u64,
    pub pairs_sharing_prefix: u64,
    pub violations: Vec<(u64, u64)>,
}

/// Checks that whenever `alpha^l (alpha^u)^n` and `alpha^l (alpha^u)^m`
/// share their first `k` digits, `prod q_j^(k e_j - n0)` divides `n - m`.
///
/// `sample` lists exponent pairs; every `l` in `0..u` is tried for each.
pub fn verify_gap_lemma(alpha: &AlgebraicInt, table: &ResidueTable, k: u32, sample: &[(u64, u64)]) -> Result<GapReport> {
    let beta = table.beta();
    let ring = alpha.ring();
    let models = padic::primes_above(ring, beta, padic::DEFAULT_PRECISION, HypothesisMode::Theorem)?;
    if let Some(q) = shared_prime(alpha, beta)? {
        return Err(Error::NotCoprime { q });
    }
    root_of_unity_guard(alpha)?;
    let (u, _) = padic::combined_u(alpha, &models)?;
    let (m0, n0) = padic::lipschitz_constants(alpha, u, &models)?;
    let m = norm_abs_u64(&beta.norm())?;
    let mut modulus = BigInt::one();
    for p in &models {
        let exp = (k * p.e.unwrap_or(0)).saturating_sub(n0);
        modulus *= BigInt::from(p.q).pow(exp);
    }
    let prod_q: BigInt = models.iter().map(|p| BigInt::from(p.q)).product();
    let c0_tilde = prod_q.pow(n0);
    let c0 = BigInt::from(u) * BigInt::from(m).pow(m0) * &c0_tilde;
    let span = BigInt::from(m).pow(k);
    let per_class_cap = span.div_ceil(&modulus);

    let mut exps: Vec<u64> = sample.iter().flat_map(|&(a, b)| [a, b]).collect();
    exps.sort_unstable();
    exps.dedup();
    let au = alpha.pow(u);
    let mut prefix: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for l in 0..u {
        let base = alpha.pow(l);
        for &n in &exps {
            let x = &base * &au.pow(n);
            prefix.insert((l, n), beta_digits(&x, table, k as usize));
        }
    }
    let mut report = GapReport {
        k,
        u,
        m0,
        n0,
        modulus: modulus.clone(),
        c0_tilde,
        c0,
        per_class_cap: per_class_cap.clone(),
        largest_class: None,
        pairs_checked: 0,
        pairs_sharing_prefix: 0,
        violations: Vec::new(),
    };
    let class_mod = m.pow(m0);
    for &(a, b) in sample {
        for l in 0..u {
            report.pairs_checked += 1;
            if a == b || prefix[&(l, a)] != prefix[&(l, b)] || (a % class_mod) != (b % class_mod) {
                continue;
            }
            report.pairs_sharing_prefix += 1;
            let diff = BigInt::from(a) - BigInt::from(b);
            if !(diff.abs() % &modulus).is_zero() && !report.violations.contains(&(a, b)) {
                report.violations.push((a, b));
            }
        }
    }
    if let Some(top) = span.to_u64().filter(|&t| exps.first() == Some(&0) && exps.contains(&(t - 1))) {
        // The sample covers the whole range 0..|N|^k: measure the classes.
        let mut classes: HashMap<(u64, &[usize], u64), u64> = HashMap::new();
        for l in 0..u {
            for n in 0..top {
                if let Some(p) = prefix.get(&(l, n)) {
                    *classes.entry((l, p.as_slice(), n % class_mod)).or_default() += 1;
                }
            }
        }
        report.largest_class = classes.values().copied().max();
    }
    if !report.violations.is_empty() {
        return Err(Error::HypothesisViolated(format!(
            "{} exponent pairs share {k} digits without the predicted spacing, e.g. {:?}",
            report.violations.len(),
            report.violations[0]
        )));
    }
    Ok(report)
}

/// All pairs `0 <= m < n <= limit`.
pub fn exhaustive_pairs(limit: u64) -> Vec<(u64, u64)> {
    (0..=limit).flat_map(|n| (0..n).map(move |m| (n, m))).collect()
}
