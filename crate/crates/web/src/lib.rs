//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each export takes plain strings and returns a JSON document. The `demo`
//! module holds the same functions with `String` errors so they can be
//! tested natively.

use wasm_bindgen::prelude::*;

pub mod demo {
    use betadix::cns::cns_check;
    use betadix::counting::{self, CountMode, CountRequest};
    use betadix::expansion::{beta_digits, beta_expansion};
    use betadix::padic::HypothesisMode;
    use betadix::residue::{DigitSet, ResidueTable};
    use betadix::{poly, AlgebraicInt, NumberRing};
    use serde_json::json;
    use std::sync::Arc;

    /// Browser runs are capped so the page stays responsive.
    pub const MAX_N: u64 = 20_000;

    fn show(e: &AlgebraicInt) -> String {
        poly::format(e.coeffs(), "x")
    }

    fn table(ring: &Arc<NumberRing>, beta: &AlgebraicInt, digits: &str) -> Result<ResidueTable, String> {
        let dset = if digits.trim().is_empty() {
            DigitSet::canonical(ring, beta)
        } else {
            poly::parse_list(digits).and_then(|list| {
                DigitSet::new(beta, list.iter().map(|c| AlgebraicInt::from_poly(ring, c)).collect())
            })
        };
        dset.and_then(|d| ResidueTable::new(&d)).map_err(|e| e.to_string())
    }

    fn parse(ring: &str, beta: &str) -> Result<(Arc<NumberRing>, AlgebraicInt), String> {
        let ring = NumberRing::parse(ring).map_err(|e| e.to_string())?;
        let beta = AlgebraicInt::parse(&ring, beta).map_err(|e| e.to_string())?;
        Ok((ring, beta))
    }

    /// Eventually periodic expansion of `value`, plus its first `k` digits.
    pub fn expand(ring: &str, beta: &str, digits: &str, value: &str, k: u32) -> Result<String, String> {
        let (ring, beta) = parse(ring, beta)?;
        let t = table(&ring, &beta, digits)?;
        let dset = t.digit_set();
        let value = AlgebraicInt::parse(&ring, value).map_err(|e| e.to_string())?;
        let e = beta_expansion(&value, &t).map_err(|e| e.to_string())?;
        let label = |w: &[usize]| w.iter().map(|&i| show(dset.digit(i))).collect::<Vec<_>>();
        Ok(json!({
            "rendered": e.render(dset),
            "preperiod": label(&e.preperiod),
            "period": label(&e.period),
            "prefix": label(&beta_digits(&value, &t, k.min(256) as usize)),
        })
        .to_string())
    }

    pub fn cns(ring: &str, beta: &str) -> Result<String, String> {
        let (ring, beta) = parse(ring, beta)?;
        let v = cns_check(&ring, &beta).map_err(|e| e.to_string())?;
        Ok(json!({
            "is_cns": v.is_cns,
            "expansivity_ok": v.expansivity_ok,
            "witness_cycle": v.witness_cycle.map(|c| c.iter().map(show).collect::<Vec<_>>()),
        })
        .to_string())
    }

    /// `M(N)` at every `N <= n_max` where it changes, with `sigma` for the
    /// reference curve `N^sigma`.
    pub fn count_curve(ring: &str, alpha: &str, beta: &str, digit: &str, n_max: u64, beta_adic: bool) -> Result<String, String> {
        if n_max == 0 || n_max > MAX_N {
            return Err(format!("N must be between 1 and {MAX_N}"));
        }
        let (ring, beta) = parse(ring, beta)?;
        let t = table(&ring, &beta, "")?;
        let b = AlgebraicInt::parse(&ring, digit).map_err(|e| e.to_string())?;
        let b = t
            .digit_set()
            .index_of(&b)
            .ok_or_else(|| format!("{} is not a digit", show(&b)))?;
        let req = CountRequest {
            alpha: AlgebraicInt::parse(&ring, alpha).map_err(|e| e.to_string())?,
            table: t,
            b,
            n_max,
            mode: if beta_adic { CountMode::BetaAdic } else { CountMode::RadixOnly },
            hypothesis: HypothesisMode::Exploration,
        };
        let report = counting::count_omitting(&req).map_err(|e| e.to_string())?;
        Ok(json!({
            "N": n_max,
            "M": report.count,
            "hits": report.hits,
            "sigma": report.sigma.decimal,
            "empirical_c1": report.empirical_c1,
            "c1": report.constants.as_ref().map(|c| c.c1.to_string()),
            "warnings": report.warnings,
        })
        .to_string())
    }
}

#[wasm_bindgen]
pub fn expand(ring: &str, beta: &str, digits: &str, value: &str, k: u32) -> Result<String, JsError> {
    demo::expand(ring, beta, digits, value, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn cns_check(ring: &str, beta: &str) -> Result<String, JsError> {
    demo::cns(ring, beta).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn count_curve(ring: &str, alpha: &str, beta: &str, digit: &str, n_max: u64, beta_adic: bool) -> Result<String, JsError> {
    demo::count_curve(ring, alpha, beta, digit, n_max, beta_adic).map_err(|e| JsError::new(&e))
}
