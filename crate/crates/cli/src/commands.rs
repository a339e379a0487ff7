use crate::manifest::{Command, ExperimentManifest, Format, Params};
use crate::{CliError, Result};
use betadix::cns::cns_check;
use betadix::counting::{self, CountOptions, CountRequest, Progress};
use betadix::digits_extra::{self, CentralBinomialRecord, PersistenceRecord};
use betadix::expansion::{beta_digits, beta_expansion, radix_expansion};
use betadix::padic::{self, PadicInt};
use betadix::residue::{DigitSet, ResidueTable};
use betadix::{poly, AlgebraicInt, Error, NumberRing};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// Settings that affect how a run executes but not what it reports.
#[derive(Debug, Clone, Default)]
pub struct Runtime {
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    pub resume: Option<PathBuf>,
    pub quiet: bool,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    manifest: ExperimentManifest,
    progress: Progress,
}

fn show(e: &AlgebraicInt) -> String {
    poly::format(e.coeffs(), "x")
}

fn labels(word: &[usize], dset: &DigitSet) -> Vec<String> {
    word.iter().map(|&k| show(dset.digit(k))).collect()
}

struct Setup {
    ring: Arc<NumberRing>,
    beta: AlgebraicInt,
    table: ResidueTable,
}

fn element(ring: &Arc<NumberRing>, text: &Option<String>, name: &'static str) -> Result<AlgebraicInt> {
    let text = text.as_deref().ok_or(CliError::Missing(name))?;
    Ok(AlgebraicInt::parse(ring, text)?)
}

fn setup(p: &Params) -> Result<Setup> {
    let ring = NumberRing::parse(&p.ring)?;
    let beta = element(&ring, &p.beta, "beta")?;
    let dset = match &p.digits {
        None => DigitSet::canonical(&ring, &beta)?,
        Some(list) => {
            let digits = poly::parse_list(list)?
                .iter()
                .map(|c| AlgebraicInt::from_poly(&ring, c))
                .collect();
            DigitSet::new(&beta, digits)?
        }
    };
    let table = ResidueTable::new(&dset)?;
    Ok(Setup { ring, beta, table })
}

fn digit_index(s: &Setup, p: &Params) -> Result<usize> {
    let b = element(&s.ring, &p.digit, "digit")?;
    s.table
        .digit_set()
        .index_of(&b)
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not in the digit set", show(&b))).into())
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("report serializes") + "\n"
}

/// Runs one experiment and returns the rendered report.
pub fn run(m: &ExperimentManifest, rt: &Runtime) -> Result<String> {
    let p = &m.params;
    match m.command {
        Command::Expand => expand(p),
        Command::CnsCheck => cns(p),
        Command::Count | Command::BoundReport => count(m, rt),
        Command::Interpolate => interpolate(p),
        Command::GapCheck => gap_check(p),
        Command::Persistence => persistence(p),
        Command::Practical => practical(p),
    }
}

fn expand(p: &Params) -> Result<String> {
    let s = setup(p)?;
    let dset = s.table.digit_set();
    let value = element(&s.ring, &p.value, "value")?;
    let head = json!({
        "beta": show(&s.beta),
        "digits": labels(&(0..dset.len()).collect::<Vec<_>>(), dset),
        "value": show(&value),
    });
    if let Some(k) = p.k {
        let prefix = labels(&beta_digits(&value, &s.table, k as usize), dset);
        return Ok(match p.format {
            Format::Json => to_json(&json!({ "input": head, "prefix": prefix })),
            Format::Csv => {
                let rows: String = prefix.iter().enumerate().map(|(j, d)| format!("{j},{d}\n")).collect();
                format!("position,digit\n{rows}")
            }
            Format::Text => prefix.join(",") + "\n",
        });
    }
    let e = beta_expansion(&value, &s.table)?;
    let radix = match dset.zero_index() {
        Some(_) if e.is_finite() => Some(labels(&radix_expansion(&value, &s.table)?, dset)),
        _ => None,
    };
    let rendered = e.render(dset);
    Ok(match p.format {
        Format::Json => to_json(&json!({
            "input": head,
            "preperiod": labels(&e.preperiod, dset),
            "period": labels(&e.period, dset),
            "rendered": rendered,
            "radix": radix,
        })),
        Format::Csv => format!(
            "preperiod,period,rendered\n{},{},{rendered}\n",
            labels(&e.preperiod, dset).join(";"),
            labels(&e.period, dset).join(";")
        ),
        Format::Text => rendered + "\n",
    })
}

fn cns(p: &Params) -> Result<String> {
    let ring = NumberRing::parse(&p.ring)?;
    let beta = element(&ring, &p.beta, "beta")?;
    let v = cns_check(&ring, &beta)?;
    let cycle: Option<Vec<String>> = v.witness_cycle.as_ref().map(|c| c.iter().map(show).collect());
    Ok(match p.format {
        Format::Json => to_json(&json!({
            "beta": show(&beta),
            "is_cns": v.is_cns,
            "witness_cycle": cycle,
            "expansivity_ok": v.expansivity_ok,
        })),
        Format::Csv => format!(
            "is_cns,expansivity_ok,witness_cycle\n{},{},{}\n",
            v.is_cns,
            v.expansivity_ok,
            cycle.unwrap_or_default().join(";")
        ),
        Format::Text => {
            let mut out = format!("is_cns: {}\nexpansivity_ok: {}\n", v.is_cns, v.expansivity_ok);
            if let Some(c) = cycle {
                out.push_str(&format!("witness_cycle: {}\n", c.join(" -> ")));
            }
            out
        }
    })
}

/// The manifest a checkpoint must match: output details do not matter.
fn identity(m: &ExperimentManifest) -> ExperimentManifest {
    let mut m = m.clone();
    m.command = Command::Count;
    m.params.format = Format::Json;
    m
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn count(m: &ExperimentManifest, rt: &Runtime) -> Result<String> {
    let p = &m.params;
    let s = setup(p)?;
    let b = digit_index(&s, p)?;
    let req = CountRequest {
        alpha: element(&s.ring, &p.alpha, "alpha")?,
        table: s.table.clone(),
        b,
        n_max: p.n.ok_or(CliError::Missing("N"))?,
        mode: p.count_mode,
        hypothesis: p.hypothesis,
    };
    let resume = match &rt.resume {
        Some(path) => {
            let c: Checkpoint = serde_json::from_str(&read_file(path)?)?;
            if identity(&c.manifest) != identity(m) {
                return Err(CliError::CheckpointMismatch);
            }
            Some(c.progress)
        }
        None => None,
    };
    let mut failure = None;
    let mut on_checkpoint = |progress: &Progress| {
        if !rt.quiet {
            eprintln!("checkpoint: N={} M={}", progress.next_n - 1, progress.hits.len());
        }
        if let (Some(path), None) = (&rt.checkpoint, &failure) {
            let c = Checkpoint {
                manifest: m.clone(),
                progress: progress.clone(),
            };
            if let Err(e) = write_atomic(path, &to_json(&c)) {
                failure = Some(e);
            }
        }
    };
    let opts = CountOptions {
        jobs: rt.jobs,
        resume,
        on_checkpoint: Some(&mut on_checkpoint),
    };
    let report = counting::bound_report(&req, opts)?;
    if let Some(e) = failure {
        return Err(e);
    }
    let digit = show(s.table.digit_set().digit(b));
    if m.command == Command::BoundReport {
        return Ok(match p.format {
            Format::Json => to_json(&json!({
                "alpha": show(&req.alpha),
                "beta": show(&s.beta),
                "digit": digit,
                "report": report,
            })),
            Format::Csv => report.to_csv(),
            Format::Text => {
                let mut out = format!("sigma = {}\n", report.sigma.decimal);
                for r in &report.counts {
                    out.push_str(&format!("N={:<12} M={:<8} M/N^sigma={}\n", r.n, r.count, r.ratio));
                }
                if let Some(c) = &report.constants {
                    out.push_str(&format!("C1 = {} (within bound: {})\n", c.c1, report.within_bound == Some(true)));
                }
                for w in &report.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                out
            }
        });
    }
    Ok(match p.format {
        Format::Json => to_json(&json!({
            "alpha": show(&req.alpha),
            "beta": show(&s.beta),
            "digit": digit,
            "mode": p.count_mode,
            "N": report.n_max,
            "M": report.count,
            "hits": report.hits,
            "hits_truncated": report.hits_truncated,
            "warnings": report.warnings,
        })),
        Format::Csv => format!("n\n{}", report.hits_text()),
        Format::Text => report.hits_text(),
    })
}

fn interpolate(p: &Params) -> Result<String> {
    let s = setup(p)?;
    let alpha = element(&s.ring, &p.alpha, "alpha")?;
    let k = p.precision.unwrap_or(padic::DEFAULT_PRECISION);
    let models: Vec<_> = padic::primes_above(&s.ring, &s.beta, k, p.hypothesis)?
        .into_iter()
        .filter(|m| m.admitted())
        .collect();
    let u = match p.u {
        Some(u) => u,
        None => padic::combined_u(&alpha, &models)?.0,
    };
    let l = p.l.unwrap_or(0);
    let x: BigInt = p
        .x
        .as_deref()
        .ok_or(CliError::Missing("x"))?
        .parse()
        .map_err(|_| Error::Parse(format!("x must be an integer, got {:?}", p.x)))?;
    let mut rows = Vec::new();
    for model in &models {
        let g = padic::interpolate_g(&alpha, l, u, &PadicInt::new(x.clone(), model.q, k), model)?;
        // At a natural number the function must agree with the power itself.
        let power = u32::try_from(&x)
            .ok()
            .map(|n| model.image(&alpha.pow(l + u * n as u64)).value().clone());
        rows.push(json!({
            "q": model.q,
            "root": model.root.to_string(),
            "K": k,
            "value": g.value().to_string(),
            "power": power.as_ref().map(|v| v.to_string()),
            "agrees": power.map(|v| &v == g.value()),
        }));
    }
    let out = json!({ "alpha": show(&alpha), "beta": show(&s.beta), "u": u, "l": l, "x": x.to_string(), "primes": rows });
    Ok(match p.format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut csv = String::from("q,root,K,value\n");
            for r in &rows {
                csv.push_str(&format!("{},{},{},{}\n", r["q"], r["root"].as_str().unwrap(), k, r["value"].as_str().unwrap()));
            }
            csv
        }
        Format::Text => rows
            .iter()
            .map(|r| format!("G_{l}({x}) = {} + O({}^{k})\n", r["value"].as_str().unwrap(), r["q"]))
            .collect(),
    })
}

fn gap_check(p: &Params) -> Result<String> {
    let s = setup(p)?;
    let alpha = element(&s.ring, &p.alpha, "alpha")?;
    let k = p.k.unwrap_or(2);
    let limit = p.n.unwrap_or(200);
    let pairs = match p.samples {
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            (0..count)
                .map(|_| (rng.gen_range(0..=limit), rng.gen_range(0..=limit)))
                .collect()
        }
        None => counting::exhaustive_pairs(limit),
    };
    let r = counting::verify_gap_lemma(&alpha, &s.table, k, &pairs)?;
    Ok(match p.format {
        Format::Json => to_json(&r),
        Format::Csv => format!(
            "k,u,n0,modulus,c0_tilde,c0,largest_class,pairs_checked,pairs_sharing_prefix,violations\n{},{},{},{},{},{},{},{},{},{}\n",
            r.k,
            r.u,
            r.n0,
            r.modulus,
            r.c0_tilde,
            r.c0,
            r.largest_class.map(|c| c.to_string()).unwrap_or_default(),
            r.pairs_checked,
            r.pairs_sharing_prefix,
            r.violations.len()
        ),
        Format::Text => format!(
            "k={} u={} n0={}: {} of {} pairs share a prefix; their exponents of alpha^u all differ by multiples of {}\n",
            r.k, r.u, r.n0, r.pairs_sharing_prefix, r.pairs_checked, r.modulus
        ),
    })
}

/// The single `--value`, or the range `--from ..= --N`.
fn integers(p: &Params) -> Result<Vec<BigUint>> {
    if let Some(v) = &p.value {
        let n: BigUint = v.parse().map_err(|_| Error::Parse(format!("expected a positive integer, got {v:?}")))?;
        return Ok(vec![n]);
    }
    let hi = p.n.ok_or(CliError::Missing("value"))?;
    let lo = p.from.unwrap_or(1);
    Ok((lo..=hi).map(BigUint::from).collect())
}

fn persistence(p: &Params) -> Result<String> {
    let base = p.base.unwrap_or(10);
    if base < 2 {
        return Err(Error::InvalidArgument("base must be at least 2".into()).into());
    }
    let records: Vec<PersistenceRecord> = integers(p)?
        .iter()
        .filter(|n| **n >= BigUint::from(1u32))
        .map(|n| digits_extra::persistence(n, base))
        .collect();
    let max_l = records.iter().map(|r| r.l).max();
    Ok(match p.format {
        Format::Json => to_json(&json!({ "base": base, "max_l": max_l, "records": records })),
        Format::Csv => {
            let mut out = format!("{}\n", PersistenceRecord::csv_header());
            for r in &records {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
            out
        }
        Format::Text => records
            .iter()
            .map(|r| format!("{} (l={})\n", r.orbit.join(" -> "), r.l))
            .collect(),
    })
}

#[derive(Serialize)]
struct PracticalRow {
    n: u64,
    practical: bool,
    central_binomial: CentralBinomialRecord,
}

fn practical(p: &Params) -> Result<String> {
    let mut rows = Vec::new();
    for n in integers(p)? {
        let n: u64 = n
            .try_into()
            .map_err(|_| Error::InvalidArgument("n must fit in 64 bits".into()))?;
        if n == 0 {
            continue;
        }
        rows.push(PracticalRow {
            n,
            practical: digits_extra::is_practical(n),
            central_binomial: digits_extra::central_binomial_practical(n),
        });
    }
    if let Some(bad) = rows.iter().find(|r| r.central_binomial.violation) {
        return Err(Error::HypothesisViolated(format!("C(2n, n) is practical for n = {}", bad.n)).into());
    }
    Ok(match p.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut out = String::from("n,practical,central_binomial_practical,power_of_two_omitting_2\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.n, r.practical, r.central_binomial.practical, r.central_binomial.omits_two
                ));
            }
            out
        }
        Format::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "{}: practical={} C(2n,n) practical={}\n",
                    r.n, r.practical, r.central_binomial.practical
                )
            })
            .collect(),
    })
}
