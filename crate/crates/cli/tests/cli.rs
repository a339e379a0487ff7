use betadix::counting::CountMode;
use betadix::padic::HypothesisMode;
use betadix_cli::{Command, ExperimentManifest, Format, Params};
use proptest::prelude::*;
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command as Process, Output};

fn betadix(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_betadix"))
        .args(args)
        .env_remove("BETADIX_N")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("betadix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn count_reports_exceptional_exponents() {
    let out = betadix(&["count", "--ring", "x", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "10000", "-q"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["hits"], serde_json::json!([2, 8]));
    assert_eq!(v["M"], 2);
}

#[test]
fn expand_prefix() {
    let out = betadix(&["expand", "--ring", "x", "--beta", "2", "--digits", "0,3", "--value", "1", "--k", "8", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3,3,0,3,0,3,0,3\n");
    let out = betadix(&["expand", "--beta", "2", "--digits", "0,3", "--value", "1"]);
    let v = json(&out);
    assert_eq!(v["preperiod"], serde_json::json!(["3"]));
    assert_eq!(v["period"], serde_json::json!(["3", "0"]));
    assert_eq!(v["radix"], Value::Null);
}

#[test]
fn cns_check_gaussian() {
    let out = betadix(&["cns-check", "--ring", "x^2+1", "--beta", "1+i"]);
    let v = json(&out);
    assert_eq!(v["is_cns"], false);
    assert_eq!(v["witness_cycle"], serde_json::json!(["x"]));
    let out = betadix(&["cns-check", "--ring", "x^2+1", "--beta", "-1+x", "--format", "text"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("is_cns: true"));
}

#[test]
fn exit_codes() {
    // Ramified prime above 1+i: hypothesis rejection.
    let out = betadix(&["count", "--ring", "x^2+1", "--alpha", "3", "--beta", "1+x", "--digit", "1", "--N", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "E_RAMIFIED_PRIME");
    // Same request in exploration mode succeeds with a warning.
    let out = betadix(&[
        "count", "--ring", "x^2+1", "--alpha", "3", "--beta", "1+x", "--digit", "1", "--N", "10", "--hypothesis", "exploration", "-q",
    ]);
    assert!(out.status.success());
    assert!(!json(&out)["warnings"].as_array().unwrap().is_empty());
    let out = betadix(&["count", "--alpha", "3", "--beta", "6", "--digit", "1", "--N", "10"]);
    assert_eq!(out.status.code(), Some(2));
    // Internal errors and bad usage exit with 1.
    let out = betadix(&["expand", "--ring", "x^2-1", "--beta", "2", "--value", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = betadix(&["expand", "--beta", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "E_MISSING_ARGUMENT");
    let out = betadix(&["count", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_lists_error_codes() {
    let out = betadix(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for (code, _) in betadix::Error::CODES.iter().chain(betadix_cli::CliError::CODES) {
        assert!(text.contains(code), "{code} missing from --help");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["bound-report", "--alpha", "3", "--beta", "10", "--digit", "7", "--N", "2000", "-q"];
    let a = betadix(&args);
    let b = betadix(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "4"]);
    assert_eq!(betadix(&parallel).stdout, a.stdout);
    let sampled = ["gap-check", "--alpha", "2", "--beta", "3", "--k", "2", "--samples", "300", "--seed", "7"];
    assert_eq!(betadix(&sampled).stdout, betadix(&sampled).stdout);
}

#[test]
fn bound_report_matches_digit_scan() {
    let out = betadix(&["bound-report", "--alpha", "3", "--beta", "10", "--digit", "7", "--N", "10000", "-q"]);
    let v = json(&out);
    let naive = (1..=10_000u32)
        .filter(|&n| !num_bigint::BigUint::from(3u32).pow(n).to_string().contains('7'))
        .count();
    assert_eq!(v["report"]["count"], naive);
    let out = betadix(&["bound-report", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "1", "-q"]);
    let v = json(&out);
    assert_eq!(v["report"]["counts"].as_array().unwrap().len(), 1);
    assert_eq!(v["report"]["counts"][0]["M"], 0);
    let out = betadix(&["bound-report", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "19683", "-q"]);
    let v = json(&out);
    assert_eq!(v["report"]["narkiewicz_ok"], true);
    assert_eq!(v["report"]["within_bound"], true);
}

#[test]
fn resume_from_checkpoint() {
    let ckpt = scratch("count.json");
    let base = ["count", "--alpha", "2", "--beta", "3", "--digit", "1", "--N", "800", "-q"];
    let mut args = base.to_vec();
    let ckpt_s = ckpt.to_str().unwrap();
    args.extend(["--checkpoint", ckpt_s]);
    let full = betadix(&args);
    assert!(full.status.success());
    // Rewind the checkpoint to an earlier stage and resume from it.
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&ckpt).unwrap()).unwrap();
    let hits: Vec<u64> = c["progress"]["hits"].as_array().unwrap().iter().map(|h| h.as_u64().unwrap()).collect();
    c["progress"]["next_n"] = 244.into();
    c["progress"]["hits"] = hits.iter().filter(|&&h| h < 244).copied().collect::<Vec<_>>().into();
    std::fs::write(&ckpt, c.to_string()).unwrap();
    let mut resumed = base.to_vec();
    resumed.extend(["--resume", ckpt_s]);
    assert_eq!(betadix(&resumed).stdout, full.stdout);
    // A checkpoint cannot be applied to another experiment.
    let out = betadix(&["count", "--alpha", "5", "--beta", "3", "--digit", "1", "--N", "800", "--resume", ckpt_s]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn manifests_run_like_flags() {
    let path = scratch("manifest.json");
    let p = path.to_str().unwrap();
    let direct = betadix(&["count", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "500", "-q", "--save-manifest", p]);
    let manifest = ExperimentManifest::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(manifest.command, Command::Count);
    assert_eq!(manifest.params.n, Some(500));
    assert_eq!(betadix(&["run", p, "-q"]).stdout, direct.stdout);
}

#[test]
fn environment_variables() {
    let out = Process::new(env!("CARGO_BIN_EXE_betadix"))
        .args(["count", "--alpha", "2", "--beta", "3", "--digit", "2", "-q"])
        .env("BETADIX_N", "100")
        .env("BETADIX_FORMAT", "text")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2\n8\n");
}

#[test]
fn other_commands() {
    let out = betadix(&["interpolate", "--alpha", "2", "--beta", "3", "--K", "20", "--l", "1", "--x", "4"]);
    let v = json(&out);
    assert_eq!(v["u"], 6);
    assert_eq!(v["primes"][0]["agrees"], true);
    let out = betadix(&["gap-check", "--alpha", "2", "--beta", "3", "--k", "3", "--N", "100"]);
    let v = json(&out);
    assert_eq!(v["c0_tilde"], 9);
    assert!(v["violations"].as_array().unwrap().is_empty());
    let out = betadix(&["persistence", "--value", "39", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,base,l,orbit\n39,10,3,39;27;14;4\n");
    let out = betadix(&["persistence", "--N", "100", "--base", "10"]);
    assert_eq!(json(&out)["max_l"], 4);
    let out = betadix(&["practical", "--value", "4"]);
    let v = json(&out);
    assert_eq!(v[0]["central_binomial"]["binomial"], "70");
    assert_eq!(v[0]["central_binomial"]["practical"], false);
    let out = betadix(&["practical", "--N", "300", "--format", "csv"]);
    assert!(out.status.success());
}

fn opt_text() -> impl Strategy<Value = Option<String>> {
    prop::option::of("[-+0-9x]{1,8}")
}

fn arb_manifest() -> impl Strategy<Value = ExperimentManifest> {
    let command = prop::sample::select(vec![
        Command::Expand,
        Command::CnsCheck,
        Command::Count,
        Command::BoundReport,
        Command::Interpolate,
        Command::GapCheck,
        Command::Persistence,
        Command::Practical,
    ]);
    (
        command,
        ("[x0-9^+-]{1,10}", opt_text(), opt_text(), opt_text(), opt_text()),
        (
            prop::option::of(any::<u64>()),
            prop::option::of(any::<u32>()),
            prop::option::of(any::<u32>()),
            prop::option::of(any::<u64>()),
        ),
        (any::<bool>(), any::<bool>(), 0usize..3, any::<u64>(), prop::option::of(0usize..1000)),
    )
        .prop_map(|(command, (ring, alpha, beta, digits, digit), (n, precision, k, u), (explore, adic, fmt, seed, samples))| {
            ExperimentManifest {
                command,
                params: Params {
                    ring,
                    alpha,
                    beta,
                    digits,
                    digit,
                    n,
                    precision,
                    k,
                    u,
                    hypothesis: if explore { HypothesisMode::Exploration } else { HypothesisMode::Theorem },
                    count_mode: if adic { CountMode::BetaAdic } else { CountMode::RadixOnly },
                    format: [Format::Json, Format::Csv, Format::Text][fmt],
                    seed,
                    samples,
                    ..Params::default()
                },
            }
        })
}

proptest! {
    #[test]
    fn manifests_round_trip(m in arb_manifest()) {
        prop_assert_eq!(ExperimentManifest::parse(&m.render()).unwrap(), m);
    }
}

fn schema(name: &str) -> Value {
    let path = format!("{}/../../docs/schema/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_required(schema: &Value, doc: &Value) {
    for key in schema["required"].as_array().unwrap() {
        assert!(doc.get(key.as_str().unwrap()).is_some(), "{key} missing");
    }
    let known = schema["properties"].as_object().unwrap();
    for key in doc.as_object().unwrap().keys() {
        assert!(known.contains_key(key), "{key} not in schema");
    }
}

#[test]
fn outputs_follow_published_schemas() {
    let count = betadix(&["count", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "50", "-q"]);
    assert_required(&schema("count.schema.json"), &json(&count));
    let report = json(&betadix(&["bound-report", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "50", "-q"]));
    let s = schema("bound-report.schema.json");
    assert_required(&s, &report);
    assert_required(&s["properties"]["report"], &report["report"]);
    let path = scratch("schema-manifest.json");
    betadix(&["count", "--alpha", "2", "--beta", "3", "--digit", "2", "--N", "50", "-q", "--save-manifest", path.to_str().unwrap()]);
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_required(&schema("manifest.schema.json"), &manifest);
    let err = betadix(&["count", "--alpha", "3", "--beta", "6", "--digit", "1", "--N", "10"]);
    assert_required(&schema("error.schema.json"), &serde_json::from_slice(&err.stderr).unwrap());
}
