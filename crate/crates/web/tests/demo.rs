use betadix_web::demo;
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn expand_one_in_base_two() {
    let v = parse(demo::expand("x", "2", "0,3", "1", 8).unwrap());
    assert_eq!(v["rendered"], "(03)*3");
    assert_eq!(v["prefix"], serde_json::json!(["3", "3", "0", "3", "0", "3", "0", "3"]));
}

#[test]
fn cns_verdicts() {
    assert_eq!(parse(demo::cns("x^2+1", "-1+x").unwrap())["is_cns"], true);
    let v = parse(demo::cns("x^2+1", "1+x").unwrap());
    assert_eq!(v["witness_cycle"], serde_json::json!(["x"]));
    assert!(demo::cns("x^2+1", "2").is_err());
}

#[test]
fn curve_for_powers_of_two() {
    let v = parse(demo::count_curve("x", "2", "3", "2", 1000, false).unwrap());
    assert_eq!(v["hits"], serde_json::json!([2, 8]));
    assert_eq!(v["c1"], "108");
    assert!(demo::count_curve("x", "2", "3", "2", demo::MAX_N + 1, false).is_err());
    assert!(demo::count_curve("x", "2", "3", "7", 10, false).is_err());
}
