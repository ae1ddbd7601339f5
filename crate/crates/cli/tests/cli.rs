use std::process::{Command, Output};

fn lfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lfact"))
        .args(args)
        .env_remove("LFACT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn derangement_table() {
    let o = lfact(&["table", "derangement", "0..5"]);
    assert!(o.status.success());
    let values: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values, ["1", "0", "1", "2", "9", "44"]);
}

#[test]
fn lambda_factorial_row() {
    let o = lfact(&["table", "lambda-factorial", "3"]);
    assert_eq!(stdout(&o), "n,value\n3,λ^3 + 3λ + 2\n");
}

#[test]
fn q_table_json() {
    let o = lfact(&["table", "q", "1", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["value"], "λμ + λ^2 + 1");
}

#[test]
fn stirling_rows() {
    let o = lfact(&["table", "stirling2", "4"]);
    assert_eq!(stdout(&o), "n,k,value\n4,0,0\n4,1,1\n4,2,7\n4,3,6\n4,4,1\n");
}

#[test]
fn table_errors() {
    assert_eq!(lfact(&["table", "catalan", "3"]).status.code(), Some(2));
    assert_eq!(lfact(&["table", "lambda-factorial", "40"]).status.code(), Some(2));
    assert_eq!(lfact(&["table", "factorial", "3..1"]).status.code(), Some(2));
    assert!(lfact(&["table", "lambda-factorial", "31", "--unsafe"]).status.success());
}

#[test]
fn verify_thm11() {
    let o = lfact(&["verify", "thm1.1", "--n-max", "10"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.iter().all(|r| r["verdict"] == "pass" && r["residual"] == "0"));
}

#[test]
fn verify_errors() {
    let o = lfact(&["verify", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert_eq!(lfact(&["verify", "thm1.1", "bogus"]).status.code(), Some(2));
    assert_eq!(lfact(&["verify", "thm1.1", "--n-max", "99"]).status.code(), Some(2));
    assert_eq!(lfact(&["verify"]).status.code(), Some(2));
    // 1.0a accepts n-max 13 but 4.1 does not; nothing may run
    let o = lfact(&["verify", "1.0a", "4.1", "--n-max", "13"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn verify_list_names_every_id() {
    let o = lfact(&["verify", "--list"]);
    let text = stdout(&o);
    for info in lfact::identities::catalogue() {
        assert!(
            text.lines().any(|l| l.split_whitespace().next() == Some(info.id)),
            "{}",
            info.id
        );
    }
}

#[test]
fn verify_output_follows_request_order() {
    let o = lfact(&["verify", "4.1", "1.0a", "--n-max", "2"]);
    let ids: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["id"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(ids.first().map(String::as_str), Some("4.1"));
    assert_eq!(ids.last().map(String::as_str), Some("1.0a"));
}

#[test]
fn tree_series() {
    let o = lfact(&["series", "tree", "--order", "4"]);
    assert_eq!(stdout(&o).trim(), "x + x^2 + 3/2 x^3 + 8/3 x^4 + O(x^5)");
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lfact"))
        .args(["series", "tree", "--json"])
        .env("LFACT_ORDER", "3")
        .output()
        .unwrap();
    let v: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, ["0", "1", "1", "3/2"]);
}

#[test]
fn egf_f_series() {
    let o = lfact(&["series", "egf-f", "--order", "2", "--json"]);
    let v: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, ["1", "λ", "1/2 λ^2 + 1/2"]);
}

#[test]
fn abel_rhs_at_lambda_one() {
    let o = lfact(&[
        "series",
        "abel-rhs",
        "--a",
        "factorial",
        "--lambda",
        "1",
        "--order",
        "3",
        "--json",
    ]);
    let v: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, ["1", "1", "2", "6"]);
    let o = lfact(&[
        "series", "abel-rhs", "--a", "ones", "--lambda", "1", "--order", "3", "--json",
    ]);
    let v: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, ["1", "1", "1", "1"]);
}

#[test]
fn series_errors() {
    assert_eq!(lfact(&["series", "tree", "--order", "13"]).status.code(), Some(2));
    assert_eq!(lfact(&["series", "cosine"]).status.code(), Some(2));
    assert_eq!(lfact(&["series", "abel-rhs", "--a", "catalan"]).status.code(), Some(2));
    assert!(lfact(&["series", "tree", "--order", "13", "--unsafe"]).status.success());
}

#[test]
fn bijection_summary() {
    let o = lfact(&["bijection", "2", "2"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "64 objects, round-trip OK, strata k=0:18 k=1:30 k=2:16, total 64 = 4^3"
    );
    let o = lfact(&["bijection", "0", "1"]);
    assert_eq!(
        stdout(&o).trim(),
        "1 object, round-trip OK, strata k=0:1, total 1 = 1^1"
    );
}

#[test]
fn bijection_trace() {
    let o = lfact(&["bijection", "2", "2", "--sigma", "1,4,2,4,5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("recovered: 1,4,2,4,5"));
    assert_eq!(text.matches("digraph ").count(), 3);
    assert!(text.contains("(c1)"));
    // a head-only list is extended by the fixed colour vertices
    let short = lfact(&["bijection", "2", "2", "--sigma", "1,4,2"]);
    assert_eq!(stdout(&short), text);
}

#[test]
fn bijection_rejects_bad_sigma() {
    assert_eq!(
        lfact(&["bijection", "2", "2", "--sigma", "1,1,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lfact(&["bijection", "2", "2", "--sigma", "1,1,9,4,5"]).status.code(),
        Some(2)
    );
    assert_eq!(lfact(&["bijection", "2", "2", "--sigma", "a,b"]).status.code(), Some(2));
    assert_eq!(lfact(&["bijection", "9", "9"]).status.code(), Some(2));
}
