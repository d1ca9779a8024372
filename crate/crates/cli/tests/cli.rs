use std::process::{Command, Output};

fn pqeuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqeuler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn stats_line() {
    let o = pqeuler(&["stats", "231"]);
    assert!(o.status.success());
    let line = stdout(&o);
    for kv in ["ndes=2", "fmax=1", "toht=0", "thto=1", "mad=3"] {
        assert!(
            line.split_whitespace().any(|w| w == kv),
            "{kv} missing from {line}"
        );
    }
}

#[test]
fn stats_json() {
    let o = pqeuler(&["stats", "312", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mad"], 2);
    assert_eq!(v["inv"], 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        pqeuler(&["verify", "jv", "--n", "5"]).status.code(),
        Some(0)
    );
    assert_eq!(
        pqeuler(&["verify", "sec7", "--order", "6"]).status.code(),
        Some(0)
    );
    let unknown = pqeuler(&["verify", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("check `nope`"));
    assert_eq!(
        pqeuler(&["verify", "sec7", "--order", "40"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pqeuler(&["verify", "jv", "--n", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(pqeuler(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = pqeuler(&["verify", "jv", "--n", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["id"], "jv");
    assert_eq!(v["passed"], true);
}

#[test]
fn cf_expansion() {
    let o = pqeuler(&["cf", "secant-pq", "--order", "4"]);
    assert_eq!(stdout(&o).trim(), "1 + t^2 + (p^2+2*p*q+q^2+1)*t^4");
    let o = pqeuler(&["cf", "secant-pq", "--order", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["preset"], "secant-pq");
    assert_eq!(
        pqeuler(&["cf", "cosecant", "--order", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_polynomial() {
    let o = pqeuler(&[
        "table",
        "--family",
        "A",
        "--n",
        "4",
        "--weight",
        "p^thto*q^toht",
    ]);
    assert_eq!(stdout(&o).trim(), "p^2+2*p*q+q^2+1");
    let o = pqeuler(&["table", "--what", "euler", "--n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn bijections() {
    let o = pqeuler(&["bij", "csz", "412796583"]);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("249385716"));
    assert!(out.contains("f' = "));
    assert_eq!(stdout(&pqeuler(&["bij", "fv", "312"])).trim(), "UD (0,1)");
    assert_eq!(pqeuler(&["bij", "fv", "123"]).status.code(), Some(2));
    assert_eq!(
        pqeuler(&["bij", "--verify", "psi", "--n", "6"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn export_to_file() {
    let dir = std::env::temp_dir().join(format!("pqeuler-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let o = pqeuler(&["export", "--n", "6", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][6]["e_int"], "61");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_variable_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_pqeuler"))
        .args(["verify", "jv", "--n", "3"])
        .env("PQEULER_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_pqeuler"))
        .args(["verify", "jv", "--n", "3"])
        .env("PQEULER_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
