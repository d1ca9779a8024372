use pqeuler::harness::{check, check_all, CHECKS};

#[test]
fn every_check_passes_at_defaults() {
    let reports = check_all().unwrap();
    assert_eq!(reports.len(), CHECKS.len());
    for r in &reports {
        assert!(r.passed, "{r}");
        assert!(r.witness.is_none());
    }
}

#[test]
fn reports_are_reproducible() {
    for id in ["jv", "contra", "thm3_2"] {
        let strip = |mut v: serde_json::Value| {
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        };
        let a = strip(serde_json::to_value(check(id, 5).unwrap()).unwrap());
        let b = strip(serde_json::to_value(check(id, 5).unwrap()).unwrap());
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn spec_examples() {
    let r = check("jv", 5).unwrap();
    assert!(r.passed);
    assert_eq!(r.param, 5);
    assert!(check("jv", 4).unwrap().passed);
    assert!(check("euler_roselle", 2).unwrap().passed);
}

#[test]
fn report_json_shape() {
    let v = serde_json::to_value(check("egf", 3).unwrap()).unwrap();
    assert_eq!(v["id"], "egf");
    assert_eq!(v["param_kind"], "n");
    assert_eq!(v["param"], 3);
    assert_eq!(v["passed"], true);
    assert!(v["witness"].is_null());
}
