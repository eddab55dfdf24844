mod support;

use std::process::Command;

use support::run;

fn binary(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_enriques"))
        .args(args)
        .output()
        .unwrap();
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(binary(&["mu", "0,0,2,3"]).0, 0);
    // usage errors
    assert_eq!(binary(&["frobnicate"]).0, 2);
    assert_eq!(
        binary(&["diagram", "--minimal", "--complete", "0,0,2,3"]).0,
        2
    );
    assert_eq!(binary(&["diagram", "--format", "svg", "0,0,2,3"]).0, 2);
    assert_eq!(binary(&["mu", "x^2+w^3"]).0, 2);
    // domain errors
    let (code, out, err) = binary(&["mu", "x+y"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("k + l + p >= 2"));
    assert_eq!(binary(&["verify", "0,0,2,3", "--max-vertices", "1"]).0, 1);
    assert_eq!(binary(&["--help"]).0, 0);
}

#[test]
fn mu_check() {
    let (code, out, _) = run(&["mu", "--check", "0,0,2,3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "mu: 2\noracle: 2\nmatch: yes\n");
}

#[test]
fn minimal_text_of_six_nine() {
    let (_, out, _) = run(&["diagram", "--minimal", "--format", "text", "x^6+y^9"]);
    let weights: Vec<&str> = out
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(weights, ["[6]", "[3]", "[3]"]);
}

#[test]
fn parse_forms_agree() {
    let a = run(&["info", "x^9+y^6"]);
    let b = run(&["info", "0,0,6,9"]);
    let c = run(&["info", "( x^6 + y^9 )"]);
    assert_eq!(a, b);
    assert_eq!(b, c);
    assert!(run(&["info", "x*y*(x^1+y^1)"])
        .1
        .starts_with("spec: 1,1,1,1\n"));
}

#[test]
fn jump_reports() {
    let (code, out, _) = run(&["jump", "x^5+y^5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lambda_lin"], 3);
    let (_, out, _) = run(&["jump", "--semi", "--verify", "0,0,2,3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["semi_quasihomogeneous"], true);
    assert_eq!(v["maximality"]["status"], "verified");
    assert_eq!(v["maximality"]["max_vertices"], 7);
}

#[test]
fn adjacent_accepts_files() {
    let (_, e_d, _) = run(&["diagram", "--adjacent", "--format", "json", "x^6+y^9"]);
    let path = std::env::temp_dir().join(format!("enriques-e-d-{}.json", std::process::id()));
    std::fs::write(&path, e_d).unwrap();
    let (code, out, _) = run(&[
        "adjacent",
        "x^6+y^9",
        path.to_str().unwrap(),
        "--extra-bound",
        "1",
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["witness"]["kappa"], serde_json::json!([6, 3, 3, 1]));
    let (_, out, _) = run(&["adjacent", "0,0,2,2", "x^6+y^9"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "no_up_to_bound");
    assert_eq!(v["extra_bound"], 3);
}

#[test]
fn enumerate_lists_keys() {
    let (code, out, _) = run(&["enumerate", "--max-vertices", "2", "--max-weight", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1r[]\n2r[]\n2r[2f[]]\n");
    let (_, out, _) = run(&[
        "enumerate",
        "--max-vertices",
        "3",
        "--max-weight",
        "2",
        "--format",
        "json",
    ]);
    for line in out.lines() {
        enriques::WeightedDiagram::from_json(line).unwrap();
    }
}

#[test]
fn enumeration_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_enriques"))
        .args(["enumerate", "--max-vertices", "6", "--max-weight", "4"])
        .env("ENRIQUES_MAX_CANDIDATES", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 5"));
}

#[test]
fn verify_text_report() {
    let (code, out, _) = run(&["verify", "0,0,3,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("attained max mu: 3\n"));
    assert!(out.ends_with("status: verified\n"));
}
