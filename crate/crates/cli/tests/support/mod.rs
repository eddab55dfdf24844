#![allow(dead_code)]

use std::path::PathBuf;

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = enriques_cli::main_with(
        std::iter::once("enriques").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Golden cases: file name and CLI arguments.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "six_nine_minimal.json",
        &["diagram", "--minimal", "--format", "json", "x^6+y^9"],
    ),
    (
        "six_nine_minimal.dot",
        &["diagram", "--minimal", "--format", "dot", "x^6+y^9"],
    ),
    (
        "six_nine_minimal.txt",
        &["diagram", "--minimal", "--format", "text", "x^6+y^9"],
    ),
    (
        "six_nine_adjacent.json",
        &["diagram", "--adjacent", "--format", "json", "x^6+y^9"],
    ),
    (
        "six_nine_adjacent.dot",
        &["diagram", "--adjacent", "--format", "dot", "x^6+y^9"],
    ),
    (
        "six_nine_adjacent.txt",
        &["diagram", "--adjacent", "--format", "text", "x^6+y^9"],
    ),
    ("jump_x6_y9.json", &["jump", "x^6+y^9"]),
];

/// Names of golden files whose contents differ from the current output.
pub fn golden_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (name, args) in GOLDEN {
        let expected = std::fs::read_to_string(golden_path(name)).unwrap_or_default();
        let (code, out, _) = run(args);
        if code != 0 || out != expected {
            bad.push(name.to_string());
        }
    }
    bad
}

/// Diagram JSON emitted by the CLI, parsed and re-emitted, is unchanged.
pub fn round_trip_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for spec in [
        "x^6+y^9",
        "0,0,2,3",
        "x*y*(x^3+y^5)",
        "1,0,4,10",
        "0,1,1,7",
        "x^5+y^5",
    ] {
        for which in ["--minimal", "--complete", "--adjacent"] {
            let (_, text, _) = run(&["diagram", which, "--format", "json", spec]);
            let ok = enriques::WeightedDiagram::from_json(&text).map(|d| d.to_json() == text);
            if ok != Ok(true) {
                bad.push(format!("{spec} {which}"));
            }
        }
    }
    bad
}
