mod support;

use support::{golden_mismatches, round_trip_failures, run};

#[test]
fn golden_files_match() {
    assert_eq!(golden_mismatches(), Vec::<String>::new());
}

#[test]
fn json_round_trip_is_stable() {
    assert_eq!(round_trip_failures(), Vec::<String>::new());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["jump", "x*y*(x^4+y^6)"][..],
        &["enumerate", "--max-vertices", "4", "--max-weight", "3"],
        &["adjacent", "0,0,3,4", "0,0,2,3"],
    ] {
        assert_eq!(run(args), run(args));
    }
}

fn check_dot(text: &str) {
    assert!(text.starts_with("digraph enriques {\n"));
    assert!(text.ends_with("}\n"));
    assert_eq!(text.matches('{').count(), text.matches('}').count());
    let mut declared = std::collections::HashSet::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some((from, rest)) = line.split_once(" -> ") {
            let to = rest.split_whitespace().next().unwrap();
            assert!(declared.contains(from) && declared.contains(to), "{line}");
            assert!(line.contains("kind=\""), "{line}");
        } else if line.starts_with('v') {
            declared.insert(line.split_whitespace().next().unwrap().to_string());
        }
    }
}

#[test]
fn dot_is_well_formed() {
    for spec in ["x^6+y^9", "x*y*(x^2+y^7)", "0,0,5,5", "0,1,1,4"] {
        for which in ["--minimal", "--complete", "--adjacent"] {
            let (code, text, _) = run(&["diagram", which, "--format", "dot", spec]);
            assert_eq!(code, 0);
            check_dot(&text);
        }
    }
}

#[test]
fn dot_edge_kinds() {
    let (_, text, _) = run(&["diagram", "--minimal", "--format", "dot", "x^6+y^9"]);
    assert!(text.contains("v0 -> v1 [kind=\"free\"];"));
    assert!(text.contains("v1 -> v2 [kind=\"satellite\"];"));
    assert!(text.contains("v2 -> v0 [kind=\"proximity\""));
}
