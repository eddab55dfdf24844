use std::collections::BTreeMap;

use enriques::jump::{adjacent_diagram_construction, closed_form_lambda};
use enriques::quasihomogeneous::Bamboo;
use enriques::{
    check_geq_witness, construct_adjacent_diagram, expected_jump, geq, lambda_lin, lambda_lin_semi,
    linear_adjacent, minimal_diagram, DiagramType, QuasihomogeneousSpec,
};

fn spec(k: u8, l: u8, p: u32, q: u32) -> QuasihomogeneousSpec {
    QuasihomogeneousSpec::new(k, l, p, q).unwrap()
}

#[test]
fn three_computations_agree_up_to_thirty() {
    for s in QuasihomogeneousSpec::all_up_to(30) {
        let r = lambda_lin(&s).unwrap();
        assert_eq!(r.lambda_lin, r.mu_d - r.mu_e, "{s}");
        assert_eq!(r.lambda_lin, expected_jump(r.d, r.w), "{s}");
        assert_eq!(r.lambda_lin, closed_form_lambda(&s), "{s}");
        assert!(r.lambda_lin >= 1, "{s}");
        if r.d == 1 {
            assert_eq!(r.lambda_lin, 1, "{s}");
        }
        assert!(r.e_d.is_minimal() && r.e_d.is_consistent(), "{s}");
        assert_ne!(r.e_d.canonical_key(), r.d_min.canonical_key(), "{s}");
    }
}

#[test]
fn excess_bookkeeping() {
    for s in QuasihomogeneousSpec::all_up_to(30) {
        let d = minimal_diagram(&s);
        let b = Bamboo::of(&d).unwrap();
        let raw = adjacent_diagram_construction(&d).unwrap();
        assert!(raw.is_consistent(), "{s}");
        let (dd, w) = (b.d, b.w as i64);
        let expected = match dd {
            1 => 1,
            2 if w == 0 => -1,
            2 => -2 + w,
            _ => -dd + 2 + w,
        };
        assert_eq!(raw.total_excess() - d.total_excess(), expected, "{s}");
    }
}

#[test]
fn leaf_representative_dominates_e_d_up_to_twelve() {
    let start = std::time::Instant::now();
    for s in QuasihomogeneousSpec::all_up_to(12) {
        let d = minimal_diagram(&s);
        let end = Bamboo::of(&d).unwrap().end();
        let upper = d.add_free_leaf(end, 1).unwrap();
        let e = construct_adjacent_diagram(&d).unwrap();
        let w = geq(&upper, &e).unwrap().unwrap_or_else(|| panic!("{s}"));
        assert!(check_geq_witness(&upper, &e, &w), "{s}");
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn reference_values() {
    let r = lambda_lin(&spec(0, 0, 6, 9)).unwrap();
    assert_eq!(r.lambda_lin, 3);
    assert_eq!(r.d_min.weights(), &[6, 3, 3]);
    assert_eq!(r.e_d.weights(), &[6, 3, 2, 2]);
    assert_eq!((r.mu_d, r.mu_e), (40, 37));
    assert_eq!(lambda_lin(&spec(0, 0, 2, 2)).unwrap().lambda_lin, 1);
    for n in 3..=30 {
        assert_eq!(
            lambda_lin(&spec(0, 0, n, n)).unwrap().lambda_lin,
            n as i64 - 2
        );
        assert_eq!(
            lambda_lin_semi(&spec(0, 0, n, n)).unwrap().lambda_lin,
            n as i64 - 2
        );
    }
}

#[test]
fn jump_depends_only_on_the_type() {
    let mut by_type: BTreeMap<String, i64> = BTreeMap::new();
    for s in QuasihomogeneousSpec::all_up_to(30) {
        let r = lambda_lin(&s).unwrap();
        let prev = by_type
            .entry(r.d_min.canonical_key())
            .or_insert(r.lambda_lin);
        assert_eq!(*prev, r.lambda_lin, "{s}");
    }
}

#[test]
fn adjacency_lowers_mu_on_the_corpus() {
    let mut types: BTreeMap<String, DiagramType> = BTreeMap::new();
    for s in QuasihomogeneousSpec::all_up_to(12) {
        let t = DiagramType::of(&minimal_diagram(&s)).unwrap();
        types.insert(t.canonical_key().to_string(), t);
    }
    let types: Vec<DiagramType> = types.into_values().collect();
    let mut adjacent_pairs = 0;
    for a in &types {
        for b in &types {
            if a == b {
                continue;
            }
            if linear_adjacent(a, b, 1).unwrap().is_yes() {
                adjacent_pairs += 1;
                assert!(b.milnor_number() < a.milnor_number(), "{a} -> {b}");
            }
        }
    }
    assert!(adjacent_pairs > 0);
}

#[test]
fn bound_is_monotone() {
    let types: Vec<DiagramType> = [
        spec(0, 0, 2, 3),
        spec(0, 0, 3, 4),
        spec(0, 0, 4, 6),
        spec(1, 0, 2, 3),
        spec(0, 0, 3, 3),
    ]
    .iter()
    .map(|s| DiagramType::of(&minimal_diagram(s)).unwrap())
    .collect();
    for a in &types {
        for b in &types {
            let mut seen_yes = false;
            for bound in 0..=3 {
                let yes = linear_adjacent(a, b, bound).unwrap().is_yes();
                assert!(!seen_yes || yes, "{a} -> {b} at {bound}");
                seen_yes |= yes;
            }
        }
    }
}
