use enriques::quasihomogeneous::{check_quasihomogeneous_membership, Bamboo};
use enriques::{
    build_enriques_diagram, derived_invariants, milnor_orlik, minimal_diagram, parse_spec,
    QuasihomogeneousSpec, WeightedDiagram,
};
use proptest::prelude::*;

/// `(p − 1)(q − 1)`, from the lattice points under the Newton polygon of
/// `x^p + y^q`.
fn milnor_by_kouchnirenko(spec: &QuasihomogeneousSpec) -> i64 {
    // 2V − a − b + 1 for a convenient polygon with intercepts a, b
    let (p, q) = (spec.p() as i64, spec.q() as i64);
    assert_eq!((spec.k(), spec.l()), (0, 0));
    let twice_area = p * q;
    twice_area - p - q + 1
}

#[test]
fn oracle_matches_brieskorn_pham() {
    for s in QuasihomogeneousSpec::all_up_to(30) {
        if s.k() == 0 && s.l() == 0 {
            assert_eq!(milnor_orlik(&s).unwrap(), milnor_by_kouchnirenko(&s), "{s}");
        }
    }
}

#[test]
fn diagram_mu_equals_oracle_up_to_thirty() {
    let specs = QuasihomogeneousSpec::all_up_to(30);
    assert!(specs.len() > 1700);
    for s in specs {
        let d = build_enriques_diagram(&s);
        assert!(d.is_complete(), "{s}");
        assert_eq!(d.milnor_number().unwrap(), milnor_orlik(&s).unwrap(), "{s}");
    }
}

#[test]
fn hand_checked_values() {
    let mu = |k, l, p, q| milnor_orlik(&QuasihomogeneousSpec::new(k, l, p, q).unwrap()).unwrap();
    assert_eq!(mu(1, 0, 2, 3), 7); // x^3 + x y^3
    assert_eq!(mu(1, 0, 2, 5), 13); // x^3 + x y^5
    assert_eq!(mu(1, 0, 1, 2), 3); // x^2 + x y^2, an A_3
    assert_eq!(mu(1, 1, 1, 1), 4); // D_4
}

#[test]
fn every_spec_is_recognized_as_quasihomogeneous() {
    for s in QuasihomogeneousSpec::all_up_to(10) {
        let m = minimal_diagram(&s);
        let r = check_quasihomogeneous_membership(&m).unwrap();
        let b = r.bamboo.as_ref().unwrap();
        let inv = derived_invariants(&s);
        assert_eq!(
            (b.d as u64, b.t as u64, b.w as u64),
            (inv.d, inv.t, inv.w),
            "{s}"
        );
        if let Some(c) = r.constraints {
            assert!(c.hold(), "{s}: {c:?}");
        }
        let back = r
            .reconstructed
            .unwrap_or_else(|| panic!("{s} not reconstructed"));
        assert_eq!(
            minimal_diagram(&back).canonical_key(),
            m.canonical_key(),
            "{s}"
        );
    }
}

#[test]
fn non_bamboo_is_not_quasihomogeneous() {
    let mut b = WeightedDiagram::builder(4);
    b.free(0, 2);
    b.free(0, 2);
    let r = check_quasihomogeneous_membership(&b.build().unwrap()).unwrap();
    assert_eq!(r.bamboo, None);
    assert!(!r.is_quasihomogeneous());
}

#[test]
fn bamboo_of_six_nine() {
    let b = Bamboo::of(&minimal_diagram(&parse_spec("x^6+y^9").unwrap())).unwrap();
    assert_eq!(b.chain, vec![0, 1, 2]);
    assert_eq!((b.d, b.t, b.w), (3, 3, 2));
}

#[test]
fn parse_examples() {
    let s = |k, l, p, q| QuasihomogeneousSpec::new(k, l, p, q).unwrap();
    assert_eq!(parse_spec("x^6+y^9").unwrap(), s(0, 0, 6, 9));
    assert_eq!(parse_spec("x*y*(x^1+y^1)").unwrap(), s(1, 1, 1, 1));
    assert_eq!(parse_spec("x^9+y^6").unwrap(), s(0, 0, 6, 9));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_text_round_trips(k in 0u8..2, l in 0u8..2, p in 1u32..40, q in 1u32..40) {
        let Ok(s) = QuasihomogeneousSpec::normalized(k, l, p, q) else { return Ok(()); };
        prop_assert_eq!(parse_spec(&s.polynomial()).unwrap(), s);
        prop_assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
        if s.p() < s.q() {
            let swapped = format!("{},{},{},{}", s.l(), s.k(), s.q(), s.p());
            prop_assert_eq!(parse_spec(&swapped).unwrap(), s);
        }
    }
}
