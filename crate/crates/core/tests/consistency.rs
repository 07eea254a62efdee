use clearlab::brute::Profile;
use clearlab::classify::{
    clean_witness, clear_witness, exchange_test, two_clean_test, two_good_test,
    unit_regular_witness, ursr1_test,
};
use clearlab::descriptor::{parse_element, parse_ring};
use clearlab::finite::{FiniteRing, DEFAULT_BUDGET};
use clearlab::json::{elem_from_json, elem_to_json};
use clearlab::ring::{Elem, Ring};
use clearlab::survey::{classify_ring, default_catalog, is_squarefree};
use clearlab::verdict::{Refutation, Verdict, Witness};
use proptest::prelude::*;

fn decided<W>(v: &Verdict<W>) -> bool {
    match v {
        Verdict::Yes(_) => true,
        Verdict::No(Refutation::ExhaustiveEnumeration) => false,
        other => panic!("finite search answered {}", other.label()),
    }
}

#[test]
fn element_predicates_match_tables() {
    let mut rings = default_catalog();
    rings.push(parse_ring("Z/3 x Z/4").unwrap());
    for ring in rings {
        let fr = FiniteRing::new(&ring, DEFAULT_BUDGET).unwrap();
        let p = Profile::new(&fr);
        for i in 0..fr.len() {
            let a = fr.elem(i);
            let ur = unit_regular_witness(&ring, a).unwrap();
            let cl = clean_witness(&ring, a, 0).unwrap();
            let cr = clear_witness(&ring, a, 0).unwrap();
            let tg = two_good_test(&ring, a, 0).unwrap();
            let tc = two_clean_test(&ring, a, 0).unwrap();
            assert_eq!(decided(&ur), p.is_unit_regular(i), "{a} in {ring}");
            assert_eq!(decided(&cl), p.is_clean(i), "{a} in {ring}");
            assert_eq!(decided(&cr), p.clear[i], "{a} in {ring}");
            assert_eq!(decided(&tg), p.two_good[i], "{a} in {ring}");
            assert_eq!(decided(&tc), p.two_clean[i], "{a} in {ring}");
            assert!(ur.witness().is_none_or(|w| w.validate(&ring)));
            assert!(cl.witness().is_none_or(|w| w.validate(&ring)));
            assert!(cr.witness().is_none_or(|w| w.validate(&ring)));
            assert!(tg.witness().is_none_or(|w| w.validate(&ring)));
            assert!(tc.witness().is_none_or(|w| w.validate(&ring)));
            let ex = exchange_test(&ring, a).unwrap();
            assert_eq!(ex.is_some(), p.exchange[i]);
            assert!(ex.is_none_or(|w| w.validate(&ring)));
        }
    }
}

#[test]
fn implication_lattice_on_catalog() {
    for ring in default_catalog() {
        let r = classify_ring(&ring, DEFAULT_BUDGET).unwrap();
        let f = r.flags;
        assert!(!f.is_unit_regular_ring || f.is_clean_ring, "{ring}");
        assert!(!f.is_clean_ring || f.is_clear_ring, "{ring}");
        assert!(!f.is_clear_ring || f.is_2clean_ring, "{ring}");
        assert_eq!(f.has_ursr1, ursr1_test(&ring).unwrap().holds, "{ring}");
    }
}

#[test]
fn crt_matches_product() {
    let prod = parse_ring("Z/2 x Z/3").unwrap();
    let z6 = Ring::modular(6).unwrap();
    for v in 0..6u64 {
        let a = Elem::Res(v);
        let pair = Elem::pair(Elem::Res(v % 2), Elem::Res(v % 3));
        assert_eq!(
            clear_witness(&z6, &a, 0).unwrap().is_yes(),
            clear_witness(&prod, &pair, 0).unwrap().is_yes()
        );
        assert_eq!(
            unit_regular_witness(&z6, &a).unwrap().is_yes(),
            unit_regular_witness(&prod, &pair).unwrap().is_yes()
        );
    }
    let a = classify_ring(&prod, DEFAULT_BUDGET).unwrap().flags;
    let b = classify_ring(&z6, DEFAULT_BUDGET).unwrap().flags;
    assert_eq!(a, b);
}

#[test]
fn unit_regular_exactly_when_squarefree() {
    for n in 2..=60 {
        let r = classify_ring(&Ring::modular(n).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.flags.is_unit_regular_ring, is_squarefree(n), "Z/{n}");
    }
}

#[test]
fn small_matrix_rings_are_2good_despite_idempotents() {
    // every 2x2 matrix over a field is a sum of two units, so the ring is
    // 2-good although it has nontrivial idempotents
    for name in ["M2(Z/2)", "M2(Z/3)"] {
        let r = classify_ring(&parse_ring(name).unwrap(), DEFAULT_BUDGET).unwrap();
        assert!(
            r.flags.is_2good_ring && r.flags.has_nontrivial_idempotents,
            "{name}"
        );
    }
}

fn ring_strategy() -> impl Strategy<Value = Ring> {
    prop::sample::select(vec![
        "Z",
        "Z/7",
        "Z/12",
        "M2(Z)",
        "M2(Z/6)",
        "Z/2 x Z/3",
        "Z x M2(Z/4)",
        "M3(Z/5)",
    ])
    .prop_map(|s| parse_ring(s).unwrap())
}

proptest! {
    #[test]
    fn json_round_trips(ring in ring_strategy(), seed in 0u64..1_000_000) {
        // any element reachable from integers by ring operations
        let a = ring.from_i64(seed as i64 - 500_000);
        let b = ring.from_i64((seed % 97) as i64);
        let x = ring.sub(&ring.mul(&a, &a), &b);
        let v = elem_to_json(&ring, &x);
        prop_assert_eq!(elem_from_json(&ring, &v).unwrap(), x.clone());
        let text = x.to_string();
        prop_assert_eq!(parse_element(&ring, &text).unwrap(), x);
    }

    #[test]
    fn descriptors_round_trip(ring in ring_strategy()) {
        prop_assert_eq!(parse_ring(&ring.to_string()).unwrap(), ring);
    }
}
