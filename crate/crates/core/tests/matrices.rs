use clearlab::classify::{clear_witness, unit_regular_witness};
use clearlab::decomp::{clear_decompose_full, verify_clear_decomposition};
use clearlab::descriptor::parse_ring;
use clearlab::ring::{hom_image, Elem};
use clearlab::smith::{fullness, reduce_full_to_unit_diag, smith_normal_form};
use clearlab::survey::snf_properties_hold;
use clearlab::verdict::{Verdict, Witness};
use proptest::prelude::*;

fn int_matrix(es: [i64; 4]) -> Elem {
    Elem::Mat(es.iter().map(|&v| Elem::int(v)).collect())
}

#[test]
fn decomposition_covers_every_full_matrix_of_small_rings() {
    for n in [2, 3, 4] {
        let ring = parse_ring(&format!("M2(Z/{n})")).unwrap();
        let mut full = 0;
        for a in ring.elements().unwrap() {
            let f = fullness(&ring, &a).unwrap();
            match clear_decompose_full(&ring, &a) {
                Ok(d) => {
                    assert!(f.is_full);
                    full += 1;
                    assert_eq!(
                        verify_clear_decomposition(&ring, &d),
                        Ok(()),
                        "{a} over Z/{n}"
                    );
                    // the search agrees the element is clear
                    assert!(clear_witness(&ring, &a, 0).unwrap().is_yes());
                }
                Err(_) => assert!(!f.is_full, "{a} over Z/{n}"),
            }
        }
        assert!(full > 0);
    }
}

#[test]
fn singular_full_matrices_are_flagged() {
    let mz = parse_ring("M2(Z)").unwrap();
    let d = clear_decompose_full(&mz, &int_matrix([1, 0, 0, 0])).unwrap();
    assert!(!d.within_hypotheses);
    assert_eq!(verify_clear_decomposition(&mz, &d), Ok(()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_invariants(es in prop::array::uniform4(-60i64..=60)) {
        prop_assert!(snf_properties_hold(&int_matrix(es)));
    }

    #[test]
    fn smith_form_over_zn(es in prop::array::uniform4(0u64..36), n in 2u64..=36) {
        let ring = parse_ring(&format!("M2(Z/{n})")).unwrap();
        let a = Elem::Mat(es.iter().map(|&v| Elem::Res(v % n)).collect());
        let s = smith_normal_form(&ring, &a).unwrap();
        prop_assert_eq!(ring.mul_all([&s.p, &a, &s.q]), s.d.clone());
        prop_assert!(ring.is_unit(&s.p) && ring.is_unit(&s.q));
        let base = ring.matrix_base().unwrap();
        prop_assert_eq!(base.mul(&s.multiplier, &s.d1), s.d2.clone());
        let f = fullness(&ring, &a).unwrap();
        prop_assert_eq!(f.is_full, base.is_unit(&s.d1));
        if f.is_full {
            let u = reduce_full_to_unit_diag(&ring, &a).unwrap();
            let target = Elem::Mat(vec![base.one(), base.zero(), base.zero(), u.d.clone()]);
            prop_assert_eq!(ring.mul_all([&u.p, &a, &u.q]), target);
        }
    }

    #[test]
    fn full_matrices_decompose(es in prop::array::uniform4(-40i64..=40)) {
        let mz = parse_ring("M2(Z)").unwrap();
        let a = int_matrix(es);
        let f = fullness(&mz, &a).unwrap();
        prop_assume!(f.is_full);
        let d = clear_decompose_full(&mz, &a).unwrap();
        prop_assert_eq!(verify_clear_decomposition(&mz, &d), Ok(()));
        prop_assert_eq!(d.within_hypotheses, f.is_nonsingular);
        if f.is_nonsingular {
            prop_assert!(d.nontrivial);
        }
    }

    #[test]
    fn unit_regular_over_z_survives_reduction(es in prop::array::uniform4(-12i64..=12)) {
        let mz = parse_ring("M2(Z)").unwrap();
        let a = int_matrix(es);
        if let Verdict::Yes(w) = unit_regular_witness(&mz, &a).unwrap() {
            prop_assert!(w.validate(&mz));
            for n in 2..=8u64 {
                let (img, fa) = hom_image(&mz, &a, n).unwrap();
                prop_assert!(unit_regular_witness(&img, &fa).unwrap().is_yes());
            }
        }
    }

    #[test]
    fn clear_over_int_matrices_validates(es in prop::array::uniform4(-15i64..=15)) {
        let mz = parse_ring("M2(Z)").unwrap();
        let a = int_matrix(es);
        let w = clear_witness(&mz, &a, 2).unwrap().into_witness().unwrap();
        prop_assert!(w.validate(&mz));
    }
}
