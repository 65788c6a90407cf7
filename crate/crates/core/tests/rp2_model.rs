use brunnian_core::rp2_braids::{
    brun3_basis, d_map, equal3, is_brunnian3, normal_form, u_alphabet, Gen3, GenWord3, Rp2Element,
};
use brunnian_core::stallings::fold;
use brunnian_core::Word;
use proptest::prelude::*;

const GENS: [Gen3; 7] = [Gen3::Rho, Gen3::U, Gen3::W, Gen3::A23, Gen3::A13, Gen3::A, Gen3::B];

fn mixed(max_len: usize) -> impl Strategy<Value = GenWord3> {
    prop::collection::vec((0usize..7, any::<bool>()), 0..=max_len)
        .prop_map(|ls| GenWord3::new(ls.into_iter().map(|(k, i)| (GENS[k], i)).collect()))
}

fn brun3_member(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..9, any::<bool>()), 0..=max_len).prop_map(|picks| {
        let basis = brun3_basis();
        let mut w = Word::identity(u_alphabet());
        for (k, inv) in picks {
            let g = if inv { basis[k].inverse() } else { basis[k].clone() };
            w = w.mul(&g).unwrap();
        }
        w
    })
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn normal_form_is_multiplicative(g1 in mixed(10), g2 in mixed(10)) {
        let product = normal_form(&g1.mul(&g2));
        prop_assert_eq!(product, normal_form(&g1).mul(&normal_form(&g2)));
        let inv = normal_form(&g1.inverse());
        prop_assert_eq!(inv, normal_form(&g1).inverse());
    }

    #[test]
    fn d_maps_depend_only_on_the_element(g in mixed(10)) {
        let respelled = normal_form(&g).to_word();
        prop_assert!(equal3(&respelled, &g));
        for i in 1..=3 {
            prop_assert_eq!(d_map(&respelled, i).unwrap(), d_map(&g, i).unwrap());
        }
    }

    #[test]
    fn d_maps_are_homomorphisms(g1 in mixed(8), g2 in mixed(8)) {
        for i in 1..=3 {
            let lhs = d_map(&g1.mul(&g2), i).unwrap();
            prop_assert_eq!(lhs, d_map(&g1, i).unwrap().mul(d_map(&g2, i).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn brunnian_elements_form_a_subgroup(x in brun3_member(4), y in brun3_member(4)) {
        let gx = GenWord3::from_upart(&x).unwrap();
        let gy = GenWord3::from_upart(&y).unwrap();
        prop_assert!(is_brunnian3(&gx));
        prop_assert!(is_brunnian3(&gx.mul(&gy)));
        prop_assert!(is_brunnian3(&gx.inverse()));
    }

    #[test]
    fn conjugates_by_p3_stay_brunnian(x in brun3_member(3), c in mixed(6)) {
        let g = c.mul(&GenWord3::from_upart(&x).unwrap()).mul(&c.inverse());
        prop_assert!(is_brunnian3(&g));
        let nf: Rp2Element = normal_form(&g);
        prop_assert!(nf.qpart.is_identity());
        let graph = fold(u_alphabet(), &brun3_basis()).unwrap();
        prop_assert!(graph.contains(&nf.upart).unwrap());
    }
}
