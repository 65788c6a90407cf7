use std::sync::OnceLock;

use brunnian_core::kernel_basis::{basis_chain, in_projection_kernels, ProjectionFamily};
use brunnian_core::stallings::{fold, SubgroupGraph};
use brunnian_core::{commutator, Alphabet, Letter, Word};
use proptest::prelude::*;

fn alphabet() -> Alphabet {
    Alphabet::new(["x1", "x2", "x3"]).unwrap()
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0u32..3, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(&alphabet(), ls.into_iter().map(|(g, i)| Letter::new(g as usize, i))).unwrap())
}

fn truncated_basis_graph() -> &'static SubgroupGraph {
    static GRAPH: OnceLock<SubgroupGraph> = OnceLock::new();
    GRAPH.get_or_init(|| {
        let a = Alphabet::new(["x1", "x2"]).unwrap();
        let fam = ProjectionFamily::complements(&a).unwrap();
        let basis: Vec<Word> = basis_chain(&fam, 2, 6).unwrap().into_iter().map(|e| e.word).collect();
        fold(&a, &basis).unwrap()
    })
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn group_axioms(u in word(10), v in word(10), w in word(10)) {
        let uv_w = u.mul(&v).unwrap().mul(&w).unwrap();
        let u_vw = u.mul(&v.mul(&w).unwrap()).unwrap();
        prop_assert_eq!(&uv_w, &u_vw);
        prop_assert!(u.mul(&u.inverse()).unwrap().is_identity());
        let letters = u.letters();
        prop_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
    }

    #[test]
    fn display_round_trip(u in word(12)) {
        prop_assert_eq!(Word::parse(&alphabet(), &u.to_string()).unwrap(), u);
    }

    #[test]
    fn commutator_identity(u in word(6), v in word(6)) {
        let c = commutator(&u, &v).unwrap();
        let expected = u.inverse().mul(&v.inverse()).unwrap().mul(&u).unwrap().mul(&v).unwrap();
        prop_assert_eq!(&c, &expected);
        prop_assert_eq!(commutator(&v, &u).unwrap(), c.inverse());
    }

    #[test]
    fn membership_and_express(gens in prop::collection::vec(word(5), 1..4), picks in prop::collection::vec((0usize..4, any::<bool>()), 0..6)) {
        let graph = fold(&alphabet(), &gens).unwrap();
        prop_assert!(graph.rank() <= gens.len());
        let mut w = Word::identity(&alphabet());
        for (k, inv) in picks {
            let g = &gens[k % gens.len()];
            w = w.mul(&if inv { g.inverse() } else { g.clone() }).unwrap();
        }
        prop_assert!(graph.contains(&w).unwrap());
        let expr = graph.express(&w).unwrap();
        let mut rebuilt = Word::identity(&alphabet());
        for (k, e) in expr {
            rebuilt = rebuilt.mul(&graph.generators()[k].pow(e as i64)).unwrap();
        }
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn fold_is_order_independent(gens in prop::collection::vec(word(5), 1..4)) {
        let forward = fold(&alphabet(), &gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let backward = fold(&alphabet(), &rev).unwrap();
        prop_assert_eq!(forward.rank(), backward.rank());
        prop_assert_eq!(forward.num_vertices(), backward.num_vertices());
        for g in &gens {
            prop_assert!(backward.contains(g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(200))]

    /// Words in both projection kernels lie in the truncated basis subgroup.
    #[test]
    fn kernel_basis_soundness_and_completeness(u in word(4), v in word(4)) {
        let a = Alphabet::new(["x1", "x2"]).unwrap();
        let fam = ProjectionFamily::complements(&a).unwrap();
        let graph = truncated_basis_graph();
        let u = Word::from_letters(&a, u.letters().iter().copied().filter(|l| l.generator() < 2)).unwrap();
        let v = Word::from_letters(&a, v.letters().iter().copied().filter(|l| l.generator() < 2)).unwrap();
        let x1 = Word::generator(&a, "x1").unwrap();
        let x2 = Word::generator(&a, "x2").unwrap();
        // [x1^u, x2^v] is in both kernels
        let w = commutator(&x1.conjugate_by(&u).unwrap(), &x2.conjugate_by(&v).unwrap()).unwrap();
        prop_assume!(w.len() <= 12);
        prop_assert!(in_projection_kernels(&w, &fam, &[0, 1]).unwrap());
        prop_assert!(graph.contains(&w).unwrap());
    }
}
