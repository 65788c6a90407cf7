use brunnian_core::disk_braids::{
    equal, is_brunnian, james_hopf, ALetter, BraidLetter, BraidWord, HopfOrder, PureBraidWord,
};
use proptest::prelude::*;

fn braid(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            BraidWord::new(n, ls.into_iter().map(|(i, inv)| BraidLetter::new(i, inv)).collect()).unwrap()
        })
    })
}

fn braid_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| {
        let one = prop::collection::vec((1..n, any::<bool>()), 0..=max_len);
        (one.clone(), one).prop_map(move |(x, y)| {
            let mk = |ls: Vec<(usize, bool)>| {
                BraidWord::new(n, ls.into_iter().map(|(i, inv)| BraidLetter::new(i, inv)).collect()).unwrap()
            };
            (mk(x), mk(y))
        })
    })
}

fn pure_word(n: usize, max_len: usize) -> impl Strategy<Value = PureBraidWord> {
    prop::collection::vec((1..=n, 1..=n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .filter(|(i, j, _)| i != j)
            .map(|(i, j, inv)| ALetter::new(i.min(j), i.max(j), inv));
        PureBraidWord::new(n, letters).unwrap()
    })
}

fn eq(a: &BraidWord, b: &BraidWord) -> bool {
    equal(a, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn faces_commute(b in braid(6, 12), i in 0usize..6, j in 0usize..6) {
        let n = b.strands();
        let j = 1 + j % (n - 1);
        let i = j + i % (n - j);
        let lhs = b.remove_strand(j).unwrap().remove_strand(i).unwrap();
        let rhs = b.remove_strand(i + 1).unwrap().remove_strand(j).unwrap();
        prop_assert!(eq(&lhs, &rhs));
    }

    #[test]
    fn face_of_product(b in braid(6, 12), c in prop::collection::vec((1usize..6, any::<bool>()), 0..=12), i in 1usize..=6) {
        let n = b.strands();
        prop_assume!(i <= n);
        let c = BraidWord::new(n, c.into_iter().map(|(k, inv)| BraidLetter::new(1 + (k - 1) % (n - 1), inv)).collect()).unwrap();
        let lhs = b.mul(&c).unwrap().remove_strand(i).unwrap();
        let moved = b.permutation().apply(i);
        let rhs = b.remove_strand(i).unwrap().mul(&c.remove_strand(moved).unwrap()).unwrap();
        prop_assert!(eq(&lhs, &rhs));
    }

    #[test]
    fn relator_insertion(b in braid(6, 12), at in 0usize..=12, k in 1usize..5, kind in 0u8..3) {
        let n = b.strands();
        let k = 1 + (k - 1) % (n - 1);
        let relator = match kind {
            0 if k + 1 < n => format!("s{k} s{} s{k} (s{} s{k} s{})^-1", k + 1, k + 1, k + 1),
            1 if k + 2 < n => format!("s{k} s{} s{k}^-1 s{}^-1", k + 2, k + 2),
            _ => format!("s{k}^-1 s{k}"),
        };
        let r = BraidWord::parse(n, &relator).unwrap();
        let at = at.min(b.len());
        let mut letters = b.letters()[..at].to_vec();
        letters.extend_from_slice(r.letters());
        letters.extend_from_slice(&b.letters()[at..]);
        let spliced = BraidWord::new(n, letters).unwrap();
        prop_assert!(eq(&spliced, &b));
        prop_assert_eq!(spliced.normal_form(), b.normal_form());
    }

    #[test]
    fn permutation_and_exponent_sum((b, c) in braid_pair(6, 12)) {
        let bc = b.mul(&c).unwrap();
        prop_assert_eq!(bc.permutation(), b.permutation().then(&c.permutation()));
        let nf = BraidWord::from_free_word(bc.strands(), &bc.normal_form().to_word().to_free_word(
            &brunnian_core::disk_braids::sigma_alphabet(bc.strands())).unwrap()).unwrap();
        prop_assert_eq!(nf.exponent_sum(), bc.exponent_sum());
    }

    #[test]
    fn normal_form_is_idempotent(b in braid(6, 12)) {
        let nf = b.normal_form();
        prop_assert_eq!(nf.to_word().normal_form(), nf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bi_delta_identities(n in 2usize..=5, seed in pure_word(5, 8), i in 1usize..=6, j in 1usize..=6) {
        let w = PureBraidWord::new(n, seed.letters().iter().copied().filter(|l| l.j <= n)).unwrap();
        prop_assume!(i <= n + 1 && j <= n + 1);
        let lhs = w.coface(i).unwrap().face(j).unwrap();
        let rhs = if j < i {
            w.face(j).unwrap().coface(i - 1).unwrap()
        } else if j == i {
            w.clone()
        } else {
            w.face(j - 1).unwrap().coface(i).unwrap()
        };
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(eq(&lhs.to_braid(), &rhs.to_braid()));
    }

    #[test]
    fn faces_of_a_words_match_strand_removal(w in pure_word(5, 8), k in 1usize..=5) {
        let via_sigma = w.to_braid().remove_strand(k).unwrap();
        prop_assert!(eq(&via_sigma, &w.face(k).unwrap().to_braid()));
    }

    #[test]
    fn combing_round_trip(w in pure_word(4, 6), c in braid(4, 6)) {
        prop_assume!(c.strands() == 4);
        let b = c.mul(&w.to_braid()).unwrap().mul(&c.inverse()).unwrap();
        let combed = PureBraidWord::from_braid(&b).unwrap();
        prop_assert!(eq(&combed.to_braid(), &b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn james_hopf_faces(c in pure_word(3, 3)) {
        let base = PureBraidWord::parse(3, "[A[1,3], A[2,3]]").unwrap();
        let beta = base.mul(&c).unwrap().mul(&base).unwrap().mul(&c.inverse()).unwrap();
        prop_assume!(is_brunnian(&beta.to_braid()));
        for order in [HopfOrder::Lex, HopfOrder::Colex] {
            let h4 = james_hopf(&beta, 4, order).unwrap();
            let h5 = james_hopf(&beta, 5, order).unwrap();
            for i in 1..=4 {
                prop_assert!(eq(&h4.face(i).unwrap().to_braid(), &beta.to_braid()));
            }
            for i in 1..=5 {
                prop_assert!(eq(&h5.face(i).unwrap().to_braid(), &h4.to_braid()));
            }
        }
    }
}
