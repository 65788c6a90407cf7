use std::collections::HashMap;

use brunnian_core::presentations::{
    abelianization, builtin, order_profile, todd_coxeter, Enumeration, Presentation,
};
use brunnian_core::rp2_braids::{normal_form, GenWord3};
use brunnian_core::{FreeHom, Word};

fn order(p: &Presentation, cap: usize) -> Option<usize> {
    todd_coxeter(p, &[], cap).unwrap().index()
}

fn replace_relation(p: &Presentation, old: &str, new: &str) -> Presentation {
    let old = p.word(old).unwrap();
    let mut rels: Vec<Word> = p.relators.iter().filter(|r| **r != old).cloned().collect();
    assert_eq!(rels.len() + 1, p.relators.len(), "relation present");
    rels.push(p.word(new).unwrap());
    Presentation::new("variant", p.generators.clone(), rels).unwrap()
}

#[test]
fn b3_quotient_variants() {
    let p = builtin("B3_mod_Brun3").unwrap();
    assert_eq!(order(&p, 200_000), Some(384));
    let without_b = replace_relation(&p, "s2^-1 wb s2 (b wb^-1 Ab)^-1", "s2^-1 wb s2 Ab^-1 wb");
    assert_eq!(order(&without_b, 200_000), Some(48));
    let no_braid = replace_relation(&without_b, "s1 s2 s1 (s2 s1 s2)^-1", "1");
    assert!(matches!(
        todd_coxeter(&no_braid, &[], 200_000).unwrap(),
        Enumeration::DidNotClose { .. }
    ));
}

#[test]
fn b3_relators_hold_in_the_quotient() {
    let big = builtin("B3_RP2").unwrap();
    let quotient = builtin("B3_mod_Brun3").unwrap();
    let table = todd_coxeter(&quotient, &[], 200_000).unwrap().into_table().unwrap();
    let images: HashMap<String, Word> = [("a", "a"), ("b", "b"), ("w", "wb"), ("A23", "Ab"), ("s1", "s1"), ("s2", "s2")]
        .iter()
        .map(|(k, v)| (k.to_string(), quotient.word(v).unwrap()))
        .collect();
    let f = FreeHom::new(&big.generators, &quotient.generators, &images).unwrap();
    for r in &big.relators {
        assert_eq!(table.evaluate(&f.apply(r).unwrap()).unwrap(), 0, "{r}");
    }
}

/// Conjugation by `s1` and `s2` must be automorphisms of `P₃`: each relator of
/// the `a, b, w, A23` presentation is sent to the identity.
#[test]
fn b3_conjugations_preserve_p3() {
    let big = builtin("B3_RP2").unwrap();
    let p3 = builtin("P3_RP2_ab").unwrap();
    for s in ["s1", "s2"] {
        let mut images = HashMap::new();
        for g in ["a", "b", "w", "A23"] {
            let lhs = big.word(&format!("{s}^-1 {g} {s}")).unwrap();
            let rel = big
                .relators
                .iter()
                .find(|r| r.letters().len() > 3 && r.letters()[..3] == lhs.letters()[..])
                .unwrap_or_else(|| panic!("relation for {s}^-1 {g} {s}"));
            let rhs = lhs.inverse().mul(rel).unwrap().inverse();
            images.insert(g.to_string(), rhs.over(&p3.generators).unwrap());
        }
        let phi = FreeHom::new(&p3.generators, &p3.generators, &images).unwrap();
        for r in &p3.relators {
            let image = phi.apply(r).unwrap();
            let w = GenWord3::parse(&image.to_string()).unwrap();
            assert!(normal_form(&w).is_identity(), "{s}: {r}");
        }
    }
}

#[test]
fn p3_quotient_and_u3() {
    assert_eq!(order(&builtin("P3_mod_Brun3").unwrap(), 10_000), Some(64));
    let u3 = builtin("U3_mod_Brun3").unwrap();
    assert_eq!(abelianization(&u3), vec![4, 2]);
    let t = todd_coxeter(&u3, &[], 1000).unwrap().into_table().unwrap();
    let profile: Vec<(usize, usize)> = order_profile(&t).unwrap().into_iter().collect();
    assert_eq!(profile, vec![(1, 1), (2, 3), (4, 4)]);
}

#[test]
fn sphere_three_strands() {
    let p = builtin("Bn_S2(3)").unwrap();
    assert_eq!(order(&p, 10_000), Some(12));
    let pure: Vec<Word> = ["s1^2", "s2^2", "s2 s1^2 s2^-1"]
        .iter()
        .map(|t| p.word(t).unwrap())
        .collect();
    let index = todd_coxeter(&p, &pure, 10_000).unwrap().index();
    // |P₃(S²)| = |B₃(S²)| / |Σ₃|
    assert_eq!(index, Some(6));
}

#[test]
fn van_buskirk_agrees_with_the_reduced_presentation() {
    assert_eq!(order(&builtin("Bn_RP2(2)").unwrap(), 10_000), Some(16));
    assert_eq!(order(&builtin("VanBuskirk_Bn_RP2(2)").unwrap(), 10_000), Some(16));
}
