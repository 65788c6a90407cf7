//! The acceptance suite behind `brunnian verify`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use brunnian_core::disk_braids::{
    equal, is_brunnian, james_hopf, ALetter, BraidLetter, BraidWord, HopfOrder, PureBraidWord,
};
use brunnian_core::free_words::enumerate_reduced_words;
use brunnian_core::kernel_basis::{basis_chain, in_projection_kernels, ProjectionFamily};
use brunnian_core::presentations::{abelianization, builtin, order_profile, todd_coxeter};
use brunnian_core::rp2_braids::{
    brun2_enumerate, brun3_basis, change_of_generators, is_brunnian3, normal_form, u_alphabet, GenWord3,
};
use brunnian_core::stallings::fold;
use brunnian_core::{Alphabet, Result, Word};

use clap::ValueEnum;

use crate::args::Group;
use crate::report::RunReport;

/// y-bound at which the two-generator kernel basis covers every kernel word
/// of length at most 6.
pub const KERNEL_Y_BOUND: usize = 6;
const FUZZ_WORDS: usize = 1000;

type CheckFn = fn(u64) -> Result<(bool, String)>;

/// Check ids with their groups, in output order.
pub const CHECKS: &[(Group, &str, CheckFn)] = &[
    (Group::Orders, "orders.p2-rp2", p2_rp2),
    (Group::Orders, "orders.b2-rp2", b2_rp2),
    (Group::Orders, "orders.p3-mod-brun3", p3_quotient),
    (Group::Orders, "orders.b3-mod-brun3", b3_quotient),
    (Group::Abelian, "abelian.u3-mod-brun3", u3_quotient),
    (Group::BrunnianRp2, "brunnian-rp2.basis", brun3),
    (Group::P3, "p3.presentations", p3_presentations),
    (Group::Disk, "disk.example", disk_example),
    (Group::Identities, "identities.faces", face_fuzz),
    (Group::Identities, "identities.bi-delta", bi_delta_fuzz),
    (Group::Hopf, "hopf.faces", hopf_faces),
    (Group::Kernel, "kernel.completeness", kernel_completeness),
    (Group::Brun2, "brun2.elements", brun2_elements),
    (Group::Brun2, "brun2.representatives", brun2_representatives),
    (Group::Sphere, "sphere.b3-s2", sphere),
];

pub fn run(only: &[Group], seed: u64) -> RunReport {
    let groups: Vec<String> = only.iter().map(|g| g.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()).collect();
    let mut report = RunReport::new("verify", json!({"only": groups, "seed": seed}));
    report
        .resolutions
        .insert("james_hopf_order".into(), HopfOrder::default().to_string());
    report
        .resolutions
        .insert("kernel_y_bound".into(), KERNEL_Y_BOUND.to_string());
    let mut timings = serde_json::Map::new();
    for &(group, id, check) in CHECKS {
        if !only.is_empty() && !only.contains(&group) {
            continue;
        }
        let start = Instant::now();
        let (passed, detail) = check(seed).unwrap_or_else(|e| (false, format!("error: {e}")));
        timings.insert(id.to_string(), json!(start.elapsed().as_secs_f64() * 1000.0));
        report.check(id, passed, detail);
    }
    let ran = report.checks.len();
    report.finish(json!({"checks_run": ran, "check_ms": timings}))
}

fn order(key: &str, cap: usize) -> Result<Option<usize>> {
    Ok(todd_coxeter(&builtin(key)?, &[], cap)?.index())
}

fn profile(key: &str) -> Result<Vec<(usize, usize)>> {
    let t = todd_coxeter(&builtin(key)?, &[], 10_000)?.into_table()?;
    Ok(order_profile(&t)?.into_iter().collect())
}

fn p2_rp2(_: u64) -> Result<(bool, String)> {
    let n = order("P2_RP2", 10_000)?;
    let p = profile("P2_RP2")?;
    Ok((n == Some(8) && p == [(1, 1), (2, 1), (4, 6)], format!("order {}, profile {p:?}", count(n))))
}

fn b2_rp2(_: u64) -> Result<(bool, String)> {
    let n = order("Bn_RP2(2)", 10_000)?;
    Ok((n == Some(16), format!("order {}", count(n))))
}

fn p3_quotient(_: u64) -> Result<(bool, String)> {
    let n = order("P3_mod_Brun3", 100_000)?;
    Ok((n == Some(64), format!("order {}", count(n))))
}

fn b3_quotient(_: u64) -> Result<(bool, String)> {
    let n = order("B3_mod_Brun3", 1_000_000)?;
    Ok((n == Some(384), format!("order {}", count(n))))
}

fn u3_quotient(_: u64) -> Result<(bool, String)> {
    let inv = abelianization(&builtin("U3_mod_Brun3")?);
    let n = order("U3_mod_Brun3", 10_000)?;
    let p = profile("U3_mod_Brun3")?;
    Ok((
        inv == [4, 2] && n == Some(8) && p == [(1, 1), (2, 3), (4, 4)],
        format!("invariants {inv:?}, order {}, profile {p:?}", count(n)),
    ))
}

fn brun3(_: u64) -> Result<(bool, String)> {
    let basis = brun3_basis();
    let mut brunnian = 0;
    for w in &basis {
        brunnian += is_brunnian3(&GenWord3::from_upart(w)?) as usize;
    }
    let graph = fold(u_alphabet(), &basis)?;
    Ok((
        basis.len() == 9 && brunnian == 9 && graph.rank() == 9,
        format!("{brunnian}/{} Brunnian, rank {}, index {}", basis.len(), graph.rank(), count(graph.index())),
    ))
}

fn p3_presentations(_: u64) -> Result<(bool, String)> {
    let rho = builtin("P3_RP2_rho")?;
    let ab = builtin("P3_RP2_ab")?;
    let (to_rho, to_ab) = change_of_generators()?;
    let mut words: Vec<Word> = rho.relators.iter().chain(&ab.relators).cloned().collect();
    for r in &ab.relators {
        words.push(to_rho.apply(r)?);
    }
    for r in &rho.relators {
        words.push(to_ab.apply(r)?);
    }
    let mut trivial = 0;
    for w in &words {
        trivial += normal_form(&GenWord3::parse(&w.to_string())?).is_identity() as usize;
    }
    Ok((trivial == words.len(), format!("{trivial}/{} relator images trivial", words.len())))
}

fn disk_example(_: u64) -> Result<(bool, String)> {
    let mut verdicts = Vec::new();
    for k in 1..=3 {
        verdicts.push(is_brunnian(&BraidWord::parse(3, &format!("(s1^-1 s2)^{k}"))?));
    }
    Ok((verdicts == [false, false, true], format!("k = 1, 2, 3: {verdicts:?}")))
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| BraidLetter::new(rng.gen_range(1..n), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(n, letters).expect("indices in range")
}

fn face_fuzz(seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..FUZZ_WORDS {
        let n = rng.gen_range(2..=6);
        let b = random_braid(&mut rng, n, 12);
        let j = rng.gen_range(1..n);
        let i = rng.gen_range(j..n);
        let lhs = b.remove_strand(j)?.remove_strand(i)?;
        failures += !equal(&lhs, &b.remove_strand(i + 1)?.remove_strand(j)?)? as usize;
        let c = random_braid(&mut rng, n, 12);
        let i = rng.gen_range(1..=n);
        let lhs = b.mul(&c)?.remove_strand(i)?;
        let rhs = b.remove_strand(i)?.mul(&c.remove_strand(b.permutation().apply(i))?)?;
        failures += !equal(&lhs, &rhs)? as usize;
    }
    Ok((failures == 0, format!("{failures} failures over {FUZZ_WORDS} words, n <= 6, length <= 12")))
}

fn bi_delta_fuzz(seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb1de);
    let mut failures = 0;
    let mut cases = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=8);
        let letters: Vec<ALetter> = (0..len)
            .map(|_| {
                let j = rng.gen_range(2..=n);
                ALetter::new(rng.gen_range(1..j), j, rng.gen_bool(0.5))
            })
            .collect();
        let w = PureBraidWord::new(n, letters)?;
        for i in 1..=n + 1 {
            for j in 1..=n + 1 {
                let lhs = w.coface(i)?.face(j)?;
                let rhs = if j < i {
                    w.face(j)?.coface(i - 1)?
                } else if j == i {
                    w.clone()
                } else {
                    w.face(j - 1)?.coface(i)?
                };
                failures += !(lhs == rhs && equal(&lhs.to_braid(), &rhs.to_braid())?) as usize;
                cases += 1;
            }
        }
    }
    Ok((failures == 0, format!("{failures} failures in {cases} cases, n <= 5")))
}

fn hopf_faces(_: u64) -> Result<(bool, String)> {
    let order = HopfOrder::default();
    let sigma = BraidWord::parse(3, "(s1^-1 s2)^3")?;
    let beta = PureBraidWord::from_braid(&sigma)?;
    let h4 = james_hopf(&beta, 4, order)?.to_braid();
    let h5 = james_hopf(&beta, 5, order)?.to_braid();
    let mut good = 0;
    for i in 1..=4 {
        good += equal(&h4.remove_strand(i)?, &sigma)? as usize;
    }
    for i in 1..=5 {
        good += equal(&h5.remove_strand(i)?, &h4)? as usize;
    }
    Ok((good == 9, format!("{good}/9 face identities, order {order}")))
}

fn kernel_completeness(_: u64) -> Result<(bool, String)> {
    let s = Alphabet::new(["x1", "x2"])?;
    let fam = ProjectionFamily::complements(&s)?;
    let mut unsound = 0;
    for bound in 1..=KERNEL_Y_BOUND {
        for e in basis_chain(&fam, 2, bound)? {
            unsound += !in_projection_kernels(&e.word, &fam, &[0, 1])? as usize;
        }
    }
    let basis: Vec<Word> = basis_chain(&fam, 2, KERNEL_Y_BOUND)?.into_iter().map(|e| e.word).collect();
    let graph = fold(&s, &basis)?;
    let mut targets = 0;
    let mut missing = 0;
    for w in enumerate_reduced_words(&s, 6) {
        if in_projection_kernels(&w, &fam, &[0, 1])? {
            targets += 1;
            missing += !graph.contains(&w)? as usize;
        }
    }
    Ok((
        unsound == 0 && missing == 0,
        format!("{missing}/{targets} kernel words missing at y-bound {KERNEL_Y_BOUND}, {unsound} unsound"),
    ))
}

fn brun2_elements(_: u64) -> Result<(bool, String)> {
    let r = brun2_enumerate()?;
    Ok((
        r.group_order == 16
            && r.members.len() == 4
            && r.contains_sigma1
            && r.contains_rho2
            && r.closure_size == 2
            && r.pure_part_is_closure
            && r.quotient_order == Some(8),
        format!(
            "members {:?}, pure part {:?}, closure size {}, quotient order {}",
            r.members, r.pure_members, r.closure_size, count(r.quotient_order)
        ),
    ))
}

fn brun2_representatives(_: u64) -> Result<(bool, String)> {
    let r = brun2_enumerate()?;
    Ok((
        r.inconsistent.is_empty(),
        format!("{} words, {} inconsistent elements", r.words_checked, r.inconsistent.len()),
    ))
}

fn sphere(_: u64) -> Result<(bool, String)> {
    let p = builtin("Bn_S2(3)")?;
    let n = todd_coxeter(&p, &[], 10_000)?.index();
    let pure = ["s1^2", "s2^2", "s2 s1^2 s2^-1"]
        .iter()
        .map(|t| p.word(t))
        .collect::<Result<Vec<_>>>()?;
    let index = todd_coxeter(&p, &pure, 10_000)?.index();
    let pure_order = n.zip(index).map(|(n, i)| n / i);
    Ok((
        n == Some(12) && pure_order == Some(2),
        format!("|B3(S2)| = {}, index of P3 = {}, |P3(S2)| = {}", count(n), count(index), count(pure_order)),
    ))
}

/// Renders a possibly infinite (or unfinished) count.
fn count(n: Option<usize>) -> String {
    n.map_or_else(|| "unknown".to_string(), |n| n.to_string())
}
