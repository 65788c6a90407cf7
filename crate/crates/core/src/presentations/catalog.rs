use super::Presentation;
use crate::error::{Error, Result};
use crate::free_words::{Alphabet, Word};

const FIXED: &[(&str, &str)] = &[
    ("P2_RP2", include_str!("../../data/P2_RP2.pres")),
    ("P3_RP2_rho", include_str!("../../data/P3_RP2_rho.pres")),
    ("P3_RP2_ab", include_str!("../../data/P3_RP2_ab.pres")),
    ("P3_mod_Brun3", include_str!("../../data/P3_mod_Brun3.pres")),
    ("B3_RP2", include_str!("../../data/B3_RP2.pres")),
    ("B3_mod_Brun3", include_str!("../../data/B3_mod_Brun3.pres")),
    ("U3_mod_Brun3", include_str!("../../data/U3_mod_Brun3.pres")),
    ("Q8", include_str!("../../data/Q8.pres")),
];

const PARAMETRIC: &[&str] = &["Bn_RP2", "VanBuskirk_Bn_RP2", "Artin_Bn", "Bn_S2"];

/// Every catalog key; parametric families are listed as `Name(n)`.
pub fn builtin_names() -> Vec<String> {
    FIXED
        .iter()
        .map(|(k, _)| k.to_string())
        .chain(PARAMETRIC.iter().map(|k| format!("{k}(n)")))
        .collect()
}

/// Splits `Name(n)` into its parts; plain names have no parameter.
pub fn parse_key(key: &str) -> Result<(String, Option<usize>)> {
    let key = key.trim();
    match key.split_once('(') {
        Some((name, rest)) => {
            let n = rest
                .strip_suffix(')')
                .and_then(|s| s.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownPresentation(key.to_string()))?;
            Ok((name.trim().to_string(), Some(n)))
        }
        None => Ok((key.to_string(), None)),
    }
}

/// Looks up a catalog presentation, e.g. `"P2_RP2"` or `"Bn_RP2(3)"`.
pub fn builtin(key: &str) -> Result<Presentation> {
    let (name, n) = parse_key(key)?;
    if let Some((_, text)) = FIXED.iter().find(|(k, _)| *k == name) {
        if n.is_some() {
            return Err(Error::UnknownPresentation(key.to_string()));
        }
        return Presentation::parse(text);
    }
    let n = n.ok_or_else(|| Error::UnknownPresentation(key.to_string()))?;
    if n < 1 {
        return Err(Error::invalid("strand count", "must be at least 1"));
    }
    match name.as_str() {
        "Artin_Bn" => artin(n),
        "Bn_RP2" => projective(n),
        "VanBuskirk_Bn_RP2" => van_buskirk(n),
        "Bn_S2" => sphere(n),
        _ => Err(Error::UnknownPresentation(key.to_string())),
    }
}

fn s(i: usize) -> String {
    format!("s{i}")
}

fn braid_relations(n: usize) -> Vec<String> {
    let mut rels = Vec::new();
    for i in 1..n.saturating_sub(1) {
        rels.push(format!("s{i} s{j} s{i} = s{j} s{i} s{j}", j = i + 1));
    }
    for i in 1..n {
        for j in i + 2..n {
            rels.push(format!("s{i} s{j} = s{j} s{i}"));
        }
    }
    rels
}

/// `σ₁σ₂⋯σ_{n-2}σ_{n-1}²σ_{n-2}⋯σ₁`
fn full_loop(n: usize) -> String {
    let up: Vec<String> = (1..n - 1).map(s).collect();
    let down: Vec<String> = (1..n - 1).rev().map(s).collect();
    format!("{} s{}^2 {}", up.join(" "), n - 1, down.join(" "))
}

fn strand_gens(n: usize) -> Vec<String> {
    (1..n).map(s).collect()
}

fn assemble(name: String, gens: Vec<String>, rels: Vec<String>, notes: Vec<String>) -> Result<Presentation> {
    let alphabet = Alphabet::new(gens)?;
    let relators = rels
        .iter()
        .map(|r| super::relation(&alphabet, r))
        .collect::<Result<Vec<Word>>>()?;
    let mut p = Presentation::new(name, alphabet, relators)?;
    p.notes = notes;
    Ok(p)
}

fn artin(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::invalid("strand count", "Artin_Bn needs n ≥ 2"));
    }
    assemble(format!("Artin_Bn({n})"), strand_gens(n), braid_relations(n), Vec::new())
}

fn sphere(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::invalid("strand count", "Bn_S2 needs n ≥ 2"));
    }
    let mut rels = braid_relations(n);
    rels.push(full_loop(n));
    assemble(
        format!("Bn_S2({n})"),
        strand_gens(n),
        rels,
        vec!["Standard sphere braid presentation (Artin relations plus s1 ... s_{n-1}^2 ... s1 = 1); background material used only as a cross-check.".into()],
    )
}

fn projective(n: usize) -> Result<Presentation> {
    let mut gens = strand_gens(n);
    gens.push("rho".into());
    let mut rels = braid_relations(n);
    for i in 2..n {
        rels.push(format!("rho s{i} = s{i} rho"));
    }
    if n >= 2 {
        rels.push("s1^-1 rho s1^-1 rho = rho s1^-1 rho s1".into());
        rels.push(format!("rho^2 = {}", full_loop(n)));
    } else {
        rels.push("rho^2".into());
    }
    assemble(format!("Bn_RP2({n})"), gens, rels, Vec::new())
}

fn van_buskirk(n: usize) -> Result<Presentation> {
    let mut gens = strand_gens(n);
    gens.extend((1..=n).map(|j| format!("r{j}")));
    // (i), (ii)
    let mut rels = braid_relations(n);
    // (iii)
    for i in 1..n {
        for j in 1..=n {
            if j != i && j != i + 1 {
                rels.push(format!("r{j} s{i} = s{i} r{j}"));
            }
        }
    }
    // (iv)
    for i in 1..n {
        rels.push(format!("r{i} = s{i} r{j} s{i}", j = i + 1));
    }
    // (v)
    for i in 1..n {
        rels.push(format!("r{j}^-1 r{i}^-1 r{j} r{i} = s{i}^2", j = i + 1));
    }
    // (vi)
    if n >= 2 {
        rels.push(format!("r1^2 = {}", full_loop(n)));
    } else {
        rels.push("r1^2".into());
    }
    assemble(format!("VanBuskirk_Bn_RP2({n})"), gens, rels, Vec::new())
}
