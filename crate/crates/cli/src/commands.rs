use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use brunnian_core::disk_braids::{
    brunnian_gens_disk, equal, is_brunnian, james_hopf, BraidWord, HopfOrder, PureBraidWord,
};
use brunnian_core::kernel_basis::{basis_chain, in_projection_kernels, ProjectionFamily};
use brunnian_core::presentations::{
    abelianization, builtin, normal_closure_size, order_profile, todd_coxeter, Enumeration, Presentation,
};
use brunnian_core::rp2_braids::{
    b2_removal_images, brun3_basis, brunnian_verdict, is_brunnian3, normal_form, u_alphabet, GenWord3,
};
use brunnian_core::stallings::fold;
use brunnian_core::{Alphabet, Word};

use crate::args::{BasisKind, EnumerateKind, GroupArgs};
use crate::report::RunReport;
use crate::CliError;

/// Reads `@path` arguments from disk.
pub fn read_word(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn load_presentation(g: &GroupArgs) -> Result<Presentation, CliError> {
    let path = Path::new(&g.presentation);
    if g.n.is_none() && path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", g.presentation)))?;
        return Ok(Presentation::parse(&text)?);
    }
    let key = match g.n {
        Some(n) => format!("{}({n})", g.presentation),
        None => g.presentation.clone(),
    };
    Ok(builtin(&key)?)
}

fn group_inputs(g: &GroupArgs) -> Value {
    json!({"presentation": g.presentation, "n": g.n, "cap": g.cap})
}

fn profile_json(p: &BTreeMap<usize, usize>) -> Value {
    Value::Object(p.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

pub fn order(g: &GroupArgs) -> Result<RunReport, CliError> {
    let p = load_presentation(g)?;
    let report = RunReport::new("order", group_inputs(g));
    let outputs = match todd_coxeter(&p, &[], g.cap)? {
        Enumeration::Closed(t) => {
            let profile = if t.is_regular() { Some(profile_json(&order_profile(&t)?)) } else { None };
            json!({
                "name": p.name,
                "closed": true,
                "order": t.len(),
                "profile": profile,
                "abelianization": abelianization(&p),
            })
        }
        Enumeration::DidNotClose { cap, live, defined } => json!({
            "name": p.name,
            "closed": false,
            "order": null,
            "cap": cap,
            "live": live,
            "defined": defined,
        }),
    };
    Ok(report.finish(outputs))
}

pub fn profile(g: &GroupArgs) -> Result<RunReport, CliError> {
    let p = load_presentation(g)?;
    let report = RunReport::new("profile", group_inputs(g));
    let t = todd_coxeter(&p, &[], g.cap)?.into_table()?;
    let prof = order_profile(&t)?;
    Ok(report.finish(json!({"name": p.name, "order": t.len(), "profile": profile_json(&prof)})))
}

pub fn closure(g: &GroupArgs, gens: &[String]) -> Result<RunReport, CliError> {
    let p = load_presentation(g)?;
    let mut inputs = group_inputs(g);
    inputs["gens"] = json!(gens);
    let report = RunReport::new("closure", inputs);
    let words = gens
        .iter()
        .map(|t| p.word(&read_word(t)?).map_err(CliError::from))
        .collect::<Result<Vec<Word>, _>>()?;
    let t = todd_coxeter(&p, &[], g.cap)?.into_table()?;
    let (size, elements) = normal_closure_size(&t, &words)?;
    let quotient = p.with_relators(&words)?;
    let quotient_order = todd_coxeter(&quotient, &[], g.cap)?.index();
    let reps: Vec<String> = elements.iter().map(|&e| t.representative(e).to_string()).collect();
    let mut report = report;
    if let Some(q) = quotient_order {
        report.check("closure.index", q * size == t.len(), format!("{q} * {size} = {}", t.len()));
    }
    Ok(report.finish(json!({
        "group_order": t.len(),
        "closure_size": size,
        "elements": reps,
        "quotient_order": quotient_order,
    })))
}

enum GroupSpec {
    Disk(usize),
    Rp2Three,
    Rp2Two,
}

fn parse_group(spec: &str) -> Result<GroupSpec, CliError> {
    match spec.split_once(':') {
        Some(("disk", n)) => match n.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(GroupSpec::Disk(n)),
            _ => Err(CliError::Usage(format!("bad strand count in {spec:?}"))),
        },
        Some(("rp2", "3")) => Ok(GroupSpec::Rp2Three),
        Some(("rp2", "2")) => Ok(GroupSpec::Rp2Two),
        _ => Err(CliError::Usage(format!(
            "unsupported group {spec:?} (expected disk:N, rp2:3 or rp2:2)"
        ))),
    }
}

pub fn brunnian(spec: &str, word: &str) -> Result<RunReport, CliError> {
    let text = read_word(word)?;
    let report = RunReport::new("brunnian", json!({"group": spec, "word": text}));
    let outputs = match parse_group(spec)? {
        GroupSpec::Disk(n) => {
            let b = BraidWord::parse(n, &text)?;
            let faces: Vec<String> = (1..=n)
                .map(|i| b.remove_strand(i).map(|f| f.normal_form().to_word().to_string()))
                .collect::<Result<_, _>>()?;
            json!({
                "word": b.to_string(),
                "strands": n,
                "pure": b.is_pure(),
                "brunnian": is_brunnian(&b),
                "d": faces,
            })
        }
        GroupSpec::Rp2Three => serde_json::to_value(brunnian_verdict(&GenWord3::parse(&text)?)).expect("serializable"),
        GroupSpec::Rp2Two => {
            let p = builtin("Bn_RP2(2)")?;
            let w = p.word(&text)?;
            let t = todd_coxeter(&p, &[], 10_000)?.into_table()?;
            let d = b2_removal_images(&w)?;
            json!({
                "word": w.to_string(),
                "element": t.representative(t.evaluate(&w)?).to_string(),
                "brunnian": d == [0, 0],
                "d": d,
            })
        }
    };
    Ok(report.finish(outputs))
}

pub fn normal_form_cmd(spec: &str, word: &str) -> Result<RunReport, CliError> {
    let text = read_word(word)?;
    let report = RunReport::new("normal-form", json!({"group": spec, "word": text}));
    let outputs = match parse_group(spec)? {
        GroupSpec::Disk(n) => {
            let nf = BraidWord::parse(n, &text)?.normal_form();
            let factors: Vec<Vec<usize>> = nf
                .factors
                .iter()
                .map(|f| f.iter().map(|&x| x as usize + 1).collect())
                .collect();
            json!({
                "strands": n,
                "inf": nf.inf,
                "factors": factors,
                "canonical_length": nf.canonical_length(),
                "word": nf.to_word().to_string(),
            })
        }
        GroupSpec::Rp2Three => {
            let nf = normal_form(&GenWord3::parse(&text)?);
            json!({"upart": nf.upart.to_string(), "qpart": nf.qpart.to_string()})
        }
        GroupSpec::Rp2Two => {
            return Err(CliError::Usage("normal-form supports disk:N and rp2:3".into()));
        }
    };
    Ok(report.finish(outputs))
}

pub fn basis(which: &BasisKind) -> Result<RunReport, CliError> {
    match which {
        BasisKind::Rp2Brun3 => {
            let mut report = RunReport::new("basis", json!({"kind": "rp2-brun3"}));
            let words = brun3_basis();
            let graph = fold(u_alphabet(), &words)?;
            for (k, w) in words.iter().enumerate() {
                let ok = is_brunnian3(&GenWord3::from_upart(w)?);
                report.check(format!("brunnian.{}", k + 1), ok, w.to_string());
            }
            report.check("rank", graph.rank() == words.len(), format!("rank {}", graph.rank()));
            Ok(report.finish(json!({
                "generators": {"x1": "w", "x2": "A23"},
                "words": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "rank": graph.rank(),
                "index_in_u3": graph.index(),
            })))
        }
        BasisKind::Kernel { alphabet, k, ybound } => {
            let mut report = RunReport::new("basis", json!({"kind": "kernel", "alphabet": alphabet, "k": k, "ybound": ybound}));
            if *ybound == 0 || *k == 0 {
                return Err(CliError::Usage("k and ybound must be positive".into()));
            }
            let s = Alphabet::new(alphabet.iter().map(|x| x.trim()))?;
            let fam = ProjectionFamily::complements(&s)?;
            let chain = basis_chain(&fam, *k, *ybound)?;
            let indices: Vec<usize> = (0..*k).collect();
            let mut unsound = 0;
            let mut bad_derivations = 0;
            for e in &chain {
                unsound += !in_projection_kernels(&e.word, &fam, &indices)? as usize;
                bad_derivations += !e.verify() as usize;
            }
            report.check("sound", unsound == 0, format!("{unsound} of {} outside the kernels", chain.len()));
            report.check(
                "derivations",
                bad_derivations == 0,
                format!("{bad_derivations} derivations do not expand to their word"),
            );
            let elements: Vec<Value> = chain
                .iter()
                .map(|e| json!({"word": e.word.to_string(), "derivation": e.derivation.describe()}))
                .collect();
            Ok(report.finish(json!({"count": chain.len(), "elements": elements})))
        }
    }
}

pub fn enumerate(which: &EnumerateKind) -> Result<RunReport, CliError> {
    match which {
        EnumerateKind::BrunnianDisk { n, conj } => {
            let mut report = RunReport::new("enumerate", json!({"kind": "brunnian-disk", "n": n, "conj": conj}));
            if *n < 3 {
                return Err(CliError::Usage("brunnian-disk needs n >= 3".into()));
            }
            let gens = brunnian_gens_disk(*n, *conj)?;
            let failures = gens.iter().filter(|b| !is_brunnian(b)).count();
            report.check("brunnian", failures == 0, format!("{failures} of {} not Brunnian", gens.len()));
            let a_words: Vec<String> = gens
                .iter()
                .map(|b| PureBraidWord::from_braid(b).map(|a| a.to_string()))
                .collect::<Result<_, _>>()?;
            Ok(report.finish(json!({
                "count": gens.len(),
                "words": gens.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "a_words": a_words,
            })))
        }
    }
}

pub fn hopf(strands: usize, n: usize, order: &str, word: &str) -> Result<RunReport, CliError> {
    let text = read_word(word)?;
    let order: HopfOrder = order.parse()?;
    let mut report = RunReport::new(
        "hopf",
        json!({"strands": strands, "n": n, "order": order.to_string(), "word": text}),
    );
    report.resolutions.insert("james_hopf_order".into(), order.to_string());
    let beta = if text.contains("A[") {
        PureBraidWord::parse(strands, &text)?
    } else {
        PureBraidWord::from_braid(&BraidWord::parse(strands, &text)?)?
    };
    let h = james_hopf(&beta, n, order)?;
    if n > strands {
        let lower = james_hopf(&beta, n - 1, order)?.to_braid();
        for i in 1..=n {
            let ok = equal(&h.to_braid().remove_strand(i)?, &lower)?;
            report.check(format!("face.{i}"), ok, format!("d{i} H({strands},{n}) = H({strands},{})", n - 1));
        }
    }
    Ok(report.finish(json!({
        "beta": beta.to_string(),
        "a_word": h.to_string(),
        "a_length": h.len(),
        "sigma_length": h.to_braid().len(),
    })))
}
