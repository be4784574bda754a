//! JSON reports for the CLI. Ideals are given by a greedy generating set
//! and, for small ideals, their member indices.

use crate::absorbing::absorbing_report;
use crate::corpus::CorpusConfig;
use crate::error::{Error, Result};
use crate::extension::{build_minimal_from_qmax, BuildOutcome, Extension, MinimalType};
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::qmax::{
    classify_qmax, is_kasch, is_spir, is_submaximal, k_intersection_and_sandwich, qmax_all, QMaxClass,
};
use crate::ring::Ring;
use crate::suites::SuiteReport;
use crate::zdedekind::classify_z_ideal;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

/// Ideals with more members than this are reported by generators only.
const LIST_MEMBERS: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub limits: Limits,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusConfig>,
    pub results: Value,
    /// Only filled on request, so that default output is reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    pub fn new(command: String, seed: u64, results: Value) -> Report {
        Report { schema: SCHEMA_VERSION, command, seed, limits: Limits::current(), corpus: None, results, wall_time_ms: None }
    }
}

/// Repeatedly adds the element whose principal ideal grows the partial sum
/// the most, smallest index first on ties.
pub fn generators(r: &Ring, i: &Ideal) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut acc = Ideal::zero(r);
    while &acc != i {
        let best = i
            .iter()
            .filter(|&x| !acc.contains(x))
            .map(|x| (r.ideal_sum(&acc, &r.principal_ideal(x)), x))
            .max_by(|(a, x), (b, y)| a.len().cmp(&b.len()).then(y.cmp(x)))
            .expect("acc is a proper subset of i");
        gens.push(best.1);
        acc = best.0;
    }
    gens
}

pub fn ideal_json(r: &Ring, i: &Ideal) -> Value {
    let mut v = json!({ "size": i.len(), "generators": generators(r, i) });
    if i.len() <= LIST_MEMBERS {
        v["members"] = json!(i.to_vec());
    }
    v
}

pub fn ring_summary(r: &Ring) -> Result<Value> {
    let l = r.lattice()?;
    Ok(json!({
        "label": r.label(),
        "size": r.size(),
        "characteristic": r.characteristic(),
        "units": r.units().len(),
        "names": r.names().iter().map(|(n, k)| (n.clone(), *k)).collect::<BTreeMap<_, _>>(),
        "ideals": l.len(),
        "maximal_ideals": l.maximal_ideals().iter().map(|&k| ideal_json(r, l.get(k))).collect::<Vec<_>>(),
        "local_factors": r.local_factors().len(),
    }))
}

fn class_json(r: &Ring, class: &QMaxClass) -> Value {
    match class {
        QMaxClass::Inert => json!({ "type": "inert" }),
        QMaxClass::Decomposed { m1, m2 } => json!({ "type": "decomposed", "m1": ideal_json(r, m1), "m2": ideal_json(r, m2) }),
        QMaxClass::Ramified { m } => json!({ "type": "ramified", "m": ideal_json(r, m) }),
        QMaxClass::NotQuasiMaximal { element, above } => {
            json!({ "type": "none", "element": element, "above": ideal_json(r, above) })
        }
    }
}

/// Type with witnesses, submaximality, and the 2-absorbing/primal/Λ data.
pub fn classify_report(r: &Ring, i: &Ideal) -> Result<Value> {
    if i.is_unit() {
        return Err(Error::InvalidParameter("the unit ideal is not classified".into()));
    }
    let class = classify_qmax(r, i)?;
    Ok(json!({
        "ring": r.label(),
        "ideal": ideal_json(r, i),
        "classification": class_json(r, &class),
        "submaximal": is_submaximal(r, i)?,
        "absorbing": absorbing_report(r, i)?,
    }))
}

pub fn analyze_ring(r: &Ring) -> Result<Value> {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    let l = r.lattice()?;
    for k in l.proper() {
        *counts.entry(classify_qmax(r, l.get(k))?.tag().name()).or_default() += 1;
    }
    let (k, sandwich) = k_intersection_and_sandwich(r)?;
    Ok(json!({
        "ring": ring_summary(r)?,
        "spir": is_spir(r)?.map(|(gen, index)| json!({ "generator": gen, "nilpotency_index": index })),
        "kasch": is_kasch(r)?,
        "k_intersection": ideal_json(r, &k),
        "k_sandwich": sandwich,
        "type_counts": counts,
        "quasi_maximal": qmax_all(r)?.iter().map(|(i, c)| {
            json!({ "ideal": ideal_json(r, i), "classification": class_json(r, c) })
        }).collect::<Vec<_>>(),
    }))
}

fn minimal_json(ext: &Extension) -> Result<Value> {
    if !ext.is_proper() {
        return Ok(json!({ "type": "equal" }));
    }
    let s = ext.ambient();
    Ok(match ext.classify_minimal()? {
        MinimalType::NotMinimal => json!({ "type": "not-minimal" }),
        MinimalType::Inert { degree, .. } => json!({ "type": "inert", "degree": degree }),
        MinimalType::Decomposed { m1, m2, q, .. } => {
            json!({ "type": "decomposed", "m1": ideal_json(s, &m1), "m2": ideal_json(s, &m2), "q": q })
        }
        MinimalType::Ramified { m_prime, q, .. } => json!({ "type": "ramified", "m_prime": ideal_json(s, &m_prime), "q": q }),
    })
}

pub fn analyze_extension(ext: &Extension) -> Result<Value> {
    let (r, s) = (ext.sub(), ext.ambient());
    let c = ext.conductor();
    let mut v = json!({
        "sub": ring_summary(r)?,
        "ambient": ring_summary(s)?,
        "image": ext.image().ones().collect::<Vec<_>>(),
        "integral": ext.is_integral(),
        "conductor": ideal_json(s, c),
        "conductor_type": if c.is_unit() { "unit" } else { classify_qmax(s, c)?.tag().name() },
        "support": ext.support().iter().map(|m| ideal_json(r, m)).collect::<Vec<_>>(),
        "minimal": minimal_json(ext)?,
    });
    if ext.is_proper() {
        let inter = ext.intermediate_rings()?;
        v["intermediate_rings"] = json!(inter.len());
        v["i_extension"] = json!(ext.is_i_extension()?);
        v["infra_integral"] = json!(ext.is_infra_integral()?);
        v["seminormalization_size"] = json!(ext.seminormalization()?.ambient().size());
        v["t_closure_size"] = json!(ext.t_closure()?.ambient().size());
    }
    Ok(v)
}

pub fn lattice_report(r: &Ring) -> Result<Value> {
    let l = r.lattice()?;
    let ideals: Vec<Value> = (0..l.len())
        .map(|k| {
            let mut v = ideal_json(r, l.get(k));
            v["index"] = json!(k);
            v["maximal"] = json!(l.is_maximal(k));
            v["prime"] = json!(l.is_prime_index(k));
            v
        })
        .collect();
    Ok(json!({
        "ring": r.label(),
        "ideals": ideals,
        "covers": l.cover_pairs(),
        "jacobson": ideal_json(r, l.jacobson()),
        "nilradical": ideal_json(r, l.nilradical()),
    }))
}

/// Inverse construction: a subring R with conductor I, or the obstruction.
pub fn construct_report(s: &Ring, i: &Ideal) -> Result<Value> {
    let tag = classify_qmax(s, i)?.tag();
    Ok(match build_minimal_from_qmax(s, i)? {
        BuildOutcome::Built { ext, tag: built } => json!({
            "ideal_type": tag.name(),
            "built": true,
            "minimal_type": built,
            "subring_size": ext.sub().size(),
            "subring": ext.image().ones().collect::<Vec<_>>(),
            "conductor": ideal_json(s, ext.conductor()),
            "conductor_matches": ext.conductor() == i,
        }),
        BuildOutcome::Failed(f) => json!({ "ideal_type": tag.name(), "built": false, "failure": f, "reason": f.to_string() }),
    })
}

pub fn z_ideal_report(n: u64) -> Result<Value> {
    let z = classify_z_ideal(n)?;
    Ok(serde_json::to_value(z).expect("plain data"))
}

pub fn verify_report(reports: &[SuiteReport]) -> Value {
    json!({
        "passed": reports.iter().all(|r| r.passed()),
        "suites": reports,
    })
}

/// Plain-text rendering of a JSON value: nested keys become indented lines.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    text_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn text_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_into(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text_into(out, x, depth + 1);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}

