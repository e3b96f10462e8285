use std::time::Instant;

use asinv::auslander::{finite_dim_witness, MIN_TAIL};
use asinv::group_actions::{enumerate_group, group_report, trace as trace_of};
use asinv::hj_series::{hj_expand, nc_series, type_a_data, type_d_data};
use asinv::invariants::{self, generator_set, molien as molien_series, verify_generation};
use asinv::presentations::{
    discover_relations, gnk73_presentation, jordan_presentation, quantum_presentation, verify_presentation,
};
use asinv::{AlgebraElt, Error, GroupSpec, GroupVariant, Presentation, Result};
use serde_json::{json, Map, Value};

use crate::{Format, GroupArgs};

fn envelope(command: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!(command));
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn texts(xs: &[AlgebraElt]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// Groups for the classification commands, which assume a noncommutative plane.
fn noncommutative_group(args: &GroupArgs) -> Result<GroupSpec> {
    let g = args.group()?;
    if g.ambient.is_commutative() {
        return Err(Error::InvalidParameters("q = 1 is excluded: A is not commutative".into()));
    }
    Ok(g)
}

fn group_fields(g: &GroupSpec) -> Value {
    json!({ "algebra": g.ambient.label(), "group": g.variant.to_string() })
}

pub fn classify(args: &GroupArgs) -> Result<Value> {
    let g = noncommutative_group(args)?;
    Ok(envelope("classify", to_value(&group_report(&g)?)))
}

pub fn trace(args: &GroupArgs, n: usize) -> Result<Value> {
    let g = args.group()?;
    let mut elements = Vec::new();
    for aut in enumerate_group(&g)? {
        let t = trace_of(&g.ambient, &aut, n)?;
        elements.push(json!({
            "matrix": aut.matrix.to_string(),
            "series": to_value(&t.series.coeffs),
            "closed_form": to_value(&t.closed_form),
        }));
    }
    let mut body = group_fields(&g);
    body["N"] = json!(n);
    body["elements"] = Value::Array(elements);
    Ok(envelope("trace", body))
}

pub fn molien(args: &GroupArgs, n: usize) -> Result<Value> {
    let g = args.group()?;
    let coeffs = molien_series(&g, n)?.integer_coeffs()?;
    let mut body = group_fields(&g);
    body["N"] = json!(n);
    body["order"] = json!(g.order()?);
    body["coefficients"] = json!(coeffs);
    Ok(envelope("molien", body))
}

pub fn hj(p: i64, q: i64) -> Result<Value> {
    let x = hj_expand(p, q)?;
    let body = json!({
        "p": p,
        "q": q,
        "expansion": x.entries,
        "type_a": type_a_data(p, p - q).ok().map(|d| to_value(&d)),
        "type_d": type_d_data(p, q).ok().map(|d| to_value(&d)),
        "nc_series": nc_series(p, q).ok().map(|d| to_value(&d)),
    });
    Ok(envelope("hj", body))
}

pub fn generators(args: &GroupArgs, verify: Option<u32>) -> Result<Value> {
    let g = noncommutative_group(args)?;
    let gs = generator_set(&g)?;
    let mut body = group_fields(&g);
    body["generators"] = json!(texts(&gs.generators));
    body["terms"] = to_value(&gs.generators);
    body["degrees"] = json!(gs.degrees);
    body["provenance"] = to_value(&gs.provenance);
    if let Some(n) = verify {
        body["verification"] = to_value(&verify_generation(&g, &gs, n)?);
    }
    Ok(envelope("generators", body))
}

/// The closed-form presentation for the group, if one is known.
fn known_presentation(g: &GroupSpec) -> Result<Option<Presentation>> {
    Ok(match g.variant {
        GroupVariant::CyclicDiag { n, a: 1 } if g.ambient.is_jordan() => Some(jordan_presentation(n)?),
        GroupVariant::CyclicDiag { n, a } if !g.ambient.is_jordan() => {
            let q = g.ambient.q().expect("quantum plane has q").clone();
            Some(quantum_presentation(n, a, &q)?)
        }
        GroupVariant::Gnk { n: 7, k: 3 } => Some(gnk73_presentation()),
        _ => None,
    })
}

fn relation_degree(p: &Presentation, r: &asinv::Relation) -> u32 {
    r.terms.first().map_or(0, |t| t.word.0.iter().map(|&i| p.generators[i].degree).sum())
}

fn default_bound(p: &Presentation) -> u32 {
    let rel = p.relations.iter().map(|r| relation_degree(p, r)).max().unwrap_or(0);
    let gen = p.generators.iter().map(|g| g.degree).max().unwrap_or(0);
    2 * rel + 2 * gen
}

pub fn present(args: &GroupArgs, n: Option<u32>) -> Result<Value> {
    let g = noncommutative_group(args)?;
    let (pres, source) = match known_presentation(&g)? {
        Some(p) => (p, "closed_form"),
        None => {
            let gs = generator_set(&g)?;
            let bound = n.unwrap_or_else(|| 2 * gs.degrees.iter().max().copied().unwrap_or(1) + 2);
            (discover_relations(&g.ambient, &gs.generators, bound)?, "discovered")
        }
    };
    let mut body = group_fields(&g);
    body["source"] = json!(source);
    body["presentation"] = to_value(&pres);
    body["pretty"] = json!(pres.to_string());
    Ok(envelope("present", body))
}

pub fn verify_pres(args: &GroupArgs, n: Option<u32>, input: &str) -> Result<Value> {
    let g = noncommutative_group(args)?;
    let v: Value = serde_json::from_str(input).map_err(|e| Error::Parse(format!("presentation JSON: {e}")))?;
    let inner = v.get("presentation").cloned().unwrap_or(v);
    let pres: Presentation = serde_json::from_value(inner).map_err(|e| Error::Parse(format!("presentation JSON: {e}")))?;
    pres.validate()?;
    let gs = generator_set(&g)?;
    let n = n.unwrap_or_else(|| default_bound(&pres));
    let report = verify_presentation(&g, &pres, &gs.generators, n)?;
    let mut body = group_fields(&g);
    body["assignment"] = json!(texts(&gs.generators));
    body["report"] = to_value(&report);
    Ok(envelope("verify-pres", body))
}

pub fn auslander(args: &GroupArgs, n: Option<u32>) -> Result<Value> {
    let g = noncommutative_group(args)?;
    let n = n.unwrap_or(match g.variant {
        GroupVariant::Gnk { n, k } => 4 * n * k + 8,
        GroupVariant::CyclicDiag { n, .. } => 2 * (n - 1) + MIN_TAIL,
        _ => 24,
    });
    let start = Instant::now();
    let rep = finite_dim_witness(&g, n)?;
    eprintln!("auslander: {} through degree {n} in {} ms", g.variant, start.elapsed().as_millis());
    let status = if rep.witness.is_some() { "found" } else { "not_found" };
    let mut body = to_value(&rep);
    body["status"] = json!(status);
    Ok(envelope("auslander", body))
}

pub fn gnk_basis(n: u32, k: u32, d: u32) -> Result<Value> {
    let basis = invariants::gnk_basis(n, k, d)?;
    let body = json!({
        "n": n,
        "k": k,
        "degree": d,
        "dimension": basis.len(),
        "basis": texts(&basis),
        "terms": to_value(&basis),
    });
    Ok(envelope("gnk-basis", body))
}

pub fn render(payload: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(payload).expect("values serialize") + "\n",
        Format::Text => {
            let mut out = String::new();
            let Value::Object(fields) = payload else { return format!("{payload}\n") };
            for (key, v) in fields {
                match v {
                    Value::String(s) if s.contains('\n') => out.push_str(&format!("{key}:\n{s}")),
                    Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
                    _ => out.push_str(&format!("{key}: {v}\n")),
                }
            }
            out
        }
    }
}
