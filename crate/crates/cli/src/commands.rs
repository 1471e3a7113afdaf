use serde_json::{json, Map, Value};

use adlv_core::affine_weyl::{find_straight, verify_prop_lambda};
use adlv_core::elcharts::{
    cell_dimension, cell_table, chart_from_type, enumerate_p, type_word, zeta, ElChart, FSpec,
    TypeVector,
};
use adlv_core::group::{
    adlv_dimension, check_lambda_window, defect, functoriality_check, in_b_g_mu,
    lambda_from_invariants, newton_levi_decomposition, FunctorialityMode, GroupDatum, IntVector,
    SigmaInvariants,
};
use adlv_core::orbits::{
    orbit_count_via_levi, orbit_intersection_count_capped, weight_multiplicity, CocharTuple,
};
use adlv_core::rational::format_q;
use adlv_core::sweep::{check_class, Alphabet};
use adlv_core::verify::verify_all;

use crate::report::{cell, Report, Table};
use crate::CliError;

/// Largest rearrangement class `sweep-check` will enumerate.
const CLASS_LIMIT: u128 = 20_000_000;

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("report bodies are objects"),
    }
}

fn rats(v: &[adlv_core::group::Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}

fn joined(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn rows_text(rows: &[Vec<i64>]) -> String {
    rows.iter().map(|r| joined(r)).collect::<Vec<_>>().join(";")
}

/// `--m` alone means a split spec; `--m-vec` gives the per-component split.
pub fn spec_from(n: usize, m: Option<i64>, m_vec: Option<&str>, d: Option<usize>) -> Result<FSpec, CliError> {
    let spec = match (m, m_vec) {
        (_, Some(v)) => {
            let v = crate::parse::ints(v)?;
            if let Some(m) = m {
                if v.iter().sum::<i64>() != m {
                    return Err(CliError::Validation(format!("m_vec {v:?} does not sum to m = {m}")));
                }
            }
            FSpec::new(n, v)?
        }
        (Some(m), None) => match d.unwrap_or(1) {
            1 => FSpec::split(m, n)?,
            d => return Err(CliError::Validation(format!("d = {d} needs --m-vec"))),
        },
        (None, None) => return Err(CliError::Validation("one of --m or --m-vec is required".into())),
    };
    if let Some(d) = d {
        if d != spec.d() {
            return Err(CliError::Validation(format!("d = {d} but m_vec has {} entries", spec.d())));
        }
    }
    Ok(spec)
}

pub fn sweep_check(n: usize, d: usize, alphabet: &str) -> Result<Report, CliError> {
    let components = crate::parse::rows(alphabet)?;
    if components.len() != d || components.iter().any(|c| c.len() != n) {
        return Err(CliError::Validation(format!(
            "alphabet needs {d} components of {n} letters"
        )));
    }
    let alphabet = Alphabet::new(components)?;
    if alphabet.class_size() > CLASS_LIMIT {
        return Err(CliError::Validation(format!(
            "class of {} words exceeds the limit {CLASS_LIMIT}",
            alphabet.class_size()
        )));
    }
    let r = check_class(&alphabet);
    let body = obj(json!({
        "n": n,
        "d": d,
        "alphabet": alphabet.multisets(),
        "class_size": r.class_size,
        "image_size": r.image_size,
        "dyck_count": r.dyck_count,
        "dyck_image_count": r.dyck_image_count,
        "bijective": r.bijective,
        "dyck_preserving": r.dyck_preserving,
        "round_trip": r.round_trip,
    }));
    let violation = (!(r.bijective && r.dyck_preserving)).then(|| {
        format!(
            "sweep is {} on this class",
            if r.bijective { "not Dyck-preserving" } else { "not bijective" }
        )
    });
    Ok(Report {
        command: "sweep-check",
        table: Table::key_value(&body),
        body,
        violation,
    })
}

fn chart_from_json(text: &str) -> Result<ElChart, CliError> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Validation(format!("chart JSON: {e}")))?;
    let field = |k: &str| {
        v.get(k)
            .cloned()
            .ok_or_else(|| CliError::Validation(format!("chart JSON lacks {k:?}")))
    };
    let shape = |e: serde_json::Error| CliError::Validation(format!("chart JSON: {e}"));
    let n: usize = serde_json::from_value(field("n")?).map_err(shape)?;
    let m_vec: Vec<i64> = serde_json::from_value(field("m_vec")?).map_err(shape)?;
    let minima: Vec<Vec<i64>> = serde_json::from_value(field("minima")?).map_err(shape)?;
    Ok(ElChart::new(FSpec::new(n, m_vec)?, minima)?)
}

pub fn chart(text: &str) -> Result<Report, CliError> {
    let chart = chart_from_json(text)?;
    let spec = chart.spec().clone();
    let walk = chart.type_walk();
    let ty = walk.type_vector.clone();
    let word = type_word(&ty, &spec);
    let cotype = chart.cotype();
    let z = zeta(&ty, &spec)?;
    let hodge = ty.dominant();
    let dim = cell_dimension(&cotype, &hodge, &spec)?;
    let body = obj(json!({
        "n": spec.n(),
        "m_vec": spec.m_vec(),
        "minima": chart.minima(),
        "normalized": chart.is_normalized(),
        "small": chart.is_small(),
        "b_sequence": walk.b_sequence.iter().map(|&(c, b)| json!([c, b])).collect::<Vec<_>>(),
        "type": ty.rows(),
        "type_flat": ty.flat(),
        "hodge": hodge.rows(),
        "word": word.letters(),
        "levels": word.levels(),
        "sweep": word.sweep().letters(),
        "cotype": cotype.rows(),
        "zeta": z.rows(),
        "dim": dim,
        "va_count": chart.va_count(),
    }));
    let violation = (z != cotype).then(|| "zeta differs from the cotype".to_string());
    Ok(Report {
        command: "chart",
        table: Table::key_value(&body),
        body,
        violation,
    })
}

fn hodge_from(mu: Option<&str>) -> Result<Option<TypeVector>, CliError> {
    mu.map(|s| Ok(TypeVector::new(crate::parse::rows(s)?)?.dominant()))
        .transpose()
}

pub fn enumerate(spec: &FSpec, mu: Option<&str>) -> Result<Report, CliError> {
    let hodge = hodge_from(mu)?;
    let types = enumerate_p(spec, hodge.as_ref())?;
    let mut table = Table::new(&["type", "cotype"]);
    let mut entries = Vec::with_capacity(types.len());
    for t in &types {
        let co = chart_from_type(t, spec)?.cotype();
        table.push(vec![rows_text(t.rows()), rows_text(co.rows())]);
        entries.push(json!({ "type": t.rows(), "cotype": co.rows() }));
    }
    let body = obj(json!({
        "n": spec.n(),
        "m_vec": spec.m_vec(),
        "hodge": hodge.as_ref().map(|h| h.rows().to_vec()),
        "count": types.len(),
        "types": entries,
    }));
    Ok(Report {
        command: "enumerate",
        body,
        table,
        violation: None,
    })
}

pub fn cells(spec: &FSpec, mu: &str) -> Result<Report, CliError> {
    let hodge = hodge_from(Some(mu))?.expect("given");
    let (n, d, m) = (spec.n(), spec.d(), spec.m());
    let g = GroupDatum::res(d, n);
    let inv = SigmaInvariants::central(m, n);
    let lambda = lambda_from_invariants(&g, &inv)?.0.remove(0);
    let table = cell_table(spec, &hodge, &lambda)?;
    let mu_tuple = CocharTuple::single(hodge.rows().to_vec());
    let dimension = adlv_dimension(&g, &mu_tuple, &inv)?;
    let target = IntVector::single(lambda.clone());
    let count = orbit_intersection_count_capped(&g, &mu_tuple, &target, &[m], 0)?.count;
    let multiplicity = weight_multiplicity(&g, &mu_tuple, &target)?;

    let mut csv = Table::new(&["minima", "type", "cotype", "dim", "top"]);
    let mut cells = Vec::with_capacity(table.cells.len());
    for c in &table.cells {
        csv.push(vec![
            rows_text(c.chart.minima()),
            rows_text(c.type_vector.rows()),
            rows_text(c.cotype.rows()),
            c.dim.to_string(),
            c.top.to_string(),
        ]);
        cells.push(json!({
            "minima": c.chart.minima(),
            "type": c.type_vector.rows(),
            "cotype": c.cotype.rows(),
            "dim": c.dim,
            "top": c.top,
        }));
    }
    let max_dim = table.max_dim();
    let body = obj(json!({
        "n": n,
        "m_vec": spec.m_vec(),
        "hodge": hodge.rows(),
        "lambda": lambda,
        "cells": cells,
        "poincare": table.poincare,
        "top_count": table.top_count,
        "max_dim": max_dim,
        "adlv_dimension": dimension,
        "orbit_count": count,
        "weight_multiplicity": multiplicity,
    }));
    let mut problems = Vec::new();
    if max_dim.is_some_and(|x| x != dimension) {
        problems.push(format!("largest cell {max_dim:?} but dimension formula {dimension}"));
    }
    if table.top_count != count || count != multiplicity {
        problems.push(format!(
            "top_count {}, orbit count {count}, weight multiplicity {multiplicity}",
            table.top_count
        ));
    }
    Ok(Report {
        command: "cells",
        body,
        table: csv,
        violation: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}

pub fn lambda(g: &GroupDatum, inv: &SigmaInvariants, mu: Option<&CocharTuple>) -> Result<Report, CliError> {
    let lambda = lambda_from_invariants(g, inv)?;
    let window = check_lambda_window(&lambda, inv);
    let blocks = newton_levi_decomposition(inv)?;
    let levi = functoriality_check(g, inv, FunctorialityMode::Levi)?;
    let central = functoriality_check(g, inv, FunctorialityMode::CentralQuotient)?;
    let mut body = obj(json!({
        "lambda": lambda.0,
        "newton": inv.nu().iter().map(|v| rats(v)).collect::<Vec<_>>(),
        "kappa": inv.kappa(),
        "window": window,
        "levi_blocks": blocks.iter().map(|bs| bs.iter().map(|b| json!({
            "size": b.size, "slope": format_q(&b.slope)
        })).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "defect": defect(g, inv)?,
        "functoriality": { "levi": levi, "central_quotient": central },
    }));
    if let Some(mu) = mu {
        let inside = in_b_g_mu(g, mu, inv)?;
        body.insert("in_b_g_mu".into(), json!(inside));
        if inside {
            body.insert("dimension".into(), json!(adlv_dimension(g, mu, inv)?));
        }
    }
    let mut table = Table::new(&["factor", "lambda", "newton", "kappa"]);
    for (j, l) in lambda.0.iter().enumerate() {
        table.push(vec![
            j.to_string(),
            joined(l),
            rats(&inv.nu()[j]).join(","),
            inv.kappa()[j].to_string(),
        ]);
    }
    let violation = (!(window && levi && central))
        .then(|| format!("window {window}, levi functoriality {levi}, central quotient {central}"));
    Ok(Report {
        command: "lambda",
        body,
        table,
        violation,
    })
}

pub fn straight(n: usize, inv: &SigmaInvariants) -> Result<Report, CliError> {
    let x = find_straight(n, inv)?;
    let straight = x.is_straight();
    let lambda_ok = verify_prop_lambda(n, inv)?;
    let body = obj(json!({
        "n": n,
        "newton": rats(&inv.nu()[0]),
        "kappa": inv.kappa()[0],
        "translation": x.translation(),
        "perm": x.perm(),
        "length": x.length(),
        "basic": x.is_basic(),
        "straight": straight,
        "element_newton": rats(&x.newton()),
        "lambda_matches": lambda_ok,
    }));
    let violation = (!(straight && lambda_ok))
        .then(|| format!("straight {straight}, translation matches lambda {lambda_ok}"));
    Ok(Report {
        command: "straight",
        table: Table::key_value(&body),
        body,
        violation,
    })
}

pub struct CountArgs<'a> {
    pub group: &'a GroupDatum,
    pub mu: &'a CocharTuple,
    pub lambda: Option<&'a str>,
    pub newton: Option<&'a str>,
    pub kappa: Option<&'a str>,
    pub max_witnesses: usize,
}

pub fn count(a: CountArgs<'_>) -> Result<Report, CliError> {
    let (lambda, kappa, inv) = match (a.lambda, a.newton) {
        (Some(l), None) => {
            let lambda = IntVector(
                l.split('|').map(crate::parse::ints).collect::<Result<Vec<_>, _>>()?,
            );
            let kappa = match a.kappa {
                Some(k) => crate::parse::kappa(k)?,
                None => lambda.0.iter().map(|v| v.iter().sum()).collect(),
            };
            (lambda, kappa, None)
        }
        (None, Some(nu)) => {
            let inv = crate::parse::invariants(nu, a.kappa)?;
            let lambda = lambda_from_invariants(a.group, &inv)?;
            (lambda, inv.kappa().to_vec(), Some(inv))
        }
        _ => return Err(CliError::Validation("give exactly one of --lambda or --newton".into())),
    };
    let r = orbit_intersection_count_capped(a.group, a.mu, &lambda, &kappa, a.max_witnesses)?;
    let mut body = obj(json!({
        "lambda": lambda.0,
        "kappa": kappa,
        "count": r.count,
        "witnesses": r.witnesses.iter().map(|w| &w.0).collect::<Vec<_>>(),
        "overflow": r.overflow,
    }));
    let mut problems = Vec::new();
    if a.mu.is_minuscule() {
        let m = weight_multiplicity(a.group, a.mu, &lambda)?;
        body.insert("weight_multiplicity".into(), json!(m));
        if m != r.count {
            problems.push(format!("orbit count {} but weight multiplicity {m}", r.count));
        }
    }
    if let Some(inv) = &inv {
        if a.group.factors().len() == 1 && in_b_g_mu(a.group, a.mu, inv)? {
            let (direct, via) = orbit_count_via_levi(a.group, a.mu, inv)?;
            body.insert("via_levi".into(), json!({ "direct": direct, "via_levi": via }));
            if direct != via {
                problems.push(format!("direct count {direct} but via Levi {via}"));
            }
        }
    }
    let mut table = Table::new(&["witness"]);
    for w in &r.witnesses {
        table.push(vec![cell(&json!(w.0))]);
    }
    Ok(Report {
        command: "count",
        body,
        table,
        violation: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}

pub fn verify() -> Result<Report, CliError> {
    let report = verify_all();
    let mut table = Table::new(&["id", "title", "passed", "checked", "violations"]);
    for c in &report.criteria {
        table.push(vec![
            c.id.to_string(),
            c.title.clone(),
            c.passed.to_string(),
            c.tally.checked.to_string(),
            c.tally.violations.to_string(),
        ]);
    }
    let failed: Vec<String> = report
        .criteria
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.id.to_string())
        .collect();
    let mut body = obj(serde_json::to_value(&report).map_err(|e| CliError::Validation(e.to_string()))?);
    body.remove("schema_version");
    Ok(Report {
        command: "verify-all",
        body,
        table,
        violation: (!failed.is_empty()).then(|| format!("criteria {} failed", failed.join(", "))),
    })
}
