//! Three operations for the static page in `www/`. Each takes plain text
//! fields and returns a JSON string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use adlv_core::elcharts::{cell_table, FSpec, TypeVector};
use adlv_core::group::{check_lambda_window, lambda_from_invariants, GroupDatum, SigmaInvariants};
use adlv_core::rational::{format_q, parse_q};
use adlv_core::sweep::MultiWord;

fn ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("not an integer: {x:?}")))
        .collect()
}

fn rows(s: &str) -> Result<Vec<Vec<i64>>, String> {
    s.split(';').map(ints).collect()
}

pub fn sweep_report(d: usize, letters: &str) -> Result<String, String> {
    let letters = ints(letters)?;
    if d == 0 || letters.len() % d != 0 {
        return Err(format!("{} letters do not split into {d} components", letters.len()));
    }
    let w = MultiWord::new(d, letters.len() / d, letters).map_err(|e| e.to_string())?;
    let s = w.sweep();
    Ok(json!({
        "levels": w.levels(),
        "dyck": w.is_dyck(),
        "sweep": s.letters(),
        "sweep_levels": s.levels(),
        "sweep_dyck": s.is_dyck(),
        "sweep_literal": w.sweep_literal().letters(),
    })
    .to_string())
}

pub fn cells_report(n: usize, m_vec: &str, mu: &str) -> Result<String, String> {
    let spec = FSpec::new(n, ints(m_vec)?).map_err(|e| e.to_string())?;
    let hodge = TypeVector::new(rows(mu)?).map_err(|e| e.to_string())?.dominant();
    let g = GroupDatum::res(spec.d(), n);
    let lambda = lambda_from_invariants(&g, &SigmaInvariants::central(spec.m(), n))
        .map_err(|e| e.to_string())?
        .0
        .remove(0);
    let table = cell_table(&spec, &hodge, &lambda).map_err(|e| e.to_string())?;
    let cells: Vec<_> = table
        .cells
        .iter()
        .map(|c| {
            json!({
                "minima": c.chart.minima(),
                "type": c.type_vector.rows(),
                "cotype": c.cotype.rows(),
                "dim": c.dim,
                "top": c.top,
            })
        })
        .collect();
    Ok(json!({
        "lambda": lambda,
        "cells": cells,
        "poincare": table.poincare,
        "top_count": table.top_count,
    })
    .to_string())
}

pub fn lambda_report(newton: &str, kappa: i64) -> Result<String, String> {
    let nu = newton
        .split(',')
        .map(|x| parse_q(x).ok_or_else(|| format!("not a rational: {x:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let n = nu.len();
    let inv = SigmaInvariants::single(nu, kappa).map_err(|e| e.to_string())?;
    let lambda = lambda_from_invariants(&GroupDatum::gl(n), &inv).map_err(|e| e.to_string())?;
    Ok(json!({
        "lambda": lambda.0[0],
        "newton": inv.nu()[0].iter().map(format_q).collect::<Vec<_>>(),
        "window": check_lambda_window(&lambda, &inv),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn sweep(d: usize, letters: &str) -> Result<String, JsValue> {
    sweep_report(d, letters).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn cells(n: usize, m_vec: &str, mu: &str) -> Result<String, JsValue> {
    cells_report(n, m_vec, mu).map_err(JsValue::from)
}

#[wasm_bindgen]
pub fn lambda(newton: &str, kappa: i32) -> Result<String, JsValue> {
    lambda_report(newton, kappa.into()).map_err(JsValue::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn sweep_worked_example() {
        let v = parse(sweep_report(1, "5,-2,-2,5,-2,-2,-2").unwrap());
        assert_eq!(v["levels"], json!([5, 3, 1, 6, 4, 2, 0]));
        assert_eq!(v["sweep"], json!([5, 5, -2, -2, -2, -2, -2]));
        assert_eq!(v["dyck"], true);
        assert_eq!(v["sweep_dyck"], true);
    }

    #[test]
    fn cells_res_example() {
        let v = parse(cells_report(3, "1,1", "1,0,0;1,0,0").unwrap());
        assert_eq!(v["poincare"], json!([1, 2]));
        assert_eq!(v["top_count"], 2);
    }

    #[test]
    fn lambda_example() {
        let v = parse(lambda_report("5/7,5/7,5/7,5/7,5/7,5/7,5/7", 5).unwrap());
        assert_eq!(v["lambda"], json!([0, 1, 1, 0, 1, 1, 1]));
        assert_eq!(v["window"], true);
    }

    #[test]
    fn errors_are_messages() {
        assert!(sweep_report(2, "1,2,3").is_err());
        assert!(cells_report(4, "2", "1,1,0,0").is_err());
        assert!(lambda_report("1/2,x", 1).is_err());
        assert!(lambda_report("1/2,1/2", 2).is_err());
    }
}
