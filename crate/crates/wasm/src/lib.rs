//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string; errors come back as a thrown string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use schubres::bott::{bott as run_bott, QDominantWeight};
use schubres::resolution::{jpw_closed_form, render_polynomial, JsonParams};
use schubres::schubert::{desing_data, opposite_cell_pattern, Group};
use schubres::weyl::{family_element, w_tilde_min_rep, ParabolicMarker};

fn betti_json(n: usize, k: usize) -> Result<String, String> {
    let table = jpw_closed_form(n, k, None).map_err(|e| e.to_string())?;
    let codim = (n - k + 1) * (n - k) / 2;
    let check = table.consistency_check(codim);
    Ok(json!({
        "table": table.to_json(JsonParams { n, k, r: n }, Some(codim)),
        "grid": table.render_grid(),
        "k_polynomial_text": render_polynomial(&table.k_polynomial()),
        "consistency": check,
    })
    .to_string())
}

fn parse_weight(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| format!("'{}' is not an integer", s.trim())))
        .collect()
}

fn bott_json(m: usize, weight: &str) -> Result<String, String> {
    let w = parse_weight(weight)?;
    let q = QDominantWeight::new(w.clone(), m).map_err(|e| e.to_string())?;
    let answer = run_bott(&q).map_err(|e| e.to_string())?;
    Ok(json!({
        "weight": w,
        "cut": m,
        "result": answer,
        "dim": answer.dimension().to_string(),
        "text": answer.to_string(),
    })
    .to_string())
}

fn pattern_json(n: usize, k: usize, r: usize, symplectic: bool) -> Result<String, String> {
    let group = if symplectic { Group::G } else { Group::H };
    let err = |e: schubres::Error| e.to_string();
    let pattern = opposite_cell_pattern(n, k, r, group).map_err(err)?;
    let w = family_element(n, k, r).map_err(err)?;
    let wt = w_tilde_min_rep(&w, &ParabolicMarker::p_tilde(n, k, r).map_err(err)?).map_err(err)?;
    Ok(json!({
        "w": w.half_word(),
        "w_tilde": &wt.full_word().word()[..2 * n - (r - k)],
        "cells": pattern.render(),
        "free": pattern.free_coordinates().len(),
        "desing": desing_data(n, k, r).map_err(err)?,
    })
    .to_string())
}

/// Closed-form Betti table for the `(k+1)`-minors of a symmetric `n x n` matrix.
#[wasm_bindgen]
pub fn betti_table(n: usize, k: usize) -> Result<String, JsValue> {
    betti_json(n, k).map_err(|e| JsValue::from_str(&e))
}

/// Bott's algorithm on `GL_n / P_m`; `weight` is comma separated.
#[wasm_bindgen]
pub fn bott(m: usize, weight: &str) -> Result<String, JsValue> {
    bott_json(m, weight).map_err(|e| JsValue::from_str(&e))
}

/// The opposite-cell pattern in `SL_2n` or, with `symplectic`, in `Sp_2n`.
#[wasm_bindgen]
pub fn schubert_pattern(n: usize, k: usize, r: usize, symplectic: bool) -> Result<String, JsValue> {
    pattern_json(n, k, r, symplectic).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_payload() {
        let v: serde_json::Value = serde_json::from_str(&betti_json(3, 1).unwrap()).unwrap();
        assert_eq!(v["table"]["betti"].as_array().unwrap().len(), 4);
        assert_eq!(v["k_polynomial_text"], "1 - 6z^2 + 8z^3 - 3z^4");
        assert!(betti_json(3, 3).is_err());
    }

    #[test]
    fn bott_payload() {
        let v: serde_json::Value = serde_json::from_str(&bott_json(1, "2, 0").unwrap()).unwrap();
        assert_eq!(v["result"]["degree"], 1);
        assert_eq!(v["dim"], "1");
        assert!(bott_json(1, "2,x").is_err());
        assert!(bott_json(2, "0,1,0").is_err());
    }

    #[test]
    fn pattern_payload() {
        let v: serde_json::Value = serde_json::from_str(&pattern_json(5, 2, 4, false).unwrap()).unwrap();
        assert_eq!(v["w_tilde"], json!([3, 4, 6, 9, 10, 1, 2, 5]));
        assert_eq!(v["cells"][8][2], "x[9,7]*x[7,3] + x[9,8]*x[8,3]");
        assert!(pattern_json(3, 3, 3, true).is_err());
    }
}
