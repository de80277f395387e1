//! Browser bindings: build a pair from parameters, plot its correlation
//! profiles and rebuild the reference table. Every export takes and returns
//! JSON strings; the plain `*_json` functions hold the logic and run natively
//! in tests.

use scp_core::format::parse_params;
use scp_core::verify::{check_mate, check_scp, table1_reproduce};
use scp_core::{auto_profile, construct_scp, cross_profile, theorem2_mate, CorrelationProfile};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Summary {
    q: u32,
    m: usize,
    t: usize,
    pi: Vec<usize>,
    length: usize,
    zcz: usize,
    measured_zcz: usize,
    sparsity: String,
    passed: bool,
    first_failure: Option<String>,
    function: String,
    c0: Vec<Option<u32>>,
    c1: Vec<Option<u32>>,
    mate: Option<MateSummary>,
}

#[derive(Serialize)]
struct MateSummary {
    s0: Vec<Option<u32>>,
    s1: Vec<Option<u32>>,
    passed: bool,
    measured_zcz: usize,
}

#[derive(Serialize)]
struct Point {
    u: i64,
    re: f64,
    im: f64,
    magnitude: f64,
    zero: bool,
}

fn exponents(s: &scp_core::SparseSequence) -> Vec<Option<u32>> {
    s.entries().iter().map(|e| e.exponent()).collect()
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Builds and verifies a pair (and its mate when the parameters allow one).
pub fn construct_json(params_json: &str) -> Result<String, String> {
    let p = parse_params(params_json).map_err(|e| e.to_string())?;
    let pair = construct_scp(&p).map_err(|e| e.to_string())?;
    let report = check_scp(&pair, p.zcz()).map_err(|e| e.to_string())?;
    let function = scp_core::theorem1_function(&p).map_err(|e| e.to_string())?;
    let mate = match theorem2_mate(&p) {
        Ok(s) => {
            let r = check_mate(&pair, &s, p.zcz()).map_err(|e| e.to_string())?;
            Some(MateSummary {
                s0: exponents(&s.c0),
                s1: exponents(&s.c1),
                passed: r.passed(),
                measured_zcz: r.measured_zcz,
            })
        }
        Err(_) => None,
    };
    to_json(&Summary {
        q: p.q(),
        m: p.m(),
        t: p.t(),
        pi: p.pi().to_vec(),
        length: p.length(),
        zcz: p.zcz(),
        measured_zcz: report.measured_zcz,
        sparsity: p.sparsity().to_string(),
        passed: report.passed(),
        first_failure: report.first_failure().map(|c| c.id.clone()),
        function: function.to_string(),
        c0: exponents(&pair.c0),
        c1: exponents(&pair.c1),
        mate,
    })
}

/// Profile of `kind` (`aacs`, `auto0`, `auto1`, `cross` or `mate-sum`) over
/// every shift.
pub fn correlation_profile_json(params_json: &str, kind: &str) -> Result<String, String> {
    let p = parse_params(params_json).map_err(|e| e.to_string())?;
    let pair = construct_scp(&p).map_err(|e| e.to_string())?;
    let profile: CorrelationProfile = match kind {
        "aacs" => auto_profile(&pair.c0).sum(&auto_profile(&pair.c1)),
        "auto0" => Ok(auto_profile(&pair.c0)),
        "auto1" => Ok(auto_profile(&pair.c1)),
        "cross" => cross_profile(&pair.c0, &pair.c1),
        "mate-sum" => {
            let s = theorem2_mate(&p).map_err(|e| e.to_string())?;
            cross_profile(&pair.c0, &s.c0)
                .and_then(|a| cross_profile(&pair.c1, &s.c1).and_then(|b| a.sum(&b)))
        }
        other => return Err(format!("unknown profile kind `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    let points: Vec<Point> = profile
        .iter()
        .map(|(u, v)| {
            let zero = v.is_zero();
            let (re, im) = if zero { (0.0, 0.0) } else { v.to_complex() };
            Point {
                u,
                re,
                im,
                magnitude: re.hypot(im),
                zero,
            }
        })
        .collect();
    to_json(&points)
}

/// The reference table rebuilt and verified.
pub fn table1_json() -> Result<String, String> {
    let rows = table1_reproduce().map_err(|e| e.to_string())?;
    to_json(&rows)
}

#[wasm_bindgen]
pub fn construct(params_json: &str) -> Result<String, JsError> {
    construct_json(params_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = correlationProfile)]
pub fn correlation_profile(params_json: &str, kind: &str) -> Result<String, JsError> {
    correlation_profile_json(params_json, kind).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn table1() -> Result<String, JsError> {
    table1_json().map_err(|e| JsError::new(&e))
}
