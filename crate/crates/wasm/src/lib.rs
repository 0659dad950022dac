//! Browser bindings. Every export takes plain numbers and strings and
//! returns a JSON document; the page in `www/` draws from those.
//!
//! The `*_json` functions hold the logic and are ordinary Rust, so they can
//! be tested without a browser.

use cuspidal::enumerate::{enumerate_configurations, evaluate, PipelineOptions};
use cuspidal::hf::{hf_check_with, hf_profile_with};
use cuspidal::semigroup::curve_r_function;
use cuspidal::spectrum::{
    critical_points, cusp_spectrum, interval_comparison, semicontinuity_check, spectrum_at_infinity_table,
    SpectrumMultiset,
};
use cuspidal::{CurveType, CuspConfiguration, PuiseuxCusp, Rational};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest candidate list the page will enumerate.
const DEMO_CAP: usize = 5_000;

/// `"2:51"` or `"2:3, 3:4"`; separators are commas, semicolons or spaces.
pub fn parse_cusps(text: &str) -> Result<CuspConfiguration, String> {
    let cusps = text
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (r, s) = t.split_once(':').ok_or_else(|| format!("cusp {t:?} must look like r:s"))?;
            let r = r.parse().map_err(|_| format!("bad r in {t:?}"))?;
            let s = s.parse().map_err(|_| format!("bad s in {t:?}"))?;
            PuiseuxCusp::new(r, s).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CuspConfiguration::new(cusps))
}

fn curve(a: i64, b: i64, e: i64) -> Result<CurveType, String> {
    CurveType::new(a, b, e).map_err(|e| e.to_string())
}

fn point(x: &Rational) -> Value {
    json!({ "exact": x.to_string(), "approx": x.to_f64() })
}

fn entries(sp: &SpectrumMultiset) -> Vec<Value> {
    sp.iter()
        .map(|(x, m)| json!({ "value": point(x), "multiplicity": m }))
        .collect()
}

/// Both spectra and the interval counts `#Sp ∩ (x, x+1)` on every
/// constancy cell of `(0, 1)`.
pub fn spectrum_comparison_json(a: i64, b: i64, e: i64, cusps: &str) -> Result<String, String> {
    let ct = curve(a, b, e)?;
    let cfg = parse_cusps(cusps)?;
    cfg.check_genus(&ct).map_err(|e| e.to_string())?;
    let infinity = spectrum_at_infinity_table(&ct);
    let local = cfg
        .cusps()
        .iter()
        .fold(SpectrumMultiset::new(), |acc, c| acc.union(&cusp_spectrum(c)));
    let report = semicontinuity_check(&ct, &cfg).map_err(|e| e.to_string())?;

    let mut fence = vec![Rational::zero()];
    fence.extend(critical_points(&ct, &cfg));
    fence.push(Rational::one());
    let mut samples = Vec::new();
    for pair in fence.windows(2) {
        let mid = (&pair[0] + &pair[1]).div_int(2);
        for x in [pair[0].clone(), mid] {
            if x.is_zero() || infinity.contains(&x) {
                continue;
            }
            let c = interval_comparison(&ct, &cfg, &x);
            samples.push(json!({
                "x": point(&x),
                "cusps_inside": c.cusps_inside,
                "infinity_inside": c.infinity_inside,
                "holds": c.holds(),
            }));
        }
    }
    let strongest = report.strongest().map(|w| {
        json!({
            "x": point(&w.x),
            "cusps_inside": w.cusps_inside,
            "infinity_inside": w.infinity_inside,
            "cusps_outside": w.cusps_outside,
            "infinity_outside": w.infinity_outside,
        })
    });
    Ok(json!({
        "curve": { "a": a, "b": b, "e": e, "g": ct.g(), "w": ct.w() },
        "configuration": cfg.to_string(),
        "infinity": entries(&infinity),
        "cusps": entries(&local),
        "samples": samples,
        "verdict": report.verdict,
        "witness_count": report.witnesses.len(),
        "strongest": strongest,
    })
    .to_string())
}

/// `R(m + g)` and the best bound `max P` for every `m ∈ [-g, g]`.
pub fn hf_profile_json(a: i64, b: i64, e: i64, cusps: &str) -> Result<String, String> {
    let ct = curve(a, b, e)?;
    let cfg = parse_cusps(cusps)?;
    let r = curve_r_function(&ct, &cfg).map_err(|e| e.to_string())?;
    let report = hf_check_with(&ct, &r);
    let points: Vec<Value> = hf_profile_with(&ct, &r)
        .into_iter()
        .map(|p| {
            json!({
                "m": p.m,
                "r": p.r_value,
                "p": p.bound.map(|b| b.p),
                "s1": p.bound.map(|b| b.s1),
                "s2": p.bound.map(|b| b.s2),
            })
        })
        .collect();
    Ok(json!({
        "curve": { "a": a, "b": b, "e": e, "g": ct.g() },
        "configuration": cfg.to_string(),
        "points": points,
        "verdict": report.verdict,
        "witness_count": report.witnesses.len(),
    })
    .to_string())
}

/// Every configuration of at most `max_cusps` cusps with its verdicts.
pub fn enumerate_json(a: i64, b: i64, e: i64, max_cusps: usize) -> Result<String, String> {
    let ct = curve(a, b, e)?;
    let cfgs = enumerate_configurations(&ct, max_cusps, DEMO_CAP).map_err(|e| e.to_string())?;
    let rows = cfgs
        .iter()
        .map(|cfg| {
            let v = evaluate(&ct, cfg, PipelineOptions::default()).map_err(|e| e.to_string())?;
            Ok(json!({
                "configuration": cfg.to_string(),
                "cusps": cfg.cusps().iter().map(|c| format!("{}:{}", c.r(), c.s())).collect::<Vec<_>>(),
                "multiplicity_ok": v.multiplicity_ok,
                "hf": v.hf.map(|h| h.verdict),
                "spectrum": v.spectrum.map(|s| s.verdict),
                "survives": v.survives,
            }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({ "curve": { "a": a, "b": b, "e": e, "g": ct.g() }, "rows": rows }).to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = spectrumComparison)]
pub fn spectrum_comparison(a: i32, b: i32, e: i32, cusps: &str) -> Result<String, JsError> {
    js(spectrum_comparison_json(a.into(), b.into(), e.into(), cusps))
}

#[wasm_bindgen(js_name = hfProfile)]
pub fn hf_profile(a: i32, b: i32, e: i32, cusps: &str) -> Result<String, JsError> {
    js(hf_profile_json(a.into(), b.into(), e.into(), cusps))
}

#[wasm_bindgen(js_name = enumerate)]
pub fn enumerate(a: i32, b: i32, e: i32, max_cusps: u32) -> Result<String, JsError> {
    js(enumerate_json(a.into(), b.into(), e.into(), max_cusps as usize))
}
