use cuspidal::hf::{HfReport, HfWitness};
use cuspidal::spectrum::{IntervalComparison, SemicontinuityReport};
use cuspidal::{CurveType, Rational};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Structured output of every command. Serialised through
/// `serde_json::Value`, whose maps keep keys sorted, so identical inputs
/// give identical bytes.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub witnesses: Vec<Value>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report { command: command.to_string(), inputs, results: Value::Null, witnesses: Vec::new() }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "witnesses": self.witnesses,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("values always serialise")
    }
}

pub fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn curve_json(ct: &CurveType) -> Value {
    json!({
        "a": ct.a(),
        "b": ct.b(),
        "e": ct.e(),
        "w": ct.w(),
        "d": ct.d(),
        "c": ct.c(),
        "g": ct.g(),
    })
}

pub fn hf_witness_json(ct: &CurveType, w: &HfWitness) -> Value {
    json!({
        "kind": "hf",
        "m": w.m,
        "m_plus_g": w.m + ct.g(),
        "s1": w.s1,
        "s2": w.s2,
        "r_value": w.r_value,
        "p_value": w.p_value,
    })
}

pub fn interval_json(c: &IntervalComparison) -> Value {
    json!({
        "kind": "spectrum",
        "x": q(&c.x),
        "cusps_inside": c.cusps_inside,
        "infinity_inside": c.infinity_inside,
        "cusps_outside": c.cusps_outside,
        "infinity_outside": c.infinity_outside,
    })
}

pub fn hf_summary(r: &HfReport) -> Value {
    json!({
        "verdict": r.verdict,
        "witness_count": r.witnesses.len(),
    })
}

pub fn spectrum_summary(r: &SemicontinuityReport) -> Value {
    json!({
        "verdict": r.verdict,
        "points_evaluated": r.points_evaluated,
        "witness_count": r.witnesses.len(),
        "strongest": r.strongest().map(interval_json),
    })
}

pub fn verdict_word(passes: Option<bool>) -> &'static str {
    match passes {
        Some(true) => "passes",
        Some(false) => "obstructed",
        None => "skipped",
    }
}
