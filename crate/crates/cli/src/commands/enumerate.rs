use std::fmt::Write;

use anyhow::{Context, Result};
use cuspidal::enumerate::{enumerate_configurations, run_pipeline, CandidateVerdict, Checks, PipelineOptions};
use cuspidal::Error;
use serde_json::{json, Value};

use super::{curve, curve_inputs};
use crate::args::{EnumerateArgs, Only, CAP_ENV};
use crate::report::{curve_json, hf_witness_json, interval_json, verdict_word, Report};
use crate::{Outcome, Status, Table};

fn first_witness(ct: &cuspidal::CurveType, v: &CandidateVerdict) -> Option<Value> {
    if v.multiplicity_ok == Some(false) {
        return Some(json!({ "kind": "multiplicity", "b": ct.b() }));
    }
    if let Some(w) = v.hf.as_ref().and_then(|h| h.witnesses.first()) {
        return Some(hf_witness_json(ct, w));
    }
    v.spectrum.as_ref().and_then(|s| s.strongest()).map(interval_json)
}

pub fn run(args: &EnumerateArgs) -> Result<Outcome> {
    let ct = curve(&args.curve)?;
    let checks = match args.only {
        None => Checks::All,
        Some(Only::Hf) => Checks::Hf,
        Some(Only::Spectrum) => Checks::Spectrum,
    };
    let cfgs = enumerate_configurations(&ct, args.max_cusps, args.cap).map_err(|e| match e {
        Error::CandidateCap { .. } => anyhow::anyhow!("{e}; raise --cap or set {CAP_ENV} to enumerate further"),
        other => other.into(),
    })?;
    let verdicts = run_pipeline(&ct, &cfgs, PipelineOptions { checks, fast: args.fast })
        .context("running the obstruction pipeline")?;

    let mut report = Report::new(
        "enumerate",
        json!({
            "curve": curve_inputs(&args.curve),
            "max_cusps": args.max_cusps,
            "fast": args.fast,
            "only": args.only.map(|o| format!("{o:?}").to_lowercase()),
        }),
    );
    let mut table = Table::new(["configuration", "genus_ok", "multiplicity_ok", "hf", "spectrum", "survives"]);
    let mut rows = Vec::new();
    for v in &verdicts {
        let label = v.configuration.to_string();
        let hf = verdict_word(v.hf.as_ref().map(|h| h.verdict.passes()));
        let sp = verdict_word(v.spectrum.as_ref().map(|s| s.verdict.passes()));
        let mult = v.multiplicity_ok.map_or(String::new(), |b| b.to_string());
        table.push([label.clone(), v.genus_ok.to_string(), mult, hf.into(), sp.into(), v.survives.to_string()]);
        rows.push(json!({
            "configuration": label,
            "genus_ok": v.genus_ok,
            "multiplicity_ok": v.multiplicity_ok,
            "hf": hf,
            "spectrum": sp,
            "survives": v.survives,
        }));
        if let Some(mut w) = first_witness(&ct, v) {
            w["configuration"] = Value::String(label);
            report.witnesses.push(w);
        }
    }
    let survivors: Vec<String> = verdicts
        .iter()
        .filter(|v| v.survives)
        .map(|v| v.configuration.to_string())
        .collect();
    report.results = json!({
        "curve": curve_json(&ct),
        "candidates": rows,
        "total": verdicts.len(),
        "survivors": survivors,
    });

    let mut human = String::new();
    writeln!(human, "{ct}: g = {}, {} candidate(s) with at most {} cusp(s)", ct.g(), verdicts.len(), args.max_cusps)?;
    if !table.rows.is_empty() {
        let width = table.rows.iter().map(|r| r[0].len()).max().unwrap_or(0).max(13);
        writeln!(human, "{:<width$}  {:<12}  {:<10}  {:<10}  survives", "configuration", "multiplicity", "hf", "spectrum")?;
        for r in &table.rows {
            let mult = match r[2].as_str() {
                "true" => "ok",
                "false" => "obstructed",
                _ => "skipped",
            };
            writeln!(human, "{:<width$}  {:<12}  {:<10}  {:<10}  {}", r[0], mult, r[3], r[4], r[5])?;
        }
    }
    writeln!(human, "{} not obstructed: {}", survivors.len(), survivors.join(" "))?;

    Ok(Outcome { status: Status::Survives, report, human, table, notes: String::new() })
}
