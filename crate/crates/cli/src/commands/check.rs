use std::fmt::Write;

use anyhow::{bail, Result};
use cuspidal::enumerate::{evaluate, Checks, PipelineOptions};
use cuspidal::hf::{self, HfReport};
use cuspidal::spectrum::SemicontinuityReport;
use cuspidal::Error;
use serde_json::json;

use super::{curve, curve_inputs, cusp_strings, Cusps};
use crate::args::{CheckArgs, Only};
use crate::report::{curve_json, hf_summary, hf_witness_json, interval_json, spectrum_summary, verdict_word, Report};
use crate::{Outcome, Status, Table};

pub fn run(args: &CheckArgs) -> Result<Outcome> {
    let ct = curve(&args.curve)?;
    let cusps = Cusps::parse(&ct, &args.cusps)?;
    let checks = match args.only {
        None => Checks::All,
        Some(Only::Hf) => Checks::Hf,
        Some(Only::Spectrum) => Checks::Spectrum,
    };

    let (multiplicity_ok, hf_report, sp_report, survives): (
        Option<bool>,
        Option<HfReport>,
        Option<SemicontinuityReport>,
        bool,
    ) = match &cusps.configuration {
        Some(cfg) => {
            let v = evaluate(&ct, cfg, PipelineOptions { checks, fast: false })?;
            (v.multiplicity_ok, v.hf, v.spectrum, v.survives)
        }
        None => {
            if checks != Checks::Hf {
                bail!(Error::UnsupportedCusp(format!(
                    "{} has no spectrum formula; rerun with --only hf",
                    cusps.label
                )));
            }
            let report = hf::hf_check_with(&ct, &cusps.r_function(&ct)?);
            let ok = report.verdict.passes();
            (None, Some(report), None, ok)
        }
    };

    let mut report = Report::new(
        "check",
        json!({
            "curve": curve_inputs(&args.curve),
            "cusps": cusp_strings(&args.cusps),
            "only": args.only.map(|o| format!("{o:?}").to_lowercase()),
        }),
    );
    let verdict = if survives { "survives" } else { "obstructed" };
    report.results = json!({
        "curve": curve_json(&ct),
        "configuration": cusps.label,
        "genus_ok": true,
        "multiplicity_ok": multiplicity_ok,
        "hf": hf_report.as_ref().map(hf_summary),
        "spectrum": sp_report.as_ref().map(spectrum_summary),
        "verdict": verdict,
    });
    if let (Some(cfg), Some(false)) = (&cusps.configuration, multiplicity_ok) {
        for c in cfg.cusps() {
            if !hf::multiplicity_bound_check(&ct, c) {
                report.witnesses.push(json!({ "kind": "multiplicity", "cusp": c.to_string(), "r": c.r(), "b": ct.b() }));
            }
        }
    }
    if let Some(h) = &hf_report {
        report.witnesses.extend(h.witnesses.iter().map(|w| hf_witness_json(&ct, w)));
    }
    if let Some(s) = &sp_report {
        report.witnesses.extend(s.witnesses.iter().map(interval_json));
    }

    let mut human = String::new();
    writeln!(human, "curve         {ct}: g = {}, d = {}, w = {}", ct.g(), ct.d(), ct.w())?;
    writeln!(human, "cusps         {}", cusps.label)?;
    writeln!(human, "genus         ok (sum of delta = {})", ct.g())?;
    match multiplicity_ok {
        Some(true) => writeln!(human, "multiplicity  ok (every r <= b = {})", ct.b())?,
        Some(false) => writeln!(human, "multiplicity  obstructed (some r > b = {})", ct.b())?,
        None => {}
    }
    if let Some(h) = &hf_report {
        match h.witnesses.first() {
            None => writeln!(human, "hf            passes")?,
            Some(w) => writeln!(
                human,
                "hf            obstructed: m + g = {}: R = {} < P({}, {}) = {}  [{}]",
                w.m + ct.g(),
                w.r_value,
                w.s1,
                w.s2,
                w.p_value,
                count(h.witnesses.len())
            )?,
        }
    }
    if let Some(s) = &sp_report {
        match s.strongest() {
            None => writeln!(human, "spectrum      passes ({} points)", s.points_evaluated)?,
            Some(w) => writeln!(
                human,
                "spectrum      obstructed: x = {} (~{:.4}): inside (x, x+1) {} vs {}, outside {} vs {}  [{}]",
                w.x,
                w.x.to_f64(),
                w.cusps_inside,
                w.infinity_inside,
                w.cusps_outside,
                w.infinity_outside,
                count(s.witnesses.len())
            )?,
        }
    }
    writeln!(human, "verdict       {}", if survives { "not obstructed" } else { "obstructed" })?;

    let mut table = Table::new(["a", "b", "e", "configuration", "genus_ok", "multiplicity_ok", "hf", "spectrum", "verdict"]);
    table.push([
        ct.a().to_string(),
        ct.b().to_string(),
        ct.e().to_string(),
        cusps.label.clone(),
        "true".into(),
        multiplicity_ok.map_or(String::new(), |b| b.to_string()),
        verdict_word(hf_report.as_ref().map(|h| h.verdict.passes())).into(),
        verdict_word(sp_report.as_ref().map(|s| s.verdict.passes())).into(),
        verdict.into(),
    ]);

    Ok(Outcome {
        status: if survives { Status::Survives } else { Status::Obstructed },
        report,
        human,
        table,
        notes: String::new(),
    })
}

fn count(n: usize) -> String {
    if n == 1 {
        "1 witness".into()
    } else {
        format!("{n} witnesses")
    }
}
