use std::fmt::Write;

use anyhow::Result;
use cuspidal::hf::d_invariant_with;
use serde_json::json;

use super::{curve, curve_inputs, cusp_strings, Cusps};
use crate::args::DinvArgs;
use crate::report::{curve_json, q, Report};
use crate::{Outcome, Status, Table};

pub fn run(args: &DinvArgs) -> Result<Outcome> {
    let ct = curve(&args.curve)?;
    let cusps = Cusps::parse(&ct, &args.cusps)?;
    let r = cusps.r_function(&ct)?;
    let d = ct.d();
    let ms: Vec<i64> = match args.m {
        Some(m) => vec![m],
        None => (-d.div_euclid(2)..d - d.div_euclid(2)).collect(),
    };
    let values = ms
        .iter()
        .map(|&m| Ok((m, d_invariant_with(&ct, &r, m)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut report = Report::new(
        "dinv",
        json!({
            "curve": curve_inputs(&args.curve),
            "cusps": cusp_strings(&args.cusps),
            "m": args.m,
            "all_m": args.all_m,
        }),
    );
    report.results = json!({
        "curve": curve_json(&ct),
        "configuration": cusps.label,
        "values": values.iter().map(|(m, v)| json!({ "m": m, "d": q(v) })).collect::<Vec<_>>(),
    });

    let mut table = Table::new(["m", "d"]);
    let mut human = String::new();
    for (m, v) in &values {
        table.push([m.to_string(), v.to_string()]);
        if args.all_m {
            writeln!(human, "{m} {v}")?;
        } else {
            writeln!(human, "{v}")?;
        }
    }
    Ok(Outcome { status: Status::Survives, report, human, table, notes: String::new() })
}
