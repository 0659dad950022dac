use std::collections::BTreeSet;
use std::fmt::Write;

use anyhow::Result;
use cuspidal::spectrum::{spectrum_at_infinity_derived, spectrum_at_infinity_table, SpectrumMultiset};
use cuspidal::Error;
use serde_json::json;

use super::{curve, curve_inputs};
use crate::args::{Method, SpectrumArgs};
use crate::report::{curve_json, q, Report};
use crate::{Outcome, Status, Table};

pub fn run(args: &SpectrumArgs) -> Result<Outcome> {
    let ct = curve(&args.curve)?;
    let method = format!("{:?}", args.method).to_lowercase();
    let mut report = Report::new("spectrum", json!({ "curve": curve_inputs(&args.curve), "method": method }));
    let mut notes = String::new();

    let derived = match args.method {
        Method::Table => None,
        _ => match spectrum_at_infinity_derived(&ct) {
            Ok(s) => Some(Ok(s)),
            Err(e @ Error::Consistency(_)) => Some(Err(e)),
            Err(e) => return Err(e.into()),
        },
    };
    let table_sp = (args.method != Method::Derived).then(|| spectrum_at_infinity_table(&ct));

    let (shown, agree): (SpectrumMultiset, Option<bool>) = match (table_sp, derived) {
        (Some(t), None) => (t, None),
        (None, Some(Ok(d))) => (d, None),
        (Some(t), Some(Ok(d))) => {
            let same = t == d;
            if !same {
                let keys: BTreeSet<_> = t.values().chain(d.values()).cloned().collect();
                writeln!(notes, "table and derived spectra differ:")?;
                for x in keys {
                    let (mt, md) = (t.multiplicity(&x), d.multiplicity(&x));
                    if mt != md {
                        writeln!(notes, "  {x}: table {mt}, derived {md}")?;
                        report.witnesses.push(json!({ "kind": "mismatch", "value": q(&x), "table": mt, "derived": md }));
                    }
                }
            }
            (t, Some(same))
        }
        (t, Some(Err(e))) => {
            writeln!(notes, "{e}")?;
            report.witnesses.push(json!({ "kind": "mismatch", "error": e.to_string() }));
            (t.unwrap_or_default(), Some(false))
        }
        (None, None) => unreachable!("at least one method runs"),
    };

    let entries: Vec<_> = shown
        .iter()
        .map(|(x, m)| json!({ "value": q(x), "multiplicity": m }))
        .collect();
    report.results = json!({
        "curve": curve_json(&ct),
        "entries": entries,
        "total": shown.total(),
        "methods_agree": agree,
    });

    let mut table = Table::new(["value", "multiplicity"]);
    let mut human = String::new();
    for (x, m) in shown.iter() {
        table.push([x.to_string(), m.to_string()]);
        writeln!(human, "{x} {m}")?;
    }
    writeln!(human, "total {}", shown.total())?;
    if agree == Some(true) {
        writeln!(human, "table and derived agree")?;
    }

    let status = if agree == Some(false) { Status::Mismatch } else { Status::Survives };
    Ok(Outcome { status, report, human, table, notes })
}
