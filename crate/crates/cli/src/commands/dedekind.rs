use std::fmt::Write;

use anyhow::Result;
use cuspidal::dedekind::{
    dedekind_reciprocity_rhs, dedekind_sum, rademacher_reciprocity_rhs, rademacher_sum, verify_limits,
};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::args::{DedekindArgs, DedekindOp};
use crate::report::{q, Report};
use crate::{Outcome, Status, Table};

pub fn run(args: &DedekindArgs) -> Result<Outcome> {
    match &args.op {
        &DedekindOp::S { p, q: modulus } => single(
            "dedekind s",
            json!({ "p": p, "q": modulus }),
            &dedekind_sum(p, modulus)?,
            (p >= 1 && p.gcd(&modulus) == 1).then(|| -> Result<Value> {
                let lhs = dedekind_sum(p, modulus)? + dedekind_sum(modulus, p)?;
                let rhs = dedekind_reciprocity_rhs(p, modulus);
                Ok(json!({ "lhs": q(&lhs), "rhs": q(&rhs), "holds": lhs == rhs }))
            }),
        ),
        &DedekindOp::D { p, q: qq, r } => single(
            "dedekind d",
            json!({ "p": p, "q": qq, "r": r }),
            &rademacher_sum(p, qq, r)?,
            (p >= 1 && qq >= 1 && p.gcd(&qq) == 1 && qq.gcd(&r) == 1 && r.gcd(&p) == 1).then(|| -> Result<Value> {
                let lhs = rademacher_sum(qq, r, p)? + rademacher_sum(r, p, qq)? + rademacher_sum(p, qq, r)?;
                let rhs = rademacher_reciprocity_rhs(p, qq, r);
                Ok(json!({ "lhs": q(&lhs), "rhs": q(&rhs), "holds": lhs == rhs }))
            }),
        ),
        DedekindOp::Limits { b, max_w, tol } => limits(*b, *max_w, tol),
    }
}

fn single(command: &str, inputs: Value, value: &cuspidal::Rational, law: Option<Result<Value>>) -> Result<Outcome> {
    let law = law.transpose()?;
    let mut report = Report::new(command, inputs);
    report.results = json!({ "value": q(value), "reciprocity": law });
    let mut table = Table::new(["value"]);
    table.push([value.to_string()]);
    let holds = law.as_ref().is_none_or(|l| l["holds"] == json!(true));
    Ok(Outcome {
        status: if holds { Status::Survives } else { Status::Mismatch },
        report,
        human: format!("{value}\n"),
        table,
        notes: if holds { String::new() } else { "reciprocity law fails\n".into() },
    })
}

fn limits(b: i64, max_w: i64, tol: &cuspidal::Rational) -> Result<Outcome> {
    let lr = verify_limits(b, max_w, tol)?;
    let mut report = Report::new("dedekind limits", json!({ "b": b, "max_w": max_w, "tol": q(tol) }));
    let mut table = Table::new(["w", "a_over_w", "a_deviation", "b_over_w", "b_deviation", "c_over_w", "c_deviation"]);
    let mut human = String::new();
    writeln!(
        human,
        "b = {b}: limits a -> {}, b -> {}, c -> {}, tolerance {tol}",
        lr.limits.a, lr.limits.b, lr.limits.c
    )?;
    writeln!(human, "{:>10}  {:>12}  {:>12}  {:>12}", "w", "|a/w - lim|", "|b/w - lim|", "|c/w - lim|")?;
    let mut rows = Vec::new();
    for row in &lr.rows {
        table.push([
            row.w.to_string(),
            row.a_over_w.to_string(),
            row.a_deviation.to_string(),
            row.b_over_w.to_string(),
            row.b_deviation.to_string(),
            row.c_over_w.to_string(),
            row.c_deviation.to_string(),
        ]);
        writeln!(
            human,
            "{:>10}  {:>12.3e}  {:>12.3e}  {:>12.3e}",
            row.w,
            row.a_deviation.to_f64(),
            row.b_deviation.to_f64(),
            row.c_deviation.to_f64()
        )?;
        rows.push(json!({
            "w": row.w,
            "a_over_w": q(&row.a_over_w),
            "a_deviation": q(&row.a_deviation),
            "b_over_w": q(&row.b_over_w),
            "b_deviation": q(&row.b_deviation),
            "c_over_w": q(&row.c_over_w),
            "c_deviation": q(&row.c_deviation),
        }));
    }
    writeln!(human, "{}", if lr.within_tolerance { "within tolerance" } else { "OUTSIDE tolerance" })?;
    report.results = json!({
        "limits": { "a": q(&lr.limits.a), "b": q(&lr.limits.b), "c": q(&lr.limits.c) },
        "rows": rows,
        "within_tolerance": lr.within_tolerance,
    });
    Ok(Outcome {
        status: if lr.within_tolerance { Status::Survives } else { Status::Mismatch },
        report,
        human,
        table,
        notes: String::new(),
    })
}
