use std::fmt::Write;
use std::fs;

use anyhow::{Context, Result};
use clap::Parser;
use serde_json::json;

use crate::args::{Cli, Command, ReproArgs};
use crate::report::Report;
use crate::{Outcome, Status, Table};

/// Worked examples: (golden file stem, arguments).
pub const CASES: &[(&str, &[&str])] = &[
    ("spectrum_6_4_0", &["spectrum", "--a", "6", "--b", "4", "--e", "0", "--method", "both"]),
    ("spectrum_6_6_0", &["spectrum", "--a", "6", "--b", "6", "--e", "0"]),
    ("check_6_6_0_2_51", &["check", "--a", "6", "--b", "6", "--e", "0", "--cusp", "2:51"]),
    ("check_6_6_0_3_26", &["check", "--a", "6", "--b", "6", "--e", "0", "--cusp", "3:26"]),
    ("check_6_6_0_6_11", &["check", "--a", "6", "--b", "6", "--e", "0", "--cusp", "6:11"]),
    ("check_4_4_2_3_22", &["check", "--a", "4", "--b", "4", "--e", "2", "--cusp", "3:22"]),
    ("check_4_4_3_3_28", &["check", "--a", "4", "--b", "4", "--e", "3", "--cusp", "3:28"]),
    ("enumerate_6_6_0", &["enumerate", "--a", "6", "--b", "6", "--e", "0", "--max-cusps", "1"]),
    ("enumerate_4_4_4", &["enumerate", "--a", "4", "--b", "4", "--e", "4", "--max-cusps", "1"]),
    ("dinv_1_1_0", &["dinv", "--a", "1", "--b", "1", "--e", "0", "--all-m"]),
    ("dinv_6_6_0_6_11", &["dinv", "--a", "6", "--b", "6", "--e", "0", "--cusp", "6:11", "--all-m"]),
    ("dedekind_s_1_3", &["dedekind", "s", "1", "3"]),
    ("dedekind_d_2_3_5", &["dedekind", "d", "2", "3", "5"]),
];

/// The golden-file text for one case: its arguments, exit code and report.
pub fn golden_text(args: &[&str]) -> Result<String> {
    let cli = Cli::try_parse_from(std::iter::once("cuspidal").chain(args.iter().copied()))
        .with_context(|| format!("parsing {args:?}"))?;
    if matches!(cli.command, Command::Repro(_)) {
        anyhow::bail!("repro cannot run itself");
    }
    let outcome = crate::execute(&cli)?;
    let doc = json!({
        "args": args,
        "exit_code": outcome.status.code(),
        "report": outcome.report.to_value(),
    });
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

pub fn run(args: &ReproArgs) -> Result<Outcome> {
    if args.update {
        fs::create_dir_all(&args.golden_dir)
            .with_context(|| format!("creating {}", args.golden_dir.display()))?;
    }
    let mut report = Report::new(
        "repro",
        json!({ "golden_dir": args.golden_dir.display().to_string(), "update": args.update }),
    );
    let mut table = Table::new(["case", "status"]);
    let mut human = String::new();
    let mut cases = Vec::new();
    let mut failed = 0;
    for (name, argv) in CASES {
        let path = args.golden_dir.join(format!("{name}.json"));
        let fresh = golden_text(argv)?;
        let status = if args.update {
            fs::write(&path, &fresh).with_context(|| format!("writing {}", path.display()))?;
            "written"
        } else {
            match fs::read_to_string(&path) {
                Ok(old) if old == fresh => "ok",
                Ok(_) => "mismatch",
                Err(_) => "missing",
            }
        };
        if status == "mismatch" || status == "missing" {
            failed += 1;
            report.witnesses.push(json!({ "kind": status, "case": name }));
        }
        writeln!(human, "{status:<8} {name}  ({})", argv.join(" "))?;
        table.push([name.to_string(), status.to_string()]);
        cases.push(json!({ "case": name, "args": argv, "status": status }));
    }
    writeln!(human, "{} case(s), {failed} failed", CASES.len())?;
    report.results = json!({ "cases": cases, "failed": failed });
    Ok(Outcome {
        status: if failed == 0 { Status::Survives } else { Status::Mismatch },
        report,
        human,
        table,
        notes: String::new(),
    })
}
