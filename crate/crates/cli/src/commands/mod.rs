mod check;
mod dedekind;
mod dinv;
mod enumerate;
mod repro;
mod spectrum;

use anyhow::{bail, Result};
use cuspidal::semigroup::{curve_r_function_from_semigroups, CountingFunction, Semigroup};
use cuspidal::{CurveType, CuspConfiguration, Error};
use serde_json::{json, Value};

use crate::args::{Command, CurveArgs, CuspArg};
use crate::Outcome;

pub fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Check(a) => check::run(a),
        Command::Enumerate(a) => enumerate::run(a),
        Command::Spectrum(a) => spectrum::run(a),
        Command::Dedekind(a) => dedekind::run(a),
        Command::Dinv(a) => dinv::run(a),
        Command::Repro(a) => repro::run(a),
    }
}

fn curve(args: &CurveArgs) -> Result<CurveType> {
    Ok(CurveType::new(args.a, args.b, args.e)?)
}

fn curve_inputs(args: &CurveArgs) -> Value {
    json!({ "a": args.a, "b": args.b, "e": args.e })
}

fn cusp_strings(cusps: &[CuspArg]) -> Vec<String> {
    cusps.iter().map(ToString::to_string).collect()
}

/// Cusps given on the command line, split into the one-pair configuration
/// (if every cusp is one-pair) and the semigroups of all of them.
struct Cusps {
    configuration: Option<CuspConfiguration>,
    semigroups: Vec<Semigroup>,
    label: String,
}

impl Cusps {
    fn parse(ct: &CurveType, cusps: &[CuspArg]) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut semigroups = Vec::new();
        for c in cusps {
            match c {
                CuspArg::Pair(p) => {
                    pairs.push(*p);
                    semigroups.push(Semigroup::of_cusp(p));
                }
                CuspArg::Generators(g) => semigroups.push(Semigroup::from_generators(g)?),
            }
        }
        let found: i64 = semigroups.iter().map(Semigroup::gap_count).sum();
        if found != ct.g() {
            bail!(Error::GenusMismatch { expected: ct.g(), found });
        }
        let all_pairs = pairs.len() == cusps.len();
        let labels: Vec<String> = cusps
            .iter()
            .map(|c| match c {
                CuspArg::Pair(p) => p.to_string(),
                CuspArg::Generators(g) => {
                    let parts: Vec<String> = g.iter().map(i64::to_string).collect();
                    format!("<{}>", parts.join(","))
                }
            })
            .collect();
        Ok(Cusps {
            configuration: all_pairs.then(|| CuspConfiguration::new(pairs)),
            semigroups,
            label: format!("{{{}}}", labels.join(", ")),
        })
    }

    fn r_function(&self, ct: &CurveType) -> Result<CountingFunction> {
        Ok(curve_r_function_from_semigroups(ct, &self.semigroups)?)
    }
}
