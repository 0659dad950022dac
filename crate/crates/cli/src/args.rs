use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuspidal::enumerate::DEFAULT_CANDIDATE_CAP;
use cuspidal::{PuiseuxCusp, Rational};

use crate::Format;

pub const CAP_ENV: &str = "CUSPIDAL_CANDIDATE_CAP";

#[derive(Debug, Clone, Parser)]
#[command(name = "cuspidal", version, about = "Obstructions for rational cuspidal curves in Hirzebruch surfaces")]
pub struct Cli {
    /// Emit one JSON document (sorted keys, rationals as "num/den").
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit a header row plus data rows.
    #[arg(long, global = true)]
    pub csv: bool,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Human
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Run the obstructions on one cusp configuration.
    Check(CheckArgs),
    /// List every genus-compatible configuration with its verdicts.
    Enumerate(EnumerateArgs),
    /// Spectrum at infinity of a curve type.
    Spectrum(SpectrumArgs),
    /// Dedekind and Rademacher sums, and the section-sum limits.
    Dedekind(DedekindArgs),
    /// d-invariants of the boundary of a neighbourhood of the curve.
    Dinv(DinvArgs),
    /// Rerun the worked examples and diff them against golden files.
    Repro(ReproArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CurveArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub e: i64,
}

/// A cusp on the command line: `r:s` for one Puiseux pair, or a
/// comma-separated generator list for any other semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CuspArg {
    Pair(PuiseuxCusp),
    Generators(Vec<i64>),
}

impl FromStr for CuspArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad integer {t:?} in cusp {s:?}"));
        if let Some((r, rest)) = s.split_once(':') {
            let cusp = PuiseuxCusp::new(int(r)?, int(rest)?).map_err(|e| e.to_string())?;
            Ok(CuspArg::Pair(cusp))
        } else if s.contains(',') {
            let gens = s.split(',').map(int).collect::<Result<Vec<_>, _>>()?;
            Ok(CuspArg::Generators(gens))
        } else {
            Err(format!("cusp {s:?} must look like r:s or g1,g2,..."))
        }
    }
}

impl fmt::Display for CuspArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspArg::Pair(c) => write!(f, "{}:{}", c.r(), c.s()),
            CuspArg::Generators(g) => {
                let parts: Vec<String> = g.iter().map(i64::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Only {
    Hf,
    Spectrum,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Repeatable: `r:s`, or generators `g1,g2,...` (HF check only).
    #[arg(long = "cusp")]
    pub cusps: Vec<CuspArg>,
    /// Run only one of the two obstructions.
    #[arg(long, value_enum)]
    pub only: Option<Only>,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, default_value_t = 1)]
    pub max_cusps: usize,
    /// Maximum number of configurations before giving up.
    #[arg(long, env = CAP_ENV, default_value_t = DEFAULT_CANDIDATE_CAP)]
    pub cap: usize,
    /// Stop at the first failed filter of each configuration.
    #[arg(long)]
    pub fast: bool,
    #[arg(long, value_enum)]
    pub only: Option<Only>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Table,
    Derived,
    /// Compute both and fail with exit code 3 if they differ.
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, value_enum, default_value_t = Method::Table)]
    pub method: Method,
}

#[derive(Debug, Clone, Args)]
pub struct DedekindArgs {
    #[command(subcommand)]
    pub op: DedekindOp,
}

#[derive(Debug, Clone, Subcommand)]
pub enum DedekindOp {
    /// s(p, q).
    S {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// D(p, q, r) = sum over i mod r of ((pi/r))((qi/r)).
    D {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Convergence of a_w/w, b_w/w, c_w/w.
    Limits {
        #[arg(long)]
        b: i64,
        #[arg(long)]
        max_w: i64,
        #[arg(long, default_value = "1/200")]
        tol: Rational,
    },
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["m", "all_m"]))]
pub struct DinvArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long = "cusp")]
    pub cusps: Vec<CuspArg>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Every m in [-d/2, d/2).
    #[arg(long)]
    pub all_m: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ReproArgs {
    /// Directory holding the golden files.
    #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))]
    pub golden_dir: PathBuf,
    /// Rewrite the golden files instead of comparing.
    #[arg(long)]
    pub update: bool,
}
