//! Genus-compatible cusp configurations and the obstruction pipeline.
//!
//! A configuration that survives every filter is only *not obstructed*;
//! both criteria are necessary conditions for existence, not sufficient.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{CurveType, CuspConfiguration, PuiseuxCusp};
use crate::error::{Error, Result};
use crate::hf::{self, HfReport};
use crate::semigroup::curve_r_function;
use crate::spectrum::{semicontinuity_check, SemicontinuityReport};

pub const DEFAULT_CANDIDATE_CAP: usize = 1_000_000;

/// All one-pair cusps `(r, s)` with `(r-1)(s-1) = 2·delta`, sorted by `r`.
pub fn cusps_with_delta(delta: i64) -> Vec<PuiseuxCusp> {
    if delta < 1 {
        return Vec::new();
    }
    let mu = 2 * delta;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d < mu {
        if mu % d == 0 {
            let (r, s) = (d + 1, mu / d + 1);
            if r.gcd(&s) == 1 {
                out.push(PuiseuxCusp::new(r, s).expect("valid by construction"));
            }
        }
        d += 1;
    }
    out
}

/// Single cusps that use up the whole genus of `ct`.
pub fn enumerate_unicuspidal(ct: &CurveType) -> Vec<PuiseuxCusp> {
    cusps_with_delta(ct.g())
}

/// Every multiset of between 1 and `max_cusps` one-pair cusps whose delta
/// invariants add up to `g`. Each configuration is sorted; the list is
/// ordered by cusp count, then lexicographically.
///
/// Fails with [`Error::CandidateCap`] as soon as more than `cap`
/// configurations are produced.
pub fn enumerate_configurations(ct: &CurveType, max_cusps: usize, cap: usize) -> Result<Vec<CuspConfiguration>> {
    if max_cusps < 1 {
        return Err(Error::Domain("max_cusps must be >= 1".into()));
    }
    let g = ct.g();
    // every admissible cusp, ordered by (delta, r, s)
    let pool: Vec<PuiseuxCusp> = (1..=g).flat_map(cusps_with_delta).collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(&pool, 0, g, max_cusps, cap, &mut stack, &mut out)?;
    for cfg in &mut out {
        *cfg = cfg.canonical();
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Appends cusps with pool index >= `start`, so each multiset is produced
/// once (indices nondecreasing, hence deltas nondecreasing).
fn extend(
    pool: &[PuiseuxCusp],
    start: usize,
    budget: i64,
    slots: usize,
    cap: usize,
    stack: &mut Vec<PuiseuxCusp>,
    out: &mut Vec<CuspConfiguration>,
) -> Result<()> {
    if budget == 0 {
        if !stack.is_empty() {
            if out.len() >= cap {
                return Err(Error::CandidateCap { cap });
            }
            out.push(CuspConfiguration::new(stack.clone()));
        }
        return Ok(());
    }
    let max_delta = pool.last().map_or(0, PuiseuxCusp::delta);
    if slots == 0 || max_delta * (slots as i64) < budget {
        return Ok(());
    }
    for (i, cusp) in pool.iter().enumerate().skip(start) {
        let delta = cusp.delta();
        if delta > budget {
            break;
        }
        stack.push(*cusp);
        extend(pool, i, budget - delta, slots - 1, cap, stack, out)?;
        stack.pop();
    }
    Ok(())
}

/// Which obstructions the pipeline evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Checks {
    #[default]
    All,
    /// Multiplicity bound and the d-invariant inequality.
    Hf,
    Spectrum,
}

impl Checks {
    fn hf(self) -> bool {
        matches!(self, Checks::All | Checks::Hf)
    }

    fn spectrum(self) -> bool {
        matches!(self, Checks::All | Checks::Spectrum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PipelineOptions {
    pub checks: Checks,
    /// Stop evaluating a configuration at its first failed filter.
    pub fast: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub configuration: CuspConfiguration,
    pub genus_ok: bool,
    /// `None` when not evaluated.
    pub multiplicity_ok: Option<bool>,
    pub hf: Option<HfReport>,
    pub spectrum: Option<SemicontinuityReport>,
    /// Every evaluated filter passed. Means "not obstructed", not "exists".
    pub survives: bool,
}

/// Filters in order genus → multiplicity → d-invariants → spectrum.
pub fn evaluate(ct: &CurveType, cfg: &CuspConfiguration, opts: PipelineOptions) -> Result<CandidateVerdict> {
    let mut v = CandidateVerdict {
        configuration: cfg.clone(),
        genus_ok: cfg.is_genus_compatible(ct),
        multiplicity_ok: None,
        hf: None,
        spectrum: None,
        survives: false,
    };
    if !v.genus_ok {
        return Ok(v);
    }
    let mut alive = true;
    if opts.checks.hf() {
        let ok = cfg.cusps().iter().all(|c| hf::multiplicity_bound_check(ct, c));
        v.multiplicity_ok = Some(ok);
        alive &= ok;
        if alive || !opts.fast {
            let r = curve_r_function(ct, cfg)?;
            let report = hf::hf_check_with(ct, &r);
            alive &= report.verdict.passes();
            v.hf = Some(report);
        }
    }
    if opts.checks.spectrum() && (alive || !opts.fast) {
        let report = semicontinuity_check(ct, cfg)?;
        alive &= report.verdict.passes();
        v.spectrum = Some(report);
    }
    v.survives = alive;
    Ok(v)
}

/// Evaluates every configuration in parallel; output order matches input.
pub fn run_pipeline(
    ct: &CurveType,
    cfgs: &[CuspConfiguration],
    opts: PipelineOptions,
) -> Result<Vec<CandidateVerdict>> {
    cfgs.par_iter().map(|cfg| evaluate(ct, cfg, opts)).collect()
}

/// The two families of unicuspidal curves obtained from `x^{d-1}z = y^d` by
/// Cremona-type transformations. They exist for `d >= 3`, `e, k >= 0`,
/// `(e, k) != (0, 0)`, so no obstruction may ever reject them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstructedFamily {
    /// Type `(kd, d)`, cusp `(d, (e + 2k)d - 1)`.
    First,
    /// Type `(k(d-1) + 1, d - 1)`, cusp `(d - 1, (e + 2k)(d - 1) + 1)`.
    Second,
}

/// The curve type and cusp of a member of a constructed family. The cusp
/// pair is sorted, so `(d, d - 1)` comes back as `(d - 1, d)`.
pub fn constructed_curve(
    family: ConstructedFamily,
    d: i64,
    e: i64,
    k: i64,
) -> Result<(CurveType, CuspConfiguration)> {
    if d < 3 || e < 0 || k < 0 || (e == 0 && k == 0) {
        return Err(Error::Domain(format!("no constructed curve for d = {d}, e = {e}, k = {k}")));
    }
    let (a, b, r, s) = match family {
        ConstructedFamily::First => (k * d, d, d, (e + 2 * k) * d - 1),
        ConstructedFamily::Second => (k * (d - 1) + 1, d - 1, d - 1, (e + 2 * k) * (d - 1) + 1),
    };
    let ct = CurveType::new(a, b, e)?;
    let cusp = PuiseuxCusp::new(r.min(s), r.max(s))?;
    Ok((ct, CuspConfiguration::unicuspidal(cusp)))
}
