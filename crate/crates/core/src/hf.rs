//! The semigroup-distribution obstruction: for every `m ∈ [-g, g]` and every
//! integer presentation `m + g = s1·b + s2·(a + be) + 1`,
//!
//! ```text
//! R(m + g) >= P(s1, s2) = (s1 + 1)(s2 + 1) + s2(s2 + 1)e / 2
//! ```
//!
//! together with the closed formula for the d-invariants of the boundary of
//! a tubular neighbourhood of the curve.

use num_integer::Integer;
use serde::Serialize;

use crate::curve::{CurveType, CuspConfiguration, PuiseuxCusp};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::semigroup::{curve_r_function, CountingFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Passes,
    Obstructed,
}

impl Verdict {
    pub fn passes(self) -> bool {
        self == Verdict::Passes
    }
}

/// `m + g - 1 = s1·b + s2·w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub m: i64,
    pub s1: i64,
    pub s2: i64,
}

impl Presentation {
    pub fn is_valid_for(&self, ct: &CurveType) -> bool {
        self.s1 as i128 * ct.b() as i128 + self.s2 as i128 * ct.w() as i128
            == (self.m + ct.g() - 1) as i128
    }
}

/// `(s1 + 1)(s2 + 1) + s2(s2 + 1)e / 2`. May be negative, in which case the
/// inequality it feeds is vacuous.
pub fn p_bound(s1: i64, s2: i64, e: i64) -> i64 {
    let v = p_bound_wide(s1 as i128, s2 as i128, e as i128);
    i64::try_from(v).expect("P(s1, s2) out of i64 range")
}

fn p_bound_wide(s1: i128, s2: i128, e: i128) -> i128 {
    (s1 + 1) * (s2 + 1) + s2 * (s2 + 1) / 2 * e
}

/// The presentation maximising `P` among all integer solutions of
/// `s1·b + s2·w = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaxPresentation {
    pub s1: i64,
    pub s2: i64,
    pub p: i64,
}

/// Maximises `P(s1, s2)` over the integer solutions of `s1·b + s2·w = n`.
///
/// Solutions form the line `(s1₀ + k·w/c, s2₀ - k·b/c)`. Along it `P` is a
/// quadratic in `k` with leading coefficient `-(b/c²)(a + be/2) < 0`, so the
/// maximum sits next to the real vertex. Ties go to the larger `s1`.
/// Returns `None` when `c = gcd(a, b)` does not divide `n`.
pub fn max_p_over_presentations(ct: &CurveType, n: i64) -> Option<MaxPresentation> {
    let (b, w, e) = (ct.b() as i128, ct.w() as i128, ct.e() as i128);
    let eg = b.extended_gcd(&w);
    let c = eg.gcd;
    let n = n as i128;
    if n % c != 0 {
        return None;
    }
    let (step1, step2) = (w / c, b / c);
    // Reduce the particular solution so that 0 <= s2₀ < b/c; keeps numbers small.
    let s2_raw = eg.y * (n / c);
    let shift = Integer::div_floor(&s2_raw, &step2);
    let s1_0 = eg.x * (n / c) + shift * step1;
    let s2_0 = s2_raw - shift * step2;
    debug_assert_eq!(s1_0 * b + s2_0 * w, n);

    let point = |k: i128| (s1_0 + k * step1, s2_0 - k * step2);
    let p_at = |k: i128| {
        let (s1, s2) = point(k);
        p_bound_wide(s1, s2, e)
    };
    let (pm, p0, pp) = (p_at(-1), p_at(0), p_at(1));
    let curvature = pp + pm - 2 * p0; // 2 × leading coefficient
    debug_assert!(curvature < 0);
    // vertex k* = -(pp - pm) / (2 · curvature)
    let centre = Integer::div_floor(&(pm - pp), &(2 * curvature));

    let (best_k, best_p) = (centre - 2..=centre + 3)
        .map(|k| (k, p_at(k)))
        .fold(None, |best: Option<(i128, i128)>, (k, p)| match best {
            Some((_, bp)) if bp > p => best,
            _ => Some((k, p)),
        })
        .expect("nonempty candidate window");
    let (s1, s2) = point(best_k);
    Some(MaxPresentation {
        s1: i64::try_from(s1).ok()?,
        s2: i64::try_from(s2).ok()?,
        p: i64::try_from(best_p).ok()?,
    })
}

/// One violated inequality `R(m + g) < P(s1, s2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HfWitness {
    pub m: i64,
    pub s1: i64,
    pub s2: i64,
    pub r_value: i64,
    pub p_value: i64,
}

impl HfWitness {
    pub fn presentation(&self) -> Presentation {
        Presentation { m: self.m, s1: self.s1, s2: self.s2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HfReport {
    pub verdict: Verdict,
    /// Every violation, ordered by `m`.
    pub witnesses: Vec<HfWitness>,
}

/// One sample of the comparison `R(m + g)` vs `max P`, for plotting and for
/// building [`HfReport`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HfPoint {
    pub m: i64,
    pub r_value: i64,
    /// `None` when `gcd(a, b)` does not divide `m + g - 1`.
    pub bound: Option<MaxPresentation>,
}

/// `R(m + g)` against the best bound for every `m ∈ [-g, g]`.
pub fn hf_profile_with(ct: &CurveType, r: &CountingFunction) -> Vec<HfPoint> {
    let g = ct.g();
    (-g..=g)
        .map(|m| HfPoint {
            m,
            r_value: r.value(m + g),
            bound: max_p_over_presentations(ct, m + g - 1),
        })
        .collect()
}

pub fn hf_profile(ct: &CurveType, cfg: &CuspConfiguration) -> Result<Vec<HfPoint>> {
    let r = curve_r_function(ct, cfg)?;
    Ok(hf_profile_with(ct, &r))
}

/// Runs the inequality for a precomputed `R`-function.
pub fn hf_check_with(ct: &CurveType, r: &CountingFunction) -> HfReport {
    let witnesses: Vec<HfWitness> = hf_profile_with(ct, r)
        .into_iter()
        .filter_map(|pt| {
            let best = pt.bound?;
            (pt.r_value < best.p).then_some(HfWitness {
                m: pt.m,
                s1: best.s1,
                s2: best.s2,
                r_value: pt.r_value,
                p_value: best.p,
            })
        })
        .collect();
    let verdict = if witnesses.is_empty() { Verdict::Passes } else { Verdict::Obstructed };
    HfReport { verdict, witnesses }
}

pub fn hf_check(ct: &CurveType, cfg: &CuspConfiguration) -> Result<HfReport> {
    let r = curve_r_function(ct, cfg)?;
    Ok(hf_check_with(ct, &r))
}

/// Multiplicity of a cusp cannot exceed `b`. This is `hf_check` at
/// `(s1, s2) = (1, 0)`: a cusp with `r > b` has `R(b + 1) = 1 < 2`.
pub fn multiplicity_bound_check(ct: &CurveType, cusp: &PuiseuxCusp) -> bool {
    cusp.r() <= ct.b()
}

/// `d(Y, s_m) = -[((d - 2m)² - d) / (4d) - 2(R(m + g) - m)]` for
/// `m ∈ [-d/2, d/2)`.
pub fn d_invariant(ct: &CurveType, cfg: &CuspConfiguration, m: i64) -> Result<Rational> {
    let r = curve_r_function(ct, cfg)?;
    d_invariant_with(ct, &r, m)
}

pub fn d_invariant_with(ct: &CurveType, r: &CountingFunction, m: i64) -> Result<Rational> {
    let d = ct.d();
    if 2 * m < -d || 2 * m >= d {
        return Err(Error::Range(format!("m = {m} outside [-d/2, d/2) with d = {d}")));
    }
    let quad = Rational::new((d - 2 * m) * (d - 2 * m) - d, 4 * d);
    let corr = Rational::from_integer(2 * (r.value(m + ct.g()) - m));
    Ok(-(quad - corr))
}

/// All d-invariants, `m` running over `[-d/2, d/2)` in increasing order.
pub fn d_invariants(ct: &CurveType, cfg: &CuspConfiguration) -> Result<Vec<(i64, Rational)>> {
    let r = curve_r_function(ct, cfg)?;
    let d = ct.d();
    let lo = Integer::div_ceil(&-d, &2);
    let hi = Integer::div_ceil(&d, &2);
    (lo..hi).map(|m| Ok((m, d_invariant_with(ct, &r, m)?))).collect()
}
