//! Spectra of one-Puiseux-pair cusps and of the link at infinity of a
//! type `(a, b)` curve, and the semicontinuity comparison between them.
//!
//! The spectrum at infinity is built two ways. [`spectrum_at_infinity_table`]
//! evaluates the closed-form case table directly. [`spectrum_at_infinity_derived`]
//! reconstructs it root by root from the Alexander polynomial and the
//! equivariant signatures: at `λ = e^{2πix}` the multiplicity of `x` is
//! `A_x = (ord + σ)/2` and that of `1 + x` is `B_x = (ord - σ)/2`. The two
//! must agree; the acceptance suite checks that on a grid.

mod alexander;
mod multiset;
mod semicontinuity;
mod signature;

pub use alexander::AlexanderData;
pub use multiset::{CumulativeCounts, SpectrumMultiset};
pub use semicontinuity::{
    critical_points, interval_comparison, semicontinuity_check, semicontinuity_check_with_points,
    IntervalComparison, SemicontinuityReport,
};
pub use signature::SignatureProfile;

use serde::Serialize;

use crate::curve::{CurveType, PuiseuxCusp};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `{i/r + j/s : 1 <= i < r, 1 <= j < s}`, the spectrum of `x^r = y^s`.
pub fn cusp_spectrum(cusp: &PuiseuxCusp) -> SpectrumMultiset {
    let (r, s) = (cusp.r(), cusp.s());
    let mut out = SpectrumMultiset::new();
    for i in 1..r {
        for j in 1..s {
            out.insert(Rational::new(i * s + j * r, r * s), 1);
        }
    }
    out
}

/// Closed-form spectrum at infinity.
///
/// With `p ∈ [1, w-1]`, `q ∈ [1, b-1]`, `fp = ⌊pb/w⌋`, `fq = ⌊qa/b⌋`:
///
/// | `x`                      | mult of `x`      | mult of `1 + x`        |
/// |--------------------------|------------------|------------------------|
/// | `p/w` and `q/b`          | `fp + fq - 1`    | `a + b - 1 - fp - fq`  |
/// | `p/w` only               | `fp`             | `b - 1 - fp`           |
/// | `q/b` only               | `fq`             | `a - 1 - fq`           |
///
/// and `1` has multiplicity `a + b - 1`.
pub fn spectrum_at_infinity_table(ct: &CurveType) -> SpectrumMultiset {
    let (a, b, w) = (ct.a(), ct.b(), ct.w());
    let mut out = SpectrumMultiset::new();
    out.insert(Rational::one(), (a + b - 1) as u64);
    for x in fractional_support(ct) {
        let p = x.mul_int(w).to_integer_i64();
        let q = x.mul_int(b).to_integer_i64();
        let fp = p.map(|p| (p * b) / w);
        let fq = q.map(|q| (q * a) / b);
        let (low, high) = match (fp, fq) {
            (Some(fp), Some(fq)) => (fp + fq - 1, a + b - 1 - fp - fq),
            (Some(fp), None) => (fp, b - 1 - fp),
            (None, Some(fq)) => (fq, a - 1 - fq),
            (None, None) => unreachable!("x is a multiple of 1/w or 1/b"),
        };
        debug_assert!(low >= 0 && high >= 0, "negative multiplicity at {x} for {ct}");
        let shifted = &x + Rational::one();
        out.insert(x, low.max(0) as u64);
        out.insert(shifted, high.max(0) as u64);
    }
    out
}

/// Per-root data behind [`spectrum_at_infinity_derived`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootContribution {
    pub x: Rational,
    /// Total equivariant signature at `e^{2πix}`.
    pub sigma: i64,
    /// Order of the Alexander polynomial at `e^{2πix}`.
    pub order: i64,
    /// Multiplicity of `x`.
    pub low: u64,
    /// Multiplicity of `1 + x`.
    pub high: u64,
}

/// `A_x`, `B_x` for every root of unity `e^{2πix}`, `x ∈ (0, 1)`, of the
/// Alexander polynomial.
pub fn root_contributions(ct: &CurveType) -> Result<Vec<RootContribution>> {
    let alexander = AlexanderData::new(ct);
    let signatures = SignatureProfile::new(ct);
    fractional_support(ct)
        .into_iter()
        .map(|x| {
            let order = alexander.order_at(&x);
            let sigma = signatures.at(&x);
            if (order + sigma) % 2 != 0 {
                return Err(Error::Consistency(format!(
                    "{ct}: ord + sigma = {order} + {sigma} is odd at x = {x}"
                )));
            }
            let (low, high) = ((order + sigma) / 2, (order - sigma) / 2);
            if low < 0 || high < 0 {
                return Err(Error::Consistency(format!(
                    "{ct}: negative multiplicity (A, B) = ({low}, {high}) at x = {x}"
                )));
            }
            Ok(RootContribution { x, sigma, order, low: low as u64, high: high as u64 })
        })
        .collect()
}

/// Spectrum at infinity rebuilt from Alexander orders and signatures.
pub fn spectrum_at_infinity_derived(ct: &CurveType) -> Result<SpectrumMultiset> {
    let mut out = SpectrumMultiset::new();
    out.insert(Rational::one(), (ct.a() + ct.b() - 1) as u64);
    for rc in root_contributions(ct)? {
        out.insert(&rc.x + Rational::one(), rc.high);
        out.insert(rc.x, rc.low);
    }
    Ok(out)
}

/// `(#Sp_{r,s} ∩ (1/2, 3/2), #Sp^∞ ∩ (1/2, 3/2))`.
pub fn half_window_counts(ct: &CurveType, cusp: &PuiseuxCusp) -> (u64, u64) {
    let (lo, hi) = (Rational::new(1, 2), Rational::new(3, 2));
    (
        cusp_spectrum(cusp).count_open(&lo, &hi),
        spectrum_at_infinity_table(ct).count_open(&lo, &hi),
    )
}

/// `x ∈ (0, 1)` that are multiples of `1/w` or `1/b`, sorted.
fn fractional_support(ct: &CurveType) -> Vec<Rational> {
    let (b, w) = (ct.b(), ct.w());
    let mut xs: Vec<Rational> = (1..w)
        .map(|p| Rational::new(p, w))
        .chain((1..b).map(|q| Rational::new(q, b)))
        .collect();
    xs.sort();
    xs.dedup();
    xs
}
