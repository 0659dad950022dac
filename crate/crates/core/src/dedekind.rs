//! Sawtooth function, Dedekind and Dedekind–Rademacher sums, and the four
//! sawtooth sums that control the large-`w` growth of the spectrum at
//! infinity.
//!
//! All sums are accumulated as integer numerators over a fixed common
//! denominator (`⟨k/q⟩ = (2(k mod q) - q) / 2q` off the multiples of `q`)
//! and only turned into a [`Rational`] at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `⟨x⟩ = {x} - 1/2` for `x ∉ Z`, and `0` on the integers.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x.frac() - Rational::new(1, 2)
    }
}

/// Numerator of `⟨k/q⟩` over the denominator `2q`.
fn saw_num(k: i128, q: i128) -> i128 {
    let r = k.rem_euclid(q);
    if r == 0 {
        0
    } else {
        2 * r - q
    }
}

fn rational(num: i128, den: i128) -> Rational {
    Rational::from_bigints(BigInt::from(num), BigInt::from(den))
}

/// `s(p, q) = Σ_{i=0}^{q-1} ⟨i/q⟩⟨pi/q⟩`.
pub fn dedekind_sum(p: i64, q: i64) -> Result<Rational> {
    if q < 1 {
        return Err(Error::Domain(format!("dedekind sum modulus must be >= 1, got {q}")));
    }
    rademacher_sum(1, p, q)
}

/// `D(p, q, r) = Σ_{i=0}^{r-1} ⟨pi/r⟩⟨qi/r⟩`. `D(1, p, q) = s(p, q)`.
pub fn rademacher_sum(p: i64, q: i64, r: i64) -> Result<Rational> {
    if r < 1 {
        return Err(Error::Domain(format!("rademacher sum modulus must be >= 1, got {r}")));
    }
    let (p, q, r) = (p as i128, q as i128, r as i128);
    let num: i128 = (0..r).map(|i| saw_num(p * i, r) * saw_num(q * i, r)).sum();
    Ok(rational(num, 4 * r * r))
}

/// Right-hand side of Dedekind reciprocity,
/// `(p/q + q/p + 1/(pq) - 3) / 12`, for coprime `p, q >= 1`.
pub fn dedekind_reciprocity_rhs(p: i64, q: i64) -> Rational {
    let (p, q) = (p as i128, q as i128);
    rational(p * p + q * q + 1 - 3 * p * q, 12 * p * q)
}

/// Right-hand side of the three-term law,
/// `(p² + q² + r² - 3pqr) / (12pqr)`, for pairwise coprime `p, q, r >= 1`.
pub fn rademacher_reciprocity_rhs(p: i64, q: i64, r: i64) -> Rational {
    let (p, q, r) = (p as i128, q as i128, r as i128);
    rational(p * p + q * q + r * r - 3 * p * q * r, 12 * p * q * r)
}

/// The four sums with `a_w = b_w - c_w + d_w`:
///
/// ```text
/// a_w = Σ_{p=⌈w/2⌉}^{w-1} ⟨pb/w⟩
/// b_w = Σ_{p=0}^{w-1} ⟨pb/w⟩ · 2p/w
/// c_w = Σ_{p=0}^{w-1} ⟨pb/w⟩⟨2p/w⟩        (= D(2, b, w))
/// d_w = ½ Σ_{p=0}^{w-1} ⟨pb/w⟩             (= 0)
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionSums {
    pub a_w: Rational,
    pub b_w: Rational,
    pub c_w: Rational,
    pub d_w: Rational,
}

pub fn section_sums(b: i64, w: i64) -> Result<SectionSums> {
    if b < 2 || w < 2 {
        return Err(Error::Domain(format!("section sums need b, w >= 2, got b = {b}, w = {w}")));
    }
    let (b, w) = (b as i128, w as i128);
    let half = (w + 1) / 2;
    let (mut a, mut bs, mut c, mut d) = (0i128, 0i128, 0i128, 0i128);
    for p in 0..w {
        let s = saw_num(p * b, w);
        if s == 0 {
            continue;
        }
        if p >= half {
            a += s;
        }
        bs += s * p;
        c += s * saw_num(2 * p, w);
        d += s;
    }
    Ok(SectionSums {
        a_w: rational(a, 2 * w),
        // s/(2w) · 2p/w
        b_w: rational(bs, w * w),
        c_w: rational(c, 4 * w * w),
        d_w: rational(d, 4 * w),
    })
}

/// Limits of `a_w/w`, `b_w/w`, `c_w/w` as `w → ∞` for fixed `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionLimits {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

pub fn section_limits(b: i64) -> SectionLimits {
    let odd = b % 2 != 0;
    SectionLimits {
        a: if odd { Rational::new(1, 8 * b) } else { Rational::zero() },
        b: Rational::new(1, 6 * b),
        c: if odd { Rational::new(1, 24 * b) } else { Rational::new(1, 6 * b) },
    }
}

/// `w` along which the limits are computed: coprime to `2b` for odd `b`,
/// `gcd(b, w) = 2` for even `b`.
pub fn on_limit_subsequence(b: i64, w: i64) -> bool {
    if b % 2 != 0 {
        w.gcd(&(2 * b)) == 1
    } else {
        w.gcd(&b) == 2
    }
}

/// Largest `w <= upto` on the limit subsequence for `b`.
pub fn largest_subsequence_member(b: i64, upto: i64) -> Option<i64> {
    (2..=upto).rev().find(|&w| on_limit_subsequence(b, w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitRow {
    pub w: i64,
    pub a_over_w: Rational,
    pub b_over_w: Rational,
    pub c_over_w: Rational,
    pub a_deviation: Rational,
    pub b_deviation: Rational,
    pub c_deviation: Rational,
}

impl LimitRow {
    pub fn max_deviation(&self) -> &Rational {
        [&self.a_deviation, &self.b_deviation, &self.c_deviation]
            .into_iter()
            .max()
            .expect("three deviations")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitReport {
    pub b: i64,
    pub tolerance: Rational,
    pub limits: SectionLimits,
    /// Samples at increasing `w`; the last one is the largest subsequence
    /// member `<= w_max`.
    pub rows: Vec<LimitRow>,
    /// Every deviation at the largest sampled `w` is within tolerance.
    pub within_tolerance: bool,
}

/// Convergence harness for `a_w/w`, `b_w/w`, `c_w/w`: samples the limit
/// subsequence near `100, 1000, ...` and at `w_max`.
pub fn verify_limits(b: i64, w_max: i64, tol: &Rational) -> Result<LimitReport> {
    if b < 2 {
        return Err(Error::Domain(format!("verify_limits needs b >= 2, got {b}")));
    }
    if w_max < 100 {
        return Err(Error::Domain(format!("verify_limits needs w_max >= 100, got {w_max}")));
    }
    let limits = section_limits(b);
    let mut checkpoints = Vec::new();
    let mut t = 100;
    while t < w_max {
        checkpoints.push(t);
        t *= 10;
    }
    checkpoints.push(w_max);
    let mut ws: Vec<i64> = checkpoints
        .into_iter()
        .filter_map(|t| largest_subsequence_member(b, t))
        .collect();
    ws.dedup();
    let rows = ws
        .into_iter()
        .map(|w| {
            let sums = section_sums(b, w)?;
            let a_over_w = sums.a_w.div_int(w);
            let b_over_w = sums.b_w.div_int(w);
            let c_over_w = sums.c_w.div_int(w);
            Ok(LimitRow {
                w,
                a_deviation: (&a_over_w - &limits.a).abs(),
                b_deviation: (&b_over_w - &limits.b).abs(),
                c_deviation: (&c_over_w - &limits.c).abs(),
                a_over_w,
                b_over_w,
                c_over_w,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let within_tolerance = rows.last().is_some_and(|r| r.max_deviation() <= tol);
    Ok(LimitReport { b, tolerance: tol.clone(), limits, rows, within_tolerance })
}
