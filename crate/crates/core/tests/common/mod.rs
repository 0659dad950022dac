#![allow(dead_code)]

use std::collections::BTreeMap;

use cuspidal::spectrum::{cusp_spectrum, spectrum_at_infinity_table, SpectrumMultiset};
use cuspidal::{CurveType, CuspConfiguration, PuiseuxCusp, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Membership in the semigroup generated by `gens`, by reachability.
pub fn semigroup_members(gens: &[i64], upto: i64) -> Vec<bool> {
    let n = upto.max(0) as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        reach[i] = gens.iter().any(|&g| g as usize <= i && reach[i - g as usize]);
    }
    reach
}

/// `#S ∩ [0, t)` counted directly.
pub fn brute_r(gens: &[i64], t: i64) -> i64 {
    if t <= 0 {
        return 0;
    }
    semigroup_members(gens, t - 1).iter().filter(|&&m| m).count() as i64
}

/// `[R(0), R(1), ..., R(upto)]` counted directly.
pub fn r_table(gens: &[i64], upto: i64) -> Vec<i64> {
    let members = semigroup_members(gens, upto);
    let mut out = Vec::with_capacity(members.len() + 1);
    let mut count = 0;
    out.push(0);
    for m in members.iter().take(upto as usize) {
        count += i64::from(*m);
        out.push(count);
    }
    out
}

/// `min Σ R_i(k_i)` over all compositions `k_1 + ... + k_n = t`, `k_i >= 0`,
/// with each `R_i` given as an [`r_table`] reaching at least `t`.
pub fn composition_min(tables: &[Vec<i64>], t: usize) -> i64 {
    match tables {
        [] => t as i64,
        [only] => only[t],
        [first, rest @ ..] => (0..=t).map(|k| first[k] + composition_min(rest, t - k)).min().unwrap(),
    }
}

/// Cyclotomic polynomial `Φ_n`, lowest degree first.
pub fn cyclotomic(n: i64) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            poly = divide_exact(&poly, &cyclotomic(d)).expect("Φ_d divides t^n - 1");
        }
    }
    poly
}

/// `num / den` for a monic `den`, or `None` if there is a remainder.
pub fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dn = den.len() - 1;
    if num.len() < den.len() {
        return if num.iter().all(Zero::is_zero) { Some(vec![BigInt::zero()]) } else { None };
    }
    let mut rem = num.to_vec();
    let mut q = vec![BigInt::zero(); num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        q[i] = c;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

/// How many times `Φ_n` divides `poly`.
pub fn cyclotomic_multiplicity(poly: &[BigInt], n: i64) -> i64 {
    let phi = cyclotomic(n);
    let mut cur = poly.to_vec();
    let mut k = 0;
    while let Some(q) = divide_exact(&cur, &phi) {
        cur = q;
        k += 1;
    }
    k
}

pub fn cusps_union(cfg: &CuspConfiguration) -> SpectrumMultiset {
    cfg.cusps()
        .iter()
        .fold(SpectrumMultiset::new(), |acc, c| acc.union(&cusp_spectrum(c)))
}

/// Semicontinuity on the dense grid `j / (10L)`, `L` the lcm of every
/// spectrum denominator. Returns the violated grid points with their
/// excess, computed from raw multiset counts.
pub fn grid_violations(ct: &CurveType, cfg: &CuspConfiguration) -> BTreeMap<Rational, u64> {
    let inf = spectrum_at_infinity_table(ct);
    let cusps = cusps_union(cfg);
    let lcm = inf
        .values()
        .chain(cusps.values())
        .map(|x| x.denom().clone())
        .fold(BigInt::one(), |acc, d| num_integer::Integer::lcm(&acc, &d));
    let steps = i64::try_from(lcm * 10).expect("grid fits in i64");
    let one = Rational::one();
    let mut out = BTreeMap::new();
    for j in 1..steps {
        let x = Rational::new(j, steps);
        if inf.contains(&x) {
            continue;
        }
        let hi = &x + &one;
        let ci = cusps.count_open(&x, &hi);
        let ii = inf.count_open(&x, &hi);
        let co = cusps.total() - ci;
        let io = inf.total() - ii;
        let excess = ci.saturating_sub(ii).max(co.saturating_sub(io));
        if excess > 0 {
            out.insert(x, excess);
        }
    }
    out
}

pub fn uni(r: i64, s: i64) -> CuspConfiguration {
    CuspConfiguration::unicuspidal(PuiseuxCusp::new(r, s).unwrap())
}

pub fn ct(a: i64, b: i64, e: i64) -> CurveType {
    CurveType::new(a, b, e).unwrap()
}

/// `max P` over `k ∈ [-K, K]` along the solution line of `s1·b + s2·w = n`,
/// by exhaustive search from one particular solution. Ties go to the
/// larger `s1`.
pub fn brute_max_p(ct: &CurveType, n: i64, k_range: i64) -> Option<(i64, i64, i64)> {
    let (b, w, e) = (ct.b() as i128, ct.w() as i128, ct.e() as i128);
    let n = n as i128;
    let c = num_integer::Integer::gcd(&b, &w);
    if n % c != 0 {
        return None;
    }
    let s2_0 = (0..b / c).find(|s2| (n - s2 * w) % b == 0)?;
    let s1_0 = (n - s2_0 * w) / b;
    let mut best: Option<(i128, i128, i128)> = None;
    for k in -(k_range as i128)..=k_range as i128 {
        let (s1, s2) = (s1_0 + k * (w / c), s2_0 - k * (b / c));
        let p = (s1 + 1) * (s2 + 1) + s2 * (s2 + 1) * e / 2;
        if best.is_none_or(|(bs1, _, bp)| p > bp || (p == bp && s1 > bs1)) {
            best = Some((s1, s2, p));
        }
    }
    best.map(|(s1, s2, p)| (s1 as i64, s2 as i64, p as i64))
}
