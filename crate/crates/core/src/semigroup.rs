//! Numerical semigroups, their counting functions `R_S(t) = #(S ∩ [0, t))`,
//! and the infimum convolution that combines several cusps into the
//! `R`-function of a curve.

use num_integer::Integer;
use serde::Serialize;

use crate::curve::{CurveType, CuspConfiguration, PuiseuxCusp};
use crate::error::{Error, Result};

/// A numerical semigroup `S ⊂ Z_{>=0}` given by generators with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<i64>,
    /// Membership on `[0, frobenius + 1]`.
    members: Vec<bool>,
    frobenius: i64,
    gap_count: i64,
}

impl Semigroup {
    /// Sieves membership until `min(generators)` consecutive members appear;
    /// from there on every integer is a member.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Domain("semigroup needs at least one generator".into()));
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::Domain(format!("generators must be positive, got {bad}")));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let gcd = generators.iter().fold(0i64, |acc, g| acc.gcd(g));
        if gcd != 1 {
            return Err(Error::Domain(format!(
                "generators {generators:?} have gcd {gcd}, expected 1"
            )));
        }
        let smallest = generators[0];

        let mut members = vec![true];
        let mut last_gap: i64 = -1;
        let mut n: i64 = 0;
        while n - last_gap < smallest {
            n += 1;
            let hit = generators
                .iter()
                .take_while(|&&g| g <= n)
                .any(|&g| members[(n - g) as usize]);
            members.push(hit);
            if !hit {
                last_gap = n;
            }
        }
        let frobenius = last_gap;
        members.truncate((frobenius + 2) as usize);
        let gap_count = members.iter().filter(|&&m| !m).count() as i64;
        Ok(Semigroup { generators, members, frobenius, gap_count })
    }

    /// The semigroup `<r, s>` of the cusp `x^r = y^s`.
    pub fn of_cusp(cusp: &PuiseuxCusp) -> Self {
        Self::from_generators(&[cusp.r(), cusp.s()]).expect("cusp generators are coprime")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Largest gap, or `-1` for `Z_{>=0}` itself.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of positive integers missing from the semigroup.
    pub fn gap_count(&self) -> i64 {
        self.gap_count
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.members[n as usize]
        }
    }

    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (1..=self.frobenius.max(0)).filter(move |&n| !self.contains(n))
    }

    pub fn counting_function(&self) -> CountingFunction {
        let window_end = self.frobenius + 2;
        let mut window = Vec::with_capacity(window_end as usize + 1);
        let mut count = 0;
        for t in 0..=window_end {
            window.push(count);
            if self.contains(t) {
                count += 1;
            }
        }
        CountingFunction::from_parts(window, self.gap_count)
    }
}

/// A nondecreasing function `R: Z -> Z` with unit steps, `R(t) = 0` for
/// `t <= 0` and `R(t) = t - tail_offset` from `window_end` on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingFunction {
    /// Values on `[0, window_end]`.
    window: Vec<i64>,
    tail_offset: i64,
}

impl CountingFunction {
    fn from_parts(window: Vec<i64>, tail_offset: i64) -> Self {
        let f = CountingFunction { window, tail_offset };
        debug_assert_eq!(f.window[0], 0);
        debug_assert_eq!(f.window[f.window_end() as usize], f.window_end() - tail_offset);
        debug_assert!(f.window.windows(2).all(|p| matches!(p[1] - p[0], 0 | 1)));
        f
    }

    /// `R(t) = max(t, 0)`, the counting function of `Z_{>=0}`. Identity for
    /// the infimum convolution.
    pub fn identity() -> Self {
        CountingFunction { window: vec![0, 1], tail_offset: 0 }
    }

    pub fn window_end(&self) -> i64 {
        self.window.len() as i64 - 1
    }

    pub fn tail_offset(&self) -> i64 {
        self.tail_offset
    }

    pub fn value(&self, t: i64) -> i64 {
        if t <= 0 {
            0
        } else if t >= self.window_end() {
            t - self.tail_offset
        } else {
            self.window[t as usize]
        }
    }

    /// Values on `[0, window_end]`.
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Shrinks or extends the explicit window to `[0, end]`. Fails if the
    /// linear tail does not already hold from `end` on.
    pub fn with_window_end(&self, end: i64) -> Result<Self> {
        let end = end.max(1);
        let current = self.window_end();
        if end < current {
            if let Some(t) = (end..=current).find(|&t| self.value(t) != t - self.tail_offset) {
                return Err(Error::Consistency(format!(
                    "counting function is not linear from {end}: R({t}) = {}, expected {}",
                    self.value(t),
                    t - self.tail_offset
                )));
            }
        }
        let window = (0..=end).map(|t| self.value(t)).collect();
        Ok(CountingFunction::from_parts(window, self.tail_offset))
    }
}

/// `(R1 ⋄ R2)(t) = min_k R1(k) + R2(t - k)`.
///
/// Both arguments vanish on `t <= 0` and are nondecreasing, so the minimum
/// is attained for some `k ∈ [0, t]`. The explicit window of the result
/// covers at least `[0, window_end]`, and is widened when needed so the
/// tail `t - (offset1 + offset2)` is exact beyond it.
pub fn infimum_convolution(r1: &CountingFunction, r2: &CountingFunction, window_end: i64) -> CountingFunction {
    let end = window_end.max(r1.window_end() + r2.window_end()).max(1);
    let window = (0..=end)
        .map(|t| (0..=t).map(|k| r1.value(k) + r2.value(t - k)).min().unwrap_or(0))
        .collect();
    CountingFunction::from_parts(window, r1.tail_offset + r2.tail_offset)
}

/// The `R`-function of a cuspidal curve: the infimum convolution of the
/// counting functions of all its cusps, with explicit window `[0, 2g + 1]`
/// and `R(2g + m) = g + m` beyond.
pub fn curve_r_function(ct: &CurveType, cfg: &CuspConfiguration) -> Result<CountingFunction> {
    cfg.check_genus(ct)?;
    let semigroups: Vec<Semigroup> = cfg.cusps().iter().map(Semigroup::of_cusp).collect();
    curve_r_function_from_semigroups(ct, &semigroups)
}

/// Same as [`curve_r_function`] for cusps given only by their semigroups,
/// e.g. cusps with more than one Puiseux pair. The gap counts must add up
/// to the genus.
pub fn curve_r_function_from_semigroups(ct: &CurveType, semigroups: &[Semigroup]) -> Result<CountingFunction> {
    let g = ct.g();
    let found: i64 = semigroups.iter().map(Semigroup::gap_count).sum();
    if found != g {
        return Err(Error::GenusMismatch { expected: g, found });
    }
    let acc = semigroups.iter().fold(CountingFunction::identity(), |acc, sg| {
        infimum_convolution(&acc, &sg.counting_function(), 0)
    });
    acc.with_window_end(2 * g + 1)
}
