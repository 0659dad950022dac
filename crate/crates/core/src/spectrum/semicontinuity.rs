use serde::Serialize;

use super::{cusp_spectrum, spectrum_at_infinity_table, CumulativeCounts, SpectrumMultiset};
use crate::curve::{CurveType, CuspConfiguration};
use crate::error::Result;
use crate::hf::Verdict;
use crate::rational::Rational;

/// Both sides of the two semicontinuity inequalities at one `x`:
///
/// ```text
/// Σ_j #Sp_j ∩ (x, x+1)  <=  #Sp^∞ ∩ (x, x+1)
/// Σ_j #Sp_j \ (x, x+1)  <=  #Sp^∞ \ (x, x+1)
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalComparison {
    pub x: Rational,
    pub cusps_inside: u64,
    pub infinity_inside: u64,
    pub cusps_outside: u64,
    pub infinity_outside: u64,
}

impl IntervalComparison {
    pub fn holds(&self) -> bool {
        self.cusps_inside <= self.infinity_inside && self.cusps_outside <= self.infinity_outside
    }

    /// How far the worse of the two inequalities is violated (0 if both hold).
    pub fn excess(&self) -> u64 {
        self.cusps_inside
            .saturating_sub(self.infinity_inside)
            .max(self.cusps_outside.saturating_sub(self.infinity_outside))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemicontinuityReport {
    pub verdict: Verdict,
    /// Violations in increasing `x`.
    pub witnesses: Vec<IntervalComparison>,
    pub points_evaluated: usize,
}

impl SemicontinuityReport {
    /// The violation with the largest excess, leftmost on ties.
    pub fn strongest(&self) -> Option<&IntervalComparison> {
        self.witnesses
            .iter()
            .fold(None, |best: Option<&IntervalComparison>, w| match best {
                Some(b) if b.excess() >= w.excess() => Some(b),
                _ => Some(w),
            })
    }
}

struct Sides {
    cusps: CumulativeCounts,
    infinity: CumulativeCounts,
    infinity_set: SpectrumMultiset,
}

impl Sides {
    fn new(ct: &CurveType, cfg: &CuspConfiguration) -> Self {
        let cusps = cfg
            .cusps()
            .iter()
            .fold(SpectrumMultiset::new(), |acc, c| acc.union(&cusp_spectrum(c)));
        let infinity_set = spectrum_at_infinity_table(ct);
        Sides { cusps: cusps.cumulative(), infinity: infinity_set.cumulative(), infinity_set }
    }

    fn compare(&self, x: &Rational) -> IntervalComparison {
        let hi = x + Rational::one();
        let cusps_inside = self.cusps.count_open(x, &hi);
        let infinity_inside = self.infinity.count_open(x, &hi);
        IntervalComparison {
            x: x.clone(),
            cusps_inside,
            infinity_inside,
            cusps_outside: self.cusps.total() - cusps_inside,
            infinity_outside: self.infinity.total() - infinity_inside,
        }
    }
}

/// Both sides of the inequalities at a single `x`, whether or not `x` is
/// admissible.
pub fn interval_comparison(ct: &CurveType, cfg: &CuspConfiguration, x: &Rational) -> IntervalComparison {
    Sides::new(ct, cfg).compare(x)
}

/// The points in `(0, 1)` where one of the interval counts can jump: `v`
/// and `v - 1` for every spectrum value `v`, sorted and deduplicated.
pub fn critical_points(ct: &CurveType, cfg: &CuspConfiguration) -> Vec<Rational> {
    let zero = Rational::zero();
    let one = Rational::one();
    let mut pts = Vec::new();
    let mut push = |v: &Rational| {
        for y in [v.clone(), v - &one] {
            if y > zero && y < one {
                pts.push(y);
            }
        }
    };
    spectrum_at_infinity_table(ct).values().for_each(&mut push);
    for c in cfg.cusps() {
        cusp_spectrum(c).values().for_each(&mut push);
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Scan points: every critical point outside `Sp^∞`, and the midpoint of
/// every gap between consecutive critical points (with `0` and `1` as
/// outer ends). Both counts are constant between critical points, so this
/// covers every admissible `x ∈ (0, 1)`.
fn scan_points(ct: &CurveType, cfg: &CuspConfiguration, infinity: &SpectrumMultiset) -> Vec<Rational> {
    let crit = critical_points(ct, cfg);
    let mut fenced = Vec::with_capacity(crit.len() + 2);
    fenced.push(Rational::zero());
    fenced.extend(crit.iter().cloned());
    fenced.push(Rational::one());
    let mut out: Vec<Rational> = fenced
        .windows(2)
        .map(|pair| (&pair[0] + &pair[1]).div_int(2))
        .chain(crit.into_iter().filter(|x| !infinity.contains(x)))
        .collect();
    out.sort();
    out
}

/// Evaluates both inequalities on the given points, skipping any that lie
/// in `Sp^∞` or outside `(0, 1)`.
pub fn semicontinuity_check_with_points(
    ct: &CurveType,
    cfg: &CuspConfiguration,
    points: &[Rational],
) -> SemicontinuityReport {
    let sides = Sides::new(ct, cfg);
    let (zero, one) = (Rational::zero(), Rational::one());
    let admissible: Vec<&Rational> = points
        .iter()
        .filter(|x| **x > zero && **x < one && !sides.infinity_set.contains(x))
        .collect();
    let witnesses: Vec<IntervalComparison> = admissible
        .iter()
        .map(|x| sides.compare(x))
        .filter(|c| !c.holds())
        .collect();
    let verdict = if witnesses.is_empty() { Verdict::Passes } else { Verdict::Obstructed };
    SemicontinuityReport { verdict, witnesses, points_evaluated: admissible.len() }
}

/// Semicontinuity of the spectrum for every admissible `x ∈ (0, 1)`.
pub fn semicontinuity_check(ct: &CurveType, cfg: &CuspConfiguration) -> Result<SemicontinuityReport> {
    cfg.check_genus(ct)?;
    let infinity = spectrum_at_infinity_table(ct);
    let points = scan_points(ct, cfg, &infinity);
    Ok(semicontinuity_check_with_points(ct, cfg, &points))
}
