mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{brute_max_p, composition_min, ct, grid_violations, r_table, uni};
use cuspidal::dedekind::{
    dedekind_reciprocity_rhs, dedekind_sum, rademacher_reciprocity_rhs, rademacher_sum, section_sums, verify_limits,
};
use cuspidal::enumerate::{constructed_curve, enumerate_unicuspidal, ConstructedFamily};
use cuspidal::hf::{hf_check, max_p_over_presentations, Verdict};
use cuspidal::semigroup::{curve_r_function, infimum_convolution, CountingFunction, Semigroup};
use cuspidal::spectrum::{
    critical_points, cusp_spectrum, half_window_counts, interval_comparison, root_contributions,
    semicontinuity_check, spectrum_at_infinity_derived, spectrum_at_infinity_table, AlexanderData,
    SignatureProfile,
};
use cuspidal::{CurveType, CuspConfiguration, PuiseuxCusp, Rational};
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Named<T> = (&'static str, fn() -> T);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `x0` moved halfway towards the next critical point above it.
fn test_point(curve: &CurveType, cfg: &CuspConfiguration, x0: &Rational) -> Rational {
    let next = critical_points(curve, cfg)
        .into_iter()
        .find(|y| y > x0)
        .expect("a critical point above x0");
    (x0 + &next).div_int(2)
}

fn case_study() -> Outcome {
    let c = ct(6, 6, 0);
    let found: Vec<(i64, i64)> = enumerate_unicuspidal(&c).iter().map(|k| (k.r(), k.s())).collect();
    ensure!(found == vec![(2, 51), (3, 26), (6, 11)], "unicuspidal list {found:?}");
    let cases = [
        ((2, 51), q(1, 2), (50, 48), Verdict::Obstructed),
        ((3, 26), q(1, 3), (42, 48), Verdict::Passes),
        ((6, 11), q(1, 6), (34, 44), Verdict::Passes),
    ];
    let mut notes = Vec::new();
    for ((r, s), x0, (want_cusp, want_inf), verdict) in cases {
        let cfg = uni(r, s);
        let x = test_point(&c, &cfg, &x0);
        let cmp = interval_comparison(&c, &cfg, &x);
        ensure!(
            (cmp.cusps_inside, cmp.infinity_inside) == (want_cusp, want_inf),
            "({r},{s}) at x = {x}: {} vs {}",
            cmp.cusps_inside,
            cmp.infinity_inside
        );
        let report = semicontinuity_check(&c, &cfg).map_err(|e| e.to_string())?;
        ensure!(report.verdict == verdict, "({r},{s}) verdict {:?}", report.verdict);
        notes.push(format!("({r},{s}) {want_cusp} vs {want_inf}"));
    }
    Ok(notes.join(", "))
}

fn four_four_family() -> Outcome {
    for e in 1..=10 {
        let c = ct(4, 4, e);
        let cfg = uni(3, 6 * e + 10);
        let report = hf_check(&c, &cfg).map_err(|err| err.to_string())?;
        if e % 2 == 0 {
            ensure!(report.verdict == Verdict::Obstructed, "e = {e} not obstructed");
            let hit = report
                .witnesses
                .iter()
                .any(|w| w.m + c.g() == 6 * e + 9 && w.r_value == 2 * e + 3 && w.p_value == 2 * e + 4);
            ensure!(hit, "e = {e}: no witness R({}) = {} < {}", 6 * e + 9, 2 * e + 3, 2 * e + 4);
        } else {
            ensure!(report.verdict == Verdict::Passes, "e = {e} obstructed: {:?}", report.witnesses.first());
        }
    }
    Ok("even e obstructed with R(6e+9) = 2e+3 < 2e+4, odd e pass".into())
}

fn worked_example() -> Outcome {
    let c = ct(6, 4, 0);
    let sig = SignatureProfile::new(&c);
    ensure!(sig.sigma1_all() == [-3, -1, 0, 1, 3], "sigma1 {:?}", sig.sigma1_all());
    ensure!(sig.sigma2_all() == [-3, 0, 3], "sigma2 {:?}", sig.sigma2_all());
    let alex = AlexanderData::new(&c);
    let xs = [q(1, 6), q(1, 4), q(1, 3), q(1, 2), q(2, 3), q(3, 4), q(5, 6)];
    let orders: Vec<i64> = xs.iter().map(|x| alex.order_at(x)).collect();
    ensure!(orders == [3, 5, 3, 8, 3, 5, 3], "orders {orders:?}");
    let derived = spectrum_at_infinity_derived(&c).map_err(|e| e.to_string())?;
    let lower: Vec<Rational> = derived
        .restrict_open(&Rational::zero(), &Rational::one())
        .iter()
        .flat_map(|(x, m)| std::iter::repeat_n(x.clone(), m as usize))
        .collect();
    let listed = [
        q(1, 4),
        q(1, 3),
        q(1, 2),
        q(1, 2),
        q(1, 2),
        q(1, 2),
        q(2, 3),
        q(2, 3),
        q(3, 4),
        q(3, 4),
        q(3, 4),
        q(3, 4),
        q(5, 6),
        q(5, 6),
        q(5, 6),
    ];
    ensure!(lower == listed, "spectrum in (0,1): {lower:?}");
    ensure!(derived.multiplicity(&Rational::one()) == 9, "mult(1) = {}", derived.multiplicity(&Rational::one()));
    ensure!(derived.total() == 39, "total {}", derived.total());
    Ok("signatures, orders, 15 values in (0,1), mult(1) = 9, total 39".into())
}

fn spectrum_constructions_agree() -> Outcome {
    let mut n = 0;
    for a in 1..=8 {
        for b in 1..=8 {
            for e in 0..=4 {
                let c = ct(a, b, e);
                let derived = spectrum_at_infinity_derived(&c).map_err(|err| err.to_string())?;
                ensure!(spectrum_at_infinity_table(&c) == derived, "{c}: table and derived differ");
                n += 1;
            }
        }
    }
    Ok(format!("{n} curve types, identical multisets"))
}

fn coprime_sample(rng: &mut StdRng, hi: i64) -> (i64, i64) {
    loop {
        let (p, q) = (rng.gen_range(1..=hi), rng.gen_range(1..=hi));
        if p.gcd(&q) == 1 {
            return (p, q);
        }
    }
}

fn reciprocity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let (p, q) = coprime_sample(&mut rng, 10_000);
        let lhs = dedekind_sum(p, q).unwrap() + dedekind_sum(q, p).unwrap();
        ensure!(lhs == dedekind_reciprocity_rhs(p, q), "s({p},{q}) + s({q},{p}) = {lhs}");
    }
    let mut triples = 0;
    while triples < 100 {
        let (p, q) = coprime_sample(&mut rng, 500);
        let r = rng.gen_range(1..=500);
        if r.gcd(&p) != 1 || r.gcd(&q) != 1 {
            continue;
        }
        let lhs = rademacher_sum(q, r, p).unwrap() + rademacher_sum(r, p, q).unwrap() + rademacher_sum(p, q, r).unwrap();
        ensure!(lhs == rademacher_reciprocity_rhs(p, q, r), "three-term law fails at ({p},{q},{r}): {lhs}");
        triples += 1;
    }
    Ok("200 pairs <= 10^4, 100 triples <= 500".into())
}

fn section_sum_limits() -> Outcome {
    let tol = q(1, 200);
    let mut notes = Vec::new();
    for b in 3..=6 {
        let report = verify_limits(b, 100_000, &tol).map_err(|e| e.to_string())?;
        let last = report.rows.last().expect("at least one row");
        ensure!(last.w > 99_000, "b = {b}: largest sample w = {}", last.w);
        ensure!(
            report.within_tolerance,
            "b = {b}, w = {}: deviations {} {} {}",
            last.w,
            last.a_deviation,
            last.b_deviation,
            last.c_deviation
        );
        notes.push(format!("b={b} w={} max dev {:.1e}", last.w, last.max_deviation().to_f64()));
    }
    for b in 2..=10 {
        for w in 2..=500 {
            let s = section_sums(b, w).unwrap();
            ensure!(s.d_w.is_zero(), "d_w = {} at b = {b}, w = {w}", s.d_w);
            ensure!(s.a_w == &(&s.b_w - &s.c_w) + &s.d_w, "a_w != b_w - c_w + d_w at b = {b}, w = {w}");
        }
    }
    notes.push("d_w = 0 and split identity for b <= 10, w <= 500".into());
    Ok(notes.join("; "))
}

fn constructed_curves_survive() -> Outcome {
    let mut n = 0;
    for family in [ConstructedFamily::First, ConstructedFamily::Second] {
        for d in 3..=6 {
            for e in 0..=3 {
                for k in 0..=3 {
                    if e == 0 && k == 0 {
                        continue;
                    }
                    let (c, cfg) = constructed_curve(family, d, e, k).map_err(|err| err.to_string())?;
                    let hf = hf_check(&c, &cfg).map_err(|err| err.to_string())?;
                    ensure!(hf.verdict.passes(), "{family:?} d={d} e={e} k={k}: {c} {cfg} HF-obstructed");
                    let sp = semicontinuity_check(&c, &cfg).map_err(|err| err.to_string())?;
                    ensure!(sp.verdict.passes(), "{family:?} d={d} e={e} k={k}: {c} {cfg} spectrum-obstructed");
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} constructed curves, none obstructed"))
}

fn counting_function_laws() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(8);
    let mut gen_sets: Vec<Vec<i64>> = Vec::new();
    for r in 2..=12 {
        for s in r + 1..=30 {
            if r.gcd(&s) == 1 {
                gen_sets.push(vec![r, s]);
            }
        }
    }
    for _ in 0..60 {
        let k = rng.gen_range(2..=4);
        let mut gens: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=20)).collect();
        gens.push(rng.gen_range(2..=20) | 1);
        if gens.iter().fold(0, |acc, g| acc.gcd(g)) == 1 {
            gen_sets.push(gens);
        }
    }
    for gens in &gen_sets {
        let sg = Semigroup::from_generators(gens).map_err(|e| e.to_string())?;
        let r = sg.counting_function();
        let end = 2 * sg.frobenius() + 10;
        let table = r_table(gens, end);
        for t in 0..end {
            ensure!(r.value(t) == table[t as usize], "{gens:?}: R({t})");
            let step = r.value(t + 1) - r.value(t);
            ensure!(step == 0 || step == 1, "{gens:?}: step at {t}");
        }
    }
    let mut curves = vec![(ct(6, 6, 0), uni(2, 51)), (ct(6, 6, 0), uni(3, 26)), (ct(6, 6, 0), uni(6, 11))];
    for d in 3..=5 {
        for e in 1..=2 {
            curves.push(constructed_curve(ConstructedFamily::First, d, e, 1).unwrap());
            curves.push(constructed_curve(ConstructedFamily::Second, d, e, 1).unwrap());
        }
    }
    for (c, cfg) in &curves {
        let r = curve_r_function(c, cfg).map_err(|e| e.to_string())?;
        let g = c.g();
        for m in 0..40 {
            ensure!(r.value(2 * g + m) == g + m, "{c} {cfg}: R(2g+{m})");
        }
    }
    Ok(())
}

fn convolution_laws() -> Result<(), String> {
    let mut pool = Vec::new();
    for r in 2..=61 {
        for s in r + 1..=61 {
            if r.gcd(&s) == 1 && (r - 1) * (s - 1) <= 60 {
                pool.push(PuiseuxCusp::new(r, s).unwrap());
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(21);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(1..=3);
        let cusps: Vec<PuiseuxCusp> = (0..n).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
        let two_g: i64 = cusps.iter().map(PuiseuxCusp::mu).sum();
        if two_g > 60 {
            continue;
        }
        let fns: Vec<CountingFunction> = cusps.iter().map(|c| Semigroup::of_cusp(c).counting_function()).collect();
        let end = two_g + 8;
        let fold = |order: &[usize]| {
            order
                .iter()
                .fold(CountingFunction::identity(), |acc, &i| infimum_convolution(&acc, &fns[i], end))
        };
        let forward = fold(&(0..n).collect::<Vec<_>>());
        let backward = fold(&(0..n).rev().collect::<Vec<_>>());
        let tables: Vec<Vec<i64>> = cusps.iter().map(|c| r_table(&[c.r(), c.s()], end)).collect();
        for t in 0..=end {
            let oracle = composition_min(&tables, t as usize);
            ensure!(forward.value(t) == oracle, "{cusps:?}: composition at {t}");
            ensure!(backward.value(t) == oracle, "{cusps:?}: reversed fold at {t}");
        }
        if n == 3 {
            // (R1 ⋄ R2) ⋄ R3 vs R1 ⋄ (R2 ⋄ R3)
            let left = infimum_convolution(&infimum_convolution(&fns[0], &fns[1], end), &fns[2], end);
            let right = infimum_convolution(&fns[0], &infimum_convolution(&fns[1], &fns[2], end), end);
            for t in 0..=end {
                ensure!(left.value(t) == right.value(t), "{cusps:?}: associativity at {t}");
            }
        }
        checked += 1;
    }
    Ok(())
}

fn symmetry_laws() -> Result<(), String> {
    for a in 0..=8 {
        for b in 1..=8 {
            for e in 0..=4 {
                let Ok(c) = CurveType::new(a, b, e) else { continue };
                ensure!(spectrum_at_infinity_table(&c).is_symmetric(), "{c}: Sp∞ not symmetric");
                let sig = SignatureProfile::new(&c);
                let (w, s1) = (c.w(), sig.sigma1_all());
                for p in 1..w {
                    ensure!(sig.sigma1(p) == -sig.sigma1(w - p), "{c}: sigma1 antisymmetry at {p}");
                }
                for qq in 1..b {
                    ensure!(sig.sigma2(qq) == -sig.sigma2(b - qq), "{c}: sigma2 antisymmetry at {qq}");
                }
                ensure!(s1.len() as i64 == w - 1, "{c}: sigma1 length");
                root_contributions(&c).map_err(|e| e.to_string())?;
            }
        }
    }
    for r in 2..=12 {
        for s in r + 1..=40 {
            if r.gcd(&s) == 1 {
                ensure!(cusp_spectrum(&PuiseuxCusp::new(r, s).unwrap()).is_symmetric(), "({r},{s}) not symmetric");
            }
        }
    }
    Ok(())
}

fn vertex_method() -> Result<(), String> {
    let mut n_checked = 0;
    for a in 0..=6 {
        for b in 1..=6 {
            for e in 0..=3 {
                let Ok(c) = CurveType::new(a, b, e) else { continue };
                let g = c.g();
                for m in -g - 5..=g + 5 {
                    let n = m + g - 1;
                    let fast = max_p_over_presentations(&c, n).map(|mp| (mp.s1, mp.s2, mp.p));
                    let brute = brute_max_p(&c, n, 1000);
                    ensure!(fast == brute, "{c}, n = {n}: vertex {fast:?} vs brute {brute:?}");
                    n_checked += 1;
                }
            }
        }
    }
    ensure!(n_checked > 0, "nothing checked");
    Ok(())
}

fn scan_matches_grid() -> Result<(), String> {
    let c = ct(6, 6, 0);
    for cfg in [uni(2, 51), uni(3, 26), uni(6, 11)] {
        let report = semicontinuity_check(&c, &cfg).map_err(|e| e.to_string())?;
        let grid = grid_violations(&c, &cfg);
        ensure!(report.verdict.passes() == grid.is_empty(), "{cfg}: scan {:?}, grid {} hits", report.verdict, grid.len());
        let scan_max = report.strongest().map_or(0, |w| w.excess());
        let grid_max = grid.values().copied().max().unwrap_or(0);
        ensure!(scan_max == grid_max, "{cfg}: max excess scan {scan_max} vs grid {grid_max}");
        for x in grid.keys() {
            let cmp = interval_comparison(&c, &cfg, x);
            ensure!(!cmp.holds(), "{cfg}: grid violation at {x} not reproduced");
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let suites: [Named<Result<(), String>>; 5] = [
        ("counting functions", counting_function_laws),
        ("convolution", convolution_laws),
        ("symmetry", symmetry_laws),
        ("vertex", vertex_method),
        ("scan vs grid", scan_matches_grid),
    ];
    let mut ran = Vec::new();
    for (name, suite) in suites {
        suite().map_err(|e| format!("{name}: {e}"))?;
        ran.push(name);
    }
    Ok(ran.join(", "))
}

/// `2n(3m/8 - 1/4 - λ_m)` per unit `e`, where `n` grows like `slope_n · e`.
fn proof_slope(slope_n: i64, m: i64) -> Rational {
    let lambda = if m % 2 == 1 { q(1, 8 * m) } else { Rational::zero() };
    (q(3 * m, 8) - q(1, 4) - lambda).mul_int(2 * slope_n)
}

fn finiteness_asymptotics() -> Outcome {
    let e = 200;
    let (r, a, b) = (3, 4, 4);
    let c = ct(a, b, e);
    let cusp = PuiseuxCusp::new(r, 6 * e + 10).unwrap();
    let (srs, sinf) = half_window_counts(&c, &cusp);
    // s = 6e + 10, w = a + be
    let srs_slope = proof_slope(6, r);
    let sinf_slope = proof_slope(b, b);
    let rel = |count: u64, slope: &Rational| ((q(count as i64, e) - slope) / slope).abs();
    let (dev_rs, dev_inf) = (rel(srs, &srs_slope), rel(sinf, &sinf_slope));
    let limit = q(5, 100);
    ensure!(dev_rs < limit, "S_rs/e = {} vs slope {srs_slope}: rel dev {}", q(srs as i64, e), dev_rs.to_f64());
    ensure!(dev_inf < limit, "S_inf/e = {} vs slope {sinf_slope}: rel dev {}", q(sinf as i64, e), dev_inf.to_f64());
    // the summary form 3/4 g + (1/4 - 1/(4r)) s, per unit e
    let summary = q(3, 4).mul_int(6) + (q(1, 4) - q(1, 4 * r)).mul_int(6);
    Ok(format!(
        "e = {e}: S_rs/e = {:.3} (slope {srs_slope}, dev {:.2}%), S_inf/e = {:.3} (slope {sinf_slope}, dev {:.2}%); \
         summary form 3/4 g + (1/4 - 1/(4r)) s gives {summary} per e",
        q(srs as i64, e).to_f64(),
        100.0 * dev_rs.to_f64(),
        q(sinf as i64, e).to_f64(),
        100.0 * dev_inf.to_f64(),
    ))
}

fn main() {
    let criteria: [Named<Outcome>; 9] = [
        ("(6,6) unicuspidal case study", case_study),
        ("(4,4,e) with cusp (3,6e+10)", four_four_family),
        ("(6,4,0) worked example", worked_example),
        ("table vs derived spectrum at infinity", spectrum_constructions_agree),
        ("Dedekind and Rademacher reciprocity", reciprocity),
        ("section sum limits", section_sum_limits),
        ("constructed curves are never obstructed", constructed_curves_survive),
        ("property suites", property_suites),
        ("half-window asymptotics", finiteness_asymptotics),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  {:>2}. {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
