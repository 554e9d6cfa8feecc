//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p semigroup-lengths --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semigroup_lengths::exact::{ceil_int, floor_int, frac, int};
use semigroup_lengths::{
    canonicalize_pair, count_on_line, density_f, empirical_stats, integrate_f, is_element,
    length_multiset, predicted_stats, residue_class, scaled_histogram, to_decimal_string,
    translation_offset, validate, verify_bound, verify_translation, Rational, TriangleDensity,
    WeightSystem,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Compares `value` with a printed decimal, rounding to as many places as
/// the printed value shows.
fn matches_printed(value: &Rational, printed: &str) -> bool {
    let places = printed.split_once('.').map_or(0, |(_, f)| f.len()) as u32;
    to_decimal_string(value, places) == printed
}

fn f64_matches_printed(value: f64, printed: &str) -> bool {
    let places = printed.split_once('.').map_or(0, |(_, f)| f.len());
    format!("{value:.places$}") == printed
}

/// Random valid instance with coprime generators: weights and generators
/// are drawn independently, then reordered by decreasing ratio.
fn random_instance(rng: &mut ChaCha8Rng, max_gen: i64, weight_range: (i64, i64)) -> WeightSystem {
    loop {
        let n: [i64; 3] = std::array::from_fn(|_| rng.gen_range(1..=max_gen));
        let m: [i64; 3] = std::array::from_fn(|_| rng.gen_range(weight_range.0..=weight_range.1));
        let mut idx = [0usize, 1, 2];
        // m_i / n_i descending, via cross-multiplication
        idx.sort_by(|&i, &j| (m[j] * n[i]).cmp(&(m[i] * n[j])));
        if let Ok(ws) = validate(idx.map(|i| m[i]), idx.map(|i| n[i]), false) {
            if ws.gens().is_coprime() {
                return ws;
            }
        }
    }
}

fn summary_statistics() -> Outcome {
    let ws = validate([4, 7, 2], [9, 20, 6], true).map_err(|e| e.to_string())?;
    let n = 100_000;
    let actual = empirical_stats(&length_multiset(&ws, n).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let predicted = predicted_stats(&ws, n).map_err(|e| e.to_string())?;
    let rows: [(&str, bool); 12] = [
        ("actual mean", f64_matches_printed(actual.mean, "37591.84")),
        ("actual median", f64_matches_printed(actual.median, "37200.00")),
        ("actual mode", matches_printed(&actual.mode, "35000.00")),
        ("actual stdev", f64_matches_printed(actual.stdev, "2446.32")),
        ("actual min", matches_printed(&actual.min, "33334.00")),
        ("actual max", matches_printed(&actual.max, "44440.00")),
        ("predicted mean", matches_printed(&predicted.mean_exact, "37592.59")),
        ("predicted median", f64_matches_printed(predicted.median, "37200.89")),
        ("predicted mode", matches_printed(&predicted.mode, "35000.00")),
        ("predicted stdev", f64_matches_printed(predicted.stdev, "2446.27")),
        ("predicted min", matches_printed(&predicted.min, "33333.33")),
        ("predicted max", matches_printed(&predicted.max, "44444.44")),
    ];
    let bad: Vec<&str> = rows.iter().filter(|r| !r.1).map(|r| r.0).collect();
    check(bad.is_empty(), || {
        format!("mismatched {bad:?}; actual {actual:?}; predicted {predicted:?}")
    })?;
    Ok(format!(
        "12 statistics at n=1e5 (actual mean {:.2}, stdev {:.2})",
        actual.mean, actual.stdev
    ))
}

fn window_table() -> Outcome {
    let ws = validate([20, 9, 6], [1, 1, 1], false).map_err(|e| e.to_string())?;
    let dd = ws.direction();
    let rows: [(u64, Rational, Rational, [&str; 5]); 6] = [
        (100, int(8), int(15), ["0.757", "0.742424", "0.014576", "0.3812", "0.151286"]),
        (1000, int(8), int(15), ["0.743884", "0.742424", "0.001460", "0.038012", "0.015056"]),
        (10000, int(8), int(15), ["0.742570", "0.742424", "0.000146", "0.003800", "0.001505"]),
        (100, int(7), frac(71, 10), ["0.0058", "0.005", "0.0008", "0.1052", "0.01"]),
        (1000, int(7), frac(71, 10), ["0.00509", "0.005", "0.00009", "0.010412", "0.000927"]),
        (10000, int(7), frac(71, 10), ["0.005009", "0.005", "0.000009", "0.001040", "0.000092"]),
    ];
    for (n, alpha, beta, printed) in rows {
        let r = verify_bound(&ws, &dd, n, &alpha, &beta).map_err(|e| e.to_string())?;
        let values = [r.scaled_mass, r.integral, r.error, r.theorem_bound, r.refined_bound];
        for (label, (v, p)) in ["mass", "integral", "error", "theorem", "refined"]
            .iter()
            .zip(values.iter().zip(printed))
        {
            check(matches_printed(v, p), || {
                format!("n={n} [{alpha},{beta}] {label}: got {} want {p}", to_decimal_string(v, 8))
            })?;
        }
        if n == 100 && alpha == int(8) {
            check(r.count == 3785, || format!("|Λ[100] ∩ [800,1500]| = {}", r.count))?;
        }
    }
    Ok("6 rows x 5 columns, |Λ[100] ∩ [800,1500]| = 3785".into())
}

/// Independent antiderivative: the density is `2(t - t3)/((t1 - t3)(t2 - t3))`
/// on `[t3, t2]` and `2(t1 - t)/((t1 - t3)(t1 - t2))` on `[t2, t1]`.
fn exact_integral() -> Outcome {
    let ws = validate([20, 9, 6], [1, 1, 1], false).map_err(|e| e.to_string())?;
    let (t1, t2, t3) = (int(20), int(9), int(6));
    let width = t1 - t3;
    let rising = |a: Rational, b: Rational| {
        ((b - t3) * (b - t3) - (a - t3) * (a - t3)) / (width * (t2 - t3))
    };
    let falling = |a: Rational, b: Rational| {
        ((t1 - a) * (t1 - a) - (t1 - b) * (t1 - b)) / (width * (t1 - t2))
    };
    let oracle = rising(int(8), t2) + falling(t2, int(15));
    check(oracle == frac(2401, 3234), || format!("oracle gives {oracle}"))?;
    let got = integrate_f(&ws, &int(8), &int(15)).map_err(|e| e.to_string())?;
    check(got == frac(2401, 3234), || format!("integrate_f gives {got}"))?;
    Ok("∫_8^15 F = 2401/3234".into())
}

fn oracle_equivalence() -> Outcome {
    let instances: [([i64; 3], [i64; 3]); 12] = [
        ([20, 9, 6], [1, 1, 1]),
        ([4, 7, 2], [9, 20, 6]),
        ([3, 9, 4], [5, 17, 8]),
        ([2, 4, 0], [2, 4, 3]),
        ([1, 0, 0], [6, 9, 20]),
        ([0, 0, -1], [2, 5, 3]),
        ([1, 1, 1], [6, 9, 20]),
        ([1, 1, 1], [3, 5, 7]),
        ([5, -1, -4], [2, 3, 7]),
        ([7, 3, 1], [4, 3, 5]),
        ([2, 1, 1], [1, 2, 3]),
        ([10, 3, 5], [7, 4, 11]),
    ];
    let (mut saw_d2, mut saw_rho1, mut saw_rho3, mut compared) = (false, false, false, 0u64);
    for (m, gens) in instances {
        let ws = validate(m, gens, false).map_err(|e| format!("{m:?}/{gens:?}: {e}"))?;
        let dd = ws.direction();
        saw_d2 |= dd.d == 2;
        saw_rho1 |= dd.rho1() == 0;
        saw_rho3 |= dd.rho3() == 0;
        for n in 0..=300u64 {
            let lm = length_multiset(&ws, n).map_err(|e| e.to_string())?;
            let nq = int(n as i128);
            let lo = ceil_int(&(ws.ratio(2) * nq)) - 2;
            let hi = floor_int(&(ws.ratio(0) * nq)) + 2;
            for mm in lo..=hi {
                let line = count_on_line(&ws, &dd, mm, n as i128).map_err(|e| e.to_string())?;
                check(line.count == lm.count(mm) as u128, || {
                    format!("{m:?}/{gens:?} n={n} m={mm}: line {} brute {}", line.count, lm.count(mm))
                })?;
                compared += 1;
            }
        }
    }
    check(saw_d2 && saw_rho1 && saw_rho3, || "coverage of d=2, ρ1=0, ρ3=0 missing".into())?;
    Ok(format!("12 instances, n ≤ 300, {compared} (m, n) pairs agree"))
}

fn bound_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b0d5);
    let mut theorem_slack = int(1);
    for trial in 0..200 {
        let ws = random_instance(&mut rng, 7, (-5, 12));
        let dd = ws.direction();
        let density = TriangleDensity::new(&ws);
        let n = rng.gen_range(1..=2000u64);
        let span = density.right - density.left;
        let pick = |rng: &mut ChaCha8Rng| {
            let den = rng.gen_range(1..=12i128);
            let u = frac(rng.gen_range(0..=den), den);
            density.left + span * u
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let (alpha, beta) = if a <= b { (a, b) } else { (b, a) };

        let report = verify_bound(&ws, &dd, n, &alpha, &beta).map_err(|e| e.to_string())?;
        // brute force, independent of the line counter
        let nq = int(n as i128);
        let brute = length_multiset(&ws, n)
            .map_err(|e| e.to_string())?
            .count_between(ceil_int(&(alpha * nq)), floor_int(&(beta * nq)));
        let label = || format!("trial {trial}: {:?} n={n} [{alpha}, {beta}]", ws);
        check(brute == report.count, || format!("{}: count {} vs brute {brute}", label(), report.count))?;
        let mass = int(brute as i128) * int(2 * ws.gens().product()) / (nq * nq);
        let error = (mass - report.integral).abs();
        check(error == report.error, || format!("{}: error mismatch", label()))?;
        check(error <= report.refined_bound, || {
            format!("{}: error {error} > refined {}", label(), report.refined_bound)
        })?;
        check(error <= report.theorem_bound, || {
            format!("{}: error {error} > theorem {}", label(), report.theorem_bound)
        })?;
        theorem_slack = theorem_slack.min((report.theorem_bound - error) / report.theorem_bound);
    }
    Ok(format!(
        "200 seeded instances, 0 violations (min relative theorem slack {:.3})",
        semigroup_lengths::exact::to_f64(&theorem_slack)
    ))
}

fn residue_structure() -> Outcome {
    let ws = validate([3, 9, 4], [5, 17, 8], false).map_err(|e| e.to_string())?;
    let dd = ws.direction();
    check(dd.d == 2, || format!("d = {}", dd.d))?;
    let tolerance_numer = 2 * ws.gens().product();
    let mut points = 0u64;
    for n in 1..=500u64 {
        let class = residue_class(&ws, &dd, n as i128).map_err(|e| e.to_string())?;
        let lm = length_multiset(&ws, n).map_err(|e| e.to_string())?;
        for (m, _) in lm.iter() {
            check((m - class.c).rem_euclid(2) == 0, || {
                format!("n={n} m={m} populated outside class c={}", class.c)
            })?;
        }
        let tolerance = frac(tolerance_numer, dd.d * n as i128);
        for point in scaled_histogram(&ws, &dd, n).map_err(|e| e.to_string())? {
            let p = point.map_err(|e| e.to_string())?;
            check(p.count == lm.count(p.m) as u128, || format!("n={n} m={}: histogram count", p.m))?;
            if p.count == 0 {
                continue;
            }
            let f = density_f(&ws, &p.position).map_err(|e| e.to_string())?;
            check((p.value - f).abs() <= tolerance, || {
                format!("n={n} m={}: |{} - {f}| > {tolerance}", p.m, p.value)
            })?;
            points += 1;
        }
    }
    Ok(format!("d=2, n ≤ 500, {points} nonzero histogram values within tolerance"))
}

fn supersymmetric() -> Outcome {
    // the weighting pair as it is usually drawn, with permuted coordinates
    let pair = canonicalize_pair(([2, 3, 1], [2, 6, 3]), ([3, 1, 2], [3, 2, 6]))
        .map_err(|e| e.to_string())?;
    let sys = pair.system;
    check((sys.a, sys.b, sys.c) == (1, 2, 3), || format!("canonical system {sys:?}"))?;
    let gens = sys.gens();
    let mut verified = 0;
    for n in 0..=120u64 {
        if !is_element(&gens, n as i128) {
            continue;
        }
        let t = verify_translation(&sys, n).map_err(|e| e.to_string())?;
        check(t.passed, || format!("translation fails at n={n}"))?;
        if n + 6 <= 120 {
            let next = translation_offset(&sys, n + 6).map_err(|e| e.to_string())?;
            check(next == t.offset, || format!("r_{n} = {} but r_{} = {next}", t.offset, n + 6))?;
        }
        verified += 1;
    }
    let r75 = translation_offset(&sys, 75).map_err(|e| e.to_string())?;
    check(r75 == 2, || format!("r_75 = {r75}"))?;
    Ok(format!("(1,2,3): {verified} elements ≤ 120 translate, r_75 = 2, period 6"))
}

fn normalization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdead_f00d);
    let mut instances = vec![
        validate([1, 0, 0], [6, 9, 20], false).map_err(|e| e.to_string())?,
        validate([2, 4, 0], [2, 4, 3], false).map_err(|e| e.to_string())?,
    ];
    while instances.len() < 20 {
        instances.push(random_instance(&mut rng, 40, (-30, 60)));
    }
    let (mut rho1, mut rho3) = (false, false);
    for ws in &instances {
        let dd = ws.direction();
        rho1 |= dd.rho1() == 0;
        rho3 |= dd.rho3() == 0;
        let f = TriangleDensity::new(ws);
        let total = integrate_f(ws, &f.left, &f.right).map_err(|e| e.to_string())?;
        check(total == int(1), || format!("{ws:?}: total mass {total}"))?;
    }
    check(rho1 && rho3, || "missing ρ1=0 or ρ3=0 instance".into())?;
    Ok("20 instances integrate to exactly 1".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("summary statistics", summary_statistics),
        ("window error table", window_table),
        ("exact window integral", exact_integral),
        ("line count vs brute force", oracle_equivalence),
        ("bound validity", bound_validity),
        ("residue structure", residue_structure),
        ("supersymmetric translation", supersymmetric),
        ("density normalization", normalization),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {}. {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
