//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//!
//! The process exits non-zero when a criterion fails unexpectedly. The gamma
//! comparison (criterion 7) fails on a known set of degrees; that set is
//! asserted exactly, so the line reads FAIL while the run still succeeds.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::Instant;

use clifford_quartic::classify::{classify, table1_lookup};
use clifford_quartic::quartic::{
    check_32_identity, expand_coeffs, expected_degenerate, expected_square, homaloidal_check, is_degenerate,
    square_detect,
};
use clifford_quartic::repkit::{enumerate_cases, irrep_catalog, rep_build, verify_relations};
use clifford_quartic::symlie::{
    g_kernel_dim, h_kernel, min_g_samples, predict, sharp_check, sharp_expected, table_exceptional, Mode,
};
use clifford_quartic::zetafe::{
    closed_form_matches_pullback, fe_involution_check, fe_quadratic_numeric_check, gamma_pullback, gamma_quartic,
    max_relative_difference, quartic_triples, rep_with_degree, sample_s, squared_oracle, zeta_quartic_mc,
};
use clifford_quartic::CliffordRep;
use num_complex::Complex64;
use rayon::prelude::*;

type Case = (usize, usize, Vec<usize>);

struct Outcome {
    passed: bool,
    /// A failure that matches the documented deviation exactly.
    expected_failure: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(total: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{total} cases")
        } else {
            format!(
                "{} of {total} failed: {}",
                failures.len(),
                failures.iter().take(5).cloned().collect::<Vec<_>>().join("; ")
            )
        };
        Outcome {
            passed,
            expected_failure: false,
            detail,
        }
    }
}

fn enumeration() -> Vec<(Case, CliffordRep)> {
    enumerate_cases(1, 11, 2, 32)
        .into_par_iter()
        .map(|(p, q, mults)| {
            let rep = rep_build(p, q, &mults).expect("enumerated cases build");
            ((p, q, mults), rep)
        })
        .collect()
}

fn collect_failures<F>(reps: &[(Case, CliffordRep)], check: F) -> Outcome
where
    F: Fn(&Case, &CliffordRep) -> Option<String> + Sync,
{
    let failures: Vec<String> = reps
        .par_iter()
        .filter_map(|(case, rep)| check(case, rep).map(|why| format!("({},{},{:?}) {why}", case.0, case.1, case.2)))
        .collect();
    Outcome::from_failures(reps.len(), failures)
}

fn representation_correctness(reps: &[(Case, CliffordRep)]) -> Outcome {
    collect_failures(reps, |_, rep| {
        let r = verify_relations(rep);
        (!r.all_passed()).then(|| format!("{} relation failures", r.failures()))
    })
}

fn degeneracy(reps: &[(Case, CliffordRep)]) -> Outcome {
    collect_failures(reps, |(p, q, mults), rep| {
        let computed = expand_coeffs(rep).is_zero();
        let table = expected_degenerate(*p, *q, rep.m(), mults);
        (computed != table).then(|| format!("computed {computed}, table {table}"))
    })
}

fn square_detection(reps: &[(Case, CliffordRep)]) -> Outcome {
    collect_failures(reps, |(p, q, _), rep| {
        let form = expand_coeffs(rep);
        let found = !form.is_zero() && square_detect(&form).is_some();
        let listed = !form.is_zero() && expected_square(*p, *q, rep.m());
        (found != listed).then(|| format!("witness {found}, listed {listed}"))
    })
}

fn homaloidal(reps: &[(Case, CliffordRep)]) -> Outcome {
    let nondegenerate: Vec<_> = reps
        .iter()
        .filter(|(_, r)| !is_degenerate(r).degenerate)
        .cloned()
        .collect();
    collect_failures(&nondegenerate, |_, rep| {
        let r = homaloidal_check(rep, 20, 2024).expect("valid trial count");
        (!r.passed).then(|| format!("{} of 20 points", r.failures))
    })
}

fn symmetry_dimensions(reps: &[(Case, CliffordRep)]) -> Outcome {
    let mut out = collect_failures(reps, |(p, q, mults), rep| {
        let pr = predict(*p, *q, mults).ok()?;
        let h = h_kernel(rep, Mode::Exact).ok()?.dimension;
        if h != pr.h_dim {
            return Some(format!("h {h} vs {}", pr.h_dim));
        }
        let g = g_kernel_dim(rep, 0, 5, Mode::Exact).ok()?.dimension;
        let n = p + q;
        let want = if pr.degenerate || pr.exceptional {
            pr.g_dim?
        } else {
            n * (n - 1) / 2 + h
        };
        (g != want).then(|| format!("g {g} vs {want}"))
    });
    // stated exceptional dimensions, and float mode against exact on the small cases
    let stated = [
        ((3, 2, vec![1]), 28),
        ((9, 0, vec![1, 0]), 120),
        ((7, 0, vec![1]), 31),
        ((10, 1, vec![1, 0]), 66),
    ];
    let mut extra = Vec::new();
    for ((p, q, mults), want) in stated {
        let rep = rep_build(p, q, &mults).expect("stated case builds");
        let g = g_kernel_dim(&rep, 0, 5, Mode::Exact).expect("exact g").dimension;
        if g != want {
            extra.push(format!("({p},{q},{mults:?}) g {g} vs stated {want}"));
        }
    }
    let small: Vec<_> = reps.iter().filter(|(_, r)| r.m() <= 8).cloned().collect();
    let float = collect_failures(&small, |_, rep| {
        let exact = g_kernel_dim(rep, 0, 5, Mode::Exact).ok()?.dimension;
        let f = g_kernel_dim(rep, min_g_samples(rep.m()), 5, Mode::Float).ok()?;
        let res = f.residual.unwrap_or(f64::INFINITY);
        (f.dimension != exact || res >= 1e-8)
            .then(|| format!("float {} (residual {res:e}) vs exact {exact}", f.dimension))
    });
    for (p, q, mults) in [(7, 0, vec![1]), (9, 0, vec![1, 0])] {
        let rep = rep_build(p, q, &mults).expect("builds");
        let f = g_kernel_dim(&rep, min_g_samples(16), 5, Mode::Float).expect("float g");
        let exact = g_kernel_dim(&rep, 0, 5, Mode::Exact).expect("exact g").dimension;
        if f.dimension != exact || f.residual.unwrap_or(f64::INFINITY) >= 1e-8 {
            extra.push(format!("({p},{q},{mults:?}) float {} vs exact {exact}", f.dimension));
        }
    }
    if !float.passed {
        extra.push(float.detail);
    }
    if !extra.is_empty() {
        out.passed = false;
        out.detail = format!("{}; {}", out.detail, extra.join("; "));
    } else {
        out.detail += &format!(
            ", 4 stated exceptional dimensions, {} float/exact comparisons",
            small.len() + 2
        );
    }
    out
}

fn sharp_condition(reps: &[(Case, CliffordRep)]) -> Outcome {
    collect_failures(reps, |(p, q, mults), rep| {
        let holds = sharp_check(rep, 5, Mode::Exact).ok()?.holds;
        let want = sharp_expected(*p, *q, mults, rep.m());
        (holds != want).then(|| format!("holds {holds}, table {want}"))
    })
}

fn gamma_consistency() -> Outcome {
    let triples = quartic_triples(11, 32);
    let results: Vec<_> = triples
        .par_iter()
        .map(|&(p, q, m)| {
            let rep = rep_with_degree(p, q, m).expect("applicable triples build");
            let mut worst: f64 = 0.0;
            for s in sample_s(70 + m as u64, 20) {
                let a = gamma_quartic(p, q, m, s).expect("closed form");
                let b = gamma_pullback(&rep, s).expect("pullback");
                worst = worst.max(max_relative_difference(&a, &b));
            }
            let mut inv: f64 = 0.0;
            for s in sample_s(71 + m as u64, 10) {
                inv = inv.max(fe_involution_check(p, q, m, s, 1e-10).expect("involution").max_error);
            }
            ((p, q, m), worst, inv)
        })
        .collect();
    let mismatched: BTreeSet<_> = results.iter().filter(|r| r.1 >= 1e-10).map(|r| r.0).collect();
    let documented: BTreeSet<_> = triples
        .iter()
        .copied()
        .filter(|&(_, _, m)| !closed_form_matches_pullback(m))
        .collect();
    let involution_failures: Vec<_> = results.iter().filter(|r| r.2 >= 1e-10).map(|r| r.0).collect();
    let worst_agreeing = results
        .iter()
        .filter(|r| !mismatched.contains(&r.0))
        .map(|r| r.1)
        .fold(0.0, f64::max);
    let passed = mismatched.is_empty() && involution_failures.is_empty();
    let expected_failure = mismatched == documented && involution_failures.is_empty();
    let detail = format!(
        "{} triples; involution {}; pullback agrees on {} (max rel. error {worst_agreeing:.1e}); differs on {:?}{}",
        triples.len(),
        if involution_failures.is_empty() {
            "holds on all".to_string()
        } else {
            format!("fails on {involution_failures:?}")
        },
        triples.len() - mismatched.len(),
        mismatched,
        if expected_failure {
            " = exactly the degrees with 8 ∤ m (documented)"
        } else {
            ""
        },
    );
    Outcome {
        passed,
        expected_failure: expected_failure && !passed,
        detail,
    }
}

fn quadratic_fe() -> Outcome {
    let cases = [(1, 0, -0.6, 1e-4), (2, 0, -0.5, 1e-8), (1, 1, -0.5, 1e-4)];
    let mut failures = Vec::new();
    let mut errs = Vec::new();
    for (p, q, s, tol) in cases {
        match fe_quadratic_numeric_check(p, q, Complex64::new(s, 0.0), tol) {
            Ok(r) => {
                errs.push(format!("({p},{q}) {:.1e}", r.max_error));
                if !r.passed {
                    failures.push(format!("({p},{q}) error {:e} ≥ {tol:e}", r.max_error));
                }
            }
            Err(e) => failures.push(format!("({p},{q}) {e}")),
        }
    }
    let mut out = Outcome::from_failures(cases.len(), failures);
    if out.passed {
        out.detail = format!("errors {}", errs.join(", "));
    }
    out
}

fn zeta_oracle(reps: &[(Case, CliffordRep)]) -> Outcome {
    let mut cases: Vec<(Case, CliffordRep)> = vec![((1, 0, vec![4, 0]), rep_build(1, 0, &[4, 0]).expect("builds"))];
    cases.extend(
        reps.iter()
            .filter(|((p, q, _), rep)| expected_square(*p, *q, rep.m()) && !expand_coeffs(rep).is_zero())
            .cloned(),
    );
    let first = squared_oracle(&cases[0].1, 1.0).expect("oracle");
    let mut failures = Vec::new();
    if (first - 6.0 / (PI * PI)).abs() > 1e-9 {
        failures.push(format!("(1,0,[4,0]) oracle {first} ≠ 6/π²"));
    }
    let mut worst_sigma: f64 = 0.0;
    let mut worst_rel: f64 = 0.0;
    for (i, ((p, q, mults), rep)) in cases.iter().enumerate() {
        let oracle = squared_oracle(rep, 1.0).expect("oracle");
        let z = zeta_quartic_mc(rep, None, Complex64::new(1.0, 0.0), 1_000_000, 900 + i as u64).expect("mc");
        let sigma = (z.value.re - oracle).abs() / z.stderr;
        let rel = z.stderr / oracle;
        worst_sigma = worst_sigma.max(sigma);
        worst_rel = worst_rel.max(rel);
        if sigma >= 3.0 || rel >= 0.01 {
            failures.push(format!(
                "({p},{q},{mults:?}) {:.6} ± {:.1e} vs {oracle:.6}",
                z.value.re, z.stderr
            ));
        }
    }
    let mut out = Outcome::from_failures(cases.len(), failures);
    if out.passed {
        out.detail += &format!(
            " at 10^6 samples, worst {worst_sigma:.2} σ, stderr ≤ {:.2}% of value",
            100.0 * worst_rel
        );
    }
    out
}

fn identity_32() -> Outcome {
    let failures: Vec<String> = (1..=3)
        .filter_map(|k| match check_32_identity(k, 20, 32) {
            Ok(r) if r.passed => None,
            Ok(r) => Some(format!("k = {k}: {} failures", r.failures)),
            Err(e) => Some(format!("k = {k}: {e}")),
        })
        .collect();
    Outcome::from_failures(3, failures)
}

fn minimal_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=12 {
        for q in 0..=n / 2 {
            let p = n - q;
            let count = irrep_catalog(p, q).expect("catalog").count;
            for i in 0..count {
                let mut mults = vec![0; count];
                mults[i] = 1;
                out.push((p, q, mults));
            }
        }
    }
    out
}

fn classification() -> Outcome {
    let cases = minimal_cases();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(p, q, mults)| {
            let tag = format!("({p},{q},{mults:?})");
            let r = match classify(*p, *q, mults) {
                Ok(r) => r,
                Err(e) => return Some(format!("{tag} {e}")),
            };
            let n = p + q;
            let flags = [r.degenerate, r.exceptional, r.generic];
            if flags.iter().filter(|&&f| f).count() != 1 {
                return Some(format!("{tag} verdict flags {flags:?}"));
            }
            if r.degenerate != expected_degenerate(*p, *q, r.m, mults)
                || r.exceptional != (!r.degenerate && table_exceptional(*p, *q, mults, r.m))
            {
                return Some(format!("{tag} flags disagree with the tables"));
            }
            let lookup = table1_lookup(*p, *q, mults).ok()?;
            if lookup.is_some() != r.prehomogeneous || r.pv_entry != lookup {
                return Some(format!(
                    "{tag} prehomogeneous {} but entry {lookup:?}",
                    r.prehomogeneous
                ));
            }
            if n >= 12 && r.prehomogeneous {
                return Some(format!("{tag} prehomogeneous with p+q ≥ 12"));
            }
            // corroborate with computation wherever the representation is in range
            if n <= 11 && r.m <= 32 {
                let rep = rep_build(*p, *q, mults).ok()?;
                if is_degenerate(&rep).degenerate != r.degenerate {
                    return Some(format!("{tag} computed degeneracy differs"));
                }
                let form = expand_coeffs(&rep);
                let square = !form.is_zero() && square_detect(&form).is_some();
                if square != r.square_of_quadratic {
                    return Some(format!("{tag} computed square {square}"));
                }
                if !r.degenerate {
                    let g = g_kernel_dim(&rep, 0, 5, Mode::Exact).ok()?.dimension;
                    let h = h_kernel(&rep, Mode::Exact).ok()?.dimension;
                    let minimal = n * (n - 1) / 2 + h;
                    if r.generic != (g == minimal) || (r.exceptional && g <= minimal) {
                        return Some(format!("{tag} g = {g}, so + h = {minimal}"));
                    }
                }
            }
            None
        })
        .collect();
    let documented = [
        (
            classify(3, 2, &[2]).map(|r| r.verdict).ok(),
            "generic, not prehomogeneous",
        ),
        (
            classify(9, 0, &[1, 0]).map(|r| r.verdict).ok(),
            "exceptional, prehomogeneous",
        ),
        (
            classify(12, 0, &[1]).map(|r| r.verdict).ok(),
            "generic, not prehomogeneous",
        ),
    ];
    let mut failures = failures;
    for (got, want) in documented {
        if got.as_deref() != Some(want) {
            failures.push(format!("documented verdict {want:?}, got {got:?}"));
        }
    }
    Outcome::from_failures(cases.len() + 3, failures)
}

fn main() {
    let start = Instant::now();
    let reps = enumeration();
    println!(
        "enumeration: {} representations with p+q ≤ 11, m ≤ 32, Σ mults ≤ 2 ({:.1}s)",
        reps.len(),
        start.elapsed().as_secs_f64()
    );
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (
            "representation relations",
            Box::new(|| representation_correctness(&reps)),
        ),
        ("degeneracy table", Box::new(|| degeneracy(&reps))),
        ("square detection", Box::new(|| square_detection(&reps))),
        ("homaloidal identity", Box::new(|| homaloidal(&reps))),
        ("symmetry dimensions", Box::new(|| symmetry_dimensions(&reps))),
        ("condition (♯)", Box::new(|| sharp_condition(&reps))),
        ("gamma consistency", Box::new(gamma_consistency)),
        ("quadratic functional equations", Box::new(quadratic_fe)),
        ("zeta oracle agreement", Box::new(|| zeta_oracle(&reps))),
        ("32-dimensional Pfaffian identity", Box::new(identity_32)),
        ("classification regression", Box::new(classification)),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let status = match (o.passed, o.expected_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL (documented deviation)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!(
            "criterion {:>2} {status}: {name}: {} [{:.1}s]",
            i + 1,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
