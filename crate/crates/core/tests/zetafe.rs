use std::f64::consts::PI;

use clifford_quartic::linalg::det_int;
use clifford_quartic::quartic::{eval_rep, expand_coeffs, expected_degenerate, expected_square};
use clifford_quartic::repkit::{enumerate_cases, rep_build};
use clifford_quartic::sampling::{int_vector, stream};
use clifford_quartic::zetafe::special::gamma;
use clifford_quartic::zetafe::*;
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use rayon::prelude::*;

fn nondegenerate_cases() -> Vec<(usize, usize, Vec<usize>)> {
    enumerate_cases(1, 11, 2, 32)
        .into_iter()
        .filter(|(p, q, mults)| {
            let m = rep_build(*p, *q, mults).unwrap().m();
            !expected_degenerate(*p, *q, m, mults)
        })
        .collect()
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn signatures_match_closed_forms() {
    nondegenerate_cases().par_iter().for_each(|(p, q, mults)| {
        let rep = rep_build(*p, *q, mults).unwrap();
        let k = gamma_constants(&rep).unwrap();
        assert!(
            k.closed_form_agrees,
            "({p},{q},{mults:?}): {:?} vs {:?}",
            k.components, k.closed_form_eighths
        );
        for comp in &k.components {
            assert_eq!(comp.sigma_plus + comp.sigma_minus, rep.m());
            assert!((comp.gamma.norm() - 1.0).abs() < 1e-15);
        }
        assert_eq!(k.alpha.abs(), 1);
        assert_eq!(k.beta, if q % 2 == 0 { -1 } else { 1 });
    });
}

#[test]
fn lorentzian_plane_constants_use_eighths() {
    // k₊₊ = 2, k₊₋ = 1: the quarter-turn reading would give e[±3/4], the signatures give e[±3/8]
    let rep = rep_build(1, 1, &[2, 0, 1, 0]).unwrap();
    let k = gamma_constants(&rep).unwrap();
    let eighths: Vec<i64> = k.components.iter().map(|c| c.eighths).collect();
    assert_eq!(eighths, [3, 5, 1, 7]);
    assert!(k.closed_form_agrees);
}

#[test]
fn documented_constants() {
    let rep = rep_build(1, 0, &[3, 1]).unwrap();
    let k = gamma_constants(&rep).unwrap();
    assert!((k.gamma_of("+").unwrap() - Complex64::i()).norm() < 1e-15);
    assert!((k.gamma_of("-").unwrap() + Complex64::i()).norm() < 1e-15);
    let k = gamma_constants(&rep_build(4, 0, &[1]).unwrap()).unwrap();
    assert_eq!(k.components[0].eighths, 0);
    assert_eq!(gamma_constants(&rep_build(3, 2, &[1]).unwrap()).unwrap().beta, -1);
    assert!(gamma_constants(&rep_build(2, 2, &[1]).unwrap()).is_err());
}

#[test]
fn signature_is_constant_on_components() {
    for (p, q, mults) in nondegenerate_cases().into_iter().filter(|(p, q, _)| p + q <= 6) {
        let rep = rep_build(p, q, &mults).unwrap();
        let k = gamma_constants(&rep).unwrap();
        let mut rng = stream(5, 0);
        let mut seen = 0;
        while seen < 12 {
            let v = int_vector(&mut rng, p + q, 4);
            let vf: Vec<f64> = v.iter().map(|&x| x as f64).collect();
            let Some(label) = component_of(p, q, &vf) else { continue };
            let (sp, sm, zero) = signature_at(&rep, &v);
            let expected = k.components.iter().find(|c| c.label == label).unwrap();
            assert_eq!(
                (sp, sm, zero),
                (expected.sigma_plus, expected.sigma_minus, 0),
                "({p},{q},{mults:?}) {v:?}"
            );
            seen += 1;
        }
    }
}

#[test]
fn determinant_squared_is_power_of_the_quadratic_form() {
    nondegenerate_cases().par_iter().for_each(|(p, q, mults)| {
        let rep = rep_build(*p, *q, mults).unwrap();
        let m = rep.m();
        for t in 0..10 {
            let v = int_vector(&mut stream(21, t), p + q, 3);
            let mut s = vec![vec![0i64; m]; m];
            for (i, b) in rep.basis().iter().enumerate() {
                for j in 0..m {
                    let (r, sg) = b.col(j);
                    s[r][j] += v[i] * sg as i64;
                }
            }
            let pv: i64 = (0..p + q).map(|i| rep.eps(i) * v[i] * v[i]).sum();
            let d = det_int(&s);
            assert_eq!(&d * &d, BigInt::from(pv).pow(m as u32), "({p},{q},{mults:?}) v = {v:?}");
        }
    });
}

#[test]
fn pullback_matches_closed_form_when_eight_divides_m() {
    quartic_triples(11, 32)
        .par_iter()
        .filter(|(_, _, m)| m % 8 == 0)
        .for_each(|&(p, q, m)| {
            let rep = rep_with_degree(p, q, m).unwrap();
            for s in sample_s(7 + m as u64, 20) {
                let a = gamma_quartic(p, q, m, s).unwrap();
                let b = gamma_pullback(&rep, s).unwrap();
                let err = max_relative_difference(&a, &b);
                assert!(err < 1e-10, "({p},{q},{m}) s = {s}: {err:e}");
            }
        });
}

#[test]
fn closed_form_sign_flips_when_m_is_four_mod_eight() {
    let flipped: Vec<_> = quartic_triples(11, 32)
        .into_iter()
        .filter(|(_, _, m)| m % 8 == 4)
        .collect();
    assert_eq!(
        flipped,
        [
            (2, 0, 12),
            (2, 0, 20),
            (2, 0, 28),
            (3, 0, 12),
            (3, 0, 20),
            (3, 0, 28),
            (2, 2, 12),
            (2, 2, 20),
            (2, 2, 28)
        ]
    );
    for (p, q, m) in flipped {
        let rep = rep_with_degree(p, q, m).unwrap();
        for s in sample_s(3, 5) {
            let a = gamma_quartic(p, q, m, s).unwrap();
            let mut b = gamma_pullback(&rep, s).unwrap();
            b.entries.iter_mut().flatten().for_each(|x| *x = -*x);
            assert!(max_relative_difference(&a, &b) < 1e-10, "({p},{q},{m})");
        }
    }
}

#[test]
fn involution_holds_on_every_applicable_triple() {
    for (p, q, m) in quartic_triples(11, 32) {
        for s in sample_s(11, 10) {
            let r = fe_involution_check(p, q, m, s, 1e-10).unwrap();
            assert!(r.passed, "({p},{q},{m}) s = {s}: {:e}", r.max_error);
        }
    }
}

#[test]
fn documented_gamma_examples() {
    let rep = rep_with_degree(3, 2, 16).unwrap();
    let a = gamma_quartic(3, 2, 16, c(0.4)).unwrap();
    assert!(max_relative_difference(&a, &gamma_pullback(&rep, c(0.4)).unwrap()) < 1e-10);
    let rep = rep_with_degree(5, 0, 16).unwrap();
    let a = gamma_quartic(5, 0, 16, c(0.25)).unwrap();
    assert_eq!(a.size, 1);
    assert!(max_relative_difference(&a, &gamma_pullback(&rep, c(0.25)).unwrap()) < 1e-10);

    // (4,0,16): the trigonometric factor is sin(πs) sin(π(s−2)) = sin²(πs)
    let s = Complex64::new(0.3, 0.1);
    let g = gamma_quartic(4, 0, 16, s).unwrap().entries[0][0];
    let pre = c(2.0).powc(4.0 * s + 8.0)
        * c(PI).powc(-4.0 * s - 10.0)
        * gamma(s + 1.0).unwrap()
        * gamma(s + 2.0).unwrap()
        * gamma(s + 3.0).unwrap()
        * gamma(s + 4.0).unwrap();
    let expected = pre * (PI * s).sin().powi(2);
    assert!((g - expected).norm() < 1e-12 * expected.norm());

    let g = gamma_quartic(2, 2, 12, Complex64::new(0.3, 0.2)).unwrap();
    assert!(g.entries.iter().flatten().all(|z| z.is_finite()));

    // (2,1) with γ ≠ 1: only the pullback is available
    let rep = rep_build(2, 1, &[2, 1]).unwrap();
    let k = gamma_constants(&rep).unwrap();
    assert!(k.components.iter().any(|c| c.eighths != 0));
    assert!(gamma_quartic(2, 1, 6, c(0.3)).is_err());
    let g = gamma_pullback(&rep, c(0.3)).unwrap();
    assert_eq!(g.size, 3);
    assert!(g.validated);
    assert!(
        !gamma_pullback(&rep_build(1, 1, &[1, 0, 1, 0]).unwrap(), c(0.3))
            .unwrap()
            .validated
    );

    assert!(
        fe_involution_check(3, 2, 16, Complex64::new(0.3, 0.7), 1e-10)
            .unwrap()
            .passed
    );
    assert!(
        fe_involution_check(4, 1, 16, Complex64::new(0.2, 0.0), 1e-10)
            .unwrap()
            .passed
    );
    assert!(
        fe_involution_check(4, 0, 16, Complex64::new(0.1, 0.0), 1e-10)
            .unwrap()
            .passed
    );
}

#[test]
fn quadratic_matrix_shapes_and_labels() {
    let g = gamma_quadratic(2, 1, Complex64::new(0.2, 0.3)).unwrap();
    assert_eq!(
        (g.size, g.labels.clone()),
        (3, vec!["+".to_string(), "-+".into(), "--".into()])
    );
    let g = gamma_quadratic(1, 1, c(-0.5)).unwrap();
    assert_eq!(g.size, 2);
    // s = −1/2, n = 2: prefactor π^{−1}Γ(1/2)² = 1, matrix [[−sin 0, sin(π/2)], [sin(π/2), −sin 0]]
    assert!((g.entries[0][0]).norm() < 1e-15 && (g.entries[0][1] - 1.0).norm() < 1e-14);
}

#[test]
fn quadratic_functional_equations_by_quadrature() {
    let r = fe_quadratic_numeric_check(1, 0, c(-0.6), 1e-4).unwrap();
    assert!(r.passed, "{r:?}");
    let r = fe_quadratic_numeric_check(2, 0, c(-0.5), 1e-8).unwrap();
    assert!(r.passed, "{r:?}");
    // both sides equal π^{−s} Γ(s+1) at s = −1/2, i.e. π
    assert!((r.lhs[0] - PI).norm() < 1e-9);
    let r = fe_quadratic_numeric_check(1, 1, c(-0.5), 1e-4).unwrap();
    assert!(r.passed, "{r:?}");
    assert!(r.max_error < 1e-8);
    let r = fe_quadratic_numeric_check(1, 1, Complex64::new(-0.3, 0.6), 1e-8).unwrap();
    assert!(r.passed, "{r:?}");
    assert!(fe_quadratic_numeric_check(2, 0, c(0.5), 1e-8).is_err());
}

#[test]
fn quadratic_zeta_values() {
    // over x > 0: ∫ x² e^{−πx²} = 1/(4π); both half-lines together give 1/(2π)
    let z = zeta_quadratic_numeric(1, 0, "+", c(1.0), 1e-12).unwrap();
    assert!((z.value - 1.0 / (4.0 * PI)).norm() < 1e-12);
    let z = zeta_quadratic_numeric(2, 0, "+", c(0.0), 1e-12).unwrap();
    assert!((z.value - 1.0).norm() < 1e-12);
    let z = zeta_quadratic_numeric(1, 1, "++", c(-0.5), 1e-12).unwrap();
    // Γ(s+1)/(2π^{s+1}) · √π Γ((s+1)/2) / (2Γ(s/2+1))
    let s = c(-0.5);
    let exact = gamma(s + 1.0).unwrap() / (2.0 * c(PI).powc(s + 1.0)) * PI.sqrt() * gamma((s + 1.0) / 2.0).unwrap()
        / (2.0 * gamma(s / 2.0 + 1.0).unwrap());
    assert!((z.value - exact).norm() < 1e-10, "{} vs {exact}", z.value);
    assert!(zeta_quadratic_numeric(1, 0, "+", c(-0.6), 1e-8).is_err());
    assert!(zeta_quadratic_numeric(2, 1, "+", c(1.0), 1e-8).is_err());
}

#[test]
fn monte_carlo_documented_examples() {
    let rep = rep_build(1, 0, &[4, 0]).unwrap();
    let z = zeta_quartic_mc(&rep, Some("+"), c(1.0), 200_000, 1).unwrap();
    let exact = 6.0 / (PI * PI);
    assert!(
        (z.value.re - exact).abs() < 3.0 * z.stderr,
        "{} ± {}",
        z.value,
        z.stderr
    );
    assert!(z.stderr < 0.01 * exact);
    assert!((squared_oracle(&rep, 1.0).unwrap() - exact).abs() < 1e-12);

    let rep = rep_build(1, 1, &[1, 0, 1, 0]).unwrap();
    let z = zeta_quartic_mc(&rep, Some("+"), c(1.0), 200_000, 2).unwrap();
    let exact = 1.0 / (PI * PI);
    assert!(
        (z.value.re - exact).abs() < 3.0 * z.stderr,
        "{} ± {}",
        z.value,
        z.stderr
    );
    assert!((squared_oracle(&rep, 1.0).unwrap() - exact).abs() < 1e-12);
}

#[test]
fn monte_carlo_component_masses_sum_to_one() {
    for (p, q, mults) in [
        (1, 0, vec![1, 1]),
        (1, 1, vec![1, 0, 0, 1]),
        (2, 1, vec![1, 1]),
        (2, 2, vec![2]),
        (4, 0, vec![1]),
    ] {
        let rep = rep_build(p, q, &mults).unwrap();
        let total: f64 = components(p, q)
            .unwrap()
            .iter()
            .map(|comp| {
                zeta_quartic_mc(&rep, Some(comp.label), c(0.0), 20_000, 9)
                    .unwrap()
                    .value
                    .re
            })
            .sum();
        assert!((total - 1.0).abs() < 1e-12, "({p},{q}) {total}");
    }
}

#[test]
fn monte_carlo_is_reproducible_and_stderr_scales() {
    let rep = rep_build(3, 2, &[1]).unwrap();
    let a = zeta_quartic_mc(&rep, Some("+"), c(0.5), 50_000, 4).unwrap();
    let b = zeta_quartic_mc(&rep, Some("+"), c(0.5), 50_000, 4).unwrap();
    assert_eq!(a.value, b.value);
    let big = zeta_quartic_mc(&rep, Some("+"), c(0.5), 200_000, 4).unwrap();
    let ratio = big.stderr / a.stderr;
    assert!((0.4..0.6).contains(&ratio), "ratio {ratio}");
}

#[test]
fn monte_carlo_matches_square_oracle() {
    let cases: Vec<_> = enumerate_cases(1, 11, 2, 32)
        .into_iter()
        .filter(|(p, q, mults)| {
            let rep = rep_build(*p, *q, mults).unwrap();
            expected_square(*p, *q, rep.m()) && !expand_coeffs(&rep).is_zero()
        })
        .collect();
    assert!(cases.len() >= 10);
    for (i, (p, q, mults)) in cases.iter().enumerate() {
        let rep = rep_build(*p, *q, mults).unwrap();
        let oracle = squared_oracle(&rep, 1.0).unwrap();
        let z = zeta_quartic_mc(&rep, None, c(1.0), 100_000, 100 + i as u64).unwrap();
        assert!(
            (z.value.re - oracle).abs() < 4.0 * z.stderr,
            "({p},{q},{mults:?}) {} ± {} vs {oracle}",
            z.value,
            z.stderr
        );
    }
}

#[test]
fn square_oracle_cross_checks_the_quartic() {
    // the oracle at s = 1 is also E[P̃], a polynomial moment: Σ coefficient · Gaussian moments
    let rep = rep_build(3, 2, &[1]).unwrap();
    let oracle = squared_oracle(&rep, 1.0).unwrap();
    let form = expand_coeffs(&rep);
    let var = 1.0 / (2.0 * PI);
    let moment = |k: u32| match k {
        0 => 1.0,
        2 => var,
        4 => 3.0 * var * var,
        _ => 0.0,
    };
    let mut expectation = 0.0;
    for (mono, coef) in form.coeffs() {
        let mut counts = std::collections::BTreeMap::new();
        for &i in mono.iter() {
            *counts.entry(i).or_insert(0u32) += 1;
        }
        let prod: f64 = counts.values().map(|&k| moment(k)).product();
        expectation += coef.to_string().parse::<f64>().unwrap() * prod;
    }
    assert!(
        (oracle - expectation).abs() < 1e-12 * expectation.abs(),
        "{oracle} vs {expectation}"
    );
    let w: Vec<BigInt> = [1, 0, 0, 0, 0, 0, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
    assert!(eval_rep(&rep, &w).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_at_random_points(idx in 0usize..1000, re in -3.0f64..3.0, im in 0.05f64..2.0) {
        let triples = quartic_triples(11, 32);
        let (p, q, m) = triples[idx % triples.len()];
        let r = fe_involution_check(p, q, m, Complex64::new(re, im), 1e-10).unwrap();
        prop_assert!(r.passed, "({}, {}, {}) {:e}", p, q, m, r.max_error);
    }

    #[test]
    fn quadratic_gamma_twice_is_the_sign_flip(n in 1usize..6, qq in 0usize..3, re in -2.0f64..2.0, im in 0.05f64..1.5) {
        let q = qq.min(n / 2);
        let p = n - q;
        let s = Complex64::new(re, im);
        let a = gamma_quadratic(p, q, s).unwrap();
        let b = gamma_quadratic(p, q, -s - n as f64 / 2.0).unwrap();
        // applying the transform twice sends v to −v, which permutes the components
        let labels: Vec<&str> = a.labels.iter().map(|l| l.as_str()).collect();
        let target: Vec<usize> = labels
            .iter()
            .map(|l| {
                if (p, q) == (1, 1) || (p, q) == (1, 0) {
                    return labels.iter().position(|x| x == l).unwrap();
                }
                let rep = components(p, q).unwrap().into_iter().find(|c| c.label == *l).unwrap().representative;
                let neg: Vec<f64> = rep.iter().map(|&x| -x as f64).collect();
                labels.iter().position(|x| Some(*x) == component_of(p, q, &neg)).unwrap()
            })
            .collect();
        let prod = a.mul(&b);
        for (i, row) in prod.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                let t = if target[i] == j { 1.0 } else { 0.0 };
                prop_assert!((z - t).norm() < 1e-9, "({}, {}) [{}][{}] = {}", p, q, i, j, z);
            }
        }
    }
}

#[test]
fn pullback_is_an_involution_for_every_representation() {
    // (1,1) is left out: its lumped 2×2 quadratic matrix cannot carry the
    // four different γ of the components
    nondegenerate_cases()
        .par_iter()
        .filter(|(p, q, _)| (*p, *q) != (1, 1))
        .for_each(|(p, q, mults)| {
            let rep = rep_build(*p, *q, mults).unwrap();
            let m = rep.m() as f64;
            for s in sample_s(13, 4) {
                let a = gamma_pullback(&rep, s).unwrap();
                let b = gamma_pullback(&rep, -m / 4.0 - s).unwrap();
                let prod = a.mul(&b);
                let scale = a.max_abs() * b.max_abs();
                for (i, row) in prod.iter().enumerate() {
                    for (j, z) in row.iter().enumerate() {
                        let t = if i == j { 1.0 } else { 0.0 };
                        assert!(
                            (z - t).norm() < 1e-10 * scale.max(1.0),
                            "({p},{q},{mults:?}) [{i}][{j}] = {z}"
                        );
                    }
                }
            }
        });
}

#[test]
fn plane_closed_form_needs_the_degree_shift() {
    // for (2,0) the composition carries sin π(s + m/4 − 1) where the closed form has sin π(s − 1)
    for m in (8..=32).step_by(2) {
        let rep = rep_with_degree(2, 0, m).unwrap();
        for s in sample_s(17, 3) {
            let a = gamma_quartic(2, 0, m, s).unwrap().entries[0][0];
            let b = gamma_pullback(&rep, s).unwrap().entries[0][0];
            let ratio = ((s + m as f64 / 4.0 - 1.0) * PI).sin() / ((s - 1.0) * PI).sin();
            assert!((b - a * ratio).norm() < 1e-10 * b.norm(), "m = {m}");
        }
    }
}
