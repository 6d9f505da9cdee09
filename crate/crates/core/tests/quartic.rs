use clifford_quartic::quartic::{
    check_32_identity, det4, eval_f64, eval_rep, expand_coeffs, expected_square, grad, grad_f64, homaloidal_check,
    is_degenerate, pfaffian4, square_detect,
};
use clifford_quartic::repkit::{enumerate_cases, rep_build};
use clifford_quartic::sampling::{int_vector, stream};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn cases() -> Vec<(usize, usize, Vec<usize>)> {
    enumerate_cases(1, 11, 2, 32)
}

#[test]
fn coefficient_table_matches_direct_evaluation() {
    for (p, q, mults) in cases() {
        let rep = rep_build(p, q, &mults).unwrap();
        let form = expand_coeffs(&rep);
        for t in 0..50 {
            let w = big(&int_vector(&mut stream(3, t), rep.m(), 9));
            assert_eq!(
                form.eval(&w).unwrap(),
                eval_rep(&rep, &w).unwrap(),
                "({p},{q},{mults:?})"
            );
        }
    }
}

#[test]
fn degeneracy_matches_vanishing_list() {
    for (p, q, mults) in cases() {
        let rep = rep_build(p, q, &mults).unwrap();
        let r = is_degenerate(&rep);
        assert!(
            r.matches(),
            "({p},{q},{mults:?}) m={} computed {} expected {}",
            rep.m(),
            r.degenerate,
            r.expected
        );
    }
}

#[test]
fn squares_exactly_on_the_listed_triples() {
    for (p, q, mults) in cases() {
        let rep = rep_build(p, q, &mults).unwrap();
        let form = expand_coeffs(&rep);
        if form.is_zero() {
            continue;
        }
        let found = square_detect(&form).is_some();
        assert_eq!(
            found,
            expected_square(p, q, rep.m()),
            "({p},{q},{mults:?}) m={}",
            rep.m()
        );
    }
}

#[test]
fn homaloidal_identity_on_nondegenerate_forms() {
    for (p, q, mults) in cases() {
        let rep = rep_build(p, q, &mults).unwrap();
        if expand_coeffs(&rep).is_zero() {
            continue;
        }
        assert!(homaloidal_check(&rep, 20, 17).unwrap().passed, "({p},{q},{mults:?})");
    }
}

#[test]
fn degenerate_forms_pass_homaloidal_trivially() {
    let rep = rep_build(2, 2, &[1]).unwrap();
    assert!(homaloidal_check(&rep, 20, 7).unwrap().passed);
}

#[test]
fn three_two_irreducible_homaloidal() {
    let rep = rep_build(3, 2, &[1]).unwrap();
    let r = homaloidal_check(&rep, 20, 5).unwrap();
    assert!(r.passed && r.trials == 20 && r.probabilistic);
}

#[test]
fn gradient_matches_finite_differences() {
    let rep = rep_build(2, 2, &[1]).unwrap();
    let rep2 = rep_build(3, 2, &[1]).unwrap();
    for r in [&rep, &rep2] {
        for t in 0..10 {
            let w: Vec<f64> = int_vector(&mut stream(9, t), r.m(), 9)
                .iter()
                .map(|&x| x as f64)
                .collect();
            let g = grad_f64(r, &w);
            let exact = grad(r, &big(&w.iter().map(|&x| x as i64).collect::<Vec<_>>())).unwrap();
            let scale = g.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            if scale == 0.0 {
                continue;
            }
            for j in 0..r.m() {
                assert_eq!(g[j], exact[j].to_string().parse::<f64>().unwrap());
                let h = 1e-4;
                let mut wp = w.clone();
                let mut wm = w.clone();
                wp[j] += h;
                wm[j] -= h;
                let fd = (eval_f64(r, &wp) - eval_f64(r, &wm)) / (2.0 * h);
                assert!((fd - g[j]).abs() <= 1e-6 * scale, "fd {fd} vs {}", g[j]);
            }
        }
    }
}

#[test]
fn csv_dump() {
    let rep = rep_build(1, 1, &[1, 0, 1, 0]).unwrap();
    assert_eq!(expand_coeffs(&rep).to_csv(), "0,0,1,1,4\n");
}

#[test]
fn pfaffian_identity_for_k_up_to_three() {
    for k in 1..=3 {
        let r = check_32_identity(k, 30, 2024).unwrap();
        assert!(r.passed, "k = {k}");
        assert_eq!(r.trials, 31);
    }
}

fn antisym(vals: &[i64]) -> Vec<Vec<BigRational>> {
    let mut a = vec![vec![BigRational::zero(); 4]; 4];
    let mut it = vals.iter();
    for i in 0..4 {
        for j in i + 1..4 {
            let v = BigRational::from_integer((*it.next().unwrap()).into());
            a[j][i] = -v.clone();
            a[i][j] = v;
        }
    }
    a
}

proptest! {
    #[test]
    fn pfaffian_squares_to_determinant(vals in proptest::collection::vec(-20i64..=20, 6)) {
        let a = antisym(&vals);
        let pf = pfaffian4(&a).unwrap();
        prop_assert_eq!(&pf * &pf, det4(&a));
    }

    #[test]
    fn quartic_is_homogeneous(seed in 0u64..1000, t in -3i64..=3) {
        let rep = rep_build(4, 1, &[1, 0]).unwrap();
        let w = int_vector(&mut stream(seed, 0), rep.m(), 9);
        let tw: Vec<i64> = w.iter().map(|x| x * t).collect();
        let lhs = eval_rep(&rep, &big(&tw)).unwrap();
        let rhs = eval_rep(&rep, &big(&w)).unwrap() * BigInt::from(t.pow(4));
        prop_assert_eq!(lhs, rhs);
    }
}
