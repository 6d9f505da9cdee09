//! The `(3,2)` quartic in terms of the Pfaffian of `w J_k ᵀw` and `tr(J_2 w J_k ᵀw)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repkit::CliffordRep;
use crate::sampling;
use crate::signed_perm::SignedPerm;

use super::eval_rep;

/// `Pf(A) = a₁₂a₃₄ − a₁₃a₂₄ + a₁₄a₂₃` for a 4×4 antisymmetric matrix.
pub fn pfaffian4(a: &[Vec<BigRational>]) -> Result<BigRational> {
    if a.len() != 4 || a.iter().any(|r| r.len() != 4) {
        return Err(Error::invalid("expected a 4x4 matrix"));
    }
    for i in 0..4 {
        for j in 0..4 {
            if a[i][j] != -a[j][i].clone() {
                return Err(Error::invalid("matrix is not antisymmetric"));
            }
        }
    }
    Ok(&a[0][1] * &a[2][3] - &a[0][2] * &a[1][3] + &a[0][3] * &a[1][2])
}

/// Leibniz expansion, used as an independent check on the Pfaffian.
pub fn det4(a: &[Vec<BigRational>]) -> BigRational {
    fn perms(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !cur.contains(&v) {
                cur.push(v);
                perms(k, cur, out);
                cur.pop();
            }
        }
    }
    let mut all = Vec::new();
    perms(4, &mut Vec::new(), &mut all);
    all.iter()
        .map(|p| {
            let inversions = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let prod = (0..4).fold(BigRational::from_integer(1.into()), |acc, i| acc * &a[i][p[i]]);
            if inversions % 2 == 0 {
                prod
            } else {
                -prod
            }
        })
        .sum()
}

/// The explicit degree-8 basis of `R_{3,2}` built from 2×2 blocks
/// `J = [[0,-1],[1,0]]`, `H = diag(-1,1)`, `K = [[0,1],[1,0]]`.
pub fn basis_32() -> Vec<SignedPerm> {
    type B = [[i64; 2]; 2];
    const Z: B = [[0, 0], [0, 0]];
    const I: B = [[1, 0], [0, 1]];
    const J: B = [[0, -1], [1, 0]];
    const H: B = [[-1, 0], [0, 1]];
    const K: B = [[0, 1], [1, 0]];
    fn neg(b: B) -> B {
        [[-b[0][0], -b[0][1]], [-b[1][0], -b[1][1]]]
    }
    fn assemble(blocks: [[B; 4]; 4]) -> SignedPerm {
        let mut dense = vec![vec![0i64; 8]; 8];
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        dense[2 * bi + i][2 * bj + j] = b[i][j];
                    }
                }
            }
        }
        SignedPerm::from_dense(&dense).expect("block matrices are signed permutations")
    }
    let antidiag = |a: B| assemble([[Z, Z, Z, a], [Z, Z, neg(a), Z], [Z, neg(a), Z, Z], [a, Z, Z, Z]]);
    vec![
        antidiag(I),
        assemble([[Z, Z, J, Z], [Z, Z, Z, neg(J)], [neg(J), Z, Z, Z], [Z, J, Z, Z]]),
        assemble([[Z, Z, Z, J], [Z, Z, J, Z], [Z, neg(J), Z, Z], [neg(J), Z, Z, Z]]),
        antidiag(H),
        antidiag(K),
    ]
}

/// `k` block-diagonal copies of [`basis_32`] as a rep of `R_{3,2}`.
pub fn rep_32(k: usize) -> Result<CliffordRep> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let basis = basis_32()
        .iter()
        .map(|s| SignedPerm::direct_sum(&vec![s.clone(); k]))
        .collect();
    CliffordRep::from_parts(3, 2, vec![k], basis)
}

/// `P₁ = Pf(w J_k ᵀw)` and `P₂ = tr(J_2 w J_k ᵀw)` with `w ∈ M(4,2k)` whose
/// columns are `u₁ v₁ u₂ v₂ …` for the copies `(u_c; v_c)` of `R⁸`.
pub fn sp_invariants(w: &[BigInt], k: usize) -> (BigInt, BigInt) {
    assert_eq!(w.len(), 8 * k);
    // Y = w J_k ᵀw, with J (u, v) pairs: Y_ab = Σ_c (v_c[a] u_c[b] − u_c[a] v_c[b])
    let mut y = vec![vec![BigInt::zero(); 4]; 4];
    for c in 0..k {
        let u = &w[8 * c..8 * c + 4];
        let v = &w[8 * c + 4..8 * c + 8];
        for a in 0..4 {
            for b in 0..4 {
                y[a][b] += &v[a] * &u[b] - &u[a] * &v[b];
            }
        }
    }
    let pf = &y[0][1] * &y[2][3] - &y[0][2] * &y[1][3] + &y[0][3] * &y[1][2];
    // J_2 = J ⊥ J: tr(J_2 Y) = −Y₁₀ + Y₀₁ − Y₃₂ + Y₂₃
    let tr = &y[0][1] - &y[1][0] + &y[2][3] - &y[3][2];
    (pf, tr)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity32Report {
    pub k: usize,
    pub trials: usize,
    pub failures: usize,
    pub passed: bool,
    pub seed: u64,
    pub probabilistic: bool,
}

/// Tests `P̃ = −16 P₁ + P₂²` exactly at the origin and `trials` random points.
pub fn check_32_identity(k: usize, trials: usize, seed: u64) -> Result<Identity32Report> {
    let rep = rep_32(k)?;
    let mut failures = 0;
    let mut points = vec![vec![0i64; 8 * k]];
    points.extend((0..trials).map(|t| sampling::int_vector(&mut sampling::stream(seed, t as u64), 8 * k, 9)));
    for pt in &points {
        let w: Vec<BigInt> = pt.iter().map(|&x| BigInt::from(x)).collect();
        let (p1, p2) = sp_invariants(&w, k);
        if eval_rep(&rep, &w)? != -16 * p1 + &p2 * &p2 {
            failures += 1;
        }
    }
    Ok(Identity32Report {
        k,
        trials: points.len(),
        failures,
        passed: failures == 0,
        seed,
        probabilistic: true,
    })
}
