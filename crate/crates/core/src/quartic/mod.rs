//! The quartic form `P̃(w) = Σ_i ε_i (ᵀw S_i w)²` of a representation.

mod pfaffian;
mod square;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repkit::CliffordRep;
use crate::sampling;

pub use pfaffian::{basis_32, check_32_identity, det4, pfaffian4, rep_32, sp_invariants, Identity32Report};
pub use square::{expected_square, square_detect, QuadraticSquareWitness, SQUARE_TRIPLES};

/// Sorted variable indices of a degree-4 monomial, 0-based.
pub type Monomial = [u16; 4];

/// Exact coefficient table, `P̃ = Σ coeff · w_i w_j w_k w_l` over sorted keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticForm {
    rep: CliffordRep,
    coeffs: BTreeMap<Monomial, BigInt>,
}

impl QuarticForm {
    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn coeffs(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, w: &[BigInt]) -> Result<BigInt> {
        check_len(&self.rep, w.len())?;
        Ok(self
            .coeffs
            .iter()
            .map(|(k, c)| c * &w[k[0] as usize] * &w[k[1] as usize] * &w[k[2] as usize] * &w[k[3] as usize])
            .sum())
    }

    /// `i,j,k,l,coefficient` lines.
    pub fn to_csv(&self) -> String {
        self.coeffs
            .iter()
            .map(|(k, c)| format!("{},{},{},{},{}\n", k[0], k[1], k[2], k[3], c))
            .collect()
    }
}

fn check_len(rep: &CliffordRep, len: usize) -> Result<()> {
    if len != rep.m() {
        return Err(Error::invalid(format!("vector of length {len} for m = {}", rep.m())));
    }
    Ok(())
}

/// `Q(w) = (ᵀw S_i w)_i`.
pub fn quadratic_map(rep: &CliffordRep, w: &[BigRational]) -> Result<Vec<BigRational>> {
    check_len(rep, w.len())?;
    Ok(rep
        .basis()
        .iter()
        .map(|s| {
            (0..rep.m())
                .map(|j| {
                    let (r, sg) = s.col(j);
                    let t = &w[r] * &w[j];
                    if sg > 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum()
        })
        .collect())
}

/// Expands `Σ ε_i (Σ_{a≤b} c_ab w_a w_b)²` into sorted monomial keys; the
/// per-generator tables are built in parallel and merged.
pub fn expand_coeffs(rep: &CliffordRep) -> QuarticForm {
    let partial: Vec<BTreeMap<Monomial, i64>> = rep
        .basis()
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let eps = rep.eps(i);
            let terms = s.quad_terms();
            let mut acc = BTreeMap::new();
            for &(a, b, c) in &terms {
                for &(a2, b2, c2) in &terms {
                    let mut key = [a as u16, b as u16, a2 as u16, b2 as u16];
                    key.sort_unstable();
                    *acc.entry(key).or_insert(0) += eps * c * c2;
                }
            }
            acc
        })
        .collect();
    let mut total: BTreeMap<Monomial, i64> = BTreeMap::new();
    for map in partial {
        for (k, v) in map {
            *total.entry(k).or_insert(0) += v;
        }
    }
    let coeffs = total
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect();
    QuarticForm {
        rep: rep.clone(),
        coeffs,
    }
}

/// `S_i[w]` for every generator, exact.
pub fn quad_values(rep: &CliffordRep, w: &[BigInt]) -> Vec<BigInt> {
    rep.basis()
        .iter()
        .map(|s| {
            let mut acc = BigInt::zero();
            for j in 0..rep.m() {
                let (r, sg) = s.col(j);
                if sg > 0 {
                    acc += &w[r] * &w[j];
                } else {
                    acc -= &w[r] * &w[j];
                }
            }
            acc
        })
        .collect()
}

/// `P̃(w)` straight from the basis matrices.
pub fn eval_rep(rep: &CliffordRep, w: &[BigInt]) -> Result<BigInt> {
    check_len(rep, w.len())?;
    Ok(quad_values(rep, w)
        .into_iter()
        .enumerate()
        .map(|(i, v)| if rep.eps(i) > 0 { &v * &v } else { -(&v * &v) })
        .sum())
}

/// `grad P̃(w) = 4 Σ_i ε_i S_i[w] · S_i w`.
pub fn grad(rep: &CliffordRep, w: &[BigInt]) -> Result<Vec<BigInt>> {
    check_len(rep, w.len())?;
    let vals = quad_values(rep, w);
    let mut g = vec![BigInt::zero(); rep.m()];
    for (i, s) in rep.basis().iter().enumerate() {
        let coef = &vals[i] * (4 * rep.eps(i));
        if coef.is_zero() {
            continue;
        }
        for j in 0..rep.m() {
            let (r, sg) = s.col(j);
            let t = &coef * &w[j];
            if sg > 0 {
                g[r] += t;
            } else {
                g[r] -= t;
            }
        }
    }
    Ok(g)
}

pub fn eval_f64(rep: &CliffordRep, w: &[f64]) -> f64 {
    rep.basis()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let v = s.quad_f64(w);
            rep.eps(i) as f64 * v * v
        })
        .sum()
}

pub fn grad_f64(rep: &CliffordRep, w: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; rep.m()];
    for (i, s) in rep.basis().iter().enumerate() {
        let coef = 4.0 * rep.eps(i) as f64 * s.quad_f64(w);
        for (j, wj) in w.iter().enumerate() {
            let (r, sg) = s.col(j);
            g[r] += coef * sg as f64 * wj;
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    pub degenerate: bool,
    pub expected: bool,
}

impl DegeneracyReport {
    pub fn matches(&self) -> bool {
        self.degenerate == self.expected
    }
}

/// `(p,q,m)` triples (with `p ≥ q`) whose quartic form vanishes identically.
pub const DEGENERATE_TRIPLES: [(usize, usize, usize); 7] = [
    (2, 1, 2),
    (3, 1, 4),
    (5, 1, 8),
    (9, 1, 16),
    (2, 2, 4),
    (3, 3, 8),
    (5, 5, 16),
];

/// Whether `(p,q)` with these multiplicities is on the list of identically
/// vanishing forms: the triples above up to swapping `p` and `q`, or `(1,1)`
/// with multiplicities supported on `{ρ₁,ρ₂}` or on `{ρ₃,ρ₄}` (`S_1 = ±S_2`).
pub fn expected_degenerate(p: usize, q: usize, m: usize, mults: &[usize]) -> bool {
    if (p, q) == (1, 1) && mults.len() == 4 {
        let first = mults[0] + mults[1];
        let second = mults[2] + mults[3];
        return first == 0 || second == 0;
    }
    let key = (p.max(q), p.min(q), m);
    DEGENERATE_TRIPLES.contains(&key)
}

pub fn is_degenerate(rep: &CliffordRep) -> DegeneracyReport {
    DegeneracyReport {
        degenerate: expand_coeffs(rep).is_zero(),
        expected: expected_degenerate(rep.p(), rep.q(), rep.m(), rep.mults()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomaloidalReport {
    pub passed: bool,
    pub trials: usize,
    pub failures: usize,
    pub seed: u64,
    /// Random-point testing of a degree-12 identity.
    pub probabilistic: bool,
}

/// Tests `P̃(grad P̃(w)) = 256 P̃(w)³` exactly at `trials` random points of `[-9,9]^m`.
pub fn homaloidal_check(rep: &CliffordRep, trials: usize, seed: u64) -> Result<HomaloidalReport> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let failures = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let w: Vec<BigInt> = sampling::int_vector(&mut sampling::stream(seed, t as u64), rep.m(), 9)
                .into_iter()
                .map(BigInt::from)
                .collect();
            let pw = eval_rep(rep, &w).expect("length checked");
            let g = grad(rep, &w).expect("length checked");
            let lhs = eval_rep(rep, &g).expect("length checked");
            lhs != pw.pow(3) * 256
        })
        .count();
    Ok(HomaloidalReport {
        passed: failures == 0,
        trials,
        failures,
        seed,
        probabilistic: true,
    })
}
