//! Signatures of `S(v) = Σ v_i S_i` on each component and the constants
//! `γ = e[(σ₊ − σ₋)/8]`, `α = sign det S(e_1)`, `β = (−1)^{q+1}`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::inertia;
use crate::quartic::expected_degenerate;
use crate::repkit::{irreducibles, CliffordRep};

use super::special::{c, e};
use super::{check_pq, components};

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSignature {
    pub label: &'static str,
    pub sigma_plus: usize,
    pub sigma_minus: usize,
    /// `(σ₊ − σ₋) mod 8`, so `γ = e[eighths/8]`.
    pub eighths: i64,
    #[serde(serialize_with = "super::gamma::ser_complex")]
    pub gamma: Complex64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureConstants {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub components: Vec<ComponentSignature>,
    pub alpha: i8,
    pub beta: i8,
    /// The per-component eighths predicted from the multiplicities.
    pub closed_form_eighths: Vec<i64>,
    pub closed_form_agrees: bool,
}

impl SignatureConstants {
    pub fn gamma_of(&self, label: &str) -> Option<Complex64> {
        self.components.iter().find(|c| c.label == label).map(|c| c.gamma)
    }
}

/// Inertia `(σ₊, σ₋, σ₀)` of `S(v)`.
pub fn signature_at(rep: &CliffordRep, v: &[i64]) -> (usize, usize, usize) {
    let m = rep.m();
    let mut a = vec![vec![0i64; m]; m];
    for (i, s) in rep.basis().iter().enumerate() {
        if v[i] == 0 {
            continue;
        }
        for j in 0..m {
            let (r, sg) = s.col(j);
            a[r][j] += v[i] * sg as i64;
        }
    }
    let a = a
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    inertia(a)
}

/// `σ₊ − σ₋` per component (in the order of [`components`]) from the
/// multiplicities alone, reduced mod 8.
pub fn gamma_eighths_closed_form(p: usize, q: usize, mults: &[usize]) -> Result<Vec<i64>> {
    check_pq(p, q)?;
    let irreps = irreducibles(p, q)?;
    if irreps.len() != mults.len() {
        return Err(Error::invalid(format!(
            "({p},{q}) takes {} multiplicities",
            irreps.len()
        )));
    }
    // multiplicity-weighted count of irreducibles on which S_i acts as `sign`
    let count = |i: usize, sign: i64| -> i64 {
        irreps
            .iter()
            .zip(mults)
            .filter(|(ir, _)| ir.basis[i].trace() * sign == ir.basis[i].dim() as i64)
            .map(|(_, &k)| k as i64)
            .sum()
    };
    let out = match (p, q) {
        (1, 0) => {
            let d = count(0, 1) - count(0, -1);
            vec![d, -d]
        }
        (1, 1) => {
            let k = |s1: i64, s2: i64| -> i64 {
                irreps
                    .iter()
                    .zip(mults)
                    .filter(|(ir, _)| ir.basis[0].trace() == s1 && ir.basis[1].trace() == s2)
                    .map(|(_, &k)| k as i64)
                    .sum()
            };
            let a = k(1, 1) - k(-1, -1);
            let b = k(1, -1) - k(-1, 1);
            // order ++, +-, -+, -- as (η, τ)
            [(1, 1), (1, -1), (-1, 1), (-1, -1)]
                .iter()
                .map(|&(eta, tau)| tau * a + tau * eta * b)
                .collect()
        }
        (_, 0) => vec![0],
        (_, 1) => {
            let d = irreps[0].basis[0].dim() as i64;
            let diff = d * (count(p, 1) - count(p, -1));
            vec![0, diff, -diff]
        }
        _ => vec![0, 0],
    };
    Ok(out.into_iter().map(|x| x.rem_euclid(8)).collect())
}

/// Signature constants of a nondegenerate representation with `p ≥ q`.
pub fn gamma_constants(rep: &CliffordRep) -> Result<SignatureConstants> {
    let (p, q, m) = (rep.p(), rep.q(), rep.m());
    check_pq(p, q)?;
    if expected_degenerate(p, q, m, rep.mults()) {
        return Err(Error::invalid("the quartic form of this representation vanishes"));
    }
    let mut comps = Vec::new();
    for comp in components(p, q)? {
        let (sp, sm, zero) = signature_at(rep, &comp.representative);
        if zero != 0 {
            return Err(Error::Numerical(format!(
                "S(v) is singular at the representative of {}",
                comp.label
            )));
        }
        let eighths = (sp as i64 - sm as i64).rem_euclid(8);
        comps.push(ComponentSignature {
            label: comp.label,
            sigma_plus: sp,
            sigma_minus: sm,
            eighths,
            gamma: e(c(eighths as f64 / 8.0)),
        });
    }
    let closed = gamma_eighths_closed_form(p, q, rep.mults())?;
    let agrees = closed.iter().zip(&comps).all(|(a, b)| *a == b.eighths);
    Ok(SignatureConstants {
        p,
        q,
        m,
        components: comps,
        alpha: rep.basis()[0].det(),
        beta: if q % 2 == 0 { -1 } else { 1 },
        closed_form_eighths: closed,
        closed_form_agrees: agrees,
    })
}
