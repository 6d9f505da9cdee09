//! Local zeta functions of Clifford quartic forms: orbit components, signature
//! constants, gamma matrices of the functional equations and numerical zeta
//! integrals.
//!
//! Fourier transforms use the kernel `exp(−2πi⟨x, y⟩)`. For the Gaussian test
//! functions used here the sign of the kernel does not matter.

mod constants;
mod gamma;
mod mc;
mod numeric;
pub mod special;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repkit::{irrep_catalog, rep_build, CliffordRep};
use crate::sampling::stream;

pub use constants::{gamma_constants, gamma_eighths_closed_form, signature_at, ComponentSignature, SignatureConstants};
pub use gamma::{
    closed_form_matches_pullback, fe_involution_check, gamma_pullback, gamma_quadratic, gamma_quartic,
    max_relative_difference, quartic_applicable, GammaMatrix, GammaSource, InvolutionReport,
};
pub use mc::{squared_oracle, zeta_quartic_mc, ZetaEstimate};
pub use numeric::{fe_quadratic_numeric_check, tanh_sinh, zeta_quadratic_numeric, QuadraticFeReport};

/// A connected component of `{P ≠ 0}` in `ℝ^{p+q}` with a representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub label: &'static str,
    pub representative: Vec<i64>,
}

fn unit(n: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = sign;
    v
}

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p + q == 0 || p < q {
        return Err(Error::invalid(format!("need p ≥ q and p + q ≥ 1, got ({p},{q})")));
    }
    Ok(())
}

/// Connected components of `{P ≠ 0}` for `P = x_1² + … + x_p² − x_{p+1}² − … − x_{p+q}²`.
pub fn components(p: usize, q: usize) -> Result<Vec<Component>> {
    check_pq(p, q)?;
    let n = p + q;
    let c = |label, i, sign| Component {
        label,
        representative: unit(n, i, sign),
    };
    Ok(match (p, q) {
        (1, 0) => vec![c("+", 0, 1), c("-", 0, -1)],
        (1, 1) => vec![c("++", 0, 1), c("+-", 0, -1), c("-+", 1, 1), c("--", 1, -1)],
        (_, 0) => vec![c("+", 0, 1)],
        (_, 1) => vec![c("+", 0, 1), c("-+", p, 1), c("--", p, -1)],
        _ => vec![c("+", 0, 1), c("-", p, 1)],
    })
}

/// Label of the component containing `v`, or `None` on `{P = 0}`.
pub fn component_of(p: usize, q: usize, v: &[f64]) -> Option<&'static str> {
    let pv: f64 = v[..p].iter().map(|x| x * x).sum::<f64>() - v[p..p + q].iter().map(|x| x * x).sum::<f64>();
    if pv == 0.0 {
        return None;
    }
    let sign = |x: f64| if x > 0.0 { 1 } else { -1 };
    Some(match (p, q, pv > 0.0) {
        (1, 0, _) => ["-", "+"][(v[0] > 0.0) as usize],
        (1, 1, true) => ["+-", "++"][(v[0] > 0.0) as usize],
        (1, 1, false) => ["--", "-+"][(v[1] > 0.0) as usize],
        (_, 0, _) => "+",
        (_, 1, true) => "+",
        (_, 1, false) => {
            if sign(v[p]) > 0 {
                "-+"
            } else {
                "--"
            }
        }
        (_, _, true) => "+",
        (_, _, false) => "-",
    })
}

/// Whether `label` names `component`, allowing the lumped labels `+`/`-`
/// (sign of `P`) for `(1,1)`.
pub fn label_matches(p: usize, q: usize, label: &str, component: &str) -> bool {
    if label == component {
        return true;
    }
    (p, q) == (1, 1) && matches!(label, "+" | "-") && component.starts_with(label)
}

/// Every `(p, q, m)` with `p ≥ q`, `p + q ≤ max_n`, `m ≤ max_m` for which the
/// closed-form quartic gamma matrix applies.
pub fn quartic_triples(max_n: usize, max_m: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for q in 0..=n / 2 {
            let p = n - q;
            let Ok(cat) = irrep_catalog(p, q) else { continue };
            for k in 1..=max_m / cat.dim {
                let m = k * cat.dim;
                if quartic_applicable(p, q, m).is_ok() {
                    out.push((p, q, m));
                }
            }
        }
    }
    out
}

/// A representation of degree `m`: `m / dim` copies of the first irreducible.
pub fn rep_with_degree(p: usize, q: usize, m: usize) -> Result<CliffordRep> {
    let cat = irrep_catalog(p, q)?;
    if m == 0 || m % cat.dim != 0 {
        return Err(Error::invalid(format!("m = {m} is not a multiple of {}", cat.dim)));
    }
    let mut mults = vec![0; cat.count];
    mults[0] = m / cat.dim;
    rep_build(p, q, &mults)
}

/// Reproducible test points `s` with `Re s ∈ (−3, 3)` and `Im s ∈ (0.05, 2)`,
/// off the real axis where every Gamma factor has its poles.
pub fn sample_s(seed: u64, count: usize) -> Vec<Complex64> {
    let mut rng = stream(seed, 0);
    (0..count)
        .map(|_| Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(0.05..2.0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_lists() {
        let labels = |p, q| components(p, q).unwrap().iter().map(|c| c.label).collect::<Vec<_>>();
        assert_eq!(labels(2, 1), ["+", "-+", "--"]);
        assert_eq!(labels(3, 0), ["+"]);
        assert_eq!(labels(2, 2), ["+", "-"]);
        assert_eq!(labels(1, 0), ["+", "-"]);
        assert_eq!(labels(1, 1), ["++", "+-", "-+", "--"]);
        assert!(components(1, 2).is_err());
    }

    #[test]
    fn representatives_lie_in_their_components() {
        for n in 1..8 {
            for q in 0..=n / 2 {
                let p = n - q;
                for c in components(p, q).unwrap() {
                    let v: Vec<f64> = c.representative.iter().map(|&x| x as f64).collect();
                    assert_eq!(component_of(p, q, &v), Some(c.label), "({p},{q})");
                }
            }
        }
    }
}
