//! Monte Carlo zeta integrals of Clifford quartics against the Gaussian
//! `Ψ(w) = e^{−π|w|²}`, and the closed form for quartics that are squares.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quartic::{expand_coeffs, square_detect};
use crate::repkit::CliffordRep;
use crate::sampling::stream;

use super::gamma::ser_complex;
use super::numeric::tanh_sinh;
use super::special::{c, gamma};
use super::{check_pq, component_of, components, label_matches};

const CHUNK: usize = 1 << 13;

#[derive(Clone, Debug, Serialize)]
pub struct ZetaEstimate {
    #[serde(serialize_with = "ser_complex")]
    pub value: Complex64,
    /// Standard error (Monte Carlo) or error estimate (quadrature).
    pub stderr: f64,
    /// Samples drawn, or integrand evaluations for quadrature.
    pub samples: usize,
    pub seed: Option<u64>,
    #[serde(serialize_with = "ser_complex")]
    pub s: Complex64,
    pub component: String,
    pub method: &'static str,
    pub warning: Option<String>,
}

/// Estimates `∫_{Q⁻¹(Ω)} |P̃(w)|^s e^{−π|w|²} dw` by averaging over
/// `w ~ N(0, 1/(2π))^m`, whose density is exactly the Gaussian weight.
/// `component = None` integrates over all of `W`. Samples are drawn in fixed
/// chunks from `stream(seed, chunk)`, so the result does not depend on the
/// number of threads.
pub fn zeta_quartic_mc(
    rep: &CliffordRep,
    component: Option<&str>,
    s: Complex64,
    samples: usize,
    seed: u64,
) -> Result<ZetaEstimate> {
    let (p, q, m) = (rep.p(), rep.q(), rep.m());
    check_pq(p, q)?;
    if samples < 2 {
        return Err(Error::invalid("need at least two samples"));
    }
    if let Some(label) = component {
        if !components(p, q)?.iter().any(|c| label_matches(p, q, label, c.label)) {
            return Err(Error::invalid(format!("unknown component {label:?} for ({p},{q})")));
        }
    }
    let sigma = (2.0 * PI).sqrt().recip();
    let chunks = samples.div_ceil(CHUNK);
    let partial: Vec<(Complex64, f64)> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = stream(seed, chunk as u64);
            let count = CHUNK.min(samples - chunk * CHUNK);
            let mut w = vec![0.0; m];
            let mut v = vec![0.0; p + q];
            let (mut sum, mut sum_sq) = (Complex64::new(0.0, 0.0), 0.0);
            for _ in 0..count {
                for x in w.iter_mut() {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    *x = sigma * z;
                }
                for (i, s_i) in rep.basis().iter().enumerate() {
                    v[i] = s_i.quad_f64(&w);
                }
                let inside = match component {
                    None => true,
                    Some(label) => component_of(p, q, &v).is_some_and(|c| label_matches(p, q, label, c)),
                };
                if !inside {
                    continue;
                }
                let pt: f64 = v.iter().enumerate().map(|(i, x)| rep.eps(i) as f64 * x * x).sum();
                if pt == 0.0 {
                    continue;
                }
                let val = (s * pt.abs().ln()).exp();
                sum += val;
                sum_sq += val.norm_sqr();
            }
            (sum, sum_sq)
        })
        .collect();
    let (sum, sum_sq) = partial
        .iter()
        .fold((Complex64::new(0.0, 0.0), 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
    let nf = samples as f64;
    let mean = sum / nf;
    let var = ((sum_sq / nf - mean.norm_sqr()) * nf / (nf - 1.0)).max(0.0);
    let warning = (s.re < 0.0).then(|| "Re s < 0: the sample variance may be infinite".to_string());
    Ok(ZetaEstimate {
        value: mean,
        stderr: (var / nf).sqrt(),
        samples,
        seed: Some(seed),
        s,
        component: component.unwrap_or("*").to_string(),
        method: "gaussian monte carlo",
        warning,
    })
}

/// `∫ |r₁² − r₂²|^t e^{−π(r₁² + r₂²)}` over `ℝ^a × ℝ^b`.
fn indefinite_moment(a: usize, b: usize, t: f64) -> Result<f64> {
    let (af, bf) = (a as f64, b as f64);
    let g = |x: f64| gamma(c(x)).map(|z| z.re);
    if b == 0 {
        return Ok(PI.powf(-t) * g(t + af / 2.0)? / g(af / 2.0)?);
    }
    let sphere = |k: f64| -> Result<f64> { Ok(2.0 * PI.powf(k / 2.0) / g(k / 2.0)?) };
    let radial = g(t + (af + bf) / 2.0)? / (2.0 * PI.powf(t + (af + bf) / 2.0));
    // r₁ = R cos φ, r₂ = R sin φ; split at the zero of cos 2φ
    let f = |phi: f64| (2.0 * phi).cos().abs().powf(t) * phi.cos().powf(af - 1.0) * phi.sin().powf(bf - 1.0);
    let (left, _, _) = tanh_sinh(|x, _| c(f(x)), 0.0, PI / 4.0, 1e-14);
    let (right, _, _) = tanh_sinh(|x, _| c(f(x)), PI / 4.0, PI / 2.0, 1e-14);
    Ok(sphere(af)? * sphere(bf)? * radial * (left.re + right.re))
}

/// Closed form of `∫_W |P̃|^s e^{−π|w|²} dw` when `P̃ = c·q²` and the
/// eigenvalues of `q` share one modulus `λ`: `|c|^s λ^{2s}` times the
/// Gaussian moment of `|r₁² − r₂²|^{2s}` for the signature of `q`.
pub fn squared_oracle(rep: &CliffordRep, s: f64) -> Result<f64> {
    let form = expand_coeffs(rep);
    let witness = square_detect(&form).ok_or_else(|| Error::unsupported("the quartic is not a square"))?;
    let m = rep.m();
    let dense = DMatrix::from_fn(m, m, |i, j| witness.matrix[i][j].to_f64().unwrap_or(f64::NAN));
    let eig = dense.symmetric_eigen().eigenvalues;
    let lambda = eig.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    if eig.iter().any(|x| (x.abs() - lambda).abs() > 1e-9 * lambda) {
        return Err(Error::unsupported(
            "the square root has eigenvalues of different moduli",
        ));
    }
    let a = eig.iter().filter(|x| **x > 0.0).count();
    let scale = witness.c.to_f64().unwrap_or(f64::NAN).abs().powf(s) * lambda.powf(2.0 * s);
    Ok(scale * indefinite_moment(a, m - a, 2.0 * s)?)
}
