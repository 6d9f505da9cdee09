//! Quadrature of the quadratic zeta integrals `∫ |P(v)|^s e^{−π|v|²} dv` for
//! `p + q ≤ 2` and a numerical check of their functional equations.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

use super::check_pq;
use super::gamma::{gamma_quadratic, ser_complex};
use super::mc::ZetaEstimate;
use super::special::c;

/// Gaussian tails beyond this radius are below `e^{−π·64}`.
const CUTOFF: f64 = 8.0;
const MAX_LEVEL: u32 = 14;
const T_MAX: f64 = 4.5;

/// Tanh-sinh quadrature of `f` over `[a, b]`. `f` receives the point and its
/// distance to `a`, which stays accurate near the left endpoint, so
/// integrable singularities belong there. Returns the value, an error
/// estimate (difference of the last two levels) and the number of evaluations.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: f64) -> (Complex64, f64, usize)
where
    F: Fn(f64, f64) -> Complex64,
{
    let half = (b - a) / 2.0;
    let mut evals = 1;
    let mut sum = f(a + half, half) * (PI / 2.0);
    let mut h = 1.0;
    let mut prev = sum * h * half;
    let mut err = f64::INFINITY;
    // points at t = ±kh; level 0 uses every integer k, later levels the odd multiples of h
    let add_points = |h: f64, step: usize, sum: &mut Complex64, evals: &mut usize| {
        let mut k = 1;
        loop {
            let t = k as f64 * h;
            if t > T_MAX {
                break;
            }
            let u = PI / 2.0 * t.sinh();
            let x = (-2.0 * u).exp();
            // distance from the nearer endpoint, and weight d x / d t
            let delta = 2.0 * half * x / (1.0 + x);
            let w = PI / 2.0 * t.cosh() * 4.0 * x / ((1.0 + x) * (1.0 + x));
            if delta > 0.0 {
                *sum += (f(a + delta, delta) + f(b - delta, 2.0 * half - delta)) * w;
                *evals += 2;
            }
            k += step;
        }
    };
    add_points(h, 1, &mut sum, &mut evals);
    let mut value = sum * h * half;
    for level in 1..=MAX_LEVEL {
        h /= 2.0;
        add_points(h, 2, &mut sum, &mut evals);
        value = sum * h * half;
        err = (value - prev).norm();
        if level >= 3 && err <= tol {
            break;
        }
        prev = value;
    }
    (value, err, evals)
}

fn powc(x: f64, s: Complex64) -> Complex64 {
    c(x).powc(s)
}

/// `∫_0^∞ x^{2s} e^{−πx²} dx`, continued to `−3/2 < Re 2s ≤ −1` by subtracting
/// the value at the origin on `[0, 1]`.
fn half_line(s: Complex64, tol: f64) -> Result<(Complex64, f64, usize)> {
    let a = 2.0 * s;
    if a.re > -1.0 {
        return Ok(tanh_sinh(|_, d| powc(d, a) * (-PI * d * d).exp(), 0.0, CUTOFF, tol));
    }
    if a.re <= -3.0 || (a + 1.0).norm() < 1e-8 {
        return Err(Error::invalid(format!(
            "s = {s} is outside the continued range of the half-line integral"
        )));
    }
    let (near, e1, n1) = tanh_sinh(|_, d| powc(d, a) * (-PI * d * d).exp_m1(), 0.0, 1.0, tol);
    let (far, e2, n2) = tanh_sinh(|x, _| powc(x, a) * (-PI * x * x).exp(), 1.0, CUTOFF, tol);
    Ok((near + 1.0 / (a + 1.0) + far, e1 + e2, n1 + n2))
}

/// `∫_0^∞ r^{2s+1} e^{−πr²} dr`.
fn radial(s: Complex64, tol: f64) -> (Complex64, f64, usize) {
    let a = 2.0 * s + 1.0;
    tanh_sinh(|_, d| powc(d, a) * (-PI * d * d).exp(), 0.0, CUTOFF, tol)
}

/// `∫_0^{π/2} sin(u)^s du`.
fn angular(s: Complex64, tol: f64) -> (Complex64, f64, usize) {
    tanh_sinh(|_, d| powc(d.sin(), s), 0.0, PI / 2.0, tol)
}

/// Zeta integral of `|P|^s` against `e^{−π|v|²}` over one component, for
/// `p + q ≤ 2`. For `(1,0)` the components are the half-lines; for `(1,1)`
/// both the four components and the lumped `+`/`-` (sign of `P`) are accepted.
pub fn zeta_quadratic_numeric(p: usize, q: usize, component: &str, s: Complex64, tol: f64) -> Result<ZetaEstimate> {
    check_pq(p, q)?;
    if p + q > 2 {
        return Err(Error::unsupported(
            "numerical quadratic zeta integrals are limited to p + q ≤ 2",
        ));
    }
    let lower = if p + q == 1 { -0.5 } else { -1.0 };
    if s.re <= lower {
        return Err(Error::invalid(format!(
            "the zeta integral diverges at Re s = {} ≤ {lower}",
            s.re
        )));
    }
    zeta_continued(p, q, component, s, tol)
}

fn zeta_continued(p: usize, q: usize, component: &str, s: Complex64, tol: f64) -> Result<ZetaEstimate> {
    let bad = || Error::invalid(format!("unknown component {component:?} for ({p},{q})"));
    let (value, err, evals) = match (p, q) {
        (1, 0) => {
            if !matches!(component, "+" | "-") {
                return Err(bad());
            }
            half_line(s, tol)?
        }
        (2, 0) => {
            if component != "+" {
                return Err(bad());
            }
            let (r, e, n) = radial(s, tol);
            (2.0 * PI * r, 2.0 * PI * e, n)
        }
        _ => {
            // polar coordinates: P = r² cos 2θ, and each component is a
            // quarter-turn sector carrying ∫_0^{π/2} sin(u)^s du
            let lumped = match component {
                "++" | "+-" | "-+" | "--" => 1.0,
                "+" | "-" => 2.0,
                _ => return Err(bad()),
            };
            let (r, e1, n1) = radial(s, tol);
            let (a, e2, n2) = angular(s, tol);
            (lumped * r * a, lumped * (e1 * a.norm() + e2 * r.norm()), n1 + n2)
        }
    };
    Ok(ZetaEstimate {
        value,
        stderr: err,
        samples: evals,
        seed: None,
        s,
        component: component.to_string(),
        method: "tanh-sinh quadrature",
        warning: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadraticFeReport {
    pub p: usize,
    pub q: usize,
    #[serde(serialize_with = "ser_complex")]
    pub s: Complex64,
    pub labels: Vec<String>,
    #[serde(serialize_with = "ser_vec")]
    pub lhs: Vec<Complex64>,
    #[serde(serialize_with = "ser_vec")]
    pub rhs: Vec<Complex64>,
    pub max_error: f64,
    pub tol: f64,
    pub passed: bool,
}

fn ser_vec<S: serde::Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Cj {
        re: f64,
        im: f64,
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&Cj { re: z.re, im: z.im })?;
    }
    seq.end()
}

/// Compares `ζ(s, Φ̂)` with `Γ(s) ζ(−s − n/2, Φ)` for the self-dual Gaussian
/// `Φ = e^{−π|v|²}`, both sides by quadrature. `(1,0)` uses the half-line
/// `x > 0` and allows `Re s ∈ (−3/4, 0)`, continuing the left side past
/// `−1/2`; `n = 2` needs `Re s ∈ (−1, 0)`.
pub fn fe_quadratic_numeric_check(p: usize, q: usize, s: Complex64, tol: f64) -> Result<QuadraticFeReport> {
    check_pq(p, q)?;
    let n = p + q;
    let strip = match n {
        1 => (-0.75, 0.0),
        2 => (-1.0, 0.0),
        _ => {
            return Err(Error::unsupported(
                "numerical functional equations are limited to p + q ≤ 2",
            ))
        }
    };
    if !(s.re > strip.0 && s.re < strip.1) {
        return Err(Error::invalid(format!(
            "Re s = {} is outside the strip ({}, {})",
            s.re, strip.0, strip.1
        )));
    }
    let g = gamma_quadratic(p, q, s)?;
    let dual = -s - n as f64 / 2.0;
    let quad_tol = tol * 1e-3;
    let labels = g.labels.clone();
    let side = |t: Complex64| -> Result<Vec<Complex64>> {
        labels
            .iter()
            .map(|l| zeta_continued(p, q, l, t, quad_tol).map(|z| z.value))
            .collect()
    };
    let lhs = side(s)?;
    let at_dual = side(dual)?;
    let rhs: Vec<Complex64> = (0..g.size)
        .map(|i| (0..g.size).map(|j| g.entries[i][j] * at_dual[j]).sum())
        .collect();
    let max_error = lhs.iter().zip(&rhs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    Ok(QuadraticFeReport {
        p,
        q,
        s,
        labels,
        lhs,
        rhs,
        max_error,
        tol,
        passed: max_error < tol,
    })
}
