//! Gamma matrices of the local functional equations
//! `ζ_i(s, Φ̂) = Σ_j Γ_ij(s) ζ_j(−N/d − s, Φ)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quartic::expected_degenerate;
use crate::repkit::{irrep_catalog, CliffordRep};

use super::constants::gamma_constants;
use super::special::{c, e, gamma};
use super::{check_pq, components};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaSource {
    /// Definite quadratic form, one component.
    QuadraticDefinite,
    /// `(1,0)` split into the half-lines `x > 0`, `x < 0`.
    QuadraticHalfLines,
    /// Lorentzian form `(n−1, 1)`, three components.
    QuadraticLorentzian,
    /// Indefinite form, lumped by the sign of `P`.
    QuadraticGeneral,
    /// Closed form for the quartic under trivial `γ` and `m ≥ 8`.
    QuarticClosedForm,
    /// Composition of two quadratic gamma matrices through `Q`.
    Pullback,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaMatrix {
    pub size: usize,
    #[serde(serialize_with = "ser_matrix")]
    pub entries: Vec<Vec<Complex64>>,
    pub labels: Vec<String>,
    pub source: GammaSource,
    /// `false` when no independent closed form exists to compare against.
    pub validated: bool,
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

pub(crate) fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    ComplexJson { re: z.re, im: z.im }.serialize(s)
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<Complex64>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<ComplexJson>> = m
        .iter()
        .map(|r| r.iter().map(|z| ComplexJson { re: z.re, im: z.im }).collect())
        .collect();
    rows.serialize(s)
}

impl GammaMatrix {
    fn new(entries: Vec<Vec<Complex64>>, labels: &[&str], source: GammaSource) -> Self {
        GammaMatrix {
            size: entries.len(),
            entries,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            source,
            validated: true,
        }
    }

    fn scaled(mut self, f: Complex64) -> Self {
        for row in &mut self.entries {
            for x in row.iter_mut() {
                *x *= f;
            }
        }
        self
    }

    pub fn mul(&self, other: &GammaMatrix) -> Vec<Vec<Complex64>> {
        let n = self.size;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.entries[i][k] * other.entries[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flatten().fold(0.0, |a, z| a.max(z.norm()))
    }
}

/// `sin(kπ/2)` exactly.
fn sin_half(k: i64) -> f64 {
    [0.0, 1.0, 0.0, -1.0][k.rem_euclid(4) as usize]
}

fn cos_half(k: i64) -> f64 {
    sin_half(k + 1)
}

fn sin_pi(z: Complex64) -> Complex64 {
    (PI * z).sin()
}

/// `π^{−(2s+n/2+1)} Γ(s+1) Γ(s+n/2)`.
fn quadratic_prefactor(n: usize, s: Complex64) -> Result<Complex64> {
    let half_n = n as f64 / 2.0;
    Ok(c(PI).powc(-(2.0 * s + half_n + 1.0)) * gamma(s + 1.0)? * gamma(s + half_n)?)
}

/// Gamma matrix of the quadratic form of signature `(p,q)`: scalar for
/// definite forms, 3×3 over `{+, −+, −−}` for `(n−1, 1)` with `n ≥ 3`, and
/// 2×2 over the sign of `P` otherwise.
pub fn gamma_quadratic(p: usize, q: usize, s: Complex64) -> Result<GammaMatrix> {
    check_pq(p, q)?;
    let n = p + q;
    let pre = quadratic_prefactor(n, s)?;
    let ni = n as i64;
    let g = if q == 0 {
        GammaMatrix::new(vec![vec![-sin_pi(s)]], &["+"], GammaSource::QuadraticDefinite)
    } else if q == 1 && p >= 2 {
        let a = -cos_half(ni);
        let t = (2.0 * s + n as f64) / 4.0;
        let (em, ep) = (0.5 * e(-t), 0.5 * e(t));
        GammaMatrix::new(
            vec![
                vec![-(PI * s).cos(), c(a), c(a)],
                vec![c(0.5), em, ep],
                vec![c(0.5), ep, em],
            ],
            &["+", "-+", "--"],
            GammaSource::QuadraticLorentzian,
        )
    } else {
        let (pf, qf) = (p as f64, q as f64);
        GammaMatrix::new(
            vec![
                vec![-sin_pi((2.0 * s + qf) / 2.0), c(sin_half(p as i64))],
                vec![c(sin_half(q as i64)), -sin_pi((2.0 * s + pf) / 2.0)],
            ],
            &["+", "-"],
            GammaSource::QuadraticGeneral,
        )
    };
    Ok(g.scaled(pre))
}

/// `1/Γ(z)`, entire.
fn rgamma(z: Complex64) -> Result<Complex64> {
    if z.re < 0.5 {
        Ok(sin_pi(z) * gamma(1.0 - z)? / PI)
    } else {
        Ok(1.0 / gamma(z)?)
    }
}

/// `(1,0)` gamma matrix between the half-lines, from the even and odd
/// Tate factors of `|x|^{u−1}` and `sgn(x)|x|^{u−1}` with `u = 2s+1`.
fn gamma_half_lines(s: Complex64) -> Result<GammaMatrix> {
    let u = 2.0 * s + 1.0;
    let scale = c(PI).powc(0.5 - u);
    let even = scale * gamma(u / 2.0)? * rgamma((1.0 - u) / 2.0)?;
    let odd = -Complex64::i() * scale * gamma((u + 1.0) / 2.0)? * rgamma((2.0 - u) / 2.0)?;
    let (a, b) = (0.5 * (even + odd), 0.5 * (even - odd));
    Ok(GammaMatrix::new(
        vec![vec![a, b], vec![b, a]],
        &["+", "-"],
        GammaSource::QuadraticHalfLines,
    ))
}

const DEGENERATE_TRIPLES: [(usize, usize, usize); 7] = [
    (2, 1, 2),
    (3, 1, 4),
    (5, 1, 8),
    (9, 1, 16),
    (2, 2, 4),
    (3, 3, 8),
    (5, 5, 16),
];

/// Whether the closed-form quartic gamma matrix applies to `(p,q,m)`: `m` is
/// realizable, the form is nondegenerate, every `γ` is 1 and `m ≥ 8`.
pub fn quartic_applicable(p: usize, q: usize, m: usize) -> Result<()> {
    check_pq(p, q)?;
    let dim = irrep_catalog(p, q)?.dim;
    if m == 0 || m % dim != 0 {
        return Err(Error::invalid(format!(
            "m = {m} is not a multiple of the irreducible dimension {dim}"
        )));
    }
    if matches!((p, q), (1, 0) | (1, 1) | (2, 1) | (3, 1)) || m < 8 {
        return Err(Error::unsupported(format!(
            "({p},{q},{m}) may have nontrivial γ or m < 8; use the pullback formula"
        )));
    }
    if DEGENERATE_TRIPLES.contains(&(p, q, m)) {
        return Err(Error::unsupported(format!(
            "the quartic form vanishes for ({p},{q},{m})"
        )));
    }
    Ok(())
}

/// Closed-form gamma matrix of the Clifford quartic, functional equation
/// `s ↔ −m/4 − s`.
pub fn gamma_quartic(p: usize, q: usize, m: usize, s: Complex64) -> Result<GammaMatrix> {
    quartic_applicable(p, q, m)?;
    let n = p + q;
    let (nf, mf) = (n as f64, m as f64);
    let pre = c(2.0).powc(4.0 * s + mf / 2.0)
        * c(PI).powc(-4.0 * s - 2.0 - mf / 2.0)
        * gamma(s + 1.0)?
        * gamma(s + nf / 2.0)?
        * gamma(s + 1.0 + (mf - 2.0 * nf) / 4.0)?
        * gamma(s + mf / 4.0)?
        * sin_pi(s);
    let ni = n as i64;
    let zero = c(0.0);
    let g = if q == 0 {
        GammaMatrix::new(vec![vec![sin_pi(s - nf / 2.0)]], &["+"], GammaSource::QuarticClosedForm)
    } else if q == 1 {
        let a = c(-sin_half(ni));
        let d = -sin_pi(s + nf / 2.0);
        GammaMatrix::new(
            vec![
                vec![-sin_pi(s - nf / 2.0), zero, zero],
                vec![a, d, zero],
                vec![a, zero, d],
            ],
            &["+", "-+", "--"],
            GammaSource::QuarticClosedForm,
        )
    } else {
        let (pi, qi) = (p as i64, q as i64);
        let (pf, qf) = (p as f64, q as f64);
        GammaMatrix::new(
            vec![
                vec![sin_pi(s + (qf - pf) / 2.0), c(-2.0 * sin_half(pi) * cos_half(qi))],
                vec![c(-2.0 * sin_half(qi) * cos_half(pi)), sin_pi(s + (pf - qf) / 2.0)],
            ],
            &["+", "-"],
            GammaSource::QuarticClosedForm,
        )
    };
    Ok(g.scaled(pre))
}

/// Quadratic gamma matrix indexed like the quartic components: `(1,0)` is
/// split into half-lines, everything else is [`gamma_quadratic`].
fn quadratic_for_pullback(p: usize, q: usize, s: Complex64) -> Result<GammaMatrix> {
    if (p, q) == (1, 0) {
        gamma_half_lines(s)
    } else {
        gamma_quadratic(p, q, s)
    }
}

/// Gamma matrix of the quartic `P ∘ Q` obtained by composing the quadratic
/// gamma matrix at `s` and at `s + (m − 2n)/4`, weighted per component by
/// `γ_k`.
pub fn gamma_pullback(rep: &CliffordRep, s: Complex64) -> Result<GammaMatrix> {
    let (p, q, m) = (rep.p(), rep.q(), rep.m());
    check_pq(p, q)?;
    if expected_degenerate(p, q, m, rep.mults()) {
        return Err(Error::invalid("the quartic form of this representation vanishes"));
    }
    let n = p + q;
    let consts = gamma_constants(rep)?;
    let shift = (m as f64 - 2.0 * n as f64) / 4.0;
    let a = quadratic_for_pullback(p, q, s)?;
    let b = quadratic_for_pullback(p, q, s + shift)?;
    // lumped (1,1) labels take the γ of their first component
    let gammas: Vec<Complex64> = a
        .labels
        .iter()
        .map(|l| {
            components(p, q)
                .unwrap()
                .iter()
                .find(|comp| super::label_matches(p, q, l, comp.label))
                .and_then(|comp| consts.gamma_of(comp.label))
                .expect("every label has a component")
        })
        .collect();
    let scale = c(2.0).powc(4.0 * s + m as f64 / 2.0) * (consts.alpha.abs() as f64).sqrt() / consts.beta.abs() as f64;
    let size = a.size;
    let entries = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    scale
                        * (0..size)
                            .map(|k| gammas[k] * a.entries[i][k] * b.entries[k][j])
                            .sum::<Complex64>()
                })
                .collect()
        })
        .collect();
    Ok(GammaMatrix {
        size,
        entries,
        labels: a.labels.clone(),
        source: GammaSource::Pullback,
        validated: n >= 3 || (p, q) == (2, 0),
    })
}

/// Largest entrywise relative difference. Where one side is exactly zero
/// (a structural zero of a closed form) the other is measured against the
/// largest entry of either matrix.
pub fn max_relative_difference(a: &GammaMatrix, b: &GammaMatrix) -> f64 {
    if a.size != b.size {
        return f64::INFINITY;
    }
    let scale = a.max_abs().max(b.max_abs());
    let mut worst: f64 = 0.0;
    for (ra, rb) in a.entries.iter().zip(&b.entries) {
        for (x, y) in ra.iter().zip(rb) {
            let denom = if x.norm() == 0.0 || y.norm() == 0.0 {
                scale
            } else {
                x.norm().max(y.norm())
            };
            if denom > 0.0 {
                worst = worst.max((x - y).norm() / denom);
            }
        }
    }
    worst
}

/// Whether the closed-form quartic matrix agrees with the pullback of the
/// quadratic matrices. On applicable triples this holds exactly when `8 | m`:
/// the pullback carries `sin π(s + m/4 − n/2)` where the closed form has
/// `sin π(s − n/2)`.
pub fn closed_form_matches_pullback(m: usize) -> bool {
    m % 8 == 0
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionReport {
    pub max_error: f64,
    pub passed: bool,
}

/// Checks `Γ(s) Γ(−m/4 − s) = 1` for the closed-form quartic gamma matrix,
/// which follows from applying the functional equation twice.
pub fn fe_involution_check(p: usize, q: usize, m: usize, s: Complex64, tol: f64) -> Result<InvolutionReport> {
    let a = gamma_quartic(p, q, m, s)?;
    let b = gamma_quartic(p, q, m, -(m as f64) / 4.0 - s)?;
    let prod = a.mul(&b);
    let mut max_error: f64 = 0.0;
    for (i, row) in prod.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            max_error = max_error.max((z - target).norm());
        }
    }
    Ok(InvolutionReport {
        max_error,
        passed: max_error < tol,
    })
}
