//! Symmetry Lie algebras of the quartic form as nullspaces.
//!
//! `h = {X : ᵀX S_i + S_i X = 0}` is a two-term system per equation and is
//! solved exactly by a signed union-find. `g` (the infinitesimal symmetries of
//! `P̃`) and the `(♯)` system are degree-4 polynomial identities in `w`; the
//! exact mode expands them into coefficient equations and takes ranks modulo
//! two large primes, the float mode samples integer points and uses an SVD.

mod predict;

pub use predict::{
    exceptional_g_dim, g_prime_dim, h_algebra_dim, predict, sharp_expected, table_exceptional, HAlgebra,
    SymmetryPrediction,
};

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{SignedUnionFind, SparseSystem, PRIMES};
use crate::quartic::Monomial;
use crate::repkit::CliffordRep;
use crate::sampling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Float,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Error::invalid(format!("unknown mode '{s}' (expected exact or float)"))),
        }
    }
}

/// Sparse integer matrix as `(row, col, value)` triples.
pub type SparseMatrix = Vec<(usize, usize, i64)>;

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub dimension: usize,
    pub unknowns: usize,
    /// Exact basis when available; `None` means dimension only.
    pub basis: Option<Vec<SparseMatrix>>,
    pub method: &'static str,
    /// Largest constraint violation of the computed kernel (float mode).
    pub residual: Option<f64>,
}

/// Threshold on singular values relative to the largest one.
pub const SVD_REL_TOL: f64 = 1e-8;

/// Expands an exact kernel basis element into a dense matrix.
pub fn basis_dense(x: &SparseMatrix, m: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; m]; m];
    for &(r, c, v) in x {
        out[r][c] += v;
    }
    out
}

/// `ᵀX S + S X` for a dense integer `X`.
fn h_residual_exact(rep: &CliffordRep, x: &[Vec<i64>]) -> bool {
    let m = rep.m();
    rep.basis().iter().all(|s| {
        (0..m).all(|a| {
            (0..m).all(|b| {
                let (rb, sb) = s.col(b);
                let (ra, sa) = s.col(a);
                sb as i64 * x[rb][a] + sa as i64 * x[ra][b] == 0
            })
        })
    })
}

/// Whether a dense integer `X` satisfies `ᵀX S_i + S_i X = 0` for all `i`.
pub fn in_h(rep: &CliffordRep, x: &[Vec<i64>]) -> bool {
    x.len() == rep.m() && h_residual_exact(rep, x)
}

pub fn h_kernel(rep: &CliffordRep, mode: Mode) -> Result<KernelReport> {
    match mode {
        Mode::Exact => Ok(h_kernel_exact(rep)),
        Mode::Float => h_kernel_float(rep),
    }
}

fn h_kernel_exact(rep: &CliffordRep) -> KernelReport {
    let m = rep.m();
    let mut uf = SignedUnionFind::new(m * m);
    // (ᵀX S)_ab + (S X)_ab = s_b X[σb][a] + s_a X[σa][b]
    for s in rep.basis() {
        for a in 0..m {
            let (ra, sa) = s.col(a);
            for b in a..m {
                let (rb, sb) = s.col(b);
                let u = rb * m + a;
                let v = ra * m + b;
                if u == v {
                    uf.kill(u);
                } else {
                    uf.relate(u, v, -sa * sb);
                }
            }
        }
    }
    let basis: Vec<SparseMatrix> = uf
        .free_components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|(x, s)| (x / m, x % m, s as i64)).collect())
        .collect();
    KernelReport {
        dimension: basis.len(),
        unknowns: m * m,
        basis: Some(basis),
        method: "exact",
        residual: Some(0.0),
    }
}

struct FloatKernel {
    nullity: usize,
    residual: f64,
}

/// Nullity of `rows` (already unit-normalized) with the relative SVD threshold,
/// plus the largest `‖A v‖∞` over the kernel vectors found.
fn float_kernel(rows: &[Vec<f64>], ncols: usize) -> Result<FloatKernel> {
    // zero rows keep V square when there are fewer constraints than unknowns
    let a = DMatrix::from_fn(rows.len().max(ncols), ncols, |i, j| rows.get(i).map_or(0.0, |r| r[j]));
    let svd = a.clone().svd(false, true);
    let vt = svd
        .v_t
        .as_ref()
        .ok_or_else(|| Error::Numerical("SVD did not return V".into()))?;
    let smax = svd.singular_values.max();
    let mut nullity = 0;
    let mut residual = 0.0f64;
    for (k, &sv) in svd.singular_values.iter().enumerate() {
        if sv <= SVD_REL_TOL * smax.max(f64::MIN_POSITIVE) {
            nullity += 1;
            let v = vt.row(k).transpose();
            residual = residual.max((&a * v).amax());
        }
    }
    Ok(FloatKernel { nullity, residual })
}

fn unit(mut row: Vec<f64>) -> Vec<f64> {
    let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        row.iter_mut().for_each(|x| *x /= norm);
    }
    row
}

fn h_kernel_float(rep: &CliffordRep) -> Result<KernelReport> {
    let m = rep.m();
    let mut rows = Vec::new();
    for s in rep.basis() {
        for a in 0..m {
            let (ra, sa) = s.col(a);
            for b in a..m {
                let (rb, sb) = s.col(b);
                let mut row = vec![0.0; m * m];
                row[rb * m + a] += sb as f64;
                row[ra * m + b] += sa as f64;
                rows.push(unit(row));
            }
        }
    }
    let k = float_kernel(&rows, m * m)?;
    Ok(KernelReport {
        dimension: k.nullity,
        unknowns: m * m,
        basis: None,
        method: "float-svd",
        residual: Some(k.residual),
    })
}

/// `g(w) = Σ ε_i S_i[w] · S_i w`, so the `g`-constraint at `w` is `ᵀg(w) X w = 0`.
fn g_vector(rep: &CliffordRep, w: &[f64]) -> Vec<f64> {
    let m = rep.m();
    let mut out = vec![0.0; m];
    for (i, s) in rep.basis().iter().enumerate() {
        let q = rep.eps(i) as f64 * s.quad_f64(w);
        for j in 0..m {
            let (r, sg) = s.col(j);
            out[r] += q * sg as f64 * w[j];
        }
    }
    out
}

fn key(a: usize, b: usize, c: usize, d: usize) -> Monomial {
    let mut k = [a as u16, b as u16, c as u16, d as u16];
    k.sort_unstable();
    k
}

/// Coefficient equations of `Σ ε_i S_i[w] (S_i w)ᵀ X w ≡ 0` over the `m²`
/// entries of `X` (index `r·m + k`).
fn g_system(rep: &CliffordRep) -> SparseSystem {
    let m = rep.m();
    let mut eqs: HashMap<Monomial, Vec<(usize, i64)>> = HashMap::new();
    for (i, s) in rep.basis().iter().enumerate() {
        let eps = rep.eps(i);
        for (a, b, c) in s.quad_terms() {
            for j in 0..m {
                let (r, sj) = s.col(j);
                let coef = eps * c * sj as i64;
                for k in 0..m {
                    eqs.entry(key(a, b, j, k)).or_default().push((r * m + k, coef));
                }
            }
        }
    }
    into_system(eqs, m * m)
}

fn into_system(eqs: HashMap<Monomial, Vec<(usize, i64)>>, ncols: usize) -> SparseSystem {
    let mut keys: Vec<Monomial> = eqs.keys().copied().collect();
    keys.sort_unstable();
    let mut eqs = eqs;
    let mut sys = SparseSystem::new(ncols);
    for k in keys {
        sys.push(eqs.remove(&k).unwrap_or_default());
    }
    sys
}

/// The polynomial `Σ ε_i S_i[w] (S_i w)ᵀ X w` for a dense integer `X`;
/// zero exactly when `X ∈ g`.
pub fn g_polynomial(rep: &CliffordRep, x: &[Vec<i64>]) -> HashMap<Monomial, i64> {
    let m = rep.m();
    let mut out: HashMap<Monomial, i64> = HashMap::new();
    for (i, s) in rep.basis().iter().enumerate() {
        let eps = rep.eps(i);
        for (a, b, c) in s.quad_terms() {
            for j in 0..m {
                let (r, sj) = s.col(j);
                for (k, &xv) in x[r].iter().enumerate() {
                    if xv != 0 {
                        *out.entry(key(a, b, j, k)).or_insert(0) += eps * c * sj as i64 * xv;
                    }
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn in_g(rep: &CliffordRep, x: &[Vec<i64>]) -> bool {
    g_polynomial(rep, x).is_empty()
}

/// Checks that every `S_i S_j` (`i < j`), the image of `so(p,q)`, lies in `g`.
pub fn so_pq_in_g(rep: &CliffordRep) -> bool {
    let b = rep.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| in_g(rep, &b[i].mul(&b[j]).to_dense())))
}

/// Largest `|ᵀg(w) X w|` relative to `|g(w)||X||w|` over `points` for a
/// dense `X`; the float-mode membership test.
pub fn g_residual_f64(rep: &CliffordRep, x: &[Vec<f64>], points: usize, seed: u64) -> f64 {
    let m = rep.m();
    let xnorm = x
        .iter()
        .flatten()
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    (0..points)
        .map(|t| {
            let w: Vec<f64> = sampling::int_vector(&mut sampling::stream(seed, t as u64), m, 9)
                .into_iter()
                .map(|v| v as f64)
                .collect();
            let g = g_vector(rep, &w);
            let xw: Vec<f64> = (0..m).map(|r| (0..m).map(|k| x[r][k] * w[k]).sum()).collect();
            let val: f64 = g.iter().zip(&xw).map(|(a, b)| a * b).sum();
            let scale =
                g.iter().map(|v| v * v).sum::<f64>().sqrt() * xnorm * w.iter().map(|v| v * v).sum::<f64>().sqrt();
            if scale == 0.0 {
                0.0
            } else {
                val.abs() / scale
            }
        })
        .fold(0.0, f64::max)
}

/// Runs the same nullity computation on two independent batches and fails
/// with `UnstableDimension` unless they agree.
fn confirm(first: usize, second: usize, what: &str) -> Result<usize> {
    if first == second {
        Ok(first)
    } else {
        Err(Error::UnstableDimension(format!(
            "{what}: batches gave {first} and {second}"
        )))
    }
}

/// Minimum number of sampled constraints for the `g` system in float mode.
pub fn min_g_samples(m: usize) -> usize {
    m * m + 64
}

/// Dimension of `g`. Exact mode ignores `samples` and uses the full
/// coefficient system modulo two primes; float mode samples `samples`
/// integer points per batch.
pub fn g_kernel_dim(rep: &CliffordRep, samples: usize, seed: u64, mode: Mode) -> Result<KernelReport> {
    let m = rep.m();
    match mode {
        Mode::Exact => {
            let sys = g_system(rep);
            let a = sys.nullity_mod_p(PRIMES[0], seed);
            let b = sys.nullity_mod_p(PRIMES[1], seed ^ 0x9e37_79b9_7f4a_7c15);
            Ok(KernelReport {
                dimension: confirm(a, b, "g")?,
                unknowns: m * m,
                basis: None,
                method: "exact-modular",
                residual: None,
            })
        }
        Mode::Float => {
            if samples < min_g_samples(m) {
                return Err(Error::invalid(format!("need at least {} samples", min_g_samples(m))));
            }
            let batch = |b: u64| -> Result<FloatKernel> {
                let rows: Vec<Vec<f64>> = (0..samples)
                    .map(|t| {
                        let w: Vec<f64> = sampling::int_vector(&mut sampling::stream(seed, (b << 32) | t as u64), m, 9)
                            .into_iter()
                            .map(|v| v as f64)
                            .collect();
                        let g = g_vector(rep, &w);
                        unit((0..m * m).map(|idx| g[idx / m] * w[idx % m]).collect())
                    })
                    .collect();
                float_kernel(&rows, m * m)
            };
            let (k1, k2) = (batch(0)?, batch(1)?);
            Ok(KernelReport {
                dimension: confirm(k1.nullity, k2.nullity, "g")?,
                unknowns: m * m,
                basis: None,
                method: "float-svd",
                residual: Some(k1.residual.max(k2.residual)),
            })
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SharpReport {
    pub holds: bool,
    pub nullity: usize,
    /// `(p+q)(p+q-1)/2`, the dimension of the forced solutions.
    pub forced: usize,
    pub unknowns: usize,
    pub method: &'static str,
    pub residual: Option<f64>,
}

fn sym_index(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect()
}

/// Coefficient equations of `Σ_i S_i[w] X_i[w] ≡ 0` over symmetric `X_i`.
fn sharp_system(rep: &CliffordRep) -> SparseSystem {
    let m = rep.m();
    let pairs = sym_index(m);
    let per = pairs.len();
    let mut eqs: HashMap<Monomial, Vec<(usize, i64)>> = HashMap::new();
    for (i, s) in rep.basis().iter().enumerate() {
        for (a, b, c) in s.quad_terms() {
            for (u, &(x, y)) in pairs.iter().enumerate() {
                let mult = if x == y { 1 } else { 2 };
                eqs.entry(key(a, b, x, y)).or_default().push((i * per + u, c * mult));
            }
        }
    }
    into_system(eqs, rep.n() * per)
}

/// Tests condition (♯): the only symmetric solutions of `Σ S_i[w] X_i[w] ≡ 0`
/// are `X_i = Σ_j a_ij S_j` with `a` antisymmetric.
pub fn sharp_check(rep: &CliffordRep, seed: u64, mode: Mode) -> Result<SharpReport> {
    let m = rep.m();
    let n = rep.n();
    let pairs = sym_index(m);
    let unknowns = n * pairs.len();
    let forced = n * (n - 1) / 2;
    let (nullity, method, residual) = match mode {
        Mode::Exact => {
            let sys = sharp_system(rep);
            let a = sys.nullity_mod_p(PRIMES[0], seed);
            let b = sys.nullity_mod_p(PRIMES[1], seed ^ 0x9e37_79b9_7f4a_7c15);
            (confirm(a, b, "sharp")?, "exact-modular", None)
        }
        Mode::Float => {
            let samples = unknowns + 64;
            let batch = |bt: u64| -> Result<FloatKernel> {
                let rows: Vec<Vec<f64>> = (0..samples)
                    .map(|t| {
                        let w: Vec<f64> =
                            sampling::int_vector(&mut sampling::stream(seed, (bt << 32) | t as u64), m, 9)
                                .into_iter()
                                .map(|v| v as f64)
                                .collect();
                        let quads: Vec<f64> = rep.basis().iter().map(|s| s.quad_f64(&w)).collect();
                        let mut row = Vec::with_capacity(unknowns);
                        for qi in &quads {
                            for &(x, y) in &pairs {
                                let mult = if x == y { 1.0 } else { 2.0 };
                                row.push(qi * mult * w[x] * w[y]);
                            }
                        }
                        unit(row)
                    })
                    .collect();
                float_kernel(&rows, unknowns)
            };
            let (k1, k2) = (batch(0)?, batch(1)?);
            (
                confirm(k1.nullity, k2.nullity, "sharp")?,
                "float-svd",
                Some(k1.residual.max(k2.residual)),
            )
        }
    };
    Ok(SharpReport {
        holds: nullity == forced,
        nullity,
        forced,
        unknowns,
        method,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::rep_build;

    #[test]
    fn h_small_examples() {
        let r = h_kernel(&rep_build(1, 1, &[1, 0, 1, 0]).unwrap(), Mode::Exact).unwrap();
        assert_eq!(r.dimension, 0);
        let r = h_kernel(&rep_build(3, 2, &[1]).unwrap(), Mode::Exact).unwrap();
        assert_eq!(r.dimension, 3);
        let rep = rep_build(3, 2, &[2]).unwrap();
        let r = h_kernel(&rep, Mode::Exact).unwrap();
        assert_eq!(r.dimension, 10);
        for x in r.basis.unwrap() {
            assert!(in_h(&rep, &basis_dense(&x, 16)));
        }
    }

    #[test]
    fn h_float_agrees() {
        for (p, q, mults) in [(3, 2, vec![1]), (2, 1, vec![1, 1]), (4, 0, vec![1])] {
            let rep = rep_build(p, q, &mults).unwrap();
            let e = h_kernel(&rep, Mode::Exact).unwrap();
            let f = h_kernel(&rep, Mode::Float).unwrap();
            assert_eq!(e.dimension, f.dimension);
            assert!(f.residual.unwrap() < 1e-8);
        }
    }

    #[test]
    fn g_examples() {
        let rep = rep_build(3, 2, &[1]).unwrap();
        assert_eq!(g_kernel_dim(&rep, 0, 1, Mode::Exact).unwrap().dimension, 28);
        assert_eq!(g_kernel_dim(&rep, 200, 1, Mode::Float).unwrap().dimension, 28);
        assert!(so_pq_in_g(&rep));
    }

    #[test]
    fn sharp_examples() {
        let rep = rep_build(3, 2, &[1]).unwrap();
        assert!(!sharp_check(&rep, 1, Mode::Exact).unwrap().holds);
        let rep = rep_build(2, 0, &[1]).unwrap();
        let r = sharp_check(&rep, 1, Mode::Exact).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(sharp_check(&rep, 1, Mode::Float).unwrap().holds);
    }
}
