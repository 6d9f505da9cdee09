//! Predicted dimensions of `h` and `g` from the structure of `R_{p,q}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quartic::expected_degenerate;
use crate::repkit::{irrep_catalog, is_pure, pure_over_c};

/// The real reductive Lie algebra `h_{p,q}(ρ)`, by `{p mod 8, q mod 8}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HAlgebra {
    SoC,
    SpR,
    SoStar,
    SpC,
    GlR,
    GlH,
    SoPair,
    UPair,
    SpPair,
    SpRSum,
    SoStarSum,
    SoPairSum,
    SpPairSum,
}

const H_TABLE: [(HAlgebra, &[(usize, usize)]); 13] = [
    (HAlgebra::SoC, &[(0, 2), (4, 6)]),
    (HAlgebra::SpR, &[(0, 7), (2, 3), (3, 4), (6, 7)]),
    (HAlgebra::SoStar, &[(0, 3), (2, 7), (3, 6), (4, 7)]),
    (HAlgebra::SpC, &[(0, 6), (2, 4)]),
    (HAlgebra::GlR, &[(0, 0), (2, 2), (4, 4), (6, 6)]),
    (HAlgebra::GlH, &[(0, 4), (2, 6)]),
    (HAlgebra::SoPair, &[(0, 1), (1, 2), (4, 5), (5, 6)]),
    (HAlgebra::UPair, &[(1, 3), (1, 7), (3, 5), (5, 7)]),
    (HAlgebra::SpPair, &[(0, 5), (1, 4), (1, 6), (2, 5)]),
    (HAlgebra::SpRSum, &[(3, 3), (7, 7)]),
    (HAlgebra::SoStarSum, &[(3, 7)]),
    (HAlgebra::SoPairSum, &[(1, 1), (5, 5)]),
    (HAlgebra::SpPairSum, &[(1, 5)]),
];

impl HAlgebra {
    pub fn for_pq(p: usize, q: usize) -> HAlgebra {
        let key = ((p % 8).min(q % 8), (p % 8).max(q % 8));
        H_TABLE
            .iter()
            .find(|(_, keys)| keys.contains(&key))
            .map(|(a, _)| *a)
            .expect("all residue pairs are listed")
    }

    /// Number of multiplicities the algebra depends on.
    pub fn arity(self) -> usize {
        use HAlgebra::*;
        match self {
            SoC | SpR | SoStar | SpC | GlR | GlH => 1,
            SoPair | UPair | SpPair | SpRSum | SoStarSum => 2,
            SoPairSum | SpPairSum => 4,
        }
    }

    pub fn name(self, k: &[usize]) -> String {
        use HAlgebra::*;
        match self {
            SoC => format!("so({},C)", k[0]),
            SpR => format!("sp({},R)", k[0]),
            SoStar => format!("so*({})", 2 * k[0]),
            SpC => format!("sp({},C)", k[0]),
            GlR => format!("gl({},R)", k[0]),
            GlH => format!("gl({},H)", k[0]),
            SoPair => format!("so({},{})", k[0], k[1]),
            UPair => format!("u({},{})", k[0], k[1]),
            SpPair => format!("sp({},{})", k[0], k[1]),
            SpRSum => format!("sp({},R)+sp({},R)", k[0], k[1]),
            SoStarSum => format!("so*({})+so*({})", 2 * k[0], 2 * k[1]),
            SoPairSum => format!("so({},{})+so({},{})", k[0], k[1], k[2], k[3]),
            SpPairSum => format!("sp({},{})+sp({},{})", k[0], k[1], k[2], k[3]),
        }
    }

    /// Real dimension at multiplicities `k`.
    pub fn dim(self, k: &[usize]) -> usize {
        use HAlgebra::*;
        let so = |n: usize| n * n.saturating_sub(1) / 2;
        let sp = |n: usize| n * (2 * n + 1);
        let so_star = |n: usize| n * (2 * n).saturating_sub(1);
        match self {
            SoC => 2 * so(k[0]),
            SpR => sp(k[0]),
            SoStar => so_star(k[0]),
            SpC => 2 * sp(k[0]),
            GlR => k[0] * k[0],
            GlH => 4 * k[0] * k[0],
            SoPair => so(k[0] + k[1]),
            UPair => (k[0] + k[1]).pow(2),
            SpPair => sp(k[0] + k[1]),
            SpRSum => sp(k[0]) + sp(k[1]),
            SoStarSum => so_star(k[0]) + so_star(k[1]),
            SoPairSum => so(k[0] + k[1]) + so(k[2] + k[3]),
            SpPairSum => sp(k[0] + k[1]) + sp(k[2] + k[3]),
        }
    }
}

pub fn h_algebra_dim(p: usize, q: usize, mults: &[usize]) -> usize {
    HAlgebra::for_pq(p, q).dim(mults)
}

/// `dim so(p,q) + dim h`.
pub fn g_prime_dim(p: usize, q: usize, mults: &[usize]) -> usize {
    let n = p + q;
    n * (n - 1) / 2 + h_algebra_dim(p, q, mults)
}

/// Degrees `m` at which `g` may exceed `so(p,q) ⊕ h`, by `p+q` (3 to 11);
/// `p+q = 2` is governed by purity instead.
const EXCEPTIONAL_M: [(usize, &[usize]); 9] = [
    (3, &[2, 4]),
    (4, &[4, 8]),
    (5, &[8]),
    (6, &[8, 16]),
    (7, &[16]),
    (8, &[16]),
    (9, &[16]),
    (10, &[16, 32]),
    (11, &[32]),
];

/// Whether `(p+q, m)` is in the low-dimensional exception table. For
/// `p+q = 2` the entry is "pure", read as the pure `(1,1)` representations.
pub fn table_exceptional(p: usize, q: usize, mults: &[usize], m: usize) -> bool {
    let n = p + q;
    if n == 2 {
        return (p, q) == (1, 1) && is_pure(p, q, mults).unwrap_or(false);
    }
    EXCEPTIONAL_M.iter().any(|(k, ms)| *k == n && ms.contains(&m))
}

/// Expected outcome of condition (♯): it fails exactly on the exception table,
/// except that a pure `(1,1)` representation of degree 1 satisfies it (the
/// unknowns are scalars and only the forced solutions exist).
pub fn sharp_expected(p: usize, q: usize, mults: &[usize], m: usize) -> bool {
    if p + q == 2 && m == 1 {
        return true;
    }
    !table_exceptional(p, q, mults, m)
}

/// Real dimension of `g` in the nondegenerate exceptional cases where it is
/// identified; for `p+q ∈ {6, 10}` the value depends on purity over `ℂ` and is
/// the complex dimension of the stated complexification.
pub fn exceptional_g_dim(p: usize, q: usize, m: usize, pure_c: Option<bool>) -> Option<usize> {
    let (p, q) = (p.max(q), p.min(q));
    match (p + q, m) {
        (3, 4) => Some(6),
        (4, 8) => Some(13),
        (5, 8) => Some(28),
        (6, 16) => pure_c.map(|pure| if pure { 30 } else { 22 }),
        (7, 16) => Some(31),
        (8, 16) if (p, q) != (6, 2) => Some(57),
        (9, 16) => Some(120),
        (10, 32) => pure_c.map(|pure| if pure { 48 } else { 46 }),
        (11, 32) => Some(66),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryPrediction {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub mults: Vec<usize>,
    pub h_algebra: String,
    pub h_dim: usize,
    pub so_dim: usize,
    /// `dim so(p,q) + dim h`.
    pub g_prime_dim: usize,
    pub degenerate: bool,
    pub exceptional: bool,
    /// Expected `dim g`: `m²` when the form vanishes, `g_prime_dim` when generic,
    /// the identified value when exceptional, `None` when not identified.
    pub g_dim: Option<usize>,
    pub pure_over_c: Option<bool>,
    pub note: Option<String>,
}

pub fn predict(p: usize, q: usize, mults: &[usize]) -> Result<SymmetryPrediction> {
    let cat = irrep_catalog(p, q)?;
    let alg = HAlgebra::for_pq(p, q);
    if mults.len() != cat.count || alg.arity() != cat.count {
        return Err(Error::invalid(format!(
            "({p},{q}) takes {} multiplicities, got {}",
            cat.count,
            mults.len()
        )));
    }
    let m = cat.dim * mults.iter().sum::<usize>();
    let n = p + q;
    let h_dim = alg.dim(mults);
    let so_dim = n * (n - 1) / 2;
    let degenerate = expected_degenerate(p, q, m, mults);
    let exceptional = !degenerate && table_exceptional(p, q, mults, m);
    let pure_c = pure_over_c(p, q, mults)?;
    let mut note = None;
    let g_dim = if degenerate {
        Some(m * m)
    } else if exceptional {
        let g = exceptional_g_dim(p, q, m, pure_c);
        if matches!(n, 6 | 10) {
            note = Some("dimension taken from the complexification".to_string());
        }
        if g.is_none() {
            note = Some("g not identified for this case".to_string());
        }
        g
    } else {
        Some(so_dim + h_dim)
    };
    Ok(SymmetryPrediction {
        p,
        q,
        m,
        mults: mults.to_vec(),
        h_algebra: alg.name(mults),
        h_dim,
        so_dim,
        g_prime_dim: so_dim + h_dim,
        degenerate,
        exceptional,
        g_dim,
        pure_over_c: pure_c,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::irrep_catalog;

    #[test]
    fn table_covers_all_residues_once() {
        for a in 0..8 {
            for b in a..8 {
                let hits = H_TABLE.iter().filter(|(_, k)| k.contains(&(a, b))).count();
                assert_eq!(hits, 1);
            }
        }
    }

    #[test]
    fn arity_matches_irreducible_count() {
        for p in 0..8 {
            for q in 0..=p {
                if p + q == 0 {
                    continue;
                }
                let cat = irrep_catalog(p, q).unwrap();
                assert_eq!(HAlgebra::for_pq(p, q).arity(), cat.count, "({p},{q})");
            }
        }
    }

    #[test]
    fn examples() {
        let r = predict(3, 2, &[2]).unwrap();
        assert_eq!(
            (r.h_algebra.as_str(), r.h_dim, r.g_dim, r.exceptional),
            ("sp(2,R)", 10, Some(20), false)
        );
        let r = predict(9, 0, &[1, 0]).unwrap();
        assert!(r.exceptional);
        assert_eq!(r.g_dim, Some(120));
        let r = predict(9, 1, &[1, 0, 0, 0]).unwrap();
        assert_eq!(r.m, 16);
        assert!(r.degenerate && !r.exceptional);
        assert_eq!(predict(1, 1, &[1, 0, 1, 0]).unwrap().h_dim, 0);
        assert_eq!(predict(2, 0, &[1]).unwrap().exceptional, false);
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(HAlgebra::SoStar.dim(&[2]), 6);
        assert_eq!(HAlgebra::SpC.dim(&[1]), 6);
        assert_eq!(HAlgebra::UPair.dim(&[1, 1]), 4);
        assert_eq!(HAlgebra::SoPairSum.dim(&[1, 0, 1, 0]), 0);
        assert_eq!(HAlgebra::GlH.dim(&[2]), 16);
    }
}
