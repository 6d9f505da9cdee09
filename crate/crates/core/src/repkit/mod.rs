//! Representations of `R_{p,q}` with symmetric signed-permutation basis matrices.

mod canonical;
mod catalog;
mod io;
mod irreps;
mod purity;
mod verify;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::signed_perm::SignedPerm;

pub use canonical::{canonicalize, CanonicalForm};
pub use catalog::{irrep_catalog, AlgebraType, Field, IrrepCatalog};
pub use irreps::{irreducibles, pos_clifford_basis, Irrep};
pub use purity::{is_pure, pure_over_c};
pub use verify::{self_duality_points, verify_relations, CheckResult, RelationReport};

/// A representation given by its basis matrices `S_1..S_{p+q}`.
///
/// The first `p` generators carry sign `+1` in the quartic form, the last
/// `q` carry `-1`; all of them square to the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordRep {
    p: usize,
    q: usize,
    mults: Vec<usize>,
    m: usize,
    basis: Vec<SignedPerm>,
}

impl CliffordRep {
    /// Assembles a rep from parts, checking only shapes and symmetry; the
    /// algebraic relations are left to [`verify_relations`].
    pub fn from_parts(p: usize, q: usize, mults: Vec<usize>, basis: Vec<SignedPerm>) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::invalid("p + q must be at least 1"));
        }
        if basis.len() != p + q {
            return Err(Error::invalid(format!(
                "expected {} basis matrices, got {}",
                p + q,
                basis.len()
            )));
        }
        let m = basis[0].dim();
        if basis.iter().any(|s| s.dim() != m) {
            return Err(Error::invalid("basis matrices differ in size"));
        }
        if let Some(i) = basis.iter().position(|s| !s.is_symmetric()) {
            return Err(Error::invalid(format!("S_{} is not symmetric", i + 1)));
        }
        Ok(CliffordRep { p, q, mults, m, basis })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn basis(&self) -> &[SignedPerm] {
        &self.basis
    }

    /// `ε_i = +1` for `i < p`, `-1` otherwise (0-based).
    pub fn eps(&self, i: usize) -> i64 {
        if i < self.p {
            1
        } else {
            -1
        }
    }

    pub fn eps_vec(&self) -> Vec<i64> {
        (0..self.n()).map(|i| self.eps(i)).collect()
    }

    /// The same maps with the roles of `p` and `q` exchanged; the quartic
    /// form of the result is the negative of the original one.
    pub fn swapped(&self) -> Result<CliffordRep> {
        let mut basis = self.basis[self.p..].to_vec();
        basis.extend_from_slice(&self.basis[..self.p]);
        let ty = irrep_catalog(self.q, self.p)?.algebra_type;
        let mut mults = self.mults.clone();
        // Type V labels are (sign of S_1⋯S_p, sign of the rest); type IV uses the
        // full product, which picks up (-1)^{pq} = -1 under the reordering
        match ty {
            AlgebraType::V if mults.len() == 4 => mults.swap(2, 3),
            AlgebraType::IV if mults.len() == 2 => mults.swap(0, 1),
            _ => {}
        }
        CliffordRep::from_parts(self.q, self.p, mults, basis)
    }
}

/// Block-diagonal sum of `mults[k]` copies of the `k`-th irreducible.
pub fn rep_build(p: usize, q: usize, mults: &[usize]) -> Result<CliffordRep> {
    let cat = irrep_catalog(p, q)?;
    if p < q {
        return Err(Error::invalid(format!(
            "p >= q is required (got ({p},{q})); build ({q},{p}) and swap"
        )));
    }
    if mults.len() != cat.count {
        return Err(Error::invalid(format!(
            "R_{{{p},{q}}} has {} irreducibles, got {} multiplicities",
            cat.count,
            mults.len()
        )));
    }
    if mults.iter().all(|&k| k == 0) {
        return Err(Error::invalid("all multiplicities are zero"));
    }
    let irreps = irreducibles(p, q)?;
    let basis = (0..p + q)
        .map(|i| {
            let blocks: Vec<SignedPerm> = irreps
                .iter()
                .zip(mults)
                .flat_map(|(ir, &k)| std::iter::repeat_n(ir.basis[i].clone(), k))
                .collect();
            SignedPerm::direct_sum(&blocks)
        })
        .collect();
    let rep = CliffordRep::from_parts(p, q, mults.to_vec(), basis)?;
    debug_assert_eq!(rep.m, cat.dim * mults.iter().sum::<usize>());
    Ok(rep)
}

/// All multiplicity vectors for `(p,q)` with `1 ≤ Σ ≤ max_total` and `m ≤ max_m`.
pub fn multiplicity_vectors(p: usize, q: usize, max_total: usize, max_m: usize) -> Result<Vec<Vec<usize>>> {
    let cat = irrep_catalog(p, q)?;
    let mut out = Vec::new();
    let mut cur = vec![0usize; cat.count];
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            if cur.iter().sum::<usize>() > 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left {
            cur[k] = v;
            rec(k + 1, left - v, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, max_total, &mut cur, &mut out);
    out.retain(|mv| mv.iter().sum::<usize>() * cat.dim <= max_m);
    out.sort_by_key(|mv| (mv.iter().sum::<usize>(), std::cmp::Reverse(mv.clone())));
    Ok(out)
}

/// `(p, q, mults)` with `p ≥ q`, `lo ≤ p+q ≤ hi`, `Σmults ≤ max_total`, `m ≤ max_m`.
pub fn enumerate_cases(lo: usize, hi: usize, max_total: usize, max_m: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for n in lo.max(1)..=hi {
        for q in 0..=n / 2 {
            let p = n - q;
            if let Ok(vs) = multiplicity_vectors(p, q, max_total, max_m) {
                out.extend(vs.into_iter().map(|v| (p, q, v)));
            }
        }
    }
    out
}

pub use io::{rep_from_json, rep_from_text, rep_to_json, rep_to_text, RepFile};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_one_example() {
        let rep = rep_build(1, 1, &[1, 0, 1, 0]).unwrap();
        assert_eq!(rep.m(), 2);
        assert_eq!(rep.basis()[0].to_dense(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(rep.basis()[1].to_dense(), vec![vec![1, 0], vec![0, -1]]);
    }

    #[test]
    fn sizes() {
        assert_eq!(rep_build(2, 2, &[1]).unwrap().m(), 4);
        assert_eq!(rep_build(3, 2, &[2]).unwrap().m(), 16);
        assert_eq!(rep_build(9, 1, &[1, 0, 0, 0]).unwrap().m(), 16);
    }

    #[test]
    fn bad_multiplicities() {
        assert!(rep_build(2, 2, &[1, 1]).is_err());
        assert!(rep_build(1, 1, &[0, 0, 0, 0]).is_err());
        assert!(rep_build(1, 2, &[1, 0]).is_err());
    }

    #[test]
    fn multiplicity_enumeration() {
        let vs = multiplicity_vectors(1, 1, 2, 32).unwrap();
        // 4 unit vectors and 10 vectors of total 2
        assert_eq!(vs.len(), 14);
        assert_eq!(vs[0], vec![1, 0, 0, 0]);
        let vs = multiplicity_vectors(3, 2, 2, 8).unwrap();
        assert_eq!(vs, vec![vec![1]]);
    }

    #[test]
    fn swap_negates_roles() {
        let rep = rep_build(1, 1, &[1, 0, 1, 0]).unwrap();
        let sw = rep.swapped().unwrap();
        assert_eq!(sw.basis()[0], rep.basis()[1]);
        assert_eq!(sw.mults(), &[1, 0, 0, 1]);
    }
}
