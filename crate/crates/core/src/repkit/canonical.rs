use serde::Serialize;

use crate::error::{Error, Result};
use crate::signed_perm::SignedPerm;

use super::CliffordRep;

/// A rep conjugated into the block shape
/// `S_1 = diag(1_d, -1_d)`, `S_i = [[0, B_i], [ᵀB_i, 0]]`, `S_{p+j} = diag(A_j, A_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    pub rep: CliffordRep,
    pub d: usize,
    /// `B_2, …, B_p`; `B_2` is the identity.
    pub b_blocks: Vec<SignedPerm>,
    /// `A_1, …, A_q`.
    pub a_blocks: Vec<SignedPerm>,
    /// New basis vectors as integer columns of the conjugating matrix before
    /// normalization; column `k` has squared norm `norms[k]`.
    pub columns: Vec<Vec<(usize, i8)>>,
    pub norms: Vec<usize>,
}

/// The `±1` orbit eigenvectors of a symmetric signed involution for eigenvalue `lambda`,
/// ordered by their smallest index.
fn eigenvectors(s: &SignedPerm, lambda: i8) -> Vec<Vec<(usize, i8)>> {
    let mut out = Vec::new();
    for a in 0..s.dim() {
        let (b, sg) = s.col(a);
        if b == a {
            if sg == lambda {
                out.push(vec![(a, 1)]);
            }
        } else if a < b {
            // S e_a = sg e_b, S e_b = sg e_a, so e_a + λ sg e_b has eigenvalue λ
            out.push(vec![(a, 1), (b, lambda * sg)]);
        }
    }
    out
}

fn image(s: &SignedPerm, v: &[(usize, i8)]) -> Vec<(usize, i8)> {
    let mut out: Vec<(usize, i8)> = v
        .iter()
        .map(|&(j, c)| {
            let (r, sg) = s.col(j);
            (r, c * sg)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Conjugates `rep` by an orthogonal matrix whose columns are `±1` eigenvector
/// combinations of `S_1`, so that the result is again a signed-permutation rep
/// of the block shape above. Applying it twice changes nothing.
pub fn canonicalize(rep: &CliffordRep) -> Result<CanonicalForm> {
    let p = rep.p();
    if p < 2 {
        return Err(Error::unsupported("the block form needs p >= 2"));
    }
    let s = rep.basis();
    let plus = eigenvectors(&s[0], 1);
    let minus_count = eigenvectors(&s[0], -1).len();
    if plus.len() != minus_count {
        return Err(Error::invalid("S_1 does not have signature (d,d)"));
    }
    let d = plus.len();
    let minus: Vec<Vec<(usize, i8)>> = plus.iter().map(|u| image(&s[1], u)).collect();
    let columns: Vec<Vec<(usize, i8)>> = plus.into_iter().chain(minus).collect();
    let basis: Vec<SignedPerm> = s
        .iter()
        .map(|si| {
            si.restrict(&columns)
                .ok_or_else(|| Error::invalid("basis does not permute the eigenvectors of S_1"))
        })
        .collect::<Result<_>>()?;

    let block = |m: &SignedPerm, rows: usize, cols: usize| -> Result<SignedPerm> {
        let dense: Vec<Vec<i64>> = (0..d)
            .map(|r| (0..d).map(|c| m.entry(rows + r, cols + c)).collect())
            .collect();
        SignedPerm::from_dense(&dense)
    };
    let b_blocks = basis[1..p].iter().map(|m| block(m, 0, d)).collect::<Result<Vec<_>>>()?;
    let a_blocks = basis[p..].iter().map(|m| block(m, 0, 0)).collect::<Result<Vec<_>>>()?;
    let norms = columns.iter().map(|c| c.len()).collect();
    Ok(CanonicalForm {
        rep: CliffordRep::from_parts(p, rep.q(), rep.mults().to_vec(), basis)?,
        d,
        b_blocks,
        a_blocks,
        columns,
        norms,
    })
}
