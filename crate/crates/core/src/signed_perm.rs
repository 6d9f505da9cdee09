//! Signed permutation matrices.
//!
//! Every basis matrix in this crate has exactly one nonzero entry, `±1`, in
//! each row and column. Storing the column images keeps products, transposes
//! and quadratic forms exact and linear in the dimension.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Column `j` has its single nonzero entry `sign[j]` in row `perm[j]`,
/// so `M e_j = sign[j] e_{perm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPerm {
    perm: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    pub fn new(perm: Vec<usize>, sign: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if sign.len() != n {
            return Err(Error::invalid("perm and sign lengths differ"));
        }
        let mut seen = vec![false; n];
        for &r in &perm {
            if r >= n || seen[r] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[r] = true;
        }
        if sign.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::invalid("signs must be +1 or -1"));
        }
        Ok(SignedPerm { perm, sign })
    }

    /// Reads a dense integer matrix, rejecting anything that is not a signed permutation.
    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix is not square"));
        }
        let mut perm = vec![usize::MAX; n];
        let mut sign = vec![0i8; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 | -1 => {
                        if perm[j] != usize::MAX {
                            return Err(Error::invalid(format!("column {j} has more than one nonzero entry")));
                        }
                        perm[j] = i;
                        sign[j] = v as i8;
                    }
                    _ => return Err(Error::invalid(format!("entry ({i},{j}) = {v} is not in {{-1,0,1}}"))),
                }
            }
        }
        if perm.contains(&usize::MAX) {
            return Err(Error::invalid("a column is zero"));
        }
        SignedPerm::new(perm, sign)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut out = vec![vec![0i64; n]; n];
        for j in 0..n {
            out[self.perm[j]][j] = self.sign[j] as i64;
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// `(row, sign)` of the nonzero entry in column `j`.
    #[inline]
    pub fn col(&self, j: usize) -> (usize, i8) {
        (self.perm[j], self.sign[j])
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        if self.perm[c] == r {
            self.sign[c] as i64
        } else {
            0
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let (perm, sign) = (0..other.dim())
            .map(|j| {
                let (k, s1) = other.col(j);
                let (r, s2) = self.col(k);
                (r, s1 * s2)
            })
            .unzip();
        SignedPerm { perm, sign }
    }

    pub fn transpose(&self) -> SignedPerm {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut sign = vec![0; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            sign[self.perm[j]] = self.sign[j];
        }
        SignedPerm { perm, sign }
    }

    pub fn neg(&self) -> SignedPerm {
        SignedPerm {
            perm: self.perm.clone(),
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim()).all(|j| {
            let (r, s) = self.col(j);
            self.perm[r] == j && self.sign[r] == s
        })
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &r)| r == j) && self.sign.iter().all(|&s| s == 1)
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim())
            .filter(|&j| self.perm[j] == j)
            .map(|j| self.sign[j] as i64)
            .sum()
    }

    /// Determinant: sign of the permutation times the product of the signs.
    pub fn det(&self) -> i8 {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut det: i8 = self.sign.iter().product();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                det = -det;
            }
        }
        det
    }

    /// Kronecker product `a ⊗ b`; `a` acts on the high-order index.
    pub fn kron(a: &SignedPerm, b: &SignedPerm) -> SignedPerm {
        let (na, nb) = (a.dim(), b.dim());
        let mut perm = Vec::with_capacity(na * nb);
        let mut sign = Vec::with_capacity(na * nb);
        for ja in 0..na {
            let (ra, sa) = a.col(ja);
            for jb in 0..nb {
                let (rb, sb) = b.col(jb);
                perm.push(ra * nb + rb);
                sign.push(sa * sb);
            }
        }
        SignedPerm { perm, sign }
    }

    pub fn direct_sum(blocks: &[SignedPerm]) -> SignedPerm {
        let mut perm = Vec::new();
        let mut sign = Vec::new();
        let mut off = 0;
        for b in blocks {
            perm.extend(b.perm.iter().map(|r| r + off));
            sign.extend_from_slice(&b.sign);
            off += b.dim();
        }
        SignedPerm { perm, sign }
    }

    /// `M w` over any ring with a negation.
    pub fn apply<T>(&self, w: &[T]) -> Vec<T>
    where
        T: Clone + Default + std::ops::Neg<Output = T> + std::ops::AddAssign,
    {
        assert_eq!(w.len(), self.dim(), "vector length mismatch");
        let mut out = vec![T::default(); w.len()];
        for (j, wj) in w.iter().enumerate() {
            let (r, s) = self.col(j);
            if s > 0 {
                out[r] += wj.clone();
            } else {
                out[r] += -wj.clone();
            }
        }
        out
    }

    /// Upper-triangular term list of the quadratic form `ᵀw M w`:
    /// `(a, b, c)` with `a ≤ b` contributes `c · w_a w_b`.
    pub fn quad_terms(&self) -> Vec<(usize, usize, i64)> {
        let mut acc = std::collections::BTreeMap::<(usize, usize), i64>::new();
        for j in 0..self.dim() {
            let (r, s) = self.col(j);
            *acc.entry((r.min(j), r.max(j))).or_insert(0) += s as i64;
        }
        acc.into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|((a, b), c)| (a, b, c))
            .collect()
    }

    /// `ᵀw M w` for integer `w`.
    pub fn quad_i128(&self, w: &[i128]) -> i128 {
        (0..self.dim())
            .map(|j| {
                let (r, s) = self.col(j);
                s as i128 * w[r] * w[j]
            })
            .sum()
    }

    pub fn quad_f64(&self, w: &[f64]) -> f64 {
        (0..self.dim())
            .map(|j| {
                let (r, s) = self.col(j);
                s as f64 * w[r] * w[j]
            })
            .sum()
    }

    /// Matrix of `self` in an orthogonal basis of `±1`-coefficient vectors
    /// (sparse `(index, coefficient)` lists), provided every image `M u_k` is
    /// `±` another basis vector.
    pub(crate) fn restrict(&self, vectors: &[Vec<(usize, i8)>]) -> Option<SignedPerm> {
        fn normalize(mut v: Vec<(usize, i8)>) -> (Vec<(usize, i8)>, i8) {
            v.sort_unstable();
            let s = v.first().map_or(1, |&(_, c)| c);
            (v.into_iter().map(|(i, c)| (i, c * s)).collect(), s)
        }
        let index: std::collections::HashMap<Vec<(usize, i8)>, (usize, i8)> = vectors
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let (key, s) = normalize(v.clone());
                (key, (k, s))
            })
            .collect();
        let mut perm = Vec::with_capacity(vectors.len());
        let mut sign = Vec::with_capacity(vectors.len());
        for v in vectors {
            let img: Vec<(usize, i8)> = v
                .iter()
                .map(|&(j, c)| {
                    let (r, t) = self.col(j);
                    (r, c * t)
                })
                .collect();
            let (key, s) = normalize(img);
            let &(k, sk) = index.get(&key)?;
            perm.push(k);
            sign.push(s * sk);
        }
        SignedPerm::new(perm, sign).ok()
    }
}
