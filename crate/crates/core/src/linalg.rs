//! Exact linear algebra kernels: signed union-find for two-term systems,
//! block-decomposed modular rank for sparse integer systems, rational
//! inertia and determinants for small symmetric matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::sampling;

/// Union-find whose edges carry a sign: `x_u = s · x_v`.
#[derive(Clone, Debug)]
pub struct SignedUnionFind {
    parent: Vec<usize>,
    // sign of a node relative to its parent
    rel: Vec<i8>,
    // a component with an inconsistent cycle or a forced zero
    dead: Vec<bool>,
}

impl SignedUnionFind {
    pub fn new(n: usize) -> Self {
        SignedUnionFind {
            parent: (0..n).collect(),
            rel: vec![1; n],
            dead: vec![false; n],
        }
    }

    /// Root of `x` and the sign of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, i8) {
        let p = self.parent[x];
        if p == x {
            return (x, 1);
        }
        let (root, s) = self.find(p);
        self.parent[x] = root;
        self.rel[x] *= s;
        (root, self.rel[x])
    }

    /// Records `x_u = s · x_v`.
    pub fn relate(&mut self, u: usize, v: usize, s: i8) {
        let (ru, su) = self.find(u);
        let (rv, sv) = self.find(v);
        if ru == rv {
            // x_u = su·r, x_v = sv·r: consistent iff su = s·sv
            if su != s * sv {
                self.dead[ru] = true;
            }
            return;
        }
        // attach rv under ru: x_rv = t·x_ru with su·r_u = s·sv·t·r_u
        let t = su * s * sv;
        self.parent[rv] = ru;
        self.rel[rv] = t;
        self.dead[ru] |= self.dead[rv];
    }

    pub fn kill(&mut self, u: usize) {
        let (r, _) = self.find(u);
        self.dead[r] = true;
    }

    /// One `±1` vector per consistent component, indexed by member.
    pub fn free_components(&mut self) -> Vec<Vec<(usize, i8)>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<(usize, i8)>> = Default::default();
        for x in 0..n {
            let (r, s) = self.find(x);
            if !self.dead[r] {
                by_root.entry(r).or_default().push((x, s));
            }
        }
        by_root.into_values().collect()
    }
}

/// Plain union-find used to split sparse systems into independent blocks.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Primes below `2^31` used for modular ranks.
pub const PRIMES: [u64; 2] = [2_147_483_629, 2_147_483_587];

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn to_mod(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Rank of dense rows modulo `p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| x * inv % p).collect();
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f == 0 {
                continue;
            }
            let row = &mut rows[r];
            for c in col..ncols {
                if pivot_row[c] != 0 {
                    row[c] = (row[c] + p - f * pivot_row[c] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A sparse integer system `A x = 0` over `ncols` unknowns.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Adds a row after merging repeated columns and dropping zeros.
    pub fn push(&mut self, mut row: Vec<(usize, i64)>) {
        row.sort_unstable_by_key(|&(c, _)| c);
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|&(_, v)| v != 0);
        if !merged.is_empty() {
            self.rows.push(merged);
        }
    }

    /// Connected blocks of unknowns (shared rows link them) with their rows.
    pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut uf = UnionFind::new(self.ncols);
        for row in &self.rows {
            for w in row.windows(2) {
                uf.union(w[0].0, w[1].0);
            }
        }
        let mut cols: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for c in 0..self.ncols {
            cols.entry(uf.find(c)).or_default().push(c);
        }
        let mut rows: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (i, row) in self.rows.iter().enumerate() {
            rows.entry(uf.find(row[0].0)).or_default().push(i);
        }
        cols.into_iter()
            .map(|(root, cs)| (cs, rows.remove(&root).unwrap_or_default()))
            .collect()
    }

    /// Nullity modulo `p`, block by block. Blocks with many more rows than
    /// unknowns are first compressed to `cols + 16` random combinations of
    /// their rows (drawn from `seed`), which keeps the rank with probability
    /// at least `1 - cols/p`.
    pub fn nullity_mod_p(&self, p: u64, seed: u64) -> usize {
        self.blocks()
            .into_iter()
            .enumerate()
            .map(|(bi, (cols, rows))| {
                if rows.is_empty() {
                    return cols.len();
                }
                let local: std::collections::HashMap<usize, usize> =
                    cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
                let width = cols.len();
                let dense: Vec<Vec<u64>> = if rows.len() <= 2 * width + 16 {
                    rows.iter()
                        .map(|&r| {
                            let mut v = vec![0u64; width];
                            for &(c, x) in &self.rows[r] {
                                v[local[&c]] = to_mod(x, p);
                            }
                            v
                        })
                        .collect()
                } else {
                    let k = width + 16;
                    let mut out = vec![vec![0u64; width]; k];
                    let mut rng = sampling::stream(seed, bi as u64);
                    for &r in &rows {
                        let weights: Vec<u64> = (0..k).map(|_| rng.random_range(0..p)).collect();
                        for &(c, x) in &self.rows[r] {
                            let (lc, xm) = (local[&c], to_mod(x, p));
                            for (row, &wt) in out.iter_mut().zip(&weights) {
                                row[lc] = (row[lc] + wt * xm) % p;
                            }
                        }
                    }
                    out
                };
                width - rank_mod_p(dense, width, p)
            })
            .sum()
    }

    /// Largest block size, for reporting.
    pub fn largest_block(&self) -> usize {
        self.blocks().iter().map(|(c, _)| c.len()).max().unwrap_or(0)
    }
}

/// Signature `(n₊, n₋, n₀)` of a symmetric rational matrix by symmetric
/// Gaussian elimination, using 2×2 hyperbolic pivots when the diagonal vanishes.
pub fn inertia(mut a: Vec<Vec<BigRational>>) -> (usize, usize, usize) {
    let n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut alive: Vec<usize> = (0..n).collect();
    while let Some(&first) = alive.first() {
        if let Some(&k) = alive.iter().find(|&&k| !a[k][k].is_zero()) {
            let d = a[k][k].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            alive.retain(|&x| x != k);
            for &i in &alive {
                let f = &a[i][k] / &d;
                if f.is_zero() {
                    continue;
                }
                for &j in &alive {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
            continue;
        }
        // zero diagonal: find an off-diagonal partner or the row is null
        let Some(&l) = alive.iter().find(|&&l| !a[first][l].is_zero()) else {
            zero += 1;
            alive.retain(|&x| x != first);
            continue;
        };
        // replace row/column `first` by first + l, which has diagonal 2 a[first][l]
        let (k, l) = (first, l);
        for &j in &alive {
            let t = a[l][j].clone();
            a[k][j] += t;
        }
        for &i in &alive {
            let t = a[i][l].clone();
            a[i][k] += t;
        }
    }
    (pos, neg, zero)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_int(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}
