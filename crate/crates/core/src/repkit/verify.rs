use std::collections::BTreeMap;

use serde::Serialize;

use super::{irrep_catalog, CliffordRep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub failures: usize,
    pub tested: usize,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub checks: Vec<CheckResult>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    name: &'static str,
    failures: usize,
    tested: usize,
    detail: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            failures: 0,
            tested: 0,
            detail: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.failures == 0,
            failures: self.failures,
            tested: self.tested,
            detail: self.detail,
        }
    }
}

/// Deterministic integer points with at most two nonzero coordinates in
/// `{-1, 1, 2}`: all `e_i`, then all `e_i + e_j`, then the remaining lattice
/// points; `n(n+1)/2 + 8` of them (fewer if the lattice runs out).
pub fn self_duality_points(n: usize) -> Vec<Vec<i64>> {
    let want = n * (n + 1) / 2 + 8;
    let unit = |i: usize, a: i64| {
        let mut v = vec![0i64; n];
        v[i] = a;
        v
    };
    let mut pts: Vec<Vec<i64>> = (0..n).map(|i| unit(i, 1)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = unit(i, 1);
            v[j] = 1;
            pts.push(v);
        }
    }
    const VALS: [i64; 3] = [-1, 1, 2];
    for i in 0..n {
        for &a in &VALS {
            let v = unit(i, a);
            if !pts.contains(&v) {
                pts.push(v);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for &a in &VALS {
                for &b in &VALS {
                    let mut v = unit(i, a);
                    v[j] = b;
                    if !pts.contains(&v) {
                        pts.push(v);
                    }
                }
            }
        }
        if pts.len() >= want {
            break;
        }
    }
    pts.truncate(want);
    pts
}

/// Checks every defining relation exactly and reports each with pass/fail.
///
/// Self-duality is tested in the form `S(v) S(εv) = P(v)·1` with
/// `(εv)_i = ε_i v_i`, which is what the relations imply when `q > 0`.
pub fn verify_relations(rep: &CliffordRep) -> RelationReport {
    let (p, n, m) = (rep.p(), rep.n(), rep.m());
    let s = rep.basis();
    let mut checks = Vec::new();

    let mut sym = Tally::new("symmetric_signed_permutation");
    for (i, si) in s.iter().enumerate() {
        sym.record(si.is_symmetric() && si.dim() == m, || {
            format!("S_{} is not symmetric", i + 1)
        });
    }
    checks.push(sym.finish());

    let mut inv = Tally::new("involution");
    for (i, si) in s.iter().enumerate() {
        inv.record(si.mul(si).is_identity(), || format!("S_{}^2 != 1", i + 1));
    }
    checks.push(inv.finish());

    let mut anti = Tally::new("anticommute_within_factor");
    let mut comm = Tally::new("commute_across_factors");
    for i in 0..n {
        for j in i + 1..n {
            let ij = s[i].mul(&s[j]);
            let ji = s[j].mul(&s[i]);
            if (i < p) == (j < p) {
                anti.record(ij == ji.neg(), || {
                    format!("S_{} S_{} != -S_{} S_{}", i + 1, j + 1, j + 1, i + 1)
                });
            } else {
                comm.record(ij == ji, || {
                    format!("S_{} S_{} != S_{} S_{}", i + 1, j + 1, j + 1, i + 1)
                });
            }
        }
    }
    checks.push(anti.finish());
    checks.push(comm.finish());

    let eps = rep.eps_vec();
    let mut dual = Tally::new("self_duality");
    for v in self_duality_points(n) {
        let pv: i64 = v.iter().zip(&eps).map(|(a, e)| e * a * a).sum();
        let mut ok = true;
        'cols: for j in 0..m {
            // S(εv) e_j, then S(v) applied to it
            let mut col: BTreeMap<usize, i64> = BTreeMap::new();
            for i in 0..n {
                if v[i] != 0 {
                    let (r, sg) = s[i].col(j);
                    *col.entry(r).or_insert(0) += eps[i] * v[i] * sg as i64;
                }
            }
            let mut out: BTreeMap<usize, i64> = BTreeMap::new();
            for (&k, &c) in &col {
                for i in 0..n {
                    if v[i] != 0 {
                        let (r, sg) = s[i].col(k);
                        *out.entry(r).or_insert(0) += v[i] * c * sg as i64;
                    }
                }
            }
            for (&r, &c) in &out {
                let expect = if r == j { pv } else { 0 };
                if c != expect {
                    ok = false;
                    break 'cols;
                }
            }
            if pv != 0 && out.get(&j).copied().unwrap_or(0) != pv {
                ok = false;
                break;
            }
        }
        dual.record(ok, || format!("S(v) S(eps v) != P(v) at v = {v:?}"));
    }
    checks.push(dual.finish());

    let mut dim = Tally::new("dimension");
    match irrep_catalog(rep.p(), rep.q()) {
        Ok(cat) => {
            let mults = rep.mults();
            dim.record(mults.len() == cat.count, || {
                format!("{} multiplicities for {} irreducibles", mults.len(), cat.count)
            });
            let total = mults.iter().sum::<usize>() * cat.dim;
            dim.record(total == m, || format!("m = {m} but multiplicities give {total}"));
        }
        Err(e) => dim.record(false, || e.to_string()),
    }
    checks.push(dim.finish());

    RelationReport {
        p: rep.p(),
        q: rep.q(),
        m,
        checks,
    }
}
