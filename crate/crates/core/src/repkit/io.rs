//! JSON and plain-text rep files.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed_perm::SignedPerm;

use super::CliffordRep;

/// On-disk shape: dense row-major integer matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    pub p: usize,
    pub q: usize,
    pub mults: Vec<usize>,
    pub m: usize,
    pub basis: Vec<Vec<Vec<i64>>>,
}

impl From<&CliffordRep> for RepFile {
    fn from(rep: &CliffordRep) -> Self {
        RepFile {
            p: rep.p(),
            q: rep.q(),
            mults: rep.mults().to_vec(),
            m: rep.m(),
            basis: rep.basis().iter().map(SignedPerm::to_dense).collect(),
        }
    }
}

impl TryFrom<RepFile> for CliffordRep {
    type Error = Error;

    fn try_from(f: RepFile) -> Result<Self> {
        let basis = f
            .basis
            .iter()
            .map(|m| SignedPerm::from_dense(m))
            .collect::<Result<Vec<_>>>()?;
        let rep = CliffordRep::from_parts(f.p, f.q, f.mults, basis)?;
        if rep.m() != f.m {
            return Err(Error::invalid(format!(
                "declared m = {} but matrices are {}x{}",
                f.m,
                rep.m(),
                rep.m()
            )));
        }
        Ok(rep)
    }
}

pub fn rep_to_json(rep: &CliffordRep) -> String {
    serde_json::to_string(&RepFile::from(rep)).expect("rep files always serialize")
}

pub fn rep_from_json(text: &str) -> Result<CliffordRep> {
    let f: RepFile = serde_json::from_str(text)?;
    f.try_into()
}

/// `m` on the first line, then each matrix as `m` rows, matrices separated by blank lines.
pub fn rep_to_text(rep: &CliffordRep) -> String {
    let mut out = format!("{}\n", rep.m());
    for (k, s) in rep.basis().iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for row in s.to_dense() {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// The text format carries no `(p, q, mults)`, so the caller supplies them.
pub fn rep_from_text(text: &str, p: usize, q: usize, mults: Vec<usize>) -> Result<CliffordRep> {
    let mut lines = text.lines().map(str::trim);
    let m: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty rep file".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad dimension line: {e}")))?;
    let rows: Vec<Vec<i64>> = lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if m == 0 || rows.len() % m != 0 {
        return Err(Error::Parse(format!(
            "{} rows do not split into {m}x{m} matrices",
            rows.len()
        )));
    }
    let basis = rows.chunks(m).map(SignedPerm::from_dense).collect::<Result<Vec<_>>>()?;
    CliffordRep::from_parts(p, q, mults, basis)
}
