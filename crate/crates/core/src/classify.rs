//! Verdicts for a representation: whether the quartic vanishes, is a square,
//! has extra symmetries, and is the relative invariant of a prehomogeneous
//! vector space (with the space when it is).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quartic::{expected_degenerate, expected_square};
use crate::repkit::{irrep_catalog, pure_over_c};
use crate::symlie::table_exceptional;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Degenerate,
    Exceptional,
    Generic,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub mults: Vec<usize>,
    pub kind: Verdict,
    /// Kind and prehomogeneity in words, e.g. "generic, not prehomogeneous".
    pub verdict: String,
    pub degenerate: bool,
    pub square_of_quadratic: bool,
    pub exceptional: bool,
    pub generic: bool,
    pub prehomogeneous: bool,
    pub pv_entry: Option<&'static str>,
    /// `None` when `p + q` is odd.
    #[serde(rename = "pure_over_C")]
    pub pure_over_c: Option<bool>,
    /// One plain-language sentence per decision.
    pub reasons: Vec<String>,
}

impl ClassificationReport {
    fn summary(&self) -> String {
        let kind = match self.kind {
            Verdict::Degenerate => "degenerate",
            Verdict::Exceptional => "exceptional",
            Verdict::Generic => "generic",
        };
        let pv = if self.prehomogeneous {
            "prehomogeneous"
        } else {
            "not prehomogeneous"
        };
        format!("{kind}, {pv}")
    }
}

/// Side condition of a prehomogeneous row, in terms of `m`, the
/// multiplicities and purity over `ℂ`.
#[derive(Clone, Copy, Debug)]
enum Side {
    Any,
    /// The quartic does not vanish (`(1,1)` not pure).
    Nondegenerate,
    MinDegree(usize),
    Degree(usize),
    DegreePureOverC(usize),
    /// All weight on one pair of irreducibles sharing their even-part
    /// restriction, at least two copies.
    OnePairAtLeastTwo,
    /// One copy from each pair.
    OneFromEachPair,
    /// Only one irreducible present, at least two copies.
    SingleAtLeastTwo,
    /// One copy of each irreducible.
    OneOfEach,
}

const TABLE: &[((usize, usize), Side, &str)] = &[
    ((1, 0), Side::Any, "(GL(1,R)×SO(k1,k2), Λ1)"),
    ((2, 0), Side::Any, "(GL(1,C)×SO(k,C), Λ1)"),
    (
        (1, 1),
        Side::Nondegenerate,
        "(GL(1,R)×SO(k1,k2), Λ1)⊕(GL(1,R)×SO(k3,k4), Λ1)",
    ),
    ((3, 0), Side::Any, "(GL(1,H)×SO*(2k), Λ1⊗Λ1)"),
    ((2, 1), Side::MinDegree(4), "(GL(2,R)×SO(k1,k2), Λ1⊗Λ1)"),
    ((4, 0), Side::Any, "(GL(1,H)×GL(1,H)×GL(k,H), (Λ1⊗1⊗Λ1)⊕(1⊗Λ1⊗Λ1*))"),
    ((3, 1), Side::MinDegree(8), "(GL2(C)×SU(k1,k2), Λ1⊗Λ1)"),
    ((2, 2), Side::MinDegree(8), "(GL2(R)×GL2(R)×SL(k,R), (Λ1⊗1)⊕(1⊗Λ1⊗Λ1))"),
    ((5, 0), Side::Degree(8), "(GL(1,R)×SO(8), Λ1)"),
    ((4, 1), Side::Degree(8), "(GL(1,R)×SO(4,4), Λ1)"),
    ((3, 2), Side::Degree(8), "(GL(1,R)×SO(4,4), Λ1)"),
    ((6, 0), Side::Degree(16), "(GL(2,C)×SU(4), Λ1⊗Λ1)"),
    ((5, 1), Side::OnePairAtLeastTwo, "(GL2(H)×Sp(k1,k2), Λ1⊗Λ1) (k1+k2≥2)"),
    (
        (5, 1),
        Side::OneFromEachPair,
        "(GL1(R)×SL(2,H)×SU(2)×SU(2), (Λ1⊗Λ1⊗1)⊕(Λ1*⊗1⊗Λ1))",
    ),
    ((4, 2), Side::Degree(16), "(GL(2,C)×SU(2,2), Λ1⊗Λ1)"),
    ((3, 3), Side::SingleAtLeastTwo, "(GL4(R)×Sp(k,R), Λ1⊗Λ1) (k≥2)"),
    (
        (3, 3),
        Side::OneOfEach,
        "(GL1(R)×SL(4,R)×SL(2,R)×SL(2,R), (Λ1⊗Λ1⊗1)⊕(Λ1*⊗1⊗Λ1))",
    ),
    ((7, 0), Side::Degree(16), "(GL2(R)×SO(8), Λ1⊗Λ1)"),
    ((6, 1), Side::Degree(16), "(GL1(H)×SO*(8), Λ1⊗Λ1)"),
    ((5, 2), Side::Degree(16), "(GL1(H)×SO*(8), Λ1⊗Λ1)"),
    ((4, 3), Side::Degree(16), "(GL2(R)×SO(4,4), Λ1⊗Λ1)"),
    ((8, 0), Side::Degree(16), "(GL1(R)×GL1(R)×SO(8)×SO(8), (Λ1⊗1)⊕(1⊗Λ1))"),
    ((7, 1), Side::Degree(16), "(GL1(C)×SO(8,C), Λ1)"),
    ((5, 3), Side::Degree(16), "(GL1(C)×SO(8,C), Λ1)"),
    (
        (4, 4),
        Side::Degree(16),
        "(GL1(R)×GL1(R)×SO(4,4)×SO(4,4), (Λ1⊗1)⊕(1⊗Λ1))",
    ),
    ((9, 0), Side::Degree(16), "(GL1(R)×SO(16), Λ1)"),
    ((8, 1), Side::Degree(16), "(GL1(R)×SO(8,8), Λ1)"),
    ((5, 4), Side::Degree(16), "(GL1(R)×SO(8,8), Λ1)"),
    ((9, 1), Side::DegreePureOverC(32), "(GL2(R)×Spin(9,1), Λ1⊗Λ♯) (♯=e,o)"),
    ((7, 3), Side::DegreePureOverC(32), "(GL1(H)×Spin(7,3), Λ1⊗Λ♯) (♯=e,o)"),
    ((5, 5), Side::DegreePureOverC(32), "(GL2(R)×Spin(5,5), Λ1⊗Λ♯) (♯=e,o)"),
    ((10, 1), Side::Degree(32), "(GL1(R)×Spin(10,2), Λ♯) (♯=e,o)"),
    ((9, 2), Side::Degree(32), "(GL1(R)×Spin(10,2), Λ♯) (♯=e,o)"),
    ((6, 5), Side::Degree(32), "(GL1(R)×Spin(6,6), Λ♯) (♯=e,o)"),
];

fn side_holds(side: Side, p: usize, q: usize, m: usize, mults: &[usize]) -> Result<bool> {
    Ok(match side {
        Side::Any => true,
        Side::Nondegenerate => !expected_degenerate(p, q, m, mults),
        Side::MinDegree(d) => m >= d,
        Side::Degree(d) => m == d,
        Side::DegreePureOverC(d) => m == d && pure_over_c(p, q, mults)? == Some(true),
        Side::OnePairAtLeastTwo | Side::OneFromEachPair => {
            // irreducibles come ordered so that 1, 2 and 3, 4 share their
            // restriction to the even part
            let (a, b) = (mults[0] + mults[1], mults[2] + mults[3]);
            match side {
                Side::OnePairAtLeastTwo => a * b == 0 && a + b >= 2,
                _ => a == 1 && b == 1,
            }
        }
        Side::SingleAtLeastTwo => mults[0] * mults[1] == 0 && mults[0] + mults[1] >= 2,
        Side::OneOfEach => mults == [1, 1],
    })
}

fn check_mults(p: usize, q: usize, mults: &[usize]) -> Result<usize> {
    if p < q {
        return Err(Error::invalid(format!("classification expects p ≥ q, got ({p},{q})")));
    }
    let cat = irrep_catalog(p, q)?;
    if mults.len() != cat.count {
        return Err(Error::invalid(format!(
            "({p},{q}) takes {} multiplicities, got {}",
            cat.count,
            mults.len()
        )));
    }
    let m = cat.dim * mults.iter().sum::<usize>();
    if m == 0 {
        return Err(Error::invalid("the representation is zero"));
    }
    Ok(m)
}

/// The prehomogeneous space whose relative invariant is the quartic of this
/// representation, if it is listed.
pub fn table1_lookup(p: usize, q: usize, mults: &[usize]) -> Result<Option<&'static str>> {
    let m = check_mults(p, q, mults)?;
    for &(pq, side, entry) in TABLE {
        if pq == (p, q) && side_holds(side, p, q, m, mults)? {
            return Ok(Some(entry));
        }
    }
    Ok(None)
}

/// Whether any prehomogeneous row exists for `(p, q)`, regardless of degree.
pub fn has_table_row(p: usize, q: usize) -> bool {
    TABLE.iter().any(|&(pq, _, _)| pq == (p, q))
}

/// The degree bound beyond which no prehomogeneous space has the quartic as
/// relative invariant; returns the reason when the bound is violated.
fn not_prehomogeneous_reason(n: usize, m: usize, pure_c: Option<bool>) -> Option<String> {
    let mixed = pure_c == Some(false);
    match n {
        5 if m > 8 => Some(format!("p+q = 5 and m = {m} exceeds 8")),
        6 if m > 16 && mixed => Some(format!("p+q = 6, m = {m} exceeds 16 and the complexification is mixed")),
        7..=9 if m > 16 => Some(format!("p+q = {n} and m = {m} exceeds 16")),
        10 if m > 32 => Some(format!("p+q = 10 and m = {m} exceeds 32")),
        10 if m == 32 && mixed => Some("p+q = 10, m = 32 and the complexification is mixed".to_string()),
        11 if m > 32 => Some(format!("p+q = 11 and m = {m} exceeds 32")),
        n if n >= 12 => Some(format!("p+q = {n} is at least 12")),
        _ => None,
    }
}

pub fn classify(p: usize, q: usize, mults: &[usize]) -> Result<ClassificationReport> {
    let m = check_mults(p, q, mults)?;
    let n = p + q;
    let pure_c = pure_over_c(p, q, mults)?;
    let degenerate = expected_degenerate(p, q, m, mults);
    let exceptional = !degenerate && table_exceptional(p, q, mults, m);
    let square = !degenerate && expected_square(p, q, m);
    let mut reasons = Vec::new();
    if degenerate {
        reasons.push(if (p, q) == (1, 1) {
            "the quartic vanishes: for (1,1) the two basis matrices agree up to sign when the restriction to the even part is isotypic".to_string()
        } else {
            format!("the quartic vanishes identically at (p,q,m) = ({p},{q},{m})")
        });
    } else if exceptional {
        reasons.push(format!(
            "the symmetry algebra is larger than so(p,q) plus the commutant part at the low degree m = {m} for p+q = {n}"
        ));
    } else {
        reasons.push("the symmetry algebra is so(p,q) plus the algebra preserving every basis matrix".to_string());
    }
    if square {
        reasons.push("the quartic is a constant times the square of a quadratic form".to_string());
    }
    let prehomogeneous = if degenerate {
        reasons.push("a vanishing form is not a relative invariant".to_string());
        false
    } else if let Some(why) = not_prehomogeneous_reason(n, m, pure_c) {
        reasons.push(format!("not prehomogeneous: {why}"));
        false
    } else {
        reasons.push(format!(
            "prehomogeneous: p+q = {n} with m = {m} is within the degree bounds"
        ));
        true
    };
    let pv_entry = if prehomogeneous {
        table1_lookup(p, q, mults)?
    } else {
        None
    };
    if let Some(entry) = pv_entry {
        reasons.push(format!("the prehomogeneous space is {entry}"));
    }
    if let Some(pure) = pure_c {
        reasons.push(format!(
            "the volume element {} a single scalar on the representation, so it is {} over C",
            if pure { "acts as" } else { "does not act as" },
            if pure { "pure" } else { "mixed" }
        ));
    }
    let kind = if degenerate {
        Verdict::Degenerate
    } else if exceptional {
        Verdict::Exceptional
    } else {
        Verdict::Generic
    };
    let mut report = ClassificationReport {
        p,
        q,
        m,
        mults: mults.to_vec(),
        kind,
        verdict: String::new(),
        degenerate,
        square_of_quadratic: square,
        exceptional,
        generic: kind == Verdict::Generic,
        prehomogeneous,
        pv_entry,
        pure_over_c: pure_c,
        reasons,
    };
    report.verdict = report.summary();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_verdicts() {
        let r = classify(3, 2, &[2]).unwrap();
        assert_eq!(r.verdict, "generic, not prehomogeneous");
        let r = classify(9, 0, &[1, 0]).unwrap();
        assert_eq!((r.kind, r.prehomogeneous), (Verdict::Exceptional, true));
        assert_eq!(r.pv_entry, Some("(GL1(R)×SO(16), Λ1)"));
        let r = classify(12, 0, &[1]).unwrap();
        assert_eq!(r.verdict, "generic, not prehomogeneous");
    }

    #[test]
    fn lookups() {
        assert_eq!(table1_lookup(7, 1, &[1, 0]).unwrap(), Some("(GL1(C)×SO(8,C), Λ1)"));
        assert_eq!(
            table1_lookup(6, 5, &[1, 0]).unwrap(),
            Some("(GL1(R)×Spin(6,6), Λ♯) (♯=e,o)")
        );
        assert_eq!(table1_lookup(12, 0, &[1]).unwrap(), None);
        assert_eq!(
            table1_lookup(5, 1, &[1, 1, 0, 0])
                .unwrap()
                .map(|s| s.starts_with("(GL2(H)×")),
            Some(true)
        );
        assert_eq!(
            table1_lookup(5, 1, &[1, 0, 0, 1])
                .unwrap()
                .map(|s| s.starts_with("(GL1(R)×")),
            Some(true)
        );
        assert_eq!(
            table1_lookup(3, 3, &[1, 1]).unwrap().map(|s| s.starts_with("(GL1(R)×")),
            Some(true)
        );
        assert!(table1_lookup(2, 1, &[1, 0]).unwrap().is_none());
    }

    #[test]
    fn bad_input() {
        assert!(classify(2, 3, &[1]).is_err());
        assert!(classify(3, 2, &[1, 1]).is_err());
        assert!(classify(3, 2, &[0]).is_err());
    }
}
