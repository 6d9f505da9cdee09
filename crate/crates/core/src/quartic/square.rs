//! Detecting `P̃ = c · q(w)²` by polynomial square-root extraction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{Monomial, QuarticForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticSquareWitness {
    /// A squarefree integer, so `P̃ = c · q²` with `q` as small as possible.
    #[serde(serialize_with = "ser_display")]
    pub c: BigInt,
    /// Symmetric `M` with `q(w) = ᵀw M w`, row-major as rational strings.
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Vec<Vec<BigRational>>,
}

fn ser_display<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

impl QuadraticSquareWitness {
    /// Coefficients of `q` on monomials `w_a w_b`, `a ≤ b`.
    pub fn quadratic_terms(&self) -> BTreeMap<(usize, usize), BigRational> {
        let mut out = BTreeMap::new();
        for (a, row) in self.matrix.iter().enumerate() {
            for (b, x) in row.iter().enumerate().skip(a) {
                if !x.is_zero() {
                    let c = if a == b { x.clone() } else { x * BigInt::from(2) };
                    out.insert((a, b), c);
                }
            }
        }
        out
    }
}

/// `(p,q,m)` (with `p ≥ q`, besides `(1,0,m)` for every `m`) whose quartic
/// form is a constant times the square of a quadratic form.
pub const SQUARE_TRIPLES: [(usize, usize, usize); 10] = [
    (2, 0, 2),
    (1, 1, 2),
    (3, 0, 4),
    (2, 1, 4),
    (5, 0, 8),
    (4, 1, 8),
    (3, 2, 8),
    (9, 0, 16),
    (8, 1, 16),
    (5, 4, 16),
];

pub fn expected_square(p: usize, q: usize, m: usize) -> bool {
    p + q == 1 || SQUARE_TRIPLES.contains(&(p.max(q), p.min(q), m))
}

type Quad = BTreeMap<(u16, u16), BigRational>;
type Quart = BTreeMap<Monomial, BigRational>;

fn key4(a: (u16, u16), b: (u16, u16)) -> Monomial {
    let mut k = [a.0, a.1, b.0, b.1];
    k.sort_unstable();
    k
}

fn square(q: &Quad) -> Quart {
    let mut out = Quart::new();
    for (&a, ca) in q {
        for (&b, cb) in q {
            *out.entry(key4(a, b)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Removes the indices of `lead` from the sorted quadruple `key`, leaving a pair.
fn divide(key: &Monomial, lead: (u16, u16)) -> Option<(u16, u16)> {
    let mut rest: Vec<u16> = key.to_vec();
    for x in [lead.0, lead.1] {
        let pos = rest.iter().position(|&y| y == x)?;
        rest.remove(pos);
    }
    Some((rest[0], rest[1]))
}

/// Splits a positive integer as `f² · r` with `r` squarefree.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut f = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let dd = &d * &d;
        while rest.is_multiple_of(&dd) {
            rest /= &dd;
            f *= &d;
        }
        d += 1;
    }
    (f, rest)
}

/// Returns `(c, M)` with `P̃ = c · (ᵀwMw)²` when such a rational quadratic form
/// exists; the result is verified by exact re-expansion before it is returned.
pub fn square_detect(form: &QuarticForm) -> Option<QuadraticSquareWitness> {
    let (lead_key, lead_coef) = form.coeffs().iter().next()?;
    if lead_key[0] != lead_key[1] || lead_key[2] != lead_key[3] {
        return None;
    }
    let c0 = BigRational::from_integer(lead_coef.clone());
    let mut rem: Quart = form
        .coeffs()
        .iter()
        .map(|(k, v)| (*k, BigRational::from_integer(v.clone()) / &c0))
        .collect();
    let lead = (lead_key[0], lead_key[2]);
    let mut q = Quad::new();
    q.insert(lead, BigRational::one());
    rem.remove(lead_key);

    let m = form.rep().m();
    for _ in 0..m * (m + 1) / 2 {
        rem.retain(|_, v| !v.is_zero());
        let Some((k, v)) = rem.iter().next() else { break };
        let t = divide(k, lead)?;
        if t <= lead || q.contains_key(&t) {
            return None;
        }
        let coef = v / BigInt::from(2);
        // (q + t)² - q² = 2 q t + t²
        for (&a, ca) in &q {
            *rem.entry(key4(a, t)).or_insert_with(BigRational::zero) -= ca * &coef * BigInt::from(2);
        }
        *rem.entry(key4(t, t)).or_insert_with(BigRational::zero) -= &coef * &coef;
        q.insert(t, coef);
    }
    rem.retain(|_, v| !v.is_zero());
    if !rem.is_empty() {
        return None;
    }

    // c0 = ±A/B; pull square factors into q so that c is a squarefree integer
    let (fa, ra) = square_part(&c0.numer().abs());
    let (fb, rb) = square_part(c0.denom());
    let scale = BigRational::new(fa, fb * &rb);
    let mut c = ra * rb;
    if c0.is_negative() {
        c = -c;
    }
    let q: Quad = q.into_iter().map(|(k, v)| (k, v * &scale)).collect();

    let expected: Quart = form
        .coeffs()
        .iter()
        .map(|(k, v)| (*k, BigRational::from_integer(v.clone())))
        .collect();
    let got: Quart = square(&q)
        .into_iter()
        .map(|(k, v)| (k, v * BigRational::from_integer(c.clone())))
        .collect();
    if got != expected {
        return None;
    }

    let mut matrix = vec![vec![BigRational::zero(); m]; m];
    for ((a, b), v) in q {
        let (a, b) = (a as usize, b as usize);
        if a == b {
            matrix[a][a] = v;
        } else {
            let half = v / BigInt::from(2);
            matrix[a][b] = half.clone();
            matrix[b][a] = half;
        }
    }
    Some(QuadraticSquareWitness { c, matrix })
}
