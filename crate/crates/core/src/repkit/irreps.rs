//! Explicit irreducible representations of `R_{p,q}` by symmetric signed permutations.
//!
//! The tensor representation `E_i ⊗ 1`, `1 ⊗ F_j` of the two positive
//! Clifford families always satisfies the defining relations but may be
//! reducible. It is cut down to an irreducible by a joint eigenspace of
//! commuting symmetric Pauli involutions from its commutant; global sign
//! twists of either family and the eigenvalue choices sweep out all
//! inequivalent irreducibles, which are told apart by central characters.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::pauli::{family, Word};
use crate::signed_perm::SignedPerm;

use super::catalog::{irrep_catalog, AlgebraType};

/// One irreducible with its central character data.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub basis: Vec<SignedPerm>,
    /// `tr(S_1⋯S_p) / dim`, nonzero only when that product is central.
    pub sign_p: i8,
    /// `tr(S_{p+1}⋯S_{p+q}) / dim`.
    pub sign_q: i8,
    /// `tr(S_1⋯S_{p+q}) / dim`.
    pub sign_pq: i8,
}

/// The largest Pauli register searched for commutant involutions.
const MAX_QUBITS: u32 = 10;

fn product_trace_sign(mats: &[SignedPerm], dim: usize) -> i8 {
    let prod = mats.iter().fold(SignedPerm::identity(dim), |acc, m| acc.mul(m));
    let t = prod.trace();
    if t == dim as i64 {
        1
    } else if t == -(dim as i64) {
        -1
    } else {
        0
    }
}

fn order_key(ty: AlgebraType, p: usize, ir: &Irrep) -> i32 {
    match ty {
        AlgebraType::I | AlgebraType::II => 0,
        AlgebraType::III => {
            let s = if p % 4 == 1 { ir.sign_p } else { ir.sign_q };
            -(s as i32)
        }
        AlgebraType::IV => -(ir.sign_pq as i32),
        AlgebraType::V => match (ir.sign_p, ir.sign_q) {
            (1, 1) => 0,
            (-1, -1) => 1,
            (1, -1) => 2,
            _ => 3,
        },
    }
}

/// Lexicographically first set of `r` mutually commuting, independent,
/// symmetric non-scalar words commuting with every generator.
fn splitting_words(gens: &[Word], qubits: u32, r: usize) -> Option<Vec<Word>> {
    if r == 0 {
        return Some(Vec::new());
    }
    let n = 1u32 << qubits;
    let mut cands = Vec::new();
    for x in 0..n {
        for z in 0..n {
            let w = Word { x, z, neg: false };
            if !w.is_scalar() && w.is_symmetric() && gens.iter().all(|&g| w.commutes(g)) {
                cands.push(w);
            }
        }
    }
    fn key(w: Word, qubits: u32) -> u64 {
        ((w.x as u64) << qubits) | w.z as u64
    }
    fn reduce(basis: &[(u64, u32)], mut v: u64) -> u64 {
        for &(b, lead) in basis {
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v
    }
    fn search(
        cands: &[Word],
        start: usize,
        chosen: &mut Vec<Word>,
        basis: &mut Vec<(u64, u32)>,
        r: usize,
        qubits: u32,
    ) -> bool {
        if chosen.len() == r {
            return true;
        }
        for (i, &w) in cands.iter().enumerate().skip(start) {
            if !chosen.iter().all(|&c| c.commutes(w)) {
                continue;
            }
            let v = reduce(basis, key(w, qubits));
            if v == 0 {
                continue;
            }
            let lead = 63 - v.leading_zeros();
            // keep the basis reduced so later reductions stay single-pass
            let mut next: Vec<(u64, u32)> = basis
                .iter()
                .map(|&(b, l)| if b >> lead & 1 == 1 { (b ^ v, l) } else { (b, l) })
                .collect();
            next.push((v, lead));
            let saved = std::mem::replace(basis, next);
            chosen.push(w);
            if search(cands, i + 1, chosen, basis, r, qubits) {
                return true;
            }
            chosen.pop();
            *basis = saved;
        }
        false
    }
    let mut chosen = Vec::new();
    let mut basis = Vec::new();
    search(&cands, 0, &mut chosen, &mut basis, r, qubits).then_some(chosen)
}

/// Orbit vectors `Σ_g χ(g) g e_a` spanning the joint eigenspace of a
/// commuting involution group with character `χ`.
fn eigen_basis(group: &[(SignedPerm, i8)], dim: usize) -> Vec<Vec<(usize, i8)>> {
    let mut taken = vec![false; dim];
    let mut out = Vec::new();
    for a in 0..dim {
        if taken[a] {
            continue;
        }
        let mut coeff: HashMap<usize, i32> = HashMap::new();
        for (g, chi) in group {
            let (r, s) = g.col(a);
            *coeff.entry(r).or_insert(0) += (*chi as i32) * (s as i32);
        }
        let mut support: Vec<(usize, i32)> = coeff.into_iter().collect();
        support.sort_unstable();
        for &(idx, _) in &support {
            taken[idx] = true;
        }
        let support: Vec<(usize, i8)> = support
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(idx, c)| (idx, c.signum() as i8))
            .collect();
        if !support.is_empty() {
            out.push(support);
        }
    }
    out
}

fn build_irreps(p: usize, q: usize) -> Result<Vec<Irrep>> {
    let cat = irrep_catalog(p, q)?;
    let (e, f) = (family(p), family(q));
    let qubits = e.qubits + f.qubits;
    let full = 1usize << qubits;
    if full % cat.dim != 0 {
        return Err(Error::unsupported(format!("no splitting for ({p},{q})")));
    }
    let r = (full / cat.dim).trailing_zeros() as usize;
    if r > 0 && qubits > MAX_QUBITS {
        return Err(Error::unsupported(format!(
            "({p},{q}) needs a commutant search on {qubits} qubits"
        )));
    }
    let tensor = |tp: bool, tq: bool| -> Vec<Word> {
        let mut gens: Vec<Word> = e
            .gens
            .iter()
            .map(|&g| {
                let g = if tp { g.negate() } else { g };
                g.tensor(Word::ONE, f.qubits)
            })
            .collect();
        gens.extend(f.gens.iter().map(|&g| {
            let g = if tq { g.negate() } else { g };
            Word::ONE.tensor(g, f.qubits)
        }));
        gens
    };
    let split = splitting_words(&tensor(false, false), qubits, r)
        .ok_or_else(|| Error::unsupported(format!("no commutant involutions for ({p},{q})")))?;
    let split_mats: Vec<SignedPerm> = split.iter().map(|w| w.to_matrix(qubits)).collect();

    let mut found: Vec<Irrep> = Vec::new();
    'outer: for (tp, tq) in [(false, false), (true, false), (false, true), (true, true)] {
        let gens: Vec<SignedPerm> = tensor(tp, tq).iter().map(|w| w.to_matrix(qubits)).collect();
        for chars in 0..(1u32 << r) {
            let group: Vec<(SignedPerm, i8)> = (0..(1u32 << r))
                .map(|mask| {
                    let mut g = SignedPerm::identity(full);
                    let mut chi = 1i8;
                    for (k, m) in split_mats.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            g = g.mul(m);
                            if chars >> k & 1 == 1 {
                                chi = -chi;
                            }
                        }
                    }
                    (g, chi)
                })
                .collect();
            let vectors = eigen_basis(&group, full);
            if vectors.len() != cat.dim {
                return Err(Error::unsupported(format!(
                    "eigenspace of dimension {} instead of {} for ({p},{q})",
                    vectors.len(),
                    cat.dim
                )));
            }
            let basis: Vec<SignedPerm> = gens
                .iter()
                .map(|g| {
                    g.restrict(&vectors)
                        .ok_or_else(|| Error::unsupported("generator does not preserve eigenspace"))
                })
                .collect::<Result<_>>()?;
            let ir = Irrep {
                sign_p: product_trace_sign(&basis[..p], cat.dim),
                sign_q: product_trace_sign(&basis[p..], cat.dim),
                sign_pq: product_trace_sign(&basis, cat.dim),
                basis,
            };
            let label = (ir.sign_p, ir.sign_q, ir.sign_pq);
            if !found.iter().any(|o| (o.sign_p, o.sign_q, o.sign_pq) == label) {
                found.push(ir);
                if found.len() == cat.count {
                    break 'outer;
                }
            }
        }
    }
    if found.len() != cat.count {
        return Err(Error::unsupported(format!(
            "found {} of {} irreducibles for ({p},{q})",
            found.len(),
            cat.count
        )));
    }
    found.sort_by_key(|ir| order_key(cat.algebra_type, p, ir));
    Ok(found)
}

/// Inequivalent irreducibles of `R_{p,q}` in canonical order, cached per `(p,q)`.
///
/// Ordering: a single irreducible for types I and II; for type III the one
/// where the central product of the factor with `≡ 1 mod 4` generators acts
/// by `+1` comes first; for type IV the sign of `S_1⋯S_{p+q}`, `+1` first; for
/// type V the signs of `(S_1⋯S_p, S_{p+1}⋯S_{p+q})` in the order
/// `(+,+), (−,−), (+,−), (−,+)`.
pub fn irreducibles(p: usize, q: usize) -> Result<Arc<Vec<Irrep>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Vec<Irrep>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("irrep cache poisoned").get(&(p, q)) {
        return Ok(hit.clone());
    }
    let built = Arc::new(build_irreps(p, q)?);
    cache
        .lock()
        .expect("irrep cache poisoned")
        .insert((p, q), built.clone());
    Ok(built)
}

/// Symmetric anticommuting involutions `E_1..E_p` of minimal size; `twist = -1`
/// negates the whole family.
pub fn pos_clifford_basis(p: usize, twist: i8) -> Result<Vec<SignedPerm>> {
    if twist != 1 && twist != -1 {
        return Err(Error::invalid("twist must be +1 or -1"));
    }
    let f = family(p);
    Ok(f.gens
        .iter()
        .map(|&w| {
            let w = if twist < 0 { w.negate() } else { w };
            w.to_matrix(f.qubits)
        })
        .collect())
}
