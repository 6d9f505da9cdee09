//! Pure and mixed representations: isotypy of the restriction to the even part.

use crate::error::{Error, Result};
use crate::signed_perm::SignedPerm;

use super::{irreducibles, irrep_catalog, AlgebraType};

/// Whether the restriction to `R⁺_{p,q}` is isotypic over `ℝ`.
///
/// With a simple even part (`T'`) every representation is pure; a single
/// irreducible of a `2T'`-type algebra restricts to both even irreducibles;
/// otherwise the irreducibles `ρ₁, ρ₂` (and `ρ₃, ρ₄`) share their restriction
/// and purity means the multiplicities live on one of those groups.
pub fn is_pure(p: usize, q: usize, mults: &[usize]) -> Result<bool> {
    let cat = irrep_catalog(p, q)?;
    if mults.len() != cat.count {
        return Err(Error::invalid("wrong number of multiplicities"));
    }
    Ok(match cat.algebra_type {
        AlgebraType::I | AlgebraType::III => true,
        AlgebraType::II => false,
        AlgebraType::IV => mults[0] == 0 || mults[1] == 0,
        AlgebraType::V => mults[0] + mults[1] == 0 || mults[2] + mults[3] == 0,
    })
}

/// `ρ(S_1 ⋯ S_n)`, which is central in the image of the even part when `n` is even.
fn volume(basis: &[SignedPerm]) -> SignedPerm {
    basis
        .iter()
        .fold(SignedPerm::identity(basis[0].dim()), |acc, s| acc.mul(s))
}

/// Whether the restriction to `R⁺_{p,q} ⊗ ℂ` is isotypic, for even `p+q`.
///
/// The complexified even part has two irreducibles told apart by the
/// eigenvalue of the volume element `Ω`. If `Ω² = -1` a real representation
/// carries both eigenvalues `±i`, so it is mixed; if `Ω² = 1` it is pure
/// exactly when `Ω` is the same scalar `±1` on every irreducible present.
/// Returns `None` for odd `p+q`.
pub fn pure_over_c(p: usize, q: usize, mults: &[usize]) -> Result<Option<bool>> {
    let cat = irrep_catalog(p, q)?;
    if mults.len() != cat.count {
        return Err(Error::invalid("wrong number of multiplicities"));
    }
    if (p + q) % 2 == 1 {
        return Ok(None);
    }
    let irreps = irreducibles(p, q)?;
    let mut scalar: Option<SignedPerm> = None;
    for (ir, &k) in irreps.iter().zip(mults) {
        if k == 0 {
            continue;
        }
        let omega = volume(&ir.basis);
        let id = SignedPerm::identity(omega.dim());
        if !omega.mul(&omega).is_identity() {
            return Ok(Some(false));
        }
        let sign = if omega.is_identity() {
            id
        } else if omega.neg().is_identity() {
            id.neg()
        } else {
            return Ok(Some(false));
        };
        match &scalar {
            None => scalar = Some(sign),
            Some(prev) if prev.trace().signum() != sign.trace().signum() => return Ok(Some(false)),
            _ => {}
        }
    }
    Ok(Some(true))
}
