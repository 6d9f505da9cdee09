//! Structure of `R_{p,q} = C_p ⊗ C_q` and its even part by `{p mod 8, q mod 8}`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    pub fn real_dim(self) -> usize {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlgebraType {
    I,
    II,
    III,
    IV,
    V,
}

impl AlgebraType {
    /// Number of simple components, i.e. inequivalent irreducibles.
    pub fn count(self) -> usize {
        match self {
            AlgebraType::I | AlgebraType::II => 1,
            AlgebraType::III | AlgebraType::IV => 2,
            AlgebraType::V => 4,
        }
    }

    pub fn shape(self) -> &'static str {
        match self {
            AlgebraType::I => "(T,T')",
            AlgebraType::II => "(T,2T')",
            AlgebraType::III => "(2T,T')",
            AlgebraType::IV => "(2T,2T')",
            AlgebraType::V => "(4T,2T')",
        }
    }
}

struct Row {
    ty: AlgebraType,
    // ℓ = 2^{(n - ell_shift)/2}, r = 2^{(n - r_shift)/2}
    ell_shift: usize,
    r_shift: usize,
    k: Field,
    k_even: Field,
    keys: &'static [(usize, usize)],
}

const ROWS: [Row; 13] = [
    Row {
        ty: AlgebraType::I,
        ell_shift: 0,
        r_shift: 2,
        k: Field::R,
        k_even: Field::C,
        keys: &[(0, 2), (4, 6)],
    },
    Row {
        ty: AlgebraType::I,
        ell_shift: 1,
        r_shift: 1,
        k: Field::C,
        k_even: Field::R,
        keys: &[(0, 7), (2, 3), (3, 4), (6, 7)],
    },
    Row {
        ty: AlgebraType::I,
        ell_shift: 1,
        r_shift: 3,
        k: Field::C,
        k_even: Field::H,
        keys: &[(0, 3), (2, 7), (3, 6), (4, 7)],
    },
    Row {
        ty: AlgebraType::I,
        ell_shift: 2,
        r_shift: 2,
        k: Field::H,
        k_even: Field::C,
        keys: &[(0, 6), (2, 4)],
    },
    Row {
        ty: AlgebraType::II,
        ell_shift: 0,
        r_shift: 2,
        k: Field::R,
        k_even: Field::R,
        keys: &[(0, 0), (2, 2), (4, 4), (6, 6)],
    },
    Row {
        ty: AlgebraType::II,
        ell_shift: 2,
        r_shift: 4,
        k: Field::H,
        k_even: Field::H,
        keys: &[(0, 4), (2, 6)],
    },
    Row {
        ty: AlgebraType::III,
        ell_shift: 1,
        r_shift: 1,
        k: Field::R,
        k_even: Field::R,
        keys: &[(0, 1), (1, 2), (4, 5), (5, 6)],
    },
    Row {
        ty: AlgebraType::III,
        ell_shift: 2,
        r_shift: 2,
        k: Field::C,
        k_even: Field::C,
        keys: &[(1, 3), (1, 7), (3, 5), (5, 7)],
    },
    Row {
        ty: AlgebraType::III,
        ell_shift: 3,
        r_shift: 3,
        k: Field::H,
        k_even: Field::H,
        keys: &[(0, 5), (1, 4), (1, 6), (2, 5)],
    },
    Row {
        ty: AlgebraType::IV,
        ell_shift: 2,
        r_shift: 2,
        k: Field::C,
        k_even: Field::R,
        keys: &[(3, 3), (7, 7)],
    },
    Row {
        ty: AlgebraType::IV,
        ell_shift: 2,
        r_shift: 4,
        k: Field::C,
        k_even: Field::H,
        keys: &[(3, 7)],
    },
    Row {
        ty: AlgebraType::V,
        ell_shift: 2,
        r_shift: 2,
        k: Field::R,
        k_even: Field::R,
        keys: &[(1, 1), (5, 5)],
    },
    Row {
        ty: AlgebraType::V,
        ell_shift: 4,
        r_shift: 4,
        k: Field::H,
        k_even: Field::H,
        keys: &[(1, 5)],
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepCatalog {
    pub p: usize,
    pub q: usize,
    pub algebra_type: AlgebraType,
    pub shape: &'static str,
    pub count: usize,
    /// Real dimension `ℓ · dim_R 𝕂` shared by all irreducibles.
    pub dim: usize,
    pub ell: usize,
    pub r: usize,
    pub field: Field,
    pub even_field: Field,
}

pub fn irrep_catalog(p: usize, q: usize) -> Result<IrrepCatalog> {
    let n = p + q;
    if n == 0 {
        return Err(Error::invalid("p + q must be at least 1"));
    }
    let (a, b) = ((p % 8).min(q % 8), (p % 8).max(q % 8));
    let row = ROWS
        .iter()
        .find(|row| row.keys.contains(&(a, b)))
        .expect("every residue pair is covered");
    let pow = |shift: usize| -> Result<usize> {
        if n < shift || (n - shift) % 2 != 0 {
            return Err(Error::invalid(format!("no structure row for ({p},{q})")));
        }
        Ok(1usize << ((n - shift) / 2))
    };
    let ell = pow(row.ell_shift)?;
    // the even part is trivial for n = 1 and the table exponent can go negative there
    let r = pow(row.r_shift).unwrap_or(1);
    Ok(IrrepCatalog {
        p,
        q,
        algebra_type: row.ty,
        shape: row.ty.shape(),
        count: row.ty.count(),
        dim: ell * row.k.real_dim(),
        ell,
        r,
        field: row.k,
        even_field: row.k_even,
    })
}
