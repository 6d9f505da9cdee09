//! Signed Pauli words `± X^x Z^z` on `L` qubits with real matrices
//! `X = antidiag(1,1)`, `Z = diag(1,-1)`, `Y = XZ = antidiag(-1,1)`.
//!
//! Words are signed permutations: `W e_b = ± (-1)^{|z & b|} e_{b ^ x}`.
//! Qubit 0 is the least significant bit of the basis index, so the leftmost
//! letter of a written word acts on the most significant bit, matching
//! Kronecker products `A ⊗ B`.

use crate::signed_perm::SignedPerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Word {
    pub x: u32,
    pub z: u32,
    pub neg: bool,
}

impl Word {
    pub const ONE: Word = Word { x: 0, z: 0, neg: false };

    /// Parses letters `I`, `X`, `Z`, `Y`, most significant qubit first.
    pub fn parse(s: &str) -> Word {
        let n = s.len();
        let mut w = Word::ONE;
        for (k, c) in s.chars().enumerate() {
            let bit = 1u32 << (n - 1 - k);
            match c {
                'I' => {}
                'X' => w.x |= bit,
                'Z' => w.z |= bit,
                'Y' => {
                    w.x |= bit;
                    w.z |= bit;
                }
                _ => panic!("bad Pauli letter {c}"),
            }
        }
        w
    }

    pub fn is_symmetric(self) -> bool {
        (self.x & self.z).count_ones() % 2 == 0
    }

    pub fn commutes(self, o: Word) -> bool {
        ((self.x & o.z) ^ (self.z & o.x)).count_ones() % 2 == 0
    }

    pub fn mul(self, o: Word) -> Word {
        let flip = (self.z & o.x).count_ones() % 2 == 1;
        Word {
            x: self.x ^ o.x,
            z: self.z ^ o.z,
            neg: self.neg ^ o.neg ^ flip,
        }
    }

    pub fn negate(self) -> Word {
        Word { neg: !self.neg, ..self }
    }

    /// Places `self` on the high qubits above `low` qubits of `o`.
    pub fn tensor(self, o: Word, low: u32) -> Word {
        Word {
            x: (self.x << low) | o.x,
            z: (self.z << low) | o.z,
            neg: self.neg ^ o.neg,
        }
    }

    pub fn is_scalar(self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn to_matrix(self, qubits: u32) -> SignedPerm {
        let n = 1usize << qubits;
        let base: i8 = if self.neg { -1 } else { 1 };
        let perm = (0..n).map(|b| b ^ self.x as usize).collect();
        let sign = (0..n)
            .map(|b| {
                if (self.z & b as u32).count_ones() % 2 == 1 {
                    -base
                } else {
                    base
                }
            })
            .collect();
        SignedPerm::new(perm, sign).expect("Pauli words are signed permutations")
    }
}

/// A family of pairwise anticommuting symmetric involutions realizing the
/// smallest real representation of the Clifford algebra with `p` generators
/// squaring to `+1`, on `qubits` qubits.
#[derive(Clone, Debug)]
pub(crate) struct Family {
    pub qubits: u32,
    pub gens: Vec<Word>,
}

const SMALL: [&[&str]; 8] = [
    &[""],
    &["Z", "X"],
    &["IX", "IZ", "YY"],
    &["IIX", "IIZ", "IYY", "YXY"],
    &["IIX", "IIZ", "IYY", "YXY", "YZY"],
    &["IIIX", "IIIZ", "IIYY", "IYXY", "XYZY", "ZYZY"],
    &["IIIX", "IIIZ", "IIYY", "IYXY", "XYZY", "YIZY", "ZYZY"],
    &["IIIX", "IIIZ", "IIYY", "IYXY", "XYZY", "YIZY", "YXXY", "ZYZY"],
];

/// Generators for `p ≥ 1`; `p = 0` gives an empty family on one dimension.
pub(crate) fn family(p: usize) -> Family {
    if p == 0 {
        return Family {
            qubits: 0,
            gens: Vec::new(),
        };
    }
    if p <= 8 {
        let words = SMALL[p - 1];
        return Family {
            qubits: words[0].len() as u32,
            gens: words.iter().map(|w| Word::parse(w)).collect(),
        };
    }
    // periodicity: {E_i ⊗ 1} ∪ {E_1⋯E_8 ⊗ F_j} with F a family for p - 8
    let e = family(8);
    let f = family(p - 8);
    let omega = e.gens.iter().fold(Word::ONE, |acc, &g| acc.mul(g));
    let mut gens: Vec<Word> = e.gens.iter().map(|&g| g.tensor(Word::ONE, f.qubits)).collect();
    if f.gens.is_empty() {
        unreachable!("p > 8 always leaves a nonempty tail family");
    }
    gens.extend(f.gens.iter().map(|&g| omega.tensor(g, f.qubits)));
    Family {
        qubits: e.qubits + f.qubits,
        gens,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_family(f: &Family) {
        for (i, a) in f.gens.iter().enumerate() {
            let ma = a.to_matrix(f.qubits);
            assert!(ma.is_symmetric());
            assert!(ma.mul(&ma).is_identity());
            for b in &f.gens[i + 1..] {
                let mb = b.to_matrix(f.qubits);
                assert_eq!(ma.mul(&mb), mb.mul(&ma).neg());
            }
        }
    }

    #[test]
    fn word_algebra_matches_matrices() {
        let words: Vec<Word> = ["XZ", "YI", "ZY", "YY", "IX"].iter().map(|s| Word::parse(s)).collect();
        for &a in &words {
            assert_eq!(a.is_symmetric(), a.to_matrix(2).is_symmetric());
            for &b in &words {
                assert_eq!(a.mul(b).to_matrix(2), a.to_matrix(2).mul(&b.to_matrix(2)));
                let ab = a.to_matrix(2).mul(&b.to_matrix(2));
                let ba = b.to_matrix(2).mul(&a.to_matrix(2));
                assert_eq!(a.commutes(b), ab == ba);
            }
        }
    }

    #[test]
    fn y_is_the_rotation() {
        assert_eq!(Word::parse("Y").to_matrix(1).to_dense(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn families_are_anticommuting_involutions() {
        let dims = [1, 2, 4, 8, 8, 16, 16, 16, 16, 32, 64, 128, 128, 256, 256, 256];
        for p in 1..=16 {
            let f = family(p);
            assert_eq!(f.gens.len(), p);
            assert_eq!(1usize << f.qubits, dims[p - 1], "p = {p}");
            check_family(&f);
        }
    }
}
