use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Finitely generated abelian group `Z^free_rank ⊕ Z_{t1} ⊕ … ⊕ Z_{tk}`
/// with invariant factors `2 <= t1 | t2 | … | tk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z_a`, read with the convention `Z_0 = Z` and `Z_1 = 0`.
    pub fn cyclic(a: impl Into<BigInt>) -> Self {
        let a: BigInt = a.into();
        assert!(a >= BigInt::zero(), "cyclic order must be nonnegative");
        if a.is_zero() {
            Self::free(1)
        } else if a.is_one() {
            Self::trivial()
        } else {
            AbelianGroup {
                free_rank: 0,
                torsion: vec![a],
            }
        }
    }

    /// Group presented by a Smith diagonal: `Z^generators / diag · Z^k`.
    /// `diagonal` must already form a nonnegative divisibility chain.
    pub fn from_smith_diagonal(diagonal: &[BigInt], generators: usize) -> Self {
        let nonzero = diagonal.iter().filter(|d| !d.is_zero()).count();
        AbelianGroup {
            free_rank: generators - nonzero,
            torsion: diagonal
                .iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .cloned()
                .collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// `0`, `Z`, `Z^2`, `Z_2`, `Z ⊕ Z_2 ⊕ Z_6`, ...
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}
