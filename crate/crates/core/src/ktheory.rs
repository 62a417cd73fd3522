//! K-groups of the Cuntz-Krieger algebra of a kneading transition matrix
//! and its Bowen-Franks group.
//!
//! For an `r×r` matrix `A`, `K0 = Z^r / (I - A^T) Z^r`, `K1 = ker(I - A^T)`
//! and `BF(A) = Z^r / (I - A) Z^r`. For a periodic kneading word these are
//! also given in closed form by
//! `a = |1 + Σ_{l=1}^{n-1} Π_{i=1}^{l} ε_i|`: `K0 = Z_a`, and `K1` is `Z`
//! when `a = 0` and trivial otherwise. [`k_groups`] computes both routes
//! and refuses to report if they disagree.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intlinalg::{cokernel, is_irreducible, kernel_rank, smith_normal_form, AbelianGroup, IntMatrix};
use crate::markov::{build_matrices, build_orbit, transition_matrix};
use crate::symbolic::{enumerate_admissible, KneadingWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGroupReport {
    pub word: KneadingWord,
    pub a_closed_form: u64,
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub bf: AbelianGroup,
    pub irreducible: bool,
    pub admissible: bool,
}

/// Sum of the partial products of `ε_1 … ε_{n-1}`, plus one.
pub fn closed_form_signed(w: &KneadingWord) -> Result<i64> {
    let n = w.len();
    if n < 2 {
        return Err(Error::PeriodTooShort(n));
    }
    let mut product = 1i64;
    let mut total = 1i64;
    for s in &w.symbols()[..n - 1] {
        product *= i64::from(s.value());
        total += product;
    }
    Ok(total)
}

pub fn closed_form_a(w: &KneadingWord) -> Result<u64> {
    closed_form_signed(w).map(i64::unsigned_abs)
}

/// `Z^r / (I - A) Z^r` for a square 0-1 matrix.
pub fn bf_group(a: &IntMatrix) -> Result<AbelianGroup> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_zero_one() {
        return Err(Error::NotZeroOne);
    }
    Ok(cokernel(&a.identity_minus()))
}

pub fn k0_group(a: &IntMatrix) -> AbelianGroup {
    cokernel(&a.transpose().identity_minus())
}

pub fn k1_group(a: &IntMatrix) -> AbelianGroup {
    AbelianGroup::free(kernel_rank(&a.transpose().identity_minus()))
}

/// K-groups of the word's transition matrix, cross-checked against the
/// closed form. For an inadmissible word the groups are reported as
/// computed and no agreement is demanded.
pub fn k_groups(w: &KneadingWord) -> Result<KGroupReport> {
    let a_closed_form = closed_form_a(w)?;
    let orbit = build_orbit(w)?;
    let a = transition_matrix(&orbit);

    let k0 = k0_group(&a);
    let k1 = k1_group(&a);
    let bf = bf_group(&a)?;
    let irreducible = is_irreducible(&a)?;
    let admissible = orbit.is_admissible();

    if admissible {
        let expected_k0 = AbelianGroup::cyclic(a_closed_form);
        if k0 != expected_k0 {
            return Err(Error::TheoremViolation {
                word: w.to_string(),
                detail: format!("closed form gives K0 = {expected_k0}, Smith form gives {k0}"),
            });
        }
        let expected_k1 = AbelianGroup::free(usize::from(a_closed_form == 0));
        if k1 != expected_k1 {
            return Err(Error::TheoremViolation {
                word: w.to_string(),
                detail: format!("a = {a_closed_form} predicts K1 = {expected_k1}, kernel gives {k1}"),
            });
        }
    }

    Ok(KGroupReport {
        word: w.clone(),
        a_closed_form,
        k0,
        k1,
        bf,
        irreducible,
        admissible,
    })
}

/// Outcome of every check run on one word by [`verify_word`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCheck {
    pub word: KneadingWord,
    pub a: u64,
    pub k0: AbelianGroup,
    pub irreducible: bool,
    /// Violations of the closed form, the kernel rule, the cokernel bridge
    /// or the structural identities.
    pub failures: Vec<String>,
}

impl WordCheck {
    /// `a = 0` implies a reducible transition matrix.
    pub fn zero_a_implies_reducible(&self) -> bool {
        self.a != 0 || !self.irreducible
    }

    pub fn theorem_holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.theorem_holds() && self.zero_a_implies_reducible()
    }
}

/// Runs the closed-form comparison, the kernel rank rule, the cokernel
/// bridge between `I - A` and `I - θ`, the Smith shape of `I - θ` and every
/// structural identity of the construction, and records whether `A` is
/// irreducible.
pub fn verify_word(w: &KneadingWord) -> Result<WordCheck> {
    let a = closed_form_a(w)?;
    let orbit = build_orbit(w)?;
    let mut failures = Vec::new();

    let covering = transition_matrix(&orbit);
    let matrices = match build_matrices(&orbit) {
        Ok(m) => m,
        Err(e) => {
            failures.push(format!("construction: {e}"));
            return Ok(WordCheck {
                word: w.clone(),
                a,
                k0: k0_group(&covering),
                irreducible: is_irreducible(&covering)?,
                failures,
            });
        }
    };
    let k0 = k0_group(&covering);

    let expected_k0 = AbelianGroup::cyclic(a);
    if k0 != expected_k0 {
        failures.push(format!("K0: closed form {expected_k0}, Smith form {k0}"));
    }
    let rank = kernel_rank(&covering.transpose().identity_minus());
    if rank != usize::from(a == 0) {
        failures.push(format!("K1: a = {a} but kernel rank {rank}"));
    }

    let from_a = cokernel(&covering.identity_minus());
    let from_theta = cokernel(&matrices.theta.identity_minus());
    if from_a != from_theta {
        failures.push(format!("bridge: Z^(n-1)/(I-A) = {from_a}, Z^n/(I-theta) = {from_theta}"));
    }
    if from_a != k0 {
        failures.push(format!("transpose: BF = {from_a}, K0 = {k0}"));
    }

    let mut diagonal = smith_normal_form(&matrices.theta.identity_minus()).diagonal();
    diagonal.sort();
    let mut expected = vec![BigInt::one(); w.len() - 1];
    expected.push(BigInt::from(a));
    expected.sort();
    if diagonal != expected {
        failures.push(format!("Smith diagonal of I-theta is {diagonal:?}, expected {expected:?}"));
    }

    if covering != matrices.a {
        failures.push("covering matrix differs from beta·alpha".to_string());
    }
    failures.extend(matrices.identity_failures().into_iter().map(String::from));

    Ok(WordCheck {
        word: w.clone(),
        a,
        k0,
        irreducible: is_irreducible(&covering)?,
        failures,
    })
}

/// Aggregate of [`verify_word`] over every admissible word of each length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    /// `(n, words checked)` for each length.
    pub counts: Vec<(usize, usize)>,
    /// Words with `a = 0`.
    pub zero_a: usize,
    /// Words failing a closed-form, bridge or identity check.
    pub failures: Vec<WordCheck>,
    /// Words with `a = 0` whose transition matrix is irreducible.
    pub irreducible_zero_a: Vec<WordCheck>,
}

impl SweepReport {
    pub fn total(&self) -> usize {
        self.counts.iter().map(|&(_, c)| c).sum()
    }

    pub fn theorem_holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.theorem_holds() && self.irreducible_zero_a.is_empty()
    }
}

pub fn verify_sweep(n_max: usize) -> Result<SweepReport> {
    let mut report = SweepReport {
        counts: Vec::new(),
        zero_a: 0,
        failures: Vec::new(),
        irreducible_zero_a: Vec::new(),
    };
    for n in 2..=n_max {
        let words = enumerate_admissible(n);
        report.counts.push((n, words.len()));
        for w in &words {
            let check = verify_word(w)?;
            report.zero_a += usize::from(check.a == 0);
            if !check.zero_a_implies_reducible() {
                report.irreducible_zero_a.push(check.clone());
            }
            if !check.theorem_holds() {
                report.failures.push(check);
            }
        }
    }
    Ok(report)
}
