//! Markov partition of a superstable orbit and the matrices relating the
//! shift on orbit points to the transition matrix on partition intervals.
//!
//! Orbit points are `z_1 … z_n` with `z_i = σ^{i-1}(K)`, so `z_1 = f(c)` and
//! `z_n = c`. Sorted spatially they become `x_1 < … < x_n` and cut the
//! interval `[x_1, x_n]` into `I_k = [x_k, x_{k+1}]`.
//!
//! All matrices act on row vectors: row `k` of `eta` is the chain
//! `x_{k+1} - x_k` written in the basis of orbit points, and the
//! construction satisfies `A·η = η·θ`, `β·η = η·γ` and `α·η = η·ω`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlinalg::{from_rational, rational_inverse, rational_mul, IntMatrix};
use crate::symbolic::{is_admissible, mt_compare, KneadingWord, Symbol, SymbolSeq};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitModel {
    word: KneadingWord,
    points: Vec<SymbolSeq>,
    /// `order[k]` is the 0-based index of the orbit point at spatial position `k`.
    order: Vec<usize>,
    /// Inverse of `order`.
    position: Vec<usize>,
    n_left: usize,
    n_right: usize,
    admissible: bool,
}

impl OrbitModel {
    pub fn word(&self) -> &KneadingWord {
        &self.word
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    /// `z_1 … z_n`, stored 0-based.
    pub fn points(&self) -> &[SymbolSeq] {
        &self.points
    }

    /// The sorting permutation as 1-based indices: `x_k = z_{rho(k)}`.
    pub fn rho(&self) -> Vec<usize> {
        self.order.iter().map(|&i| i + 1).collect()
    }

    /// 0-based spatial order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 0-based spatial position of the 0-based orbit point `i`.
    pub fn position_of(&self, i: usize) -> usize {
        self.position[i]
    }

    /// Number of partition intervals left of the turning point.
    pub fn n_left(&self) -> usize {
        self.n_left
    }

    /// Number of partition intervals right of the turning point.
    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn is_admissible(&self) -> bool {
        self.admissible
    }
}

pub fn build_orbit(w: &KneadingWord) -> Result<OrbitModel> {
    let n = w.len();
    if n < 2 {
        return Err(Error::PeriodTooShort(n));
    }
    let depth = 2 * n;
    let k = w.sequence();
    let points: Vec<SymbolSeq> = (0..n).map(|i| k.shift(i)).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| mt_compare(&points[a], &points[b], depth).then(a.cmp(&b)));
    for pair in order.windows(2) {
        if mt_compare(&points[pair[0]], &points[pair[1]], depth) != Ordering::Less {
            return Err(Error::DegenerateOrder(pair[0] + 1, pair[1] + 1));
        }
    }
    let mut position = vec![0; n];
    for (k, &i) in order.iter().enumerate() {
        position[i] = k;
    }

    let head = &w.symbols()[..n - 1];
    let n_left = head.iter().filter(|&&s| s == Symbol::L).count();
    let n_right = head.iter().filter(|&&s| s == Symbol::R).count();
    if position[n - 1] != n_left {
        return Err(Error::Construction(format!(
            "turning point sits at position {} instead of {}",
            position[n - 1] + 1,
            n_left + 1
        )));
    }

    Ok(OrbitModel {
        word: w.clone(),
        points,
        order,
        position,
        n_left,
        n_right,
        admissible: is_admissible(w),
    })
}

/// Transition matrix of the partition built directly from interval images:
/// `a[k][j] = 1` iff the image of `I_k` covers `I_j`.
///
/// `f` sends orbit point `z_i` to `z_{i+1}` (and `z_n` to `z_1`), and is
/// monotone on each `I_k`, so the image of `I_k` is the interval spanned by
/// the images of its endpoints.
pub fn transition_matrix(m: &OrbitModel) -> IntMatrix {
    let n = m.period();
    let image_position = |k: usize| m.position[(m.order[k] + 1) % n];
    IntMatrix::from_fn(n - 1, n - 1, |k, j| {
        let (a, b) = (image_position(k), image_position(k + 1));
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        u8::from(lo <= j && j < hi)
    })
}

/// Every matrix of the construction for one kneading word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremMatrices {
    /// Shift on orbit points, `n×n`.
    pub omega: IntMatrix,
    /// Permutation taking orbit points to spatially ordered points, `n×n`.
    pub pi: IntMatrix,
    /// Incidence of ordered points on interval chains, `(n-1)×n`.
    pub phi: IntMatrix,
    /// `phi · pi`, `(n-1)×n`.
    pub eta: IntMatrix,
    /// Transition matrix `beta · alpha`, `(n-1)×(n-1)`.
    pub a: IntMatrix,
    /// Signed transition matrix, `(n-1)×(n-1)`.
    pub alpha: IntMatrix,
    /// Orientation of each interval: `+1` left of `c`, `-1` right of it.
    pub beta: IntMatrix,
    /// Orientation on orbit points, `n×n`.
    pub gamma: IntMatrix,
    /// `gamma · omega`, `n×n`.
    pub theta: IntMatrix,
    /// Unimodular factor of `eta^T`, `n×n`.
    pub y: IntMatrix,
    /// Inclusion of interval chains into point chains, `n×(n-1)`.
    pub inc: IntMatrix,
    /// `eta^T` without its last row, `(n-1)×(n-1)`.
    pub x: IntMatrix,
    /// `x · a^T · x^{-1}`.
    pub a_prime: IntMatrix,
    /// `y^{-1} · theta^T · y`.
    pub theta_prime: IntMatrix,
}

impl TheoremMatrices {
    /// Names accepted by [`TheoremMatrices::get`], in display order.
    pub const NAMES: [&'static str; 14] = [
        "A", "theta", "omega", "phi", "pi", "eta", "alpha", "beta", "gamma", "Y", "inc", "X",
        "Aprime", "thetaprime",
    ];

    pub fn get(&self, name: &str) -> Option<&IntMatrix> {
        Some(match name {
            "A" => &self.a,
            "theta" => &self.theta,
            "omega" => &self.omega,
            "phi" => &self.phi,
            "pi" => &self.pi,
            "eta" => &self.eta,
            "alpha" => &self.alpha,
            "beta" => &self.beta,
            "gamma" => &self.gamma,
            "Y" => &self.y,
            "inc" => &self.inc,
            "X" => &self.x,
            "Aprime" => &self.a_prime,
            "thetaprime" => &self.theta_prime,
            _ => return None,
        })
    }

    /// Names of the structural identities that fail. Empty for every
    /// admissible word.
    pub fn identity_failures(&self) -> Vec<&'static str> {
        let n = self.omega.rows();
        let mut failures = Vec::new();
        let mut check = |ok: bool, name: &'static str| {
            if !ok {
                failures.push(name);
            }
        };
        check(&self.a * &self.eta == &self.eta * &self.theta, "A·eta = eta·theta");
        check(&self.beta * &self.eta == &self.eta * &self.gamma, "beta·eta = eta·gamma");
        check(&self.alpha * &self.eta == &self.eta * &self.omega, "alpha·eta = eta·omega");
        check(self.theta == &self.gamma * &self.omega, "theta = gamma·omega");
        check(self.a == &self.beta * &self.alpha, "A = beta·alpha");
        check(
            self.eta.transpose() == &(&self.y * &self.inc) * &self.x,
            "eta^T = Y·inc·X",
        );
        check(self.y.is_unimodular(), "Y unimodular");
        check(self.x.is_unimodular(), "X unimodular");
        check(
            (0..n).all(|j| self.theta_prime.get(n - 1, j).is_zero()),
            "last row of thetaprime is zero",
        );
        check(
            self.theta_prime.block(0, 0, n - 1, n - 1) == self.a_prime,
            "top-left block of thetaprime is Aprime",
        );
        let p = IntMatrix::from_fn(1, n, |_, j| u8::from(j == n - 1));
        check(
            (&p * &self.theta_prime).is_zero(),
            "projection annihilates thetaprime",
        );
        check(
            self.a.is_zero_one() && !self.a.has_zero_row() && !self.a.has_zero_col(),
            "A is 0-1 with no zero row or column",
        );
        failures
    }
}

pub fn build_matrices(m: &OrbitModel) -> Result<TheoremMatrices> {
    let n = m.period();
    let w = m.word();
    let eps = |i: usize| i64::from(w.symbols()[i].value());

    let omega = IntMatrix::from_fn(n, n, |i, j| u8::from(j == (i + 1) % n));
    let pi = IntMatrix::from_fn(n, n, |k, j| u8::from(m.order[k] == j));
    let phi = IntMatrix::from_fn(n - 1, n, |k, j| {
        if j == k {
            -1
        } else if j == k + 1 {
            1
        } else {
            0
        }
    });
    let eta = &phi * &pi;

    // gamma[n][n] is given both as eps_n and as -eps_n; eps_n = 0 settles it.
    debug_assert_eq!(eps(n - 1), 0);
    let gamma = IntMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            if i == n - 1 {
                0
            } else {
                -eps(i)
            }
        } else if i == j {
            eps(i)
        } else {
            0
        }
    });
    let theta = &gamma * &omega;

    let beta = IntMatrix::from_fn(n - 1, n - 1, |i, j| match (i == j, i < m.n_left) {
        (false, _) => 0,
        (true, true) => 1,
        (true, false) => -1,
    });

    // alpha = eta·omega·eta^T·(eta·eta^T)^{-1}, over Q
    let eta_t = eta.transpose();
    let numerator = &(&eta * &omega) * &eta_t;
    let gram_inverse = rational_inverse(&(&eta * &eta_t).to_rational())
        .ok_or_else(|| Error::Construction("eta·eta^T is singular".into()))?;
    let alpha = from_rational(&rational_mul(&numerator.to_rational(), &gram_inverse))
        .ok_or_else(|| Error::Construction("alpha is not integral".into()))?;
    let a = &beta * &alpha;

    let y = IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            1
        } else if i == n - 1 {
            -1
        } else {
            0
        }
    });
    let inc = IntMatrix::from_fn(n, n - 1, |i, j| u8::from(i == j));
    let x = eta_t.select_rows(0..n - 1);
    if eta_t != &(&y * &inc) * &x {
        return Err(Error::Construction("eta^T does not factor as Y·inc·X".into()));
    }
    let x_inverse = x
        .integer_inverse()
        .ok_or_else(|| Error::Construction("X is not unimodular".into()))?;
    let y_inverse = y
        .integer_inverse()
        .ok_or_else(|| Error::Construction("Y is not unimodular".into()))?;
    let a_prime = &(&x * &a.transpose()) * &x_inverse;
    let theta_prime = &(&y_inverse * &theta.transpose()) * &y;

    Ok(TheoremMatrices {
        omega,
        pi,
        phi,
        eta,
        a,
        alpha,
        beta,
        gamma,
        theta,
        y,
        inc,
        x,
        a_prime,
        theta_prime,
    })
}

/// Column sums of a matrix, used to check that `eta^T` has zero column sums.
pub fn column_sums(m: &IntMatrix) -> Vec<BigInt> {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m.get(i, j)).sum())
        .collect()
}
