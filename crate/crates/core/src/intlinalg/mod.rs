//! Exact integer linear algebra: matrices over `Z`, Smith normal form,
//! cokernels, kernels and strong connectivity of 0-1 matrices.

mod group;
mod matrix;
mod snf;

pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

pub(crate) use matrix::{from_rational, rational_inverse, rational_mul};

use crate::error::{Error, Result};

/// `Z^rows / M · Z^cols`.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    AbelianGroup::from_smith_diagonal(&smith_normal_form(m).diagonal(), m.rows())
}

/// Rank of the integer null space `{x : M x = 0}`.
pub fn kernel_rank(m: &IntMatrix) -> usize {
    m.cols() - smith_normal_form(m).rank()
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.is_unimodular()
}

/// Strong connectivity of the digraph with an edge `i -> j` when `a[i][j] = 1`.
pub fn is_irreducible(a: &IntMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_zero_one() {
        return Err(Error::NotZeroOne);
    }
    let n = a.rows();
    if n == 0 {
        return Ok(true);
    }
    let edge = |i: usize, j: usize| !num_traits::Zero::is_zero(a.get(i, j));
    let forward = reachable(n, edge);
    let backward = reachable(n, |i, j| edge(j, i));
    Ok(forward.iter().all(|&x| x) && backward.iter().all(|&x| x))
}

fn reachable(n: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && edge(i, j) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen
}
