//! Smith normal form against an independent oracle: the k-th invariant
//! factor is `Δ_k / Δ_{k-1}`, where `Δ_k` is the gcd of all k×k minors.

use kneading::{cokernel, kernel_rank, smith_normal_form, AbelianGroup, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Leibniz expansion along the first row; only for tiny matrices.
fn minor_det(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> BigInt {
    if rows.len() == 1 {
        return BigInt::from(m[rows[0]][cols[0]]);
    }
    let mut total = BigInt::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = m[rows[0]][c];
        if entry == 0 {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = minor_det(m, &rows[1..], &rest);
        let term = BigInt::from(entry) * sub;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m[0].len();
    let mut previous = BigInt::one();
    let mut factors = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for r in subsets(rows, k) {
            for c in subsets(cols, k) {
                g = g.gcd(&minor_det(m, &r, &c));
            }
        }
        if g.is_zero() {
            factors.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - k + 1));
            break;
        }
        factors.push(&g / &previous);
        previous = g;
    }
    factors
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
    })
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=max, 1usize..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
    })
}

/// Product of elementary operations; unimodular by construction.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, k, negate) in ops {
            let mut e = IntMatrix::identity(n);
            if i != j {
                e.set(i, j, k);
            } else if negate {
                e.set(i, i, -1);
            }
            m = &e * &m;
        }
        m
    })
}

#[test]
fn oracle_on_fixed_examples() {
    let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    assert_eq!(
        invariant_factors_by_minors(&m),
        vec![2, 6, 12].into_iter().map(BigInt::from).collect::<Vec<_>>()
    );
    // I - theta for RLLRRC
    let m = vec![
        vec![0, 1, 0, 0, 0, 0],
        vec![1, 1, -1, 0, 0, 0],
        vec![1, 0, 1, -1, 0, 0],
        vec![-1, 0, 0, 1, 1, 0],
        vec![-1, 0, 0, 0, 1, 1],
        vec![0, 0, 0, 0, 0, 1],
    ];
    let expected: Vec<BigInt> = [1, 1, 1, 1, 1, 2].into_iter().map(BigInt::from).collect();
    assert_eq!(invariant_factors_by_minors(&m), expected);
    assert_eq!(smith_normal_form(&IntMatrix::from_rows(&m)).diagonal(), expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn diagonal_matches_minor_gcds(m in small_matrix()) {
        let snf = smith_normal_form(&IntMatrix::from_rows(&m));
        prop_assert_eq!(snf.diagonal(), invariant_factors_by_minors(&m));
    }

    #[test]
    fn reconstruction_and_chain(m in matrix(8)) {
        let a = IntMatrix::from_rows(&m);
        let f = smith_normal_form(&a);
        prop_assert_eq!(&(&f.u * &a) * &f.v, f.d.clone());
        prop_assert!(f.u.is_unimodular() && f.v.is_unimodular());
        let d = f.diagonal();
        prop_assert!(d.iter().all(|x| !x.is_negative()));
        for pair in d.windows(2) {
            prop_assert!(pair[1].is_multiple_of(&pair[0]) || pair[0].is_zero() && pair[1].is_zero());
        }
        for i in 0..f.d.rows() {
            for j in 0..f.d.cols() {
                prop_assert!(i == j || f.d.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn cokernel_ignores_change_of_basis(
        (m, p, q) in (1usize..=6).prop_flat_map(|n| (
            prop::collection::vec(prop::collection::vec(-9i64..=9, n), n),
            unimodular(n),
            unimodular(n),
        ))
    ) {
        let a = IntMatrix::from_rows(&m);
        let moved = &(&p * &a) * &q;
        prop_assert_eq!(cokernel(&moved), cokernel(&a));
        prop_assert_eq!(kernel_rank(&moved), kernel_rank(&a));
    }

    #[test]
    fn determinant_is_product_of_diagonal(
        m in (1usize..=7).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
    ) {
        let a = IntMatrix::from_rows(&m);
        let product: BigInt = smith_normal_form(&a).diagonal().iter().product();
        prop_assert_eq!(a.determinant().abs(), product);
        let rows: Vec<usize> = (0..m.len()).collect();
        prop_assert_eq!(a.determinant(), minor_det(&m, &rows, &rows));
    }
}

#[test]
fn cokernel_of_zero_and_identity() {
    assert_eq!(cokernel(&IntMatrix::zeros(3, 3)), AbelianGroup::free(3));
    assert_eq!(cokernel(&IntMatrix::identity(3)), AbelianGroup::trivial());
}
